"""Finite categories as explicit tables, plus the arrow-theoretic predicates.

Objects and arrows are identified by name strings; equality of arrows is
equality of names.  Composition is stored as a total table over composable
pairs, and ``compose(g, f)`` always reads "f then g".  Every decision
procedure here works by exhaustive enumeration of the relevant hom-sets,
guarded by an arrow-count budget so lazily enumerated categories cannot
blow up silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (
    EnumerationBudgetExceeded,
    MalformedTable,
    UnknownArrow,
    UnknownObject,
)

ObjectId = str
ArrowId = str

#: Default cap on the number of arrows any exhaustive search may enumerate.
DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Arrow:
    """A named arrow with its domain and codomain objects."""

    name: ArrowId
    dom: ObjectId
    cod: ObjectId


class CategoryView:
    """Enumerable interface onto a category.

    Concrete views expose ``objects`` (a tuple attribute or property) plus the
    methods below.  Hom-sets must enumerate in a fixed deterministic order:
    all witnesses reported by the predicates are the first ones in that order.
    """

    objects: tuple[ObjectId, ...]

    def hom(self, a: ObjectId, b: ObjectId) -> tuple[ArrowId, ...]:
        raise NotImplementedError

    def dom(self, f: ArrowId) -> ObjectId:
        raise NotImplementedError

    def cod(self, f: ArrowId) -> ObjectId:
        raise NotImplementedError

    def compose(self, g: ArrowId, f: ArrowId) -> ArrowId:
        """The composite "f then g"; requires cod(f) == dom(g)."""
        raise NotImplementedError

    def identity(self, a: ObjectId) -> ArrowId:
        raise NotImplementedError

    def all_arrows(self) -> Iterator[ArrowId]:
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def has_arrow(self, f: ArrowId) -> bool:
        try:
            self.dom(f)
        except UnknownArrow:
            return False
        return True


@dataclass(frozen=True)
class FiniteCategory(CategoryView):
    """A category given by explicit finite tables.

    ``identities`` maps each object to its identity arrow; ``composition``
    maps every composable pair ``(g, f)`` (meaning "f then g") to the name
    of the composite.  The constructor only requires names to be distinct;
    :func:`validate` checks everything else.
    """

    objects: tuple[ObjectId, ...]
    arrows: tuple[Arrow, ...]
    identities: Mapping[ObjectId, ArrowId]
    composition: Mapping[tuple[ArrowId, ArrowId], ArrowId]

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise MalformedTable("duplicate object names")
        by_name: dict[ArrowId, Arrow] = {}
        for arr in self.arrows:
            if arr.name in by_name:
                raise MalformedTable(f"duplicate arrow name {arr.name!r}")
            by_name[arr.name] = arr
        hom_index: dict[tuple[ObjectId, ObjectId], list[ArrowId]] = {}
        for arr in self.arrows:
            hom_index.setdefault((arr.dom, arr.cod), []).append(arr.name)
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(
            self, "_hom", {k: tuple(v) for k, v in hom_index.items()}
        )
        object.__setattr__(self, "_object_set", frozenset(self.objects))

    def arrow(self, f: ArrowId) -> Arrow:
        try:
            return self._by_name[f]
        except KeyError:
            raise UnknownArrow(f"unknown arrow {f!r}") from None

    def hom(self, a: ObjectId, b: ObjectId) -> tuple[ArrowId, ...]:
        for x in (a, b):
            if x not in self._object_set:
                raise UnknownObject(f"unknown object {x!r}")
        return self._hom.get((a, b), ())

    def dom(self, f: ArrowId) -> ObjectId:
        return self.arrow(f).dom

    def cod(self, f: ArrowId) -> ObjectId:
        return self.arrow(f).cod

    def compose(self, g: ArrowId, f: ArrowId) -> ArrowId:
        gf = self.arrow(g)
        ff = self.arrow(f)
        if ff.cod != gf.dom:
            raise ValueError(
                f"arrows not composable: {f!r} ends at {ff.cod!r}, {g!r} starts at {gf.dom!r}"
            )
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise MalformedTable(f"compose table has no entry for ({g!r}, {f!r})") from None

    def identity(self, a: ObjectId) -> ArrowId:
        if a not in self._object_set:
            raise UnknownObject(f"unknown object {a!r}")
        try:
            return self.identities[a]
        except KeyError:
            raise MalformedTable(f"identity table has no entry for {a!r}") from None

    def all_arrows(self) -> Iterator[ArrowId]:
        return iter(arr.name for arr in self.arrows)


@dataclass(frozen=True)
class Violation:
    """One broken law instance, with the arrows that witness it."""

    law: str
    witnesses: tuple[ArrowId, ...]
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a law check: ok iff the violation list is empty."""

    ok: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: list[Violation]) -> "AxiomReport":
        return cls(ok=not violations, violations=tuple(violations))


def _check_structure(C: FiniteCategory) -> None:
    """Raise MalformedTable on dangling ids or a partial/overfull compose table."""
    objects = frozenset(C.objects)
    names = frozenset(arr.name for arr in C.arrows)
    for arr in C.arrows:
        if arr.dom not in objects:
            raise MalformedTable(f"arrow {arr.name!r} has unknown domain {arr.dom!r}")
        if arr.cod not in objects:
            raise MalformedTable(f"arrow {arr.name!r} has unknown codomain {arr.cod!r}")
    for a in C.objects:
        if a not in C.identities:
            raise MalformedTable(f"identity table has no entry for object {a!r}")
        if C.identities[a] not in names:
            raise MalformedTable(
                f"identity of {a!r} is the unknown arrow {C.identities[a]!r}"
            )
    for extra in set(C.identities) - objects:
        raise MalformedTable(f"identity table mentions unknown object {extra!r}")
    for (g, f), h in C.composition.items():
        for name in (g, f, h):
            if name not in names:
                raise MalformedTable(f"compose table mentions unknown arrow {name!r}")
        if C.arrow(f).cod != C.arrow(g).dom:
            raise MalformedTable(
                f"compose table has an entry for the non-composable pair ({g!r}, {f!r})"
            )
    for f in C.arrows:
        for g in C.arrows:
            if f.cod == g.dom and (g.name, f.name) not in C.composition:
                raise MalformedTable(
                    f"compose table is partial: missing entry for ({g.name!r}, {f.name!r})"
                )


def validate(C: FiniteCategory) -> AxiomReport:
    """Check the category axioms exhaustively and report every violation.

    Structural problems (dangling ids, a partial compose table) raise
    :class:`MalformedTable`; law violations -- identity typing, composite
    typing, units, associativity -- are all collected into the report.
    """
    _check_structure(C)
    violations: list[Violation] = []

    for a in C.objects:
        ia = C.arrow(C.identities[a])
        if ia.dom != a or ia.cod != a:
            violations.append(
                Violation(
                    "identity-typing",
                    (ia.name,),
                    f"identity of {a!r} is typed {ia.dom!r}->{ia.cod!r}",
                )
            )

    comp = C.composition
    for f in C.arrows:
        for g in C.arrows:
            if f.cod != g.dom:
                continue
            h = C.arrow(comp[(g.name, f.name)])
            if h.dom != f.dom or h.cod != g.cod:
                violations.append(
                    Violation(
                        "composite-typing",
                        (g.name, f.name),
                        f"{g.name!r} after {f.name!r} is {h.name!r}, typed "
                        f"{h.dom!r}->{h.cod!r} instead of {f.dom!r}->{g.cod!r}",
                    )
                )

    for f in C.arrows:
        left = comp[(C.identities[f.cod], f.name)]
        if left != f.name:
            violations.append(
                Violation(
                    "left-unit",
                    (f.name,),
                    f"id after {f.name!r} is {left!r}",
                )
            )
        right = comp[(f.name, C.identities[f.dom])]
        if right != f.name:
            violations.append(
                Violation(
                    "right-unit",
                    (f.name,),
                    f"{f.name!r} after id is {right!r}",
                )
            )

    for f in C.arrows:
        for g in C.arrows:
            if f.cod != g.dom:
                continue
            gf = comp[(g.name, f.name)]
            for h in C.arrows:
                if g.cod != h.dom:
                    continue
                hg = comp[(h.name, g.name)]
                lhs = comp.get((h.name, gf))
                rhs = comp.get((hg, f.name))
                if lhs is None or rhs is None or lhs != rhs:
                    violations.append(
                        Violation(
                            "associativity",
                            (h.name, g.name, f.name),
                            f"h∘(g∘f) = {lhs!r} but (h∘g)∘f = {rhs!r}",
                        )
                    )
    return AxiomReport.from_violations(violations)


class _Budget:
    """Mutable arrow counter raising once the enumeration cap is passed."""

    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def charge(self, count: int) -> None:
        self.spent += count
        if self.spent > self.limit:
            raise EnumerationBudgetExceeded(
                f"enumeration needs more than {self.limit} arrows"
            )


def monic_counterexample(
    C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET
) -> tuple[ArrowId, ArrowId] | None:
    """First pair (g, h) with f∘g = f∘h but g ≠ h, or None if f is monic."""
    source = C.dom(f)
    meter = _Budget(budget)
    for z in C.objects:
        candidates = C.hom(z, source)
        meter.charge(len(candidates))
        first_with: dict[ArrowId, ArrowId] = {}
        for g in candidates:
            composite = C.compose(f, g)
            if composite in first_with:
                return (first_with[composite], g)
            first_with[composite] = g
    return None


def is_monic(C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff f is left-cancellable: f∘g = f∘h implies g = h, exhaustively."""
    return monic_counterexample(C, f, budget) is None


def epic_counterexample(
    C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET
) -> tuple[ArrowId, ArrowId] | None:
    """First pair (g, h) with g∘f = h∘f but g ≠ h, or None if f is epic."""
    target = C.cod(f)
    meter = _Budget(budget)
    for z in C.objects:
        candidates = C.hom(target, z)
        meter.charge(len(candidates))
        first_with: dict[ArrowId, ArrowId] = {}
        for g in candidates:
            composite = C.compose(g, f)
            if composite in first_with:
                return (first_with[composite], g)
            first_with[composite] = g
    return None


def is_epic(C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff f is right-cancellable: g∘f = h∘f implies g = h, exhaustively."""
    return epic_counterexample(C, f, budget) is None


def find_inverse(
    C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET
) -> ArrowId | None:
    """The two-sided inverse of f if one exists, else None.

    Searches hom(cod f, dom f) for g with g∘f and f∘g both identities.
    A lawful category admits at most one such g; finding two means the
    tables break the axioms, which is reported as MalformedTable.
    """
    a = C.dom(f)
    b = C.cod(f)
    id_a = C.identity(a)
    id_b = C.identity(b)
    candidates = C.hom(b, a)
    _Budget(budget).charge(len(candidates))
    matches = [
        g
        for g in candidates
        if C.compose(g, f) == id_a and C.compose(f, g) == id_b
    ]
    if len(matches) > 1:
        raise MalformedTable(
            f"arrow {f!r} has several two-sided inverses {matches!r}; "
            "the category laws must be broken"
        )
    return matches[0] if matches else None


def is_isomorphism(C: CategoryView, f: ArrowId, budget: int = DEFAULT_BUDGET) -> bool:
    return find_inverse(C, f, budget) is not None


def is_groupoid(C: FiniteCategory, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every arrow of C has a two-sided inverse."""
    return all(find_inverse(C, f, budget) is not None for f in C.all_arrows())


def materialize(view: CategoryView, budget: int = DEFAULT_BUDGET) -> FiniteCategory:
    """Write out a lazily enumerated view as explicit tables."""
    objs = tuple(view.objects)
    meter = _Budget(budget)
    arrows: list[Arrow] = []
    for a in objs:
        for b in objs:
            names = view.hom(a, b)
            meter.charge(len(names))
            arrows.extend(Arrow(n, a, b) for n in names)
    identities = {a: view.identity(a) for a in objs}
    composition: dict[tuple[ArrowId, ArrowId], ArrowId] = {}
    for f in arrows:
        for g in arrows:
            if f.cod == g.dom:
                composition[(g.name, f.name)] = view.compose(g.name, f.name)
    return FiniteCategory(objs, tuple(arrows), identities, composition)
