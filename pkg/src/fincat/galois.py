"""Adjunctions between finite posets: best approximations, adjoint search,
certificate checking, and the floor/ceiling inclusion worked end to end.

Everything is exact -- comparisons are order-table lookups, never tolerances.
An adjoint pair here is a Galois connection: monotone f : P -> Q and
g : Q -> P with ``x <= g(z)  iff  f(x) <= z`` for all x, z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import AdjunctionFails, InvalidPoset, NotMonotone, UnknownElement

Element = str


@dataclass(frozen=True)
class FinitePoset:
    """A finite carrier with a reflexive, transitive, antisymmetric relation.

    ``leq`` must contain every related pair explicitly, reflexive pairs
    included; :meth:`from_relation` closes an arbitrary sparse relation first.
    """

    elements: tuple[Element, ...]
    leq: frozenset[tuple[Element, Element]]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise InvalidPoset("duplicate elements")
        known = set(self.elements)
        for x, y in self.leq:
            if x not in known or y not in known:
                raise InvalidPoset(f"relation mentions unknown element in ({x!r}, {y!r})")
        for x in self.elements:
            if (x, x) not in self.leq:
                raise InvalidPoset(f"relation is not reflexive at {x!r}")
        for x, y in self.leq:
            for y2, z in self.leq:
                if y == y2 and (x, z) not in self.leq:
                    raise InvalidPoset(f"relation is not transitive: {x!r} <= {y!r} <= {z!r}")
        for x, y in self.leq:
            if x != y and (y, x) in self.leq:
                raise InvalidPoset(f"relation is not antisymmetric on {x!r}, {y!r}")

    @classmethod
    def from_relation(
        cls, elements: Iterable[Element], pairs: Iterable[tuple[Element, Element]]
    ) -> "FinitePoset":
        """Build a poset from a sparse relation: reflexive-transitive closure
        is applied, then antisymmetry is checked."""
        elems = tuple(elements)
        rel = {(x, x) for x in elems} | {tuple(p) for p in pairs}
        grown = True
        while grown:
            grown = False
            for x, y in tuple(rel):
                for y2, z in tuple(rel):
                    if y == y2 and (x, z) not in rel:
                        rel.add((x, z))
                        grown = True
        return cls(elems, frozenset(rel))

    @classmethod
    def chain(cls, elements: Iterable[Element]) -> "FinitePoset":
        """Total order in the given element order."""
        elems = tuple(elements)
        rel = {
            (elems[i], elems[j])
            for i in range(len(elems))
            for j in range(i, len(elems))
        }
        return cls(elems, frozenset(rel))

    @classmethod
    def antichain(cls, elements: Iterable[Element]) -> "FinitePoset":
        elems = tuple(elements)
        return cls(elems, frozenset((x, x) for x in elems))

    def le(self, x: Element, y: Element) -> bool:
        for e in (x, y):
            if e not in self._element_set:
                raise UnknownElement(f"unknown element {e!r}")
        return (x, y) in self.leq

    @property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    def least_of(self, subset: Iterable[Element]) -> Element | None:
        """The least element of ``subset`` within this order, if any."""
        items = [x for x in self.elements if x in set(subset)]
        for cand in items:
            if all(self.le(cand, other) for other in items):
                return cand
        return None

    def greatest_of(self, subset: Iterable[Element]) -> Element | None:
        items = [x for x in self.elements if x in set(subset)]
        for cand in items:
            if all(self.le(other, cand) for other in items):
                return cand
        return None

    def glb(self, x: Element, y: Element) -> Element | None:
        """Greatest lower bound of x and y, computed element by element."""
        lower = [z for z in self.elements if self.le(z, x) and self.le(z, y)]
        return self.greatest_of(lower)

    def lub(self, x: Element, y: Element) -> Element | None:
        upper = [z for z in self.elements if self.le(x, z) and self.le(y, z)]
        return self.least_of(upper)


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving total map between finite posets."""

    dom: FinitePoset
    cod: FinitePoset
    graph: Mapping[Element, Element]

    def __post_init__(self):
        for x in self.dom.elements:
            if x not in self.graph:
                raise UnknownElement(f"map is undefined on {x!r}")
            if self.graph[x] not in self.cod._element_set:
                raise UnknownElement(
                    f"map sends {x!r} to unknown element {self.graph[x]!r}"
                )
        for extra in set(self.graph) - set(self.dom.elements):
            raise UnknownElement(f"map is defined on unknown element {extra!r}")
        for x in self.dom.elements:
            for y in self.dom.elements:
                if self.dom.le(x, y) and not self.cod.le(self.graph[x], self.graph[y]):
                    raise NotMonotone(
                        f"{x!r} <= {y!r} but images {self.graph[x]!r}, "
                        f"{self.graph[y]!r} are not ordered",
                        witness=(x, y),
                    )

    def __call__(self, x: Element) -> Element:
        try:
            return self.graph[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    @classmethod
    def identity(cls, P: FinitePoset) -> "MonotoneMap":
        return cls(P, P, {x: x for x in P.elements})


def compose_maps(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """The composite "f then g"; requires f.cod == g.dom."""
    if f.cod != g.dom:
        raise ValueError("maps are not composable")
    return MonotoneMap(f.dom, g.cod, {x: g(f(x)) for x in f.dom.elements})


@dataclass(frozen=True)
class Approximation:
    """Approximants of one element, with the least one when it exists.

    ``status`` separates the two failure modes: "empty" (nothing above x at
    all) versus "no-least" (approximants exist but none is below the others).
    """

    element: Element
    approximants: tuple[Element, ...]
    best: Element | None
    status: str  # "found" | "empty" | "no-least"


def approximation_report(g: MonotoneMap, x: Element) -> Approximation:
    """All y in dom(g) with x <= g(y), and the least such y when it exists."""
    P = g.cod
    Q = g.dom
    if x not in P._element_set:
        raise UnknownElement(f"unknown element {x!r}")
    approximants = tuple(y for y in Q.elements if P.le(x, g(y)))
    if not approximants:
        return Approximation(x, approximants, None, "empty")
    least = Q.least_of(approximants)
    if least is None:
        return Approximation(x, approximants, None, "no-least")
    return Approximation(x, approximants, least, "found")


def best_approximation(g: MonotoneMap, x: Element) -> Element | None:
    """The least y with x <= g(y), or None (no approximants, or no least one)."""
    return approximation_report(g, x).best


def left_adjoint(g: MonotoneMap) -> MonotoneMap | None:
    """The map f with x <= g(z) iff f(x) <= z, if every x has a best approximant.

    Monotonicity of the result is re-verified by construction, never assumed.
    """
    graph = {}
    for x in g.cod.elements:
        best = best_approximation(g, x)
        if best is None:
            return None
        graph[x] = best
    return MonotoneMap(g.cod, g.dom, graph)


def right_adjoint(f: MonotoneMap) -> MonotoneMap | None:
    """The map g with f(x) <= z iff x <= g(z): g(z) is the greatest x with f(x) <= z."""
    graph = {}
    for z in f.cod.elements:
        below = [x for x in f.dom.elements if f.cod.le(f(x), z)]
        greatest = f.dom.greatest_of(below)
        if greatest is None:
            return None
        graph[z] = greatest
    return MonotoneMap(f.cod, f.dom, graph)


def adjunction_witness(f: MonotoneMap, g: MonotoneMap) -> tuple[Element, Element] | None:
    """First pair (x, z) violating ``x <= g(z) iff f(x) <= z``, or None."""
    P, Q = f.dom, f.cod
    if g.dom != Q or g.cod != P:
        raise ValueError("maps do not form a P -> Q / Q -> P pair")
    for x in P.elements:
        for z in Q.elements:
            if P.le(x, g(z)) != Q.le(f(x), z):
                return (x, z)
    return None


def unit_counit_violations(f: MonotoneMap, g: MonotoneMap) -> tuple[str, ...]:
    """Violated laws among: id <= g∘f, f∘g <= id, f∘g∘f = f, g∘f∘g = g.

    Function order is pointwise; each law is checked element by element and
    reported by name with its first failing element.
    """
    P, Q = f.dom, f.cod
    if g.dom != Q or g.cod != P:
        raise ValueError("maps do not form a P -> Q / Q -> P pair")
    failed: list[str] = []
    for x in P.elements:
        if not P.le(x, g(f(x))):
            failed.append(f"unit: {x!r} is not below g(f({x!r}))")
            break
    for z in Q.elements:
        if not Q.le(f(g(z)), z):
            failed.append(f"counit: f(g({z!r})) is not below {z!r}")
            break
    for x in P.elements:
        if f(g(f(x))) != f(x):
            failed.append(f"f∘g∘f = f fails at {x!r}")
            break
    for z in Q.elements:
        if g(f(g(z))) != g(z):
            failed.append(f"g∘f∘g = g fails at {z!r}")
            break
    return tuple(failed)


@dataclass(frozen=True)
class AdjunctionCertificate:
    """Record of a verified adjoint pair: f left adjoint, g right adjoint."""

    left: MonotoneMap
    right: MonotoneMap
    verified_on: int


def verify_adjunction(f: MonotoneMap, g: MonotoneMap) -> AdjunctionCertificate:
    """Check the adjunction equivalence on all pairs plus the derived laws.

    Raises AdjunctionFails with the first witnessing (x, z) pair.  The
    equivalence and the four derived laws must agree; a disagreement would
    be an implementation bug and raises RuntimeError.
    """
    witness = adjunction_witness(f, g)
    law_failures = unit_counit_violations(f, g)
    if witness is not None:
        if not law_failures:
            raise RuntimeError(
                "equivalence fails but the derived laws hold -- internal bug"
            )
        raise AdjunctionFails(
            f"x <= g(z) iff f(x) <= z fails at (x, z) = {witness!r}",
            witness=witness,
        )
    if law_failures:
        raise RuntimeError(
            f"equivalence holds but derived laws fail: {law_failures!r} -- internal bug"
        )
    return AdjunctionCertificate(
        left=f, right=g, verified_on=len(f.dom.elements) * len(f.cod.elements)
    )


@dataclass(frozen=True)
class FloorCeilingRow:
    point: str
    floor: str
    floor_expected: str
    ceiling: str
    ceiling_expected: str

    @property
    def ok(self) -> bool:
        return self.floor == self.floor_expected and self.ceiling == self.ceiling_expected


@dataclass(frozen=True)
class FloorCeilingReport:
    """Both adjoints of the integer-chain inclusion, checked pointwise."""

    k: int
    denominator: int
    rows: tuple[FloorCeilingRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def _fraction_label(q: Fraction) -> str:
    return str(q)


def integer_grid_inclusion(k: int, denominator: int) -> MonotoneMap:
    """Inclusion of the integer chain [-k, k] into the 1/denominator grid."""
    if k <= 0 or denominator <= 0:
        raise ValueError("k and denominator must be positive")
    grid_points = [
        Fraction(num, denominator) for num in range(-k * denominator, k * denominator + 1)
    ]
    grid = FinitePoset.chain([_fraction_label(q) for q in grid_points])
    ints = FinitePoset.chain([str(n) for n in range(-k, k + 1)])
    graph = {str(n): _fraction_label(Fraction(n)) for n in range(-k, k + 1)}
    return MonotoneMap(ints, grid, graph)


def floor_ceiling_demo(k: int, denominator: int) -> FloorCeilingReport:
    """Compute both adjoints of the inclusion and compare with arithmetic.

    The right adjoint must send each grid point to its floor, the left
    adjoint to its ceiling; the ranges end at integers, so approximants
    always exist and both adjoints are total.
    """
    inclusion = integer_grid_inclusion(k, denominator)
    floor_map = right_adjoint(inclusion)
    ceiling_map = left_adjoint(inclusion)
    if floor_map is None or ceiling_map is None:
        raise RuntimeError("inclusion on an integer-bounded grid must have both adjoints")
    verify_adjunction(ceiling_map, inclusion)
    verify_adjunction(inclusion, floor_map)
    rows = []
    for num in range(-k * denominator, k * denominator + 1):
        q = Fraction(num, denominator)
        label = _fraction_label(q)
        rows.append(
            FloorCeilingRow(
                point=label,
                floor=floor_map(label),
                floor_expected=str(math.floor(q)),
                ceiling=ceiling_map(label),
                ceiling_expected=str(math.ceil(q)),
            )
        )
    return FloorCeilingReport(k=k, denominator=denominator, rows=tuple(rows))
