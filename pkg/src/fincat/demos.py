"""Packaged end-to-end walkthroughs with fixed inputs and byte-stable output.

Each demo returns its report as a list of lines; the CLI prints them.  The
fixtures are chosen so every printed value is independently checkable by
hand.
"""

from __future__ import annotations

import itertools

from .builders import FiniteRelation, NamedFiniteSet
from .errors import UnknownDemo
from .firstorder import (
    AssignmentSet,
    FORelation,
    FOStructure,
    satisfies,
    tarski_denotation,
    verify_generalization_rule,
)
from .formulas import parse_formula
from .galois import floor_ceiling_demo
from .logic import (
    SubsetOf,
    box,
    check_box_adjunction,
    relation_post_image,
    subsets,
)


def demo_floor_ceiling(k: int = 5, denominator: int = 2) -> list[str]:
    report = floor_ceiling_demo(k, denominator)
    lines = [
        f"Integers [-{k}, {k}] included into the grid of multiples of 1/{denominator}.",
        "The right adjoint of the inclusion picks the greatest integer below a",
        "grid point; the left adjoint picks the least integer above it.",
        "",
        f"{'point':>6} | {'right adjoint':>13} | {'floor':>5} | {'left adjoint':>12} | {'ceil':>4}",
    ]
    for row in report.rows:
        lines.append(
            f"{row.point:>6} | {row.floor:>13} | {row.floor_expected:>5} | "
            f"{row.ceiling:>12} | {row.ceiling_expected:>4}"
        )
    lines.append("")
    lines.append(
        "agreement with arithmetic floor/ceiling on every grid point: "
        + ("exact" if report.ok else "BROKEN")
    )
    return lines


def demo_wp() -> list[str]:
    worlds = NamedFiniteSet("states", ("1", "2"))
    relation = FiniteRelation(worlds, worlds, frozenset({("1", "2"), ("2", "2")}))
    target = SubsetOf.of(worlds, ["2"])
    lines = [
        "States {1, 2}, transition relation {(1,2), (2,2)}, target predicate {2}.",
        "[R]T collects the states whose successors all land in the target:",
    ]
    for x in worlds.elements:
        successors = sorted(y for (a, y) in relation.pairs if a == x)
        inside = all(y in target.members for y in successors)
        lines.append(
            f"  state {x}: successors {{{','.join(successors)}}} "
            f"{'⊆' if inside else '⊄'} target"
        )
    result = box(relation, target)
    lines.append(f"[R]{{2}} = {{{','.join(result.sorted_members())}}}")
    lines.append("")
    lines.append("Its left adjoint is the post-image S ↦ { y | some x in S steps to y }:")
    for s in subsets(worlds):
        post = relation_post_image(relation, s)
        lines.append(
            f"  post({{{','.join(s.sorted_members())}}}) = "
            f"{{{','.join(post.sorted_members())}}}"
        )
    check = check_box_adjunction(relation)
    lines.append("")
    lines.append(
        f"post(S) ⊆ T  iff  S ⊆ [R]T checked on all {check.checked} subset pairs: "
        + ("pass" if check.ok else "FAIL")
    )
    return lines


def demo_quantifiers() -> list[str]:
    carrier = NamedFiniteSet("A", ("a", "b"))
    structure = FOStructure(carrier, {"E": FORelation(2, frozenset({("a", "b")}))})
    lines = [
        "Carrier {a, b} with one binary relation E = {(a,b)}.",
        "Quantifying E(v1,v2) over v2 must agree between the direct clause",
        "and the image adjoints of the projection that drops v2.",
        "",
    ]
    for text in ("E(v1,v2)", "exists v2. E(v1,v2)", "forall v2. E(v1,v2)"):
        formula = parse_formula(text)
        context = 2 if text == "E(v1,v2)" else 1
        denotation = tarski_denotation(structure, formula, context)
        pointwise = frozenset(
            s
            for s in itertools.product(carrier.elements, repeat=context)
            if satisfies(structure, formula, s)
        )
        agree = pointwise == denotation.tuples
        shown = ", ".join(
            "(" + ",".join(t) + ")" for t in denotation.sorted_tuples()
        )
        lines.append(
            f"  ⟦{text}⟧ in context {context} = {{{shown}}}"
            f"  (pointwise check: {'pass' if agree else 'FAIL'})"
        )
    lines.append("")
    empty = AssignmentSet(1, frozenset())
    rule = verify_generalization_rule(empty, parse_formula("E(v1,v2)"), structure)
    lines.append(
        "generalization rule on the empty assumption set: both sides "
        + ("hold" if rule else "fail together")
    )
    return lines


DEMOS = {
    "floor-ceiling": demo_floor_ceiling,
    "wp": demo_wp,
    "quantifiers": demo_quantifiers,
}


def run_demo(name: str) -> list[str]:
    try:
        demo = DEMOS[name]
    except KeyError:
        raise UnknownDemo(
            f"unknown demo {name!r}; available: {', '.join(sorted(DEMOS))}"
        ) from None
    return demo()
