"""One operator, two readings: necessity over Kripke frames and the weakest
precondition of a nondeterministic program.

[R]T collects the points whose R-successors all land in T.  It is the right
adjoint of the relational post-image, and that adjunction is checked over
every subset pair.
"""

from fincat import (
    FiniteRelation,
    KripkeFrame,
    NamedFiniteSet,
    SubsetOf,
    box,
    check_box_adjunction,
    eval_modal,
    parse_formula,
    relation_post_image,
)

states = NamedFiniteSet("states", ("1", "2", "3"))
program = FiniteRelation(
    states, states, frozenset({("1", "2"), ("2", "2"), ("3", "1"), ("3", "3")})
)
safe = SubsetOf.of(states, ["2"])

print("program steps:", sorted(program.pairs))
print("target predicate:", safe.sorted_members())
print("weakest precondition [R]T:", box(program, safe).sorted_members())
print("post-image of {3}:", relation_post_image(program, SubsetOf.of(states, ["3"])).sorted_members())

check = check_box_adjunction(program)
print(f"post -| [R] verified on {check.checked} subset pairs:", check.ok)
print()

# The same operator drives the usual possible-worlds semantics.
frame = KripkeFrame(
    states,
    program,
    {"p": SubsetOf.of(states, ["2"]), "q": SubsetOf.of(states, ["1", "3"])},
)
for text in ("box p", "dia p", "box (p | q)", "q -> box p"):
    value = eval_modal(frame, parse_formula(text))
    print(f"worlds satisfying {text!r}:", value.sorted_members())
