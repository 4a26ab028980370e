"""The term-elimination transformation, level by level.

Each step removes the active term of highest degree and rewrites the
multipliers of the survivors; the exponent rows never change.  Iterating
shrinks the expression to a single term (or to nothing), which is what both
the root bounds and the identity test exploit.

Run:  python3 demos/02_term_elimination.py
"""

from sps import (
    SparsePoly,
    SpsExpression,
    TermSpec,
    check_transform_identity,
    elimination_sequence,
    expand_level,
    pivot_position,
    support_base_set,
)

f = SparsePoly({1: 1, 0: 1})  # X + 1
g = SparsePoly({2: 1, 0: -3})  # X^2 - 3

# three terms over two shared factors: f^4 + g^2 - 2 * f * g
expr = SpsExpression(
    factors=(f, g),
    terms=(
        TermSpec((4, 0)),
        TermSpec((0, 2)),
        TermSpec((1, 1), SparsePoly({0: -2})),
    ),
)
print("factors:", ", ".join(str(p) for p in expr.factors))
print("base exponent set S =", sorted(support_base_set(expr)))
print()

states = elimination_sequence(expr)
for state, nxt in zip(states, states[1:] + [None]):
    print(f"level {state.level}: {len(state.active_terms)} active term(s)")
    for term in state.active_terms:
        flag = " (pivot)" if term.original_index == state.pivot_original_index else ""
        print(f"  term {term.original_index}{flag}: alphas={term.alphas}  g = {term.g}")
    print(f"  expanded: {expand_level(state)}")
    if nxt is not None:
        ok = check_transform_identity(state, nxt, pivot_position(state))
        print(f"  defining identity of the step holds: {ok}")
    print()

print("multiplier sparsity per level:",
      [max((t.g.sparsity for t in s.active_terms), default=0) for s in states])
