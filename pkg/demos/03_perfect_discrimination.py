"""Telling any two pure states apart with certainty, constructively.

Strategy: find an input string where the two boxes' output parities differ,
measure there, and accept exactly the outcomes carrying the first box's
parity.  The resulting two-outcome measurement fires with probability one on
the first state and never on the second.
"""

from boxworld import (
    bipartite_state,
    discriminating_povm,
    find_separating_input,
    pair,
    tripartite_class_state,
    verify_perfect_discrimination,
)
from boxworld.catalog import box_table_nonlocal
from boxworld.discrimination import search_product_effect_sums

print("== A separating input for two non-local boxes ==")
p000 = box_table_nonlocal(0, 0, 0)
p001 = box_table_nonlocal(0, 0, 1)
x, parities = find_separating_input(p000, p001)
print(f"  at input {x} the parities are {parities[0]} vs {parities[1]}")

print("\n== The induced POVM ==")
s1, s2 = bipartite_state(16), bipartite_state(17)
povm = discriminating_povm(s1, s2)
print("  separating input:", povm.separating_input, " accepted parity:", povm.parity)
print("  product-effect terms (per-site extremal indices):", povm.terms)
print("  <a, Omega16> =", pair(povm.a, s1), "  <a, Omega17> =", pair(povm.a, s2))

print("\n== Completeness over the whole bipartite catalog ==")
states = [bipartite_state(i) for i in range(24)]
count = 0
for i in range(24):
    for j in range(i + 1, 24):
        p = discriminating_povm(states[i], states[j])
        assert verify_perfect_discrimination(p, states[i], states[j])
        count += 1
print(f"  all {count} unordered pairs perfectly discriminated")
print("(8 factorized pairs share their parity profile; those fall back to an")
print(" input with disjoint supports, i.e. factor-wise discrimination)")

print("\n== The tripartite class pair ==")
c44, c45 = tripartite_class_state(44), tripartite_class_state(45)
povm = discriminating_povm(c44, c45)
print("  four terms:", povm.terms)
print("  pairings:", pair(povm.a, c44), pair(povm.a, c45))

print("\n== Is the strategy the only one?  An exhaustive probe ==")
found = search_product_effect_sums(s1, s2)
print(f"  sums of distinct product effects that work for (16, 17): {len(found)}")
for combo in found[:6]:
    print("   ", combo)
print("  (empirical survey only; nothing beyond the listing is claimed)")
