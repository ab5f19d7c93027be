"""Tour of the elementary system and the state/effect/box catalogs.

The elementary system ("squit") lives in R^3: its normalized states form a
square with four pure vertices, its effects a truncated cone with four
extremal points.  Composites carry 24 bipartite vertices, 16 of them
factorized and 8 carrying correlations stronger than any entangled state's.
"""

from boxworld import (
    bipartite_state,
    box_table_local,
    box_table_nonlocal,
    chsh_value,
    deterministic_effect,
    extremal_effect,
    is_valid_effect,
    is_valid_state,
    marginalize,
    maximally_mixed,
    pair,
    pure_state,
    tripartite_class_table,
    uniform_table,
)
from boxworld.tables import chsh_max_over_relabellings


def show(label, tensor):
    print(f"  {label:10s} = ({', '.join(str(v) for v in tensor.entries)})")


print("== The four pure states (vertices of the squit square) ==")
for i in range(4):
    show(f"omega{i}", pure_state(i))
print("and the maximally mixed state at the centre:")
show("mu", maximally_mixed(1))

print("\n== Extremal effects and the deterministic effect ==")
for i in range(4):
    show(f"b{i}", extremal_effect(i))
show("e", deterministic_effect(1))
print("b0 + b2 and b1 + b3 both recover e: each pair is a binary test.")

print("\n== Probabilities are exact pairings ==")
print("  <b0, omega0> =", pair(extremal_effect(0), pure_state(0)))
print("  <b0, omega2> =", pair(extremal_effect(0), pure_state(2)))
print("  <b0, mu>     =", pair(extremal_effect(0), maximally_mixed(1)))

print("\n== Bipartite vertices ==")
print("Omega0..15 are products; Omega16..23 are the non-local ones, e.g.")
o16 = bipartite_state(16)
for row in range(3):
    print("   ", [str(o16[(row, c)]) for c in range(3)])
print("Their single-site marginals are all maximally mixed:")
print("  marginal of Omega16 =", tuple(str(v) for v in marginalize(o16, {2}).entries))
print("Validity is a finite check against the factorized extremal effects:")
print("  Omega16 valid?", bool(is_valid_state(o16)))
print("  2*b0 a valid effect?", bool(is_valid_effect(extremal_effect(0))), "for b0,",
      "but scaling it out of the cone fails.")

print("\n== Box tables and the CHSH sum ==")
print("The correlated box with a+b = xy scores the algebraic maximum:")
print("  chsh(p000)     =", chsh_value(box_table_nonlocal(0, 0, 0)))
print("A deterministic local box tops out at 3:")
print("  chsh(l0000)    =", chsh_value(box_table_local(0, 0, 0, 0)))
print("And uniform noise sits at 2:")
print("  chsh(uniform)  =", chsh_value(uniform_table(2)))
print("Each of the eight non-local vertices saturates 4 on its own sign form:")
values = [
    str(chsh_max_over_relabellings(box_table_nonlocal(a, b, g)))
    for a in (0, 1) for b in (0, 1) for g in (0, 1)
]
print("  max-form values:", ", ".join(values))

print("\n== Tripartite classes ==")
t44 = tripartite_class_table(44)
print("Class 44 puts weight 1/4 on each parity-matching outcome triple:")
print("  support at (1,1,1):", t44.support((1, 1, 1)))
print("Its table passes every no-signalling check, like everything above.")
