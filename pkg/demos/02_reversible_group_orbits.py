"""The reversible group: square symmetries, permutations, orbits, relabellings.

A single site carries the eight symmetries of the square.  N sites carry one
symmetry each plus a permutation of the parties, for 8, 128, 3072 elements at
N = 1, 2, 3.  The non-local bipartite vertices form a single orbit under
transformations of one site alone, which is the engine behind every cheat in
the commitment demos.
"""

from boxworld import (
    SingleSiteTransform,
    apply,
    bipartite_state,
    box_table_nonlocal,
    compose,
    enumerate_group,
    invert,
    locally_connected,
    maximally_mixed,
    orbit,
    relabel_table,
    site_transform,
    subgroup_on_sites,
)
from boxworld.transforms import Relabelling, SiteRelabelling

print("== Group sizes (deduplicated by full action) ==")
for n in (1, 2, 3):
    print(f"  {n} site(s): {len(enumerate_group(n))} elements")

print("\n== The orbit equation on the non-local vertices ==")
o16 = bipartite_state(16)
for k in range(4):
    up = site_transform(2, 1, SingleSiteTransform(k, 1))
    down = site_transform(2, 1, SingleSiteTransform(k, -1))
    up_hits = [i for i in range(16, 24) if apply(up, o16) == bipartite_state(i)]
    down_hits = [i for i in range(16, 24) if apply(down, o16) == bipartite_state(i)]
    print(f"  U{k}+ on site 1: Omega16 -> Omega{up_hits[0]};"
          f"   U{k}- : Omega16 -> Omega{down_hits[0]}")
print("so the site-1 orbit of Omega16 is the whole non-local family:")
members = orbit(o16, subgroup_on_sites(2, (1,)))
print("  orbit size:", len(members))

print("\n== Invariance of the maximally mixed state ==")
mu2 = maximally_mixed(2)
print("  orbit of mu x mu under all 128 elements:",
      len(orbit(mu2, enumerate_group(2))), "state")

print("\n== Composition and inversion close the group ==")
t1 = site_transform(2, 1, SingleSiteTransform(1, 1))
t2 = site_transform(2, 2, SingleSiteTransform(2, -1))
combo = compose(t1, t2)
print("  compose then apply equals apply then apply:",
      apply(combo, o16) == apply(t1, apply(t2, o16)))
print("  inverse undoes:", apply(invert(combo), apply(combo, o16)) == o16)

print("\n== Local connectivity searches ==")
print("Any two non-local vertices are joined by a one-site map:")
witness = locally_connected(bipartite_state(16), bipartite_state(20), (1,))
print("  16 -> 20 via", witness)
print("A non-local vertex is never locally connected to a product state:")
print("  16 -> 0 over both sites:",
      locally_connected(bipartite_state(16), bipartite_state(0), (1, 2)))

print("\n== Transformations seen as table relabellings ==")
p000 = box_table_nonlocal(0, 0, 0)
rewrite = Relabelling((SiteRelabelling(1, 1, 0), SiteRelabelling(0, 0, 0)))
moved = relabel_table(p000, rewrite)
which = [
    (a, b, g)
    for a in (0, 1) for b in (0, 1) for g in (0, 1)
    if moved == box_table_nonlocal(a, b, g)
]
print("flipping party 1's input and XORing its output by x maps p000 to"
      f" p{''.join(map(str, which[0]))}")
print("(the whole 8-table family is one relabelling orbit)")
