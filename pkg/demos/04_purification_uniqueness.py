"""Purification: who has one, and when it stops being unique.

Restricted to bipartite correlations, exactly one internal single-site state
admits a purification (the maximally mixed state), and all its purifications
are related by a reversible map on the purifying site.  Allowing tripartite
correlations breaks the uniqueness: a padded non-local vertex and a
tripartite class representative purify the same state yet no transform on
the purifying sites connects them.
"""

from boxworld import (
    find_purifications,
    is_internal_single,
    marginalize,
    maximally_mixed,
    bipartite_state,
    pure_state,
    tripartite_uniqueness_counterexample,
)

mu = maximally_mixed(1)

print("== Which vertices purify the maximally mixed state? ==")
report = find_purifications(mu, "bipartite24")
print("  purifications:", ", ".join(e.label for e in report.purifications))
print("  unique up to a transform on the purifying site:", report.unique_up_to_local)
print("  connecting witnesses:",
      "; ".join(f"{i}->{j} via {t}" for i, j, t in report.witnesses[:3]), "...")

print("\n== Internality is what makes that interesting ==")
print("  mu internal?", is_internal_single(mu))
print("  omega0 internal?", is_internal_single(pure_state(0)))
print("Marginals of product vertices are pure (never internal), e.g.")
print("  marginal of Omega3:",
      tuple(str(v) for v in marginalize(bipartite_state(3), {2}).entries))

print("\n== A pure target for contrast ==")
report = find_purifications(pure_state(0), "bipartite24")
print("  purifications of omega0:", ", ".join(e.label for e in report.purifications))

print("\n== Tripartite counterexample: uniqueness is lost ==")
ce = tripartite_uniqueness_counterexample()
labels = [e.label for e in ce.purifications]
print(f"  {labels[0]} and {labels[1]} both purify mu on site 1:")
psi1, psi2 = (e.state for e in ce.purifications)
print("    marginals:", marginalize(psi1, {2, 3}) == mu, marginalize(psi2, {2, 3}) == mu)
print("  connected by any of the 128 transforms on sites {2,3}?",
      ce.unique_up_to_local)

print("\n== The widened scan ==")
report = find_purifications(mu, "bipartite24_plus_tripartite")
print(f"  {len(report.purifications)} three-site purifications found; "
      f"unique up to local maps: {report.unique_up_to_local}")
i, j = report.failing_pair
print("  first unconnected pair:",
      report.purifications[i].label, "vs", report.purifications[j].label)
