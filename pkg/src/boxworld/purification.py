"""Purification scans, internality, and the uniqueness theorem at desk scale.

"Pure" means membership in the explicit extremal catalogs (4 single-site
states, 24 bipartite vertices, the three tripartite class representatives);
vertex enumeration beyond that is out of scope, and every claim here
quantifies over these catalogs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .dyadic import ONE
from .errors import ShapeMismatchError, UnsupportedSystemError
from .tensors import GptTensor, marginalize, tensor_product
from .transforms import ReversibleTransform, locally_connected
from .fiducial import DEFAULT_CONVENTION, FiducialConvention, tripartite_class_state
from . import catalog


def is_purification(candidate: GptTensor, target: GptTensor, kept: Sequence[int]) -> bool:
    """Does the candidate marginalize exactly to the target on the kept sites?"""
    kept = set(kept)
    if not kept or not kept <= set(range(1, candidate.n_parties + 1)):
        raise ShapeMismatchError(f"kept sites {sorted(kept)} outside 1..{candidate.n_parties}")
    if len(kept) != target.n_parties:
        raise ShapeMismatchError("kept-site count differs from the target's parties")
    discard = set(range(1, candidate.n_parties + 1)) - kept
    return marginalize(candidate, discard) == target


def is_internal_single(s: GptTensor) -> bool:
    """Strict interior of the square of normalized single-site states."""
    if s.n_parties != 1:
        raise UnsupportedSystemError("internality is implemented for single sites only")
    x, y, z = s.entries
    if z != ONE:
        return False
    return abs_lt_one(x, y)


def abs_lt_one(x, y) -> bool:
    ax = x if x >= 0 else -x
    ay = y if y >= 0 else -y
    return (ax + ay) < ONE


@dataclass(frozen=True)
class PurificationEntry:
    label: str
    state: GptTensor
    kept: Tuple[int, ...]


@dataclass(frozen=True)
class PurificationReport:
    target: GptTensor
    target_internal: Optional[bool]
    purifications: Tuple[PurificationEntry, ...]
    unique_up_to_local: bool
    # (i, j, transform) triples proving connectivity, or the first failing pair
    witnesses: Tuple[Tuple[int, int, ReversibleTransform], ...]
    failing_pair: Optional[Tuple[int, int]] = None


def _bipartite_candidates() -> List[PurificationEntry]:
    return [
        PurificationEntry(f"Omega{i}", catalog.bipartite_state(i), (1,))
        for i in range(24)
    ]


def _tripartite_candidates(conv: FiducialConvention) -> List[PurificationEntry]:
    out = []
    for i in range(24):
        for m in range(4):
            st = tensor_product(catalog.bipartite_state(i), catalog.pure_state(m))
            out.append(PurificationEntry(f"Omega{i}(x)omega{m}", st, (1,)))
            st = tensor_product(catalog.pure_state(m), catalog.bipartite_state(i))
            out.append(PurificationEntry(f"omega{m}(x)Omega{i}", st, (1,)))
    for cls in (44, 45, 46):
        out.append(PurificationEntry(f"class{cls}", tripartite_class_state(cls, conv), (1,)))
    return out


def find_purifications(target: GptTensor, catalog_name: str = "bipartite24",
                       conv: FiducialConvention = DEFAULT_CONVENTION) -> PurificationReport:
    """Scan a pure-state catalog for states whose kept-site marginal is the target.

    catalog_name "bipartite24" scans the 24 bipartite vertices keeping site 1.
    "bipartite24_plus_tripartite" scans three-site states: the bipartite
    vertices padded by a pure third site, plus the tripartite class
    representatives.  Uniqueness is then decided by exhaustive search for
    transforms supported on the purifying sites.
    """
    if target.n_parties != 1:
        raise UnsupportedSystemError("purification scans take a single-site target")
    if catalog_name == "bipartite24":
        candidates = _bipartite_candidates()
    elif catalog_name == "bipartite24_plus_tripartite":
        candidates = _tripartite_candidates(conv)
    else:
        raise ValueError(f"unknown catalog {catalog_name!r}")
    found = [c for c in candidates if is_purification(c.state, target, c.kept)]
    try:
        internal = is_internal_single(target)
    except UnsupportedSystemError:
        internal = None
    witnesses = []
    failing = None
    unique = True
    for j in range(1, len(found)):
        base, other = found[0], found[j]
        purifying = [
            k for k in range(1, base.state.n_parties + 1) if k not in base.kept
        ]
        t = locally_connected(base.state, other.state, purifying)
        if t is None:
            unique = False
            failing = (0, j)
            break
        witnesses.append((0, j, t))
    return PurificationReport(
        target=target,
        target_internal=internal,
        purifications=tuple(found),
        unique_up_to_local=unique,
        witnesses=tuple(witnesses),
        failing_pair=failing,
    )


def tripartite_uniqueness_counterexample(conv: FiducialConvention = DEFAULT_CONVENTION) -> PurificationReport:
    """Two purifications of the single-site maximally mixed state that no
    transform on the purifying sites connects."""
    mu = catalog.maximally_mixed(1)
    psi1 = PurificationEntry(
        "Omega16(x)omega0",
        tensor_product(catalog.bipartite_state(16), catalog.pure_state(0)),
        (1,),
    )
    psi2 = PurificationEntry("class44", tripartite_class_state(44, conv), (1,))
    assert is_purification(psi1.state, mu, (1,))
    assert is_purification(psi2.state, mu, (1,))
    assert psi1.state != psi2.state
    t = locally_connected(psi1.state, psi2.state, (2, 3))
    return PurificationReport(
        target=mu,
        target_internal=True,
        purifications=(psi1, psi2),
        unique_up_to_local=t is not None,
        witnesses=() if t is None else ((0, 1, t),),
        failing_pair=(0, 1) if t is None else None,
    )
