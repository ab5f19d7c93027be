"""The finite catalogs of pure states, extremal effects, and box tables.

Single-site vectors, the 24 bipartite vertices, the three tripartite class
representatives, and the deterministic tables they induce.  All entries are
exact dyadic rationals.

Index convention for the eight non-local bipartite vertices: indices 16..23
are fixed so that the site-1 rotation U_k^+ maps vertex 16 to vertex 16+k and
the reflection U_k^- maps it to vertex 23-k.  Two of the printed source
matrices (19 and 23) are stored swapped relative to their display order; that
order contradicts the mapping rule above, which the rest of the catalog and
the orbit structure satisfy.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .dyadic import Dyadic, HALF, QUARTER, ONE, dy
from .errors import CatalogIndexError, InvalidTensorError
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor, state, effect, tensor_product

_H = HALF
_MH = -HALF

_PURE_STATES = (
    (1, 0, 1),
    (0, -1, 1),
    (-1, 0, 1),
    (0, 1, 1),
)

_EXTREMAL_EFFECTS = (
    (_H, _H, _H),
    (_MH, _H, _H),
    (_MH, _MH, _H),
    (_H, _MH, _H),
)

# Row-major 3x3 matrices for the non-local vertices, halved below.
_NONLOCAL_RAW = {
    16: (-1, 1, 0, 1, 1, 0, 0, 0, 2),
    17: (-1, -1, 0, -1, 1, 0, 0, 0, 2),
    18: (1, -1, 0, -1, -1, 0, 0, 0, 2),
    19: (1, 1, 0, 1, -1, 0, 0, 0, 2),
    20: (-1, -1, 0, 1, -1, 0, 0, 0, 2),
    21: (1, -1, 0, 1, 1, 0, 0, 0, 2),
    22: (1, 1, 0, -1, 1, 0, 0, 0, 2),
    23: (-1, 1, 0, -1, -1, 0, 0, 0, 2),
}


def pure_state(n: int) -> GptTensor:
    """One of the four single-site pure states (the squit square's vertices)."""
    if n not in range(4):
        raise CatalogIndexError(f"pure state index {n} not in 0..3")
    return state(_PURE_STATES[n])


def extremal_effect(i: int) -> GptTensor:
    """One of the four extremal single-site effects."""
    if i not in range(4):
        raise CatalogIndexError(f"extremal effect index {i} not in 0..3")
    return effect(_EXTREMAL_EFFECTS[i])


def deterministic_effect(n_parties: int) -> GptTensor:
    """Tensor power of (0,0,1): pairs to 1 with every normalized state."""
    if n_parties < 1:
        raise InvalidTensorError("need at least one party")
    e = effect((0, 0, 1))
    out = e
    for _ in range(n_parties - 1):
        out = tensor_product(out, e)
    return out


def maximally_mixed(n_parties: int) -> GptTensor:
    """Tensor power of (0,0,1) as a state: invariant under every reversible map."""
    if n_parties < 1:
        raise InvalidTensorError("need at least one party")
    mu = state((0, 0, 1))
    out = mu
    for _ in range(n_parties - 1):
        out = tensor_product(out, mu)
    return out


def bipartite_state(n: int) -> GptTensor:
    """One of the 24 vertices of the bipartite state polytope.

    0..15 are the factorized products; 16..23 the non-local vertices.
    """
    if n in range(16):
        return tensor_product(pure_state(n // 4), pure_state(n % 4))
    if n in range(16, 24):
        return state(tuple(dy(v) / 2 for v in _NONLOCAL_RAW[n]))
    raise CatalogIndexError(f"bipartite state index {n} not in 0..23")


def box_table_local(alpha: int, beta: int, gamma: int, delta: int) -> BoxTable:
    """Deterministic bipartite table with a = alpha*x + beta, b = gamma*y + delta."""
    probs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Dyadic] = {}
    for x, y in all_bitstrings(2):
        a = (alpha * x) ^ beta
        b = (gamma * y) ^ delta
        probs[((x, y), (a, b))] = ONE
    return BoxTable(2, probs)


def box_table_nonlocal(alpha: int, beta: int, gamma: int) -> BoxTable:
    """Non-local bipartite table: P = 1/2 iff a + b = xy + alpha*x + beta*y + gamma."""
    probs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Dyadic] = {}
    for x, y in all_bitstrings(2):
        parity = (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma
        for a, b in all_bitstrings(2):
            if a ^ b == parity:
                probs[((x, y), (a, b))] = _H
    return BoxTable(2, probs)


def box_table_single(alpha: int, beta: int) -> BoxTable:
    """Single-site deterministic table a = alpha*x + beta."""
    probs = {((x,), ((alpha * x) ^ beta,)): ONE for x in (0, 1)}
    return BoxTable(1, probs)


TRIPARTITE_PARITY_RULES = {
    44: lambda x, y, z: x * y * z,
    45: lambda x, y, z: (x * y) ^ (x * z),
    46: lambda x, y, z: (x * y) ^ (x * z) ^ (y * z),
}


def tripartite_class_table(cls: int) -> BoxTable:
    """Representative of one of the three implemented non-local tripartite classes."""
    if cls not in TRIPARTITE_PARITY_RULES:
        raise CatalogIndexError(f"tripartite class {cls} not in {{44, 45, 46}}")
    rule = TRIPARTITE_PARITY_RULES[cls]
    probs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Dyadic] = {}
    for x in all_bitstrings(3):
        parity = rule(*x)
        for a in all_bitstrings(3):
            if (a[0] ^ a[1] ^ a[2]) == parity:
                probs[(x, a)] = QUARTER
    return BoxTable(3, probs)


def all_single_states():
    return [pure_state(i) for i in range(4)]


def all_bipartite_states():
    return [bipartite_state(i) for i in range(24)]


def nonlocal_bipartite_states():
    return [bipartite_state(i) for i in range(16, 24)]


def all_nonlocal_tables():
    return {(a, b, g): box_table_nonlocal(a, b, g)
            for a in (0, 1) for b in (0, 1) for g in (0, 1)}


def all_local_tables():
    return {(a, b, g, d): box_table_local(a, b, g, d)
            for a in (0, 1) for b in (0, 1) for g in (0, 1) for d in (0, 1)}
