"""The reversible-transformation group of N sites and its actions.

A single site carries the eight symmetries of the square (four rotations,
four reflections); an N-site element is one symmetry per site composed with a
permutation of the parties.  All matrices are signed permutations of the
embedding coordinates, so group actions stay in exact integer arithmetic.

Semantics of `apply`: the permutation rearranges the parties first, then each
site matrix acts on its slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .dyadic import Dyadic, ZERO
from .errors import ShapeMismatchError, UnsupportedSystemError
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor

_COS = (1, 0, -1, 0)
_SIN = (0, 1, 0, -1)


@dataclass(frozen=True)
class SingleSiteTransform:
    """Symmetry of the square: rotation index k, orientation sign s."""

    k: int
    s: int  # +1 rotation branch, -1 reflection branch

    def __post_init__(self):
        if self.k not in range(4) or self.s not in (1, -1):
            raise ValueError(f"no such square symmetry: k={self.k}, s={self.s}")

    def matrix(self) -> Tuple[Tuple[int, int, int], ...]:
        c, sn = _COS[self.k], _SIN[self.k]
        return (
            (c, -self.s * sn, 0),
            (sn, self.s * c, 0),
            (0, 0, 1),
        )

    def column_map(self) -> Tuple[Tuple[int, int], ...]:
        """Per column j: the (row, sign) of its single nonzero entry."""
        m = self.matrix()
        out = []
        for j in range(3):
            for r in range(3):
                if m[r][j] != 0:
                    out.append((r, m[r][j]))
                    break
        return tuple(out)

    def __str__(self) -> str:
        return f"U{self.k}{'+' if self.s == 1 else '-'}"


IDENTITY_SITE = SingleSiteTransform(0, 1)

_ALL_SITES = tuple(
    SingleSiteTransform(k, s) for s in (1, -1) for k in range(4)
)
_SITE_BY_MATRIX: Dict[tuple, SingleSiteTransform] = {u.matrix(): u for u in _ALL_SITES}


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(3)) for c in range(3)) for r in range(3)
    )


def _mat_transpose(a):
    return tuple(tuple(a[c][r] for c in range(3)) for r in range(3))


def compose_sites(u1: SingleSiteTransform, u2: SingleSiteTransform) -> SingleSiteTransform:
    return _SITE_BY_MATRIX[_mat_mul(u1.matrix(), u2.matrix())]


def invert_site(u: SingleSiteTransform) -> SingleSiteTransform:
    # orthogonal matrices: the inverse is the transpose
    return _SITE_BY_MATRIX[_mat_transpose(u.matrix())]


@dataclass(frozen=True)
class ReversibleTransform:
    """Per-site square symmetries plus a permutation of the parties.

    perm is 0-based with reader semantics: after the permutation, slot m
    holds what party perm[m] held before.
    """

    sites: Tuple[SingleSiteTransform, ...]
    perm: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.sites)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm {self.perm} is not a permutation of 0..{n - 1}")

    @property
    def n_parties(self) -> int:
        return len(self.sites)

    def action(self) -> Tuple[Tuple[int, int], ...]:
        """Signed permutation on the 3^N basis: per flat index, (target, sign)."""
        n = self.n_parties
        colmaps = [u.column_map() for u in self.sites]
        out = []
        for j in itertools.product(range(3), repeat=n):
            # after the permutation, slot m holds digit j[perm[m]]; then the
            # site maps act slotwise
            target = 0
            sign = 1
            for m in range(n):
                r, sg = colmaps[m][j[self.perm[m]]]
                target = target * 3 + r
                sign *= sg
            out.append((target, sign))
        return tuple(out)

    def __str__(self) -> str:
        sites = " ".join(str(u) for u in self.sites)
        perm = "".join(str(p + 1) for p in self.perm)
        return f"[{sites} | perm {perm}]"


def identity_transform(n_parties: int) -> ReversibleTransform:
    return ReversibleTransform((IDENTITY_SITE,) * n_parties, tuple(range(n_parties)))


def site_transform(n_parties: int, site: int, u: SingleSiteTransform) -> ReversibleTransform:
    """u acting on one site (1-based), identity elsewhere."""
    sites = [IDENTITY_SITE] * n_parties
    sites[site - 1] = u
    return ReversibleTransform(tuple(sites), tuple(range(n_parties)))


def swap_transform() -> ReversibleTransform:
    return ReversibleTransform((IDENTITY_SITE, IDENTITY_SITE), (1, 0))


def apply(t: ReversibleTransform, s: GptTensor) -> GptTensor:
    if t.n_parties != s.n_parties:
        raise ShapeMismatchError(
            f"{t.n_parties}-party transform applied to {s.n_parties}-party tensor"
        )
    size = 3**s.n_parties
    out: List[Dyadic] = [ZERO] * size
    for flat, (target, sign) in enumerate(t.action()):
        v = s.entries[flat]
        if v != ZERO:
            out[target] = out[target] + (v if sign == 1 else -v)
    return GptTensor(s.n_parties, tuple(out), s.role)


def compose(t1: ReversibleTransform, t2: ReversibleTransform) -> ReversibleTransform:
    """apply(compose(t1, t2), s) == apply(t1, apply(t2, s))."""
    if t1.n_parties != t2.n_parties:
        raise ShapeMismatchError("composed transforms must share the party count")
    n = t1.n_parties
    # M1 P1 M2 P2 = (M1 . M2 pulled through P1) (P1 P2)
    sites = tuple(
        compose_sites(t1.sites[m], t2.sites[t1.perm[m]]) for m in range(n)
    )
    perm = tuple(t2.perm[t1.perm[m]] for m in range(n))
    return ReversibleTransform(sites, perm)


def _inv(perm: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(perm)
    for m, p in enumerate(perm):
        out[p] = m
    return tuple(out)


def invert(t: ReversibleTransform) -> ReversibleTransform:
    inv_perm = _inv(t.perm)
    sites = tuple(invert_site(t.sites[inv_perm[m]]) for m in range(t.n_parties))
    return ReversibleTransform(sites, inv_perm)


def _permutations_of(sites: Sequence[int], n: int) -> Iterator[Tuple[int, ...]]:
    """Permutations of 0..n-1 moving only the given (0-based) slots."""
    sites = sorted(sites)
    for images in itertools.permutations(sites):
        perm = list(range(n))
        for slot, img in zip(sites, images):
            perm[slot] = img
        yield tuple(perm)


def enumerate_group(n_parties: int, *, max_parties: int = 3,
                    deduplicate: bool = True) -> List[ReversibleTransform]:
    """Every distinct reversible transform, each exactly once.

    Sizes are 8, 128, 3072 for one, two, three parties.  The guard exists
    because the count grows as 8^N * N!; raise max_parties explicitly to go
    further.
    """
    if n_parties > max_parties:
        raise UnsupportedSystemError(
            f"group enumeration guarded at N <= {max_parties} (got {n_parties})"
        )
    elements = []
    seen = set()
    for perm in itertools.permutations(range(n_parties)):
        for sites in itertools.product(_ALL_SITES, repeat=n_parties):
            t = ReversibleTransform(sites, perm)
            if deduplicate:
                key = t.action()
                if key in seen:
                    continue
                seen.add(key)
            elements.append(t)
    return elements


def subgroup_on_sites(n_parties: int, sites: Iterable[int],
                      allow_permutations: bool = True) -> List[ReversibleTransform]:
    """Transforms supported on the given (1-based) sites, identity elsewhere."""
    zero_based = sorted(s - 1 for s in sites)
    if not all(0 <= s < n_parties for s in zero_based):
        raise ShapeMismatchError(f"sites {sorted(sites)} outside 1..{n_parties}")
    perms = (
        list(_permutations_of(zero_based, n_parties))
        if allow_permutations
        else [tuple(range(n_parties))]
    )
    out = []
    seen = set()
    for perm in perms:
        for combo in itertools.product(_ALL_SITES, repeat=len(zero_based)):
            site_list = [IDENTITY_SITE] * n_parties
            for slot, u in zip(zero_based, combo):
                site_list[slot] = u
            t = ReversibleTransform(tuple(site_list), perm)
            key = t.action()
            if key not in seen:
                seen.add(key)
                out.append(t)
    return out


def local_subgroup(n_parties: int) -> List[ReversibleTransform]:
    return subgroup_on_sites(n_parties, range(1, n_parties + 1), allow_permutations=False)


def orbit(s: GptTensor, elements: Iterable[ReversibleTransform]) -> set:
    return {apply(t, s) for t in elements}


def orbit_full(s: GptTensor) -> set:
    return orbit(s, enumerate_group(s.n_parties))


def locally_connected(s1: GptTensor, s2: GptTensor, sites: Iterable[int],
                      allow_permutations: bool = True) -> Optional[ReversibleTransform]:
    """A transform supported on `sites` carrying s1 to s2, or None.

    Exhaustive search.  With allow_permutations the search includes party
    exchanges among the given sites (the strong form of local equivalence);
    without it only per-site symmetries are tried.
    """
    if s1.n_parties != s2.n_parties:
        raise ShapeMismatchError("states on different party counts")
    for t in subgroup_on_sites(s1.n_parties, sites, allow_permutations):
        if apply(t, s1) == s2:
            return t
    return None


@dataclass(frozen=True)
class SiteRelabelling:
    """Input flip plus output map a -> a + coeff*x + offset (mod 2)."""

    flip_input: int
    out_coeff: int
    out_offset: int

    def __post_init__(self):
        for v in (self.flip_input, self.out_coeff, self.out_offset):
            if v not in (0, 1):
                raise ValueError("relabelling fields are bits")


@dataclass(frozen=True)
class Relabelling:
    sites: Tuple[SiteRelabelling, ...]

    @property
    def n_parties(self) -> int:
        return len(self.sites)


IDENTITY_RELABELLING_SITE = SiteRelabelling(0, 0, 0)


def all_site_relabellings() -> List[SiteRelabelling]:
    return [
        SiteRelabelling(i, c, d)
        for i in (0, 1)
        for c in (0, 1)
        for d in (0, 1)
    ]


def relabel_table(table: BoxTable, r: Relabelling) -> BoxTable:
    """Rewrite a box's inputs and outputs sitewise.

    The relabelled box, fed x at site k, behaves as the original fed
    x + flip, with the answer XORed by coeff*x + offset.
    """
    if r.n_parties != table.n_parties:
        raise ShapeMismatchError("relabelling arity differs from the table's")
    probs = {}
    for x in all_bitstrings(table.n_parties):
        old_x = tuple(xk ^ site.flip_input for xk, site in zip(x, r.sites))
        for a in all_bitstrings(table.n_parties):
            old_a = tuple(
                ak ^ (site.out_coeff * xk) ^ site.out_offset
                for ak, xk, site in zip(a, x, r.sites)
            )
            probs[(x, a)] = table.prob(old_x, old_a)
    return BoxTable(table.n_parties, probs)


def permute_table(table: BoxTable, perm: Sequence[int]) -> BoxTable:
    """Table of the party-permuted box, matching `apply`'s perm semantics."""
    q = _inv(tuple(perm))
    probs = {}
    for x in all_bitstrings(table.n_parties):
        for a in all_bitstrings(table.n_parties):
            px = tuple(x[p] for p in q)
            pa = tuple(a[p] for p in q)
            probs[(x, a)] = table.prob(px, pa)
    return BoxTable(table.n_parties, probs)


_RELABELLING_CACHE: Dict[tuple, SiteRelabelling] = {}


def relabelling_for_site_transform(u: SingleSiteTransform, conv=None) -> SiteRelabelling:
    """The table rewrite realized by a square symmetry under a convention.

    Found by matching the action on the four deterministic single-site
    tables; tables depend affinely on the state, so agreement there is
    agreement everywhere.
    """
    from . import catalog
    from .fiducial import DEFAULT_CONVENTION, state_to_table

    if conv is None:
        conv = DEFAULT_CONVENTION
    key = (u.k, u.s, conv.id)
    if key in _RELABELLING_CACHE:
        return _RELABELLING_CACHE[key]
    states = [catalog.pure_state(i) for i in range(4)]
    tables = [state_to_table(s, conv) for s in states]
    moved = [state_to_table(apply(site_transform(1, 1, u), s), conv) for s in states]
    for cand in all_site_relabellings():
        r = Relabelling((cand,))
        if all(relabel_table(t, r) == m for t, m in zip(tables, moved)):
            _RELABELLING_CACHE[key] = cand
            return cand
    raise AssertionError("every square symmetry corresponds to a relabelling")


def relabelling_for_transform(t: ReversibleTransform, conv=None) -> Tuple[Relabelling, Tuple[int, ...]]:
    """Sitewise relabelling plus party permutation matching `apply(t, .)`.

    state_to_table(apply(t, s)) == relabel_table(permute_table(table, t.perm),
    relabelling-after-permutation).
    """
    sites = tuple(
        relabelling_for_site_transform(t.sites[m], conv) for m in range(t.n_parties)
    )
    return Relabelling(sites), t.perm
