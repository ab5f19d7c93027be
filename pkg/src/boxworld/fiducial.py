"""Fiducial conventions: the fixed map from (input, outcome) to effects.

A convention assigns one extremal effect to each of the four (x, a) pairs so
that each input's two effects form a binary test (they sum to the
deterministic effect) and the four effects together span R^3.  Under any such
assignment the tight-frame identity M^T M = I holds exactly, which makes the
table -> tensor inversion a plain transpose, still over dyadic rationals.

The default convention is
    x = 0: outcome 0 -> b0, outcome 1 -> b2
    x = 1: outcome 0 -> b3, outcome 1 -> b1
spelled "02:31".  Changing convention permutes which table each tensor
induces; every downstream claim in this library is stated so that it holds
for all eight valid conventions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .dyadic import ZERO, ONE
from .errors import InvalidConventionError, RoleMismatchError, SignallingTableError
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor, Role, pair, state, tensor_product
from . import catalog


@dataclass(frozen=True)
class FiducialConvention:
    """outcome_effect[(x, a)] = index of the single-site extremal effect."""

    outcome_effect: Tuple[Tuple[int, int], Tuple[int, int]]  # [x][a] -> 0..3

    def __post_init__(self):
        seen = set()
        for x in (0, 1):
            i0, i1 = self.outcome_effect[x]
            if not {i0, i1} <= {0, 1, 2, 3}:
                raise InvalidConventionError(f"effect indices for input {x} out of range")
            total = [
                catalog.extremal_effect(i0).entries[k] + catalog.extremal_effect(i1).entries[k]
                for k in range(3)
            ]
            if total != list(catalog.deterministic_effect(1).entries):
                raise InvalidConventionError(
                    f"effects b{i0}, b{i1} for input {x} do not form a test"
                )
            seen |= {i0, i1}
        if len(seen) != 4:
            raise InvalidConventionError("the four fiducial effects must span R^3")
        # tight-frame identity: sum of b b^T over the four rows is the identity
        for r in range(3):
            for c in range(3):
                acc = ZERO
                for x in (0, 1):
                    for a in (0, 1):
                        b = catalog.extremal_effect(self.outcome_effect[x][a]).entries
                        acc = acc + b[r] * b[c]
                if acc != (ONE if r == c else ZERO):
                    raise InvalidConventionError("fiducial frame is not tight")

    def effect(self, x: int, a: int) -> GptTensor:
        return catalog.extremal_effect(self.outcome_effect[x][a])

    def effect_index(self, x: int, a: int) -> int:
        return self.outcome_effect[x][a]

    @property
    def id(self) -> str:
        (a0, a1), (b0, b1) = self.outcome_effect
        return f"{a0}{a1}:{b0}{b1}"

    @classmethod
    def from_id(cls, text: str) -> "FiducialConvention":
        try:
            left, right = text.strip().split(":")
            pairs = ((int(left[0]), int(left[1])), (int(right[0]), int(right[1])))
        except (ValueError, IndexError) as exc:
            raise InvalidConventionError(f"cannot parse convention id {text!r}") from exc
        return cls(pairs)


DEFAULT_CONVENTION = FiducialConvention(((0, 2), (3, 1)))

# The convention implied by the two-term closed-form discriminator
# a = b^(3(1-x)) (x) b^(3(1-y)) + b^(1+x) (x) b^(1+y).
CLOSED_FORM_CONVENTION = FiducialConvention(((3, 1), (0, 2)))


def valid_conventions() -> List[FiducialConvention]:
    """All eight conventions: a test per input, jointly spanning."""
    tests = [(0, 2), (2, 0), (1, 3), (3, 1)]
    out = []
    for t0, t1 in itertools.product(tests, repeat=2):
        if set(t0) != set(t1):
            out.append(FiducialConvention((t0, t1)))
    return out


def state_to_table(st: GptTensor, conv: FiducialConvention = DEFAULT_CONVENTION) -> BoxTable:
    """The conditional probability table a state induces under the convention."""
    if st.role is not Role.STATE:
        raise RoleMismatchError("state_to_table takes a state")
    n = st.n_parties
    probs = {}
    for x in all_bitstrings(n):
        for a in all_bitstrings(n):
            eff = conv.effect(x[0], a[0])
            for k in range(1, n):
                eff = tensor_product(eff, conv.effect(x[k], a[k]))
            probs[(x, a)] = pair(eff, st)
    return BoxTable(n, probs)


def table_to_state(table: BoxTable, conv: FiducialConvention = DEFAULT_CONVENTION) -> GptTensor:
    """Invert the fiducial map: the unique tensor inducing the given table.

    The inversion applies the transposed fiducial frame site by site and then
    re-derives the table as a consistency check.  Signalling tables fail that
    check (their statistics are not reproducible by any tensor) and are
    rejected with SignallingTableError.
    """
    n = table.n_parties
    # frame rows indexed by f = 2x + a
    rows = [conv.effect(f // 2, f % 2).entries for f in range(4)]
    entries = []
    for idx in itertools.product(range(3), repeat=n):
        acc = ZERO
        for fs in itertools.product(range(4), repeat=n):
            coeff = ONE
            for site in range(n):
                coeff = coeff * rows[fs[site]][idx[site]]
                if coeff == ZERO:
                    break
            if coeff == ZERO:
                continue
            x = tuple(f // 2 for f in fs)
            a = tuple(f % 2 for f in fs)
            acc = acc + coeff * table.prob(x, a)
        entries.append(acc)
    st = state(entries, n)
    # re-derive every probability directly; a mismatch anywhere means the
    # table's statistics are not those of any tensor
    for x in all_bitstrings(n):
        for a in all_bitstrings(n):
            eff = conv.effect(x[0], a[0])
            for k in range(1, n):
                eff = tensor_product(eff, conv.effect(x[k], a[k]))
            if pair(eff, st) != table.prob(x, a):
                raise SignallingTableError(
                    "fiducial inversion inconsistent across inputs (signalling table)"
                )
    return st


def single_site_table_map(conv: FiducialConvention = DEFAULT_CONVENTION) -> Dict[int, Tuple[int, int]]:
    """Realized bijection pure-state index -> (alpha, beta) of its table."""
    out = {}
    for n in range(4):
        t = state_to_table(catalog.pure_state(n), conv)
        for alpha in (0, 1):
            for beta in (0, 1):
                if t == catalog.box_table_single(alpha, beta):
                    out[n] = (alpha, beta)
    return out


def nonlocal_table_map(conv: FiducialConvention = DEFAULT_CONVENTION) -> Dict[int, Tuple[int, int, int]]:
    """Realized bijection non-local vertex index -> (alpha, beta, gamma)."""
    out = {}
    nonlocal_tables = catalog.all_nonlocal_tables()
    for n in range(16, 24):
        t = state_to_table(catalog.bipartite_state(n), conv)
        for params, ref in nonlocal_tables.items():
            if t == ref:
                out[n] = params
    return out


def nonlocal_state_for_params(alpha: int, beta: int, gamma: int,
                              conv: FiducialConvention = DEFAULT_CONVENTION) -> int:
    """Catalog index of the vertex whose table is p_{alpha beta gamma}."""
    for n, params in nonlocal_table_map(conv).items():
        if params == (alpha, beta, gamma):
            return n
    raise SignallingTableError("no vertex matches; convention is not valid")  # unreachable


def tripartite_class_state(cls: int, conv: FiducialConvention = DEFAULT_CONVENTION) -> GptTensor:
    """Tensor reconstruction of a tripartite class representative."""
    return table_to_state(catalog.tripartite_class_table(cls), conv)
