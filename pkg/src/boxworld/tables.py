"""Conditional probability tables P(a | x) for N parties with binary i/o."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .dyadic import Dyadic, ZERO, ONE, dy
from .errors import InvalidTableError, ShapeMismatchError

Bits = Tuple[int, ...]


def all_bitstrings(n: int):
    return itertools.product((0, 1), repeat=n)


@dataclass(frozen=True)
class BoxTable:
    """P(a|x) over x, a in {0,1}^N.  Entries are exact and non-negative.

    Positivity and per-input normalization are enforced at construction.
    No-signalling holds for every table this library produces but is
    deliberately not enforced here: hand-built signalling tables must remain
    representable so that the fiducial inversion can reject them explicitly.
    """

    n_parties: int
    probs: Mapping[Tuple[Bits, Bits], Dyadic]

    def __post_init__(self):
        n = self.n_parties
        if n < 1:
            raise InvalidTableError("a table needs at least one party")
        clean: Dict[Tuple[Bits, Bits], Dyadic] = {}
        for x in all_bitstrings(n):
            row_sum = ZERO
            for a in all_bitstrings(n):
                p = dy(self.probs.get((x, a), ZERO))
                if p < ZERO:
                    raise InvalidTableError(f"P({a}|{x}) = {p} < 0")
                clean[(x, a)] = p
                row_sum = row_sum + p
            if row_sum != ONE:
                raise InvalidTableError(f"outputs at input {x} sum to {row_sum}, not 1")
        object.__setattr__(self, "probs", clean)

    def prob(self, x: Bits, a: Bits) -> Dyadic:
        return self.probs[(tuple(x), tuple(a))]

    def support(self, x: Bits):
        return [a for a in all_bitstrings(self.n_parties) if self.prob(x, a) != ZERO]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoxTable):
            return NotImplemented
        return self.n_parties == other.n_parties and all(
            self.probs[k] == other.probs[k] for k in self.probs
        )

    def __hash__(self) -> int:
        items = sorted(self.probs.items(), key=lambda kv: kv[0])
        return hash((self.n_parties, tuple(items)))


def marginal_without(table: BoxTable, drop_party: int, x: Bits) -> Dict[Bits, Dyadic]:
    """Distribution of the other parties' outputs at joint input x."""
    dist: Dict[Bits, Dyadic] = {}
    for a in all_bitstrings(table.n_parties):
        key = tuple(b for i, b in enumerate(a, start=1) if i != drop_party)
        dist[key] = dist.get(key, ZERO) + table.prob(x, a)
    return dist


def is_no_signalling(table: BoxTable) -> bool:
    """Each party's input must not influence what the others can see."""
    n = table.n_parties
    for k in range(1, n + 1):
        others = [i for i in range(1, n + 1) if i != k]
        for rest in all_bitstrings(len(others)):
            dists = []
            for xk in (0, 1):
                x = [0] * n
                x[k - 1] = xk
                for pos, bit in zip(others, rest):
                    x[pos - 1] = bit
                dists.append(marginal_without(table, k, tuple(x)))
            if dists[0] != dists[1]:
                return False
    return True


def uniform_table(n_parties: int) -> BoxTable:
    p = dy(1)
    for _ in range(n_parties):
        p = p / 2
    probs = {(x, a): p for x in all_bitstrings(n_parties) for a in all_bitstrings(n_parties)}
    return BoxTable(n_parties, probs)


def chsh_value(table: BoxTable) -> Dyadic:
    """Sum over the four input pairs of Pr(a + b = x*y mod 2).

    Classical boxes reach at most 3, no-signalling boxes at most 4, and the
    uniformly random box scores 2.
    """
    if table.n_parties != 2:
        raise ShapeMismatchError("the CHSH sum is defined for two parties")
    return _chsh_form(table, 0, 0, 0)


def _chsh_form(table: BoxTable, alpha: int, beta: int, gamma: int) -> Dyadic:
    total = ZERO
    for x, y in all_bitstrings(2):
        target = (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma
        for a, b in all_bitstrings(2):
            if a ^ b == target:
                total = total + table.prob((x, y), (a, b))
    return total


def chsh_max_over_relabellings(table: BoxTable) -> Dyadic:
    """Largest CHSH sum over the eight sign conventions of the expression.

    Each non-local vertex saturates the algebraic maximum 4 on its own
    convention; the fixed-form sum in chsh_value distinguishes them.
    """
    if table.n_parties != 2:
        raise ShapeMismatchError("the CHSH sum is defined for two parties")
    return max(
        _chsh_form(table, a, b, g)
        for a in (0, 1) for b in (0, 1) for g in (0, 1)
    )
