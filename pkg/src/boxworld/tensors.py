"""Order-N tensors over R^(3^N) carrying a state or effect role.

Entries are stored dense and row-major over the local index {0,1,2}; at the
N <= 3 scale of this library that is at most 27 dyadic rationals.  States are
normalized at construction (pairing with the deterministic effect equals 1),
and the all-zero tensor is rejected for both roles.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .dyadic import Dyadic, ZERO, ONE, dy
from .errors import (
    DiscardsAllPartiesError,
    InvalidTensorError,
    NotNormalizedError,
    RoleMismatchError,
    ShapeMismatchError,
    UnsupportedSystemError,
)


class Role(enum.Enum):
    STATE = "state"
    EFFECT = "effect"


@dataclass(frozen=True)
class GptTensor:
    n_parties: int
    entries: tuple
    role: Role

    def __post_init__(self):
        if self.n_parties < 1:
            raise InvalidTensorError("a tensor needs at least one party")
        expected = 3 ** self.n_parties
        entries = tuple(dy(v) for v in self.entries)
        if len(entries) != expected:
            raise InvalidTensorError(
                f"{self.n_parties}-party tensor needs {expected} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)
        if all(v == ZERO for v in entries):
            raise InvalidTensorError("the zero tensor is not a state or an effect")
        if self.role is Role.STATE:
            # pairing with e^(tensor N) is the sum of entries with all indices = 2
            total = ZERO
            for idx in itertools.product((2,), repeat=self.n_parties):
                total = total + self[idx]
            if total != ONE:
                raise NotNormalizedError(f"state normalization is {total}, not 1")

    def __getitem__(self, multi_index: Sequence[int]) -> Dyadic:
        flat = 0
        for i in multi_index:
            flat = flat * 3 + i
        return self.entries[flat]

    def indices(self):
        return itertools.product(range(3), repeat=self.n_parties)


def state(entries: Iterable, n_parties: Optional[int] = None) -> GptTensor:
    entries = tuple(entries)
    n = n_parties if n_parties is not None else _infer_parties(len(entries))
    return GptTensor(n, entries, Role.STATE)


def effect(entries: Iterable, n_parties: Optional[int] = None) -> GptTensor:
    entries = tuple(entries)
    n = n_parties if n_parties is not None else _infer_parties(len(entries))
    return GptTensor(n, entries, Role.EFFECT)


def _infer_parties(length: int) -> int:
    n = 1
    while 3**n < length:
        n += 1
    return n


def pair(eff: GptTensor, st: GptTensor) -> Dyadic:
    """Full contraction <effect, state>: the probability functional."""
    if eff.role is not Role.EFFECT or st.role is not Role.STATE:
        raise RoleMismatchError("pair takes (effect, state)")
    if eff.n_parties != st.n_parties:
        raise ShapeMismatchError(
            f"effect on {eff.n_parties} parties paired with state on {st.n_parties}"
        )
    total = ZERO
    for a, b in zip(eff.entries, st.entries):
        total = total + a * b
    return total


def tensor_product(t1: GptTensor, t2: GptTensor) -> GptTensor:
    if t1.role is not t2.role:
        raise RoleMismatchError("tensor product requires matching roles")
    n = t1.n_parties + t2.n_parties
    entries = [None] * 3**n
    size2 = 3 ** t2.n_parties
    for i, a in enumerate(t1.entries):
        base = i * size2
        for j, b in enumerate(t2.entries):
            entries[base + j] = a * b
    return GptTensor(n, tuple(entries), t1.role)


def marginalize(st: GptTensor, discard: Iterable[int]) -> GptTensor:
    """Contract the deterministic effect onto each discarded site.

    Sites are 1-based.  Discarding nothing returns the state unchanged;
    discarding everything is signalled distinctly since the result would be
    a scalar, not a state.
    """
    discard = set(discard)
    if not discard:
        return st
    if not discard <= set(range(1, st.n_parties + 1)):
        raise ShapeMismatchError(f"discard set {sorted(discard)} outside 1..{st.n_parties}")
    if len(discard) == st.n_parties:
        raise DiscardsAllPartiesError("discarding every party leaves a scalar")
    kept = [k for k in range(1, st.n_parties + 1) if k not in discard]
    n_out = len(kept)
    out = [ZERO] * 3**n_out
    for idx in st.indices():
        # the deterministic effect (0,0,1) picks index 2 on each discarded site
        if any(idx[k - 1] != 2 for k in discard):
            continue
        flat = 0
        for k in kept:
            flat = flat * 3 + idx[k - 1]
        out[flat] = out[flat] + st[idx]
    return GptTensor(n_out, tuple(out), Role.STATE)


def affine_combination(weighted: Sequence[tuple]) -> GptTensor:
    """Combine states with exact dyadic weights summing to 1."""
    weights = [dy(w) for w, _ in weighted]
    states = [s for _, s in weighted]
    if not states:
        raise InvalidTensorError("empty combination")
    total = ZERO
    for w in weights:
        total = total + w
    if total != ONE:
        raise NotNormalizedError(f"weights sum to {total}, not 1")
    n = states[0].n_parties
    for s in states:
        if s.role is not Role.STATE:
            raise RoleMismatchError("affine combinations are defined on states")
        if s.n_parties != n:
            raise ShapeMismatchError("mixed party counts in combination")
    entries = [ZERO] * 3**n
    for w, s in zip(weights, states):
        for i, v in enumerate(s.entries):
            entries[i] = entries[i] + w * v
    return GptTensor(n, tuple(entries), Role.STATE)


def add_effects(*effects: GptTensor) -> GptTensor:
    n = effects[0].n_parties
    for e in effects:
        if e.role is not Role.EFFECT:
            raise RoleMismatchError("add_effects takes effects")
        if e.n_parties != n:
            raise ShapeMismatchError("mixed party counts in effect sum")
    entries = [ZERO] * 3**n
    for e in effects:
        for i, v in enumerate(e.entries):
            entries[i] = entries[i] + v
    return GptTensor(n, tuple(entries), Role.EFFECT)


def scale_effect(w, e: GptTensor) -> GptTensor:
    if e.role is not Role.EFFECT:
        raise RoleMismatchError("scale_effect takes an effect")
    w = dy(w)
    return GptTensor(e.n_parties, tuple(w * v for v in e.entries), Role.EFFECT)


def subtract_effect(e1: GptTensor, e2: GptTensor) -> GptTensor:
    return add_effects(e1, scale_effect(-1, e2))


@dataclass(frozen=True)
class Validity:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_valid_state(t: GptTensor, *, _catalog=None) -> Validity:
    """Membership in the state polytope, checked against product effects.

    Only factorized extremal effects are admissible in this theory, so the
    check pairs t with every tensor product of the four single-site extremal
    effects and with the deterministic effect.
    """
    from . import catalog  # deferred: catalog builds on this module

    if t.role is not Role.STATE:
        raise RoleMismatchError("is_valid_state takes a state")
    if t.n_parties > 3:
        raise UnsupportedSystemError("state validity implemented for N <= 3")
    e_all = catalog.deterministic_effect(t.n_parties)
    norm = pair(e_all, t)
    if norm != ONE:
        return Validity(False, f"normalization {norm} != 1")
    singles = [catalog.extremal_effect(i) for i in range(4)]
    for combo in itertools.product(range(4), repeat=t.n_parties):
        prod = singles[combo[0]]
        for i in combo[1:]:
            prod = tensor_product(prod, singles[i])
        p = pair(prod, t)
        if p < ZERO:
            name = "(x)".join(f"b{i}" for i in combo)
            return Validity(False, f"pairing with {name} is {p} < 0")
    return Validity(True)


def is_valid_effect(t: GptTensor) -> Validity:
    """Pairing with every extremal state lies in [0, 1].  N <= 2 only.

    For N >= 3 the extremal-state list is out of scope (53856 vertices), so
    the check is refused rather than answered incompletely.
    """
    from . import catalog

    if t.role is not Role.EFFECT:
        raise RoleMismatchError("is_valid_effect takes an effect")
    if t.n_parties == 1:
        vertices = [(f"omega{i}", catalog.pure_state(i)) for i in range(4)]
    elif t.n_parties == 2:
        vertices = [(f"Omega{i}", catalog.bipartite_state(i)) for i in range(24)]
    else:
        raise UnsupportedSystemError(
            "effect validity needs the full extremal-state list, known only for N <= 2"
        )
    for name, v in vertices:
        p = pair(t, v)
        if p < ZERO or p > ONE:
            return Validity(False, f"pairing with {name} is {p}, outside [0, 1]")
    return Validity(True)
