"""Two-outcome measurements that perfectly tell pure states apart.

The construction: find an input string where the two boxes' deterministic
output parities differ, then sum the product effects of all outcomes with the
first box's parity at that input.  The resulting pair {a, e - a} answers
"first or second?" with certainty.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .dyadic import ZERO, ONE
from .errors import (
    NonDeterministicParityError,
    NoSeparatingInputError,
    ShapeMismatchError,
)
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor, add_effects, pair, subtract_effect, tensor_product
from .fiducial import DEFAULT_CONVENTION, FiducialConvention, state_to_table
from . import catalog

Bits = Tuple[int, ...]


def output_parity(table: BoxTable, x: Bits) -> int:
    """The common parity of all supported outcomes at input x."""
    parities = {sum(a) % 2 for a in table.support(x)}
    if len(parities) != 1:
        raise NonDeterministicParityError(
            f"outcomes at input {x} have mixed global parity"
        )
    return parities.pop()


def parity_profile(table: BoxTable) -> Tuple[int, ...]:
    return tuple(output_parity(table, x) for x in all_bitstrings(table.n_parties))


def find_separating_input(t1: BoxTable, t2: BoxTable) -> Optional[Tuple[Bits, Tuple[int, int]]]:
    """First input where the two parity profiles differ, with both parities."""
    if t1.n_parties != t2.n_parties:
        raise ShapeMismatchError("tables on different party counts")
    for x in all_bitstrings(t1.n_parties):
        p1 = output_parity(t1, x)
        p2 = output_parity(t2, x)
        if p1 != p2:
            return x, (p1, p2)
    return None


@dataclass(frozen=True)
class TwoOutcomePovm:
    """{a, e - a} with a built as a sum of factorized effects.

    terms lists the per-site extremal-effect indices of each summand;
    separating_input records the input the construction measures at, and
    parity the accepted global parity there (None when the construction fell
    back to disjoint supports rather than parities).
    """

    a: GptTensor
    complement: GptTensor
    terms: Tuple[Tuple[int, ...], ...]
    separating_input: Bits
    parity: Optional[int]
    convention_id: str


def _disjoint_support_input(t1: BoxTable, t2: BoxTable):
    for x in all_bitstrings(t1.n_parties):
        s1 = set(t1.support(x))
        if not (s1 & set(t2.support(x))):
            return x, sorted(s1)
    return None


def discriminating_povm(s1: GptTensor, s2: GptTensor,
                        conv: FiducialConvention = DEFAULT_CONVENTION) -> TwoOutcomePovm:
    """A POVM with pair(a, s1) = 1 and pair(a, s2) = 0, found constructively.

    Primary route: an input where the deterministic output parities differ;
    a sums the product effects of every outcome with the first state's
    parity there.  Pairs of factorized states can share their whole parity
    profile, in which case the construction falls back to an input where the
    two supports are disjoint and sums over the first state's support (for
    two product states this is the factor-wise discriminator).
    """
    if s1 == s2:
        raise NoSeparatingInputError("identical states cannot be discriminated")
    t1 = state_to_table(s1, conv)
    t2 = state_to_table(s2, conv)
    try:
        sep = find_separating_input(t1, t2)
    except NonDeterministicParityError:
        sep = None
    if sep is not None:
        x, (p1, _) = sep
        outcomes = [a for a in all_bitstrings(s1.n_parties) if sum(a) % 2 == p1]
        parity: Optional[int] = p1
    else:
        disjoint = _disjoint_support_input(t1, t2)
        if disjoint is None:
            raise NoSeparatingInputError(
                "no input separates the two states' parities or supports"
            )
        x, outcomes = disjoint
        parity = None
    terms = []
    summands = []
    for a_bits in outcomes:
        idx = tuple(conv.effect_index(xk, ak) for xk, ak in zip(x, a_bits))
        terms.append(idx)
        eff = conv.effect(x[0], a_bits[0])
        for k in range(1, s1.n_parties):
            eff = tensor_product(eff, conv.effect(x[k], a_bits[k]))
        summands.append(eff)
    a = add_effects(*summands)
    complement = subtract_effect(catalog.deterministic_effect(s1.n_parties), a)
    return TwoOutcomePovm(a, complement, tuple(terms), x, parity, conv.id)


def verify_perfect_discrimination(p: TwoOutcomePovm, s1: GptTensor, s2: GptTensor) -> bool:
    """True iff the POVM's first outcome fires surely on one state, never on the other."""
    if p.a.n_parties != s1.n_parties or s1.n_parties != s2.n_parties:
        raise ShapeMismatchError("POVM and states on different party counts")
    hit1, hit2 = pair(p.a, s1), pair(p.a, s2)
    return (hit1 == ONE and hit2 == ZERO) or (hit1 == ZERO and hit2 == ONE)


def closed_form_nonlocal_effect(x: int, y: int) -> GptTensor:
    """Two-term discriminator b^(3(1-x)) (x) b^(3(1-y)) + b^(1+x) (x) b^(1+y).

    This shorthand hard-codes the fiducial assignment
    x = 0 -> (b3, b1), x = 1 -> (b0, b2) (CLOSED_FORM_CONVENTION); under that
    convention it equals the parity-0 construction at separating input (x, y).
    """
    first = tensor_product(
        catalog.extremal_effect(3 * (1 - x)), catalog.extremal_effect(3 * (1 - y))
    )
    second = tensor_product(
        catalog.extremal_effect(1 + x), catalog.extremal_effect(1 + y)
    )
    return add_effects(first, second)


def product_effect(indices: Sequence[int]) -> GptTensor:
    eff = catalog.extremal_effect(indices[0])
    for i in indices[1:]:
        eff = tensor_product(eff, catalog.extremal_effect(i))
    return eff


def search_product_effect_sums(s1: GptTensor, s2: GptTensor,
                               require_valid_complement: bool = True) -> List[Tuple[Tuple[int, int], ...]]:
    """Exhaust all sums of distinct bipartite product effects discriminating s1 from s2.

    Empirical probe for whether the separating-input strategy is the only
    route to perfect discrimination; returns every index set whose sum a
    satisfies pair(a, s1) = 1, pair(a, s2) = 0 (with e - a still a valid
    effect when required).  N = 2 only.
    """
    from .tensors import is_valid_effect

    if s1.n_parties != 2 or s2.n_parties != 2:
        raise ShapeMismatchError("the exhaustive search is implemented for N = 2")
    products = {}
    for i, j in itertools.product(range(4), repeat=2):
        products[(i, j)] = product_effect((i, j))
    hits1 = {k: pair(v, s1) for k, v in products.items()}
    hits2 = {k: pair(v, s2) for k, v in products.items()}
    found = []
    keys = sorted(products)
    for r in range(1, 5):
        for combo in itertools.combinations(keys, r):
            h1 = sum((hits1[k] for k in combo), ZERO)
            h2 = sum((hits2[k] for k in combo), ZERO)
            if h1 != ONE or h2 != ZERO:
                continue
            a = add_effects(*(products[k] for k in combo))
            if not is_valid_effect(a):
                continue
            if require_valid_complement:
                comp = subtract_effect(catalog.deterministic_effect(2), a)
                try:
                    ok = is_valid_effect(comp)
                except Exception:
                    ok = False
                if not ok:
                    continue
            found.append(combo)
    return found
