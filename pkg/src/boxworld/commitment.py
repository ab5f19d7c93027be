"""Bit-commitment protocols over shared non-local boxes, honest and cheating.

Two runnable protocols: the single-box toy commitment and the 2n+1-box
parity-committed scheme.  In both, the "transform cheat" has Alice rewrite
her side of every box (input flip plus output map) before using it, which
turns the shared correlation into another non-local vertex whose statistics
let her reveal the opposite bit without ever failing a check.

Boxes are sampled lazily and sequentially: a party's output is drawn when
that party supplies an input, from the exact marginal the current table
assigns, and the second output from the exact conditional.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .dyadic import Dyadic, ZERO
from .errors import BoxworldError, ShapeMismatchError
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor, marginalize
from .transforms import (
    Relabelling,
    ReversibleTransform,
    SiteRelabelling,
    IDENTITY_RELABELLING_SITE,
    locally_connected,
    relabel_table,
)
from .fiducial import DEFAULT_CONVENTION, FiducialConvention
from .discrimination import discriminating_povm, verify_perfect_discrimination
from .rng import substream
from . import catalog

HONEST = "honest"
NAIVE_CHEAT = "naive_cheat"
TRANSFORM_CHEAT = "transform_cheat"
MODES = (HONEST, NAIVE_CHEAT, TRANSFORM_CHEAT)


@dataclass(frozen=True)
class CheatParams:
    """Parameters of the input-flip cheat family.

    The rewritten box must satisfy: for every y and every (a, b) it supports
    at input x, the pair (a + alpha*x + gamma, b) is supported by the
    original box at input x + 1.  That forces beta = 1; alpha and gamma are
    free.  The identity (no-op) element is kept representable for the
    non-flip case.
    """

    alpha: int = 0
    beta: int = 1
    gamma: int = 0

    def __post_init__(self):
        if self.beta == 1:
            ok = self.alpha in (0, 1) and self.gamma in (0, 1)
        else:
            ok = (self.alpha, self.beta, self.gamma) == (0, 0, 0)
        if not ok:
            raise BoxworldError(
                "cheat parameters must have beta = 1 (or be the identity triple)"
            )

    @property
    def is_identity(self) -> bool:
        return self.beta == 0

    def output_map(self, a: int, x: int) -> int:
        """f(a) = a + alpha*x + gamma, applied to Alice's raw output."""
        if self.is_identity:
            return a
        return a ^ (self.alpha * x) ^ self.gamma

    def alice_relabelling(self, n_parties: int = 2) -> Relabelling:
        """Rewrite of Alice's side (site 1) realizing p_000 -> p_{alpha 1 gamma}."""
        if self.is_identity:
            first = IDENTITY_RELABELLING_SITE
        else:
            first = SiteRelabelling(1, self.alpha, self.gamma)
        rest = (IDENTITY_RELABELLING_SITE,) * (n_parties - 1)
        return Relabelling((first,) + rest)


def solve_cheat(x: int, x_target: int, alpha: int = 0, gamma: int = 0) -> CheatParams:
    """Cheat parameters that let Alice reveal x_target after inputting x.

    The flip case (x_target = x + 1) returns the beta = 1 family member for
    the chosen free bits; the identity case returns the trivial element.
    """
    if x_target == x:
        return CheatParams(0, 0, 0)
    return CheatParams(alpha, 1, gamma)


def verify_cheat_support(params: CheatParams, x: int) -> bool:
    """Check the support guarantee of the cheat across all of Bob's (y, a, b)."""
    if params.is_identity:
        return True
    rewritten = catalog.box_table_nonlocal(params.alpha, 1, params.gamma)
    original = catalog.box_table_nonlocal(0, 0, 0)
    for y in (0, 1):
        for a, b in rewritten.support((x, y)):
            a_prime = params.output_map(a, x)
            if original.prob((x ^ 1, y), (a_prime, b)) == ZERO:
                return False
    return True


class SampledBox:
    """One shared bipartite box, sampled lazily per party.

    Party 1 is Alice, party 2 Bob.  The first input draws that party's
    output from its exact marginal; the second draws from the conditional
    given the first pair.  Probabilities are dyadic so the draws use integer
    bits only.
    """

    def __init__(self, table: BoxTable, rng):
        if table.n_parties != 2:
            raise ShapeMismatchError("protocol boxes are bipartite")
        self.table = table
        self.rng = rng
        self.inputs: Dict[int, int] = {}
        self.outputs: Dict[int, int] = {}

    def _draw(self, weighted: List[Tuple[int, Dyadic]]) -> int:
        """Sample proportionally to exact dyadic weights (no normalization)."""
        k = max(p.exponent for _, p in weighted)
        total = 0
        bucket = []
        for value, p in weighted:
            w = p.numerator << (k - p.exponent)
            total += w
            bucket.append((value, total))
        r = self.rng.randrange(total)
        for value, ceiling in bucket:
            if r < ceiling:
                return value
        raise AssertionError("draw fell through the CDF")

    def input(self, party: int, x: int) -> int:
        if party in self.inputs:
            raise BoxworldError(f"party {party} already used this box")
        self.inputs[party] = x
        other = 2 if party == 1 else 1
        if other not in self.inputs:
            # marginal of this party's output; no-signalling makes the other
            # party's (unknown) input irrelevant, so fix it arbitrarily
            probe = {party: x, other: 0}
            weighted = []
            for out in (0, 1):
                p = ZERO
                for a in all_bitstrings(2):
                    if a[party - 1] == out:
                        p = p + self.table.prob((probe[1], probe[2]), a)
                weighted.append((out, p))
        else:
            # conditional on the already-drawn output, via joint weights
            joint_x = (self.inputs[1], self.inputs[2])
            fixed = self.outputs[other]
            weighted = []
            for out in (0, 1):
                a = (out, fixed) if party == 1 else (fixed, out)
                weighted.append((out, self.table.prob(joint_x, a)))
        result = self._draw(weighted)
        self.outputs[party] = result
        return result


@dataclass(frozen=True)
class BoxRecord:
    x: int
    a: int
    y: int
    b: int
    x_revealed: int
    a_revealed: int


@dataclass(frozen=True)
class Transcript:
    protocol: str
    mode: str
    committed: int
    revealed: int
    records: Tuple[BoxRecord, ...]
    alice_message: Optional[int]
    verdict: str  # "accept" | "reject"
    seed: int
    cheat: Optional[CheatParams] = None

    @property
    def accepted(self) -> bool:
        return self.verdict == "accept"


def _single_box_checks(t: Transcript) -> bool:
    (r,) = t.records
    return (r.a_revealed ^ r.b) == (r.x_revealed * r.y)


def _buhrman_checks(t: Transcript) -> bool:
    n_boxes = len(t.records)
    for r in t.records:
        if (r.a_revealed ^ r.b) != (r.x_revealed * r.y):
            return False
    x_prime = [r.x_revealed for r in t.records]
    a_prime = [r.a_revealed for r in t.records]
    parity = count_11_odd(tuple(x_prime[: n_boxes - 1]))
    if (parity + x_prime[-1] + t.revealed) % 2 != 0:
        return False
    message = 0
    for a in a_prime:
        message ^= a
    return message == t.alice_message


def verify_transcript(t: Transcript) -> str:
    """Recompute Bob's verdict from the stored fields."""
    if t.protocol == "single":
        ok = _single_box_checks(t)
    elif t.protocol == "buhrman":
        ok = _buhrman_checks(t)
    else:
        raise BoxworldError(f"unknown protocol {t.protocol!r}")
    return "accept" if ok else "reject"


def run_single_box(c: int, mode: str = HONEST, seed: int = 0,
                   cheat: Optional[CheatParams] = None) -> Transcript:
    """One round of the toy commitment where Alice's input is the bit itself.

    Honest runs always verify.  The naive cheat (reveal the flipped input,
    keep the honest output) survives only when Bob happened to input 0.  The
    transform cheat rewrites Alice's side first and always verifies.
    """
    if mode not in MODES:
        raise BoxworldError(f"unknown mode {mode!r}")
    cheat = cheat or (CheatParams() if mode == TRANSFORM_CHEAT else CheatParams(0, 0, 0))
    table = catalog.box_table_nonlocal(0, 0, 0)
    if mode == TRANSFORM_CHEAT:
        table = relabel_table(table, cheat.alice_relabelling())
    box = SampledBox(table, substream(seed, "box0"))
    x = c
    a = box.input(1, x)
    y = substream(seed, "bob").getrandbits(1)
    b = box.input(2, y)
    if mode == HONEST:
        x_rev, a_rev = x, a
    elif mode == NAIVE_CHEAT:
        x_rev, a_rev = x ^ 1, a
    else:
        x_rev, a_rev = x ^ 1, cheat.output_map(a, x)
    record = BoxRecord(x, a, y, b, x_rev, a_rev)
    transcript = Transcript(
        protocol="single",
        mode=mode,
        committed=c,
        revealed=x_rev,
        records=(record,),
        alice_message=None,
        verdict="pending",
        seed=seed,
        cheat=cheat if mode == TRANSFORM_CHEAT else None,
    )
    verdict = verify_transcript(transcript)
    return replace(transcript, verdict=verdict)


def count_11_odd(bits: Sequence[int]) -> int:
    """Number of "11" substrings starting at an odd position (1-based).

    Defined for even-length strings; scans positions 1, 3, 5, ...
    """
    bits = tuple(bits)
    if len(bits) % 2 != 0:
        raise BoxworldError("the 11-count is defined for even-length strings")
    count = 0
    for i in range(0, len(bits) - 1, 2):
        if bits[i] == 1 and bits[i + 1] == 1:
            count += 1
    return count


def _sample_even_11(rng, length: int, flipped: bool) -> Tuple[int, ...]:
    """Uniform even-length string whose (optionally flipped) 11-count is even."""
    while True:
        candidate = tuple(rng.getrandbits(1) for _ in range(length))
        probe = tuple(b ^ 1 for b in candidate) if flipped else candidate
        if count_11_odd(probe) % 2 == 0:
            return candidate


def run_buhrman(n: int, c: int, mode: str = HONEST, seed: int = 0,
                cheat: Optional[CheatParams] = None) -> Transcript:
    """The 2n+1-box commitment with the parity consistency check.

    Honest: Alice draws x_1..x_2n with even 11-count, sets x_{2n+1} = c,
    inputs every box, and sends the parity of her outputs; at reveal Bob
    replays every box relation plus the parity constraint.

    Transform cheat: Alice instead rewrites her side of every box, picks x so
    that the bitwise-flipped string meets the parity constraint, and reveals
    the flipped string with remapped outputs; every check passes and Bob
    accepts the flipped bit.
    """
    if n < 1:
        raise BoxworldError("the protocol needs n >= 1 (2n+1 boxes)")
    if mode == NAIVE_CHEAT:
        raise BoxworldError("the naive cheat is a single-box notion")
    if mode not in (HONEST, TRANSFORM_CHEAT):
        raise BoxworldError(f"unknown mode {mode!r}")
    cheating = mode == TRANSFORM_CHEAT
    cheat = cheat or (CheatParams() if cheating else CheatParams(0, 0, 0))
    n_boxes = 2 * n + 1
    alice_rng = substream(seed, "alice")
    bob_rng = substream(seed, "bob")

    head = _sample_even_11(alice_rng, 2 * n, flipped=cheating)
    x = head + (c,)
    base = catalog.box_table_nonlocal(0, 0, 0)
    table = relabel_table(base, cheat.alice_relabelling()) if cheating else base

    boxes = [SampledBox(table, substream(seed, f"box{i}")) for i in range(n_boxes)]
    a = [boxes[i].input(1, x[i]) for i in range(n_boxes)]
    if cheating:
        a_rev = [cheat.output_map(a[i], x[i]) for i in range(n_boxes)]
        x_rev = [x[i] ^ 1 for i in range(n_boxes)]
        revealed = c ^ 1
    else:
        a_rev, x_rev, revealed = list(a), list(x), c
    message = 0
    for v in a_rev:
        message ^= v

    y = [bob_rng.getrandbits(1) for _ in range(n_boxes)]
    b = [boxes[i].input(2, y[i]) for i in range(n_boxes)]

    records = tuple(
        BoxRecord(x[i], a[i], y[i], b[i], x_rev[i], a_rev[i]) for i in range(n_boxes)
    )
    transcript = Transcript(
        protocol="buhrman",
        mode=mode,
        committed=c,
        revealed=revealed,
        records=records,
        alice_message=message,
        verdict="pending",
        seed=seed,
        cheat=cheat if cheating else None,
    )
    verdict = verify_transcript(transcript)
    return replace(transcript, verdict=verdict)


@dataclass(frozen=True)
class AuditReport:
    """Security audit of a candidate state pair against the three properties.

    concealing is the split-robust predicate (equal marginals on every
    non-empty proper subset of sites, so no assignment of the non-Alice
    sites to Bob leaks the bit); concealing_bob_marginal is the weaker
    fixed-split predicate (equal marginals on every non-empty subset of
    Bob's sites).  Binding is decided against reversible transforms only;
    irreversible cheating channels are out of scope.
    """

    alice_sites: Tuple[int, ...]
    correct: bool
    concealing: bool
    concealing_bob_marginal: bool
    binding: bool
    witness: Optional[ReversibleTransform]

    @property
    def perfect(self) -> bool:
        return self.correct and self.concealing and self.binding


def _subset_marginals_equal(psi0: GptTensor, psi1: GptTensor,
                            subsets: Iterable[Tuple[int, ...]]) -> bool:
    n = psi0.n_parties
    for kept in subsets:
        discard = set(range(1, n + 1)) - set(kept)
        if marginalize(psi0, discard) != marginalize(psi1, discard):
            return False
    return True


def _proper_subsets(sites: Sequence[int]):
    sites = tuple(sites)
    for r in range(1, len(sites)):
        yield from itertools.combinations(sites, r)


def audit_protocol(psi0: GptTensor, psi1: GptTensor, alice_sites: Iterable[int],
                   conv: FiducialConvention = DEFAULT_CONVENTION) -> AuditReport:
    """Decide correct/concealing/binding for the commitment encoded by a state pair."""
    if psi0.n_parties != psi1.n_parties:
        raise ShapeMismatchError("input states on different party counts")
    n = psi0.n_parties
    alice = tuple(sorted(set(alice_sites)))
    if not alice or not set(alice) <= set(range(1, n + 1)):
        raise ShapeMismatchError(f"alice sites {alice} outside 1..{n}")
    bob = tuple(k for k in range(1, n + 1) if k not in alice)

    try:
        povm = discriminating_povm(psi0, psi1, conv)
        correct = verify_perfect_discrimination(povm, psi0, psi1)
    except BoxworldError:
        correct = False

    all_sites = tuple(range(1, n + 1))
    concealing = _subset_marginals_equal(psi0, psi1, _proper_subsets(all_sites))
    bob_subsets = [
        c for r in range(1, len(bob) + 1) for c in itertools.combinations(bob, r)
    ]
    concealing_bob = _subset_marginals_equal(psi0, psi1, bob_subsets)

    witness = locally_connected(psi0, psi1, alice)
    return AuditReport(
        alice_sites=alice,
        correct=correct,
        concealing=concealing,
        concealing_bob_marginal=concealing_bob,
        binding=witness is None,
        witness=witness,
    )


@dataclass(frozen=True)
class SweepSummary:
    alice_sites: Tuple[int, ...]
    n_pairs: int
    combo_counts: Tuple[Tuple[Tuple[bool, bool, bool], int], ...]
    concealing_pairs: Tuple[Tuple[int, int], ...]
    bob_marginal_equal_pairs: int
    perfect_pairs: Tuple[Tuple[int, int], ...]

    def count(self, correct: bool, concealing: bool, binding: bool) -> int:
        for combo, n in self.combo_counts:
            if combo == (correct, concealing, binding):
                return n
        return 0


def impossibility_sweep(alice_sites: Iterable[int] = (1,),
                        conv: FiducialConvention = DEFAULT_CONVENTION) -> SweepSummary:
    """Audit every unordered pair of the 24 bipartite vertices.

    The headline result: no pair is simultaneously correct, concealing, and
    binding, which is the impossibility of perfect bit commitment at this
    scale.  Pair indices refer to the bipartite catalog.
    """
    alice = tuple(sorted(set(alice_sites)))
    states = [catalog.bipartite_state(i) for i in range(24)]
    combos: Dict[Tuple[bool, bool, bool], int] = {}
    concealing_pairs = []
    perfect_pairs = []
    bob_equal = 0
    for i in range(24):
        for j in range(i + 1, 24):
            report = audit_protocol(states[i], states[j], alice, conv)
            key = (report.correct, report.concealing, report.binding)
            combos[key] = combos.get(key, 0) + 1
            if report.concealing:
                concealing_pairs.append((i, j))
            if report.concealing_bob_marginal:
                bob_equal += 1
            if report.perfect:
                perfect_pairs.append((i, j))
    ordered = tuple(sorted(combos.items()))
    return SweepSummary(
        alice_sites=alice,
        n_pairs=276,
        combo_counts=ordered,
        concealing_pairs=tuple(concealing_pairs),
        bob_marginal_equal_pairs=bob_equal,
        perfect_pairs=tuple(perfect_pairs),
    )
