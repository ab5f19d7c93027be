"""Running the commitment protocols honestly and breaking them.

The single-box toy protocol: Alice inputs her bit into a shared correlated
box, Bob inputs a random bit, and at reveal Bob checks the box relation
a + b = xy.  Flipping the revealed input naively survives half the time.
Rewriting Alice's side of the box first (input flip plus output map, one of
the reversible transformations) makes the flipped reveal pass always.
"""

from boxworld import (
    CheatParams,
    count_11_odd,
    run_buhrman,
    run_single_box,
    solve_cheat,
    verify_transcript,
)
from boxworld.commitment import HONEST, NAIVE_CHEAT, TRANSFORM_CHEAT, verify_cheat_support

print("== Solving the cheat equation ==")
params = solve_cheat(x=0, x_target=1)
print(f"  input flip forces beta = {params.beta}; free bits alpha={params.alpha},"
      f" gamma={params.gamma}; output map f(a) = a + alpha*x + gamma")
print("  support guarantee holds for every (y, a, b):",
      verify_cheat_support(params, 0))

print("\n== Single box, 2000 trials each ==")
for mode in (HONEST, NAIVE_CHEAT, TRANSFORM_CHEAT):
    accepted = flipped = 0
    for seed in range(2000):
        t = run_single_box(seed % 2, mode, seed)
        accepted += t.accepted
        flipped += t.accepted and t.revealed != t.committed
    print(f"  {mode:16s} accepted {accepted:4d}/2000, of which flipped reveals: {flipped}")

print("\n== The 2n+1-box protocol ==")
t = run_buhrman(n=3, c=1, mode=HONEST, seed=5)
print("honest run: verdict", t.verdict, "| revealed", t.revealed,
      "| parity message", t.alice_message)
head = tuple(r.x for r in t.records[:-1])
print("  Alice's input head has an even 11-count:", count_11_odd(head) % 2 == 0)

t = run_buhrman(n=3, c=1, mode=TRANSFORM_CHEAT, seed=5)
print("cheating run: verdict", t.verdict, "| committed", t.committed,
      "| revealed", t.revealed)
print("  every per-box check x'*y = a'+b passes:",
      all((r.a_revealed ^ r.b) == (r.x_revealed * r.y) for r in t.records))
print("  the transcript replays to the same verdict:",
      verify_transcript(t) == t.verdict)

print("\n== Cheat parameters are a family ==")
for alpha in (0, 1):
    for gamma in (0, 1):
        cheat = CheatParams(alpha, 1, gamma)
        results = [run_buhrman(2, c, TRANSFORM_CHEAT, seed, cheat).accepted
                   for c in (0, 1) for seed in range(50)]
        print(f"  alpha={alpha} gamma={gamma}: accepted {sum(results)}/100")
