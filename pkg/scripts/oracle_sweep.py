"""Compare gate application by geometric product against plain matrix algebra.

For each register size, draws random complex matrices and states, applies
them both ways, and reports the worst componentwise deviation and timing.

    python scripts/oracle_sweep.py --max-qubits 4 --trials 50
"""

import argparse
import time

import numpy as np

from qrega import oracle
from qrega.qra import RegisterState, apply, gate_from_matrix, new_context


def sweep(n: int, trials: int, rng: np.random.Generator) -> tuple[float, float]:
    ctx = new_context(n)
    dim = 1 << n
    worst = 0.0
    start = time.perf_counter()
    for _ in range(trials):
        m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        got = np.array(apply(gate_from_matrix(ctx, m), RegisterState(ctx, v)).amplitudes)
        worst = max(worst, float(np.max(np.abs(got - oracle.mat_apply(m, v)))))
    return worst, (time.perf_counter() - start) / trials


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-qubits", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>2} {'max |delta|':>12} {'ms/trial':>10}")
    for n in range(1, args.max_qubits + 1):
        worst, per = sweep(n, args.trials, rng)
        print(f"{n:>2} {worst:12.3e} {per * 1e3:10.2f}")


if __name__ == "__main__":
    main()
