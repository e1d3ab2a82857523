"""Quantum versus classical query counts as the string grows.

The classical solver must probe each digit separately (n queries); the
quantum solver always uses one.  This script tabulates both against string
length and local dimension, mirroring what `quditbv sweep` prints.

    python3 demos/query_complexity_sweep.py
"""

import numpy as np

from quditbv import LinearOracle, random_secret, run_classical_bv, run_quantum_bv


def sweep_length(d=3, max_n=8, seed=0):
    print(f"=== Query counts vs string length (d={d}) ===")
    print(f"{'n':>3} {'classical':>10} {'quantum':>8} {'both correct':>13}")
    rng = np.random.default_rng(seed)
    for n in range(1, max_n + 1):
        secret = random_secret(d, n, rng)
        classical = run_classical_bv(LinearOracle(secret, d))
        quantum = run_quantum_bv(LinearOracle(secret, d))
        both = classical.recovered == secret and quantum.recovered == secret
        print(f"{n:>3} {classical.oracle_queries:>10} {quantum.oracle_queries:>8} {str(both):>13}")
    print()


def sweep_dimension(n=3, dims=(2, 3, 4, 5, 6, 7), seed=1):
    print(f"=== Query counts vs local dimension (n={n}) ===")
    print(f"{'d':>3} {'classical':>10} {'quantum':>8}")
    rng = np.random.default_rng(seed)
    for d in dims:
        secret = random_secret(d, n, rng)
        classical = run_classical_bv(LinearOracle(secret, d))
        quantum = run_quantum_bv(LinearOracle(secret, d))
        print(f"{d:>3} {classical.oracle_queries:>10} {quantum.oracle_queries:>8}")
    print("\nThe classical count tracks n; the quantum count never moves from 1.")


if __name__ == "__main__":
    sweep_length()
    sweep_dimension()
