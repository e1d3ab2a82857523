"""How the oracle's phase kickback works, digit by digit.

The single-qudit state produced by the forward Fourier gate on |d-1> is an
eigenstate of "add c mod d" with eigenvalue exp(2*pi*i*c/d).  Adding a digit
into it therefore leaves the state unchanged up to a phase, and that phase
lands on whatever register controlled the addition.  This script makes the
eigenvalue visible for every control digit.

    python3 demos/phase_kickback.py
"""

import numpy as np

from quditbv import Statevector, apply_sum, inner_product, kickback_state, tensor


def kicked_phase(d: int, control_digit: int) -> complex:
    """Phase acquired when SUM adds `control_digit` into the special state."""
    ancilla = kickback_state(d)
    joint = tensor(_digit_state(control_digit, d), ancilla)
    after = apply_sum(joint, control=1, target=2)
    # <before|after> is exactly the eigenvalue when the state is an eigenvector.
    return inner_product(joint, after)


def _digit_state(value: int, d: int) -> Statevector:
    amps = np.zeros(d, dtype=complex)
    amps[value] = 1.0
    return Statevector(amps, d, 1)


def main():
    for d in (2, 3, 5):
        print(f"=== d = {d} ===")
        ancilla = kickback_state(d)
        rounded = np.round(ancilla.amplitudes * np.sqrt(d), 4)
        print(f"special target state (times sqrt(d)): {rounded}")
        for c in range(d):
            measured = kicked_phase(d, c)
            expected = np.exp(2j * np.pi * c / d)
            print(
                f"  add {c}: phase {measured:+.4f}, expected {expected:+.4f}, "
                f"difference {abs(measured - expected):.2e}"
            )
        print()
    print("At d=2 the phase for digit 1 is -1: the familiar CNOT sign flip on |->.")


if __name__ == "__main__":
    main()
