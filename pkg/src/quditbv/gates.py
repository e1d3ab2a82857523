"""Unitary gates on qudit registers.

Two independent execution routes are provided on purpose:

* :func:`apply_local_gate` and :func:`apply_sum` act in place on the strided
  amplitude array without ever forming the full operator.
* :func:`dense_operator` builds the full ``d**k x d**k`` matrix for a gate
  sequence, for cross-checking the strided route on small registers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import CapacityError, DomainError
from .state import Statevector, check_dimension, decode_index, encode_digits

UNITARITY_TOL = 1e-12
DENSE_DIM_LIMIT = 256


class FourierDirection(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True, eq=False)
class GateMatrix:
    """A validated unitary acting on one or more qudits of dimension ``d``.

    The matrix must be square with side ``d**m`` for some ``m >= 1`` and
    unitary to within ``UNITARITY_TOL`` per entry; construction fails
    otherwise.  ``qudit_span`` reports ``m``.
    """

    entries: np.ndarray
    d: int

    def __post_init__(self) -> None:
        d = check_dimension(self.d)
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DomainError(f"gate matrix must be square, got shape {entries.shape}")
        side = entries.shape[0]
        span = round(math.log(side, d))
        if span < 1 or d**span != side:
            raise DomainError(
                f"gate side {side} is not a positive power of the local dimension {d}"
            )
        if not np.all(np.isfinite(entries)):
            raise DomainError("gate entries must be finite")
        defect = entries @ entries.conj().T - np.eye(side)
        worst = float(np.max(np.abs(defect)))
        if worst > UNITARITY_TOL:
            raise DomainError(
                f"matrix is not unitary: max |U U* - I| entry is {worst:.3e}"
            )
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "d", d)

    @property
    def qudit_span(self) -> int:
        """Number of qudits the gate acts on."""
        return round(math.log(self.entries.shape[0], self.d))


def omega_powers(d: int) -> np.ndarray:
    """The d-th roots of unity ``exp(2*pi*i*m/d)`` for ``m = 0..d-1``."""
    check_dimension(d)
    return np.exp(2j * np.pi * np.arange(d) / d)


def fourier_matrix(d: int, direction: FourierDirection = FourierDirection.FORWARD) -> GateMatrix:
    """Discrete Fourier gate on a single qudit of dimension ``d``.

    Forward entries are ``omega**(row*col) / sqrt(d)`` with
    ``omega = exp(2*pi*i/d)``; the inverse is the conjugate transpose.
    Exponents are reduced mod ``d`` before exponentiation so that large
    ``row*col`` products cost no precision.
    """
    d = check_dimension(d)
    if not isinstance(direction, FourierDirection):
        raise DomainError(f"direction must be a FourierDirection, got {direction!r}")
    grid = np.arange(d)
    exponents = np.outer(grid, grid) % d
    entries = omega_powers(d)[exponents] / math.sqrt(d)
    if direction is FourierDirection.INVERSE:
        entries = entries.conj().T
    return GateMatrix(entries, d)


def sum_matrix(d: int) -> GateMatrix:
    """Two-qudit SUM gate: |i>|j> -> |i>|(i + j) mod d>.

    Row/column indices pair the control digit (most significant) with the
    target digit, matching the register's big-endian convention.
    """
    d = check_dimension(d)
    entries = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            entries[i * d + (i + j) % d, i * d + j] = 1.0
    return GateMatrix(entries, d)


def _check_position(pos: int, qudit_count: int, label: str = "position") -> int:
    if not isinstance(pos, (int, np.integer)) or isinstance(pos, bool):
        raise DomainError(f"{label} must be an integer, got {pos!r}")
    if not 1 <= pos <= qudit_count:
        raise DomainError(f"{label} {pos} is outside 1..{qudit_count}")
    return int(pos)


def apply_local_gate(state: Statevector, gate: GateMatrix, pos: int) -> Statevector:
    """Apply a single-qudit gate at 1-based position ``pos``.

    The amplitude array is viewed as ``(left, d, right)`` with
    ``left = d**(pos-1)`` and ``right = d**(k-pos)`` and the gate is
    contracted over the middle axis; no ``d**k x d**k`` matrix is formed and
    every output amplitude is written exactly once.
    """
    if gate.d != state.d:
        raise DomainError(f"gate dimension {gate.d} does not match state dimension {state.d}")
    if gate.qudit_span != 1:
        raise DomainError(f"apply_local_gate needs a single-qudit gate, got span {gate.qudit_span}")
    k = state.qudit_count
    pos = _check_position(pos, k)
    d = state.d
    left = d ** (pos - 1)
    right = d ** (k - pos)
    cube = state.amplitudes.reshape(left, d, right)
    out = np.einsum("sj,ljr->lsr", gate.entries, cube)
    return Statevector(out.reshape(-1), d, k)


def apply_sum(state: Statevector, control: int, target: int) -> Statevector:
    """Apply SUM with the given control and target positions (1-based).

    Maps |..i..j..> to |..i..(i+j) mod d..> where i sits at ``control`` and j
    at ``target``.  Implemented as a pure index permutation: for each control
    digit ``i`` the target axis is cyclically shifted by ``i``.  No matrix is
    ever formed.
    """
    k = state.qudit_count
    control = _check_position(control, k, "control")
    target = _check_position(target, k, "target")
    if control == target:
        raise DomainError("control and target must be distinct")
    d = state.d
    # View the array with explicit control and target axes, then roll the
    # target axis by i within each control slice i.
    axes_shape = (d,) * k
    cube = state.amplitudes.reshape(axes_shape)
    out = np.empty_like(cube)
    control_ax = control - 1
    target_ax = target - 1
    index: list[slice | int] = [slice(None)] * k
    for i in range(d):
        index[control_ax] = i
        sliced = cube[tuple(index)]
        # After fixing the control axis, the target axis shifts left by one
        # when it sat beyond the control axis.
        roll_ax = target_ax - 1 if target_ax > control_ax else target_ax
        out[tuple(index)] = np.roll(sliced, shift=i, axis=roll_ax)
    return Statevector(out.reshape(-1), d, k)


def _lift_single(entries: np.ndarray, pos: int, d: int, k: int) -> np.ndarray:
    left = np.eye(d ** (pos - 1))
    right = np.eye(d ** (k - pos))
    return np.kron(np.kron(left, entries), right)


def _lift_pair(entries: np.ndarray, first: int, second: int, d: int, k: int) -> np.ndarray:
    dim = d**k
    lifted = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        digits = decode_index(col, d, k)
        pair_col = digits[first - 1] * d + digits[second - 1]
        for a in range(d):
            for b in range(d):
                value = entries[a * d + b, pair_col]
                if value == 0:
                    continue
                out_digits = list(digits)
                out_digits[first - 1] = a
                out_digits[second - 1] = b
                lifted[encode_digits(out_digits, d), col] += value
    return lifted


def dense_operator(
    ops: Sequence[tuple[GateMatrix, Sequence[int]]],
    qudit_count: int,
    max_dim: int = DENSE_DIM_LIMIT,
) -> GateMatrix:
    """Full-register matrix for a gate sequence, for cross-checking only.

    ``ops`` lists ``(gate, positions)`` pairs applied left to right (the first
    listed gate acts on the state first).  Single-qudit gates are lifted with
    identity Kronecker factors; two-qudit gates by explicit basis enumeration.
    Refuses registers with more than ``max_dim`` amplitudes.
    """
    if not ops:
        raise DomainError("dense_operator needs at least one gate")
    d = ops[0][0].d
    if not isinstance(qudit_count, (int, np.integer)) or isinstance(qudit_count, bool) or qudit_count < 1:
        raise DomainError(f"qudit_count must be a positive integer, got {qudit_count!r}")
    k = int(qudit_count)
    dim = d**k
    if dim > max_dim:
        raise CapacityError(
            f"dense operator on {k} qudits of dimension {d} needs {dim}x{dim} entries, "
            f"above the limit of {max_dim}x{max_dim}"
        )
    total = np.eye(dim, dtype=np.complex128)
    for gate, positions in ops:
        if gate.d != d:
            raise DomainError(f"mixed gate dimensions {d} and {gate.d}")
        positions = [_check_position(p, k) for p in positions]
        if gate.qudit_span != len(positions):
            raise DomainError(
                f"gate spans {gate.qudit_span} qudits but got {len(positions)} positions"
            )
        if gate.qudit_span == 1:
            lifted = _lift_single(gate.entries, positions[0], d, k)
        elif gate.qudit_span == 2:
            if positions[0] == positions[1]:
                raise DomainError("two-qudit gate positions must be distinct")
            lifted = _lift_pair(gate.entries, positions[0], positions[1], d, k)
        else:
            raise DomainError("dense_operator lifts only one- and two-qudit gates")
        total = lifted @ total
    return GateMatrix(total, d)
