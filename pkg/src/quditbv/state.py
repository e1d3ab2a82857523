"""Dense statevectors for registers of d-level systems.

Conventions used throughout the package:

* A register of ``k`` qudits with local dimension ``d`` is a dense array of
  ``d**k`` complex amplitudes.
* Indexing is big-endian: qudit 1 is the most significant base-d digit of the
  flat array index, qudit ``k`` the least significant.
* Qudit positions are 1-based everywhere in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .budget import check_capacity
from .errors import DomainError


def check_dimension(d: int) -> int:
    """Validate a local dimension (an integer >= 2) and return it as ``int``."""
    if not isinstance(d, (int, np.integer)) or isinstance(d, bool) or d < 2:
        raise DomainError(f"local dimension must be an integer >= 2, got {d!r}")
    return int(d)


def validate_digits(digits: Sequence[int], d: int, length: int | None = None) -> tuple[int, ...]:
    """Normalize a digit string to a tuple, checking range and length.

    Every entry must be an integer in ``[0, d)``.  The string must be
    non-empty, and must have exactly ``length`` entries when that is given.
    """
    check_dimension(d)
    out = []
    for v in digits:
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
            raise DomainError(f"digits must be integers, got {v!r}")
        if not 0 <= v < d:
            raise DomainError(f"digit {int(v)} is outside [0, {d})")
        out.append(int(v))
    if not out:
        raise DomainError("digit string must be non-empty")
    if length is not None and len(out) != length:
        raise DomainError(f"expected {length} digits, got {len(out)}")
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Statevector:
    """Immutable dense state of ``qudit_count`` qudits of dimension ``d``.

    The amplitude array is copied on construction, validated to have exactly
    ``d**qudit_count`` finite entries, and made read-only.
    """

    amplitudes: np.ndarray
    d: int
    qudit_count: int

    def __post_init__(self) -> None:
        d = check_dimension(self.d)
        k = self.qudit_count
        if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
            raise DomainError(f"qudit_count must be a positive integer, got {k!r}")
        k = int(k)
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise DomainError(f"amplitudes must be one-dimensional, got shape {amps.shape}")
        if amps.size != d**k:
            raise DomainError(
                f"amplitude count {amps.size} does not match d**qudit_count = {d**k}"
            )
        if not np.all(np.isfinite(amps)):
            raise DomainError("amplitudes must be finite (no NaN or Inf)")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "qudit_count", k)

    @property
    def size(self) -> int:
        """Number of amplitudes, ``d**qudit_count``."""
        return self.amplitudes.size

    def norm(self) -> float:
        """Euclidean norm of the amplitude array."""
        return float(np.linalg.norm(self.amplitudes))


def encode_digits(digits: Sequence[int], d: int) -> int:
    """Flat index of the basis state labeled by ``digits``, big-endian.

    ``encode_digits((x1, ..., xn), d)`` is ``sum(x_i * d**(n - i))``, so the
    first digit is the most significant.
    """
    digits = validate_digits(digits, d)
    index = 0
    for v in digits:
        index = index * d + v
    return index


def decode_index(index: int, d: int, n: int) -> tuple[int, ...]:
    """Digit string of length ``n`` whose big-endian encoding is ``index``."""
    check_dimension(d)
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise DomainError(f"digit count must be a positive integer, got {n!r}")
    if not isinstance(index, (int, np.integer)) or isinstance(index, bool):
        raise DomainError(f"index must be an integer, got {index!r}")
    if not 0 <= index < d**n:
        raise DomainError(f"index {index} is outside [0, {d**n})")
    index = int(index)
    digits = []
    for _ in range(n):
        index, r = divmod(index, d)
        digits.append(r)
    return tuple(reversed(digits))


def all_digit_strings(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """Iterate all length-``n`` digit strings in flat-index order."""
    check_dimension(d)
    if n < 1:
        raise DomainError(f"digit count must be a positive integer, got {n!r}")
    return product(range(d), repeat=n)


def basis_state(digits: Sequence[int], d: int) -> Statevector:
    """Computational basis state |digits> as a dense statevector."""
    digits = validate_digits(digits, d)
    size = d ** len(digits)
    check_capacity(size)
    amps = np.zeros(size, dtype=np.complex128)
    amps[encode_digits(digits, d)] = 1.0
    return Statevector(amps, d, len(digits))


def tensor(a: Statevector, b: Statevector) -> Statevector:
    """Tensor product: ``a``'s qudits become positions 1..k_a, ``b``'s follow."""
    if a.d != b.d:
        raise DomainError(f"cannot tensor states of dimension {a.d} and {b.d}")
    check_capacity(a.size * b.size)
    # np.kron realizes exactly the big-endian composite index i_a * size_b + i_b.
    return Statevector(np.kron(a.amplitudes, b.amplitudes), a.d, a.qudit_count + b.qudit_count)


def inner_product(a: Statevector, b: Statevector) -> complex:
    """Complex inner product <a|b>, conjugating ``a``."""
    if a.d != b.d or a.qudit_count != b.qudit_count:
        raise DomainError(
            "inner product needs matching registers, got "
            f"(d={a.d}, k={a.qudit_count}) and (d={b.d}, k={b.qudit_count})"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))
