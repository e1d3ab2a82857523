"""Amplitude budget guarding against accidentally huge dense registers.

The budget is the maximum number of complex amplitudes a single register or
operator column may hold.  It defaults to 2**24 and can be overridden either
through the ``QUDITBV_AMPLITUDE_BUDGET`` environment variable or
programmatically with :func:`set_amplitude_budget`.
"""

from __future__ import annotations

import os

from .errors import CapacityError

DEFAULT_AMPLITUDE_BUDGET = 1 << 24
BUDGET_ENV_VAR = "QUDITBV_AMPLITUDE_BUDGET"

_override: int | None = None


def amplitude_budget() -> int:
    """Current maximum number of amplitudes a dense register may hold."""
    if _override is not None:
        return _override
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError as exc:
            raise ValueError(
                f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}"
            ) from exc
        if value < 2:
            raise ValueError(f"{BUDGET_ENV_VAR} must be at least 2, got {value}")
        return value
    return DEFAULT_AMPLITUDE_BUDGET


def set_amplitude_budget(value: int | None) -> None:
    """Override the budget for this process; ``None`` restores the default."""
    global _override
    if value is not None:
        value = int(value)
        if value < 2:
            raise ValueError(f"amplitude budget must be at least 2, got {value}")
    _override = value


def check_capacity(entries: int, what: str = "register") -> None:
    """Raise :class:`CapacityError` if ``entries`` amplitudes exceed the budget."""
    budget = amplitude_budget()
    if entries > budget:
        raise CapacityError(
            f"{what} would need {entries} amplitudes, exceeding the budget of {budget}"
        )
