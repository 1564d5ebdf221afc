"""Enumeration caps, overridable through the REFLECT_BRANCH_CAP variable."""

from __future__ import annotations

import os

ENV_VAR = "REFLECT_BRANCH_CAP"

DEFAULT_GROUP_CAP = 5000
# Admits the default law bounds (n <= 10 at alphabet 2, n <= 8 at alphabet 3,
# up to two orbits) measured in (system, rotation) pairs.
DEFAULT_LAW_SPACE_CAP = 5 * 10**8


class CapExceeded(RuntimeError):
    """Requested enumeration is larger than the configured cap."""


def _env_cap() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def group_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return _env_cap() or DEFAULT_GROUP_CAP


def law_space_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return _env_cap() or DEFAULT_LAW_SPACE_CAP
