"""Enumeration size guards.

Guards keep every enumeration at desk scale: a backtracking walk may touch
at most ``guard_states()`` candidate states, and a fully materialized vertex
set may hold at most ``guard_vertices()`` vertices. The POLYRED_GUARD
environment variable overrides the state guard (the vertex guard scales
along with it).
"""

from __future__ import annotations

import os

from .errors import ResourceGuardError

DEFAULT_STATE_GUARD = 10**7
DEFAULT_VERTEX_GUARD = 200_000


def guard_states() -> int:
    raw = os.environ.get("POLYRED_GUARD")
    if raw:
        return max(1, int(raw))
    return DEFAULT_STATE_GUARD


def guard_vertices() -> int:
    raw = os.environ.get("POLYRED_GUARD")
    if raw:
        return max(1, int(raw) // 50)
    return DEFAULT_VERTEX_GUARD


class StateCounter:
    """Counts visited search states and raises once the guard is hit."""

    __slots__ = ("count", "limit", "what")

    def __init__(self, what: str, limit: int | None = None):
        self.count = 0
        self.limit = guard_states() if limit is None else limit
        self.what = what

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.count > self.limit:
            raise ResourceGuardError(
                f"{self.what}: exceeded guard of {self.limit} candidate states"
            )


def check_vertex_budget(what: str, count: int) -> None:
    limit = guard_vertices()
    if count > limit:
        shown = str(count) if count < 10**9 else f"about 10^{len(str(count)) - 1}"
        raise ResourceGuardError(f"{what}: {shown} vertices exceeds guard of {limit}")
