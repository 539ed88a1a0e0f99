"""Shared result types for the two inference engines."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Verdict(enum.Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"
    UNKNOWN = "unknown"


HEURISTIC = "heuristic"
COMPLETE = "complete"
ENGINES = (HEURISTIC, COMPLETE)


@dataclass(frozen=True)
class InferenceResult:
    """Options deduced from a formula under a partial assignment.

    The reported sets never include the options the user forced; those
    are known already.
    """

    implied_true: frozenset[str]
    implied_false: frozenset[str]
    verdict: Verdict
