"""Interactive configuration session over a parsed model.

A session tracks the user's enforcements, runs the active inference
engine after every change, and exposes a status per option. Clicking an
option cycles it unenforced -> enforced true -> enforced false ->
unenforced. Saving requires every option to have a value and the result
to actually satisfy the model formula.
"""

from __future__ import annotations

import enum

from .errors import (
    ConflictingConfigurationError,
    IncompleteConfigurationError,
    UnknownOptionError,
)
from .formula import Assignment, Formula, encode_model, evaluate
from .heuristic import DEFAULT_CLAUSE_CAP, infer_heuristic
from .inference import COMPLETE, ENGINES, HEURISTIC, InferenceResult, Verdict
from .parser import DepsModel
from .solver import DEFAULT_NODE_BUDGET, CompleteSolver, Valuation


class NodeStatus(enum.Enum):
    ENFORCED_TRUE = "enforced_true"
    ENFORCED_FALSE = "enforced_false"
    IMPLIED_TRUE = "implied_true"
    IMPLIED_FALSE = "implied_false"
    NORMAL = "normal"


def valuation_text(options, valuation: Valuation) -> str:
    """`<option>=0|1` lines in declaration order, the saved-file format."""
    return "".join(f"{opt}={int(valuation[opt])}\n" for opt in options)


class Session:
    def __init__(
        self,
        model: DepsModel,
        engine: str = COMPLETE,
        node_budget: int = DEFAULT_NODE_BUDGET,
        clause_cap: int = DEFAULT_CLAUSE_CAP,
    ):
        if engine not in ENGINES:
            raise ValueError(f"unknown engine '{engine}'")
        self.model = model
        self.formula: Formula = encode_model(model)
        self.engine = engine
        self.clause_cap = clause_cap
        self._solver = CompleteSolver(self.formula, model.options, node_budget)
        self._enforced: dict[str, bool] = {}
        self.result: InferenceResult = InferenceResult(
            frozenset(), frozenset(), Verdict.UNKNOWN
        )
        self._recompute()

    # ---- state -------------------------------------------------------

    def assignment(self) -> Assignment:
        return Assignment(
            frozenset(o for o, v in self._enforced.items() if v),
            frozenset(o for o, v in self._enforced.items() if not v),
        )

    @property
    def conflict(self) -> bool:
        return self.result.verdict is Verdict.UNSATISFIABLE

    def status_of(self, option: str) -> NodeStatus:
        if option not in self.model.options:
            raise UnknownOptionError(option)
        enforced = self._enforced.get(option)
        if enforced is True:
            return NodeStatus.ENFORCED_TRUE
        if enforced is False:
            return NodeStatus.ENFORCED_FALSE
        if option in self.result.implied_true:
            return NodeStatus.IMPLIED_TRUE
        if option in self.result.implied_false:
            return NodeStatus.IMPLIED_FALSE
        return NodeStatus.NORMAL

    def statuses(self) -> dict[str, NodeStatus]:
        return {opt: self.status_of(opt) for opt in self.model.options}

    def is_complete(self) -> bool:
        return not self.conflict and all(
            self.status_of(o) is not NodeStatus.NORMAL for o in self.model.options
        )

    def _recompute(self) -> None:
        assignment = self.assignment()
        if self.engine == COMPLETE:
            self.result = self._solver.forced_sets(assignment)
        else:
            self.result = infer_heuristic(self.formula, assignment, self.clause_cap)

    # ---- mutations ---------------------------------------------------

    def click(self, option: str) -> None:
        if option not in self.model.options:
            raise UnknownOptionError(option)
        current = self._enforced.get(option)
        if current is None:
            self._enforced[option] = True
        elif current is True:
            self._enforced[option] = False
        else:
            del self._enforced[option]
        self._recompute()

    def reset(self) -> None:
        self._enforced.clear()
        self._recompute()

    def set_engine(self, engine: str) -> None:
        if engine not in ENGINES:
            raise ValueError(f"unknown engine '{engine}'")
        self.engine = engine
        self._recompute()

    # ---- saving ------------------------------------------------------

    def save_valuation(self) -> Valuation:
        """The determined configuration; raises unless complete and valid."""
        if self.conflict:
            raise ConflictingConfigurationError("enforcements contradict the model")
        valuation: Valuation = {}
        missing: list[str] = []
        for opt in self.model.options:
            status = self.status_of(opt)
            if status is NodeStatus.NORMAL:
                missing.append(opt)
            else:
                valuation[opt] = status in (
                    NodeStatus.ENFORCED_TRUE,
                    NodeStatus.IMPLIED_TRUE,
                )
        if missing:
            raise IncompleteConfigurationError(missing)
        if not evaluate(self.formula, valuation):
            raise ConflictingConfigurationError(
                "determined values do not satisfy the model"
            )
        return valuation

    def save_text(self) -> str:
        return valuation_text(self.model.options, self.save_valuation())
