"""Complete inference engine: exact satisfiability, forced values, enumeration.

The formula is compiled once to CNF structurally (one auxiliary variable
per AND/OR node), then solved with a backtracking search plus unit
propagation. Branching follows option declaration order, false first,
which makes witnesses and enumeration order reproducible. Auxiliary
variables are functionally determined by the options, so the search
never branches on them and they are projected out of every result.

An option is forced true under an assignment when the formula plus the
assignment plus the option's negation is unsatisfiable, and forced false
symmetrically. `forced_sets` answers those queries per option, reusing
every witness found so far to skip queries it already answers.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import ResourceLimitExceededError, UnknownOptionError
from .formula import (
    Assignment,
    Const,
    EMPTY_ASSIGNMENT,
    Formula,
    Lit,
    And,
    Or,
    conj,
    disj,
    formula_options,
)
from .inference import InferenceResult, Verdict

DEFAULT_NODE_BUDGET = 10_000_000

Valuation = dict[str, bool]


def _normalize(f: Formula) -> Formula:
    """Rebuild with the folding constructors so constants sit at the root."""
    if isinstance(f, (Const, Lit)):
        return f
    kids = [_normalize(c) for c in f.children]
    return conj(kids) if isinstance(f, And) else disj(kids)


class CompleteSolver:
    def __init__(
        self,
        formula: Formula,
        options: Sequence[str] | None = None,
        node_budget: int = DEFAULT_NODE_BUDGET,
    ):
        self.options: list[str] = (
            list(options) if options is not None else formula_options(formula)
        )
        self.node_budget = node_budget
        self._var_of = {opt: i for i, opt in enumerate(self.options)}
        self._clauses: list[list[int]] = []
        self._trivial: bool | None = None

        root = _normalize(formula)
        extra = [o for o in formula_options(root) if o not in self._var_of]
        if extra:
            raise UnknownOptionError(extra[0])
        if isinstance(root, Const):
            self._trivial = root.value
            self._nvars = len(self.options)
        else:
            self._nvars = len(self.options)
            if isinstance(root, And):
                for child in root.children:
                    self._clauses.append([self._compile(child)])
            else:
                self._clauses.append([self._compile(root)])
        self._occ_pos: list[list[int]] = [[] for _ in range(self._nvars)]
        self._occ_neg: list[list[int]] = [[] for _ in range(self._nvars)]
        for ci, clause in enumerate(self._clauses):
            for lit in clause:
                if lit > 0:
                    self._occ_pos[lit - 1].append(ci)
                else:
                    self._occ_neg[-lit - 1].append(ci)
        # 0 = unassigned, 1 = true, -1 = false
        self._val = [0] * self._nvars
        self._decisions = 0

    # ---- compilation -------------------------------------------------

    def _compile(self, node: Formula) -> int:
        if isinstance(node, Lit):
            v = self._var_of[node.option] + 1
            return v if node.positive else -v
        assert isinstance(node, (And, Or)), "constants are folded before compile"
        kids = [self._compile(c) for c in node.children]
        gate = self._nvars + 1
        self._nvars += 1
        if isinstance(node, And):
            for k in kids:
                self._clauses.append([-gate, k])
            self._clauses.append([gate] + [-k for k in kids])
        else:
            for k in kids:
                self._clauses.append([gate, -k])
            self._clauses.append([-gate] + kids)
        return gate

    # ---- search core -------------------------------------------------

    def _propagate(self, pending: list[int], trail: list[int]) -> bool:
        i = 0
        while i < len(pending):
            lit = pending[i]
            i += 1
            v = abs(lit) - 1
            want = 1 if lit > 0 else -1
            cur = self._val[v]
            if cur != 0:
                if cur != want:
                    return False
                continue
            self._val[v] = want
            trail.append(v)
            watch = self._occ_neg[v] if want > 0 else self._occ_pos[v]
            for ci in watch:
                clause = self._clauses[ci]
                unassigned_lit = 0
                unassigned = 0
                satisfied = False
                for l in clause:
                    s = self._val[abs(l) - 1]
                    if s == 0:
                        unassigned += 1
                        unassigned_lit = l
                    elif (s > 0) == (l > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if unassigned == 0:
                    return False
                if unassigned == 1:
                    pending.append(unassigned_lit)
        return True

    def _undo(self, trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            self._val[trail.pop()] = 0

    def _dfs(self, idx: int, trail: list[int], on_model: Callable[[], bool]) -> bool:
        n = len(self.options)
        while idx < n and self._val[idx] != 0:
            idx += 1
        if idx == n:
            return on_model()
        for want in (-1, 1):
            self._decisions += 1
            if self._decisions > self.node_budget:
                raise ResourceLimitExceededError(
                    f"search node budget exceeded ({self.node_budget})"
                )
            mark = len(trail)
            lit = (idx + 1) * want
            if self._propagate([lit], trail):
                if self._dfs(idx, trail, on_model):
                    self._undo(trail, mark)
                    return True
            self._undo(trail, mark)
        return False

    def _assumption_lits(self, assignment: Assignment) -> list[int]:
        lits = []
        for opt in sorted(assignment.forced_true):
            if opt not in self._var_of:
                raise UnknownOptionError(opt)
            lits.append(self._var_of[opt] + 1)
        for opt in sorted(assignment.forced_false):
            if opt not in self._var_of:
                raise UnknownOptionError(opt)
            lits.append(-(self._var_of[opt] + 1))
        return lits

    def _extract(self) -> Valuation:
        return {opt: self._val[i] > 0 for i, opt in enumerate(self.options)}

    def _search(
        self, assignment: Assignment, on_model: Callable[[], bool]
    ) -> None:
        """Run the DFS under an assignment; `on_model` returns True to stop."""
        assumptions = self._assumption_lits(assignment)
        if self._trivial is False:
            return
        self._val = [0] * self._nvars
        self._decisions = 0
        trail: list[int] = []
        if self._propagate(assumptions, trail):
            self._dfs(0, trail, on_model)
        self._val = [0] * self._nvars

    # ---- public operations -------------------------------------------

    def satisfiable(self, assignment: Assignment = EMPTY_ASSIGNMENT) -> Valuation | None:
        """A witness valuation extending the assignment, or None."""
        found: list[Valuation] = []

        def grab() -> bool:
            found.append(self._extract())
            return True

        self._search(assignment, grab)
        return found[0] if found else None

    def forced_sets(self, assignment: Assignment = EMPTY_ASSIGNMENT) -> InferenceResult:
        """Options whose value is the same in every satisfying extension."""
        base = self.satisfiable(assignment)
        if base is None:
            return InferenceResult(frozenset(), frozenset(), Verdict.UNSATISFIABLE)
        witnesses = [base]
        forced_true: set[str] = set()
        forced_false: set[str] = set()
        enforced = assignment.options()
        for opt in self.options:
            if opt in enforced:
                continue
            if not any(w[opt] for w in witnesses):
                w = self.satisfiable(
                    Assignment(assignment.forced_true | {opt}, assignment.forced_false)
                )
                if w is None:
                    forced_false.add(opt)
                else:
                    witnesses.append(w)
            if opt in forced_false:
                continue
            if not any(not w[opt] for w in witnesses):
                w = self.satisfiable(
                    Assignment(assignment.forced_true, assignment.forced_false | {opt})
                )
                if w is None:
                    forced_true.add(opt)
                else:
                    witnesses.append(w)
        return InferenceResult(
            frozenset(forced_true), frozenset(forced_false), Verdict.SATISFIABLE
        )

    def enumerate(
        self, assignment: Assignment = EMPTY_ASSIGNMENT, limit: int | None = None
    ) -> list[Valuation]:
        """Satisfying valuations in lexicographic declaration-bit order."""
        out: list[Valuation] = []

        def grab() -> bool:
            out.append(self._extract())
            return limit is not None and len(out) >= limit

        self._search(assignment, grab)
        return out


def is_satisfiable(
    f: Formula,
    assignment: Assignment = EMPTY_ASSIGNMENT,
    options: Sequence[str] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[bool, Valuation | None]:
    witness = CompleteSolver(f, options, node_budget).satisfiable(assignment)
    return witness is not None, witness


def forced_sets(
    f: Formula,
    assignment: Assignment = EMPTY_ASSIGNMENT,
    options: Sequence[str] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> InferenceResult:
    return CompleteSolver(f, options, node_budget).forced_sets(assignment)


def enumerate_configurations(
    f: Formula,
    assignment: Assignment = EMPTY_ASSIGNMENT,
    limit: int | None = None,
    options: Sequence[str] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Valuation]:
    return CompleteSolver(f, options, node_budget).enumerate(assignment, limit)
