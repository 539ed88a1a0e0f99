"""Sound-but-incomplete inference engine.

The engine rewrites the formula to a fixpoint with local rules, converts
the result to CNF by distributing disjunctions over conjunctions, reads
off unit clauses, substitutes them back as constants, and repeats until
no new unit appears.

Rewrite rules, applied within each AND/OR node:

    x & 1 = x          x | 1 = 1
    x & 0 = 0          x | 0 = x
    x & f(x,..)  = x & f(1,..)      !x & f(x,..) = !x & f(0,..)
    x | f(x,..)  = x | f(0,..)      !x | f(x,..) = !x | f(1,..)

where f(x,..) is any sibling subtree mentioning x. Siblings are
processed left to right and literal siblings are substituted into
compound siblings. Every rewrite preserves logical equivalence.

The engine can prove unsatisfiability (the formula collapses to false)
but never satisfiability; any non-collapsed outcome is `UNKNOWN`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import ResourceLimitExceededError
from .formula import (
    FALSE,
    TRUE,
    And,
    Assignment,
    Const,
    Formula,
    Lit,
    Or,
    apply_assignment,
    conj,
    disj,
)
from .inference import InferenceResult, Verdict

DEFAULT_CLAUSE_CAP = 1_000_000

Literal = tuple[str, bool]
Clause = frozenset


@dataclass(frozen=True)
class CnfForm:
    """Clause set produced by `to_cnf`.

    `constant` is set when the formula collapsed: True for a tautology
    (no clauses survive), False for a contradiction (an empty clause).
    """

    clauses: tuple[Clause, ...] = ()
    constant: bool | None = None

    def unit_literals(self) -> list[Literal]:
        return [next(iter(c)) for c in self.clauses if len(c) == 1]


def substitute(f: Formula, env: Mapping[str, bool]) -> Formula:
    """Replace options in `env` by constants and fold the result."""
    if isinstance(f, Const):
        return f
    if isinstance(f, Lit):
        if f.option in env:
            return TRUE if env[f.option] == f.positive else FALSE
        return f
    kids = [substitute(c, env) for c in f.children]
    return conj(kids) if isinstance(f, And) else disj(kids)


def _simplify_pass(f: Formula) -> Formula:
    if isinstance(f, (Const, Lit)):
        return f
    is_and = isinstance(f, And)
    children = [_simplify_pass(c) for c in f.children]
    # Literal children pin a value for their option inside every sibling:
    # in an AND a literal must hold, in an OR the rest only matters when
    # the literal fails.
    env: dict[str, bool] = {}
    for child in children:
        if isinstance(child, Lit):
            implied = child.positive if is_and else not child.positive
            prev = env.get(child.option)
            if prev is not None and prev != implied:
                return FALSE if is_and else TRUE
            env[child.option] = implied
    rebuilt: list[Formula] = []
    seen_lits: set[str] = set()
    for child in children:
        if isinstance(child, Lit):
            if child.option in seen_lits:
                continue
            seen_lits.add(child.option)
            rebuilt.append(child)
        elif env and not isinstance(child, Const):
            rebuilt.append(substitute(child, env))
        else:
            rebuilt.append(child)
    return conj(rebuilt) if is_and else disj(rebuilt)


def simplify(f: Formula) -> Formula:
    """Apply the rewrite rules until the tree stops changing."""
    while True:
        g = _simplify_pass(f)
        if g == f:
            return g
        f = g


def _tautological(clause: Clause) -> bool:
    return any((name, not pos) in clause for name, pos in clause)


def _cnf_clauses(f: Formula, cap: int) -> list[Clause]:
    # Clause-list semantics: [] is true, a member frozenset() is false.
    if isinstance(f, Const):
        return [] if f.value else [frozenset()]
    if isinstance(f, Lit):
        return [frozenset([(f.option, f.positive)])]
    if isinstance(f, And):
        out: list[Clause] = []
        seen: set[Clause] = set()
        for child in f.children:
            for clause in _cnf_clauses(child, cap):
                if not clause:
                    return [frozenset()]
                if clause in seen:
                    continue
                seen.add(clause)
                out.append(clause)
                if len(out) > cap:
                    raise ResourceLimitExceededError(
                        f"CNF clause count exceeded {cap}"
                    )
        return out
    # Or: distribute the clause sets of the children.
    acc: list[Clause] = [frozenset()]
    for child in f.children:
        child_clauses = _cnf_clauses(child, cap)
        if not child_clauses:
            return []
        merged: list[Clause] = []
        seen = set()
        for left in acc:
            for right in child_clauses:
                clause = left | right
                if _tautological(clause) or clause in seen:
                    continue
                seen.add(clause)
                merged.append(clause)
                if len(merged) > cap:
                    raise ResourceLimitExceededError(
                        f"CNF clause count exceeded {cap}"
                    )
        acc = merged
        if not acc:
            return []
    return acc


def to_cnf(f: Formula, clause_cap: int = DEFAULT_CLAUSE_CAP) -> CnfForm:
    """Distribute to CNF, dropping tautologies and duplicate clauses."""
    clauses = _cnf_clauses(f, clause_cap)
    if not clauses:
        return CnfForm((), True)
    if any(not c for c in clauses):
        return CnfForm((), False)
    return CnfForm(tuple(clauses), None)


def inference_rounds(
    f: Formula, assignment: Assignment, clause_cap: int = DEFAULT_CLAUSE_CAP
) -> Iterator[tuple[dict[str, bool], Verdict | None]]:
    """Yield the accumulated unit set after each round.

    The final yield carries the verdict; intermediate yields carry None.
    Unit sets only grow, and each round adds at least one unit, so there
    are at most as many rounds as options.
    """
    g = apply_assignment(f, assignment)
    units: dict[str, bool] = {}
    while True:
        g = simplify(g)
        if g == FALSE:
            yield dict(units), Verdict.UNSATISFIABLE
            return
        if g == TRUE:
            yield dict(units), Verdict.UNKNOWN
            return
        try:
            cnf = to_cnf(g, clause_cap)
        except ResourceLimitExceededError:
            yield dict(units), Verdict.UNKNOWN
            return
        if cnf.constant is False:
            yield dict(units), Verdict.UNSATISFIABLE
            return
        if cnf.constant is True:
            yield dict(units), Verdict.UNKNOWN
            return
        fresh: dict[str, bool] = {}
        for name, positive in cnf.unit_literals():
            known = units.get(name, fresh.get(name, positive))
            if known != positive:
                yield dict(units) | fresh, Verdict.UNSATISFIABLE
                return
            if name not in units:
                fresh[name] = positive
        if not fresh:
            yield dict(units), Verdict.UNKNOWN
            return
        units.update(fresh)
        yield dict(units), None
        g = substitute(g, fresh)


def infer_heuristic(
    f: Formula, assignment: Assignment, clause_cap: int = DEFAULT_CLAUSE_CAP
) -> InferenceResult:
    """Run the rewrite/distribute/extract loop and report deduced options."""
    units: dict[str, bool] = {}
    verdict: Verdict = Verdict.UNKNOWN
    for units, round_verdict in inference_rounds(f, assignment, clause_cap):
        if round_verdict is not None:
            verdict = round_verdict
    enforced = assignment.options()
    return InferenceResult(
        frozenset(n for n, v in units.items() if v and n not in enforced),
        frozenset(n for n, v in units.items() if not v and n not in enforced),
        verdict,
    )
