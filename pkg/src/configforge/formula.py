"""Propositional formulas over configuration options.

Formula trees are built from four node kinds: constants, literals, and
n-ary conjunction and disjunction. Negation exists only at the literal
level (`Lit.positive`). The `conj`/`disj` constructors flatten nested
nodes of the same kind and fold constants, so constructed trees carry
constants only at the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .parser import Dep, DepsModel, Iface, Statement


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Lit:
    option: str
    positive: bool = True

    def negated(self) -> "Lit":
        return Lit(self.option, not self.positive)


@dataclass(frozen=True)
class And:
    children: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    children: tuple["Formula", ...]


Formula = Union[Const, Lit, And, Or]

TRUE = Const(True)
FALSE = Const(False)


def conj(children: Iterable[Formula]) -> Formula:
    """n-ary AND: flattens nested ANDs, folds constants, unwraps singletons."""
    flat: list[Formula] = []
    for child in children:
        if isinstance(child, Const):
            if not child.value:
                return FALSE
            continue
        if isinstance(child, And):
            flat.extend(child.children)
        else:
            flat.append(child)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def disj(children: Iterable[Formula]) -> Formula:
    """n-ary OR: flattens nested ORs, folds constants, unwraps singletons."""
    flat: list[Formula] = []
    for child in children:
        if isinstance(child, Const):
            if child.value:
                return TRUE
            continue
        if isinstance(child, Or):
            flat.extend(child.children)
        else:
            flat.append(child)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def encode_dep(head: str, body: Iterable[str]) -> Formula:
    """`head -> b1 & .. & bn` means head cannot hold without its body."""
    return disj([Lit(head, False), conj([Lit(b) for b in body])])


def encode_iface(iface: str, impls: Iterable[str]) -> Formula:
    """Interface off with all implementations off, or on with exactly one."""
    impls = tuple(impls)
    none_chosen = conj([Lit(iface, False)] + [Lit(i, False) for i in impls])
    picks = []
    for k, chosen in enumerate(impls):
        rest = [Lit(other, False) for j, other in enumerate(impls) if j != k]
        picks.append(conj([Lit(chosen)] + rest))
    return disj([none_chosen, conj([Lit(iface), disj(picks)])])


def statement_formula(statement: Statement) -> Formula | None:
    """Encoding of one statement; property statements carry no constraint."""
    if isinstance(statement, Dep):
        return encode_dep(statement.head, statement.body)
    if isinstance(statement, Iface):
        return encode_iface(statement.iface, statement.impls)
    return None


def encode_model(model: DepsModel) -> Formula:
    parts = []
    for statement in model.statements:
        f = statement_formula(statement)
        if f is not None:
            parts.append(f)
    return conj(parts)


def evaluate(f: Formula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Lit):
        return valuation[f.option] == f.positive
    if isinstance(f, And):
        return all(evaluate(c, valuation) for c in f.children)
    return any(evaluate(c, valuation) for c in f.children)


def formula_options(f: Formula) -> list[str]:
    """Option ids mentioned in `f`, in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(node: Formula) -> None:
        if isinstance(node, Lit):
            seen.setdefault(node.option)
        elif isinstance(node, (And, Or)):
            for child in node.children:
                walk(child)

    walk(f)
    return list(seen)


def format_formula(f: Formula) -> str:
    """Debug rendering with `&`, `|`, `!`, `0`, `1`."""
    if isinstance(f, Const):
        return "1" if f.value else "0"
    if isinstance(f, Lit):
        return f.option if f.positive else "!" + f.option
    sep = " & " if isinstance(f, And) else " | "
    return "(" + sep.join(format_formula(c) for c in f.children) + ")"


@dataclass(frozen=True)
class Assignment:
    """A user's partial choice: disjoint sets of forced-true/false options."""

    forced_true: frozenset[str] = frozenset()
    forced_false: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "forced_true", frozenset(self.forced_true))
        object.__setattr__(self, "forced_false", frozenset(self.forced_false))
        both = self.forced_true & self.forced_false
        if both:
            raise ValueError("options forced both ways: " + ", ".join(sorted(both)))

    def value_of(self, option: str) -> bool | None:
        if option in self.forced_true:
            return True
        if option in self.forced_false:
            return False
        return None

    def options(self) -> frozenset[str]:
        return self.forced_true | self.forced_false

    def is_empty(self) -> bool:
        return not self.forced_true and not self.forced_false


EMPTY_ASSIGNMENT = Assignment()


def apply_assignment(f: Formula, assignment: Assignment) -> Formula:
    """Conjoin the forced options onto `f` as unit literals."""
    units: list[Formula] = [Lit(x) for x in sorted(assignment.forced_true)]
    units += [Lit(x, False) for x in sorted(assignment.forced_false)]
    return conj([f, *units])
