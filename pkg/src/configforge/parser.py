"""Parser for the deps dependency language.

A deps file is a sequence of statements separated by newlines or
semicolons; `#` starts a comment running to end of line. Statements:

    head -> dep1 & dep2 & dep3     dependency
    iface : impl1 | impl2          interface with implementations
    owner.key = value value        property attached to an option

Option ids match [a-z][a-z0-9_]* and may carry a single trailing `?`.
An id `foo?` declares a yes/no choice: the statement
`foo? : foo_yes | foo_no` is added automatically (once), and `foo_yes`
and `foo_no` become ordinary options.

Duplicate dependency statements are dropped silently. A repeated
property line for the same owner and key appends its values to the
first. Interface statements are subject to stricter checks: one
interface statement per option, no self reference, no option
implementing two interfaces, at least one implementation.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import (
    DepsSyntaxError,
    DuplicateInterfaceError,
    EmptyImplListError,
    MultiInterfaceMembershipError,
    SelfReferenceError,
)

_ID_RE = re.compile(r"[a-z][a-z0-9_]*\??")
_KEY_RE = re.compile(r"[a-z][a-z0-9_]*")


def is_option_id(text: str) -> bool:
    return _ID_RE.fullmatch(text) is not None


def sanitized_name(option: str) -> str:
    """C-identifier-safe alias of an option id: the trailing `?` stripped."""
    return option[:-1] if option.endswith("?") else option


@dataclass(frozen=True)
class Dep:
    head: str
    body: tuple[str, ...]


@dataclass(frozen=True)
class Iface:
    iface: str
    impls: tuple[str, ...]


@dataclass(frozen=True)
class Prop:
    owner: str
    key: str
    values: tuple[str, ...]


Statement = Union[Dep, Iface, Prop]


@dataclass(frozen=True)
class DepsModel:
    """Parsed deps file: option ids in declaration order plus statements.

    `interface_of` maps an implementation to the single interface it
    belongs to.
    """

    options: tuple[str, ...]
    statements: tuple[Statement, ...]
    interface_of: dict[str, str]

    def deps(self) -> Iterator[Dep]:
        return (s for s in self.statements if isinstance(s, Dep))

    def ifaces(self) -> Iterator[Iface]:
        return (s for s in self.statements if isinstance(s, Iface))

    def props(self) -> Iterator[Prop]:
        return (s for s in self.statements if isinstance(s, Prop))

    def is_interface(self, option: str) -> bool:
        return any(s.iface == option for s in self.ifaces())

    def impls_of(self, iface: str) -> tuple[str, ...]:
        for s in self.ifaces():
            if s.iface == iface:
                return s.impls
        return ()

    def has_option(self, option: str) -> bool:
        return option in self.options

    def property_keys(self) -> list[str]:
        return sorted({p.key for p in self.props()})


class _Builder:
    def __init__(self) -> None:
        self.options: dict[str, None] = {}
        self.statements: list[Statement] = []
        self.interface_of: dict[str, str] = {}
        self.iface_seen: set[str] = set()
        self.auto_pending: dict[str, None] = {}
        self.auto_done: set[str] = set()
        self.dep_seen: set[tuple[str, tuple[str, ...]]] = set()
        self.prop_index: dict[tuple[str, str], int] = {}

    def intern_option(self, name: str) -> str:
        name = sys.intern(name)
        if name not in self.options:
            self.options[name] = None
            if name.endswith("?"):
                base = name[:-1]
                self.intern_option(base + "_yes")
                self.intern_option(base + "_no")
                self.auto_pending[name] = None
        return name

    def add_dep(self, head: str, body: list[str]) -> None:
        key = (head, tuple(body))
        if key in self.dep_seen:
            return
        self.dep_seen.add(key)
        self.statements.append(Dep(head, tuple(body)))

    def add_iface(self, iface: str, impls: list[str]) -> None:
        impls_t = tuple(impls)
        auto_form = iface.endswith("?") and sorted(impls_t) == sorted(
            (iface[:-1] + "_yes", iface[:-1] + "_no")
        )
        if iface in self.iface_seen:
            if auto_form and iface in self.auto_done:
                return  # re-stating the automatic yes/no interface is harmless
            raise DuplicateInterfaceError(iface)
        if iface.endswith("?") and not auto_form:
            raise DuplicateInterfaceError(
                iface, "conflicts with the automatic yes/no interface"
            )
        if not impls_t:
            raise EmptyImplListError(iface)
        if iface in impls_t:
            raise SelfReferenceError(iface)
        for impl in impls_t:
            if impl in self.interface_of:
                raise MultiInterfaceMembershipError(
                    impl, self.interface_of[impl], iface
                )
            self.interface_of[impl] = iface
        self.iface_seen.add(iface)
        self.statements.append(Iface(iface, impls_t))
        if auto_form:
            self.auto_pending.pop(iface, None)
            self.auto_done.add(iface)

    def add_prop(self, owner: str, key: str, values: list[str]) -> None:
        slot = self.prop_index.get((owner, key))
        if slot is None:
            self.prop_index[(owner, key)] = len(self.statements)
            self.statements.append(Prop(owner, key, tuple(values)))
        else:
            old = self.statements[slot]
            assert isinstance(old, Prop)
            self.statements[slot] = Prop(owner, key, old.values + tuple(values))

    def finish(self) -> DepsModel:
        for qid in list(self.auto_pending):
            base = qid[:-1]
            self.add_iface(qid, [base + "_yes", base + "_no"])
        return DepsModel(
            tuple(self.options), tuple(self.statements), dict(self.interface_of)
        )


class _Scanner:
    """One statement's worth of text, with 1-based error locations."""

    def __init__(self, text: str, line: int, col0: int):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def fail(self, message: str, pos: int | None = None) -> None:
        at = self.pos if pos is None else pos
        raise DepsSyntaxError(message, self.line, self.col0 + at + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def read_id(self, what: str = "option id") -> str:
        m = _ID_RE.match(self.text, self.pos)
        if m is None:
            self.fail(f"expected {what}")
        assert m is not None
        self.pos = m.end()
        return m.group()

    def read_key(self) -> str:
        m = _KEY_RE.match(self.text, self.pos)
        if m is None:
            self.fail("expected property key")
        assert m is not None
        self.pos = m.end()
        return m.group()


def _iter_statements(source: str) -> Iterator[tuple[str, int, int]]:
    for line_no, raw in enumerate(source.splitlines(), start=1):
        cut = raw.find("#")
        line = raw if cut < 0 else raw[:cut]
        start = 0
        while True:
            semi = line.find(";", start)
            end = len(line) if semi < 0 else semi
            yield line[start:end], line_no, start
            if semi < 0:
                break
            start = semi + 1


def _parse_statement(scan: _Scanner, builder: _Builder) -> None:
    scan.skip_ws()
    if scan.at_end():
        return
    head = builder.intern_option(scan.read_id())
    scan.skip_ws()
    if scan.text.startswith("->", scan.pos):
        scan.pos += 2
        body: list[str] = []
        while True:
            scan.skip_ws()
            body.append(builder.intern_option(scan.read_id()))
            scan.skip_ws()
            if scan.peek() == "&":
                scan.pos += 1
                continue
            if scan.at_end():
                break
            scan.fail("expected '&' or end of statement")
        builder.add_dep(head, body)
    elif scan.peek() == ":":
        scan.pos += 1
        scan.skip_ws()
        if scan.at_end():
            raise EmptyImplListError(head)
        impls: list[str] = []
        while True:
            scan.skip_ws()
            impls.append(builder.intern_option(scan.read_id("implementation id")))
            scan.skip_ws()
            if scan.peek() == "|":
                scan.pos += 1
                continue
            if scan.at_end():
                break
            scan.fail("expected '|' or end of statement")
        builder.add_iface(head, impls)
    elif scan.peek() == ".":
        scan.pos += 1
        key = scan.read_key()
        scan.skip_ws()
        if scan.peek() != "=":
            scan.fail("expected '='")
        scan.pos += 1
        values = scan.text[scan.pos :].split()
        builder.add_prop(head, key, values)
    elif scan.at_end():
        scan.fail("expected '->', ':' or '.' after option id")
    else:
        scan.fail("expected '->', ':' or '.'")


def parse_deps(source: str) -> DepsModel:
    """Parse deps text into a model, expanding `?` ids into yes/no choices."""
    builder = _Builder()
    for chunk, line_no, col0 in _iter_statements(source):
        _parse_statement(_Scanner(chunk, line_no, col0), builder)
    return builder.finish()


def parse_property_line(line: str) -> Prop:
    """Parse a single `owner.key = values` line in isolation."""
    scan = _Scanner(line, 1, 0)
    scan.skip_ws()
    owner = scan.read_id()
    scan.skip_ws()
    if scan.peek() != ".":
        scan.fail("expected '.' after owner id")
    scan.pos += 1
    key = scan.read_key()
    scan.skip_ws()
    if scan.peek() != "=":
        scan.fail("expected '='")
    scan.pos += 1
    return Prop(owner, key, tuple(scan.text[scan.pos :].split()))


def format_statement(statement: Statement) -> str:
    if isinstance(statement, Dep):
        return f"{statement.head} -> " + " & ".join(statement.body)
    if isinstance(statement, Iface):
        return f"{statement.iface} : " + " | ".join(statement.impls)
    if statement.values:
        return f"{statement.owner}.{statement.key} = " + " ".join(statement.values)
    return f"{statement.owner}.{statement.key} ="


def format_model(model: DepsModel) -> str:
    """Pretty-print a model; re-parsing the output reproduces the model."""
    return "".join(format_statement(s) + "\n" for s in model.statements)
