"""Exception types shared across the configuration toolchain."""

from __future__ import annotations


class ConfigForgeError(Exception):
    """Base class for every error raised by this package."""


class DepsSyntaxError(ConfigForgeError):
    """Malformed token or statement in a deps file."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class DuplicateInterfaceError(ConfigForgeError):
    """An option appears as the left side of two interface statements."""

    def __init__(self, option: str, detail: str = ""):
        text = f"option '{option}' already has an interface statement"
        if detail:
            text += f" ({detail})"
        super().__init__(text)
        self.option = option


class MultiInterfaceMembershipError(ConfigForgeError):
    """An option is listed as the implementation of more than one interface."""

    def __init__(self, option: str, first: str, second: str):
        if first == second:
            text = f"option '{option}' listed twice in interface '{first}'"
        else:
            text = (
                f"option '{option}' already implements '{first}', "
                f"cannot also implement '{second}'"
            )
        super().__init__(text)
        self.option = option
        self.first = first
        self.second = second


class SelfReferenceError(ConfigForgeError):
    """An interface names itself among its implementations."""

    def __init__(self, option: str):
        super().__init__(f"interface '{option}' cannot implement itself")
        self.option = option


class EmptyImplListError(ConfigForgeError):
    """An interface statement with no implementations."""

    def __init__(self, option: str):
        super().__init__(f"interface '{option}' has no implementations")
        self.option = option


class UnknownOptionError(ConfigForgeError):
    """Reference to an option id absent from the model."""

    def __init__(self, option: str):
        super().__init__(f"unknown option '{option}'")
        self.option = option


class IncompleteConfigurationError(ConfigForgeError):
    """A configuration cannot be saved while options remain undetermined."""

    def __init__(self, missing: list[str]):
        super().__init__("undetermined options: " + ", ".join(missing))
        self.missing = missing


class ConflictingConfigurationError(ConfigForgeError):
    """The current enforcements contradict the model."""


class IncompleteValuationError(ConfigForgeError):
    """A generator was handed a valuation that does not cover every option."""

    def __init__(self, missing: list[str]):
        super().__init__("valuation missing options: " + ", ".join(missing))
        self.missing = missing


class ResourceLimitExceededError(ConfigForgeError):
    """A computation outgrew its configured budget."""
