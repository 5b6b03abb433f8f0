"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RoughCayleyError(Exception):
    """Base class for all errors raised by this package."""


class InvalidOrderError(RoughCayleyError, ValueError):
    pass


class GroupAxiomError(RoughCayleyError, ValueError):
    """A supplied operation table is not a group.

    ``axiom`` names the failing check, ``witness`` carries the offending
    indices (a row/column, an element, or an ``(a, b, c)`` triple).
    """

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class UnknownElementError(RoughCayleyError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class PreconditionError(RoughCayleyError, ValueError):
    pass


class ConnectionSetError(RoughCayleyError, ValueError):
    pass


class GraphError(RoughCayleyError, ValueError):
    pass
