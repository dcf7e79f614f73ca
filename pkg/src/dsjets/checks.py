"""Check records shared by the verification routines and the CLI report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Check:
    name: str
    computed: object
    expected: object = None
    passed: bool = True
    anchor: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "expected": to_jsonable(self.expected),
            "computed": to_jsonable(self.computed),
            "pass": bool(self.passed),
        }


def check_equal(name: str, computed, expected, anchor: str = "") -> Check:
    return Check(name, computed, expected, computed == expected, anchor)


class VerificationError(AssertionError):
    """A symbolic or numeric identity failed; ``checks`` holds the failing records."""

    def __init__(self, checks):
        self.checks = list(checks)
        names = ", ".join(c.name for c in self.checks)
        super().__init__(f"verification failed: {names}")


def require(checks):
    """Raise :class:`VerificationError` if any check failed; otherwise return the checks."""
    failed = [c for c in checks if not c.passed]
    if failed:
        raise VerificationError(failed)
    return checks


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def to_jsonable(value):
    """Rationals become ``"p/q"`` strings; containers are converted recursively."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_jsonable"):
        return value.to_jsonable()
    return str(value)
