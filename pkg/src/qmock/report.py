"""Outcome of comparing two series to a fixed order."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import FirstMismatch, format_coeff, format_exponent, series_equal_up_to


@dataclass
class VerificationReport:
    id: str
    order: Fraction
    status: str  # "pass", "fail" or "error"
    first_mismatch: Optional[FirstMismatch] = None
    elapsed_ms: int = 0
    message: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail", "error"):
            raise ValueError("bad status %r" % self.status)
        if self.status == "fail" and self.first_mismatch is None:
            raise ValueError("a failing report needs a mismatch")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        fm = None
        if self.first_mismatch is not None:
            fm = {"exponent": str(self.first_mismatch.exponent),
                  "lhs": format_coeff(self.first_mismatch.lhs),
                  "rhs": format_coeff(self.first_mismatch.rhs)}
        return {"id": self.id, "status": self.status, "first_mismatch": fm,
                "elapsed_ms": int(self.elapsed_ms)}

    def line(self) -> str:
        """Deterministic one-line summary (no timing)."""
        text = "%-40s %s" % (self.id, self.status.upper())
        if self.first_mismatch is not None:
            fm = self.first_mismatch
            text += "  first mismatch at q^%s: lhs=%s rhs=%s" % (
                format_exponent(fm.exponent), format_coeff(fm.lhs), format_coeff(fm.rhs))
        elif self.message:
            text += "  " + self.message
        return text


def compare(ident: str, lhs_fn, rhs_fn, order) -> VerificationReport:
    """Evaluate both sides with callables ``order -> Series`` and compare."""
    from .errors import QMockError

    order = Fraction(order)
    start = time.perf_counter()
    try:
        lhs, rhs = lhs_fn(order), rhs_fn(order)
        mm = series_equal_up_to(lhs, rhs, order)
        status = "pass" if mm is None else "fail"
        msg = ""
    except (QMockError, ValueError, ZeroDivisionError) as exc:
        mm, status, msg = None, "error", "%s: %s" % (type(exc).__name__, exc)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(ident, order, status, mm, elapsed, msg)
