"""Uniform result records for identity checks, with the JSON encoding shared
by the library API and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SOFT = "soft-discrepancy"
STATUS_REJECTED = "rejected-input"


def rel_error(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs))
    if scale == 0:
        return 0.0
    return abs(lhs - rhs) / scale


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any] = field(default_factory=dict)
    lhs: complex = 0j
    rhs: complex = 0j
    rel_err: float = 0.0
    status: str = STATUS_PASS
    discrepancy_factor: complex | None = None
    tail_estimate: float | None = None

    @property
    def is_hard_failure(self) -> bool:
        return self.status == STATUS_FAIL

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "params": self.params,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "rel_err": self.rel_err,
            "status": self.status,
        }
        if self.discrepancy_factor is not None:
            out["discrepancy_factor"] = [
                self.discrepancy_factor.real,
                self.discrepancy_factor.imag,
            ]
        if self.tail_estimate is not None:
            out["tail_estimate"] = self.tail_estimate
        return out

    def __str__(self) -> str:
        tag = self.status.upper()
        extra = ""
        if self.discrepancy_factor is not None:
            extra = f" discrepancy={self.discrepancy_factor:.12g}"
        return f"[{tag}] {self.check} {self.params} rel_err={self.rel_err:.3e}{extra}"


def hard_check(
    check: str,
    params: dict[str, Any],
    lhs: complex,
    rhs: complex,
    tol: float,
    tail_estimate: float | None = None,
) -> VerificationReport:
    """Pass/fail comparison at the stated relative tolerance."""
    err = rel_error(lhs, rhs)
    status = STATUS_PASS if err <= tol else STATUS_FAIL
    return VerificationReport(check, params, complex(lhs), complex(rhs), err, status,
                              tail_estimate=tail_estimate)


def soft_check(
    check: str,
    params: dict[str, Any],
    lhs: complex,
    rhs: complex,
    tol: float,
    tail_estimate: float | None = None,
) -> VerificationReport:
    """Comparison verified only up to a recorded multiplicative constant:
    never a hard failure, but any deviation is preserved in the report."""
    err = rel_error(lhs, rhs)
    if err <= tol:
        return VerificationReport(check, params, complex(lhs), complex(rhs), err, STATUS_PASS,
                                  tail_estimate=tail_estimate)
    factor = complex(lhs) / complex(rhs) if rhs != 0 else complex("inf")
    return VerificationReport(check, params, complex(lhs), complex(rhs), err, STATUS_SOFT,
                              discrepancy_factor=factor, tail_estimate=tail_estimate)


def rejected(check: str, params: dict[str, Any], reason: str) -> VerificationReport:
    params = dict(params)
    params["reason"] = reason
    return VerificationReport(check, params, status=STATUS_REJECTED)
