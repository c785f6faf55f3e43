"""Closed-form and component-wise assembly of the two local characters, the
constants tying them together, and the bridge identity between them.

The volume prefactors entering the closed-form expressions use the raw
product formula for lattice volumes (including at rank zero, where it
returns the local zeta value rather than 1): that is the convention the
closed-form algebra telescopes with, and the bridge identity pins it down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lfactors import asai_lfactor, pair_dual_lfactor, rs_lfactor
from .numerics import ensure_finite
from .periods import TruncationCfg, beta_truncated, lambda_truncated
from .reps import GenericRep, SatakeSet
from .volumes import c1, constant_c_main, l_eta, vol_gl, vol_gl_formula, vol_kprime_c


class ParityError(ValueError):
    """The conductor and the hermitian-slot parity disagree."""


@dataclass(frozen=True)
class PairData:
    """Complete arithmetic context of one verification instance: ranks,
    conductor, parity slot, residue size, the unramified parameter set and
    the ramified representation it pairs with."""

    n: int
    c: int
    eps: int
    q_f: int
    sigma_n: SatakeSet
    rep: GenericRep

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.c < 1:
            raise ValueError("c must be >= 1")
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")
        if self.q_f <= self.n:
            raise ValueError("q_f must exceed n")
        if len(self.sigma_n) != self.n:
            raise ValueError("sigma_n must have n parameters")
        if self.sigma_n.base != self.q_f**2:
            raise ValueError("sigma_n must live over the extension residue size")
        if self.rep.rank != self.n + 1:
            raise ValueError("rep must have rank n + 1")
        if self.rep.conductor() != self.c:
            raise ValueError(
                f"conductor mismatch: rep has {self.rep.conductor()}, context says {self.c}"
            )

    @property
    def q_e(self) -> int:
        return self.q_f**2

    @property
    def parity_ok(self) -> bool:
        return (self.c - self.eps) % 2 == 0

    def sigma_u(self) -> SatakeSet:
        return self.rep.unramified_part(self.q_e)[1]


def _l_quotient_pre_cancellation(d: PairData) -> complex:
    """L(1/2, pairing) * conj(L(1, As')) * conj(L(1, As'')) over the two
    conjugate-pairing edge values, exactly as the closed form groups them."""
    sigma_u = d.sigma_u()
    eps_n = -1 if (d.n - 1) % 2 else 1          # sign (-1)^(n-1) for sigma_n
    eps_u = -1 if d.n % 2 else 1                # sign (-1)^n for sigma_u
    num = rs_lfactor(d.sigma_n, sigma_u).value(0.5) if len(sigma_u) else 1.0
    num *= asai_lfactor(d.sigma_n, eps_n).value(1).conjugate()
    if len(sigma_u):
        num *= asai_lfactor(sigma_u, eps_u).value(1).conjugate()
    den = pair_dual_lfactor(d.sigma_n).value(1)
    if len(sigma_u):
        den *= pair_dual_lfactor(sigma_u).value(1)
    return num / den


def i_closed(d: PairData) -> complex:
    """Closed form of the pairing character at the congruence-subgroup
    indicator: explicit volumes times the pre-cancellation L-quotient."""
    vols = (
        vol_gl(d.n, d.q_e)
        * vol_kprime_c(d.n, d.c, d.q_e)
        * vol_gl_formula(d.n - 1, d.q_f)
        * vol_gl(d.n, d.q_f)
        / vol_gl_formula(d.n - 1, d.q_e)
    )
    return ensure_finite(float(vols) * _l_quotient_pre_cancellation(d))


def i_assembled(d: PairData, trunc: TruncationCfg | None = None) -> complex:
    """Component-wise assembly: congruence volume times the squared
    normalization constants times the pairing integral times the conjugated
    base-field periods.

    Only the squared moduli of the normalization constants enter (their
    phases cancel between the pairing and the periods).  With a truncation
    config the pairing integral and the ramified-side period are computed
    as truncated sums; the spherical-side period always uses its closed
    form, whose normalization constant is part of the same convention.
    """
    sigma_u = d.sigma_u()
    vol_kprime = vol_gl(d.n, d.q_e) * vol_kprime_c(d.n, d.c, d.q_e)
    # |c_n|^-2 and |c_{n+1}|^-2 from the norm-one normalization
    cn_sq_inv = float(vol_gl_formula(d.n - 1, d.q_e)) * pair_dual_lfactor(d.sigma_n).value(1)
    cn1_sq_inv = float(vol_gl(d.n, d.q_e))
    if len(sigma_u):
        cn1_sq_inv *= pair_dual_lfactor(sigma_u).value(1)
    if trunc is not None:
        lam = lambda_truncated(d.sigma_n, d.rep, trunc).value
        beta_big = beta_truncated(d.rep, d.q_f, trunc).value
    else:
        lam = float(vol_gl(d.n, d.q_e))
        if len(sigma_u):
            lam *= rs_lfactor(d.sigma_n, sigma_u).value(0.5)
        beta_big = float(vol_gl(d.n, d.q_f))
        if len(sigma_u):
            eps_u = -1 if d.n % 2 else 1
            beta_big *= asai_lfactor(sigma_u, eps_u).value(1)
    eps_n = -1 if (d.n - 1) % 2 else 1
    beta_small = float(vol_gl_formula(d.n - 1, d.q_f)) * asai_lfactor(d.sigma_n, eps_n).value(1)
    value = (
        float(vol_kprime)
        / (cn_sq_inv * cn1_sq_inv)
        * lam
        * (beta_small * beta_big).conjugate()
    )
    return ensure_finite(value)


def j_main(d: PairData) -> complex:
    """The main closed formula: the explicit constant times the central
    pairing value over the two twisted tensor edge values."""
    if not d.parity_ok:
        raise ParityError(f"c={d.c} and eps={d.eps} have different parities")
    sigma_u = d.sigma_u()
    eps_n = -1 if d.n % 2 else 1                # sign (-1)^n
    eps_u = -1 if (d.n + 1) % 2 else 1          # sign (-1)^(n+1)
    num = rs_lfactor(d.sigma_n, sigma_u).value(0.5) if len(sigma_u) else 1.0
    den = asai_lfactor(d.sigma_n, eps_n).value(1)
    if len(sigma_u):
        den *= asai_lfactor(sigma_u, eps_u).value(1)
    c_const = constant_c_main(d.n, d.c, d.q_f)
    return ensure_finite(float(c_const) * num / den)


def j_via_bridge(d: PairData) -> complex:
    """The same character through the matching route: the edge value of the
    quadratic-character factor times the matching constant times the
    pairing-character closed form."""
    vol_form, _ = c1(d.n, d.c, d.q_f)
    return ensure_finite(float(l_eta(d.q_f)) * float(vol_form) * i_closed(d))


def alpha_newform(norm: float, d: PairData) -> complex:
    """Local pairing value on the newform line: the vector's squared norm
    times the main character value."""
    if not norm > 0:
        raise ValueError("norm must be positive")
    return norm * j_main(d)
