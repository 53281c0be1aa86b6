"""Exact scalar summaries and norm bounds for the inverse.

Row sums and the trace have closed forms; the infinity norm is computed
exactly in O(n^2) from the closed-form entries.  The lower / upper norm
bounds implement the published bound formulas with explicit branch selection
on b_tilde.  Everything for b = -2 reduces to the b = +2 case with the corner
value mirrored (entries agree up to parity signs, so all absolute row sums
coincide).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import MatrixConfig, require_nonsingular
from .core import _lower_triangle_grid
from .errors import UnsupportedCaseError


@dataclass
class RowSumReport:
    """All n row sums plus the (b = 2 only) lower/upper row-sum bounds."""

    n: int
    values: np.ndarray
    lower: float | None
    upper: float | None


@dataclass
class SignPattern:
    """Predicted entrywise signs of the inverse, as an n x n array over {-1, 0, +1}."""

    n: int
    pattern: np.ndarray


class UpperBound(NamedTuple):
    value: float
    branch: str
    terms: dict[str, float]


@dataclass
class BoundsReport:
    """Lower bound, upper bound with branch id, and the exact infinity norm."""

    lower: float
    upper: float
    branch: str
    exact_norm: float
    terms: dict[str, float]


def trace_inverse(cfg: MatrixConfig) -> float:
    """Exact trace of the inverse.

    Tr = n(n+2)/(3b) - 2*beta*n / (3*(1+r)) + beta*n / (3*(1+r)*(n+1+r*(n-1)))
    with beta = b_tilde - b and r = 2*beta/b.  Nonsingularity guarantees
    1 + r != 0.
    """
    require_nonsingular(cfg)
    n, b = cfg.n, cfg.b
    beta = cfg.b_tilde - b
    r = 2.0 * beta / b
    return (
        n * (n + 2) / (3.0 * b)
        - 2.0 * beta * n / (3.0 * (1.0 + r))
        + beta * n / (3.0 * (1.0 + r) * (n + 1 + r * (n - 1)))
    )


def _rowsums_b2(n: int, b_tilde: float) -> np.ndarray:
    i = np.arange(1, n + 1, dtype=float)
    return 0.5 * i * (n + 1 - i) - (n / 2.0) * (b_tilde - 2.0) / (b_tilde - 1.0)


def _rowsums_bm2(n: int, b_tilde: float) -> np.ndarray:
    # beta here is b_tilde + 2; even and odd n have distinct closed forms.
    beta = b_tilde + 2.0
    i = np.arange(1, n + 1, dtype=float)
    sign = np.where(i.astype(int) % 2 == 0, 1.0, -1.0)
    if n % 2 == 0:
        variable = (beta * n - i * (beta + 1.0)) / (2.0 * (n + 1 - beta * (n - 1)))
    else:
        variable = beta / (2.0 * (1.0 - beta))
    return (sign - 1.0) / 4.0 + sign * variable


def rowsums(cfg: MatrixConfig) -> np.ndarray:
    """All n row sums of the inverse, from the closed forms for b = +2 / -2."""
    require_nonsingular(cfg)
    if cfg.b == 2:
        return _rowsums_b2(cfg.n, cfg.b_tilde)
    return _rowsums_bm2(cfg.n, cfg.b_tilde)


def rowsum(cfg: MatrixConfig, i: int) -> float:
    """Row sum of row i (1-based) of the inverse."""
    if not 1 <= i <= cfg.n:
        raise IndexError(f"row index must lie in 1..{cfg.n}, got {i}")
    return float(rowsums(cfg)[i - 1])


def rowsum_bounds(cfg: MatrixConfig) -> tuple[float, float]:
    """Lower and upper bounds valid for every row sum; b = 2 only.

        n / (2*(b_tilde-1))  <=  rowsum_i  <=  (n+1)^2/8 - n*(b_tilde-2)/(2*(b_tilde-1))

    The lower bound is attained at the first and last row.
    """
    if cfg.b != 2:
        raise UnsupportedCaseError("row-sum bounds are stated for b = +2 only")
    require_nonsingular(cfg)
    n, bt = cfg.n, cfg.b_tilde
    lower = n / (2.0 * (bt - 1.0))
    upper = (n + 1) ** 2 / 8.0 - n * (bt - 2.0) / (2.0 * (bt - 1.0))
    return lower, upper


def rowsum_report(cfg: MatrixConfig) -> RowSumReport:
    """Row sums plus bounds (bounds populated only for b = 2)."""
    values = rowsums(cfg)
    if cfg.b == 2:
        lower, upper = rowsum_bounds(cfg)
    else:
        lower = upper = None
    return RowSumReport(n=cfg.n, values=values, lower=lower, upper=upper)


def sign_pattern(cfg: MatrixConfig) -> SignPattern:
    """Predicted sign of every inverse entry; defined for b = 2 and b_tilde <= 0.

    b_tilde < 0: +1 on the interior block {2..n-1}^2 and at the two
    antidiagonal corners (1,n), (n,1); -1 elsewhere.

    b_tilde = 0: rows/columns 2 and n-1 vanish except next to the corners,
    the +1 block shrinks to {3..n-2}^2, and the remaining frame is -1.
    """
    if cfg.b != 2 or cfg.b_tilde > 0:
        raise UnsupportedCaseError("sign pattern is stated for b = +2 with b_tilde <= 0")
    require_nonsingular(cfg)
    n = cfg.n
    pattern = -np.ones((n, n), dtype=np.int8)
    if cfg.b_tilde < 0:
        pattern[1 : n - 1, 1 : n - 1] = 1
        pattern[0, n - 1] = pattern[n - 1, 0] = 1
    else:
        pattern[2 : n - 2, 2 : n - 2] = 1
        pattern[0, n - 1] = pattern[n - 1, 0] = 1
        pattern[1, :] = pattern[n - 2, :] = 0
        pattern[:, 1] = pattern[:, n - 2] = 0
        pattern[0, 1] = pattern[1, 0] = -1
        pattern[n - 2, n - 1] = pattern[n - 1, n - 2] = -1
    return SignPattern(n=n, pattern=pattern)


def exact_infinity_norm(cfg: MatrixConfig) -> float:
    """Max absolute row sum of the inverse, from closed-form entries in O(n^2).

    Rows mix signs for b_tilde < 1, so the row reduction relies on numpy's
    pairwise summation.
    """
    require_nonsingular(cfg)
    vals = _lower_triangle_grid(cfg)
    return float(np.abs(vals).sum(axis=1).max())


def lower_bound(cfg: MatrixConfig) -> float:
    """Lower bound on the infinity norm of the inverse.

    L = max{ |n(n-2)/8 - n/(2(1-b_tilde))|, |n/(2(1-b_tilde))| } for b = 2;
    for b = -2 the same value with the corner mirrored (the norms coincide).
    """
    require_nonsingular(cfg)
    n = cfg.n
    bt = cfg.b_tilde if cfg.b == 2 else -cfg.b_tilde
    half = n / (2.0 * (1.0 - bt))
    return max(abs(n * (n - 2) / 8.0 - half), abs(half))


_BRANCHES_B2 = (
    "btilde_gt_1",
    "nm2_le_btilde_lt_1",
    "nm3_lt_btilde_lt_nm2",
    "0_lt_btilde_lt_nm3",
    "btilde_le_0",
)
_BRANCHES_BM2 = (
    "btilde_lt_m1",
    "m1_lt_btilde_le_mnm2",
    "mnm2_lt_btilde_lt_mnm3",
    "mnm3_lt_btilde_lt_0",
    "btilde_ge_0",
)


def _upper_bound_b2(n: int, bt: float) -> tuple[float, int, dict[str, float]]:
    """Five-regime upper bound for b = 2; returns (value, branch index, terms)."""
    gamma = (2.0 - bt) / (1.0 - bt)
    if bt > 1.0:
        return (n + 1) ** 2 / 8.0 - n * gamma / 2.0, 0, {}
    if bt >= (n - 2) / (n - 1):
        return n * (gamma - 1.0) / 2.0, 1, {}
    if bt > (n - 3) / (n - 1):
        P = n * (1.0 - gamma) / 2.0 + (gamma - 1.0) ** 2 * (gamma + 1.0) / (2.0 * gamma - n - 1)
        Q = n * (gamma - 1.0) / 2.0 + gamma / (2.0 * gamma - n - 1) * (n + 1) ** 2 / 16.0 + 0.5
        return max(P, Q), 2, {"P": P, "Q": Q}
    if bt > 0.0:
        P = n * (1.0 - gamma) / 2.0 + (gamma - 1.0) ** 2 * (gamma + 1.0) / (2.0 * gamma - n - 1)
        R = (n + 1) ** 2 / 8.0 - gamma * ((n + 1) / 2.0 - gamma)
        return max(-P, R), 3, {"P": P, "R": R}
    S = (n + 1) ** 2 / 8.0 + (4.0 - n * (2.0 - bt)) / (2.0 * (1.0 - bt))
    T = (1.0 / (1.0 - bt)) * (n / 2.0 + 2.0 / ((n - 1) * (1.0 - bt) - 2.0))
    return max(S, T), 4, {"S": S, "T": T}


def upper_bound(cfg: MatrixConfig) -> UpperBound:
    """Upper bound on the infinity norm, with branch id and named intermediates.

    Branch endpoints: b_tilde equal to (n-2)/(n-1) takes the linear branch,
    b_tilde = 0 the max{S, T} branch.  The b = -2 intervals are the mirror
    images (the bound is evaluated at the mirrored corner value, where the
    norm is identical).  For n >= 9 and the b_tilde <= 0 regime (after
    mirroring) max{S, T} provably collapses to S, which is asserted.
    """
    require_nonsingular(cfg)
    n = cfg.n
    bt = cfg.b_tilde if cfg.b == 2 else -cfg.b_tilde
    value, idx, terms = _upper_bound_b2(n, bt)
    if idx == 4 and n >= 9:
        assert value == terms["S"], "S must dominate T for n >= 9 in the b_tilde <= 0 regime"
    branch = (_BRANCHES_B2 if cfg.b == 2 else _BRANCHES_BM2)[idx]
    return UpperBound(value=value, branch=branch, terms=terms)


def bounds_report(cfg: MatrixConfig) -> BoundsReport:
    """Lower bound, upper bound (with branch), and the exact norm, in one record."""
    ub = upper_bound(cfg)
    return BoundsReport(
        lower=lower_bound(cfg),
        upper=ub.value,
        branch=ub.branch,
        exact_norm=exact_infinity_norm(cfg),
        terms=ub.terms,
    )
