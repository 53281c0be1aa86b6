"""Matrix configuration, derived scalar parameters, and singularity detection.

The library works on the normalized operator: an n x n symmetric tridiagonal
matrix with constant diagonal ``b`` (|b| = 2), off-diagonals -1, and both
corner diagonal entries replaced by ``b_tilde``.  The scaled variant multiplies
the whole matrix by ``-c_hat``; with the default ``c_hat = -1`` the two
coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SingularMatrixError

#: Default half-width of the singular neighborhoods on the b_tilde axis.
SINGULARITY_TOL = 1e-10


@dataclass(frozen=True)
class MatrixConfig:
    """The quadruple (n, b, b_tilde, c_hat) defining the operator.

    n       : matrix order, at least 4
    b       : Toeplitz diagonal after normalization, exactly +2 or -2
    b_tilde : corner diagonal after normalization
    c_hat   : nonzero scaling of the unnormalized matrix (default -1, i.e.
              the scaled and normalized matrices are identical)
    """

    n: int
    b: int
    b_tilde: float
    c_hat: float = -1.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 4:
            raise ValueError(f"matrix order must be an integer >= 4, got {self.n!r}")
        if self.b not in (2, -2):
            raise ValueError(f"diagonal b must be +2 or -2, got {self.b!r}")
        if not math.isfinite(self.b_tilde):
            raise ValueError(f"corner value must be finite, got {self.b_tilde!r}")
        if self.c_hat == 0 or not math.isfinite(self.c_hat):
            raise ValueError(f"scaling c_hat must be finite and nonzero, got {self.c_hat!r}")

    @property
    def sign(self) -> int:
        """sgn(b), i.e. +1 or -1."""
        return 1 if self.b > 0 else -1

    def singular_points(self) -> tuple[float, float]:
        """The two corner values at which the matrix is exactly singular."""
        s = self.sign
        return (s * 1.0, s * (self.n - 3) / (self.n - 1))


@dataclass(frozen=True)
class DerivedParams:
    """Scalars computed once per configuration.

    beta       : b_tilde - b (the rank-2 corner update strength)
    gamma      : (2 - b_tilde) / (1 - b_tilde), defined only for b = +2
    gamma_plus : (2 + b_tilde) / (1 + b_tilde), defined only for b = -2
    m11, m12   : entries of the 2x2 capacitance matrix of the corner update
    delta      : its determinant m11^2 - m12^2
    """

    beta: float
    gamma: float | None
    gamma_plus: float | None
    m11: float
    m12: float
    delta: float


def _delta_factored(cfg: MatrixConfig) -> float:
    """Determinant as the factored quadratic in b_tilde (stable near the roots)."""
    s1, s2 = cfg.singular_points()
    n = cfg.n
    return (n - 1) / (n + 1) * (cfg.b_tilde - s1) * (cfg.b_tilde - s2)


def derived_params(cfg: MatrixConfig) -> DerivedParams:
    """Compute beta, gamma / gamma_plus, the capacitance entries, and delta.

    delta is evaluated both as m11^2 - m12^2 and as the factored quadratic in
    b_tilde; the two must agree (cross-checked here at the scale of the m11^2
    terms, which is the attainable accuracy of the difference-of-squares form).
    """
    n, b, bt = cfg.n, cfg.b, cfg.b_tilde
    beta = bt - b
    ratio = 2.0 * beta / b
    m11 = 1.0 + ratio * n / (n + 1)
    # (2/b)^n reduced to a parity sign for b = -2; never a floating-point power.
    corner_sign = 1.0 if (b == 2 or n % 2 == 0) else -1.0
    m12 = beta * corner_sign / (n + 1)

    delta_m = m11 * m11 - m12 * m12
    delta_f = _delta_factored(cfg)
    scale = max(1.0, m11 * m11, m12 * m12)
    if abs(delta_m - delta_f) > 1e-12 * scale:
        raise AssertionError(
            f"delta cross-check failed: {delta_m!r} vs {delta_f!r} for {cfg}"
        )

    gamma = (2.0 - bt) / (1.0 - bt) if (b == 2 and bt != 1.0) else None
    gamma_plus = (2.0 + bt) / (1.0 + bt) if (b == -2 and bt != -1.0) else None
    return DerivedParams(
        beta=beta, gamma=gamma, gamma_plus=gamma_plus, m11=m11, m12=m12, delta=delta_f
    )


def is_singular(cfg: MatrixConfig, tol: float = SINGULARITY_TOL) -> bool:
    """True when b_tilde lies within ``tol`` of either singular corner value."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s1, s2 = cfg.singular_points()
    return abs(cfg.b_tilde - s1) <= tol or abs(cfg.b_tilde - s2) <= tol


def delta_below_threshold(cfg: MatrixConfig, tol: float = SINGULARITY_TOL) -> bool:
    """Equivalent determinant-based singularity test.

    The threshold scales tol by (n-1)/(n+1) * max(1, |b_tilde|+1)^2 because
    delta is quadratic in b_tilde; with this scaling the neighborhood flagged
    here covers the one flagged by :func:`is_singular`.
    """
    thr = tol * (cfg.n - 1) / (cfg.n + 1) * max(1.0, abs(cfg.b_tilde) + 1.0) ** 2
    return abs(_delta_factored(cfg)) <= thr


def singularity_report(cfg: MatrixConfig, tol: float = SINGULARITY_TOL) -> dict:
    """Both singularity tests plus the quantities they are based on."""
    s1, s2 = cfg.singular_points()
    return {
        "singular_points": [s1, s2],
        "distance": min(abs(cfg.b_tilde - s1), abs(cfg.b_tilde - s2)),
        "delta": _delta_factored(cfg),
        "singular": is_singular(cfg, tol),
        "delta_test": delta_below_threshold(cfg, tol),
    }


def require_nonsingular(cfg: MatrixConfig, tol: float = SINGULARITY_TOL) -> None:
    """Raise :class:`SingularMatrixError` for configurations within tolerance."""
    if is_singular(cfg, tol):
        s1, s2 = cfg.singular_points()
        raise SingularMatrixError(
            f"corner value {cfg.b_tilde} is within {tol} of a singular point "
            f"({s1} or {s2:.17g}) at n={cfg.n}, b={cfg.b}"
        )
