"""Fixed-point runs for the discretized Fisher problem u'' = k u (1 - u).

The contraction factor of the substitution iteration is bounded by
h^2 * ||A^{-1}|| * L_c; doubling or tripling k scales both the observed and
the predicted rate linearly until the prediction crosses 1.
"""

from neartoeplitz import BvpProblem, MatrixConfig, solve_fixed_point

RUNS = (
    ("b = +2, length 0.5", MatrixConfig(50, 2, 2.0), 0.5, (0.5, 1, 2, 4, 8, 16, 32)),
    ("b = -2, length 0.05", MatrixConfig(50, -2, -2.0), 0.05, (1, 3, 9, 27, 81, 243, 729)),
)

for label, cfg, length, ks in RUNS:
    print(f"--- {label}, n = {cfg.n}, stopping tolerance 1e-6 ---")
    print(f"{'k':>6}  {'iters':>5}  {'observed':>10}  {'predicted':>10}  contraction?")
    for k in ks:
        prob = BvpProblem(n=cfg.n, length=length, k_coef=float(k),
                          nonlinearity="fisher", cfg=cfg)
        res = solve_fixed_point(prob, tol=1e-6)
        certified = "yes" if res.expected_rate < 1 else "no (still converged)"
        print(
            f"{k:>6}  {res.iterations:>5}  {res.observed_rate:>10.6f}"
            f"  {res.expected_rate:>10.6f}  {certified}"
        )
    print()
