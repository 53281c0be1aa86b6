"""Sweep the corner value and compare the exact infinity norm with its bounds.

The five regimes of the upper bound fire in turn as b_tilde crosses
its breakpoints; the bound is tight for b_tilde > 1 and exact at odd n for
b_tilde <= 0.
"""

from neartoeplitz import MatrixConfig, bounds_report, is_singular

n, b = 13, 2
print(f"n = {n}, b = {b}; breakpoints at 0, {(n-3)/(n-1):.4f}, {(n-2)/(n-1):.4f}, 1")
print()
print(f"{'b_tilde':>8}  {'lower':>10}  {'exact norm':>10}  {'upper':>10}  {'gap %':>6}  branch")

for bt in (-6.0, -2.28, -0.5, 0.0, 0.3, 0.62, 0.87, 0.93, 0.97, 1.8, 3.0, 5.93, 11.0):
    cfg = MatrixConfig(n, b, bt)
    if is_singular(cfg):
        print(f"{bt:>8}  {'singular':>10}")
        continue
    rep = bounds_report(cfg)
    gap = 100.0 * (rep.upper - rep.exact_norm) / rep.exact_norm
    print(
        f"{bt:>8}  {rep.lower:>10.4f}  {rep.exact_norm:>10.4f}  {rep.upper:>10.4f}"
        f"  {gap:>6.2f}  {rep.branch}"
    )

print()
print("named intermediates of the max{S, T} branch at b_tilde = -2.28:")
print(" ", bounds_report(MatrixConfig(n, b, -2.28)).terms)
