"""Certify an explicit supersolution for one point of the existence region.

Picks the construction for (N, alpha, beta, p, q) = (3, 1, -1.5, 2, 4):
a source w^-gamma log^tau(w) with w = sqrt(A + r^2), whose Newtonian
potential u satisfies

    Lap^2 u - lam Lap u >= S^-1 (K * u^p)(r) u(r)^q

on a log-spaced grid.  A finite stable S certifies that some scaled copy
of u is a genuine supersolution, with scaling constant C = S^(-1/(p+q-1)).
"""

from logriesz import KernelParams, choose_case_params, verify_supersolution

N, alpha, beta, p, q = 3, 1.0, -1.5, 2.0, 4.0

case = choose_case_params("2", N, alpha, beta, p, q)
print(f"case 2: gamma = {case.gamma}, tau = {case.tau}")
if case.constraint_notes:
    print(f"  constraint: {case.constraint_notes}")

report = verify_supersolution(case, KernelParams(N, alpha, beta), p, q)

print()
print(f"lambda* (drift threshold) = {report.lam_threshold:.6g}")
print(f"lambda  (used)            = {report.lam:.6g}")
print(f"S  = max rhs/lhs          = {report.S:.6g}")
print(f"C  = S^(-1/(p+q-1))       = {report.C:.6g}")
print(f"grid-stable               = {report.stable}")
print(f"certified                 = {report.passed}")

# the margin profile shows where the inequality is tightest
worst = sorted(report.margin_profile, key=lambda row: row[2] / row[1], reverse=True)[:3]
print()
print("tightest grid points (r, rhs/lhs):")
for r, lhs, rhs in worst:
    print(f"  r = {r:12.6g}   ratio = {rhs / lhs:.6g}")
