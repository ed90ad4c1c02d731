"""
The q -> 0 limit numerically
============================

q-numbers, J+- matrix elements and the Casimir eigenvalue approach their
leading power of q.  For j = 1/2 the Casimir ratio converges only linearly in q.
"""

from gcwe.qlimit import limit_checks, q_number

for q in (1e-2, 1e-4, 1e-6):
    rep = limit_checks(q)
    worst = max(rep.casimir, key=rep.casimir.get)
    print(f"q={q:g}  max dev {rep.max_deviation():.2e}  worst casimir {worst}")

# the exact j=1/2 ratio is (1 + q + q^2) / (1 + q)^2
q = 1e-4
print(q_number(0.5, q) * q_number(1.5, q), (1 + q + q * q) / (1 + q) ** 2)
