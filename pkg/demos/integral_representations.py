"""
Integral representations, checked numerically
=============================================

"""

from fractions import Fraction

from geompoly import geometric_poly, laguerre_check, poly_eval
from geompoly.quadrature import expm1_lhs, sine_expm1_integral, sine_sinh_integral, sinh_lhs

# A Gamma-weighted integral of phi_n(x lam) reproduces omega_{n,r}(x). With a
# generalized Gauss-Laguerre rule it is exact once n/2 + 1 nodes are used.
for n, r, x in [(4, Fraction(7, 2), Fraction(1, 2)), (8, Fraction(2), Fraction(-1))]:
    q = laguerre_check(n, r, x)
    print(n, r, x, q.value, q.nodes_used, "exact:", poly_eval(geometric_poly(n, r), x))

# Two sine transforms: the integrands decay like e^(-pi t) and e^(-2 pi t),
# so a certified truncation point plus panel Gauss-Legendre suffices.
for n in (1, 2, 3):
    for x in (0.5, 2.0):
        a = sine_sinh_integral(n, x)
        b = sine_expm1_integral(n, x)
        print(n, x, float(a.value.value - sinh_lhs(n, x)), float(b.value.value - expm1_lhs(n, x)))

# The t/sinh(pi t) moment
print(-sine_sinh_integral(1, 0).value.value)
