"""
Geometric polynomials from three directions
===========================================

"""

from fractions import Fraction
from math import factorial

from geompoly import egf_geometric, exponential_poly, geometric_poly, poly_eval
from geompoly.genfun import boundary_laurent
from geompoly.polynomials import geometric_poly_recursive

# The first few polynomials, built from Stirling numbers of the second kind
for n in range(5):
    print(f"omega_{n}(x) = {geometric_poly(n)}    phi_{n}(x) = {exponential_poly(n)}")

# The order parameter r may be any rational, including zero and negatives
r = Fraction(5, 3)
print(geometric_poly(3, r))
print(geometric_poly(3, -1), "| r = -1 collapses to -x for every n >= 1")

# The same polynomial comes out of a first-order differential recurrence
assert geometric_poly_recursive(6, r) == geometric_poly(6, r)

# ... and out of the exponential generating function (1 - x(e^t - 1))^(-r)
x = Fraction(-3)
egf = egf_geometric(x, r, 8)
for n in range(8):
    print(n, egf.coefficient(n) * factorial(n), poly_eval(geometric_poly(n, r), x))

# Near x = 0 the function e^x/(e^x-1) omega_n(1/(e^x-1)) has a pole of order
# n+1; its constant term is a Bernoulli number in disguise.
for n in range(1, 6):
    g = boundary_laurent(n, 1)
    print(n, g.principal_part(), "constant:", g.coefficient(0))
