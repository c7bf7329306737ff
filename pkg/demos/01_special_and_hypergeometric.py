"""
Gamma ratios, Pochhammer branches and the pFq engine
=====================================================

"""

import math

from fracfun.hypergeom import gauss_2f1_euler, hyp2f1, hyper
from fracfun.special import pochhammer_general, pochhammer_regularized

# (a)_b is Gamma(a+b)/Gamma(a) away from poles, and a tagged limit on them.
# A pole at a makes the strict symbol undefined even for integer b.
for a, b in [(2.5, 1.5), (0, 0), (0, 0.5), (-2, 0.5), (-2, 1)]:
    g = pochhammer_general(a, b)
    print(f"({a})_({b}) -> {g.case:9s} {g.value}")

# the Hahn prefactor needs the limit of Gamma(-N + mu)/Gamma(-N) through a pole pair
print("regularized (-3)_(0.5):", pochhammer_regularized(-3, 0.5))

# terminating series stop exactly: (-m)_j vanishes past j = m
r = hyper([-4, 2.5], [1.5], 0.7)
print(f"\n2F1(-4, 2.5; 1.5; 0.7) = {r.value:.15f} after {r.terms_used} terms, terminated={r.terminated}")

# near z = -1 the Euler transform moves the argument to z/(z-1) = 0.47
z = -0.9
direct = hyper([-0.5, 1.5], [1], z)
euler = gauss_2f1_euler(-0.5, 1.5, 1, z)
print(f"direct: {direct.value:.15f} ({direct.terms_used} terms)")
print(f"euler:  {euler.value:.15f} ({euler.terms_used} terms)")

# hyp2f1 picks whichever argument is smaller; z = -3 is outside the unit disc
print("2F1(1/2, 1; 5/2; -3) =", hyp2f1(0.5, 1, 2.5, -3).value)

# a closed form to compare against: 2F1(1, 1; 2; z) = -log(1-z)/z
z = 0.4
print("log check:", hyp2f1(1, 1, 2, z).value, -math.log(1 - z) / z)
