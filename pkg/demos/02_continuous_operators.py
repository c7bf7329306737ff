"""
Riemann-Liouville and Caputo derivatives
========================================

Quadrature, power rules and the closed forms for exp(-x^2) side by side.
"""

import math

from fracfun import continuous as fc

# half derivative of t^2: the power rule against singular quadrature
f = fc.power_function(2)
print("RL  D^1/2 t^2 at 1:", fc.rl_derivative(f, 0.5, 1.0), fc.rl_power_rule(2, 0.5, 0, 1.0))
print("Cap D^1/2 t^2 at 1:", fc.caputo_derivative(f, 0.5, 1.0), fc.caputo_power_rule(2, 0.5, 0, 1.0))

# RL does not kill constants, Caputo does
one = fc.SmoothFunction(lambda t: 1.0, nth=lambda k, t: 0.0)
print("\nRL  of 1:", fc.rl_derivative(one, 0.5, 1.0), "= 1/sqrt(pi) =", 1 / math.sqrt(math.pi))
print("Cap of 1:", fc.caputo_derivative(one, 0.5, 1.0))

# the two differ by the initial-value terms
e = fc.exponential_function()
rl = fc.rl_derivative(e, 0.5, 0.5)
print("\nRL - correction:", rl - fc.rl_caputo_correction(e, 0.5, 0.5))
print("Caputo:         ", fc.caputo_derivative(e, 0.5, 0.5))

# exp(-x^2): hypergeometric closed forms against quadrature
print("\n nu    x    closed (Caputo)         quadrature")
g = fc.gaussian_function()
for nu in (0.25, 0.5, 0.75):
    for x in (0.5, 1.0, 2.0):
        print(f"{nu:4} {x:4}  {fc.caputo_exp_minus_x2(nu, x): .15f}  {fc.caputo_derivative(g, nu, x): .15f}")
