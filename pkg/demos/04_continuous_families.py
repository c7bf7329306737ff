"""
Fractional continuous families
==============================

Each one lands on its classical polynomial at integer order.
"""

from fracfun import continuous_families as cf

print("  nu     C-Legendre(0.3)    Legendre P_n(0.3)")
for nu in (1.0, 1.5, 2.0 - 1e-6, 2.0, 2.5, 3.0):
    n = round(nu)
    print(f"{nu:9.6f}  {cf.c_legendre(nu, 0.3).real: .12f}  {cf.legendre_poly(n, 0.3): .12f}")

# off the integers the Jacobi-type families pick up a phase e^(i pi nu)
print("\nC-Jacobi(0.5; 0.5, 0.5) on a grid:")
for x in (-0.9, -0.5, 0.0, 0.5, 0.9):
    v = cf.c_jacobi(0.5, 0.5, 0.5, x)
    print(f"  x={x:5}  {v.real: .12f} {v.imag:+.12f}i")

# Gegenbauer as a rescaled Jacobi
nu, lam, x = 1.7, 0.8, -0.4
print("\nGegenbauer:", cf.c_gegenbauer(nu, lam, x))
print("via Jacobi:", cf.gegenbauer_jacobi_ratio(nu, lam) * cf.c_jacobi(nu, lam - 0.5, lam - 0.5, x))

# derivative identities and differential equations hold off the integers too
lhs, rhs = cf.c_laguerre_derivative_relation(1.5, 0.2, 0.7)
print("\nLaguerre derivative relation:", lhs, rhs)
spec = cf.ContinuousFamilySpec("legendre", 0.5)
print("Legendre ODE residual at 0.2:", cf.continuous_ode_residual(spec, 0.2))
print("reflection P_0.3 = P_-1.3:", cf.c_legendre(0.3, 0.5), cf.c_legendre(-1.3, 0.5))
