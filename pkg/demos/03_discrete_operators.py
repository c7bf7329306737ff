"""
Gray-Zhang fractional sums and differences
==========================================

"""

from fracfun.discrete import (
    DiscreteSequence,
    alpha_diff,
    alpha_sum,
    compose_diff,
    diff_rising_factorial,
    kernel_weights,
    rising_factorial_sequence,
)

# the kernel: weights (-alpha)_j / j! applied backwards from t
print("weights for alpha = 0.5:", [round(w, 6) for w in kernel_weights(-0.5, 6)])
print("weights for alpha = 2:  ", kernel_weights(-2, 6))

f = DiscreteSequence(0, [1.0, 4.0, 9.0, 16.0, 25.0, 36.0])

# integer orders reduce to the classical backward difference
print("\nnabla^1 at t=5:", alpha_diff(f, 1, 5), " nabla^2 at t=5:", alpha_diff(f, 2, 5))

# a half difference followed by a half sum gives back f
back = [compose_diff(f, 0.5, -0.5, t) for t in range(len(f))]
print("round trip:", [round(v, 12) for v in back])

# sums of ones are rising factorials
ones = DiscreteSequence(0, [1.0] * 4)
print("\nhalf sum of ones at t = 0..3:", [alpha_sum(ones, 0.5, t) for t in range(4)])

# the rising-factorial rule, including its exact-zero branch
seq = rising_factorial_sequence(0.8, 2, 9)
for t in (4, 6, 9):
    print(f"t={t}: operator {alpha_diff(seq, 0.35, t):.12f}  rule {diff_rising_factorial(0.8, 0.35, 2, t):.12f}")
print("alpha = p+1 gives", diff_rising_factorial(0.5, 1.5, 0, 5))
