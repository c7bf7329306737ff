"""
Fractional Charlier, Meixner, Krawtchouk and Hahn
=================================================

Two routes per family: the Rodrigues-type difference and the terminating sum.
"""

from fracfun.discrete_families import DiscreteFamilySpec, relative_gap

specs = [
    DiscreteFamilySpec("charlier", 0.5, a=1.5),
    DiscreteFamilySpec("meixner", 0.5, beta=1.2, c=0.4),
    DiscreteFamilySpec("krawtchouk", 0.5, p=0.3, N=8),
    DiscreteFamilySpec("hahn", 0.5, alpha=0.3, beta=0.7, N=6),
]

for s in specs:
    top = min(8, s.N or 8)
    print(f"\n{s.family}  (mu = {s.mu})")
    print("  x   Rodrigues             closed form           gap")
    for x in range(top + 1):
        rod, closed = s.rodrigues(x), s.closed_form(x).value
        print(f"{x:3d}   {rod: .15f}  {closed: .15f}  {relative_gap(rod, closed):.1e}")

# at integer order they are the classical polynomials
s = DiscreteFamilySpec("meixner", 3, beta=1.2, c=0.4)
print("\nMeixner, mu = 3:", [round(s.closed_form(x).value, 10) for x in range(5)])
print("classical M_3:  ", [round(s.classical(x), 10) for x in range(5)])
