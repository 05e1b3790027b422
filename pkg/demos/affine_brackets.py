"""The affinized algebra: loop brackets, the central cocycle, the
derivation, and what goes wrong with the naive cocycle.

Generators are written X[coeffs]@t^m (root vectors), H[i]@t^m (Cartan
loops), c (central) and d (degree derivation).  The bracket is

    [x@t^m, y@t^l] = [x,y]@t^{m+l} + m * delta_{m+l,0} * kappa(x,y) * c
    [d, x@t^m]     = m * x@t^m

with kappa the trace form normalized to 2n * tr on sl(n).
"""

import random
from fractions import Fraction

from affwhit import (
    AffineAlgebra,
    AffineElement,
    C,
    D,
    H,
    X,
    build_datum,
)

F = Fraction


def elem(*terms):
    return AffineElement({g: F(c) for g, c in terms})


def show(title):
    print()
    print(title)
    print("-" * len(title))


sl2 = build_datum(2)
alg = AffineAlgebra(sl2)
a, na = (1,), (-1,)

show("Pinned brackets on the affinization of sl(2)")
pairs = [
    (X(a, 2), X(na, -2)),
    (X(a, -2), X(na, 2)),
    (X(a, 2), X(na, -1)),
    (H(1, 3), H(1, -3)),
    (D, X(a, 3)),
    (D, H(1, -2)),
    (C, X(a, 1)),
]
for g1, g2 in pairs:
    res = alg.bracket(elem((g1, 1)), elem((g2, 1)))
    print(f"  [{g1 if isinstance(g1, str) else alg.element((g1, F(1)))!r:>14}, "
          f"{alg.element((g2, F(1)))!r:<14}] = {res!r}")

show("The level term tracks the t-exponent, not just kappa")
for m in range(-3, 4):
    res = alg.bracket(elem((X(a, m), 1)), elem((X(na, -m), 1)))
    print(f"  [e@t^{m:>2}, f@t^{-m:>3}] = {res!r}")

show("Jacobi holds exactly (standard cocycle)")
rng = random.Random(7)
roots = sorted(sl2.phi)


def rnd():
    r = rng.random()
    if r < 0.6:
        return elem((X(rng.choice(roots), rng.randint(-3, 3)), rng.randint(1, 3)))
    if r < 0.9:
        return elem((H(1, rng.randint(-3, 3)), rng.randint(1, 3)))
    return elem((D, 1))


violations = 0
for _ in range(300):
    x, y, z = rnd(), rnd(), rnd()
    jac = (
        alg.bracket(x, alg.bracket(y, z))
        + alg.bracket(y, alg.bracket(z, x))
        + alg.bracket(z, alg.bracket(x, y))
    )
    violations += not jac.is_zero()
print(f"  300 random triples, {violations} Jacobi violations")

show("The constant-factor cocycle is NOT a Lie bracket")
lit = AffineAlgebra(sl2, cocycle="literal")
x, y, z = elem((X(a, 1), 1)), elem((X(na, 1), 1)), elem((H(1, -2), 1))
jac = (
    lit.bracket(x, lit.bracket(y, z))
    + lit.bracket(y, lit.bracket(z, x))
    + lit.bracket(z, lit.bracket(x, y))
)
print("  witness triple (e@t^1, f@t^1, h@t^-2):")
print(f"  Jacobi sum = {jac!r}   (should be 0)")

show("Loop-only mode has no c and no d")
loop = AffineAlgebra(sl2, loop_only=True)
res = loop.bracket(elem((X(a, 2), 1)), elem((X(na, -2), 1)))
print(f"  [e@t^2, f@t^-2] = {res!r}   (no central term)")

show("A bigger algebra: sl(3) with the Levi subset {2}")
sl3 = build_datum(3, {2})
alg3 = AffineAlgebra(sl3)
print("  nilradical roots:", sorted(sl3.phi_n))
print("  outside [n,n]:", sorted(sl3.phi_n0), " inside:", sorted(sl3.phi_n1))
res = alg3.bracket(elem((X((1, 0), 1), 1)), elem((X((0, 1), -1), 1)))
print(f"  [X[1,0]@t^1, X[0,1]@t^-1] = {res!r}")
