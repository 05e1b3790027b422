"""Tensor products of induced modules under the diagonal action.

On v (x) w the algebra acts by the Leibniz rule, so on the pair of
cyclic vectors the Whittaker eigenvalues add entrywise and c acts by
theta + theta'.  Whether the pair of vacua is the ONLY Whittaker vector
in a truncation is a different question: it needs the union of the two
eigenvalue families to be strongly generic, and for two geometric
sequences that always fails (their translates are dependent through the
cutoff identity).  The kernel dimensions below show what that failure
looks like at small truncations.
"""

import warnings
from fractions import Fraction

from affwhit import (
    C,
    Geometric,
    Scaled,
    TensorModule,
    Truncation,
    VACUUM,
    WhittakerSpec,
    X,
    build_datum,
    element_str,
    pair_str,
)

F = Fraction
A1 = (1,)
VAC2 = (VACUUM, VACUUM)


def show(title):
    print()
    print(title)
    print("-" * len(title))


def tensor(j_or_seq, theta2):
    d = build_datum(2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        sa = WhittakerSpec(d, {A1: Geometric(2)}, theta=1)
        seq = j_or_seq if not isinstance(j_or_seq, int) else Geometric(j_or_seq)
        sb = WhittakerSpec(d, {A1: seq}, theta=theta2)
        return TensorModule(sa, sb)


show("M(a(2), 1) (x) M(a(3), 2): eigenvalues add, c acts by 3")
t = tensor(3, 2)
print("  union strong-genericity:", t.union_genericity.kind)
print("  ", t.union_genericity.reason)
print("  action on the pair of cyclic vectors:")
for j in range(-2, 4):
    got = t.act_gen(X(A1, j), {VAC2: F(1)})
    val = got.get(VAC2, F(0))
    expect = Geometric(2).entry(j) + Geometric(3).entry(j)
    print(f"    X[1]@t^{j:>2} . (1 (x) 1) = {val} * (1 (x) 1)"
          f"   [a(2)_j + a(3)_j = {expect}]")
print("    c . (1 (x) 1) =", t.act_gen(C, {VAC2: F(1)})[VAC2], "* (1 (x) 1)")

show("Kernel dimensions under a growing condition window")
for J in (2, 3, 4, 5):
    res = t.solve(Truncation(1, 1, J))
    print(f"  (D,E,J) = (1,1,{J}): dimension {res.dimension}")
res = t.solve(Truncation(1, 1, 5))
print("\n  the stabilized kernel at J=5:")
for v in res.vectors:
    print("   ", element_str(v, render=pair_str))
print("  the two non-vacuum vectors are genuine Whittaker vectors built")
print("  from the dependence between the translates of a(2) and a(3);")
print("  no window size removes them, so the tensor product is not")
print("  certified simple by this method (and in fact is not simple).")

show("Opposite eigenvalues: M(Lam, 1) (x) M(-Lam, -1)")
t2 = tensor(Scaled(Geometric(2), -1), -1)
print("  union strong-genericity:", t2.union_genericity.kind)
print("  ", t2.union_genericity.reason)
print("  c acts by theta + theta' =", t2.theta)
for J in (2, 3, 4):
    res = t2.solve(Truncation(1, 1, J))
    print(f"  (D,E,J) = (1,1,{J}): dimension {res.dimension}")
print("  multiplicity persists: with level 0 and cancelling eigenvalues")
print("  the pair of vacua generates a proper submodule.")

show("Trivial truncation sanity check")
res = t.solve(Truncation(0, 0, 4))
print(f"  (D,E,J) = (0,0,4): dimension {res.dimension}, vector "
      f"{element_str(res.vectors[0], render=pair_str)}")
