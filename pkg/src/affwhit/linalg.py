"""Exact linear algebra over Q.

Two small routines cover everything the package needs:

* :func:`rank` -- fraction-free (Bareiss) elimination on an integer
  matrix obtained by clearing denominators row by row; row scaling by
  nonzero rationals preserves rank, and the Bareiss pivot formula
  divides exactly, so all intermediate values stay integers.

* :func:`nullspace` -- reduced row echelon form over Fraction with
  rows kept as sparse {column: value} dicts, followed by free-column
  back substitution.  Insertion order of the rows does not change the
  result (the RREF of a matrix is unique), only the work done.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        out.append([int(x * lcm) for x in row])
    return out


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a dense rational matrix via Bareiss elimination."""
    m = _integer_rows(rows)
    nr = len(m)
    if nr == 0:
        return 0
    nc = len(m[0])
    if any(len(r) != nc for r in m):
        raise ValueError("ragged matrix")
    r = 0
    prev = 1
    for col in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        # the update must run even when m[i][col] == 0: every entry below
        # the pivot carries the accumulated minor factor, and skipping the
        # scaling breaks the exactness of the later divisions by prev
        for i in range(r + 1, nr):
            mic = m[i][col]
            row_i = m[i]
            row_r = m[r]
            for j in range(col + 1, nc):
                row_i[j] = (row_i[j] * p - mic * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
        if r == nr:
            break
    return r


SparseRow = Dict[int, Fraction]


def _axpy(dst: SparseRow, coeff: Fraction, src: SparseRow) -> None:
    """dst += coeff * src, dropping zeros."""
    for c, v in src.items():
        s = dst.get(c, 0) + coeff * v
        if s:
            dst[c] = s
        else:
            dst.pop(c, None)


def rref_pivots(rows: Iterable[SparseRow]) -> Dict[int, SparseRow]:
    """Fully reduced echelon rows keyed by pivot column (leading value 1).

    Invariant: every stored pivot row contains no pivot column other
    than its own.  An incoming row is therefore fully reduced by one
    pass over the pivot columns in its support (reduction only ever
    introduces non-pivot columns), after which its minimum remaining
    column is a fresh pivot.
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        r = dict(row)
        for pc in list(r):
            if pc in pivots and pc in r:
                _axpy(r, -r[pc], pivots[pc])
        if not r:
            continue
        lead = min(r)
        inv = Fraction(1) / r[lead]
        r = {c: v * inv for c, v in r.items()}
        for pr in pivots.values():
            if lead in pr:
                _axpy(pr, -pr[lead], r)
        pivots[lead] = r
    return pivots


def nullspace(rows: Iterable[SparseRow], ncols: int) -> List[SparseRow]:
    """Basis of {x : Ax = 0} for sparse rows over columns 0..ncols-1.

    One basis vector per free column f, normalized with x_f = 1; the
    list is ordered by free column.  Vectors are sparse dicts.
    """
    pivots = rref_pivots(rows)
    if any(c < 0 or c >= ncols for c in pivots):
        raise ValueError("row has a column outside range(ncols)")
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec: SparseRow = {f: Fraction(1)}
        for pc, pr in pivots.items():
            if f in pr:
                vec[pc] = -pr[f]
        basis.append(vec)
    return basis


def nullity(rows: Iterable[SparseRow], ncols: int) -> int:
    return ncols - len(rref_pivots(rows))
