"""Induced Whittaker modules and exact Whittaker-vector solvers.

The module M(Lam, theta) is induced from a one-dimensional module of
the loop nilradical L(n): the cyclic vector 1 satisfies

    (X_alpha (x) t^j) . 1 = Lam(alpha)_j . 1     alpha in Phi^0_n,
    (X_alpha (x) t^j) . 1 = 0                    alpha in Phi^1_n,
    c . 1 = theta . 1,

where each Lam(alpha) is a bi-infinite rational sequence.  A PBW basis
is given by standard monomials u_1 u_2 ... u_m . 1 in the generators
outside L(n) (loop generators with weight not in Phi_n, the Cartan
loops H_i (x) t^j, and d), written with factors ascending in a fixed
total generator order:

* weights first, under the root order (strata of -Phi_n below the
  Levi-and-zero block);
* then the t-exponent;
* Cartan index last, with d strictly above every weight-zero loop
  generator.

Acting with a generator straightens by the recursion

    g . (u_1 ... u_m . 1) = u_1 . (g . (u_2 ... u_m . 1))
                            + [g, u_1] . (u_2 ... u_m . 1)

until g either prepends in order (g <= u_1, g not in L(n)) or reaches
the cyclic vector.  Results are memoized per module; straightening
only ever recurses into strictly smaller degrees, except for the
immediate prepend which does not recurse.

whittaker_solve assembles, for a finite truncation (D = max monomial
degree, E = max |t-exponent| per factor, J = condition window), the
exact linear system expressing that v in the truncated span satisfies
every Whittaker condition for j in [-J, J] *in the full module*:
coefficients landing on monomials outside the span must vanish, so the
computed nullspace over Q is exactly the space of truncated Whittaker
vectors.  Dimension 1 certifies uniqueness inside the span; a larger
dimension at small J is not a refutation, since enlarging J never
increases the dimension.

Tensor products act diagonally (Leibniz); on a pair of modules c acts
by theta + theta' and the Whittaker eigenvalues add entrywise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Mapping, Optional, Tuple

from . import linalg
from .affine import AffineAlgebra, AffineElement, Gen, gen_str
from .rootdata import RootDatum, root_str
from .seqspace import (
    BiSequence,
    SetVerdict,
    is_generic,
    is_strongly_generic_set,
)

Monomial = Tuple[Tuple[Gen, int], ...]  # ((gen, multiplicity), ...) ascending
ModuleElement = Dict[Monomial, Fraction]

VACUUM: Monomial = ()

MODES = ("affine", "loop_only")


class ZeroElement(ValueError):
    """Raised when a leading term of the zero element is requested."""


@dataclass(frozen=True)
class Truncation:
    """Finite window (D, E, J) for the exact solvers."""

    D: int
    E: int
    J: int

    def __post_init__(self):
        if self.D < 0 or self.E < 0 or self.J < 0:
            raise ValueError(f"truncation bounds must be nonnegative: {self}")


class WhittakerSpec:
    """Input data of one induced module: datum, Lam, theta, mode, cocycle.

    Lam maps each root of Phi^0_n to a sequence.  In affine mode the
    multiset of sequences is expected to be strongly generic; in
    loop-only mode plain genericity of each member suffices.  A
    failing or undecided check only warns: the solvers stay exact
    either way, the uniqueness theory just stops promising dimension 1.
    """

    def __init__(
        self,
        datum: RootDatum,
        lam: Mapping[tuple, BiSequence],
        theta=0,
        mode: str = "affine",
        cocycle: str = "standard",
    ):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        lam = {tuple(r): s for r, s in lam.items()}
        if set(lam) != set(datum.phi_n0):
            missing = sorted(map(root_str, set(datum.phi_n0) - set(lam)))
            extra = sorted(map(root_str, set(lam) - set(datum.phi_n0)))
            raise ValueError(
                f"Lam must be defined exactly on Phi^0_n; missing {missing}, "
                f"unexpected {extra}"
            )
        self.datum = datum
        self.lam = lam
        self.theta = Fraction(theta)
        self.mode = mode
        self.cocycle = cocycle
        self.genericity = self._check_genericity()

    def _check_genericity(self) -> SetVerdict:
        values = [self.lam[r] for r in sorted(self.lam)]
        if self.mode == "loop_only":
            bad = [r for r in sorted(self.lam) if not is_generic(self.lam[r]).is_generic]
            if bad:
                verdict = SetVerdict(
                    "not_strongly_generic",
                    f"non-generic Lam at {[root_str(r) for r in bad]}",
                )
                warnings.warn(
                    f"Lam is not generic ({verdict.reason}); "
                    "uniqueness of Whittaker vectors is not guaranteed",
                    stacklevel=3,
                )
                return verdict
            return SetVerdict("strongly_generic", "each member generic (loop mode)")
        verdict = is_strongly_generic_set(values)
        if not verdict.is_strongly_generic:
            warnings.warn(
                f"Lam multiset is not certified strongly generic "
                f"({verdict.kind}: {verdict.reason}); uniqueness of Whittaker "
                "vectors is not guaranteed",
                stacklevel=3,
            )
        return verdict

    @property
    def loop_only(self) -> bool:
        return self.mode == "loop_only"

    def vacuum_scalar(self, root: tuple, j: int) -> Fraction:
        """Scalar by which X_root (x) t^j acts on the cyclic vector."""
        seq = self.lam.get(root)
        if seq is not None:
            return seq.entry(j)
        if root in self.datum.phi_n1:
            return Fraction(0)
        raise ValueError(f"{root_str(root)} is not a nilradical root")

    def __repr__(self):
        return (
            f"WhittakerSpec(n={self.datum.n}, levi={sorted(self.datum.levi)}, "
            f"theta={self.theta}, mode={self.mode})"
        )


# sentinel larger than every generator key; makes a proper prefix compare
# greater, so the cyclic vector is the maximum in the monomial order
_TOP = ((1 << 62,), 0, 0, 0)


def generator_key(datum: RootDatum, g: Gen, loop_only: bool = False) -> tuple:
    """Total order key on module generators.

    Weights come first under the root order, then the t-exponent, then
    the Cartan index; d sits strictly above every weight-zero loop
    generator and strictly below the positive Levi-root generators.
    Raises ValueError for c and for members of L(n).
    """
    if g == "d":
        if loop_only:
            raise ValueError("d does not exist in loop-only mode")
        return (datum.order_key(datum.zero), 1, 0, 0)
    if g == "c":
        raise ValueError("c is not a module generator")
    if g[0] == "X":
        if g[1] in datum.phi_n:
            raise ValueError(f"{gen_str(g)} is not a module generator")
        return (datum.order_key(g[1]), 0, g[2], 0)
    return (datum.order_key(datum.zero), 0, g[2], g[1])


def ordered_generators(datum: RootDatum, E: int, loop_only: bool = False) -> list:
    """Module generators with |t-exponent| <= E, ascending in the order."""
    gens = []
    for root in sorted(datum.phi - datum.phi_n):
        for j in range(-E, E + 1):
            gens.append(("X", root, j))
    for i in range(1, datum.rank + 1):
        for j in range(-E, E + 1):
            gens.append(("H", i, j))
    if not loop_only:
        gens.append("d")
    gens.sort(key=lambda g: generator_key(datum, g, loop_only))
    return gens


@dataclass
class SolveResult:
    """Exact nullspace of the truncated Whittaker conditions."""

    dimension: int
    vectors: List[ModuleElement]
    basis: List[Monomial]
    truncation: Truncation
    condition_count: int
    row_count: int

    @property
    def basis_size(self) -> int:
        return len(self.basis)

    @property
    def unique(self) -> bool:
        return self.dimension == 1


class WhittakerModule:
    """Straightening engine for one induced module."""

    def __init__(self, spec: WhittakerSpec):
        self.spec = spec
        self.alg = AffineAlgebra(
            spec.datum, cocycle=spec.cocycle, loop_only=spec.loop_only
        )
        self._cache: Dict[Tuple[Gen, Monomial], ModuleElement] = {}
        self._key_cache: Dict[Gen, tuple] = {}

    # -- generator order ------------------------------------------------------

    def gen_key(self, g: Gen) -> tuple:
        """Total order key on module generators (never for L(n) or c)."""
        key = self._key_cache.get(g)
        if key is None:
            key = generator_key(self.spec.datum, g, self.spec.loop_only)
            self._key_cache[g] = key
        return key

    def gen_order(self, g1: Gen, g2: Gen) -> int:
        k1, k2 = self.gen_key(g1), self.gen_key(g2)
        return -1 if k1 < k2 else (1 if k1 > k2 else 0)

    def is_module_gen(self, g: Gen) -> bool:
        if g == "c":
            return False
        if g == "d":
            return not self.spec.loop_only
        return not self.alg.in_Ln(g)

    # -- straightening ----------------------------------------------------------

    def lmul(self, g: Gen, mono: Monomial) -> ModuleElement:
        """g . (mono . 1) in standard form.  The result dict is shared
        through the memo cache and must not be mutated by callers."""
        cached = self._cache.get((g, mono))
        if cached is not None:
            return cached
        theta = self.spec.theta
        if g == "c":
            if self.spec.loop_only:
                raise ValueError("c does not exist in loop-only mode")
            out = {mono: theta} if theta else {}
            self._cache[(g, mono)] = out
            return out
        in_ln = self.alg.in_Ln(g)
        if not mono:
            if in_ln:
                s = self.spec.vacuum_scalar(g[1], g[2])
                out = {VACUUM: s} if s else {}
            else:
                out = {((g, 1),): Fraction(1)}
            self._cache[(g, mono)] = out
            return out
        head, mult = mono[0]
        if not in_ln:
            gk, hk = self.gen_key(g), self.gen_key(head)
            if gk < hk:
                out = {((g, 1),) + mono: Fraction(1)}
                self._cache[(g, mono)] = out
                return out
            if gk == hk:
                out = {((head, mult + 1),) + mono[1:]: Fraction(1)}
                self._cache[(g, mono)] = out
                return out
        rest: Monomial = ((head, mult - 1),) + mono[1:] if mult > 1 else mono[1:]
        acc: ModuleElement = {}
        for m2, c2 in self.lmul(g, rest).items():
            for m3, c3 in self.lmul(head, m2).items():
                s = acc.get(m3, Fraction(0)) + c2 * c3
                if s:
                    acc[m3] = s
                else:
                    acc.pop(m3, None)
        for h, ch in self.alg.bracket_gens(g, head).items():
            if h == "c":
                if theta:
                    s = acc.get(rest, Fraction(0)) + ch * theta
                    if s:
                        acc[rest] = s
                    else:
                        acc.pop(rest, None)
                continue
            for m4, c4 in self.lmul(h, rest).items():
                s = acc.get(m4, Fraction(0)) + ch * c4
                if s:
                    acc[m4] = s
                else:
                    acc.pop(m4, None)
        self._cache[(g, mono)] = acc
        return acc

    def act_gen(self, g: Gen, elt: ModuleElement) -> ModuleElement:
        out: ModuleElement = {}
        for mono, coeff in elt.items():
            for m, c in self.lmul(g, mono).items():
                s = out.get(m, Fraction(0)) + coeff * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return out

    def act(self, x: AffineElement, elt: ModuleElement) -> ModuleElement:
        """Action of a general affine element (c acts by theta)."""
        out: ModuleElement = {}
        for g, cg in x.coeffs.items():
            for m, c in self.act_gen(g, elt).items():
                s = out.get(m, Fraction(0)) + cg * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return out

    # -- monomial order, basis ---------------------------------------------------

    def mono_key(self, mono: Monomial) -> tuple:
        """Structural sort key (degree-compatible, deterministic)."""
        return tuple((self.gen_key(g), m) for g, m in mono)

    def lt_key(self, mono: Monomial) -> tuple:
        """Key whose minimum realizes the leading term: lexicographic on
        factor lists, a proper prefix comparing greater (vacuum maximal)."""
        flat = []
        for g, m in mono:
            flat.extend([self.gen_key(g)] * m)
        flat.append(_TOP)
        return tuple(flat)

    def leading_term(self, elt: ModuleElement) -> Monomial:
        support = [m for m, c in elt.items() if c]
        if not support:
            raise ZeroElement("the zero element has no leading term")
        return min(support, key=self.lt_key)

    def generators(self, E: int) -> List[Gen]:
        """Module generators with |exponent| <= E, ascending in gen order."""
        return ordered_generators(self.spec.datum, E, self.spec.loop_only)

    def basis(self, trunc: Truncation) -> List[Monomial]:
        """Standard monomials of degree <= D with factor exponents <= E,
        enumerated deterministically (degree, then generator order)."""
        gens = self.generators(trunc.E)
        out: List[Monomial] = []
        for deg in range(trunc.D + 1):
            for combo in combinations_with_replacement(gens, deg):
                mono: List[Tuple[Gen, int]] = []
                for g in combo:
                    if mono and mono[-1][0] == g:
                        mono[-1] = (g, mono[-1][1] + 1)
                    else:
                        mono.append((g, 1))
                out.append(tuple(mono))
        return out

    # -- conditions and solver ------------------------------------------------------

    def condition_roots(self) -> List[tuple]:
        datum = self.spec.datum
        return sorted(datum.phi_n0) + sorted(datum.phi_n1)

    def solve(self, trunc: Truncation) -> SolveResult:
        basis = self.basis(trunc)
        col_of = {m: i for i, m in enumerate(basis)}
        rows: List[Dict[int, Fraction]] = []
        n_conditions = 0
        for root in self.condition_roots():
            in_phi0 = root in self.spec.datum.phi_n0
            seq = self.spec.lam.get(root)
            for j in range(-trunc.J, trunc.J + 1):
                n_conditions += 1
                target = seq.entry(j) if in_phi0 else Fraction(0)
                g = ("X", root, j)
                by_out: Dict[Monomial, Dict[int, Fraction]] = {}
                for col, mono in enumerate(basis):
                    img = dict(self.lmul(g, mono))
                    if target:
                        s = img.get(mono, Fraction(0)) - target
                        if s:
                            img[mono] = s
                        else:
                            img.pop(mono, None)
                    for m, c in img.items():
                        by_out.setdefault(m, {})[col] = c
                for m in sorted(by_out, key=self.mono_key):
                    rows.append(by_out[m])
        kernel = linalg.nullspace(rows, len(basis))
        vectors = [
            {basis[col]: c for col, c in sorted(vec.items())} for vec in kernel
        ]
        return SolveResult(
            dimension=len(vectors),
            vectors=vectors,
            basis=basis,
            truncation=trunc,
            condition_count=n_conditions,
            row_count=len(rows),
        )


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

PairMonomial = Tuple[Monomial, Monomial]
TensorElement = Dict[PairMonomial, Fraction]


class TensorModule:
    """Diagonal action on M(Lam, theta) (x) M(Lam', theta')."""

    def __init__(self, spec_a: WhittakerSpec, spec_b: WhittakerSpec):
        da, db = spec_a.datum, spec_b.datum
        if da.n != db.n or da.levi != db.levi:
            raise ValueError(
                "tensor factors must share the algebra and parabolic: "
                f"sl({da.n}) levi {sorted(da.levi)} vs sl({db.n}) levi {sorted(db.levi)}"
            )
        if spec_a.mode != spec_b.mode or spec_a.cocycle != spec_b.cocycle:
            raise ValueError("tensor factors must share mode and cocycle")
        self.left = WhittakerModule(spec_a)
        self.right = WhittakerModule(spec_b)
        union = [spec_a.lam[r] for r in sorted(spec_a.lam)]
        union += [spec_b.lam[r] for r in sorted(spec_b.lam)]
        self.union_genericity = is_strongly_generic_set(union)
        if not self.union_genericity.is_strongly_generic:
            warnings.warn(
                "the union of the two eigenvalue families is not certified "
                f"strongly generic ({self.union_genericity.kind}: "
                f"{self.union_genericity.reason}); uniqueness of tensor "
                "Whittaker vectors is not guaranteed",
                stacklevel=3,
            )

    @property
    def theta(self) -> Fraction:
        return self.left.spec.theta + self.right.spec.theta

    def act_gen(self, g: Gen, elt: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for (ma, mb), coeff in elt.items():
            for m, c in self.left.lmul(g, ma).items():
                key = (m, mb)
                s = out.get(key, Fraction(0)) + coeff * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            for m, c in self.right.lmul(g, mb).items():
                key = (ma, m)
                s = out.get(key, Fraction(0)) + coeff * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def act(self, x: AffineElement, elt: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for g, cg in x.coeffs.items():
            for m, c in self.act_gen(g, elt).items():
                s = out.get(m, Fraction(0)) + cg * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return out

    def lam_sum(self, root: tuple, j: int) -> Fraction:
        return self.left.spec.vacuum_scalar(root, j) + self.right.spec.vacuum_scalar(
            root, j
        )

    def pair_key(self, pair: PairMonomial) -> tuple:
        return (self.left.mono_key(pair[0]), self.right.mono_key(pair[1]))

    def solve(self, trunc: Truncation) -> SolveResult:
        basis_a = self.left.basis(trunc)
        basis_b = self.right.basis(trunc)
        basis: List[PairMonomial] = [(ma, mb) for ma in basis_a for mb in basis_b]
        rows: List[Dict[int, Fraction]] = []
        n_conditions = 0
        datum = self.left.spec.datum
        for root in self.left.condition_roots():
            in_phi0 = root in datum.phi_n0
            for j in range(-trunc.J, trunc.J + 1):
                n_conditions += 1
                target = self.lam_sum(root, j) if in_phi0 else Fraction(0)
                g = ("X", root, j)
                by_out: Dict[PairMonomial, Dict[int, Fraction]] = {}
                for col, pair in enumerate(basis):
                    img = dict(self.act_gen(g, {pair: Fraction(1)}))
                    if target:
                        s = img.get(pair, Fraction(0)) - target
                        if s:
                            img[pair] = s
                        else:
                            img.pop(pair, None)
                    for m, c in img.items():
                        by_out.setdefault(m, {})[col] = c
                for m in sorted(by_out, key=self.pair_key):
                    rows.append(by_out[m])
        kernel = linalg.nullspace(rows, len(basis))
        vectors = [
            {basis[col]: c for col, c in sorted(vec.items())} for vec in kernel
        ]
        return SolveResult(
            dimension=len(vectors),
            vectors=vectors,
            basis=basis,
            truncation=trunc,
            condition_count=n_conditions,
            row_count=len(rows),
        )


# ---------------------------------------------------------------------------
# functional wrappers and rendering
# ---------------------------------------------------------------------------


def gen_order(spec: WhittakerSpec, g1: Gen, g2: Gen) -> int:
    return WhittakerModule(spec).gen_order(g1, g2)


def act(spec: WhittakerSpec, x, elt: ModuleElement) -> ModuleElement:
    module = WhittakerModule(spec)
    if not isinstance(x, AffineElement):
        return module.act_gen(x, elt)
    return module.act(x, elt)


def leading_term(spec: WhittakerSpec, elt: ModuleElement) -> Monomial:
    return WhittakerModule(spec).leading_term(elt)


def basis_enumeration(spec: WhittakerSpec, trunc: Truncation) -> List[Monomial]:
    return WhittakerModule(spec).basis(trunc)


def whittaker_solve(spec: WhittakerSpec, trunc: Truncation) -> SolveResult:
    return WhittakerModule(spec).solve(trunc)


def tensor_act(
    spec_a: WhittakerSpec, spec_b: WhittakerSpec, x, elt: TensorElement
) -> TensorElement:
    module = TensorModule(spec_a, spec_b)
    if not isinstance(x, AffineElement):
        return module.act_gen(x, elt)
    return module.act(x, elt)


def tensor_whittaker_solve(
    spec_a: WhittakerSpec, spec_b: WhittakerSpec, trunc: Truncation
) -> SolveResult:
    return TensorModule(spec_a, spec_b).solve(trunc)


def mono_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    for g, m in mono:
        s = f"({gen_str(g)})"
        if m > 1:
            s += f"^{m}"
        parts.append(s)
    return " ".join(parts)


def pair_str(pair: PairMonomial) -> str:
    return f"{mono_str(pair[0])} (x) {mono_str(pair[1])}"


def element_str(elt: ModuleElement, render=mono_str) -> str:
    if not elt:
        return "0"
    parts = []
    for mono, c in sorted(elt.items(), key=lambda kv: (len(kv[0]), repr(kv[0]))):
        label = render(mono)
        if c == 1:
            parts.append(f"+ {label}")
        elif c == -1:
            parts.append(f"- {label}")
        elif c > 0:
            parts.append(f"+ {c}*{label}")
        else:
            parts.append(f"- {-c}*{label}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s
