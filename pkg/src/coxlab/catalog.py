"""Closed formulas for named families, derived-type matching, the group L(p)
and the singularity tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .algebras import CartanBasis, PosetAlgebra, cartan_matrix
from .errors import ArgumentError
from .exactmath import (
    IntPoly, RatFunc, X, as_poly, cyclotomic, cyclotomic_factor, divisors, mobius, v_poly,
)


def weight_seq(weights: Iterable[int]) -> tuple[int, ...]:
    """Canonical form: sorted, weight-1 entries dropped."""
    w = [int(p) for p in weights]
    if any(p < 1 for p in w):
        raise ArgumentError(f"weights must be positive, got {w}")
    return tuple(sorted(p for p in w if p > 1))


# --------------------------------------------------------------------------
# closed formulas

@lru_cache(maxsize=4096)
def _star_poly(weights: tuple[int, ...]) -> IntPoly:
    prod = IntPoly.const(1)
    for p in weights:
        prod = prod * v_poly(p)
    ratio = RatFunc(0)
    for p in weights:
        ratio = ratio + RatFunc(v_poly(p - 1), v_poly(p))
    value = RatFunc(prod) * (RatFunc(X + 1) - RatFunc(X) * ratio)
    if not value.is_poly():
        raise AssertionError(f"star formula did not clear denominators for {weights}")
    return value.as_poly()


def star_poly(weights: Iterable[int]) -> IntPoly:
    """Coxeter polynomial of the star [p1,...,pt]."""
    return _star_poly(weight_seq(weights))


def euler_characteristic(weights: Iterable[int]) -> Fraction:
    return 2 - sum((1 - Fraction(1, p) for p in weight_seq(weights)), Fraction(0))


def star_chi_at_one(weights: Iterable[int]) -> Fraction:
    w = weight_seq(weights)
    prod = 1
    for p in w:
        prod *= p
    return prod * euler_characteristic(w)


def canonical_poly(weights: Iterable[int]) -> IntPoly:
    out = (X - 1) ** 2
    for p in weight_seq(weights):
        out = out * v_poly(p)
    return out


def extended_canonical_poly(weights: Iterable[int]) -> IntPoly:
    w = weight_seq(weights)
    return (X + 1) * canonical_poly(w) - X * star_poly(w)


def poset_poly(p: PosetAlgebra) -> IntPoly:
    from .coxeter import cartan_poly

    return cartan_poly(cartan_matrix(p, CartanBasis.PROJECTIVES))


def supercanonical_poly(posets: Sequence[PosetAlgebra]) -> IntPoly:
    if len(posets) < 2:
        raise ArgumentError("need at least two posets")
    out = (X - 1) ** 2
    for s in posets:
        out = out * poset_poly(s)
    return out


def chain_poset(k: int) -> PosetAlgebra:
    return PosetAlgebra(k, tuple((i, i + 1) for i in range(1, k)))


def k_poset(p: int, s: int) -> PosetAlgebra:
    """Chain 1 < ... < p-1 plus an extra element placed above p - s."""
    if not (1 <= s <= p - 1):
        raise ArgumentError("K(p, s) needs 1 <= s <= p - 1")
    covers = [(i, i + 1) for i in range(1, p - 1)] + [(p - s, p)]
    return PosetAlgebra(p, tuple(covers))


# --------------------------------------------------------------------------
# v- and cyclotomic notation

def v_exponents(factors: dict[int, int]) -> dict[int, int]:
    """Rewrite a product of Phi_n (n >= 2) in the v_d basis via Moebius inversion."""
    exps: dict[int, int] = {}
    for n, e in factors.items():
        if n == 1:
            raise ArgumentError("Phi_1 has no v-expression")
        for d in divisors(n):
            mu = mobius(n // d)
            if d > 1 and mu:
                exps[d] = exps.get(d, 0) + mu * e
    return {d: e for d, e in sorted(exps.items()) if e}


def _tokens(items: Iterable[tuple[int, int]], sym: str) -> list[str]:
    return [f"{sym}{d}" + (f"^{e}" if e != 1 else "") for d, e in items]


def _x_minus_one(e: int) -> list[str]:
    if e == 0:
        return []
    return ["(x-1)" if e == 1 else f"(x-1)^{e}"]


def cyclotomic_string(p: IntPoly) -> str:
    """``(x-1)^2 * Phi2 * Phi3`` style; a non-cyclotomic remainder is appended in brackets."""
    factors, rem = cyclotomic_factor(as_poly(p))
    e1 = factors.pop(1, 0)
    toks = _x_minus_one(e1) + _tokens(factors.items(), "Phi")
    if rem != 1:
        toks.append(f"({rem})" if rem.degree > 0 else str(rem.lead))
    return " * ".join(toks) if toks else "1"


def v_factorization(p: IntPoly) -> Optional[str]:
    """``(x-1)^2 * v2 * v3 * v7``, or None when p is not a product of cyclotomics."""
    factors, rem = cyclotomic_factor(as_poly(p))
    if rem != 1:
        return None
    e1 = factors.pop(1, 0)
    exps = v_exponents(factors)
    num = _x_minus_one(e1) + _tokens(((d, e) for d, e in exps.items() if e > 0), "v")
    den = _tokens(((d, -e) for d, e in exps.items() if e < 0), "v")
    head = " * ".join(num) if num else "1"
    if not den:
        return head
    tail = den[0] if len(den) == 1 else "(" + " * ".join(den) + ")"
    return f"{head} / {tail}"


# --------------------------------------------------------------------------
# derived types

@dataclass(frozen=True)
class DerivedType:
    """kind is one of Dynkin, ExtendedDynkin, Canonical, ExtendedCanonical, Unknown."""

    kind: str
    weights: tuple[int, ...] = ()
    name: str = ""

    def symbol(self) -> str:
        w = ",".join(str(p) for p in self.weights)
        if self.kind == "Dynkin":
            return f"[{w}]"
        if self.kind == "ExtendedDynkin":
            return f"[{w}]" if self.name.startswith("~E") or self.name == "~D4" else f"({w})"
        if self.kind == "Canonical":
            return f"({w})"
        if self.kind == "ExtendedCanonical":
            return f"<{w}>"
        return "?"

    def __str__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"{self.kind}{label} {self.symbol()}"


def dynkin_name(star: Sequence[int]) -> Optional[str]:
    """Dynkin name of a star symbol, any arm order; None if the star is not Dynkin."""
    w = weight_seq(star)
    n = 1 + sum(p - 1 for p in w)
    if len(w) <= 2:
        return f"A{n}"
    if len(w) == 3:
        if w[0] == 2 and w[1] == 2:
            return f"D{n}"
        if w[:2] == (2, 3) and w[2] in (3, 4, 5):
            return f"E{n}"
    return None


def dynkin_star(name: str) -> tuple[int, ...]:
    kind, n = name[0], int(name[1:])
    if kind == "A":
        return (n,) if n > 1 else (1,)
    if kind == "D":
        return (2, 2, n - 2)
    if kind == "E" and n in (6, 7, 8):
        return (2, 3, n - 3)
    raise ArgumentError(f"unknown Dynkin type {name}")


def _dynkin_names(n: int) -> list[str]:
    names = [f"A{n}"]
    if n >= 4:
        names.append(f"D{n}")
    if n in (6, 7, 8):
        names.append(f"E{n}")
    return names


# extended Dynkin star symbols for the tame canonical types with three weights
_EXT_STARS = {(2, 3, 3): ("~E6", (3, 3, 3)), (2, 3, 4): ("~E7", (2, 4, 4)), (2, 3, 5): ("~E8", (2, 3, 6)),
              (2, 2, 2): ("~D4", (2, 2, 2, 2))}


def _v_decompose(p: IntPoly) -> Optional[tuple[int, ...]]:
    """Write p as a product of v_k (k >= 2) if possible; greedy on the largest index."""
    factors, rem = cyclotomic_factor(p)
    if rem != 1 or factors.get(1):
        return None
    left = dict(factors)
    out = []
    while left:
        top = max(left)
        out.append(top)
        for d in divisors(top):
            if d == 1:
                continue
            if left.get(d, 0) == 0:
                return None
            left[d] -= 1
            if left[d] == 0:
                del left[d]
    return tuple(sorted(out))


def _partitions(total: int, max_parts: int, min_part: int = 1) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min_part, total + 1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


EXT_CANONICAL_MAX_PARTS = 12


def classify_poly(chi: IntPoly) -> list[DerivedType]:
    """Every catalog type with Coxeter polynomial ``chi`` (possibly several)."""
    chi = as_poly(chi)
    n = chi.degree
    found: list[DerivedType] = []
    if n < 1:
        return [DerivedType("Unknown")]
    for name in _dynkin_names(n):
        star = dynkin_star(name)
        if star_poly(star) == chi:
            found.append(DerivedType("Dynkin", star, name))
    if n >= 2:
        q, r = chi.divmod((X - 1) ** 2)
        if r.is_zero():
            w = _v_decompose(q)
            if w is not None:
                if len(w) <= 2:
                    pq = (1,) * (2 - len(w)) + w
                    found.append(DerivedType("ExtendedDynkin", pq, f"~A({pq[0]},{pq[1]})"))
                else:
                    if w in _EXT_STARS:
                        name, star = _EXT_STARS[w]
                        found.append(DerivedType("ExtendedDynkin", star, name))
                    elif len(w) == 3 and w[:2] == (2, 2):
                        found.append(DerivedType("ExtendedDynkin", w, f"~D{w[2] + 2}"))
                    found.append(DerivedType("Canonical", w))
    if n >= 3:
        at_one = chi(1)
        for parts in _partitions(n - 3, EXT_CANONICAL_MAX_PARTS):
            if len(parts) < 2:
                continue
            w = tuple(p + 1 for p in parts)
            if -star_chi_at_one(w) != at_one:
                continue
            if extended_canonical_poly(w) == chi:
                found.append(DerivedType("ExtendedCanonical", w))
    return found or [DerivedType("Unknown")]


# --------------------------------------------------------------------------
# the group L(p)

@dataclass(frozen=True)
class LElement:
    """sum a_i x_i + l c with 0 <= a_i < p_i."""

    a: tuple[int, ...]
    l: int


def _weights_any(weights: Iterable[int]) -> tuple[int, ...]:
    w = tuple(int(p) for p in weights)
    if any(p < 1 for p in w):
        raise ArgumentError("weights must be positive")
    return w


def l_normalize(weights: Iterable[int], coeffs: Sequence[int], l: int = 0) -> LElement:
    """Normal form of sum coeffs[i] x_i + l c."""
    w = _weights_any(weights)
    if len(coeffs) != len(w):
        raise ArgumentError("one coefficient per weight expected")
    a = []
    for p, b in zip(w, coeffs):
        q, r = divmod(int(b), p)
        a.append(r)
        l += q
    return LElement(tuple(a), l)


def l_add(weights, x: LElement, y: LElement) -> LElement:
    return l_normalize(weights, [i + j for i, j in zip(x.a, y.a)], x.l + y.l)


def l_neg(weights, x: LElement) -> LElement:
    return l_normalize(weights, [-i for i in x.a], -x.l)


def l_scale(weights, x: LElement, k: int) -> LElement:
    return l_normalize(weights, [k * i for i in x.a], k * x.l)


def omega(weights: Iterable[int]) -> LElement:
    """Dualizing element (t - 2) c - sum x_i."""
    w = _weights_any(weights)
    return l_normalize(w, [-1] * len(w), len(w) - 2)


def dim_S(weights, x: LElement) -> int:
    """Dimension of the homogeneous component of degree x (x in normal form)."""
    return x.l + 1 if x.l >= 0 else 0


def hilbert_R(weights: Sequence[int], n_terms: int) -> list[int]:
    """dim R_n for n < n_terms, with R_n = S_{-n omega} (domestic) or S_{n omega} (wild)."""
    w = _weights_any(weights)
    if len(w) != 3:
        raise ArgumentError("hilbert_R needs exactly three weights (pad with 1)")
    chi = euler_characteristic(w)
    if chi == 0:
        raise ArgumentError("tubular weight type: no Z-graded algebra R")
    om = omega(w)
    step = l_neg(w, om) if chi > 0 else om
    return [dim_S(w, l_scale(w, step, k)) for k in range(n_terms)]


def hilbert_rational(weights: Sequence[int]) -> RatFunc:
    """Poincare series of R as a quotient of Coxeter polynomials.

    Domestic: star / canonical. Wild: extended canonical / canonical.
    """
    w = _weights_any(weights)
    if len(w) != 3:
        raise ArgumentError("needs exactly three weights")
    chi = euler_characteristic(w)
    if chi == 0:
        raise ArgumentError("tubular weight type")
    top = star_poly(w) if chi > 0 else extended_canonical_poly(w)
    return RatFunc(top, canonical_poly(w))


def _one_minus(d: int) -> IntPoly:
    return IntPoly([1] + [0] * (d - 1) + [-1])


def degree_series(gen_degrees: Sequence[int], rel_degree: int) -> RatFunc:
    den = IntPoly.const(1)
    for d in gen_degrees:
        den = den * _one_minus(d)
    return RatFunc(_one_minus(rel_degree), den)


# --------------------------------------------------------------------------
# static tables (transcribed verbatim as text; structured fields alongside)

@dataclass(frozen=True)
class SingularityRow:
    weights: tuple[int, ...]
    gen_degrees: tuple[int, int, int]
    rel_degree: int
    generators: str = ""
    relation: str = ""


def hilbert_identity_check(row: SingularityRow) -> bool:
    return hilbert_rational(row.weights) == degree_series(row.gen_degrees, row.rel_degree)


@dataclass(frozen=True)
class DomesticFamily:
    """One printed row of the domestic table; parametric rows instantiate via ``make``."""

    label: str
    generators: str
    relation: str
    degrees: str
    params: tuple[str, ...]
    make: Callable[..., SingularityRow] = field(compare=False, repr=False)


def _dom(label, gens, rel, degs, params, make):
    return DomesticFamily(label, gens, rel, degs, params, make)


DOMESTIC_TABLE: tuple[DomesticFamily, ...] = (
    _dom("(p, q)", "(x0*x1, x1^(p+q), x0^(p+q))", "x^(p+q) - y*z", "(1, p, q; p+q)", ("p", "q"),
         lambda p, q: SingularityRow((1, p, q), (1, p, q), p + q)),
    _dom("(2, 2, 2l)", "(x2^2, x0^2, x0*x1*x2)", "z^2 + x(y^2 + y*x^l)", "(2, l, l+1; 2(l+1))", ("l",),
         lambda l: SingularityRow((2, 2, 2 * l), (2, l, l + 1), 2 * (l + 1))),
    _dom("(2, 2, 2l+1)", "(x2^2, x0*x1, x0^2*x2)", "z^2 + x(y^2 + z*x^l)", "(2, 2l+1, 2l+2; 4(l+1))", ("l",),
         lambda l: SingularityRow((2, 2, 2 * l + 1), (2, 2 * l + 1, 2 * l + 2), 4 * (l + 1))),
    _dom("(2, 3, 3)", "(x0, x1*x2, x1^3)", "z^2 + y^3 + x^2*z", "(3, 4, 6; 12)", (),
         lambda: SingularityRow((2, 3, 3), (3, 4, 6), 12)),
    _dom("(2, 3, 4)", "(x1, x2^2, x0*x2)", "z^2 + y^3 + x^3*y", "(4, 6, 9; 18)", (),
         lambda: SingularityRow((2, 3, 4), (4, 6, 9), 18)),
    _dom("(2, 3, 5)", "(x2, x1, x0)", "z^2 + y^3 + x^5", "(6, 10, 15; 30)", (),
         lambda: SingularityRow((2, 3, 5), (6, 10, 15), 30)),
)

# (weights, degrees of x,y,z, relation, degree of f, minimal wild)
WILD_TABLE: tuple[tuple, ...] = (
    ((2, 3, 7), (6, 14, 21), "z^2+y^3+x^7", 42, True),
    ((2, 3, 8), (6, 8, 15), "z^2+x^5+xy^3", 30, False),
    ((2, 3, 9), (6, 8, 9), "y^3+xz^2+x^4", 24, False),
    ((2, 4, 5), (4, 10, 15), "z^2+y^3+x^5y", 30, True),
    ((2, 4, 6), (4, 6, 11), "z^2+x^4y+xy^3", 22, False),
    ((2, 4, 7), (4, 6, 7), "y^3+x^3y+xz^2", 18, False),
    ((2, 5, 5), (4, 5, 10), "z^2+y^2z+x^5", 20, False),
    ((2, 5, 6), (4, 5, 6), "xz^2+y^2z+x^4", 16, False),
    ((3, 3, 4), (3, 8, 12), "z^2+y^3+x^4z", 24, True),
    ((3, 3, 5), (3, 5, 9), "z^2+xy^3+x^3z", 18, False),
    ((3, 3, 6), (3, 5, 6), "y^3+x^3z+xz^2", 15, False),
    ((3, 4, 4), (3, 4, 8), "z^2-y^2z+x^4y", 16, False),
    ((3, 4, 5), (3, 4, 5), "x^3y+xz^2+y^2z", 13, False),
    ((4, 4, 4), (3, 4, 4), "x^4-yz^2+y^2z", 12, False),
)


def wild_rows() -> list[SingularityRow]:
    return [SingularityRow(w, d, f, relation=rel) for w, d, rel, f, _ in WILD_TABLE]


def singularity_tables() -> dict[str, list]:
    return {"domestic": list(DOMESTIC_TABLE), "wild": wild_rows()}


@dataclass(frozen=True)
class DynkinRow:
    type: str
    star: str
    v_factorization: str
    cyclotomic: str
    coxeter_number: str
    # evaluators for the printed formulas (n is the rank for the A and D families)
    star_of: Callable[[int], tuple] = field(compare=False, repr=False, default=None)
    v_of: Callable[[int], RatFunc] = field(compare=False, repr=False, default=None)
    cyclo_of: Callable[[int], IntPoly] = field(compare=False, repr=False, default=None)
    h_of: Callable[[int], int] = field(compare=False, repr=False, default=None)
    ranks: tuple = ()


def _vr(num: Sequence[int], den: Sequence[int] = ()) -> RatFunc:
    top, bot = IntPoly.const(1), IntPoly.const(1)
    for k in num:
        top = top * v_poly(k)
    for k in den:
        bot = bot * v_poly(k)
    return RatFunc(top, bot)


def _phis(indices: Iterable[int]) -> IntPoly:
    out = IntPoly.const(1)
    for d in indices:
        out = out * cyclotomic(d)
    return out


DYNKIN_TABLE: tuple[DynkinRow, ...] = (
    DynkinRow("A_n", "[n]", "v_{n+1}", "prod_{d|n, d>1} Phi_d", "n+1",
              star_of=lambda n: (n,), v_of=lambda n: _vr([n + 1]),
              cyclo_of=lambda n: _phis(d for d in divisors(n) if d > 1), h_of=lambda n: n + 1,
              ranks=tuple(range(1, 21))),
    DynkinRow("D_n", "[2,2,n-2]", "v_2 (v_2 v_{n-2}) v_{2(n-1)} / ((v_2 v_{n-2}) v_{n-1})",
              "Phi_2 prod_{d|2(n-1), d!=1, d!=n-1} Phi_d", "2(n-1)",
              star_of=lambda n: (2, 2, n - 2), v_of=lambda n: _vr([2, 2, n - 2, 2 * (n - 1)], [2, n - 2, n - 1]),
              cyclo_of=lambda n: cyclotomic(2) * _phis(d for d in divisors(2 * (n - 1)) if d not in (1, n - 1)),
              h_of=lambda n: 2 * (n - 1), ranks=tuple(range(4, 21))),
    DynkinRow("E_6", "[2,3,3]", "v_2 v_3 (v_3) v_12 / ((v_3) v_4 v_6)", "Phi_3 Phi_12", "12",
              star_of=lambda n: (2, 3, 3), v_of=lambda n: _vr([2, 3, 3, 12], [3, 4, 6]),
              cyclo_of=lambda n: _phis([3, 12]), h_of=lambda n: 12, ranks=(6,)),
    DynkinRow("E_7", "[2,3,4]", "v_2 v_3 (v_4) v_18 / ((v_4) v_6 v_9)", "Phi_2 Phi_18", "18",
              star_of=lambda n: (2, 3, 4), v_of=lambda n: _vr([2, 3, 4, 18], [4, 6, 9]),
              cyclo_of=lambda n: _phis([2, 18]), h_of=lambda n: 18, ranks=(7,)),
    DynkinRow("E_8", "[2,3,5]", "v_2 v_3 v_5 v_30 / (v_6 v_10 v_15)", "Phi_30", "30",
              star_of=lambda n: (2, 3, 5), v_of=lambda n: _vr([2, 3, 5, 30], [6, 10, 15]),
              cyclo_of=lambda n: _phis([30]), h_of=lambda n: 30, ranks=(8,)),
)


def dynkin_table() -> tuple[DynkinRow, ...]:
    return DYNKIN_TABLE


@dataclass(frozen=True)
class ExtendedDynkinRow:
    type: str
    star: str
    weight_symbol: str
    coxeter_polynomial: str
    weights_of: Callable[..., tuple] = field(compare=False, repr=False, default=None)
    poly_of: Callable[..., IntPoly] = field(compare=False, repr=False, default=None)


EXTENDED_DYNKIN_TABLE: tuple[ExtendedDynkinRow, ...] = (
    ExtendedDynkinRow("~A_{p,q}", "---", "(p,q)", "(x-1)^2 v_p v_q",
                      lambda p, q: (p, q), lambda p, q: (X - 1) ** 2 * v_poly(p) * v_poly(q)),
    ExtendedDynkinRow("~D_n, n>=4", "[2,2,n-2]", "(2,2,n-2)", "(x-1)^2 v_2^2 v_{n-2}",
                      lambda n: (2, 2, n - 2), lambda n: (X - 1) ** 2 * v_poly(2) ** 2 * v_poly(n - 2)),
    ExtendedDynkinRow("~E_6", "[3,3,3]", "(2,3,3)", "(x-1)^2 v_2 v_3^2",
                      lambda: (2, 3, 3), lambda: (X - 1) ** 2 * v_poly(2) * v_poly(3) ** 2),
    ExtendedDynkinRow("~E_7", "[2,4,4]", "(2,3,4)", "(x-1)^2 v_2 v_3 v_4",
                      lambda: (2, 3, 4), lambda: (X - 1) ** 2 * v_poly(2) * v_poly(3) * v_poly(4)),
    ExtendedDynkinRow("~E_8", "[2,3,6]", "(2,3,5)", "(x-1)^2 v_2 v_3 v_5",
                      lambda: (2, 3, 5), lambda: (X - 1) ** 2 * v_poly(2) * v_poly(3) * v_poly(5)),
)


def extended_dynkin_table() -> tuple[ExtendedDynkinRow, ...]:
    return EXTENDED_DYNKIN_TABLE


def table_rows(which: str) -> tuple[list[str], list[list[str]]]:
    """Header and string rows of a static table, for printing."""
    if which == "dynkin":
        return (["type", "star", "v-factorization", "cyclotomic", "h"],
                [[r.type, r.star, r.v_factorization, r.cyclotomic, r.coxeter_number] for r in DYNKIN_TABLE])
    if which == "extended":
        return (["type", "star", "weights", "Coxeter polynomial"],
                [[r.type, r.star, r.weight_symbol, r.coxeter_polynomial] for r in EXTENDED_DYNKIN_TABLE])
    if which == "domestic":
        return (["weight type", "generators (x,y,z)", "relation", "degrees x,y,z;f"],
                [[r.label, r.generators, r.relation, r.degrees] for r in DOMESTIC_TABLE])
    if which == "wild":
        return (["type", "deg(x,y,z)", "relation f", "deg f", "minimal wild"],
                [["(" + ",".join(map(str, w)) + ")", "(" + ",".join(map(str, d)) + ")", rel, str(f),
                  "yes" if m else ""] for w, d, rel, f, m in WILD_TABLE])
    raise ArgumentError(f"unknown table {which!r}")
