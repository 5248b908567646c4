"""Enumerations and scans: radius-one counts, relation censuses, chain analysis."""
from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .algebras import AlgebraSpec, CartanBasis, LinearWithRelations, cartan_matrix
from .catalog import DerivedType, classify_poly, cyclotomic_string, star_poly, v_factorization
from .coxeter import cartan_poly, perp_poly, poincare_series
from .errors import ArgumentError
from .exactmath import IntMatrix, IntPoly, cyclotomic, euler_phi, inverse_unimodular


def default_jobs() -> int:
    raw = os.environ.get("COXLAB_JOBS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise ArgumentError(f"COXLAB_JOBS must be an integer, got {raw!r}")


# --------------------------------------------------------------------------
# products of cyclotomic polynomials

def _cyclotomic_items(n: int) -> list[tuple[int, int, int]]:
    """(index, degree, value at -1) for every Phi_d of degree <= n, d >= 2."""
    items = []
    for d in range(2, 4 * n * n + 3):
        deg = euler_phi(d)
        if deg <= n:
            items.append((d, deg, cyclotomic(d)(-1)))
    return items


def _odd_primes_key(v: int) -> frozenset:
    odd, p, v = set(), 2, abs(v)
    while p * p <= v:
        while v % p == 0:
            odd ^= {p}
            v //= p
        p += 1
    if v > 1:
        odd ^= {v}
    return frozenset(odd)


@dataclass(frozen=True)
class RadiusOneCounts:
    n: int
    a: int   # monic products of cyclotomic polynomials of degree n
    b: int   # ... that are self-reciprocal (even multiplicity of x - 1)
    c: int   # ... self-reciprocal with p(-1) a perfect square


def count_radius_one(n: int) -> RadiusOneCounts:
    """Count degree-n products of cyclotomic polynomials.

    Memoized over (remaining degree, Phi_1 parity, value class at -1), one
    cyclotomic index at a time; this counts the same multisets as a direct
    depth-first enumeration without visiting them.
    """
    if n < 1:
        raise ArgumentError("degree must be positive")
    # state: (degree used, e1 parity, zero at -1, sign, odd prime set) -> count
    # Phi_1 contributes (-2)^e1, whose square class is fixed by e1's parity.
    states: dict[tuple, int] = {}
    for e1 in range(n + 1):
        v = (-2) ** e1
        key = (e1, e1 % 2, False, v < 0, _odd_primes_key(v))
        states[key] = states.get(key, 0) + 1
    for d, deg, val in _cyclotomic_items(n):
        vkey = _odd_primes_key(val) if val else frozenset()
        new: dict[tuple, int] = {}
        for (used, par, zero, neg, odd), cnt in states.items():
            u = used
            z, ng, od = zero, neg, odd
            while u <= n:
                key = (u, par, z, ng, od)
                new[key] = new.get(key, 0) + cnt
                u += deg
                if val == 0:
                    z = True
                else:
                    ng ^= val < 0
                    od = od ^ vkey
        states = new
    a = b = c = 0
    for (used, par, zero, neg, odd), cnt in states.items():
        if used != n:
            continue
        a += cnt
        if par == 0:
            b += cnt
            if zero or (not neg and not odd):
                c += cnt
    return RadiusOneCounts(n, a, b, c)


def iter_radius_one(n: int) -> Iterator[dict[int, int]]:
    """Every degree-n product of cyclotomic polynomials, as {index: multiplicity}."""
    items = [(1, 1)] + [(d, deg) for d, deg, _ in _cyclotomic_items(n)]

    def rec(i: int, left: int, acc: dict) -> Iterator[dict]:
        if left == 0:
            yield dict(acc)
            return
        if i == len(items):
            return
        d, deg = items[i]
        for k in range(left // deg, -1, -1):
            if k:
                acc[d] = k
            yield from rec(i + 1, left - k * deg, acc)
            acc.pop(d, None)

    yield from rec(0, n, {})


def product_of_cyclotomics(factors: dict[int, int]) -> IntPoly:
    out = IntPoly.const(1)
    for d, k in factors.items():
        out = out * cyclotomic(d) ** k
    return out


# --------------------------------------------------------------------------
# linear quivers with zero relations

def relation_sets(n: int, min_arrows: int = 3) -> Iterator[tuple[tuple[int, int], ...]]:
    """Minimal zero-relation sets on the linear quiver 1 -> ... -> n.

    A set is an antichain of intervals [i, j] with j - i >= min_arrows;
    the empty set is included.
    """
    ivs = [(i, j) for i in range(1, n + 1) for j in range(i + min_arrows, n + 1)]

    def rec(start: int, cur: list, last) -> Iterator[tuple]:
        yield tuple(cur)
        for k in range(start, len(ivs)):
            i, j = ivs[k]
            if last is None or (i > last[0] and j > last[1]):
                cur.append((i, j))
                yield from rec(k + 1, cur, (i, j))
                cur.pop()

    yield from rec(0, [], None)


def reverse_relations(n: int, rels: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Relations of the opposite algebra, renumbered so arrows again point up."""
    return tuple(sorted((n + 1 - j, n + 1 - i) for i, j in rels))


CENSUS_CONVENTION = "relation sets counted up to reversal (A ~ A^op), empty set included"
_CONVENTION_NO_EMPTY = "relation sets counted up to reversal (A ~ A^op), empty set excluded"


@dataclass(frozen=True)
class RelationCensus:
    n: int
    min_arrows: int
    total: int           # orbits under reversal
    raw_total: int       # relation sets before identifying A with A^op
    distinct_polys: int
    d_type_count: int    # orbits whose polynomial is the one of D_n
    convention: str = CENSUS_CONVENTION


def _census_chunk(args) -> list[IntPoly]:
    n, reps = args
    return [cartan_poly(cartan_matrix(LinearWithRelations(n, r))) for r in reps]


def linear_relation_census(n: int, min_arrows: int = 3, include_empty: bool = True,
                           jobs: int = 1) -> RelationCensus:
    if n < 1 or min_arrows < 2:
        raise ArgumentError("need n >= 1 and min_arrows >= 2")
    reps: list[tuple] = []
    raw = 0
    for rels in relation_sets(n, min_arrows):
        if not rels and not include_empty:
            continue
        raw += 1
        rev = reverse_relations(n, rels)
        if rels <= rev:
            reps.append(rels)
    chunks = [(n, reps[k::max(1, jobs)]) for k in range(max(1, jobs))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_census_chunk, chunks))
    else:
        results = [_census_chunk(chunks[0])]
    polys = set()
    d_count = 0
    d_poly = star_poly((2, 2, n - 2)) if n >= 4 else None
    for res in results:
        for p in res:
            polys.add(p)
            if p == d_poly:
                d_count += 1
    return RelationCensus(n, min_arrows, len(reps), raw, len(polys), d_count,
                          CENSUS_CONVENTION if include_empty else _CONVENTION_NO_EMPTY)


D12_DERIVED_EQUIVALENT = (
    ((2, 5), (3, 6)),
    ((3, 6), (4, 7)),
    ((4, 7), (5, 8)),
    ((1, 4), (2, 5)),
    ((1, 4),),
    ((1, 12),),
)


def d12_derived_equivalent_list() -> list[tuple[tuple[int, int], ...]]:
    """The relation sets on 12 vertices known to be derived equivalent to D12.

    Each is checked here to have the Coxeter polynomial of D12.
    """
    target = star_poly((2, 2, 10))
    for rels in D12_DERIVED_EQUIVALENT:
        if cartan_poly(cartan_matrix(LinearWithRelations(12, rels))) != target:
            raise AssertionError(f"{rels} does not have the D12 polynomial")
    return list(D12_DERIVED_EQUIVALENT)


def d_type_relation_sets(n: int, min_arrows: int = 3) -> list[tuple[tuple[int, int], ...]]:
    """One relation set per reversal orbit whose polynomial is that of D_n."""
    target = star_poly((2, 2, n - 2))
    out = []
    for rels in relation_sets(n, min_arrows):
        if rels > reverse_relations(n, rels):
            continue
        if cartan_poly(cartan_matrix(LinearWithRelations(n, rels))) == target:
            out.append(rels)
    return out


# --------------------------------------------------------------------------
# chains of one-point extensions

@dataclass(frozen=True)
class ChainStep:
    step: int
    poly: IntPoly
    v_form: Optional[str]
    cyclotomic_form: str
    types: tuple[DerivedType, ...]
    quotient_poly: Optional[IntPoly]   # chi of the perpendicular quotient C_s
    one_point_ok: Optional[bool]

    def type_string(self) -> str:
        known = [t for t in self.types if t.kind != "Unknown"]
        return " = ".join(t.symbol() for t in known) if known else "-"


@dataclass(frozen=True)
class ChainReport:
    steps: tuple[ChainStep, ...]


def principal_submatrix(c: IntMatrix, s: int) -> IntMatrix:
    return IntMatrix([row[:s] for row in c.rows[:s]])


def _quotient_from_series(c_prev: IntMatrix, chi_prev: IntPoly, column: Sequence[int]) -> IntPoly:
    """chi of the right perpendicular category of the extension module M.

    chi_{M-perp} = chi_A (1 - P_M) / x, where P_M is the Poincare series of
    the class of M. The product is a polynomial; the check that its tail
    vanishes is left to the caller.
    """
    e = inverse_unimodular(c_prev) @ list(column)
    n_terms = chi_prev.degree + 4
    p = poincare_series(c_prev, e, n_terms)
    one_minus = [1 - p[0]] + [-a for a in p[1:]]
    prod = [0] * n_terms
    for i, a in enumerate(chi_prev.coeffs):
        for j in range(n_terms - i):
            prod[i + j] += a * one_minus[j]
    if prod[0] != 0:
        raise ArgumentError("series product has a nonzero constant term")
    return IntPoly(prod[1:])


def analyze_chain(a: AlgebraSpec) -> ChainReport:
    """Polynomials of the vertex-prefix subalgebras A_1, A_2, ..., A_n.

    The algebra on the first s vertices has the leading s x s block of the
    Cartan matrix, so the vertex numbering must make each prefix a one-point
    extension of the previous one (true for linear quivers and ladders).
    """
    c = cartan_matrix(a, CartanBasis.PROJECTIVES)
    for i in range(c.n):
        for j in range(i):
            if c.rows[i][j]:
                raise ArgumentError("vertex numbering is not compatible with one-point extensions")
    steps = []
    prev_c, prev_chi = None, None
    for s in range(1, c.n + 1):
        cs = principal_submatrix(c, s)
        chi = cartan_poly(cs)
        quotient = ok = None
        if prev_c is not None:
            column = [cs.rows[i][s - 1] for i in range(s - 1)]
            quotient = perp_poly(prev_chi, chi)
            from_series = _quotient_from_series(prev_c, prev_chi, column)
            ok = from_series == quotient
        steps.append(ChainStep(s, chi, v_factorization(chi), cyclotomic_string(chi),
                               tuple(classify_poly(chi)), quotient, ok))
        prev_c, prev_chi = cs, chi
    return ChainReport(tuple(steps))


# --------------------------------------------------------------------------
# three-vertex triangular algebras

def triangular3_alpha(a: int, b: int, c: int) -> int:
    """chi = x^3 + alpha x^2 + alpha x + 1 for the Cartan matrix [[1,a,b],[0,1,c],[0,0,1]]."""
    return a * b * c - a * a - b * b - c * c + 3


def hurwitz_markov_solutions(bound: int, target: int = 3) -> list[tuple[int, int, int]]:
    """Integer solutions of a^2 + b^2 + c^2 - abc = target with |a|, |b|, |c| <= bound."""
    out = []
    for a, b in itertools.product(range(-bound, bound + 1), repeat=2):
        # c^2 - ab c + (a^2 + b^2 - target) = 0
        disc = a * a * b * b - 4 * (a * a + b * b - target)
        if disc < 0:
            continue
        r = _isqrt_exact(disc)
        if r is None:
            continue
        for num in {a * b + r, a * b - r}:
            if num % 2 == 0 and abs(num // 2) <= bound:
                out.append((a, b, num // 2))
    return sorted(out)


def _isqrt_exact(v: int) -> Optional[int]:
    r = math.isqrt(v)
    return r if r * r == v else None


def hurwitz_markov_scan(bound: int, target: int = 3) -> bool:
    """True when no solution exists: none in the box, and the mod-3 argument applies.

    Mod 3 only (0, 0, 0) solves the equation when 3 | target; then the left
    side is divisible by 9, so target must be too.
    """
    if hurwitz_markov_solutions(bound, target):
        return False
    f = lambda t: t[0] ** 2 + t[1] ** 2 + t[2] ** 2 - t[0] * t[1] * t[2]
    residues = [t for t in itertools.product(range(3), repeat=3) if (f(t) - target) % 3 == 0]
    if not residues:
        return True
    return residues == [(0, 0, 0)] and target % 9 != 0
