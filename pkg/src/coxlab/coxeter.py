"""Coxeter matrices, Coxeter polynomials and their spectral data."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebras import AlgebraSpec, CartanBasis, cartan_matrix
from .errors import ArgumentError, InconsistentExtensionError, NumericError
from .exactmath import (
    IntMatrix, IntPoly, X, as_poly, char_poly, cyclotomic_factor, inverse_unimodular,
    is_perfect_square, is_self_reciprocal, poly_gcd, sturm_count, squarefree_part,
)


@dataclass(frozen=True)
class CoxeterData:
    cartan: IntMatrix
    coxeter: IntMatrix
    poly: IntPoly
    factorization: tuple  # (dict index -> multiplicity, remainder)

    @property
    def cyclotomic(self) -> dict[int, int]:
        return self.factorization[0]

    @property
    def remainder(self) -> IntPoly:
        return self.factorization[1]


class SpectralTag(enum.Enum):
    RADIUS_ONE = "RadiusOne"
    RADIUS_GREATER = "RadiusGreater"


@dataclass(frozen=True)
class SpectralClass:
    tag: SpectralTag
    roots_outside: int
    salem: bool


def coxeter_matrix(c: IntMatrix) -> IntMatrix:
    """-C^{-1} C^T."""
    return -(inverse_unimodular(c) @ c.transpose())


def coxeter_polynomial(a: AlgebraSpec) -> CoxeterData:
    c = cartan_matrix(a, CartanBasis.PROJECTIVES)
    return coxeter_data(c)


def coxeter_data(c: IntMatrix) -> CoxeterData:
    phi = coxeter_matrix(c)
    poly = char_poly(phi)
    return CoxeterData(c, phi, poly, cyclotomic_factor(poly))


def cartan_poly(c: IntMatrix) -> IntPoly:
    return char_poly(coxeter_matrix(c))


def happel_degree_one_check(poly: IntPoly) -> int:
    """Degree-one coefficient a1 of a monic polynomial, i.e. -trace of the Coxeter matrix."""
    poly = as_poly(poly)
    if not poly.is_monic():
        raise ArgumentError("polynomial must be monic")
    return poly[1]


def chi_minus_one_square(poly: IntPoly) -> tuple[int, bool]:
    value = as_poly(poly)(-1)
    return value, is_perfect_square(value)


def one_point_poly(chi_b: IntPoly, chi_c: IntPoly) -> IntPoly:
    return (X + 1) * as_poly(chi_b) - X * as_poly(chi_c)


def perp_poly(chi_a: IntPoly, chi_abar: IntPoly) -> IntPoly:
    num = (X + 1) * as_poly(chi_a) - as_poly(chi_abar)
    if num[0] != 0:
        raise InconsistentExtensionError(f"constant term {num[0]} leaves a remainder on division by x")
    return IntPoly(num.coeffs[1:])


def poincare_series(c: IntMatrix, e: Sequence[int], n_terms: int) -> list[int]:
    """<e, Phi^k e> for k = 0 .. n_terms-1, with <x, y> = x^T C y."""
    if n_terms < 1:
        raise ArgumentError("n_terms must be positive")
    e = list(e)
    if len(e) != c.n:
        raise ArgumentError("vector length does not match the matrix")
    phi = coxeter_matrix(c)
    row = [sum(e[i] * c.rows[i][j] for i in range(c.n)) for j in range(c.n)]  # e^T C
    out, v = [], e
    for _ in range(n_terms):
        out.append(sum(a * b for a, b in zip(row, v)))
        v = phi @ v
    return out


# --------------------------------------------------------------------------
# spectral classification

def _check_reciprocal(poly: IntPoly) -> IntPoly:
    poly = as_poly(poly)
    if not is_self_reciprocal(poly) or not poly.is_monic():
        raise ArgumentError("expected a monic self-reciprocal polynomial")
    return poly


def _roots_in_closed(q: IntPoly, lo: int, hi: int) -> int:
    return sturm_count(q, lo, hi) + (1 if q(lo) == 0 else 0)


def spectral_class(poly: IntPoly) -> SpectralClass:
    """Exact spectral classification.

    ``roots_outside`` is the number of distinct roots off the unit circle,
    obtained from the representing polynomial q: roots of q outside
    [-2, 2] correspond one to one with such roots. A reciprocal pair
    {r, 1/r} therefore counts twice.
    """
    from .spectra import represent

    poly = _check_reciprocal(poly)
    factors, rem = cyclotomic_factor(poly)
    if rem.degree <= 0:
        return SpectralClass(SpectralTag.RADIUS_ONE, 0, False)
    q = squarefree_part(represent(poly))
    outside = q.degree - _roots_in_closed(q, -2, 2)
    salem = False
    if outside == 2 and squarefree_part(rem).degree == rem.degree:
        q_rem = represent(rem)
        salem = sturm_count(q_rem, 2, math.inf) == 1 and q_rem(2) != 0
    tag = SpectralTag.RADIUS_ONE if outside == 0 else SpectralTag.RADIUS_GREATER
    return SpectralClass(tag, outside, salem)


def _bisect_largest_root(q: IntPoly, lo: Fraction, hi: Fraction, bits: int = 128) -> Fraction:
    # q has exactly one root in (lo, hi]
    s_lo = q(lo) > 0
    eps = Fraction(1, 2 ** bits)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        v = q(mid)
        if v == 0:
            return mid
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _z_to_root(z: float) -> float:
    # larger solution of t + 1/t = z, squared
    t = (z + math.sqrt(z * z - 4.0)) / 2.0
    return t * t


def spectral_radius_numeric(poly: IntPoly, tol: float = 1e-9) -> float:
    """Largest root modulus of ``poly``.

    Exact path: when the representing polynomial of the non-cyclotomic part
    has only real roots (always the case for trees) its largest root is
    located by rational bisection. Other inputs fall back to the
    eigenvalues of the companion matrix.
    """
    poly = as_poly(poly)
    if poly.degree < 1:
        raise ArgumentError("polynomial must be nonconstant")
    factors, rem = cyclotomic_factor(poly)
    if rem.degree <= 0:
        return 1.0
    if is_self_reciprocal(rem) and rem.is_monic():
        from .spectra import represent

        q = squarefree_part(represent(rem))
        if sturm_count(q) == q.degree and sturm_count(q, 2, math.inf) > 0:
            bound = Fraction(1 + max(abs(a) for a in q.coeffs))
            lo = Fraction(2)
            # shrink to the interval holding only the largest root
            while sturm_count(q, lo, bound) > 1:
                mid = (lo + bound) / 2
                if sturm_count(q, mid, bound) >= 1:
                    lo = mid
                else:
                    bound = mid
            z = _bisect_largest_root(q, lo, bound)
            return _z_to_root(float(z))
    return _companion_radius(rem, tol)


def perron_root_is_simple(poly: IntPoly) -> bool:
    """Is the largest real root rho > 1 of ``poly`` a simple root?

    Exact: rho is isolated in a rational interval by Sturm sequences and
    gcd(poly, poly') is checked for a root in that interval.
    """
    poly = as_poly(poly)
    sf = squarefree_part(poly)
    if sturm_count(sf, 1, math.inf) == 0:
        raise ArgumentError("no real root greater than 1")
    lo, hi = Fraction(1), Fraction(1 + max(abs(a) for a in sf.coeffs))
    while sturm_count(sf, lo, hi) > 1:
        mid = (lo + hi) / 2
        if sturm_count(sf, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    g = poly_gcd(poly, poly.derivative())
    if g.degree <= 0:
        return True
    return sturm_count(squarefree_part(g), lo, hi) == 0


def _companion_radius(p: IntPoly, tol: float) -> float:
    import numpy as np

    coeffs = np.array([float(a) for a in reversed(p.coeffs)])
    roots = np.roots(coeffs)
    if not np.all(np.isfinite(roots)):
        raise NumericError("companion eigenvalues did not converge")
    r = float(np.max(np.abs(roots)))
    # polish the modulus with a few Newton steps on the closest root
    z = complex(roots[int(np.argmax(np.abs(roots)))])
    dp = p.derivative()
    for _ in range(50):
        fz = p(z)
        d = dp(z)
        if d == 0:
            break
        step = fz / d
        z -= step
        if abs(step) < tol * 1e-3:
            break
    if abs(abs(z) - r) > max(1e-6, 1e3 * tol):
        raise NumericError("root refinement drifted away from the companion estimate")
    return abs(z)


def perron_vector(c: IntMatrix, tol: float = 1e-9, max_iter: int = 1_000_000) -> list[float]:
    """Positive eigenvector for the spectral radius, in dimension-vector coordinates.

    ``c`` is a projectives-basis Cartan matrix. The Coxeter transformation
    acts on dimension vectors as -C C^{-T}; the vector is scaled to have
    largest entry 1.
    """
    import numpy as np

    poly = cartan_poly(c)
    if spectral_class(poly).tag is SpectralTag.RADIUS_ONE:
        raise ArgumentError("spectral radius is 1; no Perron vector")
    cinv_t = inverse_unimodular(c).transpose()
    phi = np.array((-(c @ cinv_t)).tolist(), dtype=float)
    v = np.ones(c.n)
    rho = 0.0
    for _ in range(max_iter):
        w = phi @ v
        m = w[np.argmax(np.abs(w))]
        w = w / m
        if np.max(np.abs(w - v)) < tol * 1e-2:
            v = w
            rho = m
            break
        v = w
    else:
        raise NumericError("power iteration did not converge")
    residual = np.max(np.abs(phi @ v - rho * v))
    if residual > tol or np.min(v) <= 0:
        raise NumericError(f"Perron vector check failed (residual {residual:.2e})")
    return [float(a) for a in v]
