import random

import pytest
import sympy

import oracles
from coxlab.algebras import Canonical, PathAlgebra, Quiver, Star, cartan_matrix, extend_cartan, x3_linear
from coxlab.catalog import star_poly
from coxlab.coxeter import (
    SpectralTag, chi_minus_one_square, coxeter_data, coxeter_matrix, coxeter_polynomial,
    happel_degree_one_check, one_point_poly, perp_poly, perron_vector, poincare_series, spectral_class,
    spectral_radius_numeric,
)
from coxlab.errors import ArgumentError, InconsistentExtensionError
from coxlab.exactmath import IntPoly, cyclotomic, inverse_unimodular, is_self_reciprocal


def _random_specs(seed, count):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 8)
        if rng.random() < 0.5:
            q = Quiver(n, tuple(oracles.orient(oracles.random_tree(n, rng), rng)))
        else:
            arrows = {tuple(sorted(rng.sample(range(1, n + 1), 2))) for _ in range(rng.randint(0, 2 * n))} if n > 1 else set()
            q = Quiver(n, tuple(sorted(arrows)))
        out.append(PathAlgebra(q))
    return out


def test_coxeter_poly_matches_sympy():
    for spec in _random_specs(31, 80) + [Canonical((2, 3, 7)), Star((2, 3, 5)), x3_linear(8)]:
        c = cartan_matrix(spec)
        assert coxeter_polynomial(spec).poly == oracles.coxeter_charpoly(c.tolist())


def test_structural_properties():
    for spec in _random_specs(32, 80):
        d = coxeter_polynomial(spec)
        n = spec.n_vertices
        assert d.poly.degree == n and d.poly.is_monic()
        assert d.poly[0] == 1
        assert is_self_reciprocal(d.poly)
        value, square = chi_minus_one_square(d.poly)
        assert square, value
        assert happel_degree_one_check(d.poly) == -sum(d.coxeter.rows[i][i] for i in range(n))


def test_happel_a1_on_trees():
    # hereditary on a tree: HH^0 = k and HH^1 = 0, so -trace(Phi) = 1
    rng = random.Random(33)
    for _ in range(60):
        n = rng.randint(1, 9)
        q = Quiver(n, tuple(oracles.orient(oracles.random_tree(n, rng), rng)))
        poly = oracles.coxeter_charpoly(cartan_matrix(PathAlgebra(q)).tolist())
        assert happel_degree_one_check(poly) == 1
    with pytest.raises(ArgumentError):
        happel_degree_one_check(IntPoly([1, 2]))


def test_coxeter_matrix_definition():
    c = cartan_matrix(Canonical((2, 2, 3)))
    phi = coxeter_matrix(c)
    assert c @ phi == -c.transpose()


def test_cyclotomic_factorization_reconstructs():
    for spec in _random_specs(34, 40):
        d = coxeter_polynomial(spec)
        prod = d.remainder
        for k, e in d.cyclotomic.items():
            prod = prod * cyclotomic(k) ** e
        assert prod == d.poly


def test_spectral_class_radius_one_iff_cyclotomic():
    for spec in _random_specs(35, 60):
        d = coxeter_polynomial(spec)
        cls = spectral_class(d.poly)
        radius = spectral_radius_numeric(d.poly)
        if d.remainder.degree <= 0:
            assert cls.tag is SpectralTag.RADIUS_ONE and cls.roots_outside == 0
            assert radius == 1.0
        else:
            # non-cyclotomic factors of a Coxeter polynomial may still live on the circle
            assert radius >= 1.0 - 1e-9
            assert (cls.tag is SpectralTag.RADIUS_ONE) == (radius < 1.0 + 1e-7)


def test_spectral_radius_against_numpy():
    import numpy as np

    for spec in _random_specs(36, 40):
        d = coxeter_polynomial(spec)
        # numpy is inaccurate on repeated roots, so take the squarefree part in sympy first
        sf = sympy.sqf_part(oracles.sympy_poly(d.poly.coeffs))
        roots = np.roots([float(a) for a in sf.all_coeffs()])
        assert abs(spectral_radius_numeric(d.poly) - max(abs(roots))) < 1e-5


def test_salem_and_roots_outside():
    lehmer = spectral_class(star_poly((2, 3, 7)))
    assert lehmer.tag is SpectralTag.RADIUS_GREATER and lehmer.roots_outside == 2 and lehmer.salem
    assert abs(spectral_radius_numeric(star_poly((2, 3, 7))) - 1.1762808182599) < 1e-9
    euclidean = spectral_class(star_poly((2, 3, 6)))
    assert euclidean.tag is SpectralTag.RADIUS_ONE
    with pytest.raises(ArgumentError):
        spectral_class(IntPoly([1, 2, 3]))


@pytest.mark.parametrize("weights", [(2, 3, 7), (2, 2, 2, 2, 2), (3, 3, 4)])
def test_perron_vector_positive(weights):
    c = cartan_matrix(Star(weights))
    v = perron_vector(c)
    assert min(v) > 0 and max(v) == pytest.approx(1.0)
    rho = spectral_radius_numeric(coxeter_data(c).poly)
    phi = -(c @ inverse_unimodular(c).transpose())
    w = phi @ v
    assert all(abs(a - rho * b) < 1e-6 for a, b in zip(w, v))


def test_perron_vector_refuses_radius_one():
    with pytest.raises(ArgumentError):
        perron_vector(cartan_matrix(Star((2, 3, 5))))


def test_one_point_extension_formula():
    # extending a star at its centre by a new arm of length one
    for w in ((2, 3), (2, 2, 2), (3, 4, 5)):
        chi_b = star_poly(w)
        chi_c = star_poly(w[:-1] + (w[-1] - 1,)) if w[-1] > 1 else star_poly(w[:-1])
        longer = star_poly(w[:-1] + (w[-1] + 1,))
        assert one_point_poly(chi_b, chi_c) == longer


def test_perp_poly_inverts_extension():
    rng = random.Random(37)
    for spec in _random_specs(38, 30):
        c = cartan_matrix(spec)
        m = [rng.randint(0, 2) for _ in range(c.n)]
        chi_a = coxeter_data(c).poly
        chi_ext = coxeter_data(extend_cartan(c, m)).poly
        p = perp_poly(chi_a, chi_ext)
        assert p.degree == c.n - 1 or c.n == 0
    with pytest.raises(InconsistentExtensionError):
        perp_poly(IntPoly([1, 1]), IntPoly([0, 0, 1]))


def test_poincare_series_first_terms():
    c = cartan_matrix(Star((2, 3, 5)))
    e = [1] + [0] * (c.n - 1)
    series = poincare_series(c, e, 5)
    assert series[0] == c.rows[0][0]
    with pytest.raises(ArgumentError):
        poincare_series(c, e, 0)
    with pytest.raises(ArgumentError):
        poincare_series(c, [1], 3)



def test_perron_root_simple_on_wild_trees():
    from coxlab.coxeter import perron_root_is_simple

    seen = 0
    for spec in _random_specs(42, 200):
        d = coxeter_polynomial(spec)
        if spectral_class(d.poly).tag is SpectralTag.RADIUS_GREATER and spec.quiver.is_tree():
            assert perron_root_is_simple(d.poly)
            assert not perron_root_is_simple(d.poly * d.poly)
            seen += 1
    assert seen > 5
    with pytest.raises(ArgumentError):
        perron_root_is_simple(star_poly((2, 3, 5)))
