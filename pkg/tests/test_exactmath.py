import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

import oracles
from coxlab.errors import ArgumentError, DivisionError, NotUnimodularError
from coxlab.exactmath import (
    IntMatrix, IntPoly, RatFunc, X, chebyshev_u, char_poly, cyclotomic, cyclotomic_factor, det, divisors,
    euler_phi, inverse_unimodular, is_self_reciprocal, mobius, poly_gcd, squarefree_part, sturm_count, v_poly,
)
from coxlab.exactmath import _char_poly_berkowitz, _char_poly_hessenberg

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)
polys = coeff_lists.map(IntPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPoly()


@given(polys, polys)
def test_multiplication_matches_sympy(a, b):
    expect = oracles.sympy_poly(a.coeffs) * oracles.sympy_poly(b.coeffs)
    assert (a * b) == oracles.to_intpoly(expect.as_expr())


@given(polys, coeff_lists.filter(lambda c: any(c)))
def test_divmod_with_monic_divisor(a, b):
    b = IntPoly(b + [0]) + IntPoly.monomial(len(b) + 1)   # monic, degree len(b)+1
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_divmod_rejects_non_dividing_lead():
    with pytest.raises(DivisionError):
        IntPoly([1, 0, 1]).divmod(IntPoly([1, 2]))


def test_zero_polynomial_degree_and_text():
    assert IntPoly().degree == -1
    assert str(IntPoly()) == "0"
    assert str(IntPoly([1, 0, -1, 0, 1])) == "x^4-x^2+1"
    assert str(IntPoly.monomial(41, 2)) == "2x^41"


@given(coeff_lists)
def test_bracket_round_trip(c):
    p = IntPoly(c)
    assert IntPoly.parse(p.to_bracket()) == p


@pytest.mark.parametrize("bad", ["[1,2", "{}", "[1.5]", "[true]", "x+1"])
def test_parse_errors(bad):
    with pytest.raises(ArgumentError):
        IntPoly.parse(bad)


def test_cyclotomic_products():
    for n in range(1, 201):
        prod = IntPoly.const(1)
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(n) - 1
        assert cyclotomic(n).degree == euler_phi(n)


def test_cyclotomic_against_sympy():
    for n in (1, 2, 12, 30, 42, 105, 210):
        assert cyclotomic(n) == oracles.to_intpoly(sympy.cyclotomic_poly(n, oracles.X))


def test_v_poly_and_number_theory():
    for n in range(1, 40):
        assert v_poly(n)(1) == n
        assert euler_phi(n) == int(sympy.totient(n))
        assert mobius(n) == int(sympy.mobius(n))


def test_cyclotomic_factor_reconstructs():
    rng = random.Random(3)
    for _ in range(100):
        factors = {rng.choice([1, 2, 3, 5, 7, 9, 12, 30, 42]): rng.randint(1, 3) for _ in range(3)}
        extra = IntPoly([1, -1, 0, 1]) if rng.random() < 0.5 else IntPoly.const(1)   # x^3 - x + 1
        p = extra
        for d, k in factors.items():
            p = p * cyclotomic(d) ** k
        got, rem = cyclotomic_factor(p)
        assert got == factors and rem == extra


def test_self_reciprocal_characterizations():
    rng = random.Random(5)
    for _ in range(200):
        if rng.random() < 0.5:
            p = oracles.random_self_reciprocal(rng.randint(0, 12), rng)
        else:
            p = IntPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 10))] + [1])
        palindrome = p.coeffs == tuple(reversed(p.coeffs))
        assert is_self_reciprocal(p) == palindrome == (p.reciprocal() == p)


def test_char_poly_against_cofactor_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert char_poly(IntMatrix(m)) == oracles.naive_charpoly(m)


def test_char_poly_paths_agree_with_sympy():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(1, 9)
        m = [[rng.randint(-40, 40) for _ in range(n)] for _ in range(n)]
        expect = oracles.sympy_charpoly(m)
        assert _char_poly_berkowitz(m) == expect
        assert _char_poly_hessenberg(m, 2 ** 127 - 1) == expect
        assert char_poly(IntMatrix(m)) == expect


def test_char_poly_large_entries_fall_back():
    m = [[10 ** 30, 1, 0], [2, -10 ** 29, 5], [0, 7, 3]]
    assert char_poly(IntMatrix(m)) == oracles.sympy_charpoly(m)


def test_det_against_sympy_and_cofactor():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det(IntMatrix(m)) == oracles.cofactor_det(m) == int(sympy.Matrix(m).det())


def test_inverse_unimodular():
    rng = random.Random(14)
    for _ in range(100):
        n = rng.randint(1, 7)
        u = [[int(i == j) if j <= i else rng.randint(-3, 3) for j in range(n)] for i in range(n)]
        m = IntMatrix(u)
        assert m @ inverse_unimodular(m) == IntMatrix.identity(n)
        # a permuted (not triangular) unimodular matrix goes through the general path
        perm = list(range(n))
        rng.shuffle(perm)
        p = IntMatrix([u[k] for k in perm])
        assert p @ inverse_unimodular(p) == IntMatrix.identity(n)
    with pytest.raises(NotUnimodularError):
        inverse_unimodular(IntMatrix([[2, 0], [0, 1]]))


def test_sturm_count_distinct_linear_factors():
    rng = random.Random(15)
    for _ in range(100):
        roots = rng.sample(range(-30, 30), rng.randint(1, 8))
        p = IntPoly.const(1)
        for r in roots:
            p = p * IntPoly([-r, 1])
        assert sturm_count(p) == len(roots)
        lo, hi = sorted(rng.sample(range(-35, 35), 2))
        assert sturm_count(p, lo, hi) == sum(1 for r in roots if lo < r <= hi)


def test_sturm_counts_distinct_roots_only():
    p = (X - 1) ** 3 * (X + 2) * (X * X + 1)
    assert sturm_count(p) == 2
    assert squarefree_part(p) == (X - 1) * (X + 2) * (X * X + 1)


def test_gcd():
    a = (X - 1) ** 2 * (X + 3)
    b = (X - 1) * (X * X + 5)
    assert poly_gcd(a, b) == X - 1


def test_chebyshev_recursion():
    for n in range(2, 12):
        assert chebyshev_u(n) == X * chebyshev_u(n - 1) - chebyshev_u(n - 2)


def test_ratfunc_series_and_arithmetic():
    r = RatFunc(IntPoly.const(1), IntPoly([1, -1]))
    assert r.series(5) == [1] * 5
    s = r * RatFunc(IntPoly([1, -1]), IntPoly.const(1))
    assert s.is_poly() and s.as_poly() == IntPoly.const(1)
    assert RatFunc(X * X - 1, X - 1) == RatFunc(X + 1)
    with pytest.raises(DivisionError):
        RatFunc(IntPoly.const(1), X).series(3)
    assert (r + r).series(3) == [Fraction(2)] * 3
