"""Exact integer polynomials and matrices.

Everything here works over Python ints (arbitrary precision) or
``fractions.Fraction``; no floating point is involved.
"""
from __future__ import annotations

import json
import math
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArgumentError, DivisionError, NotUnimodularError


def _trim(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense integer polynomial, coefficients in ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise ArgumentError(f"non-integer coefficient {a!r}")
        self.coeffs = c

    # construction helpers
    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPoly":
        return cls([0] * k + [a])

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Read the bracket format, e.g. ``[1,1,1]`` for 1+x+x^2."""
        try:
            data = json.loads(text)
        except (json.JSONDecodeError, TypeError) as exc:
            raise ArgumentError(f"cannot parse polynomial {text!r}") from exc
        if not isinstance(data, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in data):
            raise ArgumentError(f"polynomial must be a list of integers, got {text!r}")
        return cls(data)

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    # arithmetic
    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other) -> "IntPoly":
        o = self._coerce(other).coeffs
        s = self.coeffs
        n = max(len(s), len(o))
        return IntPoly([(s[i] if i < len(s) else 0) + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([a * other for a in self.coeffs])
        o = self._coerce(other).coeffs
        s = self.coeffs
        if not s or not o:
            return IntPoly()
        out = [0] * (len(s) + len(o) - 1)
        for i, a in enumerate(s):
            if a:
                for j, b in enumerate(o):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ArgumentError("negative power of a polynomial")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over Z.

        Needs the leading coefficient of ``divisor`` to divide every
        intermediate leading coefficient; raises DivisionError otherwise.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise DivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dl = d[-1]
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, dl)
            if r:
                raise DivisionError("leading coefficient does not divide")
            quot[k - dd] = q
            for i, b in enumerate(d):
                rem[k - dd + i] -= q * b
        return IntPoly(quot), IntPoly(rem[:dd])

    def exact_div(self, divisor) -> "IntPoly":
        q, r = self.divmod(self._coerce(divisor))
        if not r.is_zero():
            raise DivisionError("nonzero remainder")
        return q

    __floordiv__ = exact_div

    def divides(self, other: "IntPoly") -> bool:
        """True when ``self`` divides ``other`` in Z[x]."""
        try:
            other.exact_div(self)
        except DivisionError:
            return False
        return True

    # structure
    def derivative(self) -> "IntPoly":
        return IntPoly([k * a for k, a in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly([a // g for a in self.coeffs])

    def reciprocal(self) -> "IntPoly":
        """x^deg * p(1/x)."""
        return IntPoly(reversed(self.coeffs))

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    def shift(self, k: int) -> "IntPoly":
        return IntPoly([0] * k + list(self.coeffs))

    # text
    def to_bracket(self) -> str:
        return "[" + ",".join(str(a) for a in self.coeffs) + "]"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


X = IntPoly.x()
ONE = IntPoly.const(1)


def as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly.const(p)
    return IntPoly(p)


# ---------------------------------------------------------------------------
# number theory helpers

def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# special polynomials

def v_poly(n: int) -> IntPoly:
    """1 + x + ... + x^(n-1); v_0 is the zero polynomial."""
    if n < 0:
        raise ArgumentError("v_n needs n >= 0")
    return IntPoly([1] * n)


def _mul_binomial(c: list, d: int) -> list:
    # times (x^d - 1)
    out = [0] * (len(c) + d)
    for i, a in enumerate(c):
        out[i + d] += a
        out[i] -= a
    return out


def _div_binomial(c: list, d: int) -> list:
    # exact quotient by (x^d - 1); q_i = q_{i-d} - c_i read from the bottom
    m = len(c) - d
    q = [0] * m
    for i in range(m):
        q[i] = -c[i] + (q[i - d] if i >= d else 0)
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, via the Moebius product of x^d - 1."""
    if n <= 0:
        raise ArgumentError(f"cyclotomic index must be positive, got {n}")
    c = [1]
    ds = divisors(n)
    for d in ds:
        if mobius(n // d) == 1:
            c = _mul_binomial(c, d)
    for d in ds:
        if mobius(n // d) == -1:
            c = _div_binomial(c, d)
    return IntPoly(c)


@lru_cache(maxsize=None)
def _indices_up_to_degree(deg: int) -> tuple:
    bound = max(2, 4 * deg * deg)
    return tuple(n for n in range(1, bound + 1) if euler_phi(n) <= deg)


def cyclotomic_factor(p: IntPoly) -> tuple[dict[int, int], IntPoly]:
    """Split off every cyclotomic factor of ``p``.

    Returns ``(multiplicities, remainder)`` with ``p`` equal to the
    remainder times the product of the listed powers. The remainder has no
    cyclotomic divisor.
    """
    p = as_poly(p)
    if p.is_zero():
        raise ArgumentError("cannot factor the zero polynomial")
    factors: dict[int, int] = {}
    rem = p
    for n in _indices_up_to_degree(max(p.degree, 0)):
        if euler_phi(n) > rem.degree:
            continue
        phi = cyclotomic(n)
        while rem.degree >= phi.degree:
            q, r = rem.divmod(phi)
            if not r.is_zero():
                break
            factors[n] = factors.get(n, 0) + 1
            rem = q
    return dict(sorted(factors.items())), rem


def chebyshev_u(n: int) -> IntPoly:
    """u_0 = 1, u_1 = x, u_{k+1} = x u_k - u_{k-1}: the path graph on n vertices."""
    if n < 0:
        raise ArgumentError("chebyshev_u needs n >= 0")
    prev, cur = IntPoly.const(1), X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * cur - prev
    return cur


def is_self_reciprocal(p: IntPoly) -> bool:
    p = as_poly(p)
    return not p.is_zero() and p.coeffs == p.coeffs[::-1]


# ---------------------------------------------------------------------------
# gcd and real roots

def _frac_rem(a: list, b: list) -> list:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        q = Fraction(a[-1]) / lb
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _to_primitive(coeffs: Sequence[Fraction]) -> IntPoly:
    if not coeffs:
        return IntPoly()
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    return IntPoly([int(Fraction(c) * den) for c in coeffs]).primitive()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (gcd over Q, scaled into Z)."""
    a, b = as_poly(a), as_poly(b)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    x, y = [Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs]
    while y:
        x, y = y, _frac_rem(x, y)
    return _to_primitive(x)


def squarefree_part(p: IntPoly) -> IntPoly:
    p = as_poly(p)
    if p.degree < 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    q, r = (p * (g.lead ** (p.degree + 1))).divmod(g)
    return q.primitive()


def _sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while chain[-1]:
        r = _frac_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _eval_at(chain, point) -> list:
    if point == math.inf:
        return [c[-1] for c in chain]
    if point == -math.inf:
        return [c[-1] * (-1) ** (len(c) - 1) for c in chain]
    pt = Fraction(point)
    out = []
    for c in chain:
        acc = Fraction(0)
        for a in reversed(c):
            acc = acc * pt + a
        out.append(acc)
    return out


def sturm_count(p: IntPoly, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi].

    Endpoints are ints, Fractions or +-math.inf. Works on the squarefree
    part, so repeated roots count once.
    """
    p = as_poly(p)
    if p.is_zero():
        raise ArgumentError("sturm_count of the zero polynomial")
    if not lo < hi:
        return 0
    sf = squarefree_part(p)
    if sf.degree < 1:
        return 0
    chain = _sturm_chain(sf)
    return _sign_changes(_eval_at(chain, lo)) - _sign_changes(_eval_at(chain, hi))


# ---------------------------------------------------------------------------
# rational functions

class RatFunc:
    """Quotient of integer polynomials in lowest terms.

    Numerator and denominator share no polynomial factor and no integer
    content; the denominator has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = as_poly(num), as_poly(den)
        if den.is_zero():
            raise DivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = IntPoly(), IntPoly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            # multiply by a power of the leading coefficient so the division is exact in Z
            k = g.lead ** (max(num.degree, den.degree) + 1)
            num = (num * k).exact_div(g)
            den = (den * k).exact_div(g)
        c = math.gcd(num.content(), den.content())
        if den.lead < 0:
            c = -c
        self.num = IntPoly([a // c for a in num.coeffs])
        self.den = IntPoly([a // c for a in den.coeffs])

    @staticmethod
    def _c(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return RatFunc(as_poly(other))

    def __add__(self, other):
        o = self._c(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        o = self._c(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._c(other)
        if o.num.is_zero():
            raise DivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        try:
            o = self._c(other)
        except (TypeError, ArgumentError):
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_poly(self) -> bool:
        return self.den.degree == 0 and self.num.content() % self.den.lead == 0

    def as_poly(self) -> IntPoly:
        if not self.is_poly():
            raise DivisionError("rational function is not a polynomial")
        return IntPoly([a // self.den.lead for a in self.num.coeffs])

    def series(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` Taylor coefficients at 0 (needs den(0) != 0)."""
        d0 = self.den[0]
        if d0 == 0:
            raise DivisionError("denominator vanishes at 0")
        out: list[Fraction] = []
        for k in range(n_terms):
            acc = Fraction(self.num[k])
            for j in range(1, min(k, self.den.degree) + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc / d0)
        return out

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# matrices

class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        r = tuple(tuple(row) for row in rows)
        if r and any(len(row) != len(r[0]) for row in r):
            raise ArgumentError("ragged matrix")
        self.rows = r

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix(())

    T = property(transpose)

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __add__(self, other: "IntMatrix"):
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix"):
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            cols = list(zip(*other.rows))
            return IntMatrix([[sum(map(operator.mul, r, c)) for c in cols] for r in self.rows])
        vec = list(other)
        return [sum(map(operator.mul, r, vec)) for r in self.rows]

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"

    def is_upper_unitriangular(self) -> bool:
        return all(
            self.rows[i][j] == (1 if i == j else 0) for i in range(self.n) for j in range(i + 1)
        )


def det(m: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


# Mersenne primes for the modular path
_PRIMES = (2 ** 61 - 1, 2 ** 127 - 1, 2 ** 521 - 1)


def char_poly(m: IntMatrix) -> IntPoly:
    """det(xI - M).

    Hessenberg reduction modulo a prime larger than twice a Hadamard bound
    on the coefficients, so the symmetric lift is exact; Berkowitz's
    division-free algorithm when no listed prime is large enough.
    """
    a = m.rows if isinstance(m, IntMatrix) else tuple(tuple(r) for r in m)
    n = len(a)
    if n == 0:
        return IntPoly.const(1)
    row_norm = math.isqrt(max(sum(x * x for x in r) for r in a)) + 1
    bound = (1 + row_norm) ** n
    for prime in _PRIMES:
        if 2 * bound < prime:
            return _char_poly_hessenberg(a, prime)
    return _char_poly_berkowitz(a)


def _char_poly_hessenberg(a, p: int) -> IntPoly:
    n = len(a)
    h = [[x % p for x in r] for r in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for r in h:
                r[piv], r[m] = r[m], r[piv]
        inv = pow(h[m][m - 1], -1, p)
        row_m = h[m]
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv % p
            if not u:
                continue
            row_i = h[i]
            for j in range(n):
                row_i[j] = (row_i[j] - u * row_m[j]) % p
            for r in h:
                r[m] = (r[m] + u * r[i]) % p
    # polys[k]: char poly of the leading k x k block, ascending coefficients
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[-1]
        cur = [0] + prev
        hkk = h[k - 1][k - 1]
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - hkk * c) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * h[i][i - 1] % p
            coef = h[i - 1][k - 1] * t % p
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    half = p // 2
    return IntPoly([c - p if c > half else c for c in polys[-1]])


def _char_poly_berkowitz(a) -> IntPoly:
    n = len(a)
    if n == 0:
        return IntPoly.const(1)
    c = [1, -a[0][0]]  # descending coefficients of the leading 1x1 block
    for r in range(1, n):
        row = a[r][:r]
        vec = [a[i][r] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                s += toeplitz[i - j] * c[j]
            new[i] = s
        c = new
    return IntPoly(reversed(c))


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = m.n
    if m.is_upper_unitriangular():
        # back substitution, row by row from the bottom
        inv = [None] * n
        for i in range(n - 1, -1, -1):
            out = [0] * n
            out[i] = 1
            row = m.rows[i]
            for k in range(i + 1, n):
                if row[k]:
                    c, other = row[k], inv[k]
                    for j in range(k, n):
                        if other[j]:
                            out[j] -= c * other[j]
            inv[i] = out
        return IntMatrix(inv)
    d = det(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"determinant is {d}")
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return IntMatrix([[int(x) for x in r[n:]] for r in aug])
