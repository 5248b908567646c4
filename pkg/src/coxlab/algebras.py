"""Finite-dimensional algebras given by quivers, posets and weight data,
and their Cartan matrices.

Convention: vertices are numbered 1..n, and the Cartan entry (i, j) is the
number of nonzero paths from i to j (for schurian algebras, 0 or 1). Column
j is then the dimension vector of the projective attached to j. Every
Cartan matrix produced here is unitriangular up to a topological
relabelling, so its determinant is 1.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ArgumentError, InvalidAlgebraError
from .exactmath import IntMatrix, inverse_unimodular


class CartanBasis(enum.Enum):
    PROJECTIVES = "projectives"
    SIMPLES = "simples"


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(a), int(b)) for a, b in self.arrows))
        if self.n < 0:
            raise InvalidAlgebraError("negative vertex count")
        for a, b in self.arrows:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise InvalidAlgebraError(f"arrow {a}->{b} leaves the vertex range 1..{self.n}")
        self.topological_order()

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.arrows:
            out[a].append(b)
        return out

    def topological_order(self) -> list[int]:
        indeg = {v: 0 for v in range(1, self.n + 1)}
        for _, b in self.arrows:
            indeg[b] += 1
        succ = self.successors()
        ready = [v for v in range(1, self.n + 1) if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop()
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        if len(order) != self.n:
            raise InvalidAlgebraError("quiver has an oriented cycle")
        return order

    def is_tree(self) -> bool:
        if len(self.arrows) != self.n - 1:
            return False
        parent = list(range(self.n + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.arrows:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


# --------------------------------------------------------------------------
# algebra descriptions

@dataclass(frozen=True)
class PathAlgebra:
    quiver: Quiver

    @property
    def n_vertices(self) -> int:
        return self.quiver.n


@dataclass(frozen=True)
class MonomialAlgebra:
    """Path algebra modulo zero relations.

    Each relation is a vertex sequence along arrows (at least two arrows).
    With parallel arrows a relation kills every arrow path through those
    vertices.
    """

    quiver: Quiver
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rels = tuple(tuple(int(v) for v in r) for r in self.relations)
        object.__setattr__(self, "relations", rels)
        arrows = set(self.quiver.arrows)
        for r in rels:
            if len(r) < 3:
                raise InvalidAlgebraError(f"relation {list(r)} has fewer than two arrows")
            for a, b in zip(r, r[1:]):
                if (a, b) not in arrows:
                    raise InvalidAlgebraError(f"relation {list(r)} is not a path: no arrow {a}->{b}")
        for r in rels:
            for s in rels:
                if r is not s and r != s and _contains(s, r):
                    raise InvalidAlgebraError(f"relation {list(s)} is redundant: it contains {list(r)}")
        if len(set(rels)) != len(rels):
            raise InvalidAlgebraError("duplicate relation")

    @property
    def n_vertices(self) -> int:
        return self.quiver.n


def _contains(big: tuple, small: tuple) -> bool:
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


@dataclass(frozen=True)
class PosetAlgebra:
    """Incidence algebra of a finite poset given by its cover relations.

    ``zero_relations`` lists pairs (i, j), i < j in the order, whose map is
    set to zero; every map factoring through such a pair vanishes too.
    """

    n: int
    covers: tuple[tuple[int, int], ...]
    zero_relations: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple((int(a), int(b)) for a, b in self.covers))
        object.__setattr__(self, "zero_relations", tuple((int(a), int(b)) for a, b in self.zero_relations))
        q = Quiver(self.n, self.covers)  # range and acyclicity checks
        leq = self.order()
        for a, b in self.zero_relations:
            if a == b or not leq[a][b]:
                raise InvalidAlgebraError(f"zero relation {a}->{b} is not a strict order relation")
            if (a, b) in set(q.arrows):
                raise InvalidAlgebraError(f"zero relation {a}->{b} is a single arrow")

    @property
    def n_vertices(self) -> int:
        return self.n

    def order(self) -> list[list[bool]]:
        """leq[i][j] is True when i <= j (1-based, index 0 unused)."""
        n = self.n
        leq = [[False] * (n + 1) for _ in range(n + 1)]
        succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for a, b in self.covers:
            succ[a].append(b)
        for s in range(1, n + 1):
            stack = [s]
            while stack:
                v = stack.pop()
                if leq[s][v]:
                    continue
                leq[s][v] = True
                stack.extend(succ[v])
        return leq


@dataclass(frozen=True)
class LinearWithRelations:
    """Linear quiver 1->2->...->n with zero relations on intervals [i, j], j - i >= 2."""

    n: int
    relations: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        rels = tuple(sorted((int(a), int(b)) for a, b in self.relations))
        object.__setattr__(self, "relations", rels)
        if self.n < 1:
            raise InvalidAlgebraError("a linear quiver needs at least one vertex")
        if len(set(rels)) != len(rels):
            raise InvalidAlgebraError("duplicate relation")
        for a, b in rels:
            if not (1 <= a and b <= self.n and b - a >= 2):
                raise InvalidAlgebraError(f"[{a},{b}] is not a relation of length >= 2 in 1..{self.n}")
        for a, b in rels:
            for c, d in rels:
                if (a, b) != (c, d) and c <= a and b <= d:
                    raise InvalidAlgebraError(f"relation [{c},{d}] is redundant: it contains [{a},{b}]")

    @property
    def n_vertices(self) -> int:
        return self.n

    def as_poset(self) -> PosetAlgebra:
        return PosetAlgebra(self.n, tuple((i, i + 1) for i in range(1, self.n)), self.relations)


def _check_weights(weights, minimum=1) -> tuple[int, ...]:
    w = tuple(int(p) for p in weights)
    if any(p < minimum for p in w):
        raise InvalidAlgebraError(f"weights must be >= {minimum}, got {list(w)}")
    return w


@dataclass(frozen=True)
class Star:
    """Star quiver [p1,...,pt]: arms with p_i - 1 vertices, oriented away from the centre."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights))

    @property
    def n_vertices(self) -> int:
        return 1 + sum(p - 1 for p in self.weights)

    def quiver(self) -> Quiver:
        arrows = []
        nxt = 2
        for p in self.weights:
            prev = 1
            for _ in range(p - 1):
                arrows.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Quiver(nxt - 1, tuple(arrows))


@dataclass(frozen=True)
class Canonical:
    """Canonical algebra: source, t arms of p_i - 1 vertices, sink.

    Fewer than two weights are padded with 1 (a direct arrow source -> sink).
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights))

    @property
    def n_vertices(self) -> int:
        return 2 + sum(p - 1 for p in self.weights)


@dataclass(frozen=True)
class ExtendedCanonical:
    """Canonical algebra with one more sink attached to the old sink."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights))

    @property
    def n_vertices(self) -> int:
        return 3 + sum(p - 1 for p in self.weights)


@dataclass(frozen=True)
class Supercanonical:
    """Source and sink joined through t >= 2 poset arms (empty posets allowed)."""

    posets: tuple[PosetAlgebra, ...]

    def __post_init__(self):
        object.__setattr__(self, "posets", tuple(self.posets))
        if len(self.posets) < 2:
            raise InvalidAlgebraError("supercanonical algebras need at least two poset arms")
        for s in self.posets:
            if s.zero_relations:
                raise InvalidAlgebraError("poset arms must not carry zero relations")

    @property
    def n_vertices(self) -> int:
        return 2 + sum(s.n for s in self.posets)


@dataclass(frozen=True)
class Ladder:
    """Two-row ladders with commutative squares.

    Vertices are interleaved top/bottom (t1, b1, t2, b2, ...), so the first
    s vertices of a ladder again form a ladder. B has rows of equal length,
    C one extra top vertex, D one extra bottom vertex whose incoming
    length-two path from the last top vertex is a zero relation.
    """

    variant: str
    n: int

    def __post_init__(self):
        v = str(self.variant).upper()
        object.__setattr__(self, "variant", v)
        if v not in ("B", "C", "D"):
            raise InvalidAlgebraError(f"unknown ladder variant {self.variant!r}")
        if v == "B" and (self.n < 2 or self.n % 2):
            raise InvalidAlgebraError("ladder B_n needs an even n >= 2")
        if v in ("C", "D") and (self.n < 3 or self.n % 2 == 0):
            raise InvalidAlgebraError(f"ladder {v}_n needs an odd n >= 3")

    @property
    def n_vertices(self) -> int:
        return self.n

    def as_poset(self) -> PosetAlgebra:
        m = self.n // 2
        top = {k: 2 * k - 1 for k in range(1, m + 1)}
        bot = {k: 2 * k for k in range(1, m + 1)}
        if self.variant == "C":
            top[m + 1] = self.n
        if self.variant == "D":
            bot[m + 1] = self.n
        covers = [(top[k], bot[k]) for k in range(1, m + 1)]
        covers += [(top[k], top[k + 1]) for k in range(1, len(top))]
        covers += [(bot[k], bot[k + 1]) for k in range(1, len(bot))]
        zeros = [(top[m], bot[m + 1])] if self.variant == "D" else []
        return PosetAlgebra(self.n, tuple(covers), tuple(zeros))


AlgebraSpec = Union[
    PathAlgebra, MonomialAlgebra, PosetAlgebra, LinearWithRelations, Star,
    Canonical, ExtendedCanonical, Supercanonical, Ladder,
]


# --------------------------------------------------------------------------
# Cartan matrices

def _monomial_cartan(quiver: Quiver, relations: Sequence[tuple[int, ...]]) -> list[list[int]]:
    n = quiver.n
    succ = quiver.successors()
    prefixes = {r[:k] for r in relations for k in range(1, len(r))}
    ending: dict[int, list[tuple]] = {}
    for r in relations:
        ending.setdefault(r[-1], []).append(r)

    def settle(seq: tuple) -> tuple:
        for k in range(len(seq)):
            if seq[k:] in prefixes:
                return seq[k:]
        return ()

    order = quiver.topological_order()
    pos = {v: i for i, v in enumerate(order)}
    c = [[0] * n for _ in range(n)]
    for s in range(1, n + 1):
        c[s - 1][s - 1] = 1
        layer: dict[int, dict[tuple, int]] = {s: {settle((s,)): 1}}
        for v in order[pos[s]:]:
            states = layer.pop(v, None)
            if not states:
                continue
            for st, cnt in states.items():
                for w in succ[v]:
                    seq = st + (w,) if st else (v, w)
                    if any(len(r) <= len(seq) and seq[-len(r):] == r for r in ending.get(w, ())):
                        continue
                    c[s - 1][w - 1] += cnt
                    bucket = layer.setdefault(w, {})
                    key = settle(seq)
                    bucket[key] = bucket.get(key, 0) + cnt
    return c


def _poset_cartan(p: PosetAlgebra) -> list[list[int]]:
    leq = p.order()
    n = p.n
    c = [[int(leq[i][j]) for j in range(1, n + 1)] for i in range(1, n + 1)]
    for a, b in p.zero_relations:
        for i in range(1, n + 1):
            if not leq[i][a]:
                continue
            for j in range(1, n + 1):
                if leq[b][j]:
                    c[i - 1][j - 1] = 0
    return c


def _canonical_cartan(weights: Sequence[int]) -> list[list[int]]:
    arms = [p - 1 for p in weights]
    n = 2 + sum(arms)
    c = [[int(i == j) for j in range(n)] for i in range(n)]
    c[0][n - 1] = 2
    start = 1
    for k in arms:
        idx = list(range(start, start + k))
        for a_pos, a in enumerate(idx):
            c[0][a] = 1
            c[a][n - 1] = 1
            for b in idx[a_pos + 1:]:
                c[a][b] = 1
        start += k
    return c


def _supercanonical_cartan(posets: Sequence[PosetAlgebra]) -> list[list[int]]:
    n = 2 + sum(s.n for s in posets)
    c = [[int(i == j) for j in range(n)] for i in range(n)]
    c[0][n - 1] = 2
    start = 1
    for s in posets:
        leq = s.order()
        for i in range(1, s.n + 1):
            c[0][start + i - 1] = 1
            c[start + i - 1][n - 1] = 1
            for j in range(1, s.n + 1):
                if leq[i][j]:
                    c[start + i - 1][start + j - 1] = 1
        start += s.n
    return c


def _projective_cartan(a) -> list[list[int]]:
    if isinstance(a, PathAlgebra):
        return _monomial_cartan(a.quiver, ())
    if isinstance(a, MonomialAlgebra):
        return _monomial_cartan(a.quiver, a.relations)
    if isinstance(a, PosetAlgebra):
        return _poset_cartan(a)
    if isinstance(a, (LinearWithRelations, Ladder)):
        return _poset_cartan(a.as_poset())
    if isinstance(a, Star):
        return _monomial_cartan(a.quiver(), ())
    if isinstance(a, Canonical):
        return _canonical_cartan(a.weights)
    if isinstance(a, ExtendedCanonical):
        c = IntMatrix(_canonical_cartan(a.weights))
        sink_column = [row[-1] for row in c]
        return extend_cartan(c, sink_column).tolist()
    if isinstance(a, Supercanonical):
        return _supercanonical_cartan(a.posets)
    raise InvalidAlgebraError(f"unsupported algebra description {type(a).__name__}")


def cartan_matrix(a: AlgebraSpec, basis: CartanBasis = CartanBasis.PROJECTIVES) -> IntMatrix:
    """Cartan matrix of ``a``.

    In the simples basis the matrix is the inverse of the projectives one;
    it represents the same Euler form in dimension-vector coordinates.
    """
    c = IntMatrix(_projective_cartan(a))
    if basis is CartanBasis.SIMPLES:
        return inverse_unimodular(c)
    return c


def dim_hom_count(a: AlgebraSpec, i: int, j: int) -> int:
    """Number of nonzero paths i -> j, counted modulo the relations."""
    n = a.n_vertices
    if not (1 <= i <= n and 1 <= j <= n):
        raise ArgumentError(f"vertex out of range 1..{n}")
    return _projective_cartan(a)[i - 1][j - 1]


def extend_cartan(c: IntMatrix, m: Sequence[int]) -> IntMatrix:
    """One-point extension: append a new last vertex whose column is (m, 1)."""
    m = list(m)
    if len(m) != c.n:
        raise ArgumentError(f"extension vector has length {len(m)}, expected {c.n}")
    rows = [list(r) + [mi] for r, mi in zip(c.rows, m)]
    rows.append([0] * c.n + [1])
    return IntMatrix(rows)


def euler_form(c: IntMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != c.n or len(y) != c.n:
        raise ArgumentError("vector length does not match the matrix")
    cy = c @ y
    return sum(a * b for a, b in zip(x, cy))


def tits_form(q: Quiver, v: Sequence[int]) -> int:
    if len(v) != q.n:
        raise ArgumentError("vector length does not match the quiver")
    return sum(a * a for a in v) - sum(v[a - 1] * v[b - 1] for a, b in q.arrows)


# --------------------------------------------------------------------------
# JSON input

def _resolve_relation(quiver: Quiver, rel: Sequence[int]) -> tuple[int, ...]:
    rel = tuple(int(v) for v in rel)
    if len(rel) != 2:
        return rel
    # endpoints only: the path between them must be unique
    a, b = rel
    succ = quiver.successors()
    paths, stack = [], [(a,)]
    while stack:
        p = stack.pop()
        if p[-1] == b:
            paths.append(p)
            continue
        for w in succ[p[-1]]:
            stack.append(p + (w,))
        if len(paths) > 1:
            break
    if len(paths) != 1:
        raise InvalidAlgebraError(f"relation [{a},{b}] does not name a unique path")
    return paths[0]


def _weights(obj) -> tuple[int, ...]:
    w = obj.get("weights")
    if isinstance(w, str):
        w = [int(t) for t in w.split(",") if t.strip()]
    if not isinstance(w, list):
        raise InvalidAlgebraError("missing 'weights' list")
    return tuple(int(p) for p in w)


def algebra_from_dict(obj: dict) -> AlgebraSpec:
    """Build an algebra from its JSON description (see README for the kinds)."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidAlgebraError("algebra description needs a 'kind' field")
    kind = str(obj["kind"]).lower().replace("-", "_")
    try:
        if kind in ("path", "monomial"):
            q = Quiver(int(obj["vertices"]), tuple(tuple(a) for a in obj.get("arrows", [])))
            rels = obj.get("relations", [])
            if not rels:
                return PathAlgebra(q)
            return MonomialAlgebra(q, tuple(_resolve_relation(q, r) for r in rels))
        if kind == "linear":
            return LinearWithRelations(int(obj["vertices"]), tuple(tuple(r) for r in obj.get("relations", [])))
        if kind == "poset":
            return PosetAlgebra(int(obj["vertices"]), tuple(tuple(c) for c in obj.get("covers", [])),
                                tuple(tuple(z) for z in obj.get("zero_relations", [])))
        if kind == "star":
            return Star(_weights(obj))
        if kind == "canonical":
            return Canonical(_weights(obj))
        if kind in ("extended_canonical", "extendedcanonical"):
            return ExtendedCanonical(_weights(obj))
        if kind == "supercanonical":
            return Supercanonical(tuple(
                PosetAlgebra(int(p["vertices"]), tuple(tuple(c) for c in p.get("covers", [])))
                for p in obj["posets"]))
        if kind == "ladder":
            return Ladder(str(obj["variant"]), int(obj["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidAlgebraError):
            raise
        raise InvalidAlgebraError(f"malformed {kind} description: {exc}") from exc
    raise InvalidAlgebraError(f"unknown algebra kind {obj['kind']!r}")


def algebra_from_json(text: str) -> AlgebraSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidAlgebraError(f"invalid JSON: {exc}") from exc
    return algebra_from_dict(obj)


def x3_linear(n: int) -> LinearWithRelations:
    """1->2->...->n with every composition of three consecutive arrows zero."""
    return LinearWithRelations(n, tuple((i, i + 3) for i in range(1, n - 2)))
