"""Graph characteristic polynomials and the x + 1/x representing transform."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebras import PathAlgebra, Quiver
from .errors import ArgumentError, NotRepresentableError
from .exactmath import (
    IntMatrix, IntPoly, X, as_poly, char_poly, is_self_reciprocal, squarefree_part, sturm_count,
)


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices 1..n (no loops)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        es = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.edges)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        for a, b in es:
            if a == b:
                raise ArgumentError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ArgumentError(f"edge {a}-{b} outside 1..{self.n}")

    @classmethod
    def from_quiver(cls, q: Quiver) -> "Graph":
        return cls(q.n, q.arrows)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            obj = json.loads(text)
            return cls(int(obj["vertices"]), tuple(tuple(e) for e in obj.get("edges", [])))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ArgumentError(f"malformed graph description: {exc}") from exc

    def to_dict(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.edges]}

    def adjacency(self) -> IntMatrix:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u - 1][v - 1] += 1
            a[v - 1][u - 1] += 1
        return IntMatrix(a)

    def neighbours(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def delete(self, vertices: Iterable[int]) -> "Graph":
        """Remove vertices and relabel the rest in increasing order."""
        gone = set(vertices)
        keep = [v for v in range(1, self.n + 1) if v not in gone]
        new = {v: i + 1 for i, v in enumerate(keep)}
        return Graph(len(keep), tuple((new[a], new[b]) for a, b in self.edges if a in new and b in new))

    def ramification_count(self) -> int:
        return sum(1 for v in range(1, self.n + 1) if self.degree(v) >= 3)


def graph_char_poly(g: Graph) -> IntPoly:
    return char_poly(g.adjacency())


# --------------------------------------------------------------------------
# representing transform

def _dickson_table(n: int) -> list[IntPoly]:
    # d[k] expresses x^k + x^-k as a polynomial in z = x + 1/x (d[0] = 2)
    d = [IntPoly.const(2), X]
    while len(d) <= n:
        d.append(X * d[-1] - d[-2])
    return d


def represent(p: IntPoly) -> IntPoly:
    """The q with p(x^2) = x^n q(x + 1/x), n = deg p."""
    p = as_poly(p)
    if p.is_zero() or not is_self_reciprocal(p):
        raise NotRepresentableError("only self-reciprocal polynomials are represented")
    n = p.degree
    d = _dickson_table(n)
    q = IntPoly()
    for i in range((n + 1) // 2):
        q = q + d[n - 2 * i] * p[i]
    if n % 2 == 0:
        q = q + p[n // 2]
    return q


def represented_star(q: IntPoly, n: int | None = None) -> IntPoly:
    """x^n q(x + 1/x) as an ordinary polynomial (n defaults to deg q)."""
    q = as_poly(q)
    n = q.degree if n is None else n
    if n < q.degree:
        raise ArgumentError("n must be at least deg q")
    x2p1 = IntPoly((1, 0, 1))
    out = IntPoly()
    power = IntPoly.const(1)
    for k in range(q.degree + 1):
        if q[k]:
            out = out + (power * q[k]).shift(n - k)
        power = power * x2p1
    return out


def unrepresent(q: IntPoly, n: int | None = None) -> IntPoly:
    """Inverse of ``represent``: recover p from p(x^2) = x^n q(x + 1/x)."""
    r = represented_star(q, n)
    if any(r[k] for k in range(1, len(r), 2)):
        raise NotRepresentableError("x^n q(x+1/x) is not even in x")
    return IntPoly(r.coeffs[::2])


def acampo_check(q: Quiver) -> tuple[bool, IntPoly, IntPoly]:
    """Compare chi_A(x^2) with x^n phi(x + 1/x) for the path algebra of ``q``."""
    from .coxeter import coxeter_polynomial

    chi = coxeter_polynomial(PathAlgebra(q)).poly
    lhs = IntPoly(_spread(chi))
    rhs = represented_star(graph_char_poly(Graph.from_quiver(q)), q.n)
    return lhs == rhs, lhs, rhs


def _spread(p: IntPoly) -> list[int]:
    out = [0] * (2 * len(p.coeffs))
    for k, c in enumerate(p.coeffs):
        out[2 * k] = c
    return out


def is_bipartite_orientation(q: Quiver) -> bool:
    heads = {b for _, b in q.arrows}
    tails = {a for a, _ in q.arrows}
    return not (heads & tails)


def roots_real_check(q: IntPoly) -> bool:
    q = as_poly(q)
    sf = squarefree_part(q)
    return sturm_count(sf) == sf.degree


@dataclass(frozen=True)
class RootLocation:
    real_representing: bool      # Roots(p) inside the unit circle union R+
    on_unit_circle: bool         # every root of q in [-2, 2]
    open_interval: bool          # every root of q in (-2, 2)


def roots_location(p: IntPoly) -> RootLocation:
    q = squarefree_part(represent(p))
    real = sturm_count(q) == q.degree
    closed = sturm_count(q, -2, 2) + (1 if q(-2) == 0 else 0)
    open_ = sturm_count(q, -2, 2) - (1 if q(2) == 0 else 0)
    return RootLocation(real, closed == q.degree, open_ == q.degree)


# --------------------------------------------------------------------------
# recurrences

def deletion_recurrences(g: Graph, a: int) -> bool:
    """phi = x phi(G - a) - phi(G - a - b) for a leaf a with neighbour b."""
    nb = g.neighbours(a)
    if len(nb) != 1:
        raise ArgumentError(f"vertex {a} has degree {len(nb)}, expected 1")
    b = nb[0]
    lhs = graph_char_poly(g)
    rhs = X * graph_char_poly(g.delete([a])) - graph_char_poly(g.delete([a, b]))
    return lhs == rhs


def derivative_identity(g: Graph) -> bool:
    total = IntPoly()
    for v in range(1, g.n + 1):
        total = total + graph_char_poly(g.delete([v]))
    return graph_char_poly(g).derivative() == total


def coalescence_poly(g1: Graph, v1: int, g2: Graph, v2: int) -> IntPoly:
    p1, p2 = graph_char_poly(g1), graph_char_poly(g2)
    q1, q2 = graph_char_poly(g1.delete([v1])), graph_char_poly(g2.delete([v2]))
    return p1 * q2 + q1 * p2 - X * q1 * q2


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue g2 onto g1 by identifying v2 with v1."""
    label = {}
    nxt = g1.n + 1
    for v in range(1, g2.n + 1):
        if v == v2:
            label[v] = v1
        else:
            label[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [(label[a], label[b]) for a, b in g2.edges]
    return Graph(nxt - 1, tuple(edges))


# --------------------------------------------------------------------------
# trees and isospectral mates

def star_graph(weights: Sequence[int]) -> Graph:
    from .algebras import Star

    return Graph.from_quiver(Star(tuple(weights)).quiver())


def comb_graph(arms: Sequence[int]) -> Graph:
    """Path 1..m with a path of arms[i]-1 extra vertices hanging from vertex i+1."""
    m = len(arms)
    edges = [(i, i + 1) for i in range(1, m)]
    nxt = m + 1
    for i, a in enumerate(arms, start=1):
        prev = i
        for _ in range(a - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt - 1, tuple(edges))


def trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism."""
    import networkx as nx

    if n < 1:
        return []
    if n == 1:
        return [Graph(1, ())]
    return [Graph(n, tuple((a + 1, b + 1) for a, b in t.edges())) for t in nx.nonisomorphic_trees(n)]


def _nx(g: Graph):
    import networkx as nx

    h = nx.MultiGraph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def isomorphic(g1: Graph, g2: Graph) -> bool:
    import networkx as nx

    return g1.n == g2.n and len(g1.edges) == len(g2.edges) and nx.is_isomorphic(_nx(g1), _nx(g2))


def find_isospectral_mate(g: Graph, max_vertices: int = 12) -> list[Graph]:
    """Non-isomorphic trees with the same characteristic polynomial as ``g``."""
    if g.n > max_vertices or g.n > 12:
        raise ArgumentError("tree search is limited to 12 vertices")
    target = graph_char_poly(g)
    return [t for t in trees(g.n) if graph_char_poly(t) == target and not isomorphic(t, g)]
