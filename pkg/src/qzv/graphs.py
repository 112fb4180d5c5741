"""Simple graphs, the named families, and edge-algebra Hilbert series.

Vertices are 0-indexed internally; the JSON format and the family
descriptions use 1-indexed labels.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the neighbour bitmask of ``i``."""

    n: int
    adj: tuple

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build from 1-indexed edge pairs."""
        adj = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) out of range for {n} vertices")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(adj))

    @classmethod
    def from_matrix(cls, rows) -> "Graph":
        n = len(rows)
        adj = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            if row[i]:
                raise ValueError("adjacency matrix must have zero diagonal")
            mask = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                if x != rows[j][i]:
                    raise ValueError("adjacency matrix must be symmetric")
                if x:
                    mask |= 1 << j
            adj.append(mask)
        return cls(n, tuple(adj))

    def matrix(self) -> list:
        return [[(self.adj[i] >> j) & 1 for j in range(self.n)] for i in range(self.n)]

    def edges(self) -> list:
        """1-indexed edges ``(i, j)`` with ``i < j``."""
        return [(i + 1, j + 1) for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i] >> j & 1]

    def num_edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        """1-indexed adjacency test."""
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def permuted(self, perm) -> "Graph":
        """Relabel vertex ``v`` as ``perm[v]`` (0-indexed)."""
        adj = [0] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.adj[i] >> j & 1:
                    adj[perm[i]] |= 1 << perm[j]
        return Graph(self.n, tuple(adj))

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in range(self.n):
                    if self.adj[v] >> w & 1:
                        if color[w] < 0:
                            color[w] = 1 - color[v]
                            stack.append(w)
                        elif color[w] == color[v]:
                            return False
        return True

    def components(self, mask: int | None = None) -> list:
        """Connected components (bitmasks) of the subgraph induced on ``mask``."""
        if mask is None:
            mask = (1 << self.n) - 1
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.adj[v] & mask & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


# ---------------------------------------------------------------- families

def build_basic(kind: str, size: int = 1) -> Graph:
    """``point``, ``path`` (``size`` vertices), ``cycle``, ``simple_star``
    (a center joined to ``size`` leaves)."""
    if kind == "point":
        return Graph(1, (0,))
    if size < 1:
        raise ValueError(f"{kind} needs size >= 1")
    if kind == "path":
        return Graph.from_edges(size, [(i, i + 1) for i in range(1, size)])
    if kind == "cycle":
        if size < 3:
            raise ValueError("cycle needs size >= 3")
        return Graph.from_edges(size, [(i, i % size + 1) for i in range(1, size + 1)])
    if kind == "simple_star":
        return Graph.from_edges(size + 1, [(1, i) for i in range(2, size + 2)])
    raise ValueError(f"unknown graph kind {kind!r}")


def point() -> Graph:
    return build_basic("point")


def build_gamma(k: int) -> Graph:
    """The leafless family on ``3k+2`` vertices generalising the pentagon."""
    if k < 1:
        raise ValueError("gamma family needs k >= 1")
    n = 3 * k + 2
    edges = {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}
    for i in range(5, 3 * k + 2):
        edges.add((i, i + 1))
    for t in range(2, k + 1):
        edges.add((1, 3 * t + 2))
        edges.add((4, 3 * t + 2))
    for s in range(2, k):
        for l in range(s, k):
            edges.add((3 * s + 1, 3 * (l + 1) + 2))
    return Graph.from_edges(n, sorted(edges))


def build_T(k: int) -> Graph:
    """Star with ``k`` legs of length two and one leg of length one.

    Vertex 1 is the center; leg ``j`` is ``1 - 2j - 2j+1``; the short leg is
    vertex ``2k+2``."""
    if k < 2:
        raise ValueError("T family needs k >= 2")
    edges = []
    for j in range(1, k + 1):
        edges += [(1, 2 * j), (2 * j, 2 * j + 1)]
    edges.append((1, 2 * k + 2))
    return Graph.from_edges(2 * k + 2, edges)


def build_Z(a) -> Graph:
    """Bipartite graph attached to a composition ``(a_1..a_k)``.

    Vertices ``1..k`` carry the matching partners ``k'`` placed last.  For
    each ``i`` we attach ``a_i`` gadgets: a new center adjacent to nodes
    ``1..k-i+1`` together with its own leaf (numbered center+1)."""
    a = list(a)
    if not a or any((not isinstance(x, int)) or x < 1 for x in a):
        raise ValueError("Z graph needs a nonempty sequence of positive integers")
    k = len(a)
    n = 2 * k + 2 * sum(a)
    edges = []
    nxt = k + 1
    for i, ai in enumerate(a, start=1):
        for _ in range(ai):
            center, leaf = nxt, nxt + 1
            nxt += 2
            edges += [(v, center) for v in range(1, k - i + 2)]
            edges.append((center, leaf))
    for v in range(1, k + 1):
        edges.append((v, nxt + v - 1))
    return Graph.from_edges(n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [m << g1.n for m in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def parse_graph(text: str) -> Graph:
    """Shorthand (``pt``, ``cycle:n``, ``path:n``, ``star:n``, ``gamma:k``,
    ``T:k``, ``Z:a1,a2,..``, ``A+B`` for disjoint unions) or inline JSON."""
    text = text.strip()
    if text.startswith("{"):
        obj = json.loads(text)
        return Graph.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    if "+" in text:
        parts = [parse_graph(p) for p in text.split("+")]
        g = parts[0]
        for h in parts[1:]:
            g = disjoint_union(g, h)
        return g
    name, _, arg = text.partition(":")
    try:
        if name == "pt":
            return point()
        if name == "cycle":
            return build_basic("cycle", int(arg))
        if name == "path":
            return build_basic("path", int(arg))
        if name == "star":
            return build_basic("simple_star", int(arg))
        if name == "gamma":
            return build_gamma(int(arg))
        if name == "T":
            return build_T(int(arg))
        if name == "Z":
            return build_Z([int(x) for x in arg.split(",")])
    except ValueError as exc:
        raise ValueError(f"bad graph spec {text!r}: {exc}") from None
    raise ValueError(f"unknown graph spec {text!r}")


# ---------------------------------------------------------------- invariants

def independence_profile(g: Graph) -> list:
    """Number of independent sets of each size ``0..alpha(g)``."""
    if g.n > 32:
        raise ValueError("independence enumeration limited to 32 vertices")
    counts = [0] * (g.n + 1)

    def dfs(start: int, forbidden: int, size: int):
        counts[size] += 1
        for v in range(start, g.n):
            if not forbidden >> v & 1:
                dfs(v + 1, forbidden | g.adj[v] | (1 << v), size + 1)

    dfs(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


@dataclass(frozen=True)
class HilbertRF:
    """``numerator(t) / (1-t)^pole_order`` in lowest terms."""

    numerator: tuple
    pole_order: int

    def expand(self, terms: int) -> list:
        """First ``terms`` Taylor coefficients in ``t``."""
        out = []
        d = self.pole_order
        for j in range(terms):
            s = 0
            for i, h in enumerate(self.numerator):
                if i <= j:
                    s += h * (math.comb(j - i + d - 1, d - 1) if d else int(j == i))
            out.append(s)
        return out

    def __str__(self):
        num = " + ".join(
            (f"{c}" if i == 0 else f"{c}*t" if i == 1 else f"{c}*t^{i}") for i, c in enumerate(self.numerator) if c
        )
        return f"({num})/(1-t)^{self.pole_order}"


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hilbert_series(g: Graph) -> HilbertRF:
    """Hilbert series of ``k[x]/(x_i x_j : ij edge)`` from the independence
    profile: ``sum_j ind_j t^j (1-t)^(alpha-j) / (1-t)^alpha``."""
    prof = independence_profile(g)
    alpha = len(prof) - 1
    num = [0] * (alpha + 1)
    for j, c in enumerate(prof):
        p = [1]
        for _ in range(alpha - j):
            p = _poly_mul(p, [1, -1])
        for i, x in enumerate(p):
            num[i + j] += c * x
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    d = alpha
    # cancel common factors of (1-t)
    while d and sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        d -= 1
    return HilbertRF(tuple(num), d)


def adjacency_determinant(g: Graph) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = g.matrix()
    n = g.n
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def canonical_form(g: Graph) -> bytes:
    """Lexicographically minimal upper-triangle encoding over all vertex
    orderings (brute force, ``n <= 8``)."""
    if g.n > 8:
        raise ValueError("canonical form by brute force limited to 8 vertices")
    n = g.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = None
    for perm in itertools.permutations(range(n)):
        # perm[p] = original vertex placed at position p
        code = bytes(g.adj[perm[i]] >> perm[j] & 1 for i, j in pairs)
        if best is None or code < best:
            best = code
    return bytes([n]) + (best or b"")
