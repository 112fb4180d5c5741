"""Graph series ``sum_n q^(n A n/2 + b.n) / prod (q)_{n_i}`` by pruned enumeration."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, canonical_form, disjoint_union, point
from .series import QSeries, div_one_minus, conv


@dataclass(frozen=True)
class GraphSeriesJob:
    graph: Graph
    framing: tuple
    order: int

    def __post_init__(self):
        if len(self.framing) != self.graph.n:
            raise ValueError(f"framing has {len(self.framing)} entries, graph has {self.graph.n} vertices")
        if any((not isinstance(b, int)) or b < 1 for b in self.framing):
            raise ValueError("framing entries must be positive integers")
        if self.order < 1:
            raise ValueError("order must be >= 1")


class _Enumerator:
    """Memoised recursion over induced subgraphs.

    ``F(U, c, B)`` is the sum over ``n`` supported on the vertex set ``U`` of
    ``q^(sum c_v n_v + sum_{uv edge in U} n_u n_v) / prod (q)_{n_v}``, as a
    coefficient list of length ``B+1``.  Disconnected ``U`` factorises; a
    connected ``U`` branches on its highest-degree vertex.  Since every
    ``c_v >= 1`` the exponent is at least ``sum n_v`` and each branch stops
    once ``n_v c_v > B``.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.memo = {}

    def run(self, c: tuple, order: int) -> list:
        full = (1 << self.g.n) - 1
        return self.F(full, c, order)

    def F(self, U: int, c: tuple, B: int) -> list:
        if B < 0:
            return []
        if U == 0:
            return [1] + [0] * B
        key = (U, tuple(c[v] for v in _bits(U)), B)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        comps = self.g.components(U)
        if len(comps) > 1:
            out = None
            for comp in comps:
                part = self.F(comp, c, B)
                out = part if out is None else conv(out, part, B + 1)
            self.memo[key] = out
            return out
        if U & (U - 1) == 0:
            v = U.bit_length() - 1
            out = [1] + [0] * B
            for h in range(c[v], B + 1):
                div_one_minus(out, h)
            self.memo[key] = out
            return out
        adj = self.g.adj
        v = max(_bits(U), key=lambda x: (bin(adj[x] & U).count("1"), -x))
        rest = U & ~(1 << v)
        nbrs = adj[v] & rest
        out = [0] * (B + 1)
        n = 0
        cc = list(c)
        while n * c[v] <= B:
            shift = n * c[v]
            sub = self.F(rest, tuple(cc), B - shift)
            if n:
                sub = list(sub)
                for h in range(1, n + 1):
                    if h > len(sub) - 1:
                        break
                    div_one_minus(sub, h)
            for i, x in enumerate(sub):
                if x:
                    out[i + shift] += x
            n += 1
            for w in _bits(nbrs):
                cc[w] += 1
        self.memo[key] = out
        return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_series(graph: Graph, order: int, framing=None) -> QSeries:
    """Graph series through ``q^order`` (framing defaults to all ones)."""
    b = tuple(framing) if framing is not None else (1,) * graph.n
    job = GraphSeriesJob(graph, b, order)
    coeffs = _Enumerator(job.graph).run(job.framing, order)
    return QSeries.make(coeffs, 0, order)


def gamma_multisum(k: int, order: int) -> QSeries:
    """The (k+1)-fold sum form of the graph series of the gamma family:

    ``(q)_inf^-(k+1) * sum_x q^(x_0+..+x_k) / prod_{j=1..k} (1 - q^(1+x_0+..+x_j))``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    N = order
    total = [0] * (N + 1)

    # x_0 .. x_k with running sum s; the factor for j >= 1 uses s_j = x_0+..+x_j
    def rec(j: int, s: int, coeffs: list):
        # coeffs: product of denominators so far, aligned at q^0, numerator q^s applied at the end
        if j == k:
            for i, x in enumerate(coeffs):
                if i + s > N:
                    break
                total[i + s] += x
            return
        x = 0
        while s + x <= N:
            nxt = list(coeffs[: N - s - x + 1])
            div_one_minus(nxt, 1 + s + x)
            rec(j + 1, s + x, nxt)
            x += 1

    for x0 in range(N + 1):
        rec(0, x0, [1] + [0] * (N - x0))
    s = QSeries.make(total, 0, N)
    from .series import euler_product
    return s * euler_product(N) ** (-(k + 1))


def hilbert_via_ct(g: Graph, T: int) -> list:
    """Hilbert series of the edge algebra through ``t^T`` as a constant term.

    The charge-``n`` part of the framed character is
    ``q^(n A n/2 + |n|) / prod (q)_{n_i}``; substituting ``x_i = t/q`` and
    taking the ``q^0`` coefficient keeps ``t^|n|`` times the coefficient of
    ``q^(-n A n/2)`` in ``prod 1/(q)_{n_i}``.  The DFS cuts every branch whose
    quadratic part already exceeds what the remaining budget can absorb.
    """
    if T < 0:
        raise ValueError("T must be >= 0")
    inv_poch = [_inv_poch(n, T) for n in range(T + 1)]
    out = [0] * (T + 1)
    n = g.n
    adj = g.adj
    counts = [0] * n

    def rec(v: int, total: int, quad: int):
        # quad = sum of n_u n_v over edges among assigned vertices; the
        # prefactor q^(-quad) needs a q^quad term from a series of
        # valuation 0, so only quad == 0 can reach the constant term.
        if v == n:
            prod = [1]
            for x in counts:
                if x:
                    prod = conv(prod, inv_poch[x], 1)
            out[total] += prod[0] if quad == 0 else 0
            return
        x = 0
        while total + x <= T:
            extra = x * sum(counts[w] for w in _bits(adj[v] & ((1 << v) - 1)))
            if quad + extra > 0:
                break
            counts[v] = x
            rec(v + 1, total + x, quad + extra)
            x += 1
        counts[v] = 0

    rec(0, 0, 0)
    return out


@lru_cache(maxsize=None)
def _inv_poch(n: int, L: int) -> list:
    c = [1] + [0] * L
    for h in range(1, n + 1):
        div_one_minus(c, h)
    return c


# ---------------------------------------------------------------- census

def graph_classes(nmax: int) -> list:
    """Isomorphism classes of simple graphs on ``1..nmax`` vertices, grown by
    adding one vertex with every possible neighbourhood."""
    levels = [[point()]]
    for n in range(2, nmax + 1):
        seen = {}
        for g in levels[-1]:
            for mask in range(1 << g.n):
                adj = list(g.adj) + [mask]
                for v in range(g.n):
                    if mask >> v & 1:
                        adj[v] |= 1 << g.n
                h = Graph(n, tuple(adj))
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        levels.append([seen[k] for k in sorted(seen)])
    return levels


def census(nmax: int, order: int = 16, threads: int = 1) -> list:
    """Number of distinct truncated graph series per vertex count."""
    if not 1 <= nmax <= 6:
        raise ValueError("census supports 1 <= nmax <= 6")
    if order < 12:
        raise ValueError("census needs order >= 12")
    levels = graph_classes(nmax)
    out = []
    for graphs in levels:
        if threads > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=threads) as ex:
                series = list(ex.map(_series_key, graphs, [order] * len(graphs)))
        else:
            series = [_series_key(g, order) for g in graphs]
        out.append(len(set(series)))
    return out


def _series_key(g: Graph, order: int) -> tuple:
    return graph_series(g, order).coeffs
