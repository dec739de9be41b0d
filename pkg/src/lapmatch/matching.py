"""Matching polynomials and matching counts.

Two independent routes are kept deliberately: ``matching_polynomial`` runs the
vertex-expansion recursion with memoization, while ``matching_counts_oracle``
enumerates every matching by backtracking over edges.  Their agreement is one
of the package's standing cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DomainError
from .graphs import Graph
from .polynomials import (
    Poly,
    count_roots_halfopen,
    normalize,
    sign_at,
    square_free_part,
    sturm_chain,
    cauchy_root_bound,
)


@dataclass(frozen=True)
class MatchingProfile:
    """counts[i] = number of i-matchings; counts[0] is 1 for the empty matching."""

    counts: tuple[int, ...]

    def polynomial(self, n: int) -> Poly:
        out = [0] * (n + 1)
        for i, phi in enumerate(self.counts):
            out[n - 2 * i] = (-1) ** i * phi
        return normalize(out)


def iter_matchings(g: Graph) -> Iterator[tuple[int, int]]:
    """Yield (covered-vertex mask, size) for every matching of g, empty included.

    Matchings are produced in increasing lexicographic order of their edge
    index sets, each exactly once.
    """
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    m = len(masks)

    def rec(start: int, used: int, size: int):
        yield used, size
        for j in range(start, m):
            if masks[j] & used:
                continue
            yield from rec(j + 1, used | masks[j], size + 1)

    yield from rec(0, 0, 0)


def matching_counts_oracle(g: Graph) -> MatchingProfile:
    """Exact i-matching counts by exhaustive backtracking (oracle use only)."""
    counts = [0] * (g.n // 2 + 1)
    for _, size in iter_matchings(g):
        counts[size] += 1
    return MatchingProfile(tuple(counts))


def matching_polynomial(g: Graph) -> Poly:
    """Matching polynomial via expansion at a vertex, one component at a time.

    The recursion expands at a maximum-degree vertex of the current component
    and memoizes on the vertex subset of the ambient graph (sound because all
    recursive subgraphs are induced subgraphs of it).  The cache lives only
    for this call.
    """
    adj = g.adj
    cache: dict[int, Poly] = {}

    def poly_of(mask: int) -> Poly:
        out: Poly = [1]
        for comp in _split_components(adj, mask):
            out = _mul(out, connected_poly(comp))
        return out

    def connected_poly(mask: int) -> Poly:
        cached = cache.get(mask)
        if cached is not None:
            return cached
        size = mask.bit_count()
        if size == 1:
            return [0, 1]
        v = max(_mask_bits(mask), key=lambda w: (adj[w] & mask).bit_count())
        rest = mask & ~(1 << v)
        result = [0] + poly_of(rest)
        for u in _mask_bits(adj[v] & mask):
            result = _sub(result, poly_of(rest & ~(1 << u)))
        cache[mask] = result
        return result

    return poly_of((1 << g.n) - 1)


def _split_components(adj, mask: int) -> list[int]:
    out = []
    remaining = mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            fresh = adj[v] & mask & ~comp
            comp |= fresh
            frontier |= fresh
        out.append(comp)
        remaining &= ~comp
    return out


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def _sub(p: Poly, q: Poly) -> Poly:
    out = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def matching_roots_within_degree_bound(g: Graph) -> bool:
    """Exact check that every root r of the matching polynomial has
    r^2 < 4*(max_degree - 1), i.e. |r| < 2*sqrt(max_degree - 1).

    The matching polynomial has fixed exponent parity, so substituting y = x^2
    turns the strict two-sided bound into a one-sided Sturm count against the
    integer threshold 4*(max_degree - 1).
    """
    if g.max_degree < 2:
        raise DomainError("bound check needs max degree >= 2")
    p = matching_polynomial(g)
    parity = g.n % 2
    if any(c != 0 for c in p[1 - parity::2]):
        raise DomainError("matching polynomial lost its exponent parity")
    ypoly = normalize(p[parity::2])
    threshold = Fraction(4 * (g.max_degree - 1))
    if sign_at(ypoly, threshold) == 0:
        return False
    sf = square_free_part(ypoly)
    chain = sturm_chain(sf)
    upper = Fraction(cauchy_root_bound(ypoly))
    if upper <= threshold:
        return True
    return count_roots_halfopen(sf, threshold, upper, chain) == 0
