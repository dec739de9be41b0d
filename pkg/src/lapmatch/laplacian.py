"""The Laplacian matching polynomial by three independent routes.

Route "direct" sums (-1)^|M| * prod_{v not covered}(x - d(v)) over every
matching M.  Route "subdivision" computes the matching polynomial of the
subdivision graph and pulls the result back through the identity
M(S(G), x) = x^(m-n) * LM(G, x^2).  Route "tu-census" assembles coefficients
from the weighted census of spanning subgraphs whose components are trees or
unicyclic.  Any disagreement between routes is a hard internal error: the
routes are this package's main correctness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import census
from .errors import (
    InternalInconsistencyError,
    NotDivisibleError,
    RouteDisagreementError,
    SizeCapError,
)
from .graphs import Graph
from .matching import iter_matchings, matching_polynomial
from .polynomials import (
    Poly,
    RootInterval,
    RootSet,
    add,
    isolate_real_roots,
    multiply,
    normalize,
    sign_at,
)

ROUTE_DIRECT = "direct"
ROUTE_SUBDIVISION = "subdivision"
ROUTE_TU = "tu-census"


@dataclass(frozen=True)
class LaplacianMatchingPoly:
    """Monic degree-n polynomial sum_i (-1)^i b_i x^(n-i) with all b_i >= 0."""

    coeffs: tuple[int, ...]
    route: str

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def b(self) -> tuple[int, ...]:
        n = self.degree
        return tuple((-1) ** i * self.coeffs[n - i] for i in range(n + 1))


def _wrap(coeffs: Poly, route: str, g: Graph) -> LaplacianMatchingPoly:
    poly = LaplacianMatchingPoly(tuple(coeffs), route)
    b = poly.b
    if poly.degree != g.n or b[0] != 1 or any(x < 0 for x in b):
        raise InternalInconsistencyError(
            f"route {route} produced malformed coefficients {list(coeffs)} for n={g.n}"
        )
    if g.n >= 1 and b[1] != 2 * g.m:
        raise InternalInconsistencyError(
            f"route {route}: b_1={b[1]} but degree sum is {2 * g.m}"
        )
    return poly


def lm_direct(g: Graph) -> LaplacianMatchingPoly:
    """Sum over all matchings of (-1)^|M| * prod over uncovered v of (x - d(v))."""
    factors = [[-d, 1] for d in g.degrees]
    full = (1 << g.n) - 1
    acc: Poly = []
    for used, size in iter_matchings(g):
        term: Poly = [1]
        free = full & ~used
        while free:
            low = free & -free
            term = multiply(term, factors[low.bit_length() - 1])
            free ^= low
        if size % 2:
            term = [-c for c in term]
        acc = add(acc, term)
    return _wrap(acc, ROUTE_DIRECT, g)


def lm_subdivision(g: Graph) -> LaplacianMatchingPoly:
    """Pull the polynomial back from the matching polynomial of the subdivision."""
    sp = matching_polynomial(g.subdivision())
    shift = g.m - g.n
    if shift >= 0:
        if any(sp[:shift]):
            raise NotDivisibleError(
                f"matching polynomial of the subdivision is not divisible by x^{shift}"
            )
        sp = sp[shift:]
    else:
        sp = [0] * (-shift) + sp
    if any(sp[1::2]):
        raise InternalInconsistencyError(
            "odd-exponent coefficient survived in the subdivision pullback"
        )
    return _wrap(normalize(sp[0::2]), ROUTE_SUBDIVISION, g)


def lm_tu(g: Graph) -> LaplacianMatchingPoly:
    """Assemble coefficients from the spanning tree/unicyclic census weights."""
    n = g.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for i in range(1, n + 1):
        coeffs[n - i] = (-1) ** i * census.coefficient_b(g, i)
    return _wrap(coeffs, ROUTE_TU, g)


def cross_validated(g: Graph, include_tu: bool | None = None) -> tuple[LaplacianMatchingPoly, list[str]]:
    """Compute the polynomial by every feasible route and demand agreement.

    ``include_tu=None`` runs the census route whenever it fits the size cap.
    Returns the direct-route polynomial plus the list of routes that agreed.
    """
    direct = lm_direct(g)
    routes = {ROUTE_DIRECT: direct.coeffs}
    routes[ROUTE_SUBDIVISION] = lm_subdivision(g).coeffs
    if include_tu or include_tu is None:
        try:
            routes[ROUTE_TU] = lm_tu(g).coeffs
        except SizeCapError:
            if include_tu:
                raise
    if len(set(routes.values())) != 1:
        raise RouteDisagreementError("route disagreement", routes)
    return direct, list(routes)


def lm_roots(g: Graph) -> RootSet:
    """Certified root multiset: n real roots, all >= 0, intervals clamped to [0, inf)."""
    poly = lm_direct(g)
    roots = isolate_real_roots(list(poly.coeffs))
    if roots.total_multiplicity != g.n:
        raise InternalInconsistencyError(
            f"expected {g.n} real roots, certified {roots.total_multiplicity}"
        )
    sf = list(roots.square_free)
    zero = Fraction(0)
    clamped = []
    for entry in roots.entries:
        if entry.is_exact:
            if entry.low < 0:
                raise InternalInconsistencyError(f"negative root pinned at {entry.low}")
            clamped.append(entry)
            continue
        if entry.low >= 0:
            clamped.append(entry)
            continue
        if entry.high <= 0:
            raise InternalInconsistencyError(
                f"root in ({entry.low}, {entry.high}) certified negative"
            )
        s0 = sign_at(sf, zero)
        if s0 == 0:
            clamped.append(RootInterval(zero, zero, entry.multiplicity))
        elif s0 == sign_at(sf, entry.low):
            clamped.append(RootInterval(zero, entry.high, entry.multiplicity))
        else:
            raise InternalInconsistencyError(
                f"root in ({entry.low}, {entry.high}) certified negative"
            )
    return RootSet(roots.source, roots.square_free, tuple(clamped), roots.total_multiplicity)
