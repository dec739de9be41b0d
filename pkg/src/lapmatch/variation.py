"""Edge-addition root variation: exact detectors, interlacing, and corpus scans.

Adding an edge raises the root sum by exactly 2 and interlaces the root
multisets; the detectors below decide, by pure integer polynomial identities,
whether the variation is integral in one place (a single root up by 2) or in
two places (two roots up by 1).  Root intervals are only used to verify the
interlacing chain and to render report decimals, never to decide a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InternalInconsistencyError
from .graphs import Graph, structural_metrics, write_graph6
from .laplacian import lm_direct, lm_roots
from .polynomials import (
    Poly,
    RootInterval,
    compare_roots,
    evaluate,
    format_decimal,
    multiply,
    parse_decimal,
    shift_argument,
)

REPORT_WIDTH = Fraction(1, 10 ** 12)
DISPLAY_PLACES = 9

OBSTRUCTION_TAGS = ("TREE", "DEGSUM_LE_3", "BOTH_DEG_2", "DEG1_GIRTH_RATIO", "GIRTH_RATIO_7_6")


@dataclass(frozen=True)
class ObstructionTag:
    tag: str
    witness: dict

    def to_json_dict(self) -> dict:
        return {"tag": self.tag, "witness": dict(self.witness)}


@dataclass(frozen=True)
class VariationReport:
    graph: str
    edge: tuple[int, int]
    degrees: tuple[int, int]
    deltas: tuple[str, ...]
    interlacing_ok: bool
    sum_increment: int
    one_place: bool
    two_place: bool
    obstructions: tuple[ObstructionTag, ...] = field(default_factory=tuple)
    near_miss: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph,
            "edge": list(self.edge),
            "degrees": list(self.degrees),
            "deltas": list(self.deltas),
            "interlacing_ok": self.interlacing_ok,
            "sum_increment": self.sum_increment,
            "one_place": self.one_place,
            "two_place": self.two_place,
            "obstructions": [o.to_json_dict() for o in self.obstructions],
            "near_miss": self.near_miss,
        }


def _checked_pair(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if not g.is_connected:
        raise DomainError("variation analysis needs a connected graph")
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise DomainError(f"({u},{v}) is not a vertex pair of the graph")
    if g.has_edge(u, v):
        raise DomainError(f"({u},{v}) is already an edge")
    return (min(u, v), max(u, v))


def _one_place_identity(before: Poly, after: Poly, deg_sum: int) -> bool:
    # A one-place change would move the largest root up by 2 and force
    # 2*lambda_1 = d_i + d_j, i.e. (2x - D - 4) * before = (2x - D) * after.
    left = multiply([-deg_sum - 4, 2], before)
    right = multiply([-deg_sum, 2], after)
    return left == right


def _two_place_identity(before: Poly, after: Poly, d1: int, d2: int) -> bool:
    # A two-place change forces the two moved roots to be the roots of
    # Q(x) = x^2 - (d1 + d2 + 1) x + d1*d2, giving before * Q(x-1) = after * Q(x).
    # The multiset identity stays correct when shifted roots collide.
    q = [d1 * d2, -(d1 + d2 + 1), 1]
    left = multiply(before, shift_argument(q, 1))
    right = multiply(after, q)
    if left != right:
        return False
    if evaluate(before, 0) * evaluate(shift_argument(q, 1), 0) != evaluate(after, 0) * evaluate(q, 0):
        raise InternalInconsistencyError("two-place identity failed its x=0 consequence")
    return True


def detect_one_place(g: Graph, e: tuple[int, int]) -> bool:
    """Exact test for a single root moving up by 2 (provably never fires)."""
    u, v = _checked_pair(g, e)
    before = list(lm_direct(g).coeffs)
    after = list(lm_direct(g.add_edge(u, v)).coeffs)
    return _one_place_identity(before, after, g.degree(u) + g.degree(v))


def detect_two_place(g: Graph, e: tuple[int, int]) -> bool:
    """Exact test for two roots moving up by 1 each."""
    u, v = _checked_pair(g, e)
    before = list(lm_direct(g).coeffs)
    after = list(lm_direct(g.add_edge(u, v)).coeffs)
    return _two_place_identity(before, after, g.degree(u), g.degree(v))


def applicable_obstructions(g: Graph, e: tuple[int, int]) -> list[ObstructionTag]:
    """Every obstruction whose hypotheses hold for this graph and candidate edge."""
    u, v = _checked_pair(g, e)
    d1, d2 = g.degree(u), g.degree(v)
    metrics = structural_metrics(g)
    out = []
    if metrics.is_tree:
        out.append(ObstructionTag("TREE", {"n": g.n, "m": g.m}))
    if d1 + d2 <= 3:
        out.append(ObstructionTag("DEGSUM_LE_3", {"d_i": d1, "d_j": d2}))
    if d1 == 2 and d2 == 2:
        out.append(ObstructionTag("BOTH_DEG_2", {"d_i": d1, "d_j": d2}))
    c = metrics.cycle_space_dim
    girth = metrics.girth
    if girth is not None and c >= 1:
        if (d1 == 1 or d2 == 1) and girth > c:
            out.append(
                ObstructionTag(
                    "DEG1_GIRTH_RATIO",
                    {"d_i": d1, "d_j": d2, "girth": girth, "cycle_dim": c},
                )
            )
        if 6 * girth > 7 * c:
            out.append(ObstructionTag("GIRTH_RATIO_7_6", {"girth": girth, "cycle_dim": c}))
    return out


def variation_report(
    g: Graph,
    e: tuple[int, int],
    graph_id: str | None = None,
    width: Fraction = REPORT_WIDTH,
) -> VariationReport:
    """Full per-edge record: deltas, interlacing, detector verdicts, obstructions."""
    u, v = _checked_pair(g, e)
    return _pair_report(g, (u, v), graph_id, width, lm_direct(g), lm_roots(g))


def _pair_report(
    g: Graph,
    e: tuple[int, int],
    graph_id: str | None,
    width: Fraction,
    before,
    roots_before,
) -> VariationReport:
    u, v = e
    plus = g.add_edge(u, v)
    after = lm_direct(plus)

    sum_increment = after.b[1] - before.b[1]
    if sum_increment != 2:
        raise InternalInconsistencyError(f"root sum moved by {sum_increment}, expected 2")

    roots_after = lm_roots(plus)
    old = _expanded(roots_before)
    new = _expanded(roots_after)
    sf_old = list(roots_before.square_free)
    sf_new = list(roots_after.square_free)

    # lambda_i(G+e) >= lambda_i(G) >= lambda_{i+1}(G+e), decided exactly.
    for i in range(g.n):
        cmp, new[i], old[i] = compare_roots(sf_new, new[i], sf_old, old[i])
        if cmp < 0:
            raise InternalInconsistencyError(f"interlacing failed at position {i} (upper)")
        if i + 1 < g.n:
            cmp, old[i], new[i + 1] = compare_roots(sf_old, old[i], sf_new, new[i + 1])
            if cmp < 0:
                raise InternalInconsistencyError(f"interlacing failed at position {i} (lower)")

    old = [_narrow(sf_old, r, width) for r in old]
    new = [_narrow(sf_new, r, width) for r in new]
    deltas = sorted((b.midpoint - a.midpoint for a, b in zip(old, new)), reverse=True)

    d1, d2 = g.degree(u), g.degree(v)
    report = VariationReport(
        graph=graph_id if graph_id is not None else write_graph6(g),
        edge=(u, v),
        degrees=(d1, d2),
        deltas=tuple(format_decimal(d, DISPLAY_PLACES) for d in deltas),
        interlacing_ok=True,
        sum_increment=sum_increment,
        one_place=_one_place_identity(list(before.coeffs), list(after.coeffs), d1 + d2),
        two_place=_two_place_identity(list(before.coeffs), list(after.coeffs), d1, d2),
        obstructions=tuple(applicable_obstructions(g, (u, v))),
        near_miss=format_decimal(_near_miss(deltas), DISPLAY_PLACES),
    )
    return report


def _expanded(roots) -> list[RootInterval]:
    """Descending list of n root handles, repeating each interval per multiplicity."""
    out = []
    for entry in roots.entries:
        out.extend([RootInterval(entry.low, entry.high, 1)] * entry.multiplicity)
    return out


def _narrow(sf: Poly, entry: RootInterval, width: Fraction) -> RootInterval:
    if entry.is_exact or entry.width <= width:
        return entry
    from .polynomials import _bisect

    low, high = _bisect(sf, entry.low, entry.high, width)
    return RootInterval(low, high, entry.multiplicity)


def _near_miss(deltas: list[Fraction]) -> Fraction:
    """Distance from the sorted delta vector to the nearest integral pattern
    ((2, 0, ..) or (1, 1, 0, ..)); informational only."""
    n = len(deltas)
    best = None
    for pattern in ([2] + [0] * (n - 1), [1, 1] + [0] * (n - 2) if n >= 2 else [2]):
        dev = max(abs(d - p) for d, p in zip(deltas, pattern))
        if best is None or dev < best:
            best = dev
    return best


def scan_graph(g: Graph, graph_id: str | None = None) -> list[VariationReport]:
    """Variation reports for every non-edge, in lexicographic edge order."""
    non_edges = g.non_edges()
    if not non_edges:
        return []
    _checked_pair(g, non_edges[0])
    gid = graph_id if graph_id is not None else write_graph6(g)
    before = lm_direct(g)
    roots_before = lm_roots(g)
    return [_pair_report(g, e, gid, width=REPORT_WIDTH, before=before, roots_before=roots_before)
            for e in non_edges]


def scan_record(lineno: int, line: str, max_size: int | None = None) -> dict:
    """Worker-friendly scan of one graph6 line; returns plain dicts."""
    from .graphs import parse_graph6
    from .errors import Graph6ParseError

    try:
        g = parse_graph6(line)
    except Graph6ParseError as exc:
        return {"line": lineno, "reports": [], "notice": f"parse error: {exc}"}
    if max_size is not None and g.n + g.m > max_size:
        return {
            "line": lineno,
            "reports": [],
            "notice": f"skipped: n+m={g.n + g.m} exceeds max size {max_size}",
        }
    if not g.is_connected:
        return {"line": lineno, "reports": [], "notice": "skipped: not connected"}
    reports = [r.to_json_dict() for r in scan_graph(g, graph_id=line)]
    return {"line": lineno, "reports": reports, "notice": None}


def summarize_scan(records: list[dict]) -> dict:
    """Totals over per-line scan records, separating theorem-covered negatives
    from merely-observed ones and tracking the closest near miss."""
    graphs = 0
    pairs = 0
    one_place = 0
    two_place = 0
    obstructed_false = 0
    unobstructed_false = 0
    parse_errors = 0
    skipped = 0
    min_near: Fraction | None = None
    min_at: dict | None = None
    hits: list[dict] = []
    for record in records:
        if record["notice"] is not None:
            if record["notice"].startswith("parse error"):
                parse_errors += 1
            else:
                skipped += 1
            continue
        graphs += 1
        for report in record["reports"]:
            pairs += 1
            if report["one_place"]:
                one_place += 1
            if report["two_place"]:
                two_place += 1
                hits.append({"graph": report["graph"], "edge": report["edge"]})
            elif report["obstructions"]:
                obstructed_false += 1
            else:
                unobstructed_false += 1
            near = parse_decimal(report["near_miss"])
            if min_near is None or near < min_near:
                min_near = near
                min_at = {"graph": report["graph"], "edge": report["edge"]}
    summary = {
        "graphs": graphs,
        "pairs": pairs,
        "one_place": one_place,
        "two_place": two_place,
        "obstructed_false": obstructed_false,
        "unobstructed_false": unobstructed_false,
        "two_place_hits": hits,
        "min_near_miss": format_decimal(min_near, DISPLAY_PLACES) if min_near is not None else None,
        "min_near_miss_at": min_at,
        "skipped": skipped,
        "parse_errors": parse_errors,
    }
    return summary
