"""Per-graph invariant suites behind the ``verify`` command.

Each suite returns a list of human-readable failure strings (empty = pass).
Checks that are theorems are asserted; quantities outside a theorem's
hypotheses are computed but never turned into failures, so a verify run can
only go red on a genuine defect.
"""

from __future__ import annotations

from fractions import Fraction

from . import census
from .errors import Graph6ParseError, LapmatchError, SizeCapError
from .graphs import Graph, is_star, parse_graph6, structural_metrics
from .laplacian import lm_direct, lm_roots, lm_subdivision, lm_tu
from .matching import (
    matching_counts_oracle,
    matching_polynomial,
    matching_roots_within_degree_bound,
)
from .polynomials import (
    cauchy_root_bound,
    count_roots_halfopen,
    evaluate,
    square_free_part,
)

SUITE_NAMES = ("identities", "roots", "census", "partitions")


def suite_identities(g: Graph) -> list[str]:
    failures = []
    profile = matching_counts_oracle(g)
    recursive = matching_polynomial(g)
    if profile.polynomial(g.n) != recursive:
        failures.append("matching polynomial disagrees with the matching-count oracle")
    direct = lm_direct(g)
    subdiv = lm_subdivision(g)
    if direct.coeffs != subdiv.coeffs:
        failures.append(
            f"direct route {list(direct.coeffs)} != subdivision route {list(subdiv.coeffs)}"
        )
    try:
        tu = lm_tu(g)
    except SizeCapError:
        tu = None
    if tu is not None and direct.coeffs != tu.coeffs:
        failures.append(f"direct route {list(direct.coeffs)} != census route {list(tu.coeffs)}")
    if direct.b[1] != 2 * g.m:
        failures.append(f"b_1 = {direct.b[1]} differs from degree sum {2 * g.m}")
    return failures


def suite_roots(g: Graph) -> list[str]:
    failures = []
    if not g.is_connected:
        return failures
    try:
        roots = lm_roots(g)
    except LapmatchError as exc:
        return [f"root certification failed: {exc}"]
    if roots.total_multiplicity != g.n:
        failures.append(f"certified {roots.total_multiplicity} real roots, expected {g.n}")
    if any(e.low < 0 for e in roots.entries):
        failures.append("an isolating interval extends below 0")

    poly = list(roots.source)
    metrics = structural_metrics(g)
    b_n = lm_direct(g).b[g.n]
    if (b_n == 0) != metrics.is_tree:
        failures.append(f"b_n = {b_n} does not match tree status {metrics.is_tree}")

    if g.n >= 2:
        threshold = Fraction(g.max_degree + 1)
        at_threshold = evaluate(poly, g.max_degree + 1)
        sf = square_free_part(poly)
        above = count_roots_halfopen(sf, threshold, Fraction(cauchy_root_bound(poly)))
        if at_threshold != 0 and above == 0:
            failures.append("largest root is below max_degree + 1")
        equality = at_threshold == 0 and above == 0
        if equality != is_star(g):
            failures.append(
                f"largest root equals max_degree + 1: {equality}, but is_star = {is_star(g)}"
            )
    if g.max_degree >= 2 and not matching_roots_within_degree_bound(g):
        failures.append("a matching root leaves the open degree-bound interval")
    return failures


def suite_census(g: Graph) -> list[str]:
    failures = []
    if not g.is_connected:
        return failures
    metrics = structural_metrics(g)
    if metrics.cycle_space_dim >= 1:
        try:
            check = census.ratio_check(g)
            lengths = census.unicyclic_cycle_lengths(g)
        except SizeCapError:
            return failures
        if not check.holds:
            failures.append(
                f"tree/unicyclic ratio fails: {check.spanning_trees}*{check.cycle_space_dim}"
                f" < {check.unicyclic_spanning}*{check.girth}"
            )
        if len(lengths) != check.unicyclic_spanning:
            failures.append("cycle-length census disagrees with the unicyclic count")
        total = sum(lengths)
        if total != check.spanning_trees * check.cycle_space_dim:
            failures.append(
                f"sum of unicyclic cycle lengths {total} != trees*cycle_dim "
                f"{check.spanning_trees * check.cycle_space_dim}"
            )
        if total < check.unicyclic_spanning * check.girth:
            failures.append("sum of unicyclic cycle lengths dips below unicyclic*girth")
    for e in g.non_edges():
        plus = g.add_edge(*e)
        try:
            whole = census.filtered_weight(plus)
            with_e = census.filtered_weight(plus, require=[e])
            without_e = census.filtered_weight(plus, forbid=[e])
            base = census.filtered_weight(g)
        except SizeCapError:
            break
        if whole != with_e + without_e:
            failures.append(f"weight split fails for edge {e}")
        if without_e != base:
            failures.append(f"weights avoiding {e} differ from the base graph's weights")
    return failures


def suite_partitions(g: Graph) -> list[str]:
    """Type I/II ratio checks; asserted only where girth/cycle_dim > 1 makes
    them theorems (blocks inherit the strict ratio via the counting bound)."""
    failures = []
    if not g.is_connected:
        return failures
    metrics = structural_metrics(g)
    if metrics.cycle_space_dim < 1 or metrics.girth is None:
        return failures
    asserted = metrics.girth > metrics.cycle_space_dim
    try:
        partitions = list(census.admissible_partitions(g))
    except SizeCapError:
        return failures
    for partition in partitions:
        for e in g.non_edges():
            check = census.partition_ratio_check(g, e, partition)
            if asserted and not check.holds:
                failures.append(
                    f"type {check.pair_type} ratio {check.ratio} <= 1 for edge {e}, "
                    f"blocks {partition.blocks}"
                )
    return failures


_SUITES = {
    "identities": suite_identities,
    "roots": suite_roots,
    "census": suite_census,
    "partitions": suite_partitions,
}


def run_suite(g: Graph, suite: str) -> list[str]:
    if suite == "all":
        out = []
        for name in SUITE_NAMES:
            out.extend(f"{name}: {msg}" for msg in _SUITES[name](g))
        return out
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [f"{suite}: {msg}" for msg in _SUITES[suite](g)]


def verify_record(lineno: int, line: str, suite: str, max_size: int | None = None) -> dict:
    """Worker-friendly verification of one graph6 line; returns a plain dict."""
    try:
        g = parse_graph6(line)
    except Graph6ParseError as exc:
        return {"line": lineno, "graph": line, "suite": suite, "ok": False,
                "failures": [], "error": f"parse error: {exc}"}
    if max_size is not None and g.n + g.m > max_size:
        return {"line": lineno, "graph": line, "suite": suite, "ok": True,
                "failures": [], "error": f"skipped: n+m={g.n + g.m} exceeds max size {max_size}"}
    failures = run_suite(g, suite)
    return {"line": lineno, "graph": line, "suite": suite, "ok": not failures,
            "failures": failures, "error": None}
