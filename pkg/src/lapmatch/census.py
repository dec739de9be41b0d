"""Census of spanning subgraphs whose components are trees or unicyclic.

Every enumeration here is spanning: isolated vertices count as order-1 tree
components with weight factor 1.  A subgraph with s unicyclic components and
tree components of orders t_1..t_k has weight 2^s * t_1 * ... * t_k; weights
of i-edge subgraphs sum to the polynomial coefficient b_i.  Enumerations are
sequential and deterministic (lexicographic over the stored edge order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, SizeCapError
from .graphs import Graph

# Subset-enumeration budget per operation call; inputs beyond it are refused.
EDGE_SUBSET_CAP = 5_000_000

PARTITION_VERTEX_CAP = 12


@dataclass(frozen=True)
class TUSubgraph:
    """A spanning subgraph with tree/unicyclic components, as an edge-index mask."""

    edge_mask: int
    unicyclic_components: int
    tree_orders: tuple[int, ...]

    @property
    def weight(self) -> int:
        w = 1 << self.unicyclic_components
        for t in self.tree_orders:
            w *= t
        return w


def component_profile(g: Graph, edge_mask: int):
    """(unicyclic count, tree orders) for the spanning subgraph, or None if some
    component has more edges than vertices."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edge_count = [0] * g.n
    mask = edge_mask
    while mask:
        low = mask & -mask
        idx = low.bit_length() - 1
        mask ^= low
        u, v = g.edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            edge_count[rv] += edge_count[ru] + 1
        else:
            edge_count[ru] += 1
    sizes = [0] * g.n
    for v in range(g.n):
        sizes[find(v)] += 1
    unicyclic = 0
    tree_orders = []
    for r in range(g.n):
        if sizes[r] == 0:
            continue
        if edge_count[r] == sizes[r] - 1:
            tree_orders.append(sizes[r])
        elif edge_count[r] == sizes[r]:
            unicyclic += 1
        else:
            return None
    return unicyclic, tuple(sorted(tree_orders))


def iter_tu_subgraphs(g: Graph, i: int):
    """All spanning TU-subgraphs with exactly i edges, lexicographic by edge indices."""
    _check_subset_budget(g.m, i)
    for combo in combinations(range(g.m), i):
        mask = 0
        for idx in combo:
            mask |= 1 << idx
        profile = component_profile(g, mask)
        if profile is not None:
            yield TUSubgraph(mask, profile[0], profile[1])


def coefficient_b(g: Graph, i: int) -> int:
    """b_i: total weight of all spanning TU-subgraphs with i edges."""
    if not 1 <= i <= g.n:
        raise DomainError(f"coefficient index must satisfy 1 <= i <= n={g.n}, got {i}")
    if i > g.m:
        return 0
    return sum(h.weight for h in iter_tu_subgraphs(g, i))


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees via a fraction-free determinant of a Laplacian minor."""
    if not g.is_connected:
        return 0
    if g.n == 1:
        return 1
    size = g.n - 1
    mat = [[0] * size for _ in range(size)]
    for v in range(1, g.n):
        mat[v - 1][v - 1] = g.degree(v)
    for u, v in g.edges:
        if u >= 1 and v >= 1:
            mat[u - 1][v - 1] -= 1
            mat[v - 1][u - 1] -= 1
    return _bareiss_determinant(mat)


def _bareiss_determinant(mat: list[list[int]]) -> int:
    """Integer determinant by Bareiss elimination; all intermediates stay integral."""
    n = len(mat)
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for swap in range(k + 1, n):
                if a[swap][k] != 0:
                    a[k], a[swap] = a[swap], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unicyclic_spanning_count(g: Graph) -> int:
    """Number of connected spanning subgraphs with exactly n edges."""
    if g.m < g.n:
        return 0
    _check_subset_budget(g.m, g.n)
    count = 0
    for combo in combinations(range(g.m), g.n):
        mask = 0
        for idx in combo:
            mask |= 1 << idx
        profile = component_profile(g, mask)
        if profile is not None and profile[0] == 1 and not profile[1]:
            count += 1
    return count


def unicyclic_cycle_lengths(g: Graph) -> list[int]:
    """Cycle length of every unicyclic spanning subgraph (2-core size of each)."""
    _check_subset_budget(g.m, g.n)
    out = []
    for combo in combinations(range(g.m), g.n):
        mask = 0
        for idx in combo:
            mask |= 1 << idx
        profile = component_profile(g, mask)
        if profile is None or profile[0] != 1 or profile[1]:
            continue
        deg = [0] * g.n
        alive_edges = {g.edges[i] for i in combo}
        for u, v in alive_edges:
            deg[u] += 1
            deg[v] += 1
        alive = set(range(g.n))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if deg[v] == 1:
                    alive.discard(v)
                    for a, b in list(alive_edges):
                        if v in (a, b):
                            alive_edges.discard((a, b))
                            other = b if a == v else a
                            deg[other] -= 1
                    deg[v] = 0
                    changed = True
        out.append(len(alive))
    return out


@dataclass(frozen=True)
class RatioCheck:
    spanning_trees: int
    unicyclic_spanning: int
    girth: int
    cycle_space_dim: int
    holds: bool


def ratio_check(g: Graph) -> RatioCheck:
    """Exact cross-multiplied test of spanning_trees/unicyclic >= girth/cycle_dim."""
    from .graphs import structural_metrics

    metrics = structural_metrics(g)
    if not metrics.is_connected:
        raise DomainError("ratio check needs a connected graph")
    if metrics.cycle_space_dim < 1 or metrics.girth is None:
        raise DomainError("ratio check needs at least one cycle")
    trees = spanning_tree_count(g)
    unicyclic = unicyclic_spanning_count(g)
    holds = trees * metrics.cycle_space_dim >= unicyclic * metrics.girth
    return RatioCheck(trees, unicyclic, metrics.girth, metrics.cycle_space_dim, holds)


@dataclass(frozen=True)
class AdmissiblePartition:
    """Vertex partition whose every block induces a connected graph with a cycle."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        for i, block in enumerate(self.blocks):
            if v in block:
                return i
        raise DomainError(f"vertex {v} not covered by the partition")

    def pair_type(self, e: tuple[int, int]) -> str:
        return "I" if self.block_of(e[0]) == self.block_of(e[1]) else "II"


def admissible_partitions(g: Graph):
    """Enumerate set partitions (restricted-growth order) whose blocks all induce
    connected subgraphs containing a cycle.  Blocks of fewer than three vertices
    can never qualify, which prunes the growth early."""
    if g.n > PARTITION_VERTEX_CAP:
        raise SizeCapError(f"partition enumeration capped at n={PARTITION_VERTEX_CAP}")
    max_blocks = g.n // 3
    if max_blocks == 0:
        return
    assignment = [0] * g.n

    def admissible_block(vertices: list[int]) -> bool:
        if len(vertices) < 3:
            return False
        sub = g.induced(vertices)
        return sub.is_connected and sub.m >= sub.n

    def rec(v: int, used: int):
        if v == g.n:
            blocks = [[] for _ in range(used)]
            for w, lab in enumerate(assignment):
                blocks[lab].append(w)
            if all(admissible_block(block) for block in blocks):
                yield AdmissiblePartition(tuple(tuple(b) for b in blocks))
            return
        limit = min(used + 1, max_blocks)
        for lab in range(limit):
            assignment[v] = lab
            yield from rec(v + 1, max(used, lab + 1))

    yield from rec(0, 0)


@dataclass(frozen=True)
class PartitionRatioCheck:
    pair_type: str
    ratio: Fraction
    holds: bool


def partition_ratio_check(g: Graph, e: tuple[int, int], partition: AdmissiblePartition) -> PartitionRatioCheck:
    """Tree/unicyclic count ratio attached to a candidate edge and a partition.

    Same-block pairs (type I) get T(B)/H1(B) for the block B holding both ends;
    split pairs (type II) get T(B1)/(2 H1(B1)) + T(B2)/(2 H1(B2)).  Both are
    compared against 1 exactly.
    """
    u, v = e
    if u == v or g.has_edge(u, v):
        raise DomainError(f"({u},{v}) is not a candidate non-edge")
    covered = sorted(w for block in partition.blocks for w in block)
    if covered != list(range(g.n)):
        raise DomainError("partition does not cover the vertex set exactly once")

    def block_ratio(block: tuple[int, ...]) -> Fraction:
        sub = g.induced(block)
        trees = spanning_tree_count(sub)
        unicyclic = unicyclic_spanning_count(sub)
        if unicyclic == 0:
            raise DomainError("partition block admits no unicyclic spanning subgraph")
        return Fraction(trees, unicyclic)

    bu, bv = partition.block_of(u), partition.block_of(v)
    if bu == bv:
        ratio = block_ratio(partition.blocks[bu])
        return PartitionRatioCheck("I", ratio, ratio > 1)
    ratio = block_ratio(partition.blocks[bu]) / 2 + block_ratio(partition.blocks[bv]) / 2
    return PartitionRatioCheck("II", ratio, ratio > 1)


def filtered_weight(g: Graph, require=(), forbid=()) -> int:
    """Total weight of n-edge spanning TU-subgraphs containing every edge in
    ``require`` and avoiding every edge in ``forbid``."""
    edge_index = {edge: k for k, edge in enumerate(g.edges)}

    def indices(pairs) -> set[int]:
        out = set()
        for u, v in pairs:
            key = (u, v) if u < v else (v, u)
            if key not in edge_index:
                raise DomainError(f"({u},{v}) is not an edge of the graph")
            out.add(edge_index[key])
        return out

    need = indices(require)
    avoid = indices(forbid)
    if need & avoid:
        raise DomainError("require and forbid overlap")
    take = g.n - len(need)
    if take < 0:
        return 0
    pool = [k for k in range(g.m) if k not in need and k not in avoid]
    if take > len(pool):
        return 0
    _check_subset_budget(len(pool), take)
    base = 0
    for k in need:
        base |= 1 << k
    total = 0
    for combo in combinations(pool, take):
        mask = base
        for idx in combo:
            mask |= 1 << idx
        profile = component_profile(g, mask)
        if profile is not None:
            s, orders = profile
            w = 1 << s
            for t in orders:
                w *= t
            total += w
    return total


def _check_subset_budget(m: int, i: int) -> None:
    if i < 0 or i > m:
        return
    if comb(m, i) > EDGE_SUBSET_CAP:
        raise SizeCapError(
            f"enumerating C({m},{i}) = {comb(m, i)} edge subsets exceeds the cap {EDGE_SUBSET_CAP}"
        )
