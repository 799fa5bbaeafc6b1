"""Explicit graphs realizing each feasible (dim, depth, reg) triple.

The regularity-1 base family is a split graph: an independent part A of
size d covered by a clique part B, with per-B-vertex cover sizes capped
at d - p + 1.  Split graphs are chordal with co-chordal complement, so
the family lands exactly on (d, p, 1); correctness is nevertheless
enforced by engine validation rather than trusted.

Higher regularity is reached by adding pendant edge pairs and a single
apex vertex, following the two suspension constructions (the cases
r <= p and r > p differ in which vertices the apex misses).
"""

from __future__ import annotations

from .graphs import (
    Graph,
    disjoint_union,
    empty_graph,
    from_edges,
    star,
    to_graph6,
)
from .regions import in_cstar, in_cstarstar


class OutsideRegionError(ValueError):
    """Requested tuple lies outside the feasible region."""


class WitnessValidationError(AssertionError):
    """A constructed witness failed its engine check (a bug, not bad input)."""


def independent_set_of_size(g: Graph, size: int) -> int:
    """Lexicographically least independent set of exactly the given size."""

    def grow(current: int, start: int, need: int) -> int | None:
        if need == 0:
            return current
        for v in range(start, g.n):
            if not g.adj[v] & current:
                found = grow(current | 1 << v, v + 1, need - 1)
                if found is not None:
                    return found
        return None

    result = grow(0, 0, size)
    if result is None:
        raise ValueError(f"graph has no independent set of size {size}")
    return result


def split_witness(n: int, d: int, p: int) -> Graph:
    """Connected split graph on n vertices realizing (dim, depth, reg) =
    (d, p, 1).

    Vertices 0..d-1 form the independent part A, vertices d..n-1 the
    clique part B; vertex d covers exactly d-p+1 of A, the remaining
    A-vertices are spread over the rest of B with cover sizes in
    [1, d-p+1], and surplus B-vertices attach to A-vertex 0.
    """
    if n < 2:
        raise OutsideRegionError(f"split witness needs n >= 2, got {n}")
    if not in_cstar(n, (d, p)):
        raise OutsideRegionError(f"(d, p) = ({d}, {p}) outside the pair region for n = {n}")
    cap = d - p + 1
    q = n - d
    edges = [(u, v) for u in range(d, n) for v in range(u + 1, n)]  # B clique
    next_a = 0
    for b in range(d, n):
        if next_a < d:
            take = min(cap, d - next_a) if b > d else cap
            for _ in range(take):
                edges.append((next_a, b))
                next_a += 1
        else:
            edges.append((0, b))  # surplus clique vertex
    assert next_a == d, "split cover failed to reach every A-vertex"
    return from_edges(n, edges)


def _reg1_witness(n: int, d: int, p: int) -> Graph:
    """Possibly-disconnected graph realizing (d, p, 1): a split witness
    padded with isolated vertices (each isolated vertex shifts dim and
    depth up by one and leaves regularity alone)."""
    iso = max(0, d - (n - d) * (d - p + 1))
    if iso == 0:
        return split_witness(n, d, p)
    if iso > p - 1:
        raise OutsideRegionError(
            f"(d, p, 1) = ({d}, {p}, 1) unreachable on {n} vertices"
        )
    core = split_witness(n - iso, d - iso, p - iso)
    return disjoint_union(core, empty_graph(iso))


def witness(n: int, d: int, p: int, r: int, validate: bool = False) -> Graph:
    """Connected graph on n vertices with (dim, depth, reg) = (d, p, r).

    Raises OutsideRegionError when the tuple is infeasible.  With
    ``validate=True`` the result is checked by the homology engine and a
    mismatch aborts with a diagnostic dump.
    """
    if not in_cstarstar(n, (d, p, r)):
        raise OutsideRegionError(
            f"({d}, {p}, {r}) outside the feasible region for n = {n}"
        )
    g = _build_witness(n, d, p, r)
    assert g.n == n
    if validate:
        _validate(g, (d, p, r))
    return g


def _build_witness(n: int, d: int, p: int, r: int) -> Graph:
    if (d, p, r) == (n - 1, 1, 1):
        return star(n)
    if r == 1:
        return split_witness(n, d, p)

    rr = r - 1  # number of pendant pairs
    if r <= p:
        a, b = p - r, d - p
        base = _reg1_witness(n - 2 * rr - 1, 1 + a + b, 1 + a)
        skip = independent_set_of_size(base, a)  # apex misses these
        extra_apex = []
    else:
        a, b = p - 1, d - r
        base = _reg1_witness(n - 2 * rr - 1, 1 + b, 1)
        skip = 0  # apex covers all of the base graph
        # apex additionally covers the first rr - a pendant partners
        extra_apex = list(range(rr - a))

    m = base.n
    apex = n - 1
    edges = base.edges()
    for i in range(rr):
        x, y = m + 2 * i, m + 2 * i + 1
        edges.append((x, y))
        edges.append((apex, x))
    for i in extra_apex:
        edges.append((apex, m + 2 * i + 1))
    for w in range(m):
        if not skip >> w & 1:
            edges.append((apex, w))
    return from_edges(n, edges)


def _validate(g: Graph, expected: tuple[int, int, int]) -> None:
    from .kernels import graph_profile

    got = graph_profile(g)[:3]
    if got != expected:
        raise WitnessValidationError(
            f"witness check failed: expected (dim, depth, reg) = {expected}, "
            f"engine computed {got} for graph6 {to_graph6(g)!r}"
        )


def witness_manifest_rows(n: int, tuples) -> list[str]:
    """CSV rows 'n,d,p,r,graph6' for the given feasible triples."""
    return [
        f"{n},{d},{p},{r},{to_graph6(witness(n, d, p, r))}"
        for d, p, r in tuples
    ]
