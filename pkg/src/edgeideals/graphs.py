"""Simple undirected graphs on bit-indexed vertex sets, with the
combinatorial invariants and operations the rest of the package needs:
independence numbers, matchings, vertex deletion, suspensions, twin
duplication and graph6 I/O.

Vertex sets are plain Python ints used as bitmasks (vertex v <-> bit
``1 << v``), which keeps every set operation a single machine-word op
for the supported range n <= 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64

VertexSet = int  # bitmask over {0, ..., n-1}


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices contained in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Build a bitmask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[v]`` is the open neighborhood N(v).

    ``n == 0`` (the empty graph) is permitted so that vertex deletion is
    closed; constructors for user input require at least one vertex.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighborhood of {v} has out-of-range vertex")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in bits(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted pairs (i, j) with i < j."""
        out = []
        for v in range(self.n):
            for w in bits(self.adj[v] >> (v + 1) << (v + 1)):
                out.append((v, w))
        return out

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.adj[v] >> w & 1)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_independent(self, s: int) -> bool:
        """True iff the bitmask s is an independent set."""
        for v in bits(s):
            if self.adj[v] & s:
                return False
        return True


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n >= 1 vertices with the given edges (duplicates collapsed)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    adj = [0] * n
    for v, w in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise ValueError(f"edge ({v}, {w}) has endpoint outside range(0, {n})")
        if v == w:
            raise ValueError(f"loop edge ({v}, {v}) rejected")
        adj[v] |= 1 << w
        adj[w] |= 1 << v
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 encoding (McKay's format, upper triangle column-major)

_G6_HEADER = ">>graph6<<"


def _g6_pair_index(i: int, j: int) -> int:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    return j * (j - 1) // 2 + i


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n < 1:
        raise ValueError("graph6 encodes graphs with at least one vertex")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = chr(126) + "".join(
            chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0)
        )
    nbits = n * (n - 1) // 2
    bitvec = bytearray((nbits + 5) // 6)
    for v, w in g.edges():
        k = _g6_pair_index(v, w)
        bitvec[k // 6] |= 1 << (5 - k % 6)
    return head + "".join(chr(63 + b) for b in bitvec)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional '>>graph6<<' header tolerated)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(c - 63)
    if vals[0] == 63:  # chr(126): long form
        if len(vals) < 4:
            raise ValueError("truncated graph6 length prefix")
        if vals[1] == 63:
            raise ValueError("graph6 128-bit length form not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 order {n} exceeds supported maximum {MAX_VERTICES}")
    if n < 1:
        raise ValueError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}"
        )
    adj = [0] * n
    k = 0
    for b in body:
        for pos in range(5, -1, -1):
            bit = b >> pos & 1
            if k >= nbits:
                if bit:
                    raise ValueError("nonzero trailing bits in graph6 string")
            elif bit:
                # invert k = j(j-1)/2 + i
                j = 1
                while (j + 1) * j // 2 <= k:
                    j += 1
                i = k - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# basic operations


def is_connected(g: Graph) -> bool:
    """True iff a single traversal component covers all vertices (n >= 1)."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == g.vertices


class DeletionResult(NamedTuple):
    graph: Graph
    kept: tuple[int, ...]  # kept[new_index] = old_index


def delete_vertices(g: Graph, drop: int) -> DeletionResult:
    """Induced subgraph on V minus the bitmask ``drop``, with re-index map."""
    if drop & ~g.vertices:
        raise ValueError("deletion set contains out-of-range vertices")
    kept = tuple(v for v in range(g.n) if not drop >> v & 1)
    pos = {old: new for new, old in enumerate(kept)}
    adj = tuple(
        mask_of(pos[w] for w in bits(g.adj[old]) if w in pos) for old in kept
    )
    return DeletionResult(Graph(len(kept), adj), kept)


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """All inclusion-maximal independent sets, via Bron-Kerbosch with
    pivoting on the complement graph (each set yielded exactly once)."""
    full = g.vertices
    coadj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (coadj[u] & p).bit_count())
        for v in bits(p & ~coadj[pivot]):
            yield from expand(r | 1 << v, p & coadj[v], x & coadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from expand(0, full, 0)


def max_independent(g: Graph) -> int:
    """d(G): size of a largest independent set."""
    return max(s.bit_count() for s in maximal_independent_sets(g))


def min_maximal_independent(g: Graph) -> int:
    """p(G): minimum cardinality over inclusion-maximal independent sets."""
    return min(s.bit_count() for s in maximal_independent_sets(g))


def matching_number(g: Graph) -> int:
    """m(G): maximum number of pairwise disjoint edges, by branch and bound."""

    @lru_cache(maxsize=None)
    def rec(avail: int) -> int:
        for v in bits(avail):
            nbrs = g.adj[v] & avail
            if nbrs:
                best = rec(avail & ~(1 << v))  # v unmatched
                for w in bits(nbrs):
                    best = max(best, 1 + rec(avail & ~(1 << v) & ~(1 << w)))
                return best
        return 0

    result = rec(g.vertices)
    rec.cache_clear()
    return result


def induced_matching_number(g: Graph) -> int:
    """im(G): maximum matching whose matched pairs span an induced subgraph
    with no connecting edges.  Branch on the lowest vertex: skip it, or match
    it to a neighbor and discard both closed neighborhoods."""

    @lru_cache(maxsize=None)
    def rec(avail: int) -> int:
        for v in bits(avail):
            nbrs = g.adj[v] & avail
            best = rec(avail & ~(1 << v))  # v in no matched edge
            for w in bits(nbrs):
                rest = avail & ~g.closed_neighborhood(v) & ~g.closed_neighborhood(w)
                best = max(best, 1 + rec(rest))
            return best
        return 0

    result = rec(g.vertices)
    rec.cache_clear()
    return result


class GraphStats(NamedTuple):
    d: int   # max maximal-independent-set size (independence number)
    p: int   # min maximal-independent-set size
    m: int   # matching number
    im: int  # induced matching number


def graph_stats(g: Graph) -> GraphStats:
    sizes = [s.bit_count() for s in maximal_independent_sets(g)]
    return GraphStats(
        d=max(sizes),
        p=min(sizes),
        m=matching_number(g),
        im=induced_matching_number(g),
    )


def s_suspension(g: Graph, s: int) -> Graph:
    """One new vertex adjacent to exactly V minus the independent set s."""
    if not g.is_independent(s):
        raise ValueError("suspension set must be independent")
    apex_nbrs = g.vertices & ~s
    adj = [g.adj[v] | (1 << g.n if apex_nbrs >> v & 1 else 0) for v in range(g.n)]
    adj.append(apex_nbrs)
    return Graph(g.n + 1, tuple(adj))


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a twin v' with N(v') = N(v), non-adjacent to v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    twin_nbrs = g.adj[v]
    adj = [g.adj[w] | (1 << g.n if twin_nbrs >> w & 1 else 0) for w in range(g.n)]
    adj.append(twin_nbrs)
    return Graph(g.n + 1, tuple(adj))


# ---------------------------------------------------------------------------
# generators


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return from_edges(n, [(0, v) for v in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, [(v, w) for v in range(n) for w in range(v + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [nb << a.n for nb in b.adj]
    return Graph(a.n + b.n, tuple(adj))
