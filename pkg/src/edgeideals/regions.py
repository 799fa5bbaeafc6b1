"""Exact integer predicates and enumerators for the feasible regions of
(dim, depth) pairs and (dim, depth, reg) triples of edge ideals on a
fixed number of vertices.
"""

from __future__ import annotations

import json
from typing import Iterable

Tuple2 = tuple[int, int]        # (d, p)
Tuple3 = tuple[int, int, int]   # (d, p, r)


def in_cstar(n: int, t: Tuple2) -> bool:
    """Feasible (dim, depth) pairs: 1 <= p <= d <= n-1 and
    d <= (n-d)(d-p+1)."""
    if n < 2:
        raise ValueError("region defined for n >= 2")
    d, p = t
    return 1 <= p <= d <= n - 1 and d <= (n - d) * (d - p + 1)


def in_cstarstar(n: int, t: Tuple3) -> bool:
    """Feasible (dim, depth, reg) triples: the star tuple (n-1, 1, 1) plus
    the box cut out by d <= (n-d-(r-1))(d-p+1) + (r-1)."""
    if n < 3:
        raise ValueError("region defined for n >= 3")
    d, p, r = t
    if (d, p, r) == (n - 1, 1, 1):
        return True
    return (
        1 <= p <= d <= n - 2
        and 2 <= r + d <= n - 1
        and 1 <= r <= d
        and d <= (n - d - (r - 1)) * (d - p + 1) + (r - 1)
    )


def in_cc(n: int, c: int, t: Tuple2) -> bool:
    """The interpolating pair regions: 1 <= p <= d <= n-1 and
    d <= (n-d-(c-1))(d-p+1) + (c-1); c = 1 recovers in_cstar."""
    if n < 3:
        raise ValueError("region defined for n >= 3")
    if c < 1:
        raise ValueError("parameter c must be at least 1")
    d, p = t
    return 1 <= p <= d <= n - 1 and d <= (n - d - (c - 1)) * (d - p + 1) + (c - 1)


def enumerate_cstarstar(n: int) -> list[Tuple3]:
    """All feasible triples for n vertices, lexicographically sorted."""
    if n < 3:
        raise ValueError("region defined for n >= 3")
    return [
        (d, p, r)
        for d in range(1, n + 1)
        for p in range(1, n + 1)
        for r in range(1, n + 1)
        if in_cstarstar(n, (d, p, r))
    ]


def enumerate_cstar(n: int) -> list[Tuple2]:
    """All feasible pairs for n vertices, lexicographically sorted."""
    return [
        (d, p)
        for d in range(1, n)
        for p in range(1, n)
        if in_cstar(n, (d, p))
    ]


def projection_cstarstar(n: int) -> set[Tuple2]:
    """(d, p) pairs admitting some feasible r."""
    return {(d, p) for d, p, _ in enumerate_cstarstar(n)}


def tuples_to_csv(n: int, tuples: Iterable[Tuple3]) -> str:
    lines = ["n,d,p,r"]
    lines += [f"{n},{d},{p},{r}" for d, p, r in tuples]
    return "\n".join(lines) + "\n"


def tuples_to_json(n: int, tuples: Iterable[Tuple3]) -> str:
    return json.dumps(
        {"n": n, "tuples": [[d, p, r] for d, p, r in tuples]}
    )
