"""Simplicial complexes and exact reduced homology over a chosen field.

Complexes are given by a vertex count plus a downward-closed face oracle;
faces are enumerated by increasing cardinality.  All linear algebra is
exact: fraction-free integer elimination in characteristic zero, modular
elimination over GF(p).  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graphs import Graph, VertexSet, bits

MAX_COMPLEX_VERTICES = 20


class SizeLimitError(ValueError):
    """Raised when an instance exceeds the enumerable size limits."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: exact rationals (p == 0) or GF(p) for prime p."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("field characteristic must be nonnegative")
        if self.p > 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "0", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        raise ValueError(f"unrecognized field spec {text!r} (use 'q' or 'gf:p')")

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


# ---------------------------------------------------------------------------
# exact rank


def rank(rows: Sequence[Sequence[int]], fld: FieldSpec = QQ) -> int:
    """Exact rank of an integer matrix over the given field.

    Over the rationals this uses fraction-free (Bareiss-style) elimination
    on sparse integer rows; over GF(p) plain modular elimination.
    """
    sparse = []
    for row in rows:
        r = {}
        for j, a in enumerate(row):
            a = int(a) if fld.p == 0 else int(a) % fld.p
            if a:
                r[j] = a
        if r:
            sparse.append(r)
    return _rank_sparse(sparse, fld)


def _rank_sparse(rows: list[dict[int, int]], fld: FieldSpec) -> int:
    """Rank of sparse rows (dict col -> nonzero int).  Destroys input."""
    p = fld.p
    rnk = 0
    while rows:
        # Markowitz-ish pivot: shortest row, smallest |entry| within it.
        pivot_row = min(rows, key=len)
        rows.remove(pivot_row)
        pc, pv = min(pivot_row.items(), key=lambda kv: (abs(kv[1]), kv[0]))
        rnk += 1
        new_rows = []
        for row in rows:
            a = row.pop(pc, 0)
            if a:
                if p:
                    factor = a * pow(pv, -1, p) % p
                    for j, b in pivot_row.items():
                        if j == pc:
                            continue
                        c = (row.get(j, 0) - factor * b) % p
                        if c:
                            row[j] = c
                        else:
                            row.pop(j, None)
                else:
                    # fraction-free: row <- pv*row - a*pivot (rank-preserving)
                    for j in list(row):
                        row[j] *= pv
                    for j, b in pivot_row.items():
                        if j == pc:
                            continue
                        c = row.get(j, 0) - a * b
                        if c:
                            row[j] = c
                        else:
                            row.pop(j, None)
                    g = 0
                    for c in row.values():
                        g = _gcd(g, c)
                        if g == 1:
                            break
                    if g > 1:
                        for j in list(row):
                            row[j] //= g
            if row:
                new_rows.append(row)
        rows = new_rows
    return rnk


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex on vertices {0..vertices-1} via a face oracle.

    The oracle must be downward closed; ``is_void`` distinguishes the void
    complex (no faces at all) from the irrelevant complex {emptyset}.
    """

    vertices: int
    is_face: Callable[[VertexSet], bool]
    is_void: bool = False

    def faces_by_cardinality(self) -> list[list[int]]:
        """Face masks grouped by cardinality, each group sorted ascending."""
        if self.vertices > MAX_COMPLEX_VERTICES:
            raise SizeLimitError(
                f"complex on {self.vertices} vertices too large to enumerate"
            )
        if self.is_void or not self.is_face(0):
            return []
        levels = [[0]]
        while True:
            prev = levels[-1]
            nxt = []
            for f in prev:
                top = f.bit_length()
                for v in range(top, self.vertices):
                    cand = f | 1 << v
                    if self.is_face(cand):
                        nxt.append(cand)
            if not nxt:
                break
            levels.append(sorted(nxt))
        return levels

    def dim(self) -> int:
        """Dimension (-1 for {emptyset}; -2 conventionally for void)."""
        levels = self.faces_by_cardinality()
        return len(levels) - 2


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent sets of g (the Stanley-Reisner complex of
    the edge ideal)."""
    return SimplicialComplex(g.n, g.is_independent)


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal by its minimal generating supports."""

    n: int
    generators: frozenset[int]  # bitmask supports, inclusion-minimal

    @classmethod
    def from_supports(cls, n: int, supports) -> "SquarefreeIdeal":
        sups = {int(s) for s in supports}
        if 0 in sups:
            raise ValueError("the unit ideal is not supported")
        minimal = {
            s for s in sups
            if not any(t != s and t & s == t for t in sups)
        }
        return cls(n, frozenset(minimal))

    @classmethod
    def edge_ideal(cls, g: Graph) -> "SquarefreeIdeal":
        return cls.from_supports(
            g.n, ((1 << v) | (1 << w) for v, w in g.edges())
        ) if g.num_edges() else cls(g.n, frozenset())

    def contains_support(self, s: int) -> bool:
        """True iff the squarefree monomial with support s lies in the ideal."""
        return any(gmask & s == gmask for gmask in self.generators)

    def divides_exponent(self, exp: tuple[int, ...]) -> bool:
        """True iff some generator divides the monomial with these exponents."""
        sup = 0
        for i, e in enumerate(exp):
            if e:
                sup |= 1 << i
        return self.contains_support(sup)


def stanley_reisner_complex(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Faces are the subsets supporting no generator of the ideal."""
    return SimplicialComplex(
        ideal.n, lambda s: not ideal.contains_support(s)
    )


def restrict(cx: SimplicialComplex, w: VertexSet) -> SimplicialComplex:
    """Restriction to the vertex subset w, re-indexed to {0..|w|-1}."""
    keep = list(bits(w))
    if any(v >= cx.vertices for v in keep):
        raise ValueError("restriction set has out-of-range vertices")

    def lifted(s: int) -> bool:
        lift = 0
        for new, old in enumerate(keep):
            if s >> new & 1:
                lift |= 1 << old
        return cx.is_face(lift)

    return SimplicialComplex(len(keep), lifted, is_void=cx.is_void)


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_dim); empty for the void complex."""

    counts: tuple[int, ...]


def f_vector(cx: SimplicialComplex) -> FVector:
    levels = cx.faces_by_cardinality()
    return FVector(tuple(len(level) for level in levels))


def boundary_matrix(levels: list[list[int]], c: int) -> list[list[int]]:
    """Signed boundary matrix from cardinality-c faces to cardinality c-1.

    For c == 1 this is the augmentation map onto the empty face.
    """
    rows = levels[c]
    cols = {f: j for j, f in enumerate(levels[c - 1])}
    mat = []
    for f in rows:
        row = [0] * len(cols)
        sign = 1
        for v in bits(f):
            row[cols[f ^ (1 << v)]] = sign
            sign = -sign
        mat.append(row)
    return mat


def reduced_homology_dims(cx: SimplicialComplex, fld: FieldSpec = QQ) -> list[int]:
    """dim H~_i for i = -1 .. dim(cx); empty list for the void complex.

    Conventions: the complex {emptyset} has H~_{-1} = 1; the void complex
    has no reduced homology at all.
    """
    levels = cx.faces_by_cardinality()
    if not levels:
        return []
    ranks = [0] * (len(levels) + 1)
    for c in range(1, len(levels)):
        ranks[c] = rank(boundary_matrix(levels, c), fld)
    return [
        len(levels[c]) - ranks[c] - ranks[c + 1] for c in range(len(levels))
    ]


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Sum of (-1)^i f_i over i >= -1, straight from the face counts."""
    fv = f_vector(cx).counts
    return sum((-1) ** (c - 1) * fc for c, fc in enumerate(fv))
