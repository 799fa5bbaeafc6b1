"""Graded Betti tables of squarefree quotients via Hochster's formula,
an independent Koszul-strand oracle, and the derived invariants of
R/I(G): Krull dimension, depth, regularity, projective dimension and
the h-polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .complexes import (
    QQ,
    FieldSpec,
    SimplicialComplex,
    SizeLimitError,
    SquarefreeIdeal,
    f_vector,
    independence_complex,
    rank,
    reduced_homology_dims,
    restrict,
    stanley_reisner_complex,
)
from .graphs import Graph, GraphStats, graph_stats, max_independent

MAX_HOCHSTER_VERTICES = 16
MAX_KOSZUL_VARIABLES = 6


@dataclass(frozen=True)
class BettiTable:
    """Bigraded Betti numbers; only nonzero entries are stored."""

    n: int
    entries: frozenset  # frozenset of ((i, j), beta) pairs

    @classmethod
    def from_dict(cls, n: int, d: dict) -> "BettiTable":
        return cls(n, frozenset((k, v) for k, v in d.items() if v))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def to_json(self) -> str:
        rows = sorted([i, j, beta] for (i, j), beta in self.entries)
        return json.dumps({"n": self.n, "entries": rows})

    def shift_to_ideal(self) -> "BettiTable":
        """Betti table of the ideal I from the table of R/I."""
        return BettiTable.from_dict(
            self.n,
            {(i - 1, j): b for (i, j), b in self.entries if i >= 1},
        )


def regularity(table: BettiTable) -> int:
    """max(j - i) over nonzero entries; 0 for an entry-free table."""
    return max((j - i for (i, j), _ in table.entries), default=0)


def projdim(table: BettiTable) -> int:
    """max(i) over nonzero entries; 0 for an entry-free table."""
    return max((i for (i, j), _ in table.entries), default=0)


def betti_table_hochster(cx: SimplicialComplex, fld: FieldSpec = QQ) -> BettiTable:
    """Betti table of R/I_Delta: sum reduced homology of all restrictions.

    beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta|_W); the W = empty
    term supplies beta_{0,0} = 1 through the H~_{-1} convention.
    """
    n = cx.vertices
    if n > MAX_HOCHSTER_VERTICES:
        raise SizeLimitError(f"Hochster enumeration over 2^{n} subsets refused")
    acc: dict = {}
    for w in range(1 << n):
        j = w.bit_count()
        dims = reduced_homology_dims(restrict(cx, w), fld)
        for c, d in enumerate(dims):
            if d:
                h = c - 1
                key = (j - h - 1, j)
                acc[key] = acc.get(key, 0) + d
    return BettiTable.from_dict(n, acc)


# ---------------------------------------------------------------------------
# Koszul-strand oracle (test oracle, exponential, n <= 6)


def _monomials(n: int, degree: int):
    """All exponent tuples of the given total degree in n variables."""
    if n == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree + 1):
        for rest in _monomials(n - 1, degree - first):
            yield (first,) + rest


def betti_table_koszul_oracle(
    ideal: SquarefreeIdeal, fld: FieldSpec = QQ
) -> BettiTable:
    """Betti table of R/I from the Koszul complex on all variables.

    For each internal degree j the strand has basis {monomial not in I of
    degree j-i} x {i-subsets of variables}; Betti numbers are kernel minus
    image dimensions from the explicit signed differentials.
    """
    n = ideal.n
    if n > MAX_KOSZUL_VARIABLES:
        raise SizeLimitError(f"Koszul oracle limited to {MAX_KOSZUL_VARIABLES} variables")
    acc: dict = {}
    for j in range(n + 1):
        bases = []
        index = []
        for i in range(j + 1):
            if i > n:
                bases.append([])
                index.append({})
                continue
            monos = [
                m for m in _monomials(n, j - i) if not ideal.divides_exponent(m)
            ]
            subsets = list(combinations(range(n), i))
            basis = [(m, t) for m in monos for t in subsets]
            bases.append(basis)
            index.append({b: k for k, b in enumerate(basis)})
        ranks = [0] * (j + 2)
        for i in range(1, j + 1):
            if not bases[i] or not bases[i - 1]:
                continue
            mat = []
            for m, t in bases[i]:
                row = [0] * len(bases[i - 1])
                sign = 1
                for pos, var in enumerate(t):
                    target_m = list(m)
                    target_m[var] += 1
                    target_m = tuple(target_m)
                    if not ideal.divides_exponent(target_m):
                        target_t = t[:pos] + t[pos + 1:]
                        row[index[i - 1][(target_m, target_t)]] += (
                            sign
                        )
                    sign = -sign
                mat.append(row)
            ranks[i] = rank(mat, fld)
        for i in range(j + 1):
            beta = len(bases[i]) - ranks[i] - ranks[i + 1]
            if beta:
                acc[(i, j)] = acc.get((i, j), 0) + beta
    return BettiTable.from_dict(n, acc)


# ---------------------------------------------------------------------------
# derived invariants of R/I(G)


def krull_dim(g: Graph) -> int:
    """dim R/I(G), which equals the independence number d(G)."""
    return max_independent(g)


def depth(g: Graph, fld: FieldSpec = QQ) -> int:
    """depth R/I(G) = n - projdim, via Hochster's formula."""
    table = betti_table_hochster(independence_complex(g), fld)
    return g.n - projdim(table)


@dataclass(frozen=True)
class HPolynomial:
    """Numerator of the Hilbert series of R/I(G) over (1-t)^dim."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        return " + ".join(terms) or "0"


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def h_polynomial(g: Graph) -> HPolynomial:
    """Exact h-polynomial from the f-vector of the independence complex:
    h(t) = sum_i f_{i-1} t^i (1-t)^(d-i)."""
    fv = f_vector(independence_complex(g)).counts
    d = len(fv) - 1  # Krull dimension
    total = [0] * (d + 1)
    for i, f_im1 in enumerate(fv):
        term = [0] * i + [f_im1]
        for _ in range(d - i):
            term = _poly_mul(term, [1, -1])
        for k, c in enumerate(term):
            total[k] += c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return HPolynomial(tuple(total))


@dataclass(frozen=True)
class InvariantTuple:
    n: int
    dim: int
    depth: int
    reg: int
    pd: int
    degh: int
    stats: GraphStats

    @property
    def ddr(self) -> tuple[int, int, int]:
        return (self.dim, self.depth, self.reg)


def invariant_tuple(g: Graph, fld: FieldSpec = QQ) -> InvariantTuple:
    """All homological invariants of R/I(G), with the standard inequalities
    asserted before returning."""
    table = betti_table_hochster(independence_complex(g), fld)
    pd = projdim(table)
    reg = regularity(table)
    dim = krull_dim(g)
    dep = g.n - pd
    degh = h_polynomial(g).degree
    stats = graph_stats(g) if g.n else GraphStats(0, 0, 0, 0)
    t = InvariantTuple(g.n, dim, dep, reg, pd, degh, stats)
    _assert_tuple_consistency(t)
    return t


def _assert_tuple_consistency(t: InvariantTuple) -> None:
    assert t.pd + t.depth == t.n, "Auslander-Buchsbaum violated"
    assert t.depth <= t.dim, "depth exceeds dimension"
    assert t.degh - t.reg <= t.dim - t.depth, "deg h bound violated"
    assert t.dim + t.reg <= t.n, "dim + reg bound violated"
    assert t.degh + t.reg <= t.n, "deg h + reg bound violated"
    if t.n:
        assert t.stats.im <= t.reg <= t.stats.m or t.stats.m == 0, (
            "im <= reg <= m violated"
        )
        assert t.dim == t.stats.d, "Krull dimension differs from d(G)"


# ---------------------------------------------------------------------------
# Betti splitting


@dataclass(frozen=True)
class BettiSplittingReport:
    var: int
    identity_holds: bool
    mismatches: tuple
    reg_formula_holds: bool
    pd_formula_holds: bool
    linear_resolution: bool  # does I' have linear resolution?
    trivial: bool  # I'' = 0, nothing to split


def _ideal_table(ideal: SquarefreeIdeal, fld: FieldSpec) -> BettiTable:
    if not ideal.generators:
        return BettiTable(ideal.n, frozenset())
    quotient = betti_table_hochster(stanley_reisner_complex(ideal), fld)
    return quotient.shift_to_ideal()


def intersect_ideals(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    """Intersection of squarefree monomial ideals: pairwise lcm supports,
    then divisibility-minimalization."""
    if not a.generators or not b.generators:
        return SquarefreeIdeal(a.n, frozenset())
    return SquarefreeIdeal.from_supports(
        a.n, (x | y for x in a.generators for y in b.generators)
    )


def betti_splitting_check(
    ideal: SquarefreeIdeal, var: int, fld: FieldSpec = QQ
) -> BettiSplittingReport:
    """Check the x_var-partition splitting identity and the reg/pd formulas.

    I' collects the minimal generators divisible by x_var, I'' the rest;
    the identity compared is beta_{i,j}(I) = beta_{i,j}(I') + beta_{i,j}(I'')
    + beta_{i-1,j}(I' cap I'').
    """
    if not ideal.generators:
        raise ValueError("cannot split the zero ideal")
    bit = 1 << var
    gens_prime = {s for s in ideal.generators if s & bit}
    gens_rest = set(ideal.generators) - gens_prime
    iprime = SquarefreeIdeal(ideal.n, frozenset(gens_prime))
    irest = SquarefreeIdeal(ideal.n, frozenset(gens_rest))

    t_prime = _ideal_table(iprime, fld)
    degrees = {s.bit_count() for s in gens_prime}
    linear = (
        bool(gens_prime)
        and len(degrees) == 1
        and regularity(t_prime) == next(iter(degrees))
    )

    if not gens_rest:
        return BettiSplittingReport(
            var, True, (), True, True, linear, trivial=True
        )

    t_full = _ideal_table(ideal, fld)
    t_rest = _ideal_table(irest, fld)
    inter = intersect_ideals(iprime, irest)
    t_inter = _ideal_table(inter, fld)

    expected: dict = {}
    for (i, j), b in t_prime.entries:
        expected[(i, j)] = expected.get((i, j), 0) + b
    for (i, j), b in t_rest.entries:
        expected[(i, j)] = expected.get((i, j), 0) + b
    for (i, j), b in t_inter.entries:
        expected[(i + 1, j)] = expected.get((i + 1, j), 0) + b
    expected = {k: v for k, v in expected.items() if v}

    actual = t_full.as_dict()
    keys = set(expected) | set(actual)
    mismatches = tuple(
        sorted(
            (k, actual.get(k, 0), expected.get(k, 0))
            for k in keys
            if actual.get(k, 0) != expected.get(k, 0)
        )
    )

    reg_ok = regularity(t_full) == max(
        regularity(t_prime), regularity(t_rest), regularity(t_inter) - 1
    )
    pd_ok = projdim(t_full) == max(
        projdim(t_prime), projdim(t_rest), projdim(t_inter) + 1
    )
    return BettiSplittingReport(
        var, not mismatches, mismatches, reg_ok, pd_ok, linear, trivial=False
    )
