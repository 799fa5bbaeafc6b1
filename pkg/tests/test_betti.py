"""Betti tables by two independent routes, derived invariants,
h-polynomials and Betti splitting."""

import json
import random
from itertools import combinations

import pytest

from edgeideals.betti import (
    BettiTable,
    betti_splitting_check,
    betti_table_hochster,
    betti_table_koszul_oracle,
    depth,
    h_polynomial,
    intersect_ideals,
    invariant_tuple,
    krull_dim,
    projdim,
    regularity,
)
from edgeideals.complexes import (
    GF2,
    QQ,
    SizeLimitError,
    SquarefreeIdeal,
    independence_complex,
)
from edgeideals.graphs import (
    complete,
    cycle,
    empty_graph,
    from_edges,
    path,
    star,
)


def hochster(g, fld=QQ):
    return betti_table_hochster(independence_complex(g), fld)


class TestGoldenTables:
    def test_c5_table(self):
        table = hochster(cycle(5))
        assert table.as_dict() == {
            (0, 0): 1,
            (1, 2): 5,
            (2, 3): 5,
            (3, 5): 1,
        }
        assert regularity(table) == 2
        assert projdim(table) == 3

    def test_edgeless_graph_is_polynomial_ring(self):
        table = hochster(empty_graph(4))
        assert table.as_dict() == {(0, 0): 1}
        assert regularity(table) == 0 and projdim(table) == 0

    def test_complete_graph_linear_resolution(self):
        table = hochster(complete(4))
        assert regularity(table) == 1
        assert projdim(table) == 3
        # Eagon-Northcott style binomial counts for K_n
        assert table.as_dict()[(1, 2)] == 6

    def test_star_family(self):
        for n in range(3, 9):
            t = invariant_tuple(star(n))
            assert (t.dim, t.depth, t.reg) == (n - 1, 1, 1)

    def test_k2(self):
        assert hochster(complete(2)).as_dict() == {(0, 0): 1, (1, 2): 1}


class TestOracleAgreement:
    CASES = [
        complete(2),
        path(3),
        path(4),
        star(4),
        cycle(4),
        cycle(5),
        complete(4),
        from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]),
        empty_graph(3),
    ]

    @pytest.mark.parametrize("g", CASES, ids=lambda g: f"n{g.n}e{g.num_edges()}")
    def test_hochster_equals_koszul(self, g):
        ideal = SquarefreeIdeal.edge_ideal(g)
        assert hochster(g).entries == betti_table_koszul_oracle(ideal).entries

    def test_agreement_on_random_squarefree_ideals(self):
        rng = random.Random(23)
        for _ in range(25):
            n = rng.randint(2, 5)
            supports = [
                s
                for s in range(1, 1 << n)
                if bin(s).count("1") >= 2 and rng.random() < 0.3
            ]
            if not supports:
                continue
            ideal = SquarefreeIdeal.from_supports(n, supports)
            from edgeideals.complexes import stanley_reisner_complex

            th = betti_table_hochster(stanley_reisner_complex(ideal))
            tk = betti_table_koszul_oracle(ideal)
            assert th.entries == tk.entries

    def test_koszul_size_limit(self):
        with pytest.raises(SizeLimitError):
            betti_table_koszul_oracle(SquarefreeIdeal.edge_ideal(cycle(7)))


class TestTableType:
    def test_json_sorted_and_stable(self):
        table = hochster(cycle(5))
        payload = json.loads(table.to_json())
        assert payload["n"] == 5
        assert payload["entries"] == sorted(payload["entries"])
        assert table.to_json() == hochster(cycle(5)).to_json()

    def test_shift_to_ideal(self):
        shifted = hochster(cycle(5)).shift_to_ideal()
        assert shifted.as_dict() == {(0, 2): 5, (1, 3): 5, (2, 5): 1}

    def test_empty_table_conventions(self):
        t = BettiTable(3, frozenset())
        assert regularity(t) == 0 and projdim(t) == 0


class TestDerivedInvariants:
    def test_c5_all_values(self):
        t = invariant_tuple(cycle(5))
        assert (t.dim, t.depth, t.reg, t.pd, t.degh) == (2, 2, 2, 3, 2)

    def test_depth_shortcut_matches(self):
        for g in (cycle(5), star(5), path(6), complete(3)):
            assert depth(g) == invariant_tuple(g).depth

    def test_krull_dim_is_independence_number(self):
        assert krull_dim(cycle(6)) == 3
        assert krull_dim(empty_graph(4)) == 4

    def test_h_polynomial_c5(self):
        h = h_polynomial(cycle(5))
        assert h.coefficients == (1, 3, 1)
        assert h.degree == 2
        assert str(h) == "1 + 3*t^1 + 1*t^2"

    def test_h_polynomial_complete(self):
        assert h_polynomial(complete(5)).coefficients == (1, 4)

    def test_h_polynomial_edgeless(self):
        assert h_polynomial(empty_graph(3)).coefficients == (1,)

    def test_gf2_and_q_agree_on_small_graphs(self):
        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(2, 6)
            pairs = list(combinations(range(n), 2))
            g = from_edges(n, [e for e in pairs if rng.random() < 0.4])
            assert hochster(g).entries == hochster(g, GF2).entries


class TestBettiSplitting:
    def test_star_center_split_is_trivial(self):
        ideal = SquarefreeIdeal.edge_ideal(star(3))
        rep = betti_splitting_check(ideal, 0)
        assert rep.trivial and rep.identity_holds and rep.linear_resolution

    def test_p4_end_vertex(self):
        ideal = SquarefreeIdeal.edge_ideal(path(4))
        rep = betti_splitting_check(ideal, 0)
        assert not rep.trivial
        assert rep.linear_resolution
        assert rep.identity_holds
        assert rep.reg_formula_holds and rep.pd_formula_holds

    def test_c5_every_vertex(self):
        ideal = SquarefreeIdeal.edge_ideal(cycle(5))
        for v in range(5):
            rep = betti_splitting_check(ideal, v)
            assert rep.linear_resolution
            assert rep.identity_holds
            assert rep.reg_formula_holds and rep.pd_formula_holds

    def test_intersection_minimalizes(self):
        a = SquarefreeIdeal.from_supports(3, [0b011])
        b = SquarefreeIdeal.from_supports(3, [0b110, 0b101])
        inter = intersect_ideals(a, b)
        assert inter.generators == frozenset({0b111})

    def test_zero_ideal_rejected(self):
        with pytest.raises(ValueError):
            betti_splitting_check(SquarefreeIdeal(3, frozenset()), 0)
