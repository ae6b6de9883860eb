import math
import random
from fractions import Fraction

import pytest

from coxfree import (
    INF,
    CoxeterSymbol,
    SymbolError,
    bilinear_gram,
    classify_finite_type,
    connected_components,
    euler_characteristic,
    finite_order,
    induced_subsymbol,
    parity_character,
    parse_symbol,
    serialize_symbol,
    signature,
    weyl_data,
)
from oracles import closure, signed_generators


def path_symbol(labels):
    n = len(labels) + 1
    return CoxeterSymbol(range(1, n + 1), [(i, i + 1, m) for i, m in enumerate(labels, 1)])


class TestParse:
    def test_round_trip(self):
        g = parse_symbol('{"nodes":["1","2"],"edges":[["1","2",3]]}')
        assert g.order("1", "2") == 3
        assert parse_symbol(serialize_symbol(g)) == g

    def test_infinite_edge(self):
        g = parse_symbol({"nodes": ["1", "2"], "edges": [["1", "2", "inf"]]})
        assert g.order("1", "2") == INF
        assert serialize_symbol(g)["edges"] == [["1", "2", "inf"]]

    def test_m_equal_one_rejected(self):
        with pytest.raises(SymbolError):
            parse_symbol({"nodes": ["1", "2"], "edges": [["1", "2", 1]]})

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(SymbolError):
            parse_symbol({"nodes": ["1", "1"], "edges": []})

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(SymbolError):
            parse_symbol({"nodes": ["1"], "edges": [["1", "2", 3]]})

    def test_commuting_edges_dropped(self):
        g = parse_symbol({"nodes": ["a", "b"], "edges": [["a", "b", 2]]})
        assert g.edges() == []


class TestSubsymbols:
    def test_path_restriction(self):
        a3 = path_symbol([3, 3])
        sub = induced_subsymbol(a3, [1, 2])
        assert classify_finite_type(sub)[0].label() == "A2"

    def test_disconnecting_restriction(self):
        a3 = path_symbol([3, 3])
        sub = induced_subsymbol(a3, [1, 3])
        assert [t.label() for t in classify_finite_type(sub)] == ["A1", "A1"]

    def test_empty_subset(self):
        assert induced_subsymbol(path_symbol([3, 3]), []).rank == 0

    def test_unknown_node(self):
        with pytest.raises(SymbolError):
            induced_subsymbol(path_symbol([3]), [7])

    def test_components(self):
        g = CoxeterSymbol([1, 2, 3, 4], [(1, 2, 4), (3, 4, 3)])
        assert connected_components(g) == [(1, 2), (3, 4)]
        assert connected_components(path_symbol([3, 3])) == [(1, 2, 3)]


class TestClassification:
    def test_b5_order_against_signed_permutation_closure(self):
        # Independent oracle: breadth-first closure of the rank-5 signed
        # permutation generators.
        oracle_order = len(closure(signed_generators(5)))
        types = classify_finite_type(path_symbol([3, 3, 3, 4]))
        assert [t.label() for t in types] == ["B5"]
        assert types[0].order == oracle_order == 3840

    def test_affine_path_is_not_finite(self):
        assert classify_finite_type(path_symbol([4, 3, 3, 4])) is None

    def test_single_node(self):
        g = CoxeterSymbol(["s"], [])
        assert classify_finite_type(g)[0].label() == "A1"
        assert finite_order(g) == 2

    def test_exceptional_orders_match_exponents(self):
        for label in ("E6", "E7", "E8", "F4", "G2"):
            w = weyl_data(label)
            assert classify_finite_type(w.symbol)[0].order == w.order

    def test_product_order(self):
        g = CoxeterSymbol([1, 2, 3], [(1, 2, 3)])
        assert finite_order(g) == 12  # A2 x A1

    def test_h_and_i_types(self):
        assert classify_finite_type(path_symbol([5, 3]))[0].label() == "H3"
        assert classify_finite_type(path_symbol([5, 3, 3]))[0].label() == "H4"
        assert classify_finite_type(path_symbol([7]))[0].order == 14
        assert classify_finite_type(path_symbol([5, 3, 3, 3])) is None

    def test_relabeling_invariance(self):
        rng = random.Random(7)
        for label, rank in [("A", 5), ("B", 4), ("D", 5), ("E6", None), ("F4", None)]:
            base = weyl_data(label, rank).symbol
            names = [f"n{i}" for i in range(base.rank)]
            rng.shuffle(names)
            relabel = dict(zip(base.nodes, names))
            shuffled_nodes = list(names)
            rng.shuffle(shuffled_nodes)
            g = CoxeterSymbol(
                shuffled_nodes,
                [(relabel[a], relabel[b], m) for a, b, m in base.edges()],
            )
            assert [t.label() for t in classify_finite_type(g)] == \
                [t.label() for t in classify_finite_type(base)]


class TestEuler:
    def test_single_node(self):
        assert euler_characteristic(CoxeterSymbol(["s"], [])) == Fraction(1, 2)

    def test_infinite_dihedral(self):
        g = CoxeterSymbol([1, 2], [(1, 2, INF)])
        assert euler_characteristic(g) == 0

    def test_reciprocal_order_for_finite_types(self):
        cases = [("A", r) for r in range(1, 7)] + [("B", r) for r in range(2, 7)]
        cases += [("D", r) for r in range(4, 7)] + [("G2", None), ("F4", None), ("E6", None)]
        for fam, rank in cases:
            w = weyl_data(fam, rank)
            assert euler_characteristic(w.symbol) * w.order == 1
        for labels in ([5, 3], [5, 3, 3], [5], [7]):
            g = path_symbol(labels)
            assert euler_characteristic(g) * finite_order(g) == 1


class TestBilinearForm:
    def test_a2_gram(self):
        mat = bilinear_gram(weyl_data("A", 2).symbol)
        assert mat[0][1] == pytest.approx(-0.5)

    def test_b2_gram(self):
        mat = bilinear_gram(weyl_data("B", 2).symbol)
        assert mat[0][1] == pytest.approx(-math.sqrt(2) / 2)

    def test_infinite_edge_value(self):
        g = CoxeterSymbol([1, 2], [(1, 2, INF)])
        assert bilinear_gram(g, inf_value=-1.0)[0][1] == -1.0
        with pytest.raises(SymbolError):
            bilinear_gram(g, inf_value=-0.5)

    def test_signatures(self):
        assert signature(weyl_data("A", 2).symbol) == (2, 0, 0)
        affine = CoxeterSymbol([1, 2], [(1, 2, INF)])
        assert signature(affine, inf_value=-1.0) == (1, 0, 1)

    def test_positive_definite_iff_finite(self):
        rng = random.Random(20240)
        labels = [2, 3, 4, 5, 6, INF]
        for _ in range(50):
            n = rng.randint(1, 6)
            edges = []
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    m = rng.choice(labels)
                    if m != 2:
                        edges.append((i, j, m))
            g = CoxeterSymbol(range(1, n + 1), edges)
            finite = classify_finite_type(g) is not None
            n_plus, n_minus, n_zero = signature(g)
            assert (n_plus == n and n_minus == n_zero == 0) == finite
            assert n_plus + n_minus + n_zero == n


class TestParity:
    def test_longest_b3_word(self):
        b3 = weyl_data("B", 3).symbol
        word = [1, 2, 3, 2, 1, 2, 3, 2, 3]
        assert parity_character(b3, 3, word) == 1

    def test_empty_word(self):
        assert parity_character(weyl_data("B", 3).symbol, 3, []) == 0

    def test_b4_longest(self):
        b4 = weyl_data("B", 4).symbol
        word = [1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 4]
        assert parity_character(b4, 4, word) == 0

    def test_odd_label_rejected(self):
        with pytest.raises(SymbolError):
            parity_character(weyl_data("A", 2).symbol, 1, [1])

    def test_homomorphism(self):
        b4 = weyl_data("B", 4).symbol
        rng = random.Random(99)
        for _ in range(30):
            w1 = [rng.randint(1, 4) for _ in range(rng.randint(0, 12))]
            w2 = [rng.randint(1, 4) for _ in range(rng.randint(0, 12))]
            assert parity_character(b4, 4, w1 + w2) == \
                (parity_character(b4, 4, w1) + parity_character(b4, 4, w2)) % 2
