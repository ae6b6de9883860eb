import random

import pytest

from coxfree import (
    WeylError,
    weyl_data,
    reflection_matrix,
    word_to_matrix,
    coxeter_element,
    element_order,
    longest_element,
    longest_word,
    perm_model,
    verify_exponents,
)
from coxfree.weyl import identity_matrix, mat_mul, preserves_gram

ALL_RANK_LE_8 = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("G2", None), ("F4", None), ("E6", None), ("E7", None), ("E8", None)]
)

CLASSICAL_ORDERS = {"A": lambda n: _fact(n + 1), "B": lambda n: 2 ** n * _fact(n),
                    "D": lambda n: 2 ** (n - 1) * _fact(n)}


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class TestWeylData:
    def test_table_rows(self):
        e8 = weyl_data("E8")
        assert (e8.coxeter_number, e8.index_of_connection, e8.minus_one_type) == (30, 1, True)
        assert weyl_data("A", 1).minus_one_type
        assert not weyl_data("A", 2).minus_one_type
        assert not weyl_data("E6").minus_one_type
        assert weyl_data("D", 6).minus_one_type
        assert not weyl_data("D", 5).minus_one_type

    def test_orders(self):
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            if fam in CLASSICAL_ORDERS:
                assert w.order == CLASSICAL_ORDERS[fam](rank)
        assert weyl_data("E6").order == 51840
        assert weyl_data("E8").order == 696729600

    def test_h_is_top_exponent_plus_one(self):
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            assert w.coxeter_number == max(w.exponents) + 1

    def test_invalid_ranks(self):
        with pytest.raises(WeylError):
            weyl_data("D", 3)
        with pytest.raises(WeylError):
            weyl_data("B", 1)
        with pytest.raises(WeylError):
            weyl_data("Z", 9)

    def test_cartan_values(self):
        assert weyl_data("A", 2).cartan == ((2, -1), (-1, 2))
        g2 = weyl_data("G2").cartan
        assert g2[0][1] == -3 and g2[1][0] == -1
        b2 = weyl_data("B", 2).cartan
        assert b2[0][1] == -2 and b2[1][0] == -1

    def test_scaled_nodes(self):
        assert weyl_data("B", 5).scaled_nodes == frozenset({5})
        assert weyl_data("F4").scaled_nodes == frozenset({3, 4})
        assert weyl_data("G2").scaled_nodes == frozenset({2})
        assert weyl_data("E7").scaled_nodes == frozenset()


class TestReflections:
    def test_involutive(self):
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            for i in w.symbol.nodes:
                m = reflection_matrix(w, i)
                assert mat_mul(m, m) == identity_matrix(w.rank)

    def test_a2_action(self):
        m = reflection_matrix(weyl_data("A", 2), 1)
        # column 2 is the image of x_2: it gains x_1
        assert [row[1] for row in m] == [1, 1]

    def test_b2_action(self):
        m = reflection_matrix(weyl_data("B", 2), 1)
        assert [row[1] for row in m] == [2, 1]

    def test_braid_relation(self):
        w = weyl_data("A", 2)
        assert word_to_matrix(w, [1, 2, 1]) == word_to_matrix(w, [2, 1, 2])

    def test_empty_and_square_words(self):
        w = weyl_data("B", 3)
        assert word_to_matrix(w, []) == identity_matrix(3)
        assert word_to_matrix(w, [1, 1]) == identity_matrix(3)

    def test_gram_preserved_on_random_words(self):
        rng = random.Random(5)
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            nodes = list(w.symbol.nodes)
            for _ in range(4):
                word = [rng.choice(nodes) for _ in range(rng.randint(0, 30))]
                assert preserves_gram(w, word_to_matrix(w, word))


class TestCoxeterElements:
    def test_orders_match_coxeter_numbers(self):
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            assert element_order(coxeter_element(w), 64) == w.coxeter_number

    def test_visible_d5_inside_e6(self):
        w = weyl_data("E6")
        xi = coxeter_element(w, nodes=[2, 3, 4, 5, 6])
        assert element_order(xi, 64) == 8

    def test_disconnected_subset_rejected(self):
        with pytest.raises(WeylError):
            coxeter_element(weyl_data("A", 3), nodes=[1, 3])

    def test_element_order_basics(self):
        w = weyl_data("E8")
        assert element_order(identity_matrix(8)) == 1
        assert element_order(reflection_matrix(w, 3)) == 2
        with pytest.raises(WeylError):
            element_order(coxeter_element(w), 10)

    def test_exponent_eigenvalues(self):
        for fam, rank in ALL_RANK_LE_8:
            assert verify_exponents(weyl_data(fam, rank))


POSITIVE_ROOT_COUNTS = {
    ("A", 4): 10, ("A", 7): 28, ("B", 4): 16, ("B", 6): 36, ("D", 5): 20,
    ("G2", None): 6, ("F4", None): 24, ("E6", None): 36, ("E7", None): 63,
    ("E8", None): 120,
}


class TestLongestElements:
    def test_single_node(self):
        w = weyl_data("A", 3)
        m, length = longest_element(w, [2])
        assert length == 1 and m == reflection_matrix(w, 2)

    def test_e8_is_minus_identity(self):
        m, length = longest_element(weyl_data("E8"))
        assert length == 120
        assert m == tuple(tuple(-1 if i == j else 0 for j in range(8)) for i in range(8))

    def test_a2_against_brute_force(self):
        # Oracle: enumerate all 6 elements of the rank-2 symmetric-type group
        # with word lengths, via breadth-first search over reduced words.
        w = weyl_data("A", 2)
        seen = {identity_matrix(2): 0}
        frontier = [identity_matrix(2)]
        while frontier:
            nxt = []
            for m in frontier:
                for s in (1, 2):
                    prod = mat_mul(m, reflection_matrix(w, s))
                    if prod not in seen:
                        seen[prod] = seen[m] + 1
                        nxt.append(prod)
            frontier = nxt
        assert len(seen) == 6
        top = max(seen.values())
        oracle = [m for m, l in seen.items() if l == top]
        got, length = longest_element(w)
        assert length == top == 3
        assert [got] == oracle
        assert mat_mul(got, got) == identity_matrix(2)

    def test_lengths_are_positive_root_counts(self):
        for (fam, rank), count in POSITIVE_ROOT_COUNTS.items():
            _, length = longest_element(weyl_data(fam, rank))
            assert length == count

    def test_minus_one_exactly_on_minus_one_types(self):
        for fam, rank in ALL_RANK_LE_8:
            w = weyl_data(fam, rank)
            m, _ = longest_element(w)
            minus = tuple(tuple(-1 if i == j else 0 for j in range(w.rank))
                          for i in range(w.rank))
            assert (m == minus) == w.minus_one_type

    def test_fixes_orthogonal_complement(self):
        from coxfree.modtwo import weight_vector
        from coxfree.weyl import mat_vec

        w = weyl_data("E6")
        m, _ = longest_element(w, [2, 3, 4])
        # Weight vectors at 1 and 6 are orthogonal to x_2, x_3, x_4, so the
        # subgroup's longest element must fix them pointwise.
        for node in (1, 6):
            u = weight_vector(w, node).coords
            assert mat_vec(m, u) == u
        # On its own roots it acts negatively.
        for s in (2, 3, 4):
            e_s = tuple(1 if i == s - 1 else 0 for i in range(6))
            assert all(c <= 0 for c in mat_vec(m, e_s))


class TestPermModel:
    def test_a2_three_cycle(self):
        p = perm_model(weyl_data("A", 2), [1, 2])
        assert p == (2, 3, 1)

    def test_b2_sign_flip(self):
        assert perm_model(weyl_data("B", 2), [2]) == (1, -2)

    def test_d4_fork_generator(self):
        assert perm_model(weyl_data("D", 4), [4]) == (1, 2, -4, -3)

    def test_matches_matrix_equality(self):
        rng = random.Random(11)
        for fam, rank in [("A", 4), ("B", 4), ("D", 4)]:
            w = weyl_data(fam, rank)
            nodes = list(w.symbol.nodes)
            for _ in range(200):
                w1 = [rng.choice(nodes) for _ in range(rng.randint(0, 8))]
                w2 = [rng.choice(nodes) for _ in range(rng.randint(0, 8))]
                same_matrix = word_to_matrix(w, w1) == word_to_matrix(w, w2)
                same_perm = perm_model(w, w1) == perm_model(w, w2)
                assert same_matrix == same_perm

    def test_rejects_exceptional(self):
        with pytest.raises(WeylError):
            perm_model(weyl_data("F4"), [1])
