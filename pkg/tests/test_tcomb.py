import json

import pytest

from qderiv.ring import QPoly
from qderiv.tcomb import (
    BruteForceBoundError,
    TComposition,
    TPermutation,
    alpha,
    beta,
    cut_by_lambda,
    delta_star,
    delta_star_inv,
    enumerate_t_compositions,
    enumerate_t_permutations,
    fibonacci_poly,
    filter_by_mu,
    psi_on_t,
    s_compositions,
    s_permutations,
    star_delta,
    star_delta_inv,
    t_permutations_with_lambda,
    t_permutations_with_triple,
)


def parts(n):
    return {c.parts for c in enumerate_t_compositions(n)}


class TestTCompositions:
    def test_first_lists(self):
        assert parts(0) == {(0, 0)}
        assert parts(1) == {(1,), (0, 1, 0)}
        assert parts(2) == {(0, 2), (2, 0), (0, 1, 1, 0)}
        assert parts(3) == {(3,), (0, 1, 2), (2, 1, 0), (0, 3, 0), (0, 1, 1, 1, 0)}
        assert parts(4) == {
            (0, 4), (2, 2), (4, 0),
            (0, 3, 1, 0), (0, 1, 3, 0), (0, 1, 1, 2), (2, 1, 1, 0),
            (0, 1, 1, 1, 1, 0),
        }

    def test_validation(self):
        with pytest.raises(ValueError):
            TComposition((2,))          # single even part
        with pytest.raises(ValueError):
            TComposition((1, 2))        # odd end with two parts
        with pytest.raises(ValueError):
            TComposition((0, 2, 0))     # even interior
        with pytest.raises(ValueError):
            TComposition((0, 0, 1, 0))  # zero interior
        TComposition((0, 0))
        TComposition((5,))

    def test_filters(self):
        assert {c.parts for c in filter_by_mu(3, 2)} == {(0, 1, 2), (2, 1, 0), (0, 3, 0)}
        assert {c.parts for c in s_compositions(2)} == {(2, 0), (0, 1, 1, 0)}
        assert [c.parts for c in s_compositions(0)] == [(0, 0)]

    def test_reduced_and_mirror(self):
        c = TComposition((0, 1, 2))
        assert c.mirror() == (2, 1, 0)
        with pytest.raises(ValueError):
            c.reduced()
        assert TComposition((2, 1, 0)).reduced() == (2, 1)

    def test_json(self):
        c = TComposition((2, 1, 0))
        assert c.to_json() == {"parts": [2, 1, 0]}
        assert TComposition.from_json(json.loads(json.dumps(c.to_json()))) == c


class TestTPermutations:
    def test_smallest_orders(self):
        assert [w.components for w in enumerate_t_permutations(0)] == [((), ())]
        t1 = {w.components for w in enumerate_t_permutations(1)}
        assert t1 == {((1,),), ((), (1,), ())}
        t2 = {w.components for w in enumerate_t_permutations(2)}
        assert t2 == {
            ((), (2, 1)), ((1, 2), ()),
            ((), (2,), (1,), ()), ((), (1,), (2,), ()),
        }

    def test_t3_by_mu(self):
        count = {}
        for w in enumerate_t_permutations(3):
            count[w.mu] = count.get(w.mu, 0) + 1
        assert count == {0: 2, 2: 8, 4: 6}

    def test_validation(self):
        with pytest.raises(ValueError):
            TPermutation(((2, 1),))          # falling but single-component
        with pytest.raises(ValueError):
            TPermutation(((1, 2), (3,)))     # last component of odd length
        with pytest.raises(ValueError):
            TPermutation(((1, 3), (2, 2)))   # not a permutation
        TPermutation(((1, 3, 2),))

    def test_stats_worked_example(self):
        w = TPermutation(((4, 5), (11, 1, 3), (10, 7, 9), (6,), (8, 2)))
        st = w.stats()
        assert (st.ides, st.imaj, st.inv, st.min) == (6, 38, 27, 1)
        assert st.lam.parts == (2, 3, 3, 1, 2)

    def test_stats_small(self):
        st = TPermutation(((), (1,), ())).stats()
        assert (st.mu, st.min, st.ides, st.imaj, st.inv) == (2, 1, 0, 0, 0)
        st = TPermutation(((1, 3, 2),)).stats()
        assert st.lam.parts == (3,) and st.mu == 0 and st.imaj == 2

    def test_min_component_empty_order(self):
        assert TPermutation(((), ())).min_component() is None

    def test_lambda_with_filter(self):
        comp = TComposition((0, 1, 1, 0))
        found = list(t_permutations_with_lambda(2, comp))
        assert {w.components for w in found} == {
            ((), (2,), (1,), ()), ((), (1,), (2,), ()),
        }

    def test_triple_filter(self):
        found = {w.components for w in t_permutations_with_triple(3, 1, 1, 1)}
        assert len(found) == 4
        for w in found:
            st = TPermutation(w).stats()
            assert (st.ides, st.min, st.mu) == (1, 1, 2)

    def test_s_permutations(self):
        assert {w.components for w in s_permutations(2)} == {
            ((1, 2), ()), ((), (2,), (1,), ()), ((), (1,), (2,), ()),
        }

    def test_bound_guard(self):
        with pytest.raises(BruteForceBoundError):
            list(enumerate_t_permutations(9))
        with pytest.raises(BruteForceBoundError):
            list(enumerate_t_permutations(4, bound=3))

    def test_json(self):
        w = TPermutation(((4, 5), (11, 1, 3), (10, 7, 9), (6,), (8, 2)))
        data = json.loads(json.dumps(w.to_json()))
        assert TPermutation.from_json(data) == w


W_EXAMPLE = TPermutation(((4, 5), (11, 1, 3), (10, 7, 9), (6,), (8, 2)))


class TestInsertionBijections:
    def test_delta_star_rows(self):
        expected = {
            1: ((5, 6), (1,), (12, 2, 4), (11, 8, 10), (7,), (9, 3)),
            2: ((5, 6), (12, 2, 4), (1,), (11, 8, 10), (7,), (9, 3)),
            3: ((5, 6), (12, 2, 4), (11, 8, 10), (1,), (7,), (9, 3)),
            4: ((5, 6), (12, 2, 4), (11, 8, 10), (7,), (1,), (9, 3)),
        }
        for i, comps in expected.items():
            assert delta_star(i, W_EXAMPLE).components == comps

    def test_star_delta_rows(self):
        expected = {
            1: ((5, 6, 1, 12, 2, 4), (11, 8, 10), (7,), (9, 3)),
            2: ((5, 6), (12, 2, 4, 1, 11, 8, 10), (7,), (9, 3)),
            3: ((5, 6), (12, 2, 4), (11, 8, 10, 1, 7), (9, 3)),
            4: ((5, 6), (12, 2, 4), (11, 8, 10), (7, 1, 9, 3)),
        }
        for i, comps in expected.items():
            assert star_delta(i, W_EXAMPLE).components == comps

    def test_roundtrips(self):
        for i in range(1, W_EXAMPLE.mu + 1):
            assert delta_star_inv(delta_star(i, W_EXAMPLE)) == (i, W_EXAMPLE)
            assert star_delta_inv(star_delta(i, W_EXAMPLE)) == (i, W_EXAMPLE)

    def test_empty_order_edge(self):
        empty = TPermutation(((), ()))
        assert delta_star(1, empty).components == ((), (1,), ())
        single = star_delta(1, empty)
        assert single.components == ((1,),)
        assert not single.is_first_kind()
        assert star_delta_inv(single) == (1, empty)

    def test_index_range(self):
        with pytest.raises(ValueError):
            delta_star(0, W_EXAMPLE)
        with pytest.raises(ValueError):
            star_delta(5, W_EXAMPLE)

    def test_inverse_kind_guards(self):
        with pytest.raises(ValueError):
            delta_star_inv(TPermutation(((1, 2), ())))
        with pytest.raises(ValueError):
            star_delta_inv(TPermutation(((), (1,), ())))

    def test_min_after_insertion(self):
        for n in range(5):
            for w in enumerate_t_permutations(n):
                for i in range(1, w.mu + 1):
                    assert delta_star(i, w).min_component() == i
                    assert star_delta(i, w).min_component() == i - 1


class TestPsiLift:
    def test_worked_example(self):
        w = TPermutation(((), (6,), (4,), (9, 2, 7), (5, 1, 8, 3)))
        assert psi_on_t(w).components == ((), (5,), (3,), (9, 1, 7), (4, 2, 8, 6))

    def test_preserves_shape_small(self):
        for w in enumerate_t_permutations(5):
            image = psi_on_t(w)
            assert image.lam() == w.lam()
            assert image.stats().inv == w.stats().imaj

    def test_cut_by_lambda(self):
        w = cut_by_lambda((2, 1, 3), TComposition((0, 3, 0)))
        assert w.components == ((), (2, 1, 3), ())


class TestCountingLayer:
    def test_alpha_values(self):
        assert alpha(4, 3) == 4
        assert sum(alpha(6, m) for m in range(8)) == 21
        assert alpha(0, 1) == 1 and alpha(1, 0) == 1 and alpha(1, 2) == 1

    def test_alpha_matches_enumeration(self):
        for n in range(11):
            by_mu = {}
            for c in enumerate_t_compositions(n):
                by_mu[c.mu] = by_mu.get(c.mu, 0) + 1
            for m in range(n + 3):
                assert alpha(n, m) == by_mu.get(m, 0)

    def test_beta_shift(self):
        assert beta(0, 0) == 1
        for n in range(1, 11):
            for m in range(n + 2):
                assert beta(n, m) == alpha(n - 1, m)

    def test_fibonacci_polys(self):
        assert fibonacci_poly(0) == QPoly((0, 1))
        assert fibonacci_poly(1) == QPoly((1, 0, 1))
        for n in range(2, 12):
            assert fibonacci_poly(n) == fibonacci_poly(n - 1).shift(1) + fibonacci_poly(n - 2)
        sums = [fibonacci_poly(n).eval_at_one() for n in range(7)]
        assert sums == [1, 2, 3, 5, 8, 13, 21]
