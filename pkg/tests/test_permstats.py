import math
from itertools import permutations

import pytest

from qderiv import permstats
from qderiv.permstats import (
    complement_gamma,
    foata_phi,
    inv,
    is_falling_alternating,
    is_rising_alternating,
    iter_falling_alternating,
    iter_permutations,
    iter_rising_alternating,
    mirror_rho,
    psi,
    statistics,
)

WORKED = (4, 5, 11, 1, 3, 10, 7, 9, 6, 8, 2)


class TestStatistics:
    def test_worked_example(self):
        st = statistics(WORKED)
        assert st.ides == 6
        assert st.imaj == 38
        assert st.inv == 27
        assert st.iligne == frozenset({3, 10, 9, 6, 8, 2})

    def test_identity(self):
        st = statistics((1, 2, 3, 4))
        assert (st.inv, st.des, st.ides, st.maj, st.imaj) == (0, 0, 0, 0, 0)
        assert st.ligne == frozenset() and st.iligne == frozenset()

    def test_231(self):
        st = statistics((2, 3, 1))
        assert st.iligne == frozenset({1})
        assert st.imaj == 1 and st.ides == 1

    def test_words_of_distinct_letters(self):
        # statistics extend verbatim to words: only present successor
        # pairs count
        st = statistics((9, 5, 7))
        assert st.inv == 2
        assert st.ligne == frozenset({1})
        assert st.iligne == frozenset()

    def test_imaj_is_maj_of_inverse(self):
        for sigma in iter_permutations(5):
            st = statistics(sigma)
            ist = statistics(permstats.inverse(sigma))
            assert st.imaj == ist.maj
            assert st.iligne == frozenset(ist.ligne)


class TestAlternating:
    def test_examples(self):
        assert is_rising_alternating((1, 3, 2))
        assert not is_falling_alternating((1, 3, 2))
        assert is_rising_alternating(())
        assert is_falling_alternating(())
        assert is_rising_alternating((1, 2))
        assert not is_falling_alternating((1, 2))

    def test_counts(self):
        assert len(list(iter_rising_alternating(1))) == 1
        assert len(list(iter_rising_alternating(3))) == 2
        assert len(list(iter_falling_alternating(4))) == 5

    def test_ligne_characterization(self):
        for n in range(7):
            for sigma in iter_permutations(n):
                st = statistics(sigma)
                odds = frozenset(range(1, n, 2))
                evens = frozenset(range(2, n, 2))
                assert is_falling_alternating(sigma) == (st.ligne == odds)
                assert is_rising_alternating(sigma) == (st.ligne == evens)


class TestElementaryBijections:
    def test_inverse_example(self):
        assert permstats.inverse((6, 4, 9, 2, 7, 5, 1, 8, 3)) == (7, 4, 9, 2, 6, 1, 5, 8, 3)

    def test_gamma_on_identity(self):
        assert complement_gamma((1, 2, 3, 4)) == (4, 3, 2, 1)

    def test_rho_inv_complement(self):
        for n in range(1, 8):
            total = n * (n - 1) // 2
            for sigma in iter_permutations(n):
                assert inv(sigma) + inv(mirror_rho(sigma)) == total

    def test_inverse_requires_permutation(self):
        with pytest.raises(ValueError):
            permstats.inverse((2, 3))


class TestFoata:
    def test_published_example(self):
        assert foata_phi((7, 4, 9, 2, 6, 1, 5, 8, 3)) == (4, 7, 2, 6, 1, 9, 5, 8, 3)

    def test_single_letter(self):
        assert foata_phi((1,)) == (1,)
        assert foata_phi(()) == ()

    def test_contract_on_s4(self):
        for sigma in iter_permutations(4):
            image = foata_phi(sigma)
            assert statistics(sigma).maj == statistics(image).inv
            assert statistics(sigma).iligne == statistics(image).iligne

    def test_bijectivity(self):
        for n in range(7):
            images = {foata_phi(s) for s in iter_permutations(n)}
            assert len(images) == math.factorial(n)


class TestPsi:
    def test_published_chain(self):
        w = (6, 4, 9, 2, 7, 5, 1, 8, 3)
        assert statistics(w).imaj == 17
        image = psi(w)
        assert image == (5, 3, 9, 1, 7, 4, 2, 8, 6)
        assert statistics(image).inv == 17

    def test_identity_fixed(self):
        assert psi((1, 2, 3, 4, 5)) == (1, 2, 3, 4, 5)

    def test_contract_on_s5(self):
        for sigma in iter_permutations(5):
            image = psi(sigma)
            assert statistics(sigma).ligne == statistics(image).ligne
            assert statistics(sigma).imaj == statistics(image).inv


class TestEnumeration:
    def test_lexicographic(self):
        assert list(iter_permutations(3)) == [tuple(p) for p in permutations((1, 2, 3))]

    def test_empty_order(self):
        assert list(iter_permutations(0)) == [()]
        assert list(iter_rising_alternating(0)) == [()]
