import json

import pytest

from qderiv.ring import QPoly
from qderiv.tables import (
    KIND_A,
    PolyTable,
    a_table,
    ac_table,
    b_table,
    oracle_a,
    oracle_ac,
    oracle_all,
    oracle_b,
    product_formula,
    rewrite_comp_sec,
    rewrite_comp_tan,
    rewrite_sec,
    rewrite_tan,
)
from qderiv.tcomb import BruteForceBoundError, TComposition, enumerate_t_compositions


def P(*coeffs):
    return QPoly(coeffs)


class TestRecurrenceTables:
    def test_a_seed_and_spot_values(self):
        t = a_table(4)
        assert t.get((0, 0, 1, 0)) == P(1)
        assert t.get((2, 1, 2, 1)) == P(0, 1)
        assert t.get((3, 1, 0, 0)) == P(0, 1, 1)
        assert t.get((4, 2, 2, 1)) == P(0, 0, 0, 3, 5, 2)
        assert t.get((4, 9, 9, 9)) == QPoly()

    def test_b_seed_and_spot_values(self):
        t = b_table(4)
        assert t.get((0, -1, 0, 0)) == P(1)
        assert t.get((1, 0, 1, 0)) == P(1)
        assert t.get((2, 1, 2, 0)) == P(0, 1)
        assert t.get((3, 1, 1, 0)) == P(0, 2, 1)
        assert t.get((4, 2, 2, 0)) == P(0, 0, 0, 3, 4, 1)

    def test_ac_spot_values(self):
        t = ac_table(4)
        assert t.get((1, (1,))) == P(1)
        assert t.get((1, (0, 1, 0))) == P(1)
        assert t.get((3, (0, 1, 2))) == P(0, 1, 1, 1)
        assert t.get((4, (0, 1, 1, 1, 1, 0))) == P(1, 1) * P(1, 1, 1) * P(1, 1, 1, 1)

    def test_ac_rows_cover_all_compositions(self):
        t = ac_table(6)
        for n in range(7):
            assert set(t.row(n)) == {c.parts for c in enumerate_t_compositions(n)}

    def test_aggregates_match_printed_row(self):
        agg = a_table(3).aggregate_by_m(3)
        assert agg == {0: P(0, 1, 1), 2: P(1, 3, 3, 1), 4: P(1, 2, 2, 1)}


class TestRewriteEngines:
    def test_tan_iteration_row_3(self):
        expected = {
            (1, 0, 0): P(0, 1, 1),
            (0, 0, 2): P(1),
            (1, 0, 2): P(0, 0, 1),
            (1, 1, 1): P(0, 2, 2),
            (1, 2, 0): P(0, 1),
            (2, 2, 0): P(0, 0, 0, 1),
            (0, 1, 3): P(1),
            (1, 1, 3): P(0, 0, 1),
            (1, 2, 2): P(0, 1, 1),
            (1, 3, 1): P(0, 1),
            (2, 3, 1): P(0, 0, 0, 1),
        }
        assert dict(rewrite_tan(3).terms) == expected

    def test_tan_start_symbol(self):
        assert dict(rewrite_tan(0).terms) == {(0, 1, 0): P(1)}
        assert rewrite_tan(2).coefficient((1, 2, 1)) == P(0, 1)

    def test_sec_iteration_row_3(self):
        expected = {
            (0, 0, 1): P(1),
            (1, 0, 1): P(0, 0, 1),
            (1, 1, 0): P(0, 2, 1),
            (0, 1, 2): P(1),
            (1, 1, 2): P(0, 0, 1),
            (1, 2, 1): P(0, 1, 1),
            (1, 3, 0): P(0, 1),
            (2, 3, 0): P(0, 0, 0, 1),
        }
        assert dict(rewrite_sec(3).terms) == expected

    def test_comp_iterations(self):
        assert dict(rewrite_comp_tan(1).terms) == {(1,): P(1), (0, 1, 0): P(1)}
        row2 = dict(rewrite_comp_tan(2).terms)
        assert row2 == {(2, 0): P(1), (0, 2): P(0, 1), (0, 1, 1, 0): P(1, 1)}
        row3 = dict(rewrite_comp_tan(3).terms)
        assert row3[(0, 1, 1, 1, 0)] == P(1, 1) * P(1, 1, 1)
        assert row3[(3,)] == P(0, 1, 1)

    def test_comp_sec_matches_s_restriction(self):
        for n in range(6):
            srow = {c: p for c, p in ac_table(n).row(n).items() if c[-1] == 0}
            assert dict(rewrite_comp_sec(n).terms) == srow


class TestOracles:
    def test_oracle_values(self):
        assert oracle_a(3).get((3, 1, 1, 1)) == P(0, 2, 2)
        assert oracle_b(0).get((0, -1, 0, 0)) == P(1)
        assert oracle_ac(2).get((2, (0, 2))) == P(0, 1)

    def test_oracle_matches_tables_small(self):
        for n in range(6):
            oa, ob, oc = oracle_all(n)
            assert oa.row(n) == a_table(n).row(n)
            assert ob.row(n) == b_table(n).row(n)
            assert oc.row(n) == ac_table(n).row(n)

    def test_bound_guard(self):
        with pytest.raises(BruteForceBoundError):
            oracle_a(9)


class TestProductFormula:
    def test_examples(self):
        assert product_formula(4, (2, 1, 1, 0)) == P(1, 1, 1) * P(1, 1, 1, 1)
        assert product_formula(4, (0, 4)) == P(0, 0, 1, 1, 2, 1)
        assert product_formula(1, (0, 1, 0)) == P(1)
        assert product_formula(3, (3,)) == P(0, 1, 1)

    def test_rejects_bad_compositions(self):
        with pytest.raises(ValueError):
            product_formula(4, (1, 3))
        with pytest.raises(ValueError):
            product_formula(5, TComposition((0, 4)))

    def test_matches_table(self):
        table = ac_table(6)
        for n in range(1, 7):
            for comp in enumerate_t_compositions(n):
                assert product_formula(n, comp) == table.get((n, comp.parts))


class TestPolyTableJson:
    def test_triple_roundtrip(self):
        t = a_table(3)
        data = json.loads(json.dumps(t.to_json()))
        again = PolyTable.from_json(data)
        assert again.kind == KIND_A and again.entries == dict(t.entries)
        assert data["entries"][0]["poly"]["coeffs"] == ["1"]

    def test_comp_roundtrip(self):
        t = ac_table(3)
        again = PolyTable.from_json(json.loads(json.dumps(t.to_json())))
        assert again.entries == dict(t.entries)
