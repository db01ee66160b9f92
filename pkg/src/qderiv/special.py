"""Specializations: integer triangles, derivative polynomials in one
variable, the (t,q)-tangent/secant layer, the q-Eulerian refinement,
diagonal closed forms and the q-Springer polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from qderiv.ring import QPoly, XQPoly, q_bracket
from qderiv.series import (
    Sec_q,
    classical_cos,
    classical_sin,
    one_series,
    sec_q,
    tan_q,
)
from qderiv.tables import PolyTable, a_table, b_table

A_SMALL = "a_small"
B_SMALL = "b_small"

_ZERO = QPoly.zero()
_ONE = QPoly.one()


@dataclass(frozen=True)
class IntTriangle:
    kind: str
    n_max: int
    rows: Mapping

    def get(self, n: int, m: int) -> int:
        return self.rows.get((n, m), 0)

    def row(self, n: int) -> Dict[int, int]:
        return {m: v for (rn, m), v in self.rows.items() if rn == n}

    def row_sum(self, n: int) -> int:
        return sum(self.row(n).values())

    def to_json(self) -> dict:
        entries = [
            {"n": n, "m": m, "value": str(v)}
            for (n, m), v in sorted(self.rows.items())
        ]
        return {"kind": self.kind, "n_max": self.n_max, "entries": entries}

    @staticmethod
    def from_json(data: dict) -> "IntTriangle":
        rows = {(e["n"], e["m"]): int(e["value"]) for e in data["entries"]}
        return IntTriangle(data["kind"], data["n_max"], rows)


def small_triangles(n_max: int) -> Tuple[IntTriangle, IntTriangle]:
    """Integer derivative-polynomial triangles.

    a(n+1,m) = (m-1) a(n,m-1) + (m+1) a(n,m+1), seeded at a(0,m) = [m=1];
    b(n+1,m) = m b(n,m-1) + (m+1) b(n,m+1), seeded at b(0,m) = [m=0].
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a_rows = {(0, 1): 1}
    b_rows = {(0, 0): 1}
    a_prev = {1: 1}
    b_prev = {0: 1}
    for n in range(n_max):
        a_cur: Dict[int, int] = {}
        b_cur: Dict[int, int] = {}
        for m in range(0, n + 3):
            av = (m - 1) * a_prev.get(m - 1, 0) + (m + 1) * a_prev.get(m + 1, 0)
            if av:
                a_cur[m] = av
                a_rows[(n + 1, m)] = av
            bv = m * b_prev.get(m - 1, 0) + (m + 1) * b_prev.get(m + 1, 0)
            if bv:
                b_cur[m] = bv
                b_rows[(n + 1, m)] = bv
        a_prev, b_prev = a_cur, b_cur
    return (
        IntTriangle(A_SMALL, n_max, a_rows),
        IntTriangle(B_SMALL, n_max, b_rows),
    )


def hoffman_polys(n_max: int) -> Tuple[Tuple[QPoly, ...], Tuple[QPoly, ...]]:
    """Derivative polynomials in one variable, assembled from the triangles."""
    tri_a, tri_b = small_triangles(n_max)
    a_polys = []
    b_polys = []
    for n in range(n_max + 1):
        row = tri_a.row(n)
        a_polys.append(QPoly(row.get(m, 0) for m in range(max(row) + 1)) if row else _ZERO)
        row = tri_b.row(n)
        b_polys.append(QPoly(row.get(m, 0) for m in range(max(row) + 1)) if row else _ZERO)
    return tuple(a_polys), tuple(b_polys)


# -- (t,q)-tangent and secant ---------------------------------------------


def tq_tangent(n: int, table: Optional[PolyTable] = None) -> XQPoly:
    """Assemble the (t,q)-tangent polynomial from the first table column."""
    if n % 2 == 0:
        raise ValueError("(t,q)-tangent polynomials have odd index")
    tab = table if table is not None else a_table(n)
    coeffs: Dict[int, QPoly] = {}
    for (rn, k, a, b), poly in tab.entries.items():
        if rn == n and a == 0 and b == 0:
            coeffs[k + 1] = coeffs.get(k + 1, _ZERO) + poly
    top = max(coeffs, default=0)
    return XQPoly(coeffs.get(j, _ZERO) for j in range(top + 1))


def tq_secant(n: int, table: Optional[PolyTable] = None) -> XQPoly:
    """Assemble the (t,q)-secant polynomial from the first table column.

    The empty order is the single empty permutation, contributing t.
    """
    if n % 2:
        raise ValueError("(t,q)-secant polynomials have even index")
    if n == 0:
        return XQPoly((_ZERO, _ONE))
    tab = table if table is not None else b_table(n)
    coeffs: Dict[int, QPoly] = {}
    for (rn, k, a, b), poly in tab.entries.items():
        if rn == n and a == 0 and b == 0:
            coeffs[k + 1] = coeffs.get(k + 1, _ZERO) + poly
    top = max(coeffs, default=0)
    return XQPoly(coeffs.get(j, _ZERO) for j in range(top + 1))


# -- q-Eulerian polynomials and their refinement ---------------------------


@lru_cache(maxsize=None)
def carlitz_table(n_max: int) -> Dict[Tuple[int, int], QPoly]:
    """q-Eulerian coefficients by descent count, from their own recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out: Dict[Tuple[int, int], QPoly] = {(0, 0): _ONE}
    if n_max >= 1:
        out[(1, 0)] = _ONE
    prev = {0: _ONE}
    for n in range(2, n_max + 1):
        cur: Dict[int, QPoly] = {}
        for j in range(0, n):
            stay = q_bracket(j + 1) * prev.get(j, _ZERO)
            move = (
                q_bracket(n - j).shift(j) * prev.get(j - 1, _ZERO)
                if j >= 1
                else _ZERO
            )
            val = stay + move
            if val:
                cur[j] = val
                out[(n, j)] = val
        prev = cur
    return out


def carlitz_poly(n: int) -> XQPoly:
    table = carlitz_table(n)
    top = max(j for (rn, j) in table if rn == n)
    return XQPoly(table.get((n, j), _ZERO) for j in range(top + 1))


def carlitz_refinement(n: int, table: Optional[PolyTable] = None) -> Dict[Tuple[int, int, int], QPoly]:
    """Refined coefficients read off the super-diagonal a+b = n+1."""
    tab = table if table is not None else a_table(n)
    out: Dict[Tuple[int, int, int], QPoly] = {}
    for (rn, k, a, b), poly in tab.entries.items():
        if rn == n and a + b == n + 1:
            out[(n, k, a)] = poly
    return out


@lru_cache(maxsize=None)
def carlitz_refined_table(n_max: int) -> Dict[Tuple[int, int, int], QPoly]:
    """The same refinement from its standalone two-index recurrence."""
    out: Dict[Tuple[int, int, int], QPoly] = {(0, 0, 1): _ONE}
    prev = {(0, 1): _ONE}
    for n in range(n_max):
        cur: Dict[Tuple[int, int], QPoly] = {}
        for kp in range(0, n + 2):
            for ap in range(0, n + 3):
                acc = _ZERO
                if ap - 1 <= n:
                    for a in range(0, ap):
                        acc = acc + prev.get((kp - 1, a), _ZERO)
                if ap >= 1:
                    for a in range(ap, n + 2):
                        acc = acc + prev.get((kp, a), _ZERO)
                if acc:
                    cur[(kp, ap)] = acc.shift(kp)
        prev = cur
        for (k, a), poly in cur.items():
            out[(n + 1, k, a)] = poly
    return out


# -- diagonal closed forms ---------------------------------------------------


@dataclass(frozen=True)
class DiagonalForms:
    super_a: QPoly
    sub_a: Optional[QPoly]
    sub_b: Optional[QPoly]


def _bracket_product(lo: int, hi: int) -> QPoly:
    out = _ONE
    for i in range(lo, hi + 1):
        out = out * q_bracket(i)
    return out


def diagonal_closed_forms(n: int) -> DiagonalForms:
    """Closed products for the two top diagonals of the triple tables.

    The sub-diagonal forms require n >= 3; below that they are None.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    super_a = _bracket_product(1, n)
    sub_a = None
    sub_b = None
    if n >= 3:
        tail = _bracket_product(4, n)
        sub_a = q_bracket(2) * QPoly((1, n - 1, 1)) * tail
        sub_b = QPoly((1, n - 1, n - 1)) * tail
    return DiagonalForms(super_a, sub_a, sub_b)


# -- q-Springer polynomials ---------------------------------------------------


def springer_poly_from_tables(n: int, table: Optional[PolyTable] = None) -> QPoly:
    """Total row sum of the trailing-empty table: the outer variable at 1."""
    tab = table if table is not None else b_table(n)
    out = _ZERO
    for poly in tab.aggregate_by_m(n).values():
        out = out + poly
    return out


def springer_poly_from_series(n: int) -> QPoly:
    """Divided coefficient n of sec_q(u) / (1 - tan_q(u))."""
    denom = one_series(n).sub(tan_q(n))
    return sec_q(n).mul(denom.invert()).coefficient(n)


def springer_sec_variant_from_series(n: int) -> QPoly:
    """Divided coefficient n of the second-secant variant Sec_q(u)/(1 - tan_q(u))."""
    denom = one_series(n).sub(tan_q(n))
    return Sec_q(n).mul(denom.invert()).coefficient(n)


def classical_springer_numbers(n_max: int) -> Tuple[int, ...]:
    """Springer numbers from the exponential generating function 1/(cos - sin)."""
    denom = classical_cos(n_max).sub(classical_sin(n_max))
    return tuple(denom.invert().coeffs)
