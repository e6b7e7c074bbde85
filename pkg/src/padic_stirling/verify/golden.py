"""Published comparison table for p = 2, 2 <= n <= 38.

Columns: n, s_2(n), e_2(n-1, n), ebar_2(n), k_max.  k_max is stored as the
integer; the printed ``25+2^16 5`` style means 25 + 2^16 * 5.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Table1Row:
    n: int
    s2: int
    e2_diag: int
    ebar: int
    k_max: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.s2, self.e2_diag, self.ebar, self.k_max)


def _k(base: int, e: int = 0, odd: int = 0) -> int:
    return base + (odd << e) if odd else base


GOLDEN_TABLE1: dict[int, Table1Row] = {
    r.n: r
    for r in [
        Table1Row(2, 1, 1, 1, _k(1)),
        Table1Row(3, 2, 2, 2, _k(2)),
        Table1Row(4, 4, 4, 4, _k(3)),
        Table1Row(5, 5, 5, 6, _k(4, 3, 1)),
        Table1Row(6, 6, 6, 8, _k(5, 3, 1)),
        Table1Row(7, 7, 8, 8, _k(6)),
        Table1Row(8, 10, 11, 11, _k(7)),
        Table1Row(9, 11, 11, 12, _k(8, 6, 1)),
        Table1Row(10, 12, 12, 14, _k(9, 6, 1)),
        Table1Row(11, 13, 13, 15, _k(10, 6, 1)),
        Table1Row(12, 15, 15, 15, _k(11)),
        Table1Row(13, 16, 18, 18, _k(12)),
        Table1Row(14, 17, 21, 21, _k(13)),
        Table1Row(15, 18, 22, 22, _k(14)),
        Table1Row(16, 22, 23, 23, _k(15)),
        Table1Row(17, 23, 23, 24, _k(16, 11, 1)),
        Table1Row(18, 24, 24, 26, _k(17, 11, 1)),
        Table1Row(19, 25, 25, 28, _k(18, 11, 1)),
        Table1Row(20, 27, 27, 28, _k(19, 11, 1)),
        Table1Row(21, 28, 28, 28, _k(20)),
        Table1Row(22, 29, 29, 30, _k(21, 10, 1)),
        Table1Row(23, 30, 31, 31, _k(22)),
        Table1Row(24, 33, 34, 34, _k(23)),
        Table1Row(25, 34, 36, 38, _k(24, 16, 1)),
        Table1Row(26, 35, 37, 40, _k(25, 16, 5)),
        Table1Row(27, 36, 38, 40, _k(26, 16, 1)),
        Table1Row(28, 38, 40, 40, _k(27)),
        Table1Row(29, 39, 42, 44, _k(28, 18, 1)),
        Table1Row(30, 40, 43, 45, _k(29, 18, 1)),
        Table1Row(31, 41, 46, 46, _k(30)),
        Table1Row(32, 46, 47, 47, _k(31)),
        Table1Row(33, 47, 47, 48, _k(32, 20, 1)),
        Table1Row(34, 48, 48, 50, _k(33, 20, 1)),
        Table1Row(35, 49, 49, 52, _k(34, 20, 1)),
        Table1Row(36, 51, 51, 53, _k(35, 20, 1)),
        Table1Row(37, 52, 52, 54, _k(36, 20, 3)),
        Table1Row(38, 53, 53, 56, _k(37, 20, 7)),
    ]
}
