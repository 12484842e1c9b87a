"""Published example rows: q-vectors with the displayed X and Z equations.

Each row records the target (f, f') label, the 15 coefficients of Q1, Q2, Q3,
and the displayed equations as text.  `x_vars` / `z_vars` name the variables
used in the displayed text.  Known display defects are noted per row; the
checker reads `swapped` and `repair` to decide how to compare.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    p: int
    label: tuple[int, int]
    q: tuple[int, ...]
    x_text: str
    z_text: str
    x_vars: tuple[str, str] = ("u", "v")
    z_vars: tuple[str, str] = ("x", "z")
    swapped: bool = False       # X and Z displays are exchanged
    repair: tuple[str, str] | None = None   # (printed, corrected) substring of the X text
    note: str = ""


def _r(p, label, q, x, z, **kw) -> TableRow:
    return TableRow(p, label, tuple(q), x, z, **kw)


ROWS: tuple[TableRow, ...] = (
    # p = 3
    _r(3, (3, 0), [2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 1, 2, 2, 2, 2],
       "2u^4 + 2u^3v + u^3 + 2u^2v^2 + u^2v + 2u^2 + 2uv^3 + uv^2 + uv + 2u + v^3 + v^2 + 2v + 1",
       "2x^5 + x^4 + 2x^2 + x + z^2 + 1"),
    _r(3, (2, 0), [1, 0, 2, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 1, 2],
       "2u^4 + u^3v + 2u^3 + u^2v + 2uv^3 + uv^2 + 2v^3 + 2v^2 + 2",
       "x^6 + 2x^5 + 2x^4 + x^2 + x + z^2"),
    _r(3, (1, 0), [2, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0],
       "2u^4 + 2u^3 + 2u^2v + 2u^2 + uv^2 + 2uv + x + 2v^4 + v^3 + v + 2",
       "2x^6 + 2x^5 + z^2 + 1",
       repair=("+ x +", "+ u +"), note="linear term printed as x instead of u"),
    _r(3, (0, 0), [2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 2],
       "2u^4 + 2u^3 + 2u^2v + 2u^2 + 2uv^2 + u + v^4 + 2v^3 + v + 1",
       "2x^6 + x + z^2 + 1"),
    _r(3, (1, 1), [0, 0, 1, 0, 0, 2, 1, 1, 1, 0, 1, 0, 1, 1, 2],
       "2x^6 + 2x^4 + x + y^2",
       "2x^4 + x^2y^2 + x^2 + xy^3 + xy^2 + 2xy + 2x + 2y^4 + y^3 + 2y",
       x_vars=("x", "y"), z_vars=("x", "y"), swapped=True,
       note="X and Z displays exchanged; variables x, y"),
    _r(3, (0, 1), [2, 0, 1, 0, 0, 2, 1, 0, 0, 0, 1, 0, 1, 0, 1],
       "2x^6 + 2x^3 + 2x^2 + x + y^2 + 1",
       "2x^4 + 2x^3y + 2x^3 + 2x^2 + xy^3 + xy^2 + 2xy + 2x + y^2 + 2",
       x_vars=("x", "y"), z_vars=("x", "y"), swapped=True,
       note="X and Z displays exchanged; variables x, y"),
    # p = 5
    _r(5, (3, 0), [1, 0, 1, 0, 0, 3, 1, 1, 0, 0, 0, 1, 3, 1, 0],
       "4u^4 + 3u^3 + 4u^2v^2 + u^2v + 3uv^2 + 4u + v^3 + 3v^2 + 3v",
       "4x^6 + x^3 + 2x + z^2 + 3"),
    _r(5, (2, 0), [1, 0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 1, 3, 1, 0],
       "4u^4 + 3u^3 + 4u^2v^2 + u^2v + 3uv^2 + u + v^3 + 2v^2 + 2v",
       "4x^6 + 4x^3 + 3x + z^2 + 2"),
    _r(5, (1, 0), [3, 4, 4, 4, 4, 3, 1, 1, 1, 0, 0, 0, 0, 1, 3],
       "4u^4 + 3u^2v^2 + 3u^2v + 2u^2 + 4uv^2 + uv + 2u + 4v^4 + 4v^3 + 4v^2 + 3",
       "2x^5 + x^3 + 2x^2 + 2x + z^2 + 2"),
    _r(5, (0, 0), [3, 4, 4, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 3],
       "4u^4 + 3u^2v^2 + 3u^2v + 2u^2 + 4uv^2 + 3uv + 3v + 4v^4 + 4v^3 + v + 2",
       "2x^5 + 2x^2 + 2x + z^2 + 2",
       repair=("+ 3v +", "+ 3u +"), note="linear term printed as 3v instead of 3u"),
    # p = 7
    _r(7, (3, 0), [1, 0, 5, 0, 0, 5, 1, 1, 1, 0, 0, 0, 0, 3, 1],
       "6u^4 + 5u^2v^2 + 3u^2v + 6u^2 + 6v^4 + v^3 + 3v^2 + v + 4",
       "6x^5 + 6x^3 + z^2 + 4"),
    _r(7, (2, 0), [1, 0, 2, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 2, 4],
       "6u^4 + 5u^2v^2 + 2u^2v + 2u^2 + 6v^4 + 4v^3 + 6v^2 + 6",
       "5x^5 + x^4 + 4x^3 + 6x^2 + 4x + z^2"),
    _r(7, (1, 0), [3, 0, 0, 0, 0, 6, 1, 1, 1, 0, 0, 0, 0, 3, 1],
       "6u^4 + 5u^2v^2 + 2u^2v + u^2 + 6v^4 + 5v^2 + 4v + 5",
       "6x^5 + 6x^4 + x^2 + x + z^2"),
    _r(7, (0, 0), [3, 0, 4, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 2],
       "6u^4 + u^2v^2 + 4u^2 + 3v^4 + 6v^2 + 6",
       "4x^5 + 4x^4 + 3x^2 + 3x + z^2"),
    # p = 11
    _r(11, (3, 0), [8, 0, 5, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 2, 3],
       "10u^4 + 9u^2v^2 + 5u^2v + 2u^2 + 10v^4 + 10v^3 + 4v^2 + 4v + 6",
       "9x^5 + 4x^4 + x^3 + 7x^2 + 8x + z^2 + 3"),
    _r(11, (2, 0), [10, 0, 6, 0, 0, 9, 1, 1, 0, 0, 0, 0, 0, 2, 2],
       "10u^4 + 9u^2v^2 + 9u^2v + 9u^2 + 10v^4 + v^3 + v^2 + 7v + 7",
       "9x^5 + 9x^4 + 9x^3 + 2x^2 + 2x + z^2 + 1"),
    _r(11, (1, 0), [10, 0, 7, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 2, 3],
       "10u^4 + 9u^2v^2 + 9u^2v + 8u^2 + 10v^4 + 3v^3 + 10v^2 + 4v + 6",
       "9x^5 + 2x^4 + 3x^3 + 9x^2 + 2x + z^2 + 8"),
    _r(11, (0, 0), [7, 0, 10, 0, 0, 2, 1, 1, 1, 0, 0, 0, 0, 2, 1],
       "10u^4 + 9u^2v^2 + 3u^2v + 5u^2 + 10v^4 + 9v^3 + 8v^2 + 4v + 1",
       "9x^5 + 8x^4 + 9x^3 + 3x^2 + 10x + z^2 + 8"),
    # p = 13
    _r(13, (3, 0), [3, 0, 6, 0, 0, 8, 1, 1, 1, 0, 0, 0, 0, 2, 0],
       "12u^4 + 11u^2v^2 + 6u^2v + 11u^2 + 12v^4 + 12v^3 + 11v^2 + 3v + 12",
       "11x^5 + 10x^4 + 8x^3 + 3x^2 + 11x + z^2 + 1"),
    _r(13, (2, 0), [1, 0, 12, 0, 0, 12, 1, 1, 1, 0, 0, 0, 0, 2, 6],
       "12u^4 + 11u^2v^2 + 2u^2v + 4u^2 + 12v^4 + 11v^3 + 5v^2 + 11v + 6",
       "11x^5 + 10x^4 + 8x^3 + 3x^2 + 11x + z^2 + 1"),
    _r(13, (1, 0), [2, 0, 3, 0, 0, 11, 1, 1, 1, 0, 0, 0, 0, 11, 12],
       "12u^4 + 11u^2v^2 + 9u^2v + 9u^2 + 12v^4 + 7v^3 + 8v^2 + 4v + 1",
       "11x^5 + 7x^4 + 11x^3 + 6x^2 + 5x + z^2 + 1"),
    _r(13, (0, 0), [9, 0, 8, 0, 0, 12, 1, 1, 1, 0, 0, 0, 0, 1, 1],
       "12u^4 + 11u^2v^2 + 9u^2v + 7u^2 + 12v^4 + 8v^3 + 6v^2 + 12v + 11",
       "6x^5 + 5x^4 + 3x^3 + 6x^2 + 6x + z^2 + 6"),
    # p = 17
    _r(17, (3, 0), [0, 0, 13, 0, 0, 2, 1, 1, 1, 0, 0, 0, 0, 3, 2],
       "16u^4 + 15u^2v^2 + 15u^2 + 16v^4 + 5v^3 + 7v^2 + 6v + 3",
       "4x^5 + 8x^4 + 9x^3 + 9x^2 + x + z^2"),
    _r(17, (2, 0), [9, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 6],
       "16u^4 + 15u^2v^2 + 10u^2v + u^2 + 16v^4 + 3v^3 + 4v^2 + 16",
       "4x^5 + 8x^4 + 9x^3 + 9x^2 + x + z^2"),
    _r(17, (1, 0), [9, 0, 7, 0, 0, 16, 1, 1, 1, 0, 0, 0, 0, 3, 10],
       "16u^4 + 15u^2v^2 + 10u^2v + 3u^2 + 16v^4 + 4v^3 + 14v + 6",
       "4x^5 + 7x^4 + 5x^3 + 10x^2 + 9x + z^2 + 5"),
    _r(17, (0, 0), [6, 0, 9, 0, 0, 15, 1, 1, 1, 0, 0, 0, 0, 1, 0],
       "16u^4 + 15u^2v^2 + 6u^2v + 15u^2 + 16v^4 + 9v^3 + 15v^2 + 15v + 16",
       "8x^5 + 7x^4 + 8x^3 + x^2 + 14x + z^2 + 11"),
    # p = 19
    _r(19, (3, 0), [3, 0, 8, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 8],
       "18u^4 + 17u^2v^2 + 9u^2v + 3u^2 + 18v^4 + 5v^3 + 5v^2 + 18",
       "5x^5 + 11x^4 + 13x^3 + 8x^2 + 10x + z^2"),
    _r(19, (2, 0), [4, 0, 6, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 5],
       "18u^4 + 17u^2v^2 + 12u^2v + 18u^2 + 18v^4 + 18v^3 + 9v^2 + 18",
       "5x^5 + 11x^4 + 13x^3 + 8x^2 + 10x + z^2"),
    _r(19, (1, 0), [12, 0, 3, 0, 0, 3, 1, 1, 1, 0, 0, 0, 0, 2, 8],
       "18u^4 + 17u^2v^2 + 5u^2v + 18u^2 + 18v^4 + 6v^3 + 3v^2 + 6v + 4",
       "17x^5 + x^4 + x^3 + 18x^2 + 10x + z^2 + 13"),
    _r(19, (0, 0), [11, 0, 4, 0, 0, 10, 1, 1, 1, 0, 0, 0, 0, 5, 4],
       "18u^4 + 17u^2v^2 + 17u^2v + 4u^2 + 18v^4 + v^3 + 14v^2 + 12v + 1",
       "16x^5 + 9x^4 + 14x^3 + 10x^2 + 8x + z^2 + 3"),
)


def rows_for(p: int | None = None) -> list[TableRow]:
    return [r for r in ROWS if p is None or r.p == p]
