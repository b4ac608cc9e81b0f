"""Curling numbers, tail lengths and their counting tables."""

from fractions import Fraction

from . import _core
from ._core import (
    CurlingError,
    c1,
    curling_number,
    essential_count,
    extend,
    gijswijt,
    jump_points,
    omega,
    rotten_count,
    run_cli,
    table,
    verify,
)


def tail_row(n, threads=0):
    """Counts t(n, i) for i = 0.. and the exact mean tail length."""
    counts, num, den = _core.tail_row(n, threads)
    return counts, Fraction(num, den)


__all__ = [
    "CurlingError",
    "c1",
    "curling_number",
    "essential_count",
    "extend",
    "gijswijt",
    "jump_points",
    "omega",
    "rotten_count",
    "run_cli",
    "table",
    "tail_row",
    "verify",
]
