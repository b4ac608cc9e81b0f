from fractions import Fraction

import pytest

import curling


def test_curling_number_general_and_binary():
    assert curling.curling_number([0, 1, 2, 2, 1, 2, 2, 1, 2, 2]) == (3, 3)
    assert curling.curling_number("2323") == (2, 2)


def test_empty_sequence_raises():
    with pytest.raises(curling.CurlingError):
        curling.curling_number([])


def test_extend_and_gijswijt():
    tau, ext = curling.extend("2323")
    assert tau == 4
    assert ext == [2, 3, 2, 3, 2, 2, 2, 3]
    assert curling.gijswijt(9) == [1, 1, 2, 1, 1, 2, 2, 2, 3]


def test_omega_small():
    r = curling.omega(8)
    assert (r["omega"], r["best"], r["achievers"]) == (58, "23222323", 1)
    assert curling.jump_points(11) == [1, 2, 4, 6, 8, 9, 10, 11]


def test_tables_row_sums():
    rows = curling.table("c", 10)
    assert [sum(r) for r in rows] == [2 ** n for n in range(1, 11)]
    assert curling.table("c", 12)[11][2:4] == [660, 286]


def test_c1_and_tails():
    assert curling.c1(12)[-1] == 1124
    counts, mean = curling.tail_row(2)
    assert mean == Fraction(3, 4)
    assert sum(counts) == 4


def test_cli_round_trip():
    code, out, err = curling.run_cli(["omega", "--n", "4", "--mode", "exhaustive"])
    assert code == 0
    assert out.splitlines()[0] == "omega=4 best=2323"
    code, _, err = curling.run_cli(["curl"])
    assert code == 2 and err
