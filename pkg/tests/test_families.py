import pytest

from kncensus.families import (
    EXCEPTIONAL_J0,
    EXCEPTIONAL_J1728,
    IsogenyTorsionGraph,
    TorsionGroup,
    classify_j1728,
    exceptional_curves,
    kodaira_fast_j0,
    kodaira_fast_j1728,
    minimal_j0,
    minimal_j1728,
    torsion_j0,
)
from kncensus.tate import KodairaType, is_minimal_at, tate
from kncensus.weierstrass import ShortModel

T43 = IsogenyTorsionGraph.T43
L22 = IsogenyTorsionGraph.L22


def short(A, B):
    return ShortModel(A, B).to_weierstrass()


# --- minimality predicates ---------------------------------------------------


def test_minimal_j1728_examples():
    assert minimal_j1728(8)
    assert not minimal_j1728(16)
    assert not minimal_j1728(-81)
    with pytest.raises(ValueError):
        minimal_j1728(0)


def test_minimal_j0_examples():
    assert minimal_j0(32)
    assert not minimal_j0(16)
    assert minimal_j0(48)       # 48/16 = 3 mod 4
    assert minimal_j0(-16)      # -16/16 = -1 = 3 mod 4
    assert not minimal_j0(2 ** 6)
    assert not minimal_j0(5 ** 6 * 7)
    with pytest.raises(ValueError):
        minimal_j0(0)


# --- torsion / graph classification -------------------------------------------


def test_torsion_j0_values():
    assert torsion_j0(8) == TorsionGroup.Z2
    assert torsion_j0(4) == TorsionGroup.Z3
    assert torsion_j0(1) == TorsionGroup.Z6
    assert torsion_j0(-27) == TorsionGroup.Z2
    assert torsion_j0(7) == TorsionGroup.TRIVIAL
    assert torsion_j0(-2) == TorsionGroup.TRIVIAL
    with pytest.raises(ValueError):
        torsion_j0(16)


def test_classify_j1728_table():
    assert classify_j1728(-9) == (TorsionGroup.Z2xZ2, T43)
    assert classify_j1728(9) == (TorsionGroup.Z2, T43)
    assert classify_j1728(5) == (TorsionGroup.Z2, L22)
    assert classify_j1728(-5) == (TorsionGroup.Z2, L22)
    # exceptional parameters map to the finite graphs, ahead of the square rule
    assert classify_j1728(-1) == (TorsionGroup.Z2xZ2, IsogenyTorsionGraph.T41)
    assert classify_j1728(4) == (TorsionGroup.Z4, IsogenyTorsionGraph.T41)
    assert classify_j1728(1) == (TorsionGroup.Z2, IsogenyTorsionGraph.T42)
    assert classify_j1728(-4) == (TorsionGroup.Z2xZ2, IsogenyTorsionGraph.T42)
    with pytest.raises(ValueError):
        classify_j1728(16)


def test_classify_j1728_is_a_partition():
    for a in range(1, 600):
        for A in (a, -a):
            if not minimal_j1728(A):
                continue
            torsion, graph = classify_j1728(A)
            if A in EXCEPTIONAL_J1728:
                assert graph in (IsogenyTorsionGraph.T41, IsogenyTorsionGraph.T42)
            elif abs(A) == int(abs(A) ** 0.5 + 0.5) ** 2:
                assert graph == T43
                assert torsion == (TorsionGroup.Z2xZ2 if A < 0 else TorsionGroup.Z2)
            else:
                assert (torsion, graph) == (TorsionGroup.Z2, L22)


def test_torsion_constraints_per_family():
    for a in range(1, 400):
        for A in (a, -a):
            if minimal_j1728(A):
                assert classify_j1728(A)[0] in (
                    TorsionGroup.Z2,
                    TorsionGroup.Z4,
                    TorsionGroup.Z2xZ2,
                )
    for b in range(1, 400):
        for B in (b, -b):
            if minimal_j0(B):
                assert torsion_j0(B) in (
                    TorsionGroup.TRIVIAL,
                    TorsionGroup.Z2,
                    TorsionGroup.Z3,
                    TorsionGroup.Z6,
                )


# --- fast classifiers ---------------------------------------------------------


def test_kodaira_fast_j1728_rows():
    assert kodaira_fast_j1728(12).ascii() == "I2*"
    assert kodaira_fast_j1728(20).ascii() == "I3*"
    assert kodaira_fast_j1728(8).ascii() == "III*"
    assert kodaira_fast_j1728(9).ascii() == "II"
    assert kodaira_fast_j1728(2).ascii() == "III"
    assert kodaira_fast_j1728(-1).ascii() == "III"
    assert kodaira_fast_j1728(-12).ascii() == "I3*"


def test_kodaira_fast_j0_rows():
    assert kodaira_fast_j0(7).ascii() == "II"
    assert kodaira_fast_j0(8).ascii() == "III"
    assert kodaira_fast_j0(-8).ascii() == "III"  # -8 = 1 mod 9
    assert kodaira_fast_j0(54).ascii() == "IV*"
    assert kodaira_fast_j0(-54).ascii() == "IV*"
    assert kodaira_fast_j0(243).ascii() == "II*"
    assert kodaira_fast_j0(9).ascii() == "IV"
    assert kodaira_fast_j0(27).ascii() == "III*"
    assert kodaira_fast_j0(3).ascii() == "II"


def test_square_parameter_parity_regression():
    # members A = t^2 (t squarefree): II for odd t, I3* for even t.  The
    # opposite parity assignment is wrong, as the oracle certifies.
    for t in (3, 5, 7, 11, 13, 15):
        assert kodaira_fast_j1728(t * t).ascii() == "II"
        assert tate(short(t * t, 0), 2).kodaira.ascii() == "II"
    for t in (2, 6, 10, 14, 22):
        assert kodaira_fast_j1728(t * t).ascii() == "I3*"
        assert tate(short(t * t, 0), 2).kodaira.ascii() == "I3*"


def test_fast_classifiers_match_oracle_medium_range():
    for v in range(1, 4001):
        for A in (v, -v):
            if minimal_j1728(A):
                assert kodaira_fast_j1728(A) == tate(short(A, 0), 2).kodaira, A
        for B in (v, -v):
            if minimal_j0(B):
                assert kodaira_fast_j0(B) == tate(short(0, B), 3).kodaira, B


def test_fast_j1728_type_range_restriction():
    allowed = {"II", "III", "III*", "I2*", "I3*"}
    for v in range(1, 3000):
        for A in (v, -v):
            if minimal_j1728(A):
                assert kodaira_fast_j1728(A).ascii() in allowed


def test_fast_j0_type_range_restriction():
    allowed = {"II", "III", "IV", "IV*", "III*", "II*"}
    for v in range(1, 3000):
        for B in (v, -v):
            if minimal_j0(B):
                assert kodaira_fast_j0(B).ascii() in allowed


# --- exceptional curves --------------------------------------------------------


def test_exceptional_curves_oracle_types():
    curves = exceptional_curves()
    assert [label for label, *_ in curves] == [
        "27.a3", "27.a4", "36.a3", "36.a4", "32.a3", "32.a4", "64.a3", "64.a4",
    ]
    assert [ld[3].ascii() for ld in curves] == [
        "IV*", "II", "III*", "III", "III", "I3*", "I2*", "II",
    ]
    for label, model, p, expected in curves:
        local = tate(model, p)
        assert local.kodaira == expected, label
        assert local.was_minimal, label
        # models are globally minimal
        for q in (2, 3):
            assert is_minimal_at(model, q), (label, q)


def test_exceptional_j0_constants():
    assert EXCEPTIONAL_J0[1][0] == "36.a4"
    assert EXCEPTIONAL_J0[-27][0] == "36.a3"
    assert set(EXCEPTIONAL_J1728) == {-1, 1, 4, -4}
