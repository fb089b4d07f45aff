import random
from fractions import Fraction

import pytest

from kncensus.weierstrass import (
    ShortModel,
    SingularModelError,
    WeierstrassModel,
    format_model,
    format_short,
    height,
    invariants,
    j_invariant,
    parse_model,
    parse_short,
    rescale,
    rst_transform,
)


def short(A, B):
    return ShortModel(A, B).to_weierstrass()


def test_invariants_of_reference_models():
    inv = invariants(short(1, 0))
    assert (inv.disc, inv.c4, inv.c6) == (-64, -48, 0)
    inv = invariants(short(0, 1))
    assert (inv.disc, inv.c4, inv.c6) == (-432, 0, -864)
    assert invariants(short(0, 2)).disc == -1728


def test_b8_and_disc_identities_random_models():
    rng = random.Random(1728)
    seen = 0
    while seen < 10 ** 4:
        coeffs = [rng.randint(-50, 50) for _ in range(5)]
        try:
            m = WeierstrassModel(*coeffs)
        except SingularModelError:
            continue
        seen += 1
        inv = invariants(m)
        assert 4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 ** 2
        assert 1728 * inv.disc == inv.c4 ** 3 - inv.c6 ** 2
        assert inv.j == Fraction(inv.c4 ** 3, inv.disc)


def test_j_invariant_values():
    assert j_invariant(short(0, 5)) == 0
    assert j_invariant(short(5, 0)) == 1728
    assert j_invariant(short(1, 1)) == Fraction(6912, 31)
    for A in range(1, 40):
        assert j_invariant(short(A, 0)) == 1728
        assert j_invariant(short(-A, 0)) == 1728
        assert j_invariant(short(0, A)) == 0
        assert j_invariant(short(0, -A)) == 0


def test_height_values_and_symmetry():
    assert height(ShortModel(2, 0)) == 32
    assert height(ShortModel(0, 3)) == 243
    assert height(ShortModel(-2, 3)) == 243
    rng = random.Random(7)
    for _ in range(200):
        A = rng.randint(-999, 999)
        B = rng.randint(-999, 999)
        if 4 * A ** 3 + 27 * B ** 2 == 0:
            continue
        h = height(ShortModel(A, B))
        assert h == height(ShortModel(A, -B))
        if 4 * (-A) ** 3 + 27 * B ** 2 != 0:
            assert h == height(ShortModel(-A, B))
        assert h == max(4 * abs(A) ** 3, 27 * B ** 2)


def test_singular_models_rejected():
    with pytest.raises(SingularModelError):
        ShortModel(0, 0)
    with pytest.raises(SingularModelError):
        ShortModel(-3, 2)  # 4(-27) + 27(4) = 0
    with pytest.raises(SingularModelError):
        WeierstrassModel(0, 0, 0, 0, 0)


def test_parse_format_round_trip():
    m = parse_model("1, -2, 3,0, -6")
    assert m == WeierstrassModel(1, -2, 3, 0, -6)
    assert parse_model(format_model(m)) == m
    s = parse_short("-2, 3")
    assert s == ShortModel(-2, 3)
    assert parse_short(format_short(s)) == s


@pytest.mark.parametrize("text", ["1,2,3", "a,b,c,d,e", "1,2,3,4,5,6", "", "1;2;3;4;5"])
def test_parse_model_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_model(text)


@pytest.mark.parametrize("text", ["1", "1,2,3", "x,1"])
def test_parse_short_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_short(text)


def test_rst_transform_preserves_discriminant():
    rng = random.Random(99)
    for _ in range(300):
        try:
            m = WeierstrassModel(*(rng.randint(-9, 9) for _ in range(5)))
        except SingularModelError:
            continue
        r, s, t = (rng.randint(-4, 4) for _ in range(3))
        assert invariants(rst_transform(m, r, s, t)).disc == invariants(m).disc


def test_rescale():
    m = WeierstrassModel(0, 0, 8, 0, 0)
    assert rescale(m, 2) == WeierstrassModel(0, 0, 1, 0, 0)
    with pytest.raises(ValueError):
        rescale(WeierstrassModel(0, 0, 1, 0, 0), 2)
