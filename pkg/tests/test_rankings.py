from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from committee_power import Profile, Ranking, ValidationError, ranking_from_string
from committee_power.tables import decode_ranking, encode_ranking, tables_for


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_ranking_codes_are_lexicographic_ranks(m):
    orders = list(permutations(range(m)))
    for code, order in enumerate(orders):
        assert encode_ranking(order) == code
        assert decode_ranking(code, m) == order


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_ranking_code_roundtrip(m):
    for code in range(factorial(m)):
        r = Ranking.from_code(code, m)
        assert r.code == code
        assert sorted(r.order) == list(range(m))


def test_tables_match_permutations():
    t = tables_for(3)
    assert t.perms.tolist() == [list(p) for p in permutations(range(3))]
    assert t.top.tolist() == [p[0] for p in permutations(range(3))]
    # positions invert the orders
    for code in range(6):
        for pos, alt in enumerate(t.perms[code]):
            assert t.positions[code, alt] == pos
            assert t.borda_points[code, alt] == 2 - pos


def test_ranking_rejects_non_permutation():
    with pytest.raises(ValidationError):
        Ranking((0, 0, 2))
    with pytest.raises(ValidationError):
        Ranking((1, 2, 3))


@given(st.integers(2, 4), st.data())
def test_profile_code_roundtrip(m, data):
    n = data.draw(st.integers(1, 4))
    codes = data.draw(st.lists(st.integers(0, factorial(m) - 1),
                               min_size=n, max_size=n))
    profile = Profile(tuple(Ranking.from_code(c, m) for c in codes))
    assert Profile.from_code(profile.code, m, n) == profile
    assert profile.code == sum(c * factorial(m) ** i for i, c in enumerate(codes))


@given(st.data())
def test_profile_replace_touches_one_component(data):
    m, n = 3, 4
    codes = data.draw(st.lists(st.integers(0, 5), min_size=n, max_size=n))
    player = data.draw(st.integers(0, n - 1))
    new_code = data.draw(st.integers(0, 5))
    profile = Profile(tuple(Ranking.from_code(c, m) for c in codes))
    replaced = profile.replace(player, Ranking.from_code(new_code, m))
    for i in range(n):
        expected = new_code if i == player else codes[i]
        assert replaced.rankings[i].code == expected


def test_ranking_from_string_identity():
    assert ranking_from_string("abc", 3).order == (0, 1, 2)


def test_ranking_from_string_bca():
    assert ranking_from_string("bca", 3).order == (1, 2, 0)


def test_ranking_from_string_duplicate_names_character():
    with pytest.raises(ValidationError, match="'b'"):
        ranking_from_string("bba", 3)


def test_ranking_from_string_unknown_names_character():
    with pytest.raises(ValidationError, match="'x'"):
        ranking_from_string("abx", 3)


def test_ranking_from_string_missing_labels():
    with pytest.raises(ValidationError, match="missing 'c'"):
        ranking_from_string("ab", 3)


def test_ranking_from_string_custom_labels():
    r = ranking_from_string("zxy", 3, labels=("x", "y", "z"))
    assert r.order == (2, 0, 1)
    assert r.to_string(("x", "y", "z")) == "zxy"


def test_ranking_to_string_roundtrip():
    for code in range(24):
        r = Ranking.from_code(code, 4)
        assert ranking_from_string(r.to_string(), 4) == r
