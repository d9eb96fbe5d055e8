import random
from fractions import Fraction
import numpy as np
import pytest

import committee_power as cp
from committee_power import (Committee, EnumerationCapError, Profile, Ranking,
                             ValidationError)
from committee_power.core import winner
from committee_power.exact import (build_outcome_table, delta_indicator,
                                   influence_exact, normalization_factor,
                                   pbi_binary, swing_rankings,
                                   verify_pbi_coincidence)
from oracles import naive_swing_counts, subset_critical_counts

W653 = (6, 5, 3)


def borda653():
    return Committee(3, W653, cp.BORDA)


class TestOutcomeTable:
    def test_table_matches_single_profile_winners_everywhere(self):
        for rule in cp.RULES:
            c = Committee(3, W653, rule)
            table = build_outcome_table(c)
            assert len(table.winners) == 216
            for code in range(216):
                assert table.winners[code] == winner(c, Profile.from_code(code, 3, 3))

    def test_single_voter_two_alternatives(self):
        c = Committee(2, (1,), cp.PLURALITY)
        table = build_outcome_table(c)
        assert table.winners.tolist() == [0, 1]

    def test_large_table_spot_checked(self):
        c = Committee(5, W653, cp.BORDA)
        table = build_outcome_table(c)
        assert len(table.winners) == 1_728_000
        rng = random.Random(11)
        for _ in range(1000):
            code = rng.randrange(1_728_000)
            assert table.winners[code] == winner(c, Profile.from_code(code, 5, 3))

    def test_cap_error_points_to_monte_carlo(self):
        c = Committee(5, (2, 1, 1, 1, 1), cp.BORDA)
        with pytest.raises(EnumerationCapError, match="Monte Carlo"):
            build_outcome_table(c)

    def test_worker_count_does_not_change_the_table(self):
        c = Committee(4, W653, cp.SCHULZE)
        t1 = build_outcome_table(c, workers=1)
        t3 = build_outcome_table(c, workers=3)
        assert np.array_equal(t1.winners, t3.winners)


class TestDeltaIndicator:
    def test_borda_table2_swings(self):
        c = borda653()
        p = c.parse_profile(["bca", "abc", "cba"])
        abc = cp.ranking_from_string("abc", 3)
        bac = cp.ranking_from_string("bac", 3)
        assert delta_indicator(c, p, 0, abc) is True
        assert delta_indicator(c, p, 0, bac) is False
        for code in range(6):
            r = Ranking.from_code(code, 3)
            if r != p.rankings[2]:
                assert delta_indicator(c, p, 2, r) is False

    def test_identical_replacement_rejected(self):
        c = borda653()
        p = c.parse_profile(["bca", "abc", "cba"])
        with pytest.raises(ValidationError):
            delta_indicator(c, p, 0, p.rankings[0])

    def test_swing_sets_match_score_table(self):
        c = borda653()
        p = c.parse_profile(["bca", "abc", "cba"])
        as_strings = [
            {r.to_string() for r in swing_rankings(c, p, i)} for i in range(3)
        ]
        assert as_strings[0] == {"abc", "acb", "cab", "cba"}
        assert as_strings[1] == {"acb", "cab", "cba"}
        assert as_strings[2] == set()


class TestInfluenceExact:
    def test_borda_653_exact_fractions(self):
        report = influence_exact(borda653())
        assert report.swing_counts == (588, 516, 312)
        assert report.normalized == (Fraction(588, 864), Fraction(516, 864),
                                     Fraction(312, 864))
        assert report.unnormalized == (Fraction(588, 1080), Fraction(516, 1080),
                                       Fraction(312, 1080))

    def test_normalization_links_the_two_scales(self):
        report = influence_exact(Committee(3, W653, cp.SCHULZE))
        factor = normalization_factor(3)
        for u, n in zip(report.unnormalized, report.normalized):
            assert n == u / factor

    def test_plurality_653_matches_printed_values(self):
        report = influence_exact(Committee(3, W653, cp.PLURALITY))
        rounded = tuple(round(float(x), 4) for x in report.normalized)
        assert rounded == (0.6667, 0.4444, 0.4444)

    def test_copeland_653_equalizes_players(self):
        report = influence_exact(Committee(3, W653, cp.COPELAND))
        assert len(set(report.normalized)) == 1
        assert round(float(report.normalized[0]), 4) == 0.5509

    def test_plurality_dictator_and_null_players(self):
        report = influence_exact(Committee(3, (4, 1, 1), cp.PLURALITY))
        assert report.normalized == (Fraction(1), Fraction(0), Fraction(0))

    def test_null_player_has_zero_influence_under_every_rule(self):
        for rule in cp.RULES:
            report = influence_exact(Committee(3, (6, 5, 0), rule))
            assert report.normalized[2] == 0

    def test_influence_lies_between_zero_and_one(self):
        rng = random.Random(3)
        for _ in range(10):
            weights = tuple(rng.randint(0, 9) for _ in range(3))
            if sum(weights) == 0:
                continue
            rule = rng.choice(cp.RULES)
            report = influence_exact(Committee(3, weights, rule))
            assert all(0 <= x <= 1 for x in report.normalized)

    def test_index_invariant_under_weight_scaling(self):
        for rule in cp.RULES:
            r1 = influence_exact(Committee(3, W653, rule))
            r2 = influence_exact(Committee(3, tuple(3 * w for w in W653), rule))
            assert r1.normalized == r2.normalized

    @pytest.mark.parametrize("weights", [(4, 3, 2), (6, 5, 3), (5, 0, 1)])
    def test_slice_identity_equals_naive_double_loop(self, weights):
        for rule in cp.RULES:
            c = Committee(3, weights, rule)
            assert influence_exact(c).swing_counts == naive_swing_counts(c)


class TestPbiBinary:
    def test_symmetric_majority_triple(self):
        assert pbi_binary(W653) == (Fraction(1, 2),) * 3
        assert pbi_binary((1, 1, 1)) == (Fraction(1, 2),) * 3

    def test_dictator_vector(self):
        assert pbi_binary((3, 1, 1)) == (Fraction(1), Fraction(0), Fraction(0))

    def test_matches_subset_listing_oracle(self):
        rng = random.Random(5)
        for _ in range(15):
            n = rng.randint(1, 6)
            weights = tuple(rng.randint(0, 9) for _ in range(n))
            if sum(weights) == 0:
                continue
            expected = tuple(Fraction(c, 2 ** (n - 1))
                             for c in subset_critical_counts(weights))
            assert pbi_binary(weights) == expected

    def test_player_cap(self):
        with pytest.raises(ValidationError, match="30"):
            pbi_binary((1,) * 31)


class TestPbiCoincidence:
    @pytest.mark.parametrize("rule", cp.RULES)
    def test_named_examples(self, rule):
        assert verify_pbi_coincidence(W653, rule)
        assert verify_pbi_coincidence((3, 1, 1), rule)
        assert verify_pbi_coincidence((1, 1, 1), rule)

    def test_randomized_weights(self):
        rng = random.Random(9)
        for _ in range(10):
            n = rng.randint(3, 6)
            weights = tuple(rng.randint(0, 9) for _ in range(n))
            if sum(weights) == 0:
                continue
            rule = rng.choice(cp.RULES)
            assert verify_pbi_coincidence(weights, rule)
