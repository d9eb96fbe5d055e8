import json

import pytest

import committee_power as cp
from committee_power import ValidationError, imf
from committee_power.cli import main
from committee_power.files import (committee_from_dict, committee_to_dict,
                                   load_committee, save_committee)


@pytest.fixture
def borda_file(tmp_path):
    path = tmp_path / "borda.json"
    path.write_text(json.dumps({
        "alternatives": ["a", "b", "c"],
        "weights": [6, 5, 3],
        "rule": "borda",
    }))
    return str(path)


@pytest.fixture
def hiring_file(tmp_path):
    path = tmp_path / "hiring.json"
    path.write_text(json.dumps({"m": 5, "weights": [6, 5, 3],
                                "rule": "plurality"}))
    return str(path)


class TestCommitteeFiles:
    def test_load(self, borda_file):
        c = load_committee(borda_file)
        assert (c.m, c.weights, c.rule) == (3, (6, 5, 3), "borda")

    def test_roundtrip(self, tmp_path):
        c = cp.Committee(4, (9, 2, 1), "schulze")
        path = tmp_path / "c.json"
        save_committee(c, path)
        assert load_committee(path) == c

    def test_m_field_gives_default_labels(self):
        c = committee_from_dict({"m": 4, "weights": [1, 1], "rule": "copeland"})
        assert c.labels == ("a", "b", "c", "d")

    def test_unknown_rule_lists_valid_names(self):
        with pytest.raises(ValidationError, match="plurality-runoff"):
            committee_from_dict({"m": 3, "weights": [1], "rule": "stv"})

    def test_missing_fields(self):
        with pytest.raises(ValidationError, match="weights"):
            committee_from_dict({"m": 3, "rule": "borda"})
        with pytest.raises(ValidationError, match="rule"):
            committee_from_dict({"m": 3, "weights": [1]})

    def test_unknown_field_rejected(self):
        with pytest.raises(ValidationError, match="quota"):
            committee_from_dict({"m": 3, "weights": [1], "rule": "borda",
                                 "quota": 0.5})

    def test_dict_roundtrip(self):
        c = cp.Committee(3, (6, 5, 3), "plurality")
        assert committee_from_dict(committee_to_dict(c)) == c


class TestImfDataset:
    def test_shape_and_anchor_rows(self):
        assert len(imf.SEATS) == 24
        by_label = {s.label: s for s in imf.SEATS}
        assert (by_label["USA"].pre_bp, by_label["USA"].post_bp) == (1672, 1647)
        assert (by_label["Saudi Arabia"].pre_bp,
                by_label["Saudi Arabia"].post_bp) == (280, 201)

    def test_csv_roundtrip(self):
        assert imf.parse_dataset_csv(imf.dataset_csv()) == imf.SEATS

    def test_board_committee(self):
        c = imf.board_committee("copeland", "post")
        assert c.n == 24
        assert c.m == 3
        assert c.weights[2] == 607

    def test_bad_era(self):
        with pytest.raises(ValidationError):
            imf.shares_bp("during")


class TestEvalCommand:
    def test_winner_on_stdout(self, borda_file, capsys):
        assert main(["eval", borda_file, "bca", "abc", "cba"]) == 0
        assert capsys.readouterr().out.strip() == "b"

    def test_verbose_prints_scores(self, borda_file, capsys):
        main(["eval", borda_file, "bca", "abc", "cba", "--verbose"])
        out = capsys.readouterr().out
        assert "a=10" in out and "b=20" in out and "c=12" in out

    def test_hiring_plurality(self, hiring_file, capsys):
        assert main(["eval", hiring_file, "adecb", "bcdea", "cedba"]) == 0
        assert capsys.readouterr().out.strip() == "a"

    def test_single_voter(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(json.dumps({"m": 3, "weights": [2], "rule": "schulze"}))
        assert main(["eval", str(path), "cab"]) == 0
        assert capsys.readouterr().out.strip() == "c"

    def test_arity_mismatch_exits_2(self, borda_file, capsys):
        assert main(["eval", borda_file, "abc", "bca"]) == 2
        assert "players" in capsys.readouterr().err

    def test_malformed_ranking_exits_2(self, borda_file, capsys):
        assert main(["eval", borda_file, "bba", "abc", "cba"]) == 2
        assert "'b'" in capsys.readouterr().err


class TestPowerCommands:
    def test_exact_csv(self, borda_file, capsys):
        assert main(["power", "exact", borda_file, "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert "1,6,588,49/90,49/72,0.6806" in out

    def test_exact_all_rules_matrix(self, borda_file, capsys):
        assert main(["power", "exact", borda_file, "--all-rules",
                     "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert "borda,0.6806,0.5972,0.3611" in out
        assert "copeland,0.5509,0.5509,0.5509" in out

    def test_exact_out_file(self, borda_file, tmp_path, capsys):
        target = tmp_path / "report.csv"
        assert main(["power", "exact", borda_file, "--format", "csv",
                     "--out", str(target)]) == 0
        assert "588" in target.read_text()
        assert capsys.readouterr().out == ""

    def test_cap_exceeded_exits_3(self, tmp_path, capsys):
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"m": 5, "weights": [2, 1, 1, 1, 1],
                                    "rule": "borda"}))
        assert main(["power", "exact", str(path)]) == 3
        assert "Monte Carlo" in capsys.readouterr().err

    def test_mc_zero_samples_exits_2(self, borda_file, capsys):
        assert main(["power", "mc", borda_file, "--samples", "0"]) == 2

    def test_mc_csv_echoes_seed(self, borda_file, capsys):
        assert main(["power", "mc", borda_file, "--samples", "2000",
                     "--seed", "42", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert "seed=42" in out
        assert "generator=philox" in out


class TestImfCommand:
    def test_table_shape(self, capsys):
        assert main(["imf", "--rule", "copeland", "--era", "pre",
                     "--samples", "4000"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert len(lines) == 1 + 1 + 24
        assert lines[1].startswith("member,share_pre,")
        assert lines[2].startswith('"USA",16.72,')

    def test_diff_adds_significance_columns(self, capsys):
        assert main(["imf", "--rule", "plurality", "--samples", "4000",
                     "--diff"]) == 0
        out = capsys.readouterr().out
        header = out.strip().split("\n")[1]
        assert header.endswith("z_score,significant")

    def test_unlisted_rule_gets_a_note(self, capsys):
        assert main(["imf", "--rule", "borda", "--era", "pre",
                     "--samples", "2000"]) == 0
        assert "not part" in capsys.readouterr().err

    def test_dump_dataset(self, capsys):
        assert main(["imf", "--dump-dataset"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("label,constituency,pre_bp,post_bp")
        assert imf.parse_dataset_csv(out) == imf.SEATS


class TestMapCommand:
    def test_pairwise_map_writes_files(self, tmp_path, capsys):
        prefix = tmp_path / "cmp"
        assert main(["map", "--rules", "borda", "plurality",
                     "--resolution", "6", "--out", str(prefix)]) == 0
        assert (tmp_path / "cmp.svg").exists()
        csv_text = (tmp_path / "cmp.csv").read_text()
        assert csv_text.split("\n")[1] == "w1,w2,w3,class,diff_numerator,diff_denominator"

    def test_best_map_writes_files(self, tmp_path):
        prefix = tmp_path / "best"
        assert main(["map", "--best", "--resolution", "5",
                     "--out", str(prefix)]) == 0
        assert (tmp_path / "best.svg").exists()
        assert "best_rules" in (tmp_path / "best.csv").read_text()

    def test_identity_comparison_is_all_equal(self, tmp_path):
        prefix = tmp_path / "eq"
        assert main(["map", "--rules", "plurality", "plurality",
                     "--resolution", "4", "--out", str(prefix)]) == 0
        rows = (tmp_path / "eq.csv").read_text().strip().split("\n")[2:]
        assert all(",EQUAL," in row for row in rows)

    def test_requires_a_mode(self, tmp_path, capsys):
        assert main(["map", "--resolution", "4",
                     "--out", str(tmp_path / "x")]) == 2

    def test_player_bounds(self, tmp_path):
        assert main(["map", "--best", "--player", "4",
                     "--out", str(tmp_path / "x")]) == 2

    def test_map_cache_reused(self, tmp_path):
        cache = tmp_path / "cache.json"
        prefix = tmp_path / "m"
        assert main(["map", "--best", "--resolution", "5", "--cache",
                     str(cache), "--out", str(prefix)]) == 0
        stamp = cache.read_bytes()
        assert main(["map", "--rules", "copeland", "schulze", "--resolution",
                     "5", "--cache", str(cache), "--out", str(prefix)]) == 0
        assert cache.read_bytes() == stamp
