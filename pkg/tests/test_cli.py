import json

import pytest
from click.testing import CliRunner

from fcheaps.cli import main
from fcheaps.enumerator import ValidationReport
from fcheaps.walks import WalkFamilySpec, family_poly


def run(*argv):
    return CliRunner().invoke(main, argv)


class TestGraphShow:
    def test_text_lists_bonds(self):
        r = run("graph", "show", "--type", "A", "--rank", "4")
        assert r.exit_code == 0
        assert "bond s1 -- s2  m=3" in r.output
        assert "generators: s1 s2 s3" in r.output

    def test_json_b_has_quadruple_bond(self):
        r = run("graph", "show", "--type", "B", "--rank", "3", "--format", "json")
        data = json.loads(r.output)
        assert data["cyclic"] is False
        assert [b["m"] for b in data["bonds"]] == [3, 4]

    def test_json_affd_has_forks(self):
        r = run("graph", "show", "--type", "affD", "--rank", "2", "--format", "json")
        data = json.loads(r.output)
        assert len(data["forks"]) == 2

    def test_csv(self):
        r = run("graph", "show", "--type", "affA", "--rank", "3", "--format", "csv")
        lines = r.output.splitlines()
        assert lines[0] == "a,b,m"
        assert len(lines) == 4


class TestEnumerate:
    def test_involution_counts_csv_matches_triangle(self):
        r = run("enumerate", "--type", "affA", "--rank", "3",
                "--max-length", "4", "--involutions", "--format", "csv")
        assert r.exit_code == 0
        assert r.output == "0,1\n1,3\n2,0\n3,0\n4,0\n"

    def test_text_counts(self):
        r = run("enumerate", "--type", "A", "--rank", "4", "--max-length", "6")
        # 14 FC elements in S4, none past length 4
        assert r.output.splitlines() == [
            "0: 1", "1: 3", "2: 5", "3: 4", "4: 1", "5: 0", "6: 0"]

    def test_json_counts(self):
        r = run("enumerate", "--type", "A", "--rank", "4",
                "--max-length", "6", "--involutions", "--format", "json")
        data = json.loads(r.output)
        assert data["counts"] == [1, 3, 1, 0, 1, 0, 0]
        assert data["filter"] == "involutions"

    def test_stream_words(self):
        r = run("enumerate", "--type", "A", "--rank", "3",
                "--max-length", "3", "--stream")
        assert r.output.splitlines() == ["e", "s1", "s2", "s1 s2", "s2 s1"]

    def test_stream_csv_has_header(self):
        r = run("enumerate", "--type", "A", "--rank", "3",
                "--max-length", "2", "--stream", "--format", "csv")
        assert r.output.splitlines()[0] == "length,word"

    def test_alternating_filter(self):
        r = run("enumerate", "--type", "B", "--rank", "2",
                "--max-length", "4", "--alternating", "--format", "csv")
        # s1s0s1 is a peak, not alternating; s0s1s0 stays
        assert r.output == "0,1\n1,2\n2,0\n3,1\n4,0\n"

    def test_threads_do_not_change_bytes(self):
        a = run("enumerate", "--type", "B", "--rank", "4", "--max-length", "8")
        b = run("enumerate", "--type", "B", "--rank", "4", "--max-length", "8",
                "--threads", "4")
        assert a.output == b.output

    def test_negative_window_rejected(self):
        assert run("enumerate", "--type", "A", "--rank", "3",
                   "--max-length", "-1").exit_code == 2


class TestGenfunc:
    def test_maj_text(self):
        r = run("genfunc", "maj", "--type", "A", "--rank", "4")
        assert r.exit_code == 0
        assert r.output == "1 + q + 2*q^2 + q^3 + q^4\n"

    def test_length_text(self):
        r = run("genfunc", "length", "--type", "B", "--rank", "2")
        assert r.output == "1 + 2*t + 2*t^3\n"

    def test_card(self):
        assert run("genfunc", "card", "--type", "B", "--rank", "2").output == "5\n"
        assert run("genfunc", "card", "--type", "D", "--rank", "3").output == "16\n"

    def test_csv_rows_skip_zero_coefficients(self):
        r = run("genfunc", "length", "--type", "B", "--rank", "2", "--format", "csv")
        assert r.output == "exponent,coefficient\n0,1\n1,2\n3,2\n"

    def test_json_round_trip(self):
        r = run("genfunc", "maj", "--type", "D", "--rank", "4", "--format", "json")
        data = json.loads(r.output)
        assert data["stat"] == "maj" and data["var"] == "q"
        assert all(isinstance(c, str) for c in data["coeffs"])

    def test_descents_restriction(self):
        r = run("genfunc", "maj", "--type", "B", "--rank", "4", "--descents", "0")
        assert r.output == "1\n"

    def test_descents_needs_type_b_maj(self):
        assert run("genfunc", "maj", "--type", "A", "--rank", "4",
                   "--descents", "1").exit_code == 2
        assert run("genfunc", "length", "--type", "B", "--rank", "4",
                   "--descents", "1").exit_code == 2

    def test_affine_rejected(self):
        assert run("genfunc", "maj", "--type", "affA", "--rank", "4").exit_code == 2


class TestSeries:
    def test_text_window(self):
        r = run("series", "--id", "M", "--xmax", "4", "--tmax", "6")
        lines = r.output.splitlines()
        assert lines[0] == "[x^0] 1"
        assert lines[2] == "[x^2] t"

    def test_matches_library(self):
        from fcheaps.genfunc import solve_series
        r = run("series", "--id", "Mstar", "--xmax", "6", "--tmax", "8",
                "--format", "json")
        data = json.loads(r.output)
        s = solve_series("Mstar", 6, 8)
        assert data["coeffs"] == [[str(c) for c in p.coeffs] for p in s.coeffs]

    def test_csv_header(self):
        r = run("series", "--id", "Q", "--xmax", "3", "--tmax", "4", "--format", "csv")
        assert r.output.splitlines()[0] == "xpow,tpow,coefficient"

    def test_unknown_id(self):
        assert run("series", "--id", "Z", "--xmax", "3", "--tmax", "4").exit_code == 2

    def test_negative_window(self):
        assert run("series", "--id", "M", "--xmax", "-1", "--tmax", "4").exit_code == 2


class TestWalksFamily:
    def test_matches_library_poly(self):
        r = run("walks", "family", "--n", "5", "--end", "0", "--tmax", "8")
        want = family_poly(WalkFamilySpec(n=5, allow_horiz=True, end=0), 8)
        assert r.output == want.to_text("t") + "\n"

    def test_flags_map_to_walk_spec(self):
        r = run("walks", "family", "--n", "4", "--no-horiz", "--touch",
                "--start", "le1", "--end", "eq-start", "--weight", "exclude-start",
                "--tmax", "8", "--format", "json")
        data = json.loads(r.output)
        want = family_poly(WalkFamilySpec(n=4, allow_horiz=False, start="le1",
                                          end="eq-start", require_touch=True,
                                          weight="exclude-start"), 8)
        assert data["coeffs"] == [str(c) for c in want.coeffs]

    def test_bad_start_token(self):
        assert run("walks", "family", "--n", "3", "--start", "sideways",
                   "--tmax", "4").exit_code == 2

    def test_negative_height(self):
        assert run("walks", "family", "--n", "3", "--start", "-2",
                   "--tmax", "4").exit_code == 2


class TestVerify:
    def test_finite_report_line(self):
        r = run("verify", "--type", "B", "--rank", "2")
        assert r.exit_code == 0
        lines = r.output.splitlines()
        assert lines[0] == "card=5 maj=1+2q+2q^2 length=1+2t+2t^3 all match"
        assert any(l.startswith("note:") and "alternating" in l for l in lines)

    def test_affine_report(self):
        r = run("verify", "--type", "affA", "--rank", "4", "--max-length", "24")
        assert r.exit_code == 0
        lines = r.output.splitlines()
        assert lines[0] == "remainder=0"
        assert lines[1].startswith("period=4 ")
        assert "all match" in lines

    def test_json_shape(self):
        r = run("verify", "--type", "D", "--rank", "3", "--format", "json")
        data = json.loads(r.output)
        assert data["ok"] is True
        assert set(data["checks"]) >= {"card", "maj", "length"}

    def test_mismatch_exits_one(self, monkeypatch):
        bad = ValidationReport(group="B:2", ok=False, checks=["card"],
                               failures=["card: expected 5 got 6"], notes=[],
                               card=6, maj=None, length=None,
                               remainder=None, period=None)
        monkeypatch.setattr("fcheaps.cli.cross_validate", lambda *a, **k: bad)
        r = run("verify", "--type", "B", "--rank", "2")
        assert r.exit_code == 1
        assert "MISMATCH" in r.output
        assert "failure: card: expected 5 got 6" in r.output

    def test_short_window_rejected(self):
        assert run("verify", "--type", "affA", "--rank", "4",
                   "--max-length", "2").exit_code == 2

    def test_threads_do_not_change_bytes(self):
        a = run("verify", "--type", "B", "--rank", "3")
        b = run("verify", "--type", "B", "--rank", "3", "--threads", "8")
        assert a.output == b.output and a.exit_code == b.exit_code == 0


class TestCells:
    def test_text_report(self):
        r = run("cells", "--rank", "3", "--max-length", "6")
        lines = r.output.splitlines()
        assert lines[0] == "rank 3 max_length 6 fibers 4"
        assert all(l.endswith(": ok") for l in lines if l.startswith("audit "))
        assert r.exit_code == 0

    def test_json_audits(self):
        r = run("cells", "--rank", "4", "--max-length", "6", "--format", "json")
        data = json.loads(r.output)
        assert data["fiber_count"] == len(data["fibers"])
        assert all(data["audits"].values())

    def test_csv(self):
        r = run("cells", "--rank", "3", "--max-length", "4", "--format", "csv")
        lines = r.output.splitlines()
        assert lines[0] == "representative,members,involution"
        assert "e," in lines[1]

    def test_rank_floor(self):
        assert run("cells", "--rank", "1", "--max-length", "4").exit_code == 2


class TestUsageErrors:
    def test_unknown_family(self):
        r = run("enumerate", "--type", "E", "--rank", "6", "--max-length", "4")
        assert r.exit_code == 2

    def test_unknown_flag(self):
        assert run("genfunc", "card", "--type", "A", "--rank", "4",
                   "--frobnicate").exit_code == 2

    def test_unknown_subcommand(self):
        assert run("frobnicate").exit_code == 2

    def test_zero_threads(self):
        assert run("verify", "--type", "B", "--rank", "2",
                   "--threads", "0").exit_code == 2
