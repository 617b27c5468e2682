import argparse
import json
import math

import pytest

from hzn.cli import dumps_canonical, format_complex, main, parse_complex

LOG2 = math.log(2.0)


class TestParseComplex:
    @pytest.mark.parametrize("text,want", [
        ("1", 1 + 0j),
        ("-0.5", -0.5 + 0j),
        ("0.5+0.3i", 0.5 + 0.3j),
        ("0.5-0.3i", 0.5 - 0.3j),
        ("-1.5-2i", -1.5 - 2j),
        ("2i", 2j),
        ("-i", -1j),
        ("i", 1j),
        ("1e-3+2i", 0.001 + 2j),
    ])
    def test_valid(self, text, want):
        assert parse_complex(text) == want

    @pytest.mark.parametrize("text", ["", "abc", "1+2", "1++2i"])
    def test_invalid(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_complex(text)

    def test_round_trip_format(self):
        z = -0.12345678901234567 + 2.5e-3j
        assert parse_complex(format_complex(z)) == z


class TestDumpsCanonical:
    def test_round_trip(self):
        obj = {"a": 1.0 / 3.0, "b": [1, 2.5e-17, None], "c": {"d": True}}
        text = dumps_canonical(obj)
        assert json.loads(text) == obj

    def test_deterministic(self):
        obj = {"x": 0.1 + 0.2, "y": -1e300}
        assert dumps_canonical(obj) == dumps_canonical(obj)


class TestEval:
    def test_j_at_1(self, capsys):
        rc = main(["eval", "--function", "J", "--z", "1", "--method", "quad",
                   "--format", "json"])
        rec = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert abs(rec["value"]["re"] - 0.2402265069591007) <= 1e-14
        assert rec["value"]["im"] == 0
        assert rec["method"] == "quadrature"
        assert rec["evaluations"] >= 1

    def test_closed_fk_row(self, capsys):
        rc = main(["eval", "--function", "Fk", "--z", "1", "--u", "1", "--v", "-1",
                   "--k", "2", "--method", "closed", "--format", "json"])
        rec = json.loads(capsys.readouterr().out)
        assert rc == 0
        # -2 Li3(1/2), digits fixed by this implementation's polylogarithm
        assert abs(rec["value"]["re"] - (-1.0744263872160806)) <= 1e-13

    def test_all_methods_consistent(self, capsys):
        rc = main(["eval", "--function", "F3", "--z", "1", "--u", "0.4", "--v", "0.2",
                   "--w", "-0.5", "--method", "all", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert rc == 0
        records = [r for r in payload if "value" in r]
        checks = [r for r in payload if r.get("type") == "disagreement"]
        assert {r["method"] for r in records} == {"quadrature", "series", "closed_form"}
        assert checks and all(c["consistent"] for c in checks)

    def test_json_round_trip(self, capsys):
        argv = ["eval", "--function", "J", "--z", "2.5", "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert first == second
        json.loads(first)

    def test_math_failure_exit_code(self, capsys):
        rc = main(["eval", "--function", "F", "--z", "1", "--u", "2", "--v", "-1",
                   "--method", "quad"])
        assert rc == 1  # u = 2 violates the parameter domain

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--function", "F", "--z", "junk"])
        assert exc.value.code == 2

    def test_p_q_conflict(self, capsys):
        rc = main(["eval", "--function", "F", "--z", "3", "--p", "1", "--q", "2"])
        assert rc == 2

    def test_csv_output(self, capsys):
        rc = main(["eval", "--function", "J", "--z", "1", "--method", "quad",
                   "--format", "csv"])
        out = capsys.readouterr().out.splitlines()
        assert rc == 0
        assert out[0].startswith("schema_version,function,method,z_re")
        assert len(out) == 2


class TestVerify:
    def test_single_pass(self, capsys):
        rc = main(["verify", "--identity", "rogers", "--samples", "10", "--seed", "3"])
        out = capsys.readouterr().out
        assert rc == 0 and out.startswith("PASS rogers")

    def test_informational_exits_zero(self, capsys):
        rc = main(["verify", "--identity", "j-two-term-log2z", "--samples", "5"])
        out = capsys.readouterr().out
        assert rc == 0 and out.startswith("INFO")

    def test_unknown_identity(self, capsys):
        rc = main(["verify", "--identity", "bogus"])
        assert rc == 2

    def test_forced_failure_exits_one(self, capsys):
        rc = main(["verify", "--identity", "rogers", "--samples", "5",
                   "--tol", "1e-30"])
        assert rc == 1

    def test_json_deterministic(self, capsys):
        argv = ["verify", "--identity", "table1", "--samples", "8", "--seed", "42",
                "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert first == second
        recs = json.loads(first)
        assert recs[0]["status"] == "pass"


class TestTable:
    def test_exit_zero_and_eight_rows(self, capsys):
        rc = main(["table", "--format", "json"])
        rows = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert len(rows) == 8
        for row in rows:
            assert row["residual"] <= row["tol"]

    def test_text_format(self, capsys):
        rc = main(["table"])
        out = capsys.readouterr().out
        assert rc == 0 and "Li2(-1/3)" in out


class TestBench:
    def test_counts_deterministic(self, capsys):
        argv = ["bench", "--function", "Fk", "--samples", "4", "--seed", "5",
                "--format", "json"]
        main(argv)
        first = json.loads(capsys.readouterr().out)
        main(argv)
        second = json.loads(capsys.readouterr().out)
        c1 = {r["method"]: r["evaluations_total"] for r in first}
        c2 = {r["method"]: r["evaluations_total"] for r in second}
        assert c1 == c2
        assert set(c1) == {"quad", "series", "closed"}

    def test_series_count_grows_as_tol_shrinks(self, capsys):
        def count(tol):
            main(["bench", "--function", "Fk", "--samples", "3", "--seed", "5",
                  "--tol", tol, "--format", "json"])
            recs = json.loads(capsys.readouterr().out)
            return next(r["evaluations_total"] for r in recs if r["method"] == "series")

        assert count("1e-12") > count("1e-6")

    def test_bad_samples(self, capsys):
        rc = main(["bench", "--function", "Fk", "--samples", "0"])
        assert rc == 2


class TestListCommand:
    def test_lists_registry(self, capsys):
        rc = main(["list"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "table1" in out and "j-two-term-log2const" in out

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "names.json"
        rc = main(["list", "--format", "json", "--out", str(target)])
        assert rc == 0
        names = {r["name"] for r in json.loads(target.read_text())}
        assert "rogers" in names
