import json

import pytest

from qderiv import cli, verify
from qderiv.render import table_from_payload
from qderiv.series import DividedSeries
from qderiv.tables import a_table


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTableCommand:
    def test_json_matches_table(self, capsys):
        code, out, _ = run_cli(capsys, "table", "A", "--n", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        table = table_from_payload(payload)
        assert table.family == "A"
        rows = {(n, k, a, b): poly for n, k, a, b, poly in table.rows}
        assert rows == dict(a_table(3).entries)

    def test_text_and_latex_render(self, capsys):
        code, out, _ = run_cli(capsys, "table", "Ac", "--n", "2", "--format", "text")
        assert code == 0 and "(0 1 1 0)" in out and "1 + q" in out
        code, out, _ = run_cli(capsys, "table", "a_small", "--n", "4", "--format", "latex")
        assert code == 0 and out.startswith("\\begin{tabular}")

    def test_fib_triangle(self, capsys):
        code, out, _ = run_cli(capsys, "table", "fib", "--n", "6", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,m,alpha,beta"
        # row-sum entries carry the Fibonacci numbers
        sums = [line.split(",") for line in lines[1:]]
        fib_alpha = [int(r[2]) for r in sums if int(r[1]) == int(r[0]) + 3]
        assert fib_alpha == [1, 2, 3, 5, 8, 13, 21]

    def test_unknown_family_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(capsys, "table", "nope", "--n", "3")
        assert exc.value.code == 2


class TestOracleCommand:
    def test_matches_table_command(self, capsys):
        code, table_out, _ = run_cli(capsys, "table", "A", "--n", "3", "--format", "csv")
        assert code == 0
        code, oracle_out, _ = run_cli(capsys, "oracle", "A", "--n", "3", "--format", "csv")
        assert code == 0
        assert table_out == oracle_out

    def test_bound_guard_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "oracle", "A", "--n", "99")
        assert code == 2
        assert "bound" in err

    def test_bound_override(self, capsys):
        code, out, _ = run_cli(
            capsys, "oracle", "Ac", "--n", "2", "--format", "csv",
            "--bound-bruteforce", "2",
        )
        assert code == 0 and "q" in out


class TestVerifyCommand:
    def test_single_identity(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "1.9", "--n", "2", "--order", "8"
        )
        assert code == 0
        reports = [json.loads(line) for line in out.strip().splitlines()]
        assert [r["id"] for r in reports] == ["1.9"] * 3
        assert all(r["status"] == "pass" for r in reports)

    def test_multiple_ids_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "table1", "2.3", "--format", "text", "--order", "6"
        )
        assert code == 0
        assert out.startswith("PASS table1")

    def test_unknown_id_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "bogus.id")
        assert code == 2 and "unknown check id" in err

    def test_failure_exit_1(self, capsys, monkeypatch):
        fixtures = dict(verify.DEFAULT_FIXTURES)
        table = dict(fixtures["table1.a"])
        table[(4, 3)] = table[(4, 3)] + 1
        fixtures["table1.a"] = table
        monkeypatch.setattr(verify, "DEFAULT_FIXTURES", fixtures)
        code, out, _ = run_cli(capsys, "verify", "table1")
        assert code == 1
        report = json.loads(out.strip().splitlines()[0])
        assert report["status"] == "fail"
        assert report["first_discrepancy"]["index"] == ["a", 4, 3]

    def test_jobs_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "table1", "table2", "--jobs", "2"
        )
        assert code == 0
        ids = [json.loads(line)["id"] for line in out.strip().splitlines()]
        assert ids == ["table1", "table2"]


class TestSeriesCommand:
    def test_json_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "series", "tan_q", "--order", "5", "--format", "json")
        assert code == 0
        series = DividedSeries.from_json(json.loads(out))
        assert series.order == 5 and str(series.coefficient(3)) == "q + q^2"

    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "series", "classical_tan", "--order", "5")
        assert code == 0
        assert out.splitlines()[5] == "5: 16"


class TestExportAndCache:
    def test_export_writes_file(self, capsys, tmp_path):
        out_path = tmp_path / "a.json"
        code, _, err = run_cli(
            capsys, "export", "A", "--n", "3", "--out", str(out_path)
        )
        assert code == 0 and "wrote" in err
        payload = json.loads(out_path.read_text())
        assert payload["family"] == "A"

    def test_cache_roundtrip_and_corruption(self, capsys, tmp_path):
        cache = tmp_path / "cache"
        code, first, _ = run_cli(
            capsys, "table", "B", "--n", "3", "--format", "json",
            "--cache-dir", str(cache),
        )
        assert code == 0
        cache_file = cache / "B_n3.json"
        assert cache_file.exists()
        code, second, _ = run_cli(
            capsys, "table", "B", "--n", "3", "--format", "json",
            "--cache-dir", str(cache),
        )
        assert second == first
        # corrupt the payload: the content hash no longer matches, so the
        # table is recomputed and rewritten
        wrapper = json.loads(cache_file.read_text())
        wrapper["payload"]["rows"][0][4]["coeffs"] = ["7"]
        cache_file.write_text(json.dumps(wrapper))
        code, third, err = run_cli(
            capsys, "table", "B", "--n", "3", "--format", "json",
            "--cache-dir", str(cache),
        )
        assert code == 0 and third == first
        assert "failed validation" in err

    def test_cache_env_var(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "envcache"))
        code, _, _ = run_cli(capsys, "table", "Ac", "--n", "2", "--format", "json")
        assert code == 0
        assert (tmp_path / "envcache" / "Ac_n2.json").exists()

    def test_deterministic_output(self, capsys):
        _, one, _ = run_cli(capsys, "table", "tq", "--n", "5", "--format", "json")
        _, two, _ = run_cli(capsys, "table", "tq", "--n", "5", "--format", "json")
        assert one == two
