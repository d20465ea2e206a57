import json


from twinhanoi import cli, graphs, verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_sds_example(self, capsys):
        code, out, _ = run(capsys, "solve", "sds", "--n", "2")
        assert code == 0
        assert out == "bcacba\nlength 6\n"

    def test_tts(self, capsys):
        code, out, _ = run(capsys, "solve", "tts", "--n", "3")
        assert code == 0
        assert out.splitlines() == ["acacbcbcaca", "length 11"]

    def test_tts_alt_json(self, capsys):
        code, out, _ = run(capsys, "solve", "tts", "--n", "3", "--alt", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["moves"] == "cacababacac"
        assert payload["length"] == 11

    def test_classic_corners(self, capsys):
        code, out, _ = run(capsys, "solve", "classic", "--n", "2", "--corners", "02")
        assert code == 0
        assert out.splitlines()[0] == "cba"

    def test_classic_endpoints(self, capsys):
        code, out, _ = run(capsys, "solve", "classic", "--from", "20", "--to", "01")
        assert code == 0
        assert out.splitlines() == ["ba", "length 2"]

    def test_classic_identity_prints_unit(self, capsys):
        code, out, _ = run(capsys, "solve", "classic", "--from", "12", "--to", "12")
        assert code == 0
        assert out.splitlines() == ["1", "length 0"]

    def test_applied_order_flag(self, capsys):
        _, display_out, _ = run(capsys, "solve", "sds", "--n", "2")
        _, applied_out, _ = run(capsys, "solve", "sds", "--n", "2", "--order", "applied")
        assert applied_out.splitlines()[0] == display_out.splitlines()[0][::-1]

    def test_twin_basic(self, capsys):
        code, out, _ = run(capsys, "solve", "twin", "--from", "0,2", "--to", "2,0")
        assert code == 0
        assert out.splitlines() == ["b", "length 1"]

    def test_twin_plan(self, capsys):
        code, out, _ = run(capsys, "solve", "twin", "--from", "000,100", "--to", "100,200", "--plan")
        assert code == 0
        assert "total" in out and "length" in out

    def test_twin_plan_json(self, capsys):
        code, out, _ = run(
            capsys, "solve", "twin", "--from", "000,100", "--to", "100,200", "--plan", "--json"
        )
        payload = json.loads(out)
        assert payload["plan"]["bound_ok"] is True

    def test_twin_incompatible_exits_3(self, capsys):
        code, _, err = run(capsys, "solve", "twin", "--from", "00,01", "--to", "01,20")
        assert code == 3
        assert "prefix" in err

    def test_usage_errors(self, capsys):
        assert run(capsys, "solve", "classic")[0] == 2
        assert run(capsys, "solve", "classic", "--from", "01x", "--to", "000")[0] == 2
        assert run(capsys, "solve", "classic", "--from", "01", "--to", "000")[0] == 2
        assert run(capsys, "solve", "tts")[0] == 2
        assert run(capsys, "nonsense")[0] == 2

    def test_zero_disks_is_usage_error(self, capsys):
        assert run(capsys, "solve", "sds", "--n", "0")[0] == 2
        assert run(capsys, "solve", "twin", "--from", ",", "--to", ",")[0] == 2


class TestDistance:
    def test_coupled_example(self, capsys):
        code, out, _ = run(capsys, "distance", "--from", "00,22", "--to", "22,00")
        assert code == 0
        assert out == "5\n"

    def test_single(self, capsys):
        code, out, _ = run(capsys, "distance", "--from", "000", "--to", "222")
        assert out == "7\n" and code == 0

    def test_json(self, capsys):
        code, out, _ = run(capsys, "distance", "--from", "000,100", "--to", "100,200", "--json")
        assert json.loads(out) == {
            "from": "000,100", "to": "100,200", "kind": "coupled", "distance": 16,
        }

    def test_incompatible_exits_3(self, capsys):
        code, _, _ = run(capsys, "distance", "--from", "00,01", "--to", "01,20")
        assert code == 3

    def test_coupled_flag_without_comma_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "distance", "--coupled", "--from", "00", "--to", "22")
        assert code == 2


class TestVerify:
    ARGS = ("verify", "--suite", "structure", "--max-n", "2", "--samples", "50")

    def test_text_output(self, capsys, monkeypatch):
        monkeypatch.setitem(
            verify.SUITES, "structure", _small_structure
        )
        code, out, _ = run(capsys, *self.ARGS)
        assert code == 0
        assert "checks passed" in out
        assert "PASS" in out

    def test_json_output_without_timings(self, capsys, monkeypatch):
        monkeypatch.setitem(verify.SUITES, "structure", _small_structure)
        code, out, _ = run(capsys, *self.ARGS, "--json")
        payload = json.loads(out)
        assert payload["summary"]["ok"] is True
        assert all("ms" not in c for c in payload["checks"])

    def test_json_with_timings(self, capsys, monkeypatch):
        monkeypatch.setitem(verify.SUITES, "structure", _small_structure)
        code, out, _ = run(capsys, *self.ARGS, "--json", "--timings")
        payload = json.loads(out)
        assert all("ms" in c for c in payload["checks"])

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        def broken(**kwargs):
            rec = verify._Recorder()
            rec.check("broken/check", 1, 2)
            return rec.report("structure", {})

        monkeypatch.setitem(verify.SUITES, "structure", broken)
        code, out, _ = run(capsys, "verify", "--suite", "structure")
        assert code == 1
        assert "FAIL" in out

    def test_report_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setitem(verify.SUITES, "structure", _small_structure)
        code, _, _ = run(capsys, *self.ARGS, "--report-dir", str(tmp_path))
        assert code == 0
        report = json.loads((tmp_path / "structure.json").read_text())
        assert all("ms" in c for c in report["checks"])  # files always carry timings
        csv_text = (tmp_path / "structure.csv").read_text()
        assert csv_text.splitlines()[0] == "id,status,expected,observed,ms"
        assert (tmp_path / "structure.png").stat().st_size > 0


def _small_structure(**overrides):
    params = dict(n_max=1, lcp_trials=50, parity_trials=50, orbit_n_max=2,
                  coset_pairs=50, isometry_samples=5)
    params.update({k: v for k, v in overrides.items() if k in ("seed",)})
    return verify.verify_structure(**params)


class TestGraph:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "1", "--kind", "single")
        assert code == 0
        assert out.startswith("graph hanoi_1 {")

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g.dot"
        code, out, _ = run(capsys, "graph", "--n", "1", "--kind", "coupled",
                           "--component", "0", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("graph coupled_1_prefix0 {")

    def test_capacity_exit_4(self, capsys):
        code, _, err = run(capsys, "graph", "--n", "5", "--kind", "coupled")
        assert code == 4
        assert "budget" in err


class TestTables:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "tables", "--max-n", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["n", "switch", "shift", "cycles", "pair-bound", "near-diag", "components"]
        assert lines[1].split() == ["1", "1", "2", "0", "22/3", "2", "6;3"]
        assert lines[3].split() == ["3", "11", "16", "2", "88/3", "9", "486;162;54;27"]

    def test_out_dir(self, capsys, tmp_path):
        code, _, _ = run(capsys, "tables", "--max-n", "4", "--out-dir", str(tmp_path))
        assert code == 0
        table = (tmp_path / "tables.csv").read_text().splitlines()
        assert table[0] == "n,switch,shift,cycles,components,pair_bound,near_diag_diam"
        assert len(table) == 5
        assert (tmp_path / "growth.png").stat().st_size > 0


class TestCache:
    def test_info_unset(self, capsys, monkeypatch):
        monkeypatch.delenv(graphs.CACHE_ENV, raising=False)
        code, out, _ = run(capsys, "cache", "info")
        assert code == 0
        assert "unset" in out

    def test_verify_populates_cache(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(graphs.CACHE_ENV, str(tmp_path))
        graphs.cached_bfs.cache_clear()
        code, _, _ = run(capsys, "verify", "--suite", "classic", "--max-n", "2")
        assert code == 0
        assert list(tmp_path.glob("*.thdc"))
        code, out, _ = run(capsys, "cache", "info")
        assert code == 0 and "single" in out
        code, out, _ = run(capsys, "cache", "clear")
        assert code == 0 and "removed" in out
        assert not list(tmp_path.glob("*.thdc"))
        graphs.cached_bfs.cache_clear()
