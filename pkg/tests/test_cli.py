import json
import subprocess
import sys


from fewprimes.cli import main, read_set_file


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_geometric(tmp_path, capsys):
    path = tmp_path / "g.json"
    assert run(capsys, "gen", "geometric", "q=2", "n=10", "-o", path)[0] == 0
    A, meta = read_set_file(path)
    assert len(A) == 10 and meta["family"]["kind"] == "geometric"
    data = json.loads(path.read_text())
    assert data["elements"][0] == {"sign": 1, "factors": {"2": 1}}


def test_gen_records_seed_and_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(capsys, "gen", "random_few_prime", "pool=10", "k=2", "size=40", "--seed", 9, "-o", p)
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["seed"] == 9


def test_bare_list_and_zero(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text('[{"int": "0"}, {"int": "1"}, {"rat": "1/2"}]')
    code, out, _ = run(capsys, "stats", path, "--m", "2")
    assert code == 0
    header, row = out.strip().splitlines()
    cols = dict(zip(header.split(","), row.split(",")))
    assert cols["n"] == "3" and cols["|A+A|"] == "5" and cols["|AA|"] == ""


def test_stats_json(tmp_path, capsys):
    path = tmp_path / "bw.json"
    run(capsys, "gen", "balog_wooley", "M=16", "N=8", "-o", path)
    code, out, _ = run(capsys, "stats", path, "--format", "json")
    row = json.loads(out)
    assert code == 0 and row["|AA|"] <= 16 * 16 * 15


def test_cover_random_few_prime(tmp_path, capsys):
    path = tmp_path / "r.json"
    run(capsys, "gen", "random_few_prime", "pool=10", "k=2", "size=60", "--seed", 3, "-o", path)
    out_path = tmp_path / "cert.json"
    code, _, err = run(capsys, "cover", path, "--k", 2, "--l", 2, "--variant", 1, "-o", out_path)
    assert code == 0, err
    cert = json.loads(out_path.read_text())
    assert cert["seed"] == 3 and all(c["holds"] for c in cert["checks"] if c["mode"] != "report")


def test_cover_hypothesis_error_exit_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('[{"int": "30"}]')
    code, _, err = run(capsys, "cover", path, "--k", 1, "--l", 1)
    assert code == 3 and json.loads(err)["error"] == "HypothesisViolated"


def test_sunit_csv(capsys):
    code, out, err = run(capsys, "sunit", "--coeffs", "1,-1", "--generators", "2", "--H", "1,2,3,4")
    assert code == 0
    assert out == "H,nondegenerate_count,degenerate_count\n1,3,0\n2,3,0\n3,3,0\n4,3,0\n"
    assert "stable=true" in err


def test_verify_shkredov_seed_7(capsys):
    code, out, _ = run(capsys, "verify", "shkredov", "--seed", 7, "--trials", 20, "--max-size", 12)
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines and all(d["holds"] for d in lines if d["mode"] != "report")
    assert all(d["seed"] == 7 for d in lines)


def test_verify_balog_wooley_csv(capsys):
    code, out, _ = run(capsys, "verify", "balog-wooley", "--grid", "8x4", "--format", "csv")
    assert code == 0 and out.startswith("name,holds,mode,lhs,relation,rhs,params\n")


def test_budget_exit_2(capsys):
    code, _, err = run(capsys, "verify", "holder", "--trials", 3, "--max-counter", 1)
    assert code == 2 and json.loads(err)["status"] == "budget-exceeded"


def test_input_errors_exit_3(tmp_path, capsys):
    assert run(capsys, "stats", tmp_path / "missing.json")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"elements": 5}')
    assert run(capsys, "stats", bad)[0] == 3
    assert run(capsys, "gen", "geometric", "q=1", "n=3")[0] == 3
    assert run(capsys, "sunit", "--coeffs", "1,0")[0] == 3


def test_check_failure_exit_1(monkeypatch, tmp_path, capsys):
    from fewprimes import cli
    from fewprimes.reports import exact_check

    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [exact_check("forced", 1, 2, ">=")])
    code, _, err = run(capsys, "verify", "holder")
    assert code == 1 and json.loads(err)["failed"][0]["name"] == "forced"


def test_sweep_small_grid_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--sizes", "10,30", "--bw", "8x4", "--seed", 5]
    run(capsys, *args, "-o", a)
    run(capsys, *args, "--workers", 2, "-o", b)
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 6 and "log|A+A|/log|A|" in lines[0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fewprimes", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for cmd in ("gen", "stats", "cover", "sunit", "verify", "sweep"):
        assert cmd in proc.stdout
