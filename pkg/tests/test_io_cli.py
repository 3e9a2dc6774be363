import json
import statistics
import time
from fractions import Fraction as F

import pytest

from encdepth import Instance, enclosing_depth_bruteforce, enclosing_depth_planar, generate_instance
from encdepth.cli import bench_rows, main, verify_instances
from encdepth.io import (
    ParseError,
    ResultReport,
    dumps_instance,
    load_instance,
    loads_instance,
    save_instance,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_csv_with_query_flag(tmp_path):
    path = tmp_path / "tri.csv"
    path.write_text("1,0\n-1,1\n-1,-1\n")
    inst = load_instance(path, query="0,0")
    assert inst.points == ((1, 0), (-1, 1), (-1, -1))
    assert inst.query == (0, 0) and inst.dimension == 2


def test_csv_first_row_is_query():
    inst = loads_instance("# query first\n0,0\n1,0.25\n-1,1/3\n", "csv")
    assert inst.query == (0, 0)
    assert inst.points[0] == (1, F(1, 4))
    assert inst.points[1] == (-1, F(1, 3))


def test_json_instance(tmp_path):
    path = tmp_path / "s.json"
    path.write_text('{"d":3,"query":[0,0,0],"points":[[3,0,0],[0,3,0],[0,0,3],[-2,-2,-2]]}')
    inst = load_instance(path)
    assert inst.dimension == 3 and inst.n == 4
    inst = loads_instance('{"query":[0.5,"1/3"],"points":[[1.25,2]]}')
    assert inst.query == (F(1, 2), F(1, 3))
    assert inst.points == ((F(5, 4), F(2)),)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        loads_instance("0,0\n1,2\n3,abc\n", "csv")
    assert (exc.value.line, exc.value.column) == (3, 3)
    with pytest.raises(ParseError) as exc:
        loads_instance("0,0\n1,2,3\n", "csv")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        loads_instance('{"query": [0, 0],\n "points": [[1, 2]')
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        loads_instance('{"query": [0, 0], "points": [[1, true]]}')
    with pytest.raises(ParseError):
        loads_instance('{"d": 3, "query": [0, 0], "points": []}')
    with pytest.raises(ParseError):
        loads_instance("", "csv")


def test_instance_round_trip(tmp_path):
    inst = generate_instance(15, 2, 4, "gaussian")
    for name in ("a.json", "a.csv"):
        save_instance(inst, tmp_path / name)
        assert load_instance(tmp_path / name) == inst


def test_report_round_trip():
    res = enclosing_depth_planar(generate_instance(12, 2, 1, "clusters:4"))
    rep = ResultReport.from_result(res)
    back = ResultReport.from_json(rep.to_json())
    assert back == rep
    assert back.witness["kind"] == "planar" and back.depth == 4


def test_gen_is_deterministic(capsys, tmp_path):
    _, a, _ = run(capsys, "gen", "--n", "30", "--seed", "7")
    _, b, _ = run(capsys, "gen", "--n", "30", "--seed", "7")
    assert a == b
    assert dumps_instance(generate_instance(30, 2, 7)) == a
    code, _, _ = run(capsys, "gen", "--shape", "clusters:3", "--seed", "7", "--out", str(tmp_path / "c.json"))
    assert code == 0
    inst = load_instance(tmp_path / "c.json")
    assert inst.n == 9 and enclosing_depth_bruteforce(inst) == 3


def test_generator_validates():
    from encdepth.exact_geom import validate_instance

    validate_instance(generate_instance(100, 2, 1, "annulus"), "planar")
    with pytest.raises(ValueError):
        generate_instance(10, 2, 1, "clusters:4")
    with pytest.raises(ValueError):
        generate_instance(10, 2, 1, "spiral")


def test_depth_command(capsys, tmp_path):
    path = tmp_path / "tri.csv"
    path.write_text("1,0\n-1,1\n-1,-1\n")
    code, out, _ = run(capsys, "depth", "--in", str(path), "--query", "0,0")
    rep = json.loads(out)
    assert code == 0 and rep["depth"] == 1 and rep["witness"]["kind"] == "planar"
    code, out, _ = run(capsys, "depth", "--in", str(path), "--query", "0,0", "--table")
    assert code == 0 and out.startswith("depth      1")
    spx = tmp_path / "s.json"
    spx.write_text('{"d":3,"query":[0,0,0],"points":[[3,0,0],[0,3,0],[0,0,3],[-2,-2,-2]]}')
    code, out, _ = run(capsys, "depth", "--in", str(spx))
    rep = json.loads(out)
    assert code == 0 and rep["depth"] == 1 and rep["witness"]["kind"] == "general"
    code, out, _ = run(capsys, "depth", "--in", str(spx), "--algorithm", "oracle")
    assert code == 0 and json.loads(out)["depth"] == 1


def test_exit_codes(capsys, tmp_path):
    big = tmp_path / "big.json"
    save_instance(generate_instance(20, 2, 0, "annulus"), big)
    assert run(capsys, "depth", "--in", str(big), "--algorithm", "oracle")[0] == 4
    bad = tmp_path / "bad.csv"
    bad.write_text("0,0\n1,x\n")
    assert run(capsys, "depth", "--in", str(bad))[0] == 3
    assert run(capsys, "depth", "--in", str(tmp_path / "missing.csv"))[0] == 3
    dup = tmp_path / "dup.csv"
    dup.write_text("0,0\n1,2\n3,-1\n1,2\n")
    code, _, err = run(capsys, "depth", "--in", str(dup))
    assert code == 2 and "indices [0, 2]" in err
    spx = tmp_path / "s.json"
    spx.write_text('{"d":3,"query":[0,0,0],"points":[[3,0,0],[0,3,0],[0,0,3],[-2,-2,-2]]}')
    assert run(capsys, "depth", "--in", str(spx), "--algorithm", "planar")[0] == 4


def test_verify(capsys):
    summary, failure = verify_instances(12, 2, 0, 42)
    assert failure is None and summary["agree"] == 0
    code, out, _ = run(capsys, "verify", "--trials", "0")
    assert code == 0 and json.loads(out)["failure"] is None
    code, out, _ = run(capsys, "verify", "--n-max", "8", "--d", "3", "--trials", "10")
    assert code == 0 and json.loads(out)["summary"]["agree"] == 10
    assert run(capsys, "verify", "--n-max", "30")[0] == 4


def test_verify_reports_replayable_failures(monkeypatch):
    import encdepth.cli as cli

    real = cli.enclosing_depth_planar

    def broken(inst):
        res = real(inst)
        res.depth += 1
        return res

    monkeypatch.setattr(cli, "enclosing_depth_planar", broken)
    summary, failure = verify_instances(9, 2, 5, 1)
    assert failure is not None and "depth mismatch" in failure["problems"]
    replay = loads_instance(json.dumps(failure["instance"]))
    assert enclosing_depth_bruteforce(replay) == failure["values"]["oracle"]


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "")
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(capsys, "bench", "--sizes", "300,3000", "--table")
    assert code == 0 and len(out.splitlines()) == 3
    rows = bench_rows([1000], 1)
    assert rows[0]["within_bound"]


@pytest.mark.slow
def test_doubling_grows_subquadratically():
    ladder = [12_500, 25_000, 50_000, 100_000]
    insts = [generate_instance(n, 2, 1, "annulus") for n in ladder]

    def best_time(inst):
        out = []
        for _ in range(3):
            t = time.perf_counter()
            enclosing_depth_planar(inst)
            out.append(time.perf_counter() - t)
        return min(out)

    times = [best_time(i) for i in insts]
    ratios = [b / a for a, b in zip(times, times[1:])]
    assert statistics.median(ratios) < 3
