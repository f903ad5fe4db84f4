import json
import subprocess
import sys

import pytest

from crossunion.cli import BOUNDS_HEADER, main
from crossunion.family import SetFamily, level


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_pair(tmp_path, a, b, name="pair.json"):
    path = tmp_path / name
    path.write_text(json.dumps([a.to_json_obj(), b.to_json_obj()]))
    return str(path)


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "thm1.5", "--n", "6", "--s", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("theorem_id,n,s,formula_value")
    assert lines[1] == "thm1.5,6,3,22,22,2,2,confirmed"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "thm1.6", "--n", "4", "--s", "2", "--json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["status"] == "confirmed" and report["oracle_value"] == 12
    assert report["witnesses_found"] == 1


def test_verify_skipped_scale_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "cor1.3i", "--n", "7", "--s", "3")
    assert code == 0 and "skipped-scale" in out


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--n-max", "4")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert rows and not any(r.endswith(",mismatch") for r in rows)


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import crossunion.verify as verify

    monkeypatch.setattr(verify, "katona_f", lambda n, s: -1)
    code, out, _ = run(capsys, "verify", "katona", "--n", "4", "--s", "2")
    assert code == 1 and "mismatch" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "thm9.9", "--n", "4", "--s", "2"],
        ["verify", "thm1.5", "--n", "4"],
        ["verify", "thm1.5", "--s", "2"],
        ["verify"],
        ["verify", "thm1.5", "--n", "4", "--s", "9"],
        ["search", "pair", "--n", "7", "--s", "2"],
        ["search", "pair", "--n", "4"],
        ["bounds", "--n-max", "41"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm1.5", "--n", "four"])
    assert exc.value.code == 2


def test_search_outputs_result(capsys):
    code, out, _ = run(capsys, "search", "triple", "--n", "6", "--s", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["max"] == 22 and len(obj["witnesses"]) == 2
    assert set(obj) == {"max", "witnesses", "nodes", "ms"}
    for w in obj["witnesses"]:
        for f in w:
            assert SetFamily.from_json_obj(f).to_json_obj() == f


def test_search_kinds(capsys):
    for kind, extra, value in [
        ("pair", ["--s", "2", "--forbid-empty"], 10),
        ("general", ["--s", "2"], 17),
        ("milner", ["--s", "2"], 5),
        ("katona", ["--s", "3"], 10),
        ("wong-tay", [], 20),
        ("min-pair", ["--s", "2"], 5),
    ]:
        code, out, _ = run(capsys, "search", kind, "--n", "5", *extra, "--threads", "1")
        assert code == 0 and json.loads(out)["max"] == value, kind


def test_compress_identity_and_trace(capsys, tmp_path):
    src = write_pair(tmp_path, level(6, 1), level(6, 2))
    trace = tmp_path / "trace.json"
    out_path = tmp_path / "out.json"
    code, _, _ = run(capsys, "compress", src, "--s", "3", "--trace", str(trace), "-o", str(out_path))
    assert code == 0
    assert json.loads(out_path.read_text()) == json.loads((tmp_path / "pair.json").read_text())
    assert json.loads(trace.read_text()) == []


def test_compress_empty_sets(capsys, tmp_path):
    e = SetFamily(3, (0,))
    src = write_pair(tmp_path, e, e)
    code, out, _ = run(capsys, "compress", src, "--s", "1")
    assert code == 0
    assert json.loads(out) == [e.to_json_obj(), e.to_json_obj()]


def test_compress_runs_steps(capsys, tmp_path):
    a = SetFamily.from_sets(4, [[1, 2, 3]])
    src = write_pair(tmp_path, a, a)
    trace = tmp_path / "trace.json"
    code, out, _ = run(capsys, "compress", src, "--s", "3", "--trace", str(trace))
    assert code == 0
    ra, rb = (SetFamily.from_json_obj(o) for o in json.loads(out))
    assert ra.top() + rb.top() <= 3 and len(ra) + len(rb) > 2
    steps = json.loads(trace.read_text())
    assert steps and steps[-1]["sizes_after"] == [len(ra), len(rb)]


@pytest.mark.parametrize(
    "doc,s",
    [
        ('[{"n": 4, "sets": [[1,2]]}, {"n": 4, "sets": [[3,4]]}]', 3),
        ('[{"n": 4, "sets": [[1]]}]', 2),
        ('[{"n": 4, "sets": [[1], [1,2]]}, {"n": 4, "sets": [[1]]}]', 2),
        ('[{"n": 4, "sets": [[1, 1]]}, {"n": 4, "sets": [[1]]}]', 2),
        ("{not json", 2),
    ],
)
def test_compress_rejects(capsys, tmp_path, doc, s):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    code, _, err = run(capsys, "compress", str(path), "--s", str(s))
    assert code == 2 and err


def test_compress_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compress", str(tmp_path / "absent.json"), "--s", "2")
    assert code == 2 and "cannot read" in err


def test_shift(capsys, tmp_path):
    path = tmp_path / "fams.json"
    path.write_text('[{"n": 3, "sets": [[2, 3]]}, {"n": 3, "sets": [[3]]}]')
    code, out, _ = run(capsys, "shift", str(path))
    assert code == 0
    assert json.loads(out) == [{"n": 3, "sets": [[1, 2]]}, {"n": 3, "sets": [[1]]}]
    path.write_text('{"n": 3, "sets": [[3]]}')
    code, out, _ = run(capsys, "shift", str(path))
    assert json.loads(out) == [{"n": 3, "sets": [[1]]}]


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--n-max", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == BOUNDS_HEADER
    rows = {tuple(line.split(",")[:2]): line for line in lines[1:]}
    assert rows[("4", "2")] == '4,2,"1,1",8,5,12'
    assert rows[("6", "3")].startswith('6,3,"0,3;1,2",21,')
    assert rows[("10", "2")].startswith('10,2,"0,2",46,')
    assert all(int(n) >= 2 * int(s) >= 2 for n, s in rows)


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--cases", "50", "--seed", "5", "--exhaustive-n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "property,checked,failures"
    assert all(line.endswith(",0") for line in lines[1:])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crossunion", "verify", "prop1.4", "--n", "8", "--s", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "prop1.4,8,2,29,29,1,1,confirmed" in proc.stdout
