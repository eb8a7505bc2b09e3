import io
import json

import pytest

from strongdim.cli import main
from strongdim.families import all_graphs, complete, path, wheel
from strongdim.io import iter_edgelists, read_edgelist
from strongdim.products import cartesian_sum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys, tmp_el):
    code, out, _ = run(capsys, "info", tmp_el(path(4)))
    assert code == 0
    assert "n = 4" in out and "diameter = 3" in out and "connected = True" in out


def test_gen_roundtrip(capsys, tmp_path):
    out = tmp_path / "w7.el"
    assert main(["gen", "--family", "wheel", "--n", "7", "-o", str(out)]) == 0
    assert read_edgelist(out) == wheel(7)
    assert main(["gen", "--family", "grid", "--n", "2", "--n2", "3", "-o", str(out)]) == 0
    assert read_edgelist(out).m == 7


def test_gen_all_streams_blocks(capsys):
    code, out, _ = run(capsys, "gen", "--family", "all", "--n", "3")
    assert code == 0
    assert list(iter_edgelists(io.StringIO(out))) == list(all_graphs(3))


def test_gen_graph6_ingest(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("Cr\nC~\n")
    code, out, _ = run(capsys, "gen", "--graph6", str(src))
    assert code == 0
    gs = list(iter_edgelists(io.StringIO(out)))
    assert len(gs) == 2 and gs[1] == complete(4)


def test_gen_bad_parameter_exits_2(capsys):
    code, out, err = run(capsys, "gen", "--family", "wheel", "--n", "2")
    assert code == 2 and out == "" and "rim" in err


def test_product(capsys, tmp_el, tmp_path):
    a, b = tmp_el(path(3), "a.el"), tmp_el(path(4), "b.el")
    out = tmp_path / "s.el"
    assert main(["product", "--op", "sum", a, b, "-o", str(out)]) == 0
    assert read_edgelist(out) == cartesian_sum(path(3), path(4))


def test_srgraph_with_map(capsys, tmp_el, tmp_path):
    out, mp = tmp_path / "sr.el", tmp_path / "sr.map"
    assert main(["srgraph", tmp_el(path(4)), "-o", str(out), "--map", str(mp)]) == 0
    assert read_edgelist(out) == complete(2)
    assert mp.read_text() == "0 0\n1 3\n"
    code, text, _ = run(capsys, "srgraph", "--tf", tmp_el(complete(3)))
    assert code == 0 and text.startswith("0 0\n")


def test_invariants_json(capsys, tmp_el):
    code, out, _ = run(capsys, "invariants", tmp_el(wheel(5)), "--json")
    assert code == 0
    assert json.loads(out) == {"alpha": 2, "beta": 4, "omega": 3, "varpi": 3, "diameter": 2, "dim_s": 3}
    assert out.strip() == json.dumps(json.loads(out), sort_keys=True)


@pytest.mark.parametrize("method", ["sr-cover", "bruteforce"])
def test_dims_p4(capsys, tmp_el, method):
    code, out, _ = run(capsys, "dims", tmp_el(path(4)), "--method", method)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dim_s = 1" and lines[1] in ("witness = {0}", "witness = {3}")


def test_dims_disconnected_exits_2(capsys, tmp_path):
    f = tmp_path / "d.el"
    f.write_text("3 1\n0 1\n")
    code, _, err = run(capsys, "dims", str(f))
    assert code == 2 and "connected" in err


@pytest.mark.parametrize("text, fragment", [
    ("3 1\n0 x\n", "line 2"),
    ("3 1\n0 7\n", "out of range"),
    ("3 1\n2 2\n", "loop"),
])
def test_malformed_input_exits_2(capsys, tmp_path, text, fragment):
    f = tmp_path / "bad.el"
    f.write_text(text)
    code, out, err = run(capsys, "info", str(f))
    assert code == 2 and out == "" and fragment in err
    assert len(err.strip().splitlines()) == 1


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "info", str(tmp_path / "missing.el"))
    assert code == 2 and err


def test_verify_subset_passes(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "--suite", "gallai,thD2", "--max-order", "3",
                        "--random", "2", "--json", str(out))
    assert code == 0 and "PASS overall" in text
    data = json.loads(out.read_text())
    assert data["pass"] is True and [c["id"] for c in data["claims"]] == ["gallai", "thD2"]


def test_verify_failing_claim_exits_1(capsys):
    code, text, err = run(capsys, "verify", "--suite", "omega-product", "--random", "0")
    assert code == 1 and "FAIL omega-product" in text and "C_5" in err


def test_verify_guard_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--max-order", "9")
    assert code == 2 and "max_order" in err
