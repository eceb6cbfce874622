import json

import pytest

from gabdim import fixture_text, load_lattice
from gabdim.cli import run


@pytest.fixture
def lat(tmp_path):
    """Write a packaged fixture (or literal text) to a file and return its path."""
    def write(name, text=None):
        path = tmp_path / f"{name}.lat"
        path.write_text(text if text is not None else fixture_text(name))
        return str(path)
    return write


BAD_TEXT = "lattice bad\nelements: 0 1\ncovers: 0<z"
NOT_LATTICE = "lattice v\nelements: 0 1 2\ncovers: 0<1, 0<2"


def test_check(lat, capsys):
    assert run(["check", lat("m3")]) == 0
    out = capsys.readouterr().out
    assert "modular: yes" in out and "5 elements, 6 covers" in out
    assert run(["check", lat("n5")]) == 0
    assert "modular: no (witness a=a b=b c=c)" in capsys.readouterr().out


def test_check_rejects_non_lattice(lat, capsys):
    assert run(["check", lat("v", NOT_LATTICE)]) == 2
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["check"], ["intervals"], ["closure", "--set", "0:1", "--op", "dvs"],
    ["filtration"], ["gdim"], ["verify"], ["export-dot"],
])
def test_bad_input_exits_2(argv, lat, capsys):
    cmd, *rest = argv
    assert run([cmd, lat("bad", BAD_TEXT), *rest]) == 2
    assert "line 3" in capsys.readouterr().err
    assert run([cmd, "/nonexistent/file.lat", *rest]) == 2


@pytest.mark.parametrize("argv, code", [
    (["check"], 0), (["intervals"], 0), (["export-dot"], 0),
    (["closure", "--set", "0:a", "--op", "dvs"], 3), (["filtration"], 3), (["gdim"], 3),
    (["verify"], 3),
    (["closure", "--set", "0:a", "--op", "dvs", "--allow-nonmodular"], 0),
    (["filtration", "--allow-nonmodular"], 0), (["gdim", "--allow-nonmodular"], 0),
])
def test_nonmodular_matrix(argv, code, lat, capsys):
    cmd, *rest = argv
    assert run([cmd, lat("n5"), *rest]) == code


def test_verify_refuses_override(lat, capsys):
    with pytest.raises(SystemExit) as info:
        run(["verify", lat("n5"), "--allow-nonmodular"])
    assert info.value.code == 2


def test_usage_errors_exit_2(capsys):
    for argv in ([], ["nope"], ["closure", "x.lat"], ["gen", "--kind", "chain"]):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 2


def test_intervals_listing(lat, capsys):
    assert run(["intervals", lat("two_chain")]) == 0
    assert capsys.readouterr().out == (
        "index\tlower\tupper\ttrivial\n0\t0\t0\ttrue\n1\t0\t1\tfalse\n2\t1\t1\ttrue\n")


def test_closure_operators(lat, capsys):
    path = lat("m3")
    assert run(["closure", path, "--set", "0:a", "--op", "dvs"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# op=dvs size=12 flags=abstract,basic,congruence,pre_division,division")
    assert run(["closure", path, "--set", "0:a", "--op", "crt"]) == 3
    assert "error:" in capsys.readouterr().err
    assert run(["closure", path, "--set", "0:0,a:a,b:b,c:c,1:1", "--op", "crt"]) == 0
    assert "size=11" in capsys.readouterr().out
    assert run(["closure", path, "--set", "a:0", "--op", "dvs"]) == 2
    assert run(["closure", path, "--set", "0:q", "--op", "dvs"]) == 2
    assert run(["closure", path, "--set", ",", "--op", "basic"]) == 2


def test_filtration_output(lat, capsys):
    assert run(["filtration", lat("three_chain")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "index\tset_size\tadded"
    assert out[1].startswith("0\t3\t")
    assert out[2] == "1\t6\t0:m,0:1,m:1"
    assert out[-1] == "# stabilization_index=1"
    assert run(["filtration", lat("three_chain"), "--seed", "0:m"]) == 3
    assert run(["filtration", lat("three_chain"), "--seed", "0:m,0:0,m:m,1:1"]) == 0


def test_gdim(lat, capsys):
    assert run(["gdim", lat("two_chain"), "--interval", "0,1"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert run(["gdim", lat("m3"), "--interval", "a,a", "--method", "construction"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert run(["gdim", lat("m3")]) == 0
    assert capsys.readouterr().out.endswith("# lattice dimension: 1\n")
    assert run(["gdim", lat("m3"), "--interval", "a,b"]) == 2


def test_verify_is_byte_stable(lat, tmp_path, capsys):
    path = lat("divisor12")
    assert run(["verify", path]) == 0
    first = capsys.readouterr().out
    assert run(["verify", path]) == 0
    assert capsys.readouterr().out == first
    out = tmp_path / "r.json"
    assert run(["verify", path, "--out", str(out)]) == 0
    assert out.read_text() == first


def test_verify_directory(tmp_path, capsys):
    d = tmp_path / "corpus"
    d.mkdir()
    for name in ("two_chain", "m3", "divisor12"):
        (d / f"{name}.lat").write_text(fixture_text(name))
    (d / "readme.txt").write_text("ignored")
    assert run(["verify", str(d)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["lattice"]["name"] for r in data] == ["divisor12", "m3", "two_chain"]
    assert run(["verify", str(d), "--jobs", "2"]) == 0
    assert json.loads(capsys.readouterr().out) == data
    empty = tmp_path / "empty"
    empty.mkdir()
    assert run(["verify", str(empty)]) == 2


def test_gen_round_trips(tmp_path, capsys):
    assert run(["gen", "--kind", "subspace", "--params", "3"]) == 0
    L = load_lattice(capsys.readouterr().out)
    assert L.size == 6 and L.modular
    out = tmp_path / "d.lat"
    assert run(["gen", "--kind", "downset", "--params", "5", "--seed", "7", "--out", str(out)]) == 0
    assert run(["check", str(out)]) == 0
    assert run(["gen", "--kind", "chain", "--params", "99"]) == 2


def test_generator_expression_input(capsys):
    assert run(["gdim", "divisor:60", "--interval", "1,60"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert run(["check", "chain:0"]) == 2


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(fixture_text("m3")))
    assert run(["export-dot", "-"]) == 0
    assert capsys.readouterr().out.count("->") == 6


def test_figures(lat, tmp_path, capsys):
    figs = tmp_path / "figs"
    assert run(["verify", lat("m3"), "--figures", str(figs)]) == 0
    assert run(["filtration", lat("two_chain"), "--figures", str(figs)]) == 0
    assert run(["gdim", lat("three_chain"), "--figures", str(figs)]) == 0
    names = sorted(p.name for p in figs.iterdir())
    assert names == ["m3_hasse.png", "m3_stages.png",
                     "three_chain_hasse.png", "three_chain_stages.png", "two_chain_hasse.png",
                     "two_chain_stages.png"]
