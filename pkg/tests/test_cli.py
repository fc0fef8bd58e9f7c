import csv
import io
import json

import pytest

from congmonoid.cli import main
from congmonoid.monoid import IndecomposableSet, indecomposables


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_im_table(capsys):
    code, out, _ = run(capsys, "im", "--n", "4")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 6
    assert out.splitlines()[0].split() == ["counts", "degree", "multiplicity", "level", "orbit_size"]


def test_im_degree_slice(capsys):
    code, out, _ = run(capsys, "im", "--n", "4", "--degree", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert {r["counts"] for r in rows} == {"2,1,0", "0,1,2"}


def test_im_json_round_trip(capsys):
    code, out, _ = run(capsys, "im", "--n", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["F"] == 19
    assert IndecomposableSet.from_dict(doc) == indecomposables(6)


def test_usage_errors(capsys):
    assert run(capsys, "im", "--n", "1")[0] == 2
    assert run(capsys, "im")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "reduce", "--mod", "4", "--weights", "a,b")[0] == 2


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "8", "--degree", "5", "--format", "json")
    assert code == 0 and len(json.loads(out)["solutions"]) == 3
    code, out, _ = run(capsys, "gen", "--n", "8", "--degree", "5", "--orbits", "--format", "json")
    doc = json.loads(out)
    assert len(doc["orbits"]) == 3
    assert sum(o["size"] for o in doc["orbits"]) == 12
    code, _, err = run(capsys, "gen", "--n", "8", "--degree", "3")
    assert code == 4 and "threshold" in err
    code, out, err = run(capsys, "gen", "--n", "8", "--degree", "3", "--force")
    assert code == 0 and "completeness not guaranteed" in err


def test_orbits_and_enumerate(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)["orbits"]) == 4
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--degree", "2", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 3
    code, _, _ = run(capsys, "enumerate", "--n", "12", "--degree", "12", "--limit", "10")
    assert code == 3


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--mod", "4", "--weights", "2,6", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["reduction"]["support"] == [2]
    assert doc["reduction"]["groups"] == {"2": [0, 1]}
    assert sorted(map(tuple, (g["x"] for g in doc["generators"]))) == [(0, 2), (1, 1), (2, 0)]
    code, out, _ = run(capsys, "reduce", "--mod", "4", "--weights=-1,4")
    assert code == 0 and "dropped: [1]" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--check", "conjecture3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc[0]["status"] == "proved-and-verified"
    code, _, _ = run(capsys, "verify", "--n", "13", "--check", "quadratic")
    assert code == 3
    code, _, _ = run(capsys, "verify", "--n", "6", "--check", "nope")
    assert code == 2


def test_verify_exit_on_proved_failure(capsys, monkeypatch):
    from congmonoid import cli, verify

    def broken(n, **kw):
        return verify._report("noether", n, "proved", {}, [{"kind": "fake"}], {})

    monkeypatch.setitem(verify.CHECKS, "noether", (broken, "proved"))
    code, _, _ = run(capsys, "verify", "--n", "4", "--check", "noether")
    assert code == 5


def test_table(capsys, tmp_path):
    fig = tmp_path / "table.png"
    code, out, err = run(capsys, "table", "--n-max", "10", "--format", "csv", "--plot", str(fig))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 9
    assert rows[2] == {"n": "4", "F": "6", "p": "5", "phi": "2", "kac_bound": "6", "bound_met": "True"}
    assert fig.stat().st_size > 0


def test_im_plot_and_seed_check(capsys, tmp_path):
    fig = tmp_path / "im.png"
    code, _, err = run(capsys, "im", "--n", "7", "--plot", str(fig), "--seed-check")
    assert code == 0 and fig.exists() and "matches oracle" in err


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_deterministic_output(capsys, fmt):
    a = run(capsys, "im", "--n", "9", "--format", fmt)[1]
    b = run(capsys, "im", "--n", "9", "--format", fmt, "--threads", "4")[1]
    assert a == b
