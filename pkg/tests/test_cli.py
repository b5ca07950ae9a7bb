import json

import pytest

from unitring.cli import EXIT_GUARD, EXIT_OK, EXIT_PARSE, bracket, canonical, main, run, k1_table
from unitring.fpgrp import FpGroup, word_eval
from unitring.ringspec import SpecError, loads

F2S3 = '{"group_ring": {"coeff": {"zmod": 2}, "group": "symmetric(3)"}}'


def test_bracket():
    assert bracket([2, 2, 4]) == "[2^2,4]"
    assert bracket([]) == "[]"
    assert bracket([126]) == "[126]"


@pytest.mark.parametrize(
    "text, order",
    [
        ('{"zmod": 12}', 12),
        ('{"gf": 9}', 9),
        ('{"gf": {"p": 2, "poly": [1, 1, 1]}}', 4),
        (F2S3, 64),
        ('{"group_ring": {"coeff": {"zmod": 2}, "group": {"family": "dihedral", "args": [8]}}}', 256),
        ('{"group_ring": {"coeff": {"zmod": 3}, "group": {"table": [[0, 1], [1, 0]]}}}', 9),
        ('{"group_ring": {"coeff": {"zmod": 2}, "group": {"product": ["cyclic(2)", "cyclic(3)"]}}}', 64),
        ('{"matrix": {"n": 2, "base": {"zmod": 4}}}', 256),
        ('{"poly_quotient": {"m": 4, "f": [1, 1, 1]}}', 16),
        ('{"product": [{"zmod": 3}, {"gf": 4}]}', 12),
    ],
)
def test_spec_kinds(text, order):
    assert loads(text).ring.order == order


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[1, 2]",
        '{"zmod": 0}',
        '{"zmod": true}',
        '{"gf": 6}',
        '{"ring": 3}',
        '{"matrix": {"n": 2}}',
        '{"group_ring": {"coeff": {"zmod": 2}, "group": "nosuch(3)"}}',
        '{"group_ring": {"coeff": {"zmod": 2}, "group": {"table": [[0, 1], [0, 1]]}}}',
        '{"product": []}',
    ],
)
def test_spec_errors(text):
    with pytest.raises(SpecError):
        loads(text)


def test_parse_error_reports_location_and_exits_2(capsys):
    with pytest.raises(SpecError) as exc:
        loads('{"zmod":\n  }')
    assert exc.value.line == 2
    assert main(["order", '{"gf": 6}']) == EXIT_PARSE
    assert "spec error" in capsys.readouterr().err
    assert main(["order", "/no/such/file.json"]) == EXIT_PARSE


def test_oracle_guard_exits_3():
    big = '{"group_ring": {"coeff": {"zmod": 2}, "group": "cyclic(13)"}}'
    assert run(["radical", big, "--oracle"]).code == EXIT_GUARD
    assert run(["radical", big]).code == EXIT_OK


def test_order_and_oracle(capsys):
    assert main(["order", '{"zmod": 12}', "--oracle"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"] == {"order": 4, "oracle": 4}


@pytest.mark.parametrize("cmd", ["abelianization", "k1", "radical", "wedderburn", "verify"])
def test_commands_succeed(cmd):
    out = run([cmd, F2S3, "--oracle"] if cmd != "k1" and cmd != "wedderburn" else [cmd, F2S3])
    assert out.code == EXIT_OK, out.message


def test_k1_output():
    doc = run(["k1", F2S3]).document["result"]
    assert doc["invariants"] == [2] and doc["ab"] == [2, 2] and doc["quotient"] == [2]
    assert doc["bracket"] == {"ab": "[2^2]", "quotient": "[2]"}


def test_wedderburn_output():
    comps = run(["wedderburn", F2S3]).document["result"]["components"]
    assert sorted((c["q"], c["n"]) for c in comps) == [(2, 1), (2, 2)]


def test_presentation_roundtrip_revalidates():
    doc = run(["presentation", F2S3]).document
    fp = FpGroup.from_json(json.loads(json.dumps(doc["result"]["presentation"])))
    from unitring.unitk import UnitGroup, unit_group

    R = loads(F2S3).ring
    gens = unit_group(R).presentation.gens
    G = UnitGroup(R)
    assert all(G.is_one(word_eval(G, r, gens)) for r in fp.relators)
    assert doc["result"]["unit_order"] == 12


def test_output_deterministic_modulo_timing(tmp_path, monkeypatch):
    a = run(["abelianization", F2S3, "--seed", "4"]).document
    b = run(["abelianization", F2S3, "--seed", "4"]).document
    assert canonical(a) == canonical(b) and a["seed"] == 4
    monkeypatch.setenv("UNITRING_SEED", "7")
    assert run(["order", '{"zmod": 5}']).document["seed"] == 7
    out = tmp_path / "r.json"
    assert main(["order", '{"zmod": 5}', "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["result"]["order"] == 4


def test_spec_from_file_and_stdin(tmp_path, monkeypatch):
    p = tmp_path / "ring.json"
    p.write_text('{"zmod": 9}')
    assert run(["order", str(p)]).document["result"]["order"] == 6
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO('{"zmod": 10}'))
    assert run(["order", "-"]).document["result"]["order"] == 4


def test_k1_table_small_rows():
    result, times = k1_table(max_order=8)
    assert result["compared"] == 3 and result["mismatches"] == []
    assert set(times) == {"6,1", "8,3", "8,4"}
