import json

import pytest

from kleinzip.cli import graph_from_document, main
from kleinzip.search import find_isomorphism
from kleinzip import census


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,n", [("heawood", 14), ("coxeter", 28), ("coxeter-alt", 28),
                                    ("klein", 56), ("klein-quartic", 24)])
def test_build_round_trip(capsys, name, n):
    code, out, _ = run(capsys, "build", name)
    assert code == 0
    doc = json.loads(out)
    g = graph_from_document(doc)
    assert g.order == n == len(doc["names"])


def test_build_coxeter_alt_matches(capsys):
    _, out, _ = run(capsys, "build", "coxeter-alt")
    assert find_isomorphism(graph_from_document(json.loads(out)), census.build_coxeter()) is not None


def test_build_fano(capsys):
    code, out, _ = run(capsys, "build", "fano")
    doc = json.loads(out)
    assert code == 0 and len(doc["lines"]) == 7


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "klein", "--format", "dot")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("graph klein")
    assert sum("--" in ln for ln in lines) == 84
    assert sum(ln.strip().endswith("];") for ln in lines) == 56


def test_export_colors(capsys):
    code, out, _ = run(capsys, "export", "klein-quartic", "--colors")
    doc = json.loads(out)
    assert code == 0 and len(doc["colors"]) == 24
    g = graph_from_document(doc)
    assert all(doc["colors"][u] != doc["colors"][v] for u, v in g.edges)
    assert run(capsys, "export", "heawood", "--colors")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "build", "nothing")[0] == 2
    assert run(capsys, "export", "coxeter", "--format", "svg")[0] == 2
    assert run(capsys, "verify", "galaxy")[0] == 2
    assert run(capsys)[0] == 2


def test_verify_heawood_passes(capsys):
    code, out, _ = run(capsys, "verify", "heawood", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]


def test_corrupt_fixture_fails_named_check(capsys):
    code, out, _ = run(capsys, "verify", "klein", "--json", "--corrupt-fixture")
    doc = json.loads(out)
    assert code == 1 and not doc["passed"]
    failing = [c["name"] for c in doc["checks"] if c["status"] == "FAIL"]
    assert failing


def test_ooa_and_zip(capsys):
    code, out, _ = run(capsys, "ooa", "--solve")
    doc = json.loads(out)
    assert code == 0 and doc["components"] == 1 and doc["matches_fixture_up_to_component_flips"]
    code, out, _ = run(capsys, "zip", "--summary")
    doc = json.loads(out)
    assert (doc["V"], doc["E"], doc["F"], doc["genus"]) == (56, 84, 24, 3)
    assert doc["petrie_lengths"] == [8]


def test_output_is_deterministic(capsys):
    first = run(capsys, "export", "klein", "--format", "json")[1]
    assert run(capsys, "export", "klein", "--format", "json")[1] == first


def test_no_color_when_piped(capsys, monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    _, out, _ = run(capsys, "verify", "heawood")
    assert "\033[" not in out and "PASS" in out
