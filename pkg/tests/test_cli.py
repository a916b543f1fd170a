"""Command-line interface: subcommands, exit codes, output formats."""

import io
import json

from arrlog.cli import main
from arrlog.corpus import fixture


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_doc(tmp_path, doc, name="input.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_classify_fixture(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("pog6a").document())
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "plus-one-generated"
    assert doc["exponents"] == [3, 3]
    assert doc["level"] == 4


def test_classify_text_output(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, out, _ = run(capsys, "classify", path, "--output", "text")
    assert code == 0
    assert "nearly-free" in out


def test_classify_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin",
                        io.StringIO(json.dumps(fixture("nf6").document())))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0
    assert json.loads(out)["verdict"] == "nearly-free"


def test_duplicate_line_exit_2(tmp_path, capsys):
    path = write_doc(tmp_path, {"lines": [[1, 0, 0], [2, 0, 0]]})
    code, _, err = run(capsys, "classify", path)
    assert code == 2
    assert "DuplicateLine" in err


def test_malformed_json_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("not json at all")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent/file.json")
    assert code == 2


def test_analyze(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 4
    assert doc["chi0"]["b2_0"] == 3
    assert doc["nr_form"] == {"n": 1, "r": 1, "c": 1}
    assert doc["balanced"] is True
    assert doc["n_H"] == [3, 3, 3, 3]
    assert len(doc["points"]) == 6


def test_ziegler_all(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("pog6b").document())
    code, out, _ = run(capsys, "ziegler", path, "--all")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 6
    assert all(e["exponents"] == [2, 3] for e in entries)


def test_ziegler_basis(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("nf6").document())
    code, out, _ = run(capsys, "ziegler", path, "--line", "0", "--basis")
    assert code == 0
    entry = json.loads(out)[0]
    assert entry["saito"] is True
    assert len(entry["basis"]) == 2


def test_ziegler_bad_index_exit_2(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("nf6").document())
    code, _, err = run(capsys, "ziegler", path, "--line", "99")
    assert code == 2


def test_ziegler_needs_line_or_all(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("nf6").document())
    code, _, err = run(capsys, "ziegler", path)
    assert code == 2
    assert "UsageError" in err


def test_defects_all(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, out, _ = run(capsys, "defects", path, "--all")
    assert code == 0
    entries = json.loads(out)
    assert [e["defect"] for e in entries] == [1, 1, 1, 1]
    assert all(e["coker_by_degree"] == [0, 1, 0] for e in entries)


def test_property_p(tmp_path, capsys):
    A = fixture("pog6c").build()
    zi = next(i for i, l in enumerate(A.lines)
              if [str(c) for c in l.coeffs] == ["0", "0", "1"])
    path = write_doc(tmp_path, fixture("pog6c").document())
    code, out, _ = run(capsys, "property-p", path, "--line", str(zi))
    assert code == 0
    entry = json.loads(out)[0]
    assert entry["holds"] == "variant1"
    assert entry["alpha_lifted"][0] == "0"
    assert entry["alpha_lifted"][2] == "0"


def test_splitting_all_with_range(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("pog6a").document())
    code, out, _ = run(capsys, "splitting", path, "--all", "--range")
    assert code == 0
    doc = json.loads(out)
    assert doc["range"]["candidates"] == [[2, 3], [1, 4]]
    types = [tuple(sorted(t["exponents"])) for t in doc["types"]]
    assert set(types) <= {(2, 3), (1, 4)}


def test_splitting_inadmissible_form_exit_2(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, _, err = run(capsys, "splitting", path, "--form", "1,1,0")
    assert code == 2
    assert "InadmissibleLine" in err


def test_splitting_bad_form_exit_2(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, _, err = run(capsys, "splitting", path, "--form", "1,1")
    assert code == 2


def test_verify_single(tmp_path, capsys):
    path = write_doc(tmp_path, fixture("generic4").document())
    code, out, err = run(capsys, "verify", path, "--external", "3")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert all(c["status"] != "fail" for c in reports[0]["checks"])
    assert "1 arrangements verified, 0 with failing checks" in err


def test_verify_corpus(tmp_path, capsys):
    code, out, err = run(capsys, "verify", "--corpus", "--random", "0",
                         "--external", "3")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 6
    # report order matches fixture order
    verdicts = [r["classification"]["verdict"] for r in reports]
    assert verdicts == ["nearly-free", "plus-one-generated",
                       "plus-one-generated", "nearly-free",
                       "plus-one-generated", "plus-one-generated"]


def test_verify_without_input_exit_2(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert "UsageError" in err


def test_gen_families(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--family", "near-pencil", "--n", "5")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["lines"]) == 5
    # generated document classifies as expected
    path = write_doc(tmp_path, doc)
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    parsed = json.loads(out)
    assert parsed["verdict"] == "free"
    assert parsed["exponents"] == [1, 3]


def test_gen_pencil_b2(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--family", "pencil", "--n", "3")
    assert code == 0
    path = write_doc(tmp_path, json.loads(out))
    code, out, _ = run(capsys, "analyze", path)
    assert json.loads(out)["chi0"]["b2_0"] == 0


def test_gen_generic_lattice(capsys):
    code, out, _ = run(capsys, "gen", "--family", "generic", "--n", "4",
                       "--seed", "7")
    assert code == 0
    from arrlog.arrangement import intersection_points, parse_arrangement

    A = parse_arrangement(json.loads(out))
    pts = intersection_points(A)
    assert len(pts) == 6
    assert all(p.multiplicity == 2 for p in pts)


def test_gen_deterministic(capsys):
    code1, out1, _ = run(capsys, "gen", "--family", "random", "--n", "6",
                         "--seed", "11")
    code2, out2, _ = run(capsys, "gen", "--family", "random", "--n", "6",
                         "--seed", "11")
    assert code1 == code2 == 0
    assert out1 == out2


def test_gen_bad_n_exit_2(capsys):
    code, _, err = run(capsys, "gen", "--family", "pencil", "--n", "0")
    assert code == 2
    assert "UsageError" in err
