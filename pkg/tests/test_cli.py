import io
import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

from dnamatmul.cli import build_parser, main, run
from dnamatmul.errors import LabelCountMismatch, ParseError
from dnamatmul.pipeline import parse_input
from dnamatmul.report import emit_dot, read_machine_product

from .conftest import COLLIDING_STRANDS, FOUR_MATRIX_CHAIN, FOUR_MATRIX_LABELS, SWAP

DATA = Path(__file__).resolve().parent.parent / "data"

# raw policy, strand length 10: this seed draws a tail collision that splints b onto i
RAW_COLLISION_SEED = 25


def write_doc(tmp_path, **doc):
    path = tmp_path / "input.json"
    path.write_text(json.dumps(doc))
    return str(path)


def invoke(argv):
    buf = io.StringIO()
    code = run(build_parser().parse_args(argv), stdout=buf)
    return code, buf.getvalue()


def test_parse_four_matrix_input():
    doc = parse_input((DATA / "four_matrix_chain.json").read_text())
    assert [list(map(list, m)) for m in doc.chain.matrices] == FOUR_MATRIX_CHAIN
    assert doc.labels == FOUR_MATRIX_LABELS
    assert doc.strand_length == 10


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_input('{"labels": []}')
    with pytest.raises(ParseError) as info:
        parse_input('{\n  "matrices": [[[0, 1]],\n}')
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_input("[1, 2]")
    with pytest.raises(ParseError):
        parse_input('{"matrices": [], "extra": 1}')
    labels9 = [x for layer in FOUR_MATRIX_LABELS for x in layer][:9]
    with pytest.raises(LabelCountMismatch):
        parse_input(json.dumps({"matrices": FOUR_MATRIX_CHAIN, "labels": labels9}))


def test_text_sections_in_order():
    code, out = invoke(["--input", str(DATA / "four_matrix_chain.json"), "--seed", "4"])
    assert code == 0
    heads = [line for line in out.splitlines() if line and not line.startswith("\t")]
    assert heads == ["Vertex Strands:", "Edge Strands:", "Path Strands:", "Complete Paths:",
                     "Product Matrix:", "Verification:"]
    assert "\ta : " in out and "\t(a,d) : " in out
    assert re.search(r"\t[ACGT-]+ \(a -> d -> f -> g -> i\)", out)
    assert "\t[[1, 0], [0, 1]]" in out
    assert "\tmatch : true" in out


def test_quiet(tmp_path):
    code, out = invoke(["--input", write_doc(tmp_path, matrices=[SWAP, SWAP]), "--quiet"])
    assert code == 0 and out == "[[1, 0], [0, 1]]\n"


def test_machine_round_trip():
    code, out = invoke(["--input", str(DATA / "four_matrix_chain.json"), "--format", "machine"])
    assert code == 0
    doc = json.loads(out)
    assert read_machine_product(out) == doc["product"] == [[1, 0], [0, 1]]
    assert len(doc["path_strands"]) == 30 and len(doc["complete_paths"]) == 2
    assert doc["verification"]["match"] is True
    complete = {tuple(p["labels"]) for p in doc["complete_paths"]}
    assert complete <= {tuple(p["labels"]) for p in doc["path_strands"]}


def test_raw_seed_reproduces_false_positive():
    code, out = invoke(["--input", str(DATA / "four_matrix_chain.json"), "--format", "machine",
                        "--collision-policy", "raw", "--seed", str(RAW_COLLISION_SEED)])
    doc = json.loads(out)
    assert code == 0
    assert doc["product"] == [[1, 0], [1, 1]]
    ver = doc["verification"]
    assert not ver["match"] and ver["false_positive_only"]
    assert ver["mismatched_entries"] == [{"row": 1, "col": 0, "simulated": 1, "expected": 0}]
    assert len(doc["complete_paths"]) == 3


def test_fixed_strands_document():
    code, out = invoke(["--input", str(DATA / "four_matrix_chain_collision.json"),
                        "--collision-policy", "raw"])
    assert code == 0
    assert "\tTCTTGGACAG-GTCATGAGCG (b -> i)" in out
    assert "\t[[1, 0], [1, 1]]" in out
    # the same strands break the unique-halves policy
    code, _ = invoke(["--input", str(DATA / "four_matrix_chain_collision.json")])
    assert code == 1


def test_stochastic_mode():
    code, out = invoke(["--input", str(DATA / "four_matrix_chain.json"), "--mode", "stochastic",
                        "--trials", "200", "--format", "machine", "--seed", "3"])
    doc = json.loads(out)
    assert code == 0
    assert sum(p["count"] for p in doc["path_strands"]) == 200
    assert doc["product"] == [[1, 0], [0, 1]]


def test_two_matrix_input():
    code, out = invoke(["--input", str(DATA / "two_matrix.json"), "--quiet"])
    assert (code, out) == (0, "[[1, 0], [0, 1]]\n")


@pytest.mark.parametrize(
    "doc, extra, expected",
    [
        ({"matrices": [[[0, 1]], [[1], [0], [1]]]}, [], 1),
        ({"matrices": [SWAP, SWAP]}, ["--strand-length", "7"], 1),
        ({"matrices": [SWAP, SWAP]}, ["--strand-length", "2"], 2),
        ({"matrices": [[[1] * 4] * 4] * 5}, ["--path-cap", "50"], 2),
    ],
)
def test_exit_codes(tmp_path, doc, extra, expected):
    code, _ = invoke(["--input", write_doc(tmp_path, **doc)] + extra)
    assert code == expected


def test_io_errors(tmp_path):
    code, _ = invoke(["--input", str(tmp_path / "missing.json")])
    assert code == 3
    code, _ = invoke(["--input", str(DATA / "two_matrix.json"),
                      "--emit-dot", str(tmp_path / "no" / "such" / "dir.dot")])
    assert code == 3


def test_emit_dot(tmp_path):
    dot_path = tmp_path / "g.dot"
    code, _ = invoke(["--input", str(DATA / "four_matrix_chain.json"),
                      "--emit-dot", str(dot_path), "--quiet"])
    assert code == 0
    text = dot_path.read_text()
    assert text.startswith("digraph") and text.rstrip().endswith("}")
    assert text.count(" -> ") == 8
    assert '    "a" -> "d";' in text
    nodes = set(re.findall(r'"([^"]+)";', text.split("->")[0]))
    assert nodes == set("abcdefghij")


def test_emit_dot_small_graphs():
    from dnamatmul import assign_labels, build_layered_graph, validate_chain

    g = build_layered_graph(validate_chain([SWAP, SWAP]))
    text = emit_dot(g, assign_labels(g, [["1", "2"], ["a", "b"], ["A", "B"]]))
    assert text.count(" -> ") == 4 and text.count("rank=same") == 3
    assert len(set(re.findall(r'"([^"]+)"', text))) == 6
    z = build_layered_graph(validate_chain([[[0, 0]], [[0], [0]]]))
    assert " -> " not in emit_dot(z, assign_labels(z))
    q = build_layered_graph(validate_chain([[[1]], [[1]]]))
    assert '"say \\"hi\\""' in emit_dot(q, assign_labels(q, ['say "hi"', "b", "c"]))


def test_stdin_and_module_entry():
    text = (DATA / "two_matrix.json").read_text()
    proc = subprocess.run([sys.executable, "-m", "dnamatmul", "--quiet"], input=text,
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "[[1, 0], [0, 1]]\n"


def test_main_returns_code(tmp_path, capsys):
    assert main(["--input", write_doc(tmp_path, matrices=[SWAP]), "--quiet"]) == 1


def test_colliding_strands_constant_matches_data():
    doc = json.loads((DATA / "four_matrix_chain_collision.json").read_text())
    assert doc["vertex_strands"] == COLLIDING_STRANDS


def test_output_independent_of_hash_seed():
    cmd = [sys.executable, "-m", "dnamatmul", "--input", str(DATA / "four_matrix_chain.json"),
           "--collision-policy", "raw", "--seed", str(RAW_COLLISION_SEED)]
    outs = {
        subprocess.run(cmd, capture_output=True, check=True,
                       env={**os.environ, "PYTHONHASHSEED": h}).stdout
        for h in ("1", "2", "3")
    }
    assert len(outs) == 1
