import io
import json
import re
import subprocess
import sys

import pytest

from braidgraphs.classes import enumerate_braid_class
from braidgraphs.cli import run
from braidgraphs.coxeter import standard_family
from braidgraphs.io import (
    FormatError,
    class_from_json,
    class_to_dict,
    class_to_json,
    graph_to_text,
    parse_graph_arg,
    parse_graph_text,
    parse_word,
)

from conftest import W
from worked_examples import D7_WORD


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# -- formats ---------------------------------------------------------------

def test_graph_text_bonds():
    g = parse_graph_text("n=4\nbond 1 3\nbond 2 3  # fork\n\nbond 3 4\n")
    assert g == standard_family("D", 4)


def test_graph_text_family():
    assert parse_graph_text("family D~ 5\n") == standard_family("D~", 5)


@pytest.mark.parametrize("text", ["bond 1 2\n", "n=3\nedge 1 2\n", "family A 3\nbond 1 2\n"])
def test_graph_text_errors(text):
    with pytest.raises(FormatError):
        parse_graph_text(text)


def test_graph_round_trip(tmp_path):
    g = standard_family("D", 6)
    path = tmp_path / "d6.txt"
    path.write_text(graph_to_text(g))
    assert parse_graph_arg(str(path)) == g
    assert parse_graph_arg("family:D:6") == g
    with pytest.raises(FormatError):
        parse_graph_arg("family:D")
    with pytest.raises(FormatError):
        parse_graph_arg(str(tmp_path / "missing.txt"))


@pytest.mark.parametrize(
    "text,n,word",
    [
        ("2 3 2 1 4 3 4", None, (2, 3, 2, 1, 4, 3, 4)),
        ("2,3,2", None, (2, 3, 2)),
        ("2321434", None, (2, 3, 2, 1, 4, 3, 4)),
        ("12", 12, (12,)),
        ("10 11 10", 12, (10, 11, 10)),
        ("", None, ()),
    ],
)
def test_parse_word(text, n, word):
    assert parse_word(text, n) == word


def test_parse_word_rejects():
    with pytest.raises(FormatError):
        parse_word("1 a 2")


def test_class_json_round_trip():
    g = standard_family("D", 4)
    c = enumerate_braid_class(g, W("2321434"))
    data = class_to_dict(c)
    assert data["rank"] == 3 and data["shadows"] == [1, 3, 5]
    again = class_from_json(g, class_to_json(c))
    assert again.members == c.members and again.edges == c.edges
    assert class_to_json(again) == class_to_json(c)


def test_class_json_tamper_detected():
    g = standard_family("D", 4)
    data = class_to_dict(enumerate_braid_class(g, W("2321434")))
    data["edges"] = data["edges"][1:]
    with pytest.raises(FormatError):
        class_from_json(g, json.dumps(data))


# -- commands --------------------------------------------------------------

def test_cli_class_text():
    code, out, _ = cli("class", "--graph", "family:A:4", "--word", "1 2 1 3 2 4 3")
    assert code == 0
    assert "4 members, rank 3" in out


def test_cli_class_json():
    code, out, _ = cli("class", "--graph", "family:A:4", "--word", "1 2 1 3 2 4 3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["members"]) == 4 and data["rank"] == 3


def test_cli_class_dot():
    code, out, _ = cli("class", "--graph", "family:D:4", "--word", "2 3 2 1 4 3 4", "--format", "dot")
    assert code == 0
    assert len(re.findall(r"^\s+\"\d+\";$", out, re.M)) == 5
    assert out.count(" -- ") == 5


def test_cli_seed_order_bfs():
    code, out, _ = cli("class", "--graph", "family:D:4", "--word", "3231343", "--format", "json", "--seed-order", "bfs")
    assert code == 0 and json.loads(out)["members"][0] == [3, 2, 3, 1, 3, 4, 3]


def test_cli_not_reduced():
    code, _, err = cli("class", "--graph", "family:A:4", "--word", "1 1")
    assert code == 2 and "NotReduced" in err


def test_cli_cap():
    code, _, err = cli("class", "--graph", "family:D:4", "--word", "2321434", "--cap", "2")
    assert code == 3 and "CapExceeded" in err


@pytest.mark.parametrize(
    "graph,word,expected",
    [("family:D:7", D7_WORD, "3231343 | 5 | 6 | 7 | 5 | 4 | 3231343"), ("family:A:6", "1213243565", "1213243 | 565"), ("family:A:3", "2", "2")],
)
def test_cli_factorize(graph, word, expected):
    code, out, _ = cli("factorize", "--graph", graph, "--word", word)
    assert code == 0 and out.strip() == expected


def test_cli_factorize_json():
    code, out, _ = cli("factorize", "--graph", "family:A:6", "--word", "1213243565", "--format", "json")
    data = json.loads(out)
    assert data["box_product"]["passed"] and data["box_product"]["size"] == 8


def test_cli_embed():
    code, out, _ = cli("embed", "--graph", "family:D:4", "--word", "2321434")
    assert code == 0 and "isometric: true" in out
    assert len(re.findall(r"^\d{7}  [01]{3}$", out, re.M)) == 5


def test_cli_embed_json_and_dot():
    code, out, _ = cli("embed", "--graph", "family:D:4", "--word", "2321434", "--format", "json")
    data = json.loads(out)
    assert data["isometric"] and len(data["labels"]) == 5 and len(data["theta_classes"]) == 3
    code, out, _ = cli("embed", "--graph", "family:D:4", "--word", "2321434", "--format", "dot")
    assert out.count('label="') == 5


def test_cli_embed_three_cycle():
    code, _, err = cli("embed", "--graph", "family:A~:2", "--word", "1213121")
    assert code == 4 and "NotTriangleFree" in err
    code, out, _ = cli("embed", "--graph", "family:A~:2", "--word", "1213121", "--unchecked")
    assert code == 0 and "isometric:" in out


def test_cli_embed_single_letter():
    code, out, _ = cli("embed", "--graph", "family:A:2", "--word", "1")
    assert code == 0 and "isometric: true" in out


def test_cli_fibonacci():
    code, out, _ = cli("fibonacci", "--graph", "family:D:4", "--word", "34313234313")
    assert code == 0
    assert "rank: 5" in out and "class_size: 13" in out and "fibonacci_cube: true" in out
    code, out, _ = cli("fibonacci", "--graph", "family:A:4", "--word", "1213243")
    assert "fibonacci: false" in out and "star_criterion: false" in out
    code, out, _ = cli("fibonacci", "--graph", "family:D:5", "--word", "4534313234313", "--format", "json")
    data = json.loads(out)
    assert data["fibonacci"] is False and data["class_size"] == 18


def test_cli_matsumoto():
    code, out, _ = cli("matsumoto", "--graph", "family:A:3", "--word", "123121")
    assert code == 0 and "reduced expressions: 16" in out
    assert "braid edges: 8" in out and "commutation edges: 10" in out
    code, out, _ = cli("matsumoto", "--graph", "family:A:3", "--word", "123121", "--format", "dot")
    assert out.count('"blue"') == 8 and out.count('"orange"') == 10


def test_cli_string():
    code, out, _ = cli("string", "--l", "6", "--k", "5", "--m", "4", "--eps", "+")
    assert code == 0 and out.strip() == "54657687989"
    code, _, err = cli("string", "--l", "6", "--k", "0", "--m", "4", "--graph", "family:A:8")
    assert code == 1 and "RankTooSmall" in err
    code, _, err = cli("string", "--l", "3", "--k", "0", "--m", "1", "--eps", "0")
    assert code == 1 and "SpecInvalid" in err


def test_cli_theta_and_median():
    code, out, _ = cli("theta", "--graph", "family:D:4", "--word", "2321434")
    assert code == 0 and "theta classes: 3" in out and "isometric dimension: 3" in out
    code, out, _ = cli("median", "--graph", "family:D:4", "--word", "343132343")
    assert code == 0 and out.strip() == "median: true"


def test_cli_missing_word():
    code, _, err = cli("class", "--graph", "family:A:3")
    assert code == 1


def test_cli_deterministic():
    args = ("embed", "--graph", "family:D:5", "--word", "4534313234313", "--format", "json")
    assert cli(*args) == cli(*args)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidgraphs", "string", "--l", "2", "--k", "1", "--m", "3", "--eps", "0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "434"
