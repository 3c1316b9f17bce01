import json

import pytest

from growthdiagrams.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_insert_hypoplactic_ascii(capsys):
    code, out, _ = run(capsys, "insert", "hypoplactic", "415362")
    assert code == 0
    assert out == (
        "P (quasi-ribbon):\n"
        "1 2\n"
        "  3\n"
        "  4 5 6\n"
        "Q (ribbon):\n"
        "2 6\n"
        "  4\n"
        "  1 3 5\n"
    )


def test_insert_hypoplactic_json(capsys):
    code, out, _ = run(capsys, "insert", "hypoplactic", "415362", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["P"] == {"shape": [2, 1, 3], "rows": [[1, 2], [3], [4, 5, 6]]}
    assert payload["Q"] == {"shape": [2, 1, 3], "rows": [[2, 6], [4], [1, 3, 5]]}


def test_insert_singleton(capsys):
    code, out, _ = run(capsys, "insert", "hypoplactic", "1")
    assert code == 0
    assert "P (quasi-ribbon):\n1\n" in out


def test_insert_bst_left(capsys):
    code, out, _ = run(capsys, "insert", "bst-left", "351426")
    assert code == 0
    assert "P (binary search tree): ((- 1 (- 2 -)) 3 ((- 4 -) 5 (- 6 -)))" in out
    assert "Q (increasing tree): ((- 3 (- 5 -)) 1 ((- 4 -) 2 (- 6 -)))" in out


def test_insert_bst_right_alias_sylvester(capsys):
    _, out_right, _ = run(capsys, "insert", "bst-right", "351426", "--format", "json")
    _, out_sylv, _ = run(capsys, "insert", "sylvester", "351426", "--format", "json")
    assert out_right == out_sylv
    payload = json.loads(out_right)
    assert payload["algorithm"] == "bst-right"
    assert payload["P"]["label"] == 6  # root of the BST of the reversed word


def test_insert_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "insert", "hypoplactic", "1231")
    assert code == 2
    assert "duplicate" in err


def test_growth_check_match(capsys):
    code, out, _ = run(capsys, "growth", "composition", "415362", "--check")
    assert code == 0
    assert "top chain:   e -> 1 -> 1,1 -> 1,2 -> 2,2 -> 2,3 -> 2,1,3" in out
    assert "right chain: e -> 1 -> 2 -> 2,1 -> 2,1,1 -> 2,1,2 -> 2,1,3" in out
    assert "check against direct insertion: MATCH" in out


def test_growth_tree_check(capsys):
    code, out, _ = run(capsys, "growth", "tree", "351426", "--check")
    assert code == 0
    assert "MATCH" in out


def test_growth_empty_permutation(capsys):
    code, out, _ = run(capsys, "growth", "composition", "")
    assert code == 0
    assert "P (quasi-ribbon):\n(empty)" in out


def test_growth_json(capsys):
    code, out, _ = run(capsys, "growth", "composition", "415362", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 6
    assert payload["grid"][6] == [[], [1], [1, 1], [1, 2], [2, 2], [2, 3], [2, 1, 3]]
    assert [row[6] for row in payload["grid"]] == [
        [], [1], [2], [2, 1], [2, 1, 1], [2, 1, 2], [2, 1, 3]
    ]
    assert payload["marks"] == [[1, 4], [2, 1], [3, 5], [4, 3], [5, 6], [6, 2]]


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "lifted-binary-tree", "--max-rank", "2")
    assert code == 0
    assert out.startswith('digraph "lifted-binary-tree" {')
    assert '"1" -> "1,1";' in out


def test_graph_json_catalan(capsys):
    code, out, _ = run(
        capsys, "graph", "reflected-bracket-tree", "--max-rank", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [len(level["vertices"]) for level in payload["ranks"]] == [1, 1, 2, 5, 14]


def test_graph_rank_guard_exit_2(capsys):
    code, _, err = run(capsys, "graph", "tree-lattice", "--max-rank", "11")
    assert code == 2
    assert "exceeds" in err


def test_graph_rank_zero(capsys):
    code, out, _ = run(capsys, "graph", "tree-lattice", "--max-rank", "0")
    assert code == 0
    assert out.count("->") == 0


def test_verify_duality(capsys):
    code, out, _ = run(capsys, "verify", "duality", "--pair", "compositions", "--max-rank", "6")
    assert code == 0
    assert "rank 6: PASS" in out
    code, out, _ = run(capsys, "verify", "duality", "--pair", "trees", "--max-rank", "5")
    assert code == 0
    assert "dual with r=1" in out


def test_verify_equivalence(capsys):
    code, out, _ = run(capsys, "verify", "equivalence", "--family", "tree", "--max-n", "4")
    assert code == 0
    assert "n=4: 24/24 PASS" in out


def test_verify_shadow(capsys):
    code, out, _ = run(capsys, "verify", "shadow", "--max-n", "4")
    assert code == 0
    assert "shadow lines match hypoplactic insertion" in out


def test_verify_paths(capsys):
    code, out, _ = run(capsys, "verify", "paths", "--pair", "trees", "--n", "5")
    assert code == 0
    assert "chain-pair count 120, n! = 120: PASS" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, out, _ = run(capsys, "graph", "binword", "--max-rank", "3", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith('digraph "binword"')


def test_byte_identical_output(capsys):
    first = run(capsys, "growth", "tree", "351426", "--format", "json")
    second = run(capsys, "growth", "tree", "351426", "--format", "json")
    assert first == second


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["insert", "plactic", "123"])
    capsys.readouterr()
    assert excinfo.value.code == 2
