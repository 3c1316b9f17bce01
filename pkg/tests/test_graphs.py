import json
import math

import pytest

from growthdiagrams.graphs import (
    DUAL_PAIRS,
    RankGuardError,
    chain_counts,
    check_duality,
    down_matrix,
    export_dot,
    export_graph,
    export_json,
    make_graph,
    matmul,
    path_count_identity,
    up_matrix,
)

# edge sets of the two composition graphs up to rank 4, straight from the
# drawings (compositions written as digit strings)
LIFTED_EDGES_4 = {
    ("e", "1"),
    ("1", "2"), ("1", "11"),
    ("2", "3"), ("2", "21"), ("11", "12"), ("11", "111"),
    ("3", "4"), ("3", "31"), ("21", "22"), ("21", "211"),
    ("12", "13"), ("12", "121"), ("111", "112"), ("111", "1111"),
}
BINWORD_EDGES_4 = {
    ("e", "1"),
    ("1", "2"), ("1", "11"),
    ("2", "3"), ("2", "21"), ("2", "12"),
    ("11", "12"), ("11", "111"), ("11", "21"),
    ("3", "4"), ("3", "31"), ("3", "13"), ("3", "22"),
    ("21", "31"), ("21", "22"), ("21", "211"), ("21", "121"),
    ("12", "22"), ("12", "13"), ("12", "121"), ("12", "112"),
    ("111", "211"), ("111", "121"), ("111", "112"), ("111", "1111"),
}


def edge_set(graph_name, max_rank):
    g = make_graph(graph_name)
    edges = set()
    for n in range(max_rank):
        for v in g.vertices_at(n):
            for u, _ in g.up_edges(v):
                edges.add((g.label(v).replace(",", ""), g.label(u).replace(",", "")))
    return edges


def test_make_graph_vertices():
    assert make_graph("lifted-binary-tree").vertices_at(3) == ((3,), (2, 1), (1, 2), (1, 1, 1))
    lattice = make_graph("tree-lattice")
    assert [len(lattice.vertices_at(n)) for n in range(5)] == [1, 1, 2, 5, 14]
    binword = make_graph("binword")
    ups = {u for u, _ in binword.up_covers((2,))}
    assert ups == {(3,), (2, 1), (1, 2)}


def test_make_graph_rejects_unknown():
    with pytest.raises(ValueError):
        make_graph("young-lattice")


def test_graph_edges_match_the_drawings():
    assert edge_set("lifted-binary-tree", 4) == LIFTED_EDGES_4
    assert edge_set("binword", 4) == BINWORD_EDGES_4


def test_up_matrix_examples():
    lifted = make_graph("lifted-binary-tree")
    assert up_matrix(lifted, 0).to_dense() == [[1]]
    u1 = up_matrix(lifted, 1)
    assert u1.to_dense() == [[1], [1]]
    assert u1.row_vertices == ((2,), (1, 1))
    binword = make_graph("binword")
    u2 = up_matrix(binword, 2)
    assert all(w in (0, 1) for row in u2.to_dense() for w in row)
    # row sums count how many rank-2 vertices each rank-3 vertex covers
    in_degrees = [sum(row) for row in u2.to_dense()]
    assert in_degrees == [
        sum(1 for c in binword.vertices_at(2) if v in {u for u, _ in binword.up_covers(c)})
        for v in binword.vertices_at(3)
    ]


def test_down_matrix_is_transpose_of_up():
    g = make_graph("binword")
    for n in range(4):
        assert down_matrix(g, n + 1).to_dense() == [
            list(col)
            for col in zip(*up_matrix(g, n).to_dense())
        ]
    with pytest.raises(ValueError):
        down_matrix(g, 0)


def test_matmul_rejects_mismatched_shapes():
    lifted = make_graph("lifted-binary-tree")
    with pytest.raises(ValueError):
        matmul(up_matrix(lifted, 3), up_matrix(lifted, 1))


def test_duality_composition_pair():
    report = check_duality(make_graph("lifted-binary-tree"), make_graph("binword"), 6)
    assert report.is_dual
    assert report.rank_verdicts == (True,) * 7
    assert report.counterexample is None
    assert report.r_sequence == (1,) * 7


def test_duality_tree_pair():
    report = check_duality(
        make_graph("tree-lattice"), make_graph("reflected-bracket-tree"), 6
    )
    assert report.is_dual


def test_duality_order_does_not_matter():
    assert check_duality(make_graph("binword"), make_graph("lifted-binary-tree"), 5).is_dual
    assert check_duality(
        make_graph("reflected-bracket-tree"), make_graph("tree-lattice"), 5
    ).is_dual


def test_lifted_is_not_self_dual():
    report = check_duality(
        make_graph("lifted-binary-tree"), make_graph("lifted-binary-tree"), 3
    )
    assert not report.is_dual
    ce = report.counterexample
    assert ce is not None
    assert ce.got != ce.expected
    assert ce.rank == 2 and ce.row_label != ce.col_label


def test_wrong_r_fails():
    report = check_duality(
        make_graph("lifted-binary-tree"), make_graph("binword"), 3, r_sequence=(2, 2, 2, 2)
    )
    assert not report.is_dual


def test_duality_rejects_mismatched_vertex_sets():
    with pytest.raises(ValueError):
        check_duality(make_graph("lifted-binary-tree"), make_graph("tree-lattice"), 2)


def test_chain_counts_and_paths():
    lifted = make_graph("lifted-binary-tree")
    counts = chain_counts(lifted, 3)
    # the lifted binary tree is a tree: one chain to every vertex
    assert all(c == 1 for c in counts.values())
    pair = [make_graph(name) for name in DUAL_PAIRS["compositions"]]
    assert path_count_identity(*pair, 3) == (6, 6)
    assert path_count_identity(*pair, 0) == (1, 1)
    tree_pair = [make_graph(name) for name in DUAL_PAIRS["trees"]]
    assert path_count_identity(*tree_pair, 6) == (720, 720)
    for n in range(7):
        assert path_count_identity(*pair, n) == (math.factorial(n),) * 2


def test_export_dot_lifted_rank2():
    expected = (
        'digraph "lifted-binary-tree" {\n'
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        '  { rank=same; "e"; }\n'
        '  { rank=same; "1"; }\n'
        '  { rank=same; "2"; "1,1"; }\n'
        '  "e" -> "1";\n'
        '  "1" -> "2";\n'
        '  "1" -> "1,1";\n'
        "}\n"
    )
    assert export_dot(make_graph("lifted-binary-tree"), 2) == expected


def test_export_dot_rank0():
    text = export_dot(make_graph("tree-lattice"), 0)
    assert '"-"' in text and "->" not in text


def test_export_json_counts():
    payload = json.loads(export_json(make_graph("reflected-bracket-tree"), 4))
    assert [len(level["vertices"]) for level in payload["ranks"]] == [1, 1, 2, 5, 14]
    assert payload["ranks"][-1]["edges"] == []
    # every vertex of rank n+1 has exactly one incoming edge
    for level in payload["ranks"][:-1]:
        targets = [edge[1] for edge in level["edges"]]
        assert sorted(targets) == sorted(set(targets))
    with pytest.raises(ValueError):
        export_graph(make_graph("binword"), 2, "svg")


def test_export_is_deterministic():
    a = export_json(make_graph("binword"), 4)
    b = export_json(make_graph("binword"), 4)
    assert a == b
    assert export_dot(make_graph("tree-lattice"), 3) == export_dot(make_graph("tree-lattice"), 3)


def test_rank_guard():
    with pytest.raises(RankGuardError):
        make_graph("lifted-binary-tree").vertices_at(13)
    with pytest.raises(RankGuardError):
        make_graph("tree-lattice").vertices_at(11)
    # the guard caps the duality check as well
    with pytest.raises(RankGuardError):
        check_duality(make_graph("tree-lattice"), make_graph("reflected-bracket-tree"), 10)
