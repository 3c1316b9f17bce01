"""
Binary trees, binary search tree insertion, and the cover relations of the
two graded graphs on trees.

Unlabeled trees are nested pairs: None is the empty tree, (left, right) a
node.  Labeled trees are triples (label, left, right).  Both are immutable
and hashable, so subtrees can be shared freely.

The "rightmost node" of a tree is the end of the path root -> right ->
right -> ...; when the root has no right child the root itself is
rightmost.  Deleting it splices its left subtree into its place, which is
the single down-edge of the reflected bracket tree.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

Tree = Optional[tuple]          # None | (Tree, Tree)
LabeledTree = Optional[tuple]   # None | (int, Tree, Tree)


@lru_cache(maxsize=None)
def node_count(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + node_count(t[0]) + node_count(t[1])


@lru_cache(maxsize=None)
def trees_of(n: int) -> tuple[Tree, ...]:
    """
    All Catalan(n) trees with n nodes, in the canonical drawing order:
    left subtree size descending, then recursively.

    >>> trees_of(2)
    (((None, None), None), (None, (None, None)))
    """
    if n < 0:
        raise ValueError("rank must be >= 0")
    if n == 0:
        return (None,)
    out = []
    for k in range(n - 1, -1, -1):
        for left in trees_of(k):
            for right in trees_of(n - 1 - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def lattice_covers(t: Tree) -> frozenset[Tree]:
    """
    Up-neighbours in the lattice of binary trees: one node attached at any
    of the rank+1 empty child slots.

    >>> lattice_covers(None) == frozenset({(None, None)})
    True
    >>> len(lattice_covers(((None, None), None)))
    3
    """
    if t is None:
        return frozenset({(None, None)})
    left, right = t
    grown = {(lc, right) for lc in lattice_covers(left)}
    grown |= {(left, rc) for rc in lattice_covers(right)}
    return frozenset(grown)


@lru_cache(maxsize=None)
def delete_rightmost(t: Tree) -> Tree:
    """
    Remove the rightmost node and splice its left subtree into its place.

    >>> delete_rightmost((None, None)) is None
    True
    >>> delete_rightmost(((None, None), None))
    (None, None)
    """
    if t is None:
        raise ValueError("the empty tree has no node to delete")
    left, right = t
    return left if right is None else (left, delete_rightmost(right))


def right_spine_length(t: Tree) -> int:
    k = 0
    while t is not None:
        k += 1
        t = t[1]
    return k


@lru_cache(maxsize=None)
def reflected_bracket_covers(t: Tree) -> frozenset[Tree]:
    """
    Up-neighbours in the reflected bracket tree: every tree whose rightmost
    deletion gives back t.  A new node is inserted at one of the positions
    along the right spine, taking the subtree it displaces (a right-spine
    suffix) as its left subtree.

    >>> reflected_bracket_covers(None) == frozenset({(None, None)})
    True
    >>> reflected_bracket_covers((None, None)) == frozenset(trees_of(2))
    True
    """
    spine = []
    cur = t
    while cur is not None:
        spine.append(cur)
        cur = cur[1]
    covers = []
    for k in range(len(spine) + 1):
        displaced = spine[k] if k < len(spine) else None
        z: Tree = (displaced, None)
        for j in range(k - 1, -1, -1):
            z = (spine[j][0], z)
        covers.append(z)
    return frozenset(covers)


def extend_right_spine(t: Tree) -> Tree:
    """Add one node as the right child of the rightmost node (None -> leaf)."""
    if t is None:
        return (None, None)
    left, right = t
    return (left, extend_right_spine(right)) if right is not None else (left, (None, None))


def push_down_rightmost(t: Tree) -> Tree:
    """
    Insert one node in place of the rightmost node, pushing the displaced
    node (with its left subtree) down as the new node's left child.  This
    is the unique common cover of t in both tree graphs other than
    :func:`extend_right_spine`, whenever one exists.
    """
    if t is None:
        raise ValueError("the empty tree has no rightmost node")
    left, right = t
    if right is None:
        return (t, None)
    return (left, push_down_rightmost(right))


# -- text and JSON forms ---------------------------------------------------

def tree_to_text(t: Tree) -> str:
    """
    "-" for the empty tree, "(L,R)" for a node.

    >>> tree_to_text(((None, None), None))
    '((-,-),-)'
    """
    if t is None:
        return "-"
    return f"({tree_to_text(t[0])},{tree_to_text(t[1])})"


def tree_from_text(s: str) -> Tree:
    """Parse the output of :func:`tree_to_text`."""
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos < len(s) and s[pos] == "-":
            pos += 1
            return None
        if pos >= len(s) or s[pos] != "(":
            raise ValueError(f"bad tree text {s!r} at index {pos}")
        pos += 1
        left = parse()
        if pos >= len(s) or s[pos] != ",":
            raise ValueError(f"bad tree text {s!r} at index {pos}")
        pos += 1
        right = parse()
        if pos >= len(s) or s[pos] != ")":
            raise ValueError(f"bad tree text {s!r} at index {pos}")
        pos += 1
        return (left, right)

    t = parse()
    if pos != len(s):
        raise ValueError(f"trailing characters in tree text {s!r}")
    return t


def labeled_tree_to_text(t: LabeledTree) -> str:
    """
    "-" for the empty tree, "(L a R)" for a node labeled a.

    >>> labeled_tree_to_text((3, (1, None, None), None))
    '((- 1 -) 3 -)'
    """
    if t is None:
        return "-"
    label, left, right = t
    return f"({labeled_tree_to_text(left)} {label} {labeled_tree_to_text(right)})"


def labeled_tree_to_json_obj(t: LabeledTree):
    if t is None:
        return None
    label, left, right = t
    return {
        "label": label,
        "left": labeled_tree_to_json_obj(left),
        "right": labeled_tree_to_json_obj(right),
    }


def labeled_tree_from_json_obj(obj) -> LabeledTree:
    if obj is None:
        return None
    return (
        obj["label"],
        labeled_tree_from_json_obj(obj["left"]),
        labeled_tree_from_json_obj(obj["right"]),
    )


def shape(t: LabeledTree) -> Tree:
    """Forget the labels."""
    if t is None:
        return None
    _, left, right = t
    return (shape(left), shape(right))


# -- insertion -------------------------------------------------------------

def bst_insert(word: Sequence[int], reading: str = "left-to-right") -> tuple[LabeledTree, LabeledTree]:
    """
    Insert the letters of a word (distinct integers) as leaves of a binary
    search tree, reading either left to right (classical) or right to left
    (sylvester).  Returns the insertion tree and the recording tree, which
    carries at each node the position in the word of the letter whose
    insertion created it.  Left-to-right recording trees are increasing,
    right-to-left ones decreasing.

    >>> p, q = bst_insert((1, 2, 3))
    >>> labeled_tree_to_text(p)
    '(- 1 (- 2 (- 3 -)))'
    >>> p == q
    True
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError("letters must be distinct")
    if reading == "left-to-right":
        items = list(enumerate(word, 1))
    elif reading == "right-to-left":
        items = [(i, word[i - 1]) for i in range(len(word), 0, -1)]
    else:
        raise ValueError(f"unknown reading {reading!r}")

    insertion: LabeledTree = None
    recording: LabeledTree = None
    for pos, a in items:
        path = []
        cur = insertion
        while cur is not None:
            label, left, right = cur
            go_right = a > label
            path.append(go_right)
            cur = right if go_right else left
        insertion = _graft(insertion, path, 0, (a, None, None))
        recording = _graft(recording, path, 0, (pos, None, None))
    return insertion, recording


def _graft(t: LabeledTree, path: list[bool], k: int, new: LabeledTree) -> LabeledTree:
    if t is None:
        if k != len(path):
            raise ValueError("insertion path leaves the tree")
        return new
    label, left, right = t
    if path[k]:
        return (label, left, _graft(right, path, k + 1, new))
    return (label, _graft(left, path, k + 1, new), right)


# -- labeled-tree invariants -----------------------------------------------

def is_search_tree(t: LabeledTree, lo: float = float("-inf"), hi: float = float("inf")) -> bool:
    """Left subtree labels < node label < right subtree labels, recursively."""
    if t is None:
        return True
    label, left, right = t
    if not lo < label < hi:
        return False
    return is_search_tree(left, lo, label) and is_search_tree(right, label, hi)


def is_increasing_tree(t: LabeledTree) -> bool:
    """Each node's label is smaller than every label in its subtrees."""
    if t is None:
        return True
    label, left, right = t
    for child in (left, right):
        if child is not None and child[0] < label:
            return False
    return is_increasing_tree(left) and is_increasing_tree(right)


def is_decreasing_tree(t: LabeledTree) -> bool:
    """Each node's label is greater than every label in its subtrees."""
    if t is None:
        return True
    label, left, right = t
    for child in (left, right):
        if child is not None and child[0] > label:
            return False
    return is_decreasing_tree(left) and is_decreasing_tree(right)


# -- bracketed expressions -------------------------------------------------

def tree_to_bracketed_expression(t: Tree) -> str:
    """
    The fully parenthesized non-associative product encoding a tree.  The
    tree is completed with leaves, the n+1 leaves are numbered in
    right-to-left infix order, and each internal node multiplies its right
    operand by its left one; composite operands get brackets, the outermost
    product does not.

    >>> tree_to_bracketed_expression(None)
    'x1'
    >>> tree_to_bracketed_expression((None, None))
    'x1x2'
    """
    counter = iter(range(1, node_count(t) + 2))

    def go(node: Tree) -> tuple[str, bool]:
        if node is None:
            return f"x{next(counter)}", True
        left, right = node
        rs, r_atom = go(right)
        ls, l_atom = go(left)
        return (rs if r_atom else f"({rs})") + (ls if l_atom else f"({ls})"), False

    return go(t)[0]
