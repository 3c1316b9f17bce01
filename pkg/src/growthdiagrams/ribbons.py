"""
Quasi-ribbon and ribbon tableaux and the hypoplactic insertion.

A tableau is a ribbon-shaped filling: row i+1 physically starts in the
column of the last cell of row i, so the layout is determined by the row
lengths alone and only the labels are stored.  Rows increase strictly left
to right in both kinds; in the shared overlap column a quasi-ribbon
increases downwards and a ribbon increases upwards.

Hypoplactic insertion reads a word of distinct letters left to right.  To
insert a, compare it with the last letter z of the last row: if a > z it
is appended there; otherwise a new cell labeled a is placed just right of
the last entry y <= a in reading order (or in front of everything when no
such entry exists) and the remainder of the tableau is shifted below the
new cell.  The recording tableau places the step number at the reading
position the new cell occupied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permutations import Permutation, inverse, validate_permutation

Composition = tuple[int, ...]


@dataclass(frozen=True)
class RibbonShapedTableau:
    """Common layout and checks; use the two concrete subclasses."""

    rows: tuple[tuple[int, ...], ...]

    #: True when the overlap column must increase downwards (quasi-ribbon).
    increases_down_columns = True

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        self.validate()

    @property
    def shape(self) -> Composition:
        return tuple(len(row) for row in self.rows)

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    def reading(self) -> tuple[int, ...]:
        """Labels left to right, top to bottom."""
        return tuple(v for row in self.rows for v in row)

    def column_offsets(self) -> tuple[int, ...]:
        offsets = [0]
        for row in self.rows[:-1]:
            offsets.append(offsets[-1] + len(row) - 1)
        return tuple(offsets) if self.rows else ()

    def is_standard(self) -> bool:
        return sorted(self.reading()) == list(range(1, self.n + 1))

    def validate(self) -> None:
        seen = set()
        for row in self.rows:
            if not row:
                raise ValueError("empty row in tableau")
            for v in row:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"labels must be positive integers, got {v!r}")
                if v in seen:
                    raise ValueError(f"duplicate label {v}")
                seen.add(v)
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            # shared column: last cell of the upper row sits above the
            # first cell of the lower row
            if self.increases_down_columns and not lower[0] > upper[-1]:
                raise ValueError(f"column must increase downwards: {upper[-1]} above {lower[0]}")
            if not self.increases_down_columns and not lower[0] < upper[-1]:
                raise ValueError(f"column must increase upwards: {upper[-1]} above {lower[0]}")

    def to_json_obj(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}


class QuasiRibbonTableau(RibbonShapedTableau):
    increases_down_columns = True


class RibbonTableau(RibbonShapedTableau):
    increases_down_columns = False


def insert_letter(t: QuasiRibbonTableau, a: int) -> tuple[QuasiRibbonTableau, int]:
    """
    Hypoplactic insertion of one letter.  Returns the new tableau and the
    1-based reading position of the cell the letter created.

    >>> t, pos = insert_letter(QuasiRibbonTableau(((1, 3), (4, 5))), 6)
    >>> t.rows, pos
    (((1, 3), (4, 5, 6)), 5)
    >>> insert_letter(QuasiRibbonTableau(((2, 3),)), 1)[0].rows
    ((1,), (2, 3))
    """
    rows = t.rows
    if a in t.reading():
        raise ValueError(f"letter {a} already present")
    if not rows:
        return QuasiRibbonTableau(((a,),)), 1
    if a > rows[-1][-1]:
        return QuasiRibbonTableau(rows[:-1] + (rows[-1] + (a,),)), t.n + 1
    last_le = None  # (row, column, reading index) of the last entry <= a
    idx = 0
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v <= a:
                last_le = (i, j, idx)
            idx += 1
    if last_le is None:
        # a precedes everything: it becomes a new first cell and the whole
        # tableau shifts below it
        return QuasiRibbonTableau(((a,),) + rows), 1
    i, j, idx = last_le
    head = rows[i][: j + 1] + (a,)
    tail = rows[i][j + 1 :]
    new_rows = rows[:i] + (head,) + ((tail,) if tail else ()) + rows[i + 1 :]
    return QuasiRibbonTableau(new_rows), idx + 2


def hypoplactic_insert(word: Sequence[int]) -> tuple[QuasiRibbonTableau, RibbonTableau]:
    """
    Insert a word of distinct letters; return the insertion tableau P,
    relabeled canonically so that its reading word is 1..n, and the
    recording tableau Q of the same shape.

    >>> p, q = hypoplactic_insert((4, 1, 5, 3, 6, 2))
    >>> p.rows
    ((1, 2), (3,), (4, 5, 6))
    >>> q.rows
    ((2, 6), (4,), (1, 3, 5))
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError("letters must be distinct")
    p = QuasiRibbonTableau(())
    q_reading: list[int] = []
    for step, a in enumerate(word, 1):
        p, pos = insert_letter(p, a)
        q_reading.insert(pos - 1, step)
    rank = {v: i for i, v in enumerate(sorted(word), 1)}
    p_canonical = QuasiRibbonTableau(tuple(tuple(rank[v] for v in row) for row in p.rows))
    q = RibbonTableau(rows_from_reading(q_reading, p.shape))
    return p_canonical, q


def rows_from_reading(reading: Sequence[int], shape: Composition) -> tuple[tuple[int, ...], ...]:
    """Cut a reading sequence into rows of the given lengths."""
    if sum(shape) != len(reading):
        raise ValueError(f"shape {shape} does not hold {len(reading)} cells")
    rows = []
    pos = 0
    for part in shape:
        rows.append(tuple(reading[pos : pos + part]))
        pos += part
    return tuple(rows)


def shadow_lines(p: Permutation) -> tuple[QuasiRibbonTableau, RibbonTableau]:
    """
    Geometric construction of the same pair of tableaux.  Scan the rows of
    the permutation matrix bottom to top and join the mark of value v to
    the mark of v+1 whenever the latter lies strictly to the right; each
    broken line becomes one row (first line on top).  P reads the values
    on the lines, Q the positions.

    >>> p, q = shadow_lines((4, 1, 5, 3, 6, 2))
    >>> p.rows, q.rows
    (((1, 2), (3,), (4, 5, 6)), ((2, 6), (4,), (1, 3, 5)))
    """
    p = validate_permutation(p)
    inv = inverse(p)
    lines: list[list[int]] = []
    for v in range(1, len(p) + 1):
        if lines and inv[v - 1] > inv[v - 2]:
            lines[-1].append(v)
        else:
            lines.append([v])
    p_rows = tuple(tuple(line) for line in lines)
    q_rows = tuple(tuple(inv[v - 1] for v in line) for line in lines)
    return QuasiRibbonTableau(p_rows), RibbonTableau(q_rows)


def render_tableau(t: RibbonShapedTableau) -> str:
    """ASCII picture with the ribbon offsets (row i+1 starts under the last
    cell of row i)."""
    if not t.rows:
        return "(empty)"
    width = max(len(str(v)) for row in t.rows for v in row)
    lines = []
    for offset, row in zip(t.column_offsets(), t.rows):
        cells = " ".join(f"{v:>{width}}" for v in row)
        lines.append(" " * (offset * (width + 1)) + cells)
    return "\n".join(lines)
