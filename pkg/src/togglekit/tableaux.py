"""Skew standard Young tableaux and promotion by adjacent swaps."""

from __future__ import annotations

from dataclasses import dataclass

from .families import family_params
from .toggles import RcPoset
from .words import path_word, path_word_to_ideal


@dataclass(frozen=True, order=True)
class SkewTableau:
    """A standard filling of a skew shape.

    Row r occupies columns offsets[r]+1 .. offsets[r]+len(rows[r]); the
    offsets encode the skew holes.  Rows and columns increase.
    """

    rows: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.rows) == len(self.offsets)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def position(self, value: int) -> tuple[int, int]:
        """(row, column) of a value, 1-based columns in the ambient grid."""
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if v == value:
                    return r, self.offsets[r] + c + 1
        raise ValueError(f"value {value} not in tableau")

    def row_word(self) -> str:
        """Bit i is 1 when value i+1 sits in the first row."""
        first = set(self.rows[0])
        return "".join("1" if v in first else "0" for v in range(1, self.size + 1))

    def is_standard(self) -> bool:
        seen = sorted(v for row in self.rows for v in row)
        if seen != list(range(1, self.size + 1)):
            return False
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        cols: dict[int, list[tuple[int, int]]] = {}
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                cols.setdefault(self.offsets[r] + c + 1, []).append((r, v))
        for entries in cols.values():
            entries.sort()
            if any(a >= b for (_, a), (_, b) in zip(entries, entries[1:])):
                return False
        return True

    def __str__(self) -> str:
        base = min(self.offsets)
        parts = []
        for r, row in enumerate(self.rows):
            pad = ["."] * (self.offsets[r] - base)
            parts.append(" ".join(pad + [str(v) for v in row]))
        return "/".join(parts)


def _adjacent(t: SkewTableau, i: int) -> bool:
    """Do values i and i+1 occupy boxes in a covering relation?"""
    (r1, c1), (r2, c2) = t.position(i), t.position(i + 1)
    return (r1 == r2 and abs(c1 - c2) == 1) or (c1 == c2 and abs(r1 - r2) == 1)


def _swap(t: SkewTableau, i: int) -> SkewTableau:
    rows = [list(r) for r in t.rows]
    for row in rows:
        for c, v in enumerate(row):
            if v == i:
                row[c] = i + 1
            elif v == i + 1:
                row[c] = i
    return SkewTableau(tuple(tuple(r) for r in rows), t.offsets)


def syt_promotion(t: SkewTableau) -> SkewTableau:
    """Promotion: swap i, i+1 for i = 1..N-1 whenever they are not adjacent."""
    for i in range(1, t.size):
        if not _adjacent(t, i):
            t = _swap(t, i)
    return t


def _interior_shape(rc: RcPoset) -> tuple[int, int, int]:
    tag, params = family_params(rc)
    if tag == "interior":
        return tuple(params)  # type: ignore[return-value]
    if tag == "product" and len(params) == 2:
        n, k = params
        return n, k, k  # [n] x [k] is the interior of two disjoint rows
    raise ValueError(f"{rc.family} has no two-row tableau model")


def tableau_from_word(rc: RcPoset, word: str) -> SkewTableau:
    """Value i goes to row 1 exactly when step i of the word is northeast."""
    n, m, k = _interior_shape(rc)
    row1 = tuple(i + 1 for i, c in enumerate(word) if c == "1")
    row2 = tuple(i + 1 for i, c in enumerate(word) if c == "0")
    assert len(row1) == n and len(row2) == m
    return SkewTableau((row1, row2), (k + 1, 0))


def ideal_to_syt(rc: RcPoset, ideal: int) -> SkewTableau:
    """Equivariant bijection: promotion on ideals becomes SYT promotion."""
    return tableau_from_word(rc, path_word(rc, ideal))


def syt_to_ideal(rc: RcPoset, t: SkewTableau) -> int:
    return path_word_to_ideal(rc, t.row_word())


def enumerate_syt(rc: RcPoset) -> list[SkewTableau]:
    """All SYT of the family's two-row shape, in ideal order."""
    from .poset import enumerate_ideals

    return [ideal_to_syt(rc, ideal) for ideal in enumerate_ideals(rc.poset)]


def enumerate_shape_syt(
    row_lengths: list[int], offsets: list[int] | None = None
) -> list[SkewTableau]:
    """All standard fillings of an arbitrary (skew) shape, sorted."""
    if offsets is None:
        offsets = [0] * len(row_lengths)
    boxes = [
        (r, offsets[r] + c + 1) for r in range(len(row_lengths)) for c in range(row_lengths[r])
    ]
    total = len(boxes)
    filling: dict[tuple[int, int], int] = {}
    out: list[SkewTableau] = []

    def ready(box: tuple[int, int]) -> bool:
        r, c = box
        left = (r, c - 1)
        up = (r - 1, c)
        for prev in (left, up):
            if prev in box_set and prev not in filling:
                return False
        return True

    box_set = set(boxes)

    def visit(v: int) -> None:
        if v > total:
            rows = tuple(
                tuple(filling[r, offsets[r] + c + 1] for c in range(row_lengths[r]))
                for r in range(len(row_lengths))
            )
            out.append(SkewTableau(rows, tuple(offsets)))
            return
        for box in boxes:
            if box not in filling and ready(box):
                filling[box] = v
                visit(v + 1)
                del filling[box]

    visit(1)
    return sorted(out)
