"""Boundary-path words of ideals in height-1 rc-posets.

Two word maps live here.  `path_word` reads the NE/SE path that separates
an ideal from the rest of the poset; promotion acts on these words.
`boundary_word` first moves the ideal through the explicit conjugator D,
which turns rowmotion into word rotation; it is the map the CLI exposes
and the one whose rotation equivariance the tests pin down.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NoValidPath, NotHeightOne
from .poset import is_order_ideal
from .toggles import RcPoset, ToggleWord, apply_word, conjugator_word, inverse_word

BinaryWord = str


def rotate_word(w: BinaryWord) -> BinaryWord:
    """Cyclic rotation sending position i to i+1."""
    return w[-1] + w[:-1] if w else w


def _column_chains(
    positions: Sequence[tuple[int, int]], elements: Sequence[int]
) -> list[tuple[int, list[int]]]:
    """Group elements into columns, each sorted bottom-up; validate the shape."""
    cols: dict[int, list[int]] = {}
    for p in elements:
        cols.setdefault(positions[p][0], []).append(p)
    out = []
    for x in sorted(cols):
        chain = sorted(cols[x], key=lambda p: positions[p][1])
        ys = [positions[p][1] for p in chain]
        if any(b - a != 2 for a, b in zip(ys, ys[1:])):
            raise NoValidPath(f"column {x} is not a contiguous chain of positions")
        out.append((x, chain))
    xs = [x for x, _ in out]
    if any(b - a != 1 for a, b in zip(xs, xs[1:])):
        raise NoValidPath("element columns are not contiguous")
    return out


def _profile(
    positions: Sequence[tuple[int, int]],
    columns: list[tuple[int, list[int]]],
    ideal: int,
) -> list[int]:
    """Path ordinate over each element column: one above the ideal's stack."""
    heights = []
    for _, chain in columns:
        count = sum(1 for p in chain if ideal >> p & 1)
        if count and not all(ideal >> p & 1 for p in chain[:count]):
            raise NoValidPath("ideal does not fill its columns bottom-up")
        heights.append(positions[chain[0]][1] - 1 + 2 * count)
    return heights


def _steps(seq: list[int]) -> str:
    bits = []
    for a, b in zip(seq, seq[1:]):
        if b - a == 1:
            bits.append("1")
        elif b - a == -1:
            bits.append("0")
        else:
            raise NoValidPath(f"path step {a}->{b} is not +-1")
    return "".join(bits)


def path_word(rc: RcPoset, ideal: int) -> BinaryWord:
    """The NE/SE word of the path separating the ideal; promotion-side map."""
    if rc.height != 1:
        raise NotHeightOne(f"{rc.family} has height {rc.height}")
    columns = _column_chains(rc.positions, range(rc.poset.n))
    heights = _profile(rc.positions, columns, ideal)
    west = rc.positions[columns[0][1][0]][1]  # ordinate of the W corner element
    if rc.mirror_word:
        w = _steps([west] + heights)
        return w + "".join("1" if c == "0" else "0" for c in w)
    if rc.open_east:
        return rc.pad_left + _steps([west] + heights) + rc.pad_right
    east = rc.positions[columns[-1][1][0]][1]
    return rc.pad_left + _steps([west] + heights + [east]) + rc.pad_right


def path_word_to_ideal(rc: RcPoset, word: BinaryWord) -> int:
    """Inverse of path_word; raises NoValidPath on words outside the family."""
    if rc.height != 1:
        raise NotHeightOne(f"{rc.family} has height {rc.height}")
    columns = _column_chains(rc.positions, range(rc.poset.n))
    if rc.mirror_word:
        half = len(word) // 2
        w, tail = word[:half], word[half:]
        if any(a == b for a, b in zip(w, tail)) or len(word) % 2:
            raise NoValidPath("word is not of the complement form w(1-w)")
    else:
        if not word.startswith(rc.pad_left) or (rc.pad_right and not word.endswith(rc.pad_right)):
            raise NoValidPath(f"word lacks the forced bits of {rc.family}")
        w = word[len(rc.pad_left): len(word) - len(rc.pad_right)]
    expected = len(columns) + (1 if not (rc.mirror_word or rc.open_east) else 0)
    if len(w) != expected:
        raise NoValidPath(f"expected {expected} free steps, got {len(w)}")
    y = rc.positions[columns[0][1][0]][1]
    ideal = 0
    for bit, (x, chain) in zip(w, columns):
        y = y + 1 if bit == "1" else y - 1
        base = rc.positions[chain[0]][1] - 1
        count, rem = divmod(y - base, 2)
        if rem or not 0 <= count <= len(chain):
            raise NoValidPath(f"path height {y} impossible at column {x}")
        for p in chain[:count]:
            ideal |= 1 << p
    if not (rc.mirror_word or rc.open_east):
        east = rc.positions[columns[-1][1][0]][1]
        final = y + 1 if w[-1] == "1" else y - 1
        if final != east:
            raise NoValidPath("path does not meet the east corner")
    if not is_order_ideal(rc.poset, ideal):
        raise NoValidPath("path does not cut out an order ideal")
    return ideal


def boundary_word(rc: RcPoset, ideal: int, conjugator: ToggleWord | None = None) -> BinaryWord:
    """Rotation-equivariant word of an ideal: rowmotion becomes rotation."""
    if conjugator is None:
        conjugator = conjugator_word(rc)
    return path_word(rc, apply_word(rc.poset, conjugator, ideal))


def word_to_ideal(rc: RcPoset, word: BinaryWord, conjugator: ToggleWord | None = None) -> int:
    """Inverse of boundary_word."""
    if conjugator is None:
        conjugator = conjugator_word(rc)
    return apply_word(rc.poset, inverse_word(conjugator), path_word_to_ideal(rc, word))


def halfsquare_word(rc: RcPoset, ideal: int, conjugator: ToggleWord | None = None) -> BinaryWord:
    """Boundary word of a half-square ideal, of the form w(1-w)."""
    assert rc.mirror_word, "halfsquare_word needs the half-square family"
    return boundary_word(rc, ideal, conjugator)


def layer_path_word(rc: RcPoset, elements: Sequence[int], ideal: int) -> BinaryWord:
    """Path word of one layer of a layered rc-poset (used for box posets)."""
    columns = _column_chains(rc.positions, elements)
    heights = _profile(rc.positions, columns, ideal)
    west = rc.positions[columns[0][1][0]][1]
    east = rc.positions[columns[-1][1][0]][1]
    return _steps([west] + heights + [east])


def layer_word_to_members(rc: RcPoset, elements: Sequence[int], word: BinaryWord) -> int:
    """Members of one layer selected by a layer path word."""
    columns = _column_chains(rc.positions, elements)
    y = rc.positions[columns[0][1][0]][1]
    members = 0
    for bit, (x, chain) in zip(word, columns):
        y = y + 1 if bit == "1" else y - 1
        base = rc.positions[chain[0]][1] - 1
        count, rem = divmod(y - base, 2)
        if rem or not 0 <= count <= len(chain):
            raise NoValidPath(f"path height {y} impossible at column {x}")
        for p in chain[:count]:
            members |= 1 << p
    return members
