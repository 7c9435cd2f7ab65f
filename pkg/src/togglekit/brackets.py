"""Boundary path matrices of box posets, bracket words, and psi.

Bracket words use the alphabet ( ) . X, where X is the close-then-open
glyph: it counts as one ')' immediately followed by one '(' in every
balance computation.
"""

from __future__ import annotations

from .errors import InvalidMatrix, NotTwoLayers, Unbalanced
from .families import family_params
from .toggles import RcPoset
from .words import layer_path_word, layer_word_to_members

Bpm = tuple[tuple[int, ...], ...]
SetPartition = tuple[tuple[int, ...], ...]

COLUMN_GLYPH = {(1, 0): "(", (0, 1): ")", (1, 1): "X", (0, 0): "."}


def box_dims(rc: RcPoset) -> tuple[int, int, int]:
    tag, params = family_params(rc)
    if tag != "product" or len(params) != 3:
        raise ValueError(f"{rc.family} is not a product of three chains")
    return tuple(params)  # type: ignore[return-value]


def boundary_path_matrix(rc: RcPoset, ideal: int) -> Bpm:
    """Stack the per-layer boundary words, row i padded by i-1 and ell-i zeros."""
    ell, m, n = box_dims(rc)
    assert rc.layers is not None
    rows = []
    for i, layer in enumerate(rc.layers, start=1):
        word = layer_path_word(rc, layer, ideal)
        assert len(word) == m + n
        rows.append(tuple(int(c) for c in "0" * (i - 1) + word + "0" * (ell - i)))
    return tuple(rows)


def validate_bpm(rows: Bpm, ell: int, m: int, n: int) -> None:
    if len(rows) != ell or any(len(r) != m + n + ell - 1 for r in rows):
        raise InvalidMatrix("wrong shape")
    for i, row in enumerate(rows, start=1):
        if sum(row) != n:
            raise InvalidMatrix(f"row {i} does not sum to {n}")
        if any(row[j] for j in range(i - 1)) or any(row[j] for j in range(m + n + i - 1, len(row))):
            raise InvalidMatrix(f"row {i} has ones in its padding")
    for i in range(ell - 1):
        top = bottom = 0
        for j in range(m + n + ell - 2):
            top += rows[i][j]
            bottom += rows[i + 1][j]
            if top == bottom and rows[i + 1][j + 1] == 1:
                raise InvalidMatrix(f"interleaving fails at rows {i + 1},{i + 2} column {j + 2}")


def bpm_to_ideal(rc: RcPoset, rows: Bpm) -> int:
    ell, m, n = box_dims(rc)
    validate_bpm(rows, ell, m, n)
    assert rc.layers is not None
    ideal = 0
    for i, layer in enumerate(rc.layers, start=1):
        word = "".join(str(b) for b in rows[i - 1][i - 1: i - 1 + m + n])
        ideal |= layer_word_to_members(rc, layer, word)
    return ideal


def bpm_str(rows: Bpm) -> str:
    return "/".join("".join(str(b) for b in row) for row in rows)


def bracket_word(rows: Bpm) -> str:
    """Column-by-column translation of a 2-layer boundary path matrix."""
    if len(rows) != 2:
        raise NotTwoLayers(f"need 2 rows, got {len(rows)}")
    return "".join(COLUMN_GLYPH[(a, b)] for a, b in zip(rows[0], rows[1]))


def bracket_word_to_bpm(word: str) -> Bpm:
    glyph_col = {g: c for c, g in COLUMN_GLYPH.items()}
    try:
        cols = [glyph_col[ch] for ch in word]
    except KeyError as exc:
        raise Unbalanced(f"bad glyph {exc} in {word!r}") from exc
    return tuple(zip(*cols))


def _depths(word: str) -> list[int]:
    """Nesting depth after each glyph, treating X as close-then-open."""
    out = []
    d = 0
    for ch in word:
        if ch == "(":
            d += 1
        elif ch == ")":
            d -= 1
        elif ch == "X":
            if d - 1 < 0:
                raise Unbalanced(f"{word!r} dips below depth 0")
        if d < 0:
            raise Unbalanced(f"{word!r} dips below depth 0")
        out.append(d)
    return out


def is_balanced(word: str) -> bool:
    try:
        depths = _depths(word)
    except Unbalanced:
        return False
    return not depths or depths[-1] == 0


def psi(word: str) -> str:
    """One step of the rotation-like action on balanced bracket words."""
    depths = _depths(word)
    if depths and depths[-1] != 0:
        raise Unbalanced(f"{word!r} is not balanced")
    if not word:
        return word
    head = word[0]
    if head == ".":
        return word[1:] + "."
    if head != "(":
        raise Unbalanced(f"{word!r} starts with an unmatched {head!r}")
    # Positions where the depth returns to 0: the top-level X's inside the
    # leading group, then the ')' that closes it.
    returns = [i for i in range(1, len(word)) if depths[i - 1] == 1 and word[i] in ")X"]
    out = list(word[1:])  # drop the leading '('
    first = returns[0] - 1
    if word[returns[0]] == ")":
        out[first] = "("  # rule 2
    else:
        out[first] = "("  # rule 3: first X opens, the closing paren becomes X
        close = next(i for i in returns if word[i] == ")")
        out[close - 1] = "X"
    return "".join(out) + ")"


def noncrossing_partition(word: str) -> SetPartition:
    """Blocks from the pairing of ( with ), X continuing its current block."""
    if not is_balanced(word):
        raise Unbalanced(f"{word!r} is not balanced")
    blocks: list[list[int]] = []
    stack: list[list[int]] = []
    for i, ch in enumerate(word, start=1):
        if ch == ".":
            blocks.append([i])
        elif ch == "(":
            stack.append([i])
        elif ch == "X":
            stack[-1].append(i)
        else:
            block = stack.pop()
            block.append(i)
            blocks.append(block)
    assert not stack
    return canonical_partition(blocks)


def canonical_partition(blocks: list[list[int]]) -> SetPartition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def rotate_partition(part: SetPartition, points: int) -> SetPartition:
    return canonical_partition([[p % points + 1 for p in b] for b in part])


def partition_is_noncrossing(part: SetPartition) -> bool:
    for bi, b1 in enumerate(part):
        for b2 in part[bi + 1:]:
            for a in b1:
                for c in b1:
                    if any(a < x < c < y for x in b2 for y in b2):
                        return False
    return True


def partition_str(part: SetPartition) -> str:
    return "|".join("{" + ",".join(map(str, b)) + "}" for b in part)
