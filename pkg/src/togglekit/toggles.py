"""The toggle group on rc-posets and a generic orbit engine.

A toggle word is a tuple of element indices applied first-to-last.
Group products of row/column/diagonal toggles act rightmost factor
first; every constructor here emits words already converted to
application order, and the conversion is pinned by tests (rowmotion on a
2-chain, the diagonal identities, the superpromotion orbit tables).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import NotBijective, NotLayered, StateEscaped
from .poset import Poset

ToggleWord = tuple[int, ...]


@dataclass(frozen=True)
class RcPoset:
    """A poset with a position map into integer (column, row) pairs.

    Positions are translated into the first quadrant with min row = 1 and
    rows/columns of equal parity per element.  `pad_left`/`pad_right` are
    forced boundary-word bits outside the element span (used by the type A
    root poset, whose words live on the ambient rectangle), `layers` holds
    per-layer element tuples for layered families, and `root_data` records
    (layer, i, j) for elements that are roots e_i - e_j of some layer.
    """

    poset: Poset
    positions: tuple[tuple[int, int], ...]  # (column, row) per element
    family: str = ""
    pad_left: str = ""
    pad_right: str = ""
    layers: tuple[tuple[int, ...], ...] | None = None
    root_data: tuple[tuple[int, int, int], ...] | None = None
    mirror_word: bool = False  # boundary word continues as its own complement
    open_east: bool = False  # path has no fixed east endpoint (type B fold)

    def __post_init__(self) -> None:
        for (lo, hi) in self.poset.covers:
            cx, cy = self.positions[lo]
            px, py = self.positions[hi]
            if cy != py - 1 or abs(cx - px) != 1:
                raise ValueError(
                    f"cover {lo}<{hi} not diagonally adjacent: {self.positions[lo]} {self.positions[hi]}"
                )
        for x, y in self.positions:
            if (x - y) % 2:
                raise ValueError(f"position ({x},{y}) has mixed parity")

    @property
    def rows(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for p, (x, y) in enumerate(self.positions):
            out.setdefault(y, []).append(p)
        return {y: tuple(sorted(ps, key=lambda p: self.positions[p][0])) for y, ps in out.items()}

    @property
    def columns(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for p, (x, y) in enumerate(self.positions):
            out.setdefault(x, []).append(p)
        return {x: tuple(sorted(ps, key=lambda p: self.positions[p][1])) for x, ps in out.items()}

    @property
    def diagonals(self) -> dict[int, tuple[int, ...]]:
        """Diagonal j holds the elements at positions (2(j-1)+i, i)."""
        shift = min(x - y for x, y in self.positions) if self.positions else 0
        out: dict[int, list[int]] = {}
        for p, (x, y) in enumerate(self.positions):
            j = (x - y - shift) // 2 + 1
            out.setdefault(j, []).append(p)
        return {j: tuple(sorted(ps, key=lambda p: self.positions[p][1])) for j, ps in out.items()}

    @property
    def height(self) -> int:
        counts: dict[tuple[int, int], int] = {}
        for pos in self.positions:
            counts[pos] = counts.get(pos, 0) + 1
        return max(counts.values(), default=0)

    @property
    def n_rows(self) -> int:
        return max((y for _, y in self.positions), default=0)


def normalize_positions(raw: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Translate positions so min row = 1, min column >= 1, parity preserved."""
    if not raw:
        return ()
    dy = 1 - min(y for _, y in raw)
    dx = 1 - min(x for x, _ in raw)
    if (dx - dy) % 2:
        dx += 1
    return tuple((x + dx, y + dy) for x, y in raw)


def toggle(poset: Poset, ideal: int, p: int) -> int:
    """Toggle element p: add if possible, remove if possible, else fix."""
    bit = 1 << p
    if ideal & bit:
        if poset.up_covers[p] & ideal == 0:
            return ideal ^ bit
        return ideal
    if poset.down_covers[p] & ~ideal == 0:
        return ideal | bit
    return ideal


def apply_word(poset: Poset, word: Iterable[int], ideal: int) -> int:
    """Fold toggles over the word in application order."""
    up = poset.up_covers
    down = poset.down_covers
    for p in word:
        bit = 1 << p
        if ideal & bit:
            if up[p] & ideal == 0:
                ideal ^= bit
        elif down[p] & ~ideal == 0:
            ideal |= bit
    return ideal


def toggle_action(rc: RcPoset, word: ToggleWord) -> Callable[[int], int]:
    """A step function on ideal bitmasks for the given toggle word."""
    poset = rc.poset
    return lambda ideal: apply_word(poset, word, ideal)


def inverse_word(word: ToggleWord) -> ToggleWord:
    return tuple(reversed(word))


def word_scanning_rows(rc: RcPoset, row_labels: Sequence[int]) -> ToggleWord:
    """Concatenate the toggles of the given rows, in application order."""
    rows = rc.rows
    out: list[int] = []
    for y in row_labels:
        out.extend(rows.get(y, ()))
    return tuple(out)


def word_scanning_columns(rc: RcPoset, col_labels: Sequence[int]) -> ToggleWord:
    cols = rc.columns
    out: list[int] = []
    for x in col_labels:
        out.extend(cols.get(x, ()))
    return tuple(out)


def rowmotion_word(rc: RcPoset, omega: Sequence[int] | None = None) -> ToggleWord:
    """The word for row_omega; the default omega = 1..n realizes rowmotion.

    omega is given in the source's product order, so the application order
    is its reverse: rowmotion toggles the top row first.
    """
    if omega is None:
        omega = range(1, rc.n_rows + 1)
    return word_scanning_rows(rc, list(reversed(list(omega))))


def promotion_word(rc: RcPoset, nu: Sequence[int] | None = None) -> ToggleWord:
    """The word for pro_nu; the default nu = k..1 scans columns left to right."""
    cols = sorted(rc.columns)
    if nu is None:
        nu = list(reversed(cols))
    return word_scanning_columns(rc, list(reversed(list(nu))))


def diagonal_word(rc: RcPoset, j: int) -> ToggleWord:
    """Toggles of diagonal j, lowest row first in application order."""
    return rc.diagonals[j]


def conjugator_word(rc: RcPoset) -> ToggleWord:
    """The explicit conjugator D with Pro . D = D . Row^-1 pointwise.

    In application order this is the blocks d_1^-1 .. d_i^-1 for
    i = m-1 down to 1, where d_j^-1 reverses the diagonal-j word.
    """
    m = max(rc.diagonals, default=0)
    out: list[int] = []
    for i in range(m - 1, 0, -1):
        for j in range(1, i + 1):
            out.extend(inverse_word(diagonal_word(rc, j)))
    return tuple(out)


def gyration_word(rc: RcPoset) -> ToggleWord:
    """Toggle all odd rows, then all even rows."""
    odd = [y for y in sorted(rc.rows) if y % 2 == 1]
    even = [y for y in sorted(rc.rows) if y % 2 == 0]
    return word_scanning_rows(rc, odd + even)


def layer_promotion_word(rc: RcPoset, layer: Sequence[int]) -> ToggleWord:
    """Column-scan promotion restricted to one layer's elements."""
    by_col: dict[int, list[int]] = {}
    for p in layer:
        x, y = rc.positions[p]
        by_col.setdefault(x, []).append(p)
    out: list[int] = []
    for x in sorted(by_col):
        out.extend(sorted(by_col[x], key=lambda p: rc.positions[p][1]))
    return tuple(out)


def superpromotion_word(rc: RcPoset) -> ToggleWord:
    """Concatenated per-layer promotions on a layered (ASM) poset.

    Layers are promoted deepest first (layer n-1, then n-2, ...), which is
    the composition order that reproduces the published n=4 orbit table.
    """
    if rc.layers is None:
        raise NotLayered(f"family {rc.family!r} has no layer metadata")
    out: list[int] = []
    for layer in reversed(rc.layers):
        out.extend(layer_promotion_word(rc, layer))
    return tuple(out)


@dataclass(frozen=True)
class OrbitPartition:
    state_count: int
    orbits: tuple[tuple[int, Hashable], ...]  # (size, representative), sorted by rep
    order: int
    cycles: tuple[tuple[Hashable, ...], ...] | None = field(default=None, repr=False)

    @property
    def sizes(self) -> list[int]:
        return [s for s, _ in self.orbits]

    def size_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s, _ in self.orbits:
            out[s] = out.get(s, 0) + 1
        return out


def _walk_cycle(step, seed, index, limit):
    cycle = [seed]
    x = step(seed)
    while x != seed:
        if x not in index:
            raise StateEscaped(f"action left the state set at {x!r}")
        cycle.append(x)
        if len(cycle) > limit:
            raise NotBijective("walk exceeded the state count without closing")
        x = step(x)
    return cycle


def orbits(
    step: Callable,
    states: Sequence[Hashable],
    threads: int = 1,
    want_cycles: bool = False,
) -> OrbitPartition:
    """Orbit partition of a bijective step function over the given states.

    Each orbit is reported once, from its canonically least state; the
    output is identical for any thread count.  Raises NotBijective if two
    states map to one and StateEscaped if a step leaves the state set.
    """
    index = {s: i for i, s in enumerate(states)}
    if len(index) != len(states):
        raise ValueError("duplicate states")
    limit = len(states)

    def orbits_from(seeds):
        found = []
        for seed in seeds:
            cycle = [seed]
            x = step(seed)
            owned = True
            while x != seed:
                if x not in index:
                    raise StateEscaped(f"action left the state set at {x!r}")
                if x < seed:
                    owned = False  # the smaller state owns this orbit
                    break
                cycle.append(x)
                if len(cycle) > limit:
                    raise NotBijective("walk exceeded the state count without closing")
                x = step(x)
            if owned:
                found.append(cycle)
        return found

    if threads <= 1:
        cycles = []
        seen: set[Hashable] = set()
        for seed in sorted(states):
            if seed in seen:
                continue
            cycle = _walk_cycle(step, seed, index, limit)
            for s in cycle:
                if s in seen or (s != seed and s < seed):
                    raise NotBijective("two walks reached the same state")
                seen.add(s)
            cycles.append(cycle)
    else:
        ordered = sorted(states)
        chunks = [ordered[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(orbits_from, chunks))
        cycles = [c for part in parts for c in part]
        cycles.sort(key=lambda c: c[0])
        if sum(len(c) for c in cycles) != len(states):
            raise NotBijective("orbit sizes do not sum to the state count")

    pairs = tuple((len(c), c[0]) for c in cycles)
    order = 1
    for size, _ in pairs:
        order = math.lcm(order, size)
    return OrbitPartition(
        state_count=len(states),
        orbits=pairs,
        order=order,
        cycles=tuple(tuple(c) for c in cycles) if want_cycles else None,
    )
