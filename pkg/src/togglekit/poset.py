"""Finite posets, order ideals, linear extensions, and J(P).

Elements are dense indices 0..n-1.  Every subset of elements (ideals
included) is an int bitmask with bit i standing for element i, so set
algebra is single machine-word arithmetic for the posets in scope.
The canonical order on ideals is the numeric order of these masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, StateSpaceTooLarge

DEFAULT_CAP = 1 << 24


@dataclass(frozen=True)
class Poset:
    n: int
    labels: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper), deduplicated, sorted
    down_covers: tuple[int, ...] = field(repr=False)  # bitmask of covers below p
    up_covers: tuple[int, ...] = field(repr=False)  # bitmask of covers above p
    down_closure: tuple[int, ...] = field(repr=False)  # {q : q <= p}, includes p
    up_closure: tuple[int, ...] = field(repr=False)  # {q : q >= p}, includes p
    topo: tuple[int, ...] = field(repr=False)  # some linear extension, as index list

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def minimal_mask(self) -> int:
        return sum(1 << p for p in range(self.n) if not self.down_covers[p])

    @property
    def maximal_mask(self) -> int:
        return sum(1 << p for p in range(self.n) if not self.up_covers[p])

    def leq(self, p: int, q: int) -> bool:
        return bool(self.down_closure[q] >> p & 1)

    def members(self, mask: int) -> tuple[int, ...]:
        return tuple(p for p in range(self.n) if mask >> p & 1)

    def mask_of(self, elements: Iterable[int]) -> int:
        return sum(1 << p for p in set(elements))


def build_poset(
    n: int, covers: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Poset:
    """Build a poset from cover pairs (lower, upper); redundant covers are dropped.

    Raises CycleDetected if the cover digraph has a directed cycle.
    """
    if labels is None:
        labels = tuple(str(p) for p in range(n))
    else:
        labels = tuple(labels)
        assert len(labels) == n
    pairs = set()
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n) or lo == hi:
            raise ValueError(f"bad cover pair ({lo}, {hi}) for n={n}")
        pairs.add((lo, hi))

    above = [[] for _ in range(n)]
    indeg = [0] * n
    for lo, hi in pairs:
        above[lo].append(hi)
        indeg[hi] += 1

    # Kahn topological sort; smallest index first keeps the order deterministic.
    topo: list[int] = []
    ready = sorted(p for p in range(n) if indeg[p] == 0)
    while ready:
        p = ready.pop(0)
        topo.append(p)
        changed = False
        for q in above[p]:
            indeg[q] -= 1
            if indeg[q] == 0:
                ready.append(q)
                changed = True
        if changed:
            ready.sort()
    if len(topo) != n:
        raise CycleDetected("cover relation has a directed cycle")

    down_closure = [0] * n
    for p in topo:
        acc = 1 << p
        for lo, hi in pairs:
            if hi == p:
                acc |= down_closure[lo]
        down_closure[p] = acc

    # A cover is redundant when it is implied by a chain of other covers.
    strict_below = {p: down_closure[p] & ~(1 << p) for p in range(n)}
    clean = []
    for lo, hi in sorted(pairs):
        implied = False
        for mid, top in pairs:
            if top == hi and mid != lo and strict_below[mid] >> lo & 1:
                implied = True
                break
        if not implied:
            clean.append((lo, hi))

    down_covers = [0] * n
    up_covers = [0] * n
    for lo, hi in clean:
        down_covers[hi] |= 1 << lo
        up_covers[lo] |= 1 << hi

    up_closure = [0] * n
    for p in reversed(topo):
        acc = 1 << p
        q = up_covers[p]
        while q:
            b = q & -q
            acc |= up_closure[b.bit_length() - 1]
            q ^= b
        up_closure[p] = acc

    # Recompute down closures from the irredundant covers (same result, but
    # keeps the two closure tables consistent by construction).
    down = [0] * n
    for p in topo:
        acc = 1 << p
        q = down_covers[p]
        while q:
            b = q & -q
            acc |= down[b.bit_length() - 1]
            q ^= b
        down[p] = acc

    return Poset(
        n=n,
        labels=labels,
        covers=tuple(clean),
        down_covers=tuple(down_covers),
        up_covers=tuple(up_covers),
        down_closure=tuple(down),
        up_closure=tuple(up_closure),
        topo=tuple(topo),
    )


def is_order_ideal(poset: Poset, members: int) -> bool:
    """True iff the member set is downward closed."""
    m = members
    while m:
        b = m & -m
        p = b.bit_length() - 1
        if poset.down_closure[p] & ~members:
            return False
        m ^= b
    return True


def enumerate_ideals(poset: Poset, cap: int = DEFAULT_CAP) -> list[int]:
    """All order ideals as bitmasks, sorted numerically.

    Each ideal is produced exactly once by inserting its elements in
    topological order; raises StateSpaceTooLarge past the cap.
    """
    # Re-rank so that index order along `order` is a linear extension.
    order = poset.topo
    rank = {p: i for i, p in enumerate(order)}
    down_covers = poset.down_covers
    out: list[int] = []

    def visit(mask: int, start: int) -> None:
        out.append(mask)
        if len(out) > cap:
            raise StateSpaceTooLarge(f"more than {cap} ideals")
        for i in range(start, poset.n):
            p = order[i]
            if down_covers[p] & ~mask == 0:
                visit(mask | (1 << p), i + 1)

    visit(0, 0)
    out.sort()
    return out


def enumerate_linear_extensions(poset: Poset, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All linear extensions, each a tuple of elements in rank order 1..n."""
    n = poset.n
    down_covers = poset.down_covers
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def visit(placed: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            if len(out) > cap:
                raise StateSpaceTooLarge(f"more than {cap} linear extensions")
            return
        for p in range(n):
            if placed >> p & 1:
                continue
            if down_covers[p] & ~placed == 0:
                prefix.append(p)
                visit(placed | (1 << p))
                prefix.pop()

    visit(0)
    return out


def addable_elements(poset: Poset, ideal: int) -> Iterator[int]:
    """Elements whose addition keeps the set an ideal."""
    for p in range(poset.n):
        if not ideal >> p & 1 and poset.down_covers[p] & ~ideal == 0:
            yield p


def distributive_lattice(poset: Poset, cap: int = DEFAULT_CAP) -> Poset:
    """The lattice J(P): one element per ideal, covers = add one element."""
    ideals = enumerate_ideals(poset, cap)
    index = {ideal: i for i, ideal in enumerate(ideals)}
    covers = []
    for i, ideal in enumerate(ideals):
        for p in addable_elements(poset, ideal):
            covers.append((i, index[ideal | (1 << p)]))
    labels = tuple("{" + ",".join(map(str, poset.members(m))) + "}" for m in ideals)
    return build_poset(len(ideals), covers, labels)


def rowmotion_by_definition(poset: Poset, ideal: int) -> int:
    """The ideal generated by the minimal elements of P not in the ideal.

    This is the definition-level map, kept independent of the toggle
    machinery so it can serve as the oracle for toggle-word rowmotion.
    """
    out = 0
    complement = poset.full_mask & ~ideal
    m = complement
    while m:
        b = m & -m
        p = b.bit_length() - 1
        # p is minimal among the complement iff everything strictly below it
        # lies in the ideal.
        if (poset.down_closure[p] & ~(1 << p)) & complement == 0:
            out |= poset.down_closure[p]
        m ^= b
    return out
