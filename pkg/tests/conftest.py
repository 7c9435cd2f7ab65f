"""Shared helpers: independent oracles and the shipped-instance registry."""

from __future__ import annotations

from itertools import combinations

import pytest

from togglekit.families import SHIPPED_FAMILIES, parse_family
from togglekit.poset import Poset, enumerate_ideals


def naive_ideals(poset: Poset) -> set[int]:
    """Subset-enumeration oracle for enumerate_ideals; n <= ~16 only."""
    out = set()
    for r in range(poset.n + 1):
        for combo in combinations(range(poset.n), r):
            mask = sum(1 << p for p in combo)
            if all(poset.down_closure[p] & ~mask == 0 for p in combo):
                out.add(mask)
    return out


def poset_isomorphic(a: Poset, b: Poset) -> bool:
    """Backtracking isomorphism test on cover digraphs (small posets)."""
    if a.n != b.n or len(a.covers) != len(b.covers):
        return False

    def profile(p: Poset, x: int) -> tuple[int, int, int, int]:
        return (
            bin(p.down_covers[x]).count("1"),
            bin(p.up_covers[x]).count("1"),
            bin(p.down_closure[x]).count("1"),
            bin(p.up_closure[x]).count("1"),
        )

    pa = {x: profile(a, x) for x in range(a.n)}
    pb = {x: profile(b, x) for x in range(b.n)}
    if sorted(pa.values()) != sorted(pb.values()):
        return False
    cov_b = set(b.covers)

    def extend(mapping: dict[int, int], used: set[int]) -> bool:
        if len(mapping) == a.n:
            return True
        x = len(mapping)
        for y in range(b.n):
            if y in used or pa[x] != pb[y]:
                continue
            ok = True
            for lo, hi in a.covers:
                if lo == x and hi in mapping and (y, mapping[hi]) not in cov_b:
                    ok = False
                    break
                if hi == x and lo in mapping and (mapping[lo], y) not in cov_b:
                    ok = False
                    break
            if ok:
                mapping[x] = y
                used.add(y)
                if extend(mapping, used):
                    return True
                del mapping[x]
                used.remove(y)
        return False

    return extend({}, set())


def count_maximal_chains(poset: Poset) -> int:
    """Chains from the unique minimum to the unique maximum of a lattice."""
    order = poset.topo
    ways = {p: 0 for p in range(poset.n)}
    bottoms = [p for p in range(poset.n) if not poset.down_covers[p]]
    assert len(bottoms) == 1
    ways[bottoms[0]] = 1
    for p in order:
        m = poset.down_covers[p]
        while m:
            b = m & -m
            ways[p] += ways[b.bit_length() - 1]
            m ^= b
    tops = [p for p in range(poset.n) if not poset.up_covers[p]]
    assert len(tops) == 1
    return ways[tops[0]]


def small_shipped(max_states: int = 1 << 16):
    for fam in SHIPPED_FAMILIES:
        rc = parse_family(fam)
        ideals = enumerate_ideals(rc.poset)
        if len(ideals) <= max_states:
            yield fam, rc, ideals


@pytest.fixture(scope="session")
def shipped_instances():
    return [(fam, rc, ideals) for fam, rc, ideals in small_shipped()]
