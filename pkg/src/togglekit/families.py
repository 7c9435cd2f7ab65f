"""Constructors for every poset family in scope, as rc-posets.

Each constructor returns an RcPoset with translated first-quadrant
positions, a deterministic element order, and whatever metadata its
bijections need (layers, root coordinates, boundary-word padding).
"""

from __future__ import annotations

from .errors import ConfigError, EmptyShape, UnsupportedArity, UnsupportedRank
from .poset import build_poset
from .toggles import RcPoset, normalize_positions


def chain_product(dims: list[int]) -> RcPoset:
    """Product of 2 or 3 chains with the standard diagonal embedding."""
    if any(d < 1 for d in dims):
        raise ValueError(f"dimensions must be positive: {dims}")
    if len(dims) == 2:
        n, k = dims
        cells = [(i, j) for i in range(1, n + 1) for j in range(1, k + 1)]
        index = {c: t for t, c in enumerate(cells)}
        covers = []
        for (i, j) in cells:
            if i < n:
                covers.append((index[i, j], index[i + 1, j]))
            if j < k:
                covers.append((index[i, j], index[i, j + 1]))
        poset = build_poset(len(cells), covers, [f"({i},{j})" for i, j in cells])
        pos = normalize_positions([(i - j, i + j) for i, j in cells])
        return RcPoset(poset, pos, family=f"product:{n},{k}")
    if len(dims) == 3:
        ell, m, n = dims
        cells = [
            (i, j, k)
            for i in range(1, ell + 1)
            for j in range(1, m + 1)
            for k in range(1, n + 1)
        ]
        index = {c: t for t, c in enumerate(cells)}
        covers = []
        for (i, j, k) in cells:
            for d in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                up = (i + d[0], j + d[1], k + d[2])
                if up in index:
                    covers.append((index[i, j, k], index[up]))
        poset = build_poset(len(cells), covers, [f"({i},{j},{k})" for i, j, k in cells])
        pos = normalize_positions([(i - j + k, i + j + k) for i, j, k in cells])
        layers = tuple(
            tuple(t for t, (i, _, _) in enumerate(cells) if i == layer)
            for layer in range(1, ell + 1)
        )
        return RcPoset(poset, pos, family="product:" + ",".join(map(str, dims)), layers=layers)
    raise UnsupportedArity(f"chain products support 2 or 3 dimensions, got {len(dims)}")


def _simple_roots(kind: str, rank: int) -> list[tuple[int, ...]]:
    def e(i: int, c: int = 1) -> tuple[int, ...]:
        v = [0] * (rank + 1)
        v[i - 1] = c
        return tuple(v)

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    simples = [add(e(i), e(i + 1, -1)) for i in range(1, rank)]
    if kind == "A":
        simples.append(add(e(rank), e(rank + 1, -1)))
    elif kind == "B":
        simples.append(e(rank))
    elif kind == "D":
        simples.append(add(e(rank - 1), e(rank)))
    return simples


def root_poset(kind: str, rank: int) -> RcPoset:
    """Positive root poset of type A, B, C, or D (C is returned as B)."""
    kind = kind.upper()
    if kind not in "ABCD" or len(kind) != 1:
        raise ConfigError(f"unknown Weyl type {kind!r}")
    if rank < 1:
        raise UnsupportedRank("rank must be >= 1")
    if kind == "C":
        rc = root_poset("B", rank)
        return RcPoset(rc.poset, rc.positions, family=f"root:C,{rank}",
                       pad_left=rc.pad_left, pad_right=rc.pad_right,
                       open_east=rc.open_east)
    if kind == "D" and rank < 2:
        raise UnsupportedRank("type D needs rank >= 2")

    def e(i: int, c: int = 1) -> tuple[int, ...]:
        v = [0] * (rank + 1)
        v[i - 1] = c
        return tuple(v)

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    roots: list[tuple[tuple[int, ...], str, tuple[int, int]]] = []
    if kind == "A":
        for i in range(1, rank + 1):
            for j in range(i + 1, rank + 2):
                roots.append((add(e(i), e(j, -1)), f"e{i}-e{j}", (i + j, j - i)))
        pads = ("1", "0")
    elif kind == "B":
        n = rank
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append((add(e(i), e(j, -1)), f"e{i}-e{j}", (i + j, j - i)))
        for i in range(1, n + 1):
            roots.append((e(i), f"e{i}", (n + 1 + i, n + 1 - i)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append((add(e(i), e(j)), f"e{i}+e{j}", (2 * n + 2 - (j - i), 2 * n + 2 - (i + j))))
        pads = ("1", "")
    else:  # D
        n = rank
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append((add(e(i), e(j, -1)), f"e{i}-e{j}", (i + j, j - i)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append((add(e(i), e(j)), f"e{i}+e{j}", (2 * n - (j - i), 2 * n - (i + j))))
        pads = ("", "")

    simples = set(_simple_roots(kind, rank))
    covers = []
    for t, (vec, _, _) in enumerate(roots):
        for s, (other, _, _) in enumerate(roots):
            diff = tuple(a - b for a, b in zip(other, vec))
            if diff in simples:
                covers.append((t, s))
    poset = build_poset(len(roots), covers, [lbl for _, lbl, _ in roots])
    pos = normalize_positions([p for _, _, p in roots])
    return RcPoset(poset, pos, family=f"root:{kind},{rank}", pad_left=pads[0],
                   pad_right=pads[1], open_east=(kind == "B"))


def two_row_interior(n: int, m: int, k: int) -> RcPoset:
    """Interior of the lattice of ideals of a two-row skew shape.

    Cells sit in an n x m grid cut by a diagonal; the boundary-path window
    has length n+m and the words carry n northeast steps.
    """
    if n < 1 or m < 1 or k < 0:
        raise ValueError(f"need n,m >= 1 and k >= 0, got ({n},{m},{k})")
    if m > n + k + 1:
        raise ValueError(f"need m <= n+k+1, got ({n},{m},{k})")
    cells = [
        (x, y)
        for x in range(1, n + 1)
        for y in range(1, m + 1)
        if x + y >= m + 1 - k
    ]
    if not cells:
        raise EmptyShape(f"interior:{n},{m},{k} has no cells")
    index = {c: t for t, c in enumerate(cells)}
    covers = []
    for (x, y) in cells:
        if (x + 1, y) in index:
            covers.append((index[x, y], index[x + 1, y]))
        if (x, y + 1) in index:
            covers.append((index[x, y], index[x, y + 1]))
    poset = build_poset(len(cells), covers, [f"({x},{y})" for x, y in cells])
    pos = normalize_positions([(x - y, x + y) for x, y in cells])
    # At m = n+k+1 the ambient shape has a unique maximal box, forcing the
    # final path step; that keeps the window length at n+m.
    pad_right = "0" if m == n + k + 1 else ""
    return RcPoset(poset, pos, family=f"interior:{n},{m},{k}", pad_right=pad_right)


def half_square(n: int) -> RcPoset:
    """J([2] x [n-1]) embedded as the left half of the n x n square.

    Built directly on the staircase cells {(i,j): i <= j <= n}; tests pin
    the isomorphism with distributive_lattice(chain_product([2, n-1])).
    """
    if n < 2:
        raise ValueError("half_square needs n >= 2")
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    index = {c: t for t, c in enumerate(cells)}
    covers = []
    for (i, j) in cells:
        if (i + 1, j) in index:
            covers.append((index[i, j], index[i + 1, j]))
        if (i, j + 1) in index:
            covers.append((index[i, j], index[i, j + 1]))
    poset = build_poset(len(cells), covers, [f"({i},{j})" for i, j in cells])
    pos = normalize_positions([(i - j, i + j) for i, j in cells])
    return RcPoset(poset, pos, family=f"halfsquare:{n}", mirror_word=True)


def _layered_root_poset(n: int, asm: bool) -> RcPoset:
    """Shared builder for the ASM and TSSCPP posets (layers of type A roots)."""
    roots = [
        (k, a, b)
        for k in range(1, n)
        for a in range(1, k + 1)
        for b in range(a + 1, k + 2)
    ]
    index = {r: t for t, r in enumerate(roots)}
    covers = []
    for (k, a, b) in roots:
        # in-layer root poset covers
        if (k, a - 1, b) in index:
            covers.append((index[k, a, b], index[k, a - 1, b]))
        if (k, a, b + 1) in index:
            covers.append((index[k, a, b], index[k, a, b + 1]))
        if asm:
            # the layer-k root covers the same root and its shift in layer k+1
            for tgt in ((k + 1, a, b), (k + 1, a + 1, b + 1)):
                if tgt in index:
                    covers.append((index[tgt], index[k, a, b]))
        else:
            # the layer-k root is covered by the same root in layer k+1
            if (k + 1, a, b) in index:
                covers.append((index[k, a, b], index[k + 1, a, b]))
    labels = [f"L{k}:e{a}-e{b}" for k, a, b in roots]
    poset = build_poset(len(roots), covers, labels)
    if asm:
        raw = [(a + b + n - k, b - a + n - k) for k, a, b in roots]
        family = f"asm:{n}"
    else:
        raw = [(a + b + k, b - a + k) for k, a, b in roots]
        family = f"tsscpp:{n}"
    layers = tuple(
        tuple(t for t, (k, _, _) in enumerate(roots) if k == layer) for layer in range(1, n)
    )
    return RcPoset(
        poset,
        normalize_positions(raw),
        family=family,
        layers=layers,
        root_data=tuple(roots),
    )


def asm_poset(n: int) -> RcPoset:
    """The alternating sign matrix poset: J(asm_poset(n)) counts n x n ASMs."""
    if n < 1:
        raise ValueError("asm_poset needs n >= 1")
    return _layered_root_poset(n, asm=True)


def tsscpp_poset(n: int) -> RcPoset:
    """The TSSCPP poset; its ideal counts match the ASM numbers."""
    if n < 1:
        raise ValueError("tsscpp_poset needs n >= 1")
    return _layered_root_poset(n, asm=False)


def parse_family(spec: str) -> RcPoset:
    """Build a family from its CLI string, e.g. product:2,3,4 or root:A,3."""
    try:
        tag, _, rest = spec.partition(":")
        if tag == "product":
            return chain_product([int(v) for v in rest.split(",")])
        if tag == "root":
            kind, rank = rest.split(",")
            return root_poset(kind, int(rank))
        if tag == "interior":
            n, m, k = (int(v) for v in rest.split(","))
            return two_row_interior(n, m, k)
        if tag == "halfsquare":
            return half_square(int(rest))
        if tag == "asm":
            return asm_poset(int(rest))
        if tag == "tsscpp":
            return tsscpp_poset(int(rest))
    except (ValueError, UnsupportedArity, UnsupportedRank, EmptyShape) as exc:
        raise ConfigError(f"bad family spec {spec!r}: {exc}") from exc
    raise ConfigError(f"unknown family {spec!r}")


def family_params(rc: RcPoset) -> tuple[str, list[int]]:
    """Split a family string back into its tag and integer parameters."""
    tag, _, rest = rc.family.partition(":")
    if tag == "root":
        kind, rank = rest.split(",")
        return tag, [ord(kind), int(rank)]
    return tag, [int(v) for v in rest.split(",")]


SHIPPED_FAMILIES: tuple[str, ...] = (
    "product:1,1",
    "product:2,2",
    "product:3,2",
    "product:3,3",
    "product:4,2",
    "product:4,4",
    "product:2,2,2",
    "product:2,3,4",
    "product:3,3,3",
    "root:A,1",
    "root:A,2",
    "root:A,3",
    "root:A,4",
    "root:A,5",
    "root:B,2",
    "root:B,3",
    "root:B,4",
    "root:C,2",
    "root:C,3",
    "root:D,2",
    "root:D,3",
    "root:D,4",
    "root:D,5",
    "interior:2,3,0",
    "interior:3,4,0",
    "interior:2,2,2",
    "interior:3,2,1",
    "interior:4,3,2",
    "halfsquare:2",
    "halfsquare:3",
    "halfsquare:4",
    "halfsquare:5",
    "asm:1",
    "asm:2",
    "asm:3",
    "asm:4",
    "asm:5",
    "asm:6",
    "tsscpp:1",
    "tsscpp:2",
    "tsscpp:3",
    "tsscpp:4",
    "tsscpp:5",
    "tsscpp:6",
)
