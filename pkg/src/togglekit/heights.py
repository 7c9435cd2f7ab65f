"""Height functions, alternating sign matrices, and gyration.

A height function of order n is an (n+1) x (n+1) integer matrix with the
fixed boundary h[0][k] = h[k][0] = k, h[n][k] = h[k][n] = n-k and +-1
steps between adjacent entries.  Ideals of the ASM poset, ASMs, and
height functions are all in bijection here.
"""

from __future__ import annotations

from .errors import InvalidAsm
from .families import family_params
from .toggles import RcPoset

HeightFunction = tuple[tuple[int, ...], ...]
AsmMatrix = tuple[tuple[int, ...], ...]


def validate_asm(a: AsmMatrix) -> None:
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidAsm("not square")
    for lines in (a, tuple(zip(*a))):
        for line in lines:
            nonzero = [v for v in line if v]
            if sum(line) != 1 or any(v not in (-1, 1) for v in nonzero):
                raise InvalidAsm("line does not sum to 1 over {-1,0,1}")
            if any(u == v for u, v in zip(nonzero, nonzero[1:])):
                raise InvalidAsm("nonzero entries do not alternate")


def validate_height(h: HeightFunction) -> None:
    n = len(h) - 1
    for k in range(n + 1):
        if h[0][k] != k or h[k][0] != k or h[n][k] != n - k or h[k][n] != n - k:
            raise InvalidAsm("bad height boundary")
    for i in range(n + 1):
        for j in range(n):
            if abs(h[i][j] - h[i][j + 1]) != 1 or abs(h[j][i] - h[j + 1][i]) != 1:
                raise InvalidAsm("adjacent heights must differ by 1")


def height_from_asm(a: AsmMatrix) -> HeightFunction:
    """h[i][j] = i + j - 2 * (partial sum of the ASM above-left of (i,j))."""
    validate_asm(a)
    n = len(a)
    out = []
    for i in range(n + 1):
        row = []
        acc = 0
        for j in range(n + 1):
            row.append(i + j - 2 * acc_table(a, i, j))
        out.append(tuple(row))
    return tuple(out)


def acc_table(a: AsmMatrix, i: int, j: int) -> int:
    return sum(a[r][c] for r in range(i) for c in range(j))


def asm_from_height(h: HeightFunction) -> AsmMatrix:
    validate_height(h)
    n = len(h) - 1
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            row.append((h[i - 1][j - 1] + h[i][j] - h[i - 1][j] - h[i][j - 1]) // -2)
        out.append(tuple(row))
    a = tuple(out)
    validate_asm(a)
    return a


def _fibers(rc: RcPoset) -> tuple[int, dict[tuple[int, int], list[int]]]:
    """Interior-cell fibers of the ASM poset: chains keyed by (i, j)."""
    tag, params = family_params(rc)
    if tag != "asm":
        raise ValueError(f"{rc.family} is not an ASM poset")
    n = params[0]
    assert rc.root_data is not None
    fibers: dict[tuple[int, int], list[int]] = {}
    for p, (k, a, b) in enumerate(rc.root_data):
        fibers.setdefault((a + n - 1 - k, b - 1), []).append(p)
    for chain in fibers.values():
        chain.sort(key=lambda p: -rc.root_data[p][0])  # deeper layers lie lower
    return n, fibers


def ideal_to_height(rc: RcPoset, ideal: int) -> HeightFunction:
    """Order isomorphism from J(asm poset) to height functions."""
    n, fibers = _fibers(rc)
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        grid[0][k] = grid[k][0] = k
        grid[n][k] = grid[k][n] = n - k
    for i in range(1, n):
        for j in range(1, n):
            count = sum(1 for p in fibers.get((i, j), ()) if ideal >> p & 1)
            grid[i][j] = abs(i - j) + 2 * count
    return tuple(tuple(row) for row in grid)


def height_to_ideal(rc: RcPoset, h: HeightFunction) -> int:
    validate_height(h)
    n, fibers = _fibers(rc)
    ideal = 0
    for (i, j), chain in fibers.items():
        count, rem = divmod(h[i][j] - abs(i - j), 2)
        if rem or not 0 <= count <= len(chain):
            raise InvalidAsm(f"height {h[i][j]} impossible at ({i},{j})")
        for p in chain[:count]:
            ideal |= 1 << p
    return ideal


def gyration_heights(h: HeightFunction) -> HeightFunction:
    """Two-pass sweep: flip entries whose four neighbors agree, even i+j first."""
    n = len(h) - 1
    grid = [list(row) for row in h]
    for parity in (0, 1):
        for i in range(1, n):
            for j in range(1, n):
                if (i + j) % 2 != parity:
                    continue
                around = {grid[i - 1][j], grid[i + 1][j], grid[i][j - 1], grid[i][j + 1]}
                if len(around) == 1:
                    grid[i][j] = 2 * around.pop() - grid[i][j]
    return tuple(tuple(row) for row in grid)


def height_str(h: HeightFunction) -> str:
    return "/".join(" ".join(str(v) for v in row) for row in h)


def asm_str(a: AsmMatrix) -> str:
    return "/".join(" ".join(str(v) for v in row) for row in a)
