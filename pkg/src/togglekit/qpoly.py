"""Exact integer polynomials in q and the q-analogues used by the CSP checks.

Coefficients are arbitrary-precision ints; division is defined only when
it is exact and raises DivisionInexact otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DivisionInexact, DomainError


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]  # coeffs[e] multiplies q^e; no trailing zeros

    @staticmethod
    def of(coeffs) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.of(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.of(out)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        db = len(other.coeffs) - 1
        out = [0] * max(len(rem) - db, 0)
        for top in range(len(rem) - 1, db - 1, -1):
            q, r = divmod(rem[top], lead)
            if r:
                raise DivisionInexact(f"leading coefficient {rem[top]} not divisible by {lead}")
            if q:
                out[top - db] = q
                for j, b in enumerate(other.coeffs):
                    rem[top - db + j] -= q * b
        if any(rem):
            raise DivisionInexact("nonzero remainder")
        return IntPolynomial.of(out)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, e: int) -> "IntPolynomial":
        return IntPolynomial.of((0,) * e + self.coeffs)

    def substitute_power(self, e: int) -> "IntPolynomial":
        """q -> q^e."""
        out = [0] * (len(self.coeffs) * e)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return IntPolynomial.of(out)

    def residues_mod_cyclotomic(self, n: int) -> tuple[int, ...]:
        """Coefficient vector of the residue mod q^n - 1."""
        out = [0] * n
        for e, c in enumerate(self.coeffs):
            out[e % n] += c
        return tuple(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                parts.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(parts)


ONE = IntPolynomial((1,))


def q_int(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise DomainError("q_int needs n >= 0")
    return IntPolynomial.of([1] * n)


def q_factorial(n: int) -> IntPolynomial:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial via the q-Pascal recurrence (no division)."""
    if k < 0 or k > n:
        raise DomainError(f"q_binomial({n},{k}) undefined")
    row = [ONE]
    for m in range(1, n + 1):
        new = [ONE]
        for j in range(1, m):
            new.append(row[j - 1] + row[j].shift(j))
        new.append(ONE)
        row = new
    return row[k]


WEYL_DATA = {
    # type -> (degrees as function of rank, Coxeter number)
    "A": lambda n: (list(range(2, n + 2)), n + 1),
    "B": lambda n: (list(range(2, 2 * n + 1, 2)), 2 * n),
    "C": lambda n: (list(range(2, 2 * n + 1, 2)), 2 * n),
    "D": lambda n: (list(range(2, 2 * n - 1, 2)) + [n], 2 * n - 2),
}


def coxeter_number(kind: str, rank: int) -> int:
    return WEYL_DATA[kind.upper()](rank)[1]


def cat_poly(kind: str, rank: int) -> IntPolynomial:
    """Cat(W, q): the product of [h + d_i]_q / [d_i]_q over the degrees."""
    kind = kind.upper()
    if kind not in WEYL_DATA:
        raise DomainError(f"unknown Weyl type {kind!r}")
    degrees, h = WEYL_DATA[kind](rank)
    num = ONE
    for d in degrees:
        num = num * q_int(h + d)
    den = ONE
    for d in degrees:
        den = den * q_int(d)
    return num.divexact(den)


def macmahon_poly(ell: int, m: int, n: int) -> IntPolynomial:
    """The q-count of ideals of the ell x m x n box."""
    if min(ell, m, n) < 1:
        raise DomainError("box dimensions must be positive")
    num = ONE
    den = ONE
    for i in range(1, ell + 1):
        for j in range(1, m + 1):
            for k in range(1, n + 1):
                num = num * q_int(i + j + k - 1)
                den = den * q_int(i + j + k - 2)
    return num.divexact(den)


def hook_length_poly(shape: list[int]) -> IntPolynomial:
    """q-analogue of the hook length formula for a straight shape."""
    if any(a < b for a, b in zip(shape, shape[1:])) or any(r < 1 for r in shape):
        raise DomainError(f"not a partition: {shape}")
    total = sum(shape)
    cols = [sum(1 for r in shape if r > c) for c in range(shape[0] if shape else 0)]
    num = q_factorial(total)
    den = ONE
    for r, width in enumerate(shape):
        for c in range(width):
            hook = (width - c) + (cols[c] - r) - 1
            den = den * q_int(hook)
    return num.divexact(den)


def half_square_poly(n: int) -> IntPolynomial:
    """prod_{i=1}^n (1 + q^i), the half-square word generating function."""
    if n < 1:
        raise DomainError("half_square_poly needs n >= 1")
    out = ONE
    for i in range(1, n + 1):
        out = out * IntPolynomial.of([1] + [0] * (i - 1) + [1])
    return out


def asm_q_product(n: int) -> IntPolynomial:
    """The q-ification of the ASM product formula prod (3j+1)! / (n+j)!."""
    num = ONE
    den = ONE
    for j in range(n):
        num = num * q_factorial(3 * j + 1)
        den = den * q_factorial(n + j)
    return num.divexact(den)


def asm_count(n: int) -> int:
    num = den = 1
    for j in range(n):
        num *= factorial(3 * j + 1)
        den *= factorial(n + j)
    assert num % den == 0
    return num // den
