"""Exact cyclic sieving check via residues modulo q^n - 1.

An orbit of size s contributes s fixed points to every power c of the
generator with s | c, and its orbit polynomial sum_{i<s} q^(i*n/s)
evaluates to exactly that at the n-th roots of unity; comparing residue
vectors mod q^n - 1 therefore decides the CSP with integer arithmetic
only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CountMismatch, OrbitSizeError
from .qpoly import IntPolynomial


@dataclass(frozen=True)
class CspReport:
    holds: bool
    group_order: int
    orbit_sizes: tuple[int, ...]
    residues: tuple[int, ...]  # X(q) mod q^n - 1
    expected: tuple[int, ...]  # orbit polynomial mod q^n - 1
    first_mismatch: int | None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "group_order": self.group_order,
            "orbit_sizes": list(self.orbit_sizes),
            "residues": list(self.residues),
            "expected": list(self.expected),
            "first_mismatch": self.first_mismatch,
        }


def orbit_polynomial_residues(orbit_sizes, n: int) -> tuple[int, ...]:
    out = [0] * n
    for s in orbit_sizes:
        if n % s:
            raise OrbitSizeError(f"orbit size {s} does not divide group order {n}")
        step = n // s
        for i in range(s):
            out[i * step % n] += 1
    return tuple(out)


def csp_check(orbit_sizes, n: int, poly: IntPolynomial) -> CspReport:
    """Exact test of the cyclic sieving phenomenon for one action."""
    sizes = tuple(sorted(orbit_sizes, reverse=True))
    if poly(1) != sum(sizes):
        raise CountMismatch(f"poly(1) = {poly(1)} but states = {sum(sizes)}")
    expected = orbit_polynomial_residues(sizes, n)
    residues = poly.residues_mod_cyclotomic(n)
    mismatch = next((e for e in range(n) if residues[e] != expected[e]), None)
    return CspReport(
        holds=mismatch is None,
        group_order=n,
        orbit_sizes=sizes,
        residues=residues,
        expected=expected,
        first_mismatch=mismatch,
    )


def csp_check_float(orbit_sizes, n: int, poly: IntPolynomial, tol: float = 1e-6) -> bool:
    """Secondary root-of-unity evaluation; cross-validates the congruence."""
    import cmath

    for c in range(n):
        omega = cmath.exp(2j * cmath.pi * c / n)
        fixed = sum(s for s in orbit_sizes if c % s == 0)
        if abs(poly(omega) - fixed) > tol * max(1.0, abs(fixed)):
            return False
    return True
