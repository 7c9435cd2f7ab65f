from math import comb

import pytest

from togglekit.errors import DivisionInexact, DomainError
from togglekit.families import parse_family
from togglekit.poset import enumerate_ideals
from togglekit.qpoly import (
    IntPolynomial,
    asm_count,
    asm_q_product,
    cat_poly,
    half_square_poly,
    hook_length_poly,
    macmahon_poly,
    q_binomial,
    q_factorial,
    q_int,
)


def qbin_by_division(n: int, k: int) -> IntPolynomial:
    """Oracle: the quotient-of-factorials definition, divided exactly."""
    return q_factorial(n).divexact(q_factorial(k) * q_factorial(n - k))


def test_q_int_and_factorial():
    assert q_int(1).coeffs == (1,)
    assert q_int(4).coeffs == (1, 1, 1, 1)
    assert q_factorial(3).coeffs == (1, 2, 2, 1)


def test_q_binomial_examples():
    assert str(q_binomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    for n in range(8):
        assert q_binomial(n, 0).coeffs == (1,)
        for k in range(n + 1):
            assert q_binomial(n, k)(1) == comb(n, k)
            assert q_binomial(n, k) == qbin_by_division(n, k)
    with pytest.raises(DomainError):
        q_binomial(3, 4)


def test_polynomials_have_nonnegative_coefficients():
    polys = [
        q_binomial(9, 4),
        cat_poly("A", 4),
        cat_poly("B", 3),
        cat_poly("D", 4),
        macmahon_poly(2, 3, 4),
        hook_length_poly([5, 5]),
        half_square_poly(5),
        asm_q_product(5),
    ]
    for p in polys:
        assert all(c >= 0 for c in p.coeffs)


def test_cat_poly_values_match_ideal_counts():
    for kind, rank in (("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4)):
        rc = parse_family(f"root:{kind},{rank}")
        assert cat_poly(kind, rank)(1) == len(enumerate_ideals(rc.poset))


def test_macmahon_properties():
    for m in range(1, 6):
        for n in range(1, 6):
            assert macmahon_poly(1, m, n) == q_binomial(m + n, n)
    dims = (2, 3, 4)
    from itertools import permutations

    polys = {macmahon_poly(*p) for p in permutations(dims)}
    assert len(polys) == 1
    rc = parse_family("product:2,3,4")
    assert macmahon_poly(2, 3, 4)(1) == len(enumerate_ideals(rc.poset))


def test_hook_length_examples():
    assert hook_length_poly([3, 3])(1) == 5
    assert hook_length_poly([6]).coeffs == (1,)  # single row
    assert hook_length_poly([8, 6])(1) == 1001
    with pytest.raises(DomainError):
        hook_length_poly([2, 3])


def test_half_square_poly():
    assert str(half_square_poly(1)) == "1 + q"
    for n in range(1, 7):
        assert half_square_poly(n)(1) == 2 ** n
    expected = IntPolynomial((1,))
    for i in (1, 2, 3):
        expected = expected * IntPolynomial.of([1] + [0] * (i - 1) + [1])
    assert half_square_poly(3) == expected


def test_division_inexact_signals():
    with pytest.raises(DivisionInexact):
        q_int(5).divexact(q_int(3))
    with pytest.raises(DivisionInexact):
        q_int(4).divexact(IntPolynomial((2,)))


def test_asm_q_product_agrees_with_count():
    for n in range(1, 8):
        assert asm_q_product(n)(1) == asm_count(n)
    assert [asm_count(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]


def test_polynomial_text_and_eval():
    p = IntPolynomial((0, 1, 0, 3))
    assert str(p) == "q + 3*q^3"
    assert p(2) == 2 + 24
    assert str(IntPolynomial(())) == "0"


def test_residues_mod_cyclotomic():
    p = q_binomial(4, 2)  # 1 + q + 2q^2 + q^3 + q^4
    assert p.residues_mod_cyclotomic(4) == (2, 1, 2, 1)
