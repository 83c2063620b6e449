import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wcycles.errors import SymmetryError
from wcycles.polyalg import Poly
from wcycles.sequence import partitions, partitions_up_to
from wcycles.symmetric import (
    SymmetricExpression,
    complete_poly,
    complete_values,
    elem_values,
    elementary_poly,
    elementary_ring,
    is_symmetric,
    omega,
    roots_ring,
    schur,
    to_elementary,
)


def tableau_schur(mu, n):
    """Sum of x^T over semistandard tableaux of shape mu with entries 1..n."""
    cells = [(r, c) for r, length in enumerate(mu) for c in range(length)]
    ring = roots_ring(n)
    terms = {}

    def fill(k, tab):
        if k == len(cells):
            exps = [0] * n
            for v in tab.values():
                exps[v - 1] += 1
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            tab[(r, c)] = v
            fill(k + 1, tab)
        tab.pop((r, c), None)

    fill(0, {})
    return Poly(ring, terms)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_jacobi_trudi_matches_tableaux(n):
    for mu in partitions_up_to(4, max_len=n):
        assert schur(mu, n).poly == tableau_schur(mu, n)


def test_s11_is_e2():
    assert schur((1, 1), 3).poly == elementary_poly(2, 3)
    assert schur((2,), 3).poly == complete_poly(2, 3)


def test_omega_is_involution():
    for n in range(1, 6):
        ring = elementary_ring(n)
        for d in range(0, 9):
            for exps in ring.monomials_of_degree(d):
                f = SymmetricExpression(n, "elementary", ring.monomial(exps))
                assert omega(omega(f)) == f


def test_omega_conjugates_schur():
    for size in range(1, 6):
        for mu in partitions(size):
            n = size  # omega needs at least |mu| variables
            lhs = omega(to_elementary(schur(mu, n)))
            rhs = to_elementary(schur(mu.conjugate(), n))
            assert lhs == rhs


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.integers(0, 4))
@settings(max_examples=30, deadline=None)
def test_to_elementary_round_trip(weights, d):
    # build a random symmetric polynomial as a combination of schur polys
    n = 3
    ring = roots_ring(n)
    f = ring.zero()
    for w, mu in zip(weights, list(partitions_up_to(d, max_len=n))[-3:]):
        f = f + w * schur(mu, n).poly
    expr = to_elementary(f)
    assert expr.in_roots() == f


def test_symmetry_detection():
    ring = roots_ring(3)
    x1, x2, x3 = ring.gens()
    assert is_symmetric(x1 * x2 + x1 * x3 + x2 * x3)
    assert not is_symmetric(x1 * x2)
    with pytest.raises(SymmetryError):
        to_elementary(x1 + 2 * x2 + x3)


def test_numeric_values():
    vals = [1, 3, Fraction(1, 2)]
    for k in range(5):
        assert elem_values(k, vals) == elementary_poly(k, 3).evaluate(vals)
        assert complete_values(k, vals) == complete_poly(k, 3).evaluate(vals)
    for a, b in itertools.product(range(3), repeat=2):
        assert complete_values(2, [a, b]) == a * a + a * b + b * b
