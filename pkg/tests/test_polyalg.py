import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wcycles.errors import DivisibilityError
from wcycles.polyalg import (
    Poly,
    Ring,
    RowEchelon,
    det,
    divide_by_difference,
    exact_divide,
    monomials_of_degree,
    poly_divmod,
    rank,
    transpose,
)

R = Ring.uniform("x", 3)
coeffs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda t: Poly(R, t))


def leibniz(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i, p in enumerate(perm):
            term = term * m[i][p]
        total = total + term
    return total


def naive_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero()
    assert a * R.one() == a


@given(polys)
@settings(max_examples=60, deadline=None)
def test_text_round_trip(p):
    assert R.parse(p.to_text()) == p


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_division_identity(f, g):
    if g.is_zero():
        return
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert exact_divide(f * g, g) == f


@given(polys, st.sampled_from([(0, 1), (1, 0), (0, 2), (2, 1)]))
@settings(max_examples=40, deadline=None)
def test_divide_by_difference(f, pair):
    i, j = pair
    x = R.gens()
    assert divide_by_difference(f * (x[i] - x[j]), i, j) == f


def test_divide_by_difference_rejects_remainder():
    x, y, z = R.gens()
    with pytest.raises(DivisibilityError):
        divide_by_difference(x * x + y, 0, 1)


def test_exact_divide_rejects_remainder():
    x, y, _ = R.gens()
    with pytest.raises(DivisibilityError):
        exact_divide(x * x + y, x)
    with pytest.raises(ZeroDivisionError):
        exact_divide(x, R.zero())


def test_parse_forms():
    ring = Ring.lambda_psi(2)
    p = ring.parse(r"3\psi-\lambda_{1}")
    assert p == 3 * ring.gen("psi") - ring.gen("lambda_1")
    assert str(p) == "-lambda_1 + 3*psi"
    assert ring.parse("1/2 lambda_1^2 psi") == ring.monomial((2, 0, 1), Fraction(1, 2))
    assert ring.parse(r"-90\psi^{2}\lambda_{1}+\lambda_{2}") == ring.parse("-90*psi^2*lambda_1 + lambda_2")
    with pytest.raises(ValueError):
        ring.parse("lambda_7")


def test_weighted_degree_and_components():
    ring = Ring.lambda_psi(3)
    l1, l2, l3, psi = ring.gens()
    f = l3 + l1 * psi + psi
    assert f.degree() == 3
    assert not f.is_homogeneous()
    assert sorted(f.homogeneous_components()) == [1, 2, 3]
    assert len(monomials_of_degree(ring, 2)) == 4
    assert len(monomials_of_degree(ring, 3)) == 7


def test_evaluate_and_compose():
    x, y, z = R.gens()
    f = x * x - 3 * y * z + Fraction(1, 2)
    assert f.evaluate([1, 2, 3]) == Fraction(-33, 2)
    g = f.compose([y, x, z], R)
    assert g == f.permute([1, 0, 2])


@pytest.mark.parametrize("method", ["bareiss", "cofactor"])
def test_det_matches_leibniz_numeric(method):
    rng = random.Random(7)
    for n in range(1, 6):
        m = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert det(m, method) == leibniz(m)


@given(st.lists(polys, min_size=16, max_size=16))
@settings(max_examples=15, deadline=None)
def test_det_polynomial_methods_agree(entries):
    m = [entries[i * 4:(i + 1) * 4] for i in range(4)]
    assert det(m, "bareiss") == det(m, "cofactor") == leibniz(m)


def test_vandermonde():
    x, y, z = R.gens()
    m = [[R.one(), v, v * v] for v in (x, y, z)]
    assert det(m) == (y - x) * (z - x) * (z - y)
    assert det([]) == 1


def test_rank_examples():
    assert rank([[1, 2], [2, 4], [0, 1]]) == 2
    assert rank([[1, 1], [1, 1]]) == 1
    assert rank([[0, 0]]) == 0
    assert rank([]) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
@settings(max_examples=80, deadline=None)
def test_rank_oracle_and_transpose(rows):
    assert rank(rows) == naive_rank(rows) == rank(transpose(rows))


def test_row_echelon_incremental():
    ech = RowEchelon()
    assert ech.add({0: 1, 1: 2})
    assert not ech.add({0: 2, 1: 4})
    assert ech.add({1: Fraction(1, 3)})
    assert ech.rank == 2
    assert ech.reduce({0: 5, 1: 7}) == {}
