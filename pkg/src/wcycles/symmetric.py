"""Symmetric polynomials in a fixed number of variables.

Expressions are carried in one of three bases:

``roots``       a polynomial in ``x_1 .. x_n`` (all weight 1)
``elementary``  a polynomial in ``e_1 .. e_n`` (``e_k`` has weight ``k``)
``complete``    a polynomial in ``h_1 .. h_n``

The elementary basis is the interchange format: identifying ``e_k`` with
``lambda_k`` turns a symmetric function of the Hodge-bundle Chern roots into
a polynomial in lambda-classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import SymmetryError
from .polyalg import Poly, Rational, Ring, as_rational, det
from .sequence import Partition

BASES = ("roots", "elementary", "complete")


@lru_cache(maxsize=None)
def roots_ring(n: int) -> Ring:
    return Ring.uniform("x", n)


@lru_cache(maxsize=None)
def elementary_ring(n: int) -> Ring:
    return Ring.indexed("e", n)


@lru_cache(maxsize=None)
def complete_ring(n: int) -> Ring:
    return Ring.indexed("h", n)


_RINGS = {"roots": roots_ring, "elementary": elementary_ring, "complete": complete_ring}


@dataclass(frozen=True)
class SymmetricExpression:
    n: int
    basis: str
    poly: Poly

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.poly.ring != _RINGS[self.basis](self.n):
            raise ValueError(f"payload ring does not match basis {self.basis} with n={self.n}")

    @classmethod
    def roots(cls, poly: Poly) -> SymmetricExpression:
        return cls(poly.ring.nvars, "roots", poly)

    @classmethod
    def elementary(cls, poly: Poly) -> SymmetricExpression:
        return cls(poly.ring.nvars, "elementary", poly)

    def in_roots(self) -> Poly:
        """Expand to a polynomial in the roots."""
        if self.basis == "roots":
            return self.poly
        table = elementary_poly if self.basis == "elementary" else complete_poly
        return self.poly.compose([table(k, self.n) for k in range(1, self.n + 1)], roots_ring(self.n))

    def __str__(self) -> str:
        return str(self.poly)


# --------------------------------------------------------------------------
# e_k and h_k as polynomials


@lru_cache(maxsize=None)
def elementary_poly(k: int, n: int) -> Poly:
    """``e_k(x_1..x_n)``."""
    ring = roots_ring(n)
    if k < 0 or k > n:
        return ring.zero()
    # coefficients of prod (1 + x_i t)
    layers = [ring.one()] + [ring.zero()] * k
    for x in ring.gens():
        for j in range(k, 0, -1):
            layers[j] = layers[j] + layers[j - 1] * x
    return layers[k]


@lru_cache(maxsize=None)
def complete_poly(k: int, n: int) -> Poly:
    """``h_k(x_1..x_n)``: sum of all monomials of degree ``k``."""
    ring = roots_ring(n)
    if k < 0:
        return ring.zero()
    return Poly(ring, {e: 1 for e in ring.monomials_of_degree(k)})


@lru_cache(maxsize=None)
def complete_in_elementary(k: int, n: int) -> Poly:
    """``h_k`` written in ``e_1..e_n`` via ``h_k = sum (-1)^(i-1) e_i h_(k-i)``."""
    ring = elementary_ring(n)
    if k == 0:
        return ring.one()
    if k > n:
        raise ValueError(f"h_{k} needs e_j with j > {n}")
    total = ring.zero()
    for i in range(1, k + 1):
        term = ring.gen(i - 1) * complete_in_elementary(k - i, n)
        total = total + term if i % 2 else total - term
    return total


# --------------------------------------------------------------------------
# basis changes


def is_symmetric(f: Poly) -> bool:
    """Invariance under every adjacent transposition (these generate S_n)."""
    n = f.ring.nvars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = i + 1, i
        if f.permute(perm) != f:
            return False
    return True


@lru_cache(maxsize=None)
def _e_monomial(exps: tuple[int, ...], n: int) -> Poly:
    ring = roots_ring(n)
    out = ring.one()
    for k, a in enumerate(exps, start=1):
        if a:
            out = out * elementary_poly(k, n) ** a
    return out


def to_elementary(f: SymmetricExpression | Poly) -> SymmetricExpression:
    """Rewrite a symmetric root polynomial in the elementary basis.

    Gauss's algorithm: repeatedly cancel the lexicographically leading
    monomial ``x^a`` with ``prod e_k^(a_k - a_(k+1))``.
    """
    if isinstance(f, SymmetricExpression):
        if f.basis == "elementary":
            return f
        poly = f.in_roots()
    else:
        poly = f
    n = poly.ring.nvars
    if poly.ring != roots_ring(n):
        raise ValueError("expected a polynomial in x_1..x_n")
    if not is_symmetric(poly):
        raise SymmetryError(f"not symmetric: {poly}")
    out: dict[tuple[int, ...], Rational] = {}
    rest = dict(poly.terms)
    while rest:
        lead = max(rest)
        c = rest[lead]
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise SymmetryError(f"not symmetric: leading monomial {lead}")
        e_exps = tuple(lead[k] - (lead[k + 1] if k + 1 < n else 0) for k in range(n))
        out[e_exps] = c
        for m, v in _e_monomial(e_exps, n).terms.items():
            w = rest.get(m, 0) - c * v
            if w:
                rest[m] = as_rational(w)
            else:
                rest.pop(m, None)
    return SymmetricExpression(n, "elementary", Poly(elementary_ring(n), out))


def omega(f: SymmetricExpression) -> SymmetricExpression:
    """The involution ``e_k <-> h_k``, result kept in the elementary basis."""
    if f.basis != "elementary":
        f = to_elementary(f)
    n = f.n
    images = [complete_in_elementary(k, n) for k in range(1, n + 1)]
    return SymmetricExpression(n, "elementary", f.poly.compose(images, elementary_ring(n)))


def schur(mu: Sequence[int], n: int) -> SymmetricExpression:
    """Schur polynomial ``s_mu(x_1..x_n)`` from the Jacobi-Trudi determinant."""
    mu = Partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} parts")
    ring = roots_ring(n)
    size = len(mu)
    if size == 0:
        return SymmetricExpression(n, "roots", ring.one())
    matrix = [[complete_poly(mu[i] - i + j, n) for j in range(size)] for i in range(size)]
    return SymmetricExpression(n, "roots", det(matrix, method="cofactor"))


# --------------------------------------------------------------------------
# numeric values


def elem_values(k: int, values: Sequence) -> Rational:
    """``e_k`` evaluated at exact rational values."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    layers: list[Rational] = [1] + [0] * k
    for v in values:
        v = as_rational(v)
        for j in range(k, 0, -1):
            layers[j] = layers[j] + layers[j - 1] * v
    return as_rational(Fraction(layers[k]))


def complete_values(k: int, values: Sequence) -> Rational:
    """``h_k`` evaluated at exact rational values."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    layers: list[Rational] = [1] + [0] * k
    for v in values:
        v = as_rational(v)
        for j in range(1, k + 1):
            layers[j] = layers[j] + v * layers[j - 1]
    return as_rational(Fraction(layers[k]))
