"""Factorial Schur polynomials and equivariant classes of Weierstrass cycles.

The factorial Schur polynomial in ``n`` variables is the ratio of
determinants

    t_mu(z) = det[(z_i | mu_j + n - j)] / det[(z_i | n - j)]

where ``(z | k) = z (z - 1) ... (z - k + 1)`` is the falling factorial.
Tabulated data works with the shifted polynomial ``T_mu(z) = t_mu(z - 1)``;
its homogeneous pieces ``T_mu^i`` feed the cycle class

    [W_mu] = (-1)^|mu| * sum_i omega(T_mu^i)|_{e_k -> lambda_k} * psi^(|mu| - i)

in ``Q[lambda_1..lambda_g, psi]``.  The omega twist and global sign are the
normalization under which the classes come out with a positive leading psi
coefficient and a pure-lambda part equal to ``(-1)^|mu| s_{mu'}(lambda)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .polyalg import Poly, Rational, Ring, as_rational, det, divide_by_difference
from .semigroup import NumericalSemigroup
from .sequence import Partition, partitions_up_to
from .symmetric import (
    SymmetricExpression,
    complete_values,
    omega,
    roots_ring,
    schur,
    to_elementary,
)

NORMALIZATION = "omega-twisted"

# (genus, mu) whose W-cycle lacks the expected codimension; classes are
# still computable but do not represent [W].
UNEXPECTED_CODIM = frozenset(
    {
        (5, Partition((2, 1, 1))),
        (5, Partition((3, 1, 1))),
        (5, Partition((4, 1))),
    }
)

PSI_RING = Ring(("psi",), (1,))


def falling_factorial(expr, i: int):
    """``expr (expr - 1) ... (expr - i + 1)``; 1 when ``i == 0``."""
    if i < 0:
        raise ValueError("falling factorial power must be nonnegative")
    result = expr.ring.one() if isinstance(expr, Poly) else 1
    for k in range(i):
        result = result * (expr - k)
    return result


@lru_cache(maxsize=None)
def z_ring(n: int) -> Ring:
    return Ring.uniform("z", n)


def _alternant(exponents: Sequence[int], ring: Ring, shift: int = 0) -> Poly:
    zs = ring.gens()
    matrix = [[falling_factorial(zs[i] - shift, a) for a in exponents] for i in range(ring.nvars)]
    return det(matrix, method="cofactor")


def _schur_ratio(mu: Partition, ring: Ring, shift: int) -> Poly:
    n = ring.nvars
    padded = mu.padded(n)
    quotient = _alternant([padded[j - 1] + n - j for j in range(1, n + 1)], ring, shift)
    # shifting every variable leaves the differences z_i - z_j unchanged;
    # peeling the linear factors off one at a time is cheap
    for i, j in combinations(range(n), 2):
        quotient = divide_by_difference(quotient, i, j)
    return quotient


@lru_cache(maxsize=None)
def falling_vandermonde(n: int) -> Poly:
    """``det[(z_i | n - j)]``, which equals ``prod_{i<j} (z_i - z_j)``."""
    return _alternant([n - j for j in range(1, n + 1)], z_ring(n))


@lru_cache(maxsize=None)
def _factorial_schur(mu: Partition, n: int) -> Poly:
    return _schur_ratio(mu, z_ring(n), 0)


def factorial_schur(mu: Sequence[int], n: int) -> Poly:
    """The factorial Schur polynomial ``t_mu(z_1..z_n)``; inhomogeneous, top degree ``|mu|``."""
    mu = Partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} parts")
    return _factorial_schur(mu, n)


@lru_cache(maxsize=None)
def _shifted(mu: Partition, g: int) -> Poly:
    return _schur_ratio(mu, roots_ring(g), 1)


def shifted_factorial_schur(mu: Sequence[int], g: int) -> Poly:
    """``T_mu(x) = t_mu(x_1 - 1, ..., x_g - 1)`` as a polynomial in the roots."""
    return _shifted(Partition(mu), g)


def shifted_components(mu: Sequence[int], g: int) -> dict[int, SymmetricExpression]:
    """Homogeneous components ``T_mu^i`` keyed by degree ``i = 0..|mu|``.

    Every degree is present, zero components included.
    """
    mu = Partition(mu)
    poly = shifted_factorial_schur(mu, g)
    parts = poly.homogeneous_components()
    ring = roots_ring(g)
    return {
        i: SymmetricExpression(g, "roots", parts.get(i, ring.zero()))
        for i in range(mu.size + 1)
    }


def shifted_value(mu: Sequence[int], values: Sequence) -> Rational:
    """``T_mu`` at a point, i.e. ``t_mu(v - 1)``, computed by numeric determinants."""
    n = len(values)
    mu = Partition(mu)
    padded = mu.padded(n)
    shifted = [v - 1 for v in values]
    num = det([[falling_factorial(s, padded[j] + n - 1 - j) for j in range(n)] for s in shifted])
    den = det([[falling_factorial(s, n - 1 - j) for j in range(n)] for s in shifted])
    if den == 0:
        raise ZeroDivisionError("coordinates must be distinct")
    return as_rational(Fraction(num) / den)


@dataclass(frozen=True)
class CycleClass:
    genus: int
    mu: Partition
    poly: Poly
    normalization: str = NORMALIZATION

    @property
    def degree(self) -> int:
        return self.mu.size

    @property
    def expected_codimension(self) -> bool:
        return (self.genus, self.mu) not in UNEXPECTED_CODIM

    def terms(self) -> list[tuple[Rational, tuple[int, ...], int]]:
        """``(coeff, lambda exponents, psi exponent)`` in psi-descending order."""
        g = self.genus
        rows = [(c, e[:g], e[g]) for e, c in self.poly.terms.items()]
        rows.sort(key=lambda r: (-r[2], tuple(-a for a in r[1])))
        return rows


def class_of_cycle(mu: Sequence[int], g: int) -> CycleClass:
    """The class ``[W_mu]`` as a homogeneous polynomial of degree ``|mu|`` in lambda, psi."""
    mu = Partition(mu)
    if len(mu) > g:
        raise ValueError(f"{mu} has more than {g} parts")
    return _class_of_cycle(mu, g)


@lru_cache(maxsize=None)
def _class_of_cycle(mu: Partition, g: int) -> CycleClass:
    target = Ring.lambda_psi(g)
    lambdas = target.gens()[:g]
    psi = target.gen(g)
    size = mu.size
    total = target.zero()
    for i, comp in shifted_components(mu, g).items():
        if comp.poly.is_zero():
            continue
        twisted = omega(to_elementary(comp))
        total = total + twisted.poly.compose(lambdas, target) * psi ** (size - i)
    if size % 2:
        total = -total
    return CycleClass(g, mu, total)


def _gaps(h) -> tuple[int, ...]:
    return h.gaps if isinstance(h, NumericalSemigroup) else tuple(sorted(h))


def restrict_at_fixed_point(c: CycleClass, h: NumericalSemigroup | Sequence[int]) -> Poly:
    """Restriction to the fixed point of a monomial curve.

    Substitutes ``lambda_k -> h_k(gaps) * psi^k``; the result is a multiple of
    ``psi^|mu|`` in the one-variable ring :data:`PSI_RING`.
    """
    gaps = _gaps(h)
    if len(gaps) != c.genus:
        raise ValueError(f"genus mismatch: class has genus {c.genus}, semigroup {len(gaps)}")
    psi = PSI_RING.gen(0)
    images = [complete_values(k, gaps) * psi**k for k in range(1, c.genus + 1)] + [psi]
    return c.poly.compose(images, PSI_RING)


def table_partitions(g: int, include_unexpected: bool = False) -> list[Partition]:
    """Partitions ``1 <= |mu| <= g - 1`` with at most ``g`` parts."""
    out = partitions_up_to(g - 1, max_len=g, min_size=1)
    if not include_unexpected:
        out = [mu for mu in out if (g, mu) not in UNEXPECTED_CODIM]
    return out


def lambda_schur(mu: Sequence[int], g: int) -> Poly:
    """``s_mu`` of the Chern roots written in lambda-classes (degree-|mu| part only)."""
    target = Ring.lambda_psi(g)
    expr = to_elementary(schur(mu, g))
    return expr.poly.compose(target.gens()[:g], target)


__all__ = [
    "CycleClass",
    "NORMALIZATION",
    "PSI_RING",
    "UNEXPECTED_CODIM",
    "class_of_cycle",
    "factorial_schur",
    "falling_factorial",
    "falling_vandermonde",
    "lambda_schur",
    "restrict_at_fixed_point",
    "shifted_components",
    "shifted_factorial_schur",
    "shifted_value",
    "table_partitions",
]
