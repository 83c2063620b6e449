"""Published reference values embedded as golden data.

Nothing here is computed; the values are transcriptions used for comparison
by :mod:`wcycles.estimates`, :mod:`wcycles.tautring` and the test-suite.
"""

from __future__ import annotations

from fractions import Fraction

# genus-6 semigroups where the Eisenbud-Harris bound is not sharp:
# gap sequence -> (EH bound, improved estimate, witness gap sequence, exact codim)
GENUS6_ROWS: dict[tuple[int, ...], tuple[int, int, tuple[int, ...], int]] = {
    (1, 2, 3, 5, 7, 11): (8, 7, (1, 2, 3, 4, 7, 11), 6),
    (1, 2, 3, 6, 7, 11): (9, 6, (1, 2, 3, 6, 7, 8), 6),
    (1, 2, 4, 5, 7, 8): (6, 4, (1, 2, 4, 5, 6, 7), 4),
    (1, 2, 4, 5, 7, 10): (8, 6, (1, 2, 4, 5, 6, 9), 5),
    (1, 2, 4, 5, 8, 11): (10, 7, (1, 2, 3, 5, 8, 9), 6),
    (1, 3, 5, 7, 9, 11): (15, 5, (1, 3, 4, 5, 6, 7), 5),
}

# genus <= 5 semigroups where the Eisenbud-Harris bound is not sharp:
# gap sequence -> (improved estimate, witness gap sequence).  For genus <= 5
# the improved estimate is exact, and EH is exact for every other semigroup.
LOW_GENUS_ROWS: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {
    (1, 3, 5): (2, (1, 3, 4)),
    (1, 3, 5, 7): (3, (1, 3, 4, 5)),
    (1, 2, 4, 7): (3, (1, 2, 4, 6)),
    (1, 3, 5, 7, 9): (4, (1, 3, 4, 5, 6)),
    (1, 2, 3, 5, 9): (4, (1, 2, 3, 5, 8)),
}

NUMBER_OF_GENUS6_CYCLES = 23


def _series(*coeffs: int) -> tuple[int, ...]:
    return tuple(coeffs)


# Hilbert-Poincare coefficients h_0, h_1, ... of the two quotient algebras.
EV_QUOTIENT_SERIES: dict[int, tuple[int, ...]] = {
    2: _series(1, 1),
    3: _series(1, 2, 2, 1),
    4: _series(1, 2, 4, 3, 1),
    5: _series(1, 2, 4, 7, 2, 1),
    6: _series(1, 2, 4, 7, 11, 6, 3),
}

SCHUBERT_QUOTIENT_SERIES: dict[int, tuple[int, ...]] = {
    3: _series(1, 2, 4, 7, 9, 9, 6, 1),
    4: _series(1, 2, 4, 7, 12, 16, 20, 22, 21, 15, 9, 2),
    5: _series(1, 2, 4, 7, 12, 19, 27, 35, 43, 51, 54, 54, 49, 41, 27, 12, 2),
    6: _series(
        1, 2, 4, 7, 12, 19, 30, 42, 57, 73, 92, 110, 127, 138, 149, 151, 144,
        129, 106, 75, 41, 15, 2,
    ),
}

# genus 2 is given in closed form: numerator / (1 - t)
GENUS2_SCHUBERT_NUMERATOR = (1, 1, 2, 0, -2, -1)

# published degree caps (highest listed power of t) for g = 3..6
DEGREE_CAPS = {3: 7, 4: 11, 5: 16, 6: 22}
GENUS2_DEGREE_CAP = 8


def expand_rational_series(numerator: tuple[int, ...], denominator: tuple[int, ...], terms: int) -> list[int]:
    """Power-series coefficients of ``numerator / denominator`` (exact, ``denominator[0] != 0``)."""
    out: list[int] = []
    for n in range(terms):
        acc = Fraction(numerator[n] if n < len(numerator) else 0)
        for k in range(1, min(n, len(denominator) - 1) + 1):
            acc -= denominator[k] * out[n - k]
        value = acc / denominator[0]
        if value.denominator != 1:
            raise ArithmeticError("series has non-integral coefficients")
        out.append(int(value))
    return out


def schubert_series(genus: int, terms: int | None = None) -> list[int]:
    """Published coefficients for A/I, padded with zeros (or expanded for genus 2)."""
    _check_published(genus)
    if genus == 2:
        n = terms if terms is not None else GENUS2_DEGREE_CAP + 1
        return expand_rational_series(GENUS2_SCHUBERT_NUMERATOR, (1, -1), n)
    coeffs = list(SCHUBERT_QUOTIENT_SERIES[genus])
    if terms is not None:
        coeffs = (coeffs + [0] * terms)[:terms]
    return coeffs


def ev_series(genus: int, terms: int | None = None) -> list[int]:
    _check_published(genus)
    coeffs = list(EV_QUOTIENT_SERIES[genus])
    if terms is not None:
        coeffs = (coeffs + [0] * terms)[:terms]
    return coeffs


def _check_published(genus: int) -> None:
    if genus not in EV_QUOTIENT_SERIES:
        raise ValueError(f"no published series for genus {genus} (available: 2..6)")


def degree_cap(genus: int) -> int:
    _check_published(genus)
    if genus == 2:
        return GENUS2_DEGREE_CAP
    return DEGREE_CAPS[genus]
