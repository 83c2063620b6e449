"""Hilbert functions of two graded approximations of the tautological ring.

``A = Q[lambda_1..lambda_g, psi]`` with ``deg lambda_i = i`` and ``deg psi = 1``.

* ``A / ker(ev)`` where ``ev`` restricts to every torus-fixed point (one per
  numerical semigroup of genus ``g``) via ``lambda_k -> h_k(gaps) psi^k``.
  Its degree-``d`` piece has dimension ``rank ev_matrix(g, d)``.
* ``A / I`` where ``I`` is generated by cycle classes ``[W_mu]`` selected by a
  vanishing criterion.  ``dim (A/I)_d = dim A_d - dim I_d`` with ``I_d``
  spanned by ``m * f`` for generators ``f`` and monomials ``m``.

Everything is exact linear algebra degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import reference_data
from .errors import ResourceCapError
from .polyalg import Poly, Rational, Ring, RowEchelon, monomials_of_degree, rank
from .schur import CycleClass, class_of_cycle
from .semigroup import enumerate_semigroups
from .sequence import Partition, leq, partitions_up_to, sequence_from_partition
from .estimates import semigroup_sequences
from .symmetric import complete_values, elem_values

CRITERIA = ("empty-ge", "empty-le", "explicit")
DEFAULT_GENUS_CAP = 8


@dataclass(frozen=True)
class HilbertFunction:
    genus: int
    values: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def series_text(self, var: str = "t") -> str:
        parts = []
        for d, h in enumerate(self.values):
            if not h:
                continue
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            coeff = str(h) if (h != 1 or d == 0) else ""
            parts.append(coeff + mono)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"genus": self.genus, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> HilbertFunction:
        return cls(data["genus"], tuple(data["values"]))


@dataclass(frozen=True)
class GeneratorSet:
    genus: int
    criterion: str
    degree_cap: int
    classes: tuple[CycleClass, ...] = field(default_factory=tuple)

    @property
    def partitions(self) -> list[Partition]:
        return [c.mu for c in self.classes]

    @property
    def polys(self) -> list[Poly]:
        return [c.poly for c in self.classes]


def _check_genus(g: int, cap: int) -> None:
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g > cap:
        raise ResourceCapError(f"genus {g} exceeds the cap {cap}")


def ev_matrix(g: int, d: int, convention: str = "h", cap: int = DEFAULT_GENUS_CAP) -> list[list[Rational]]:
    """Rows: monomials of ``A_d``; columns: genus-``g`` semigroups.

    The entry is the coefficient of ``psi^d`` in the restriction of the
    monomial to the fixed point.  ``convention="e"`` substitutes ``e_k``
    instead of ``h_k`` (used to check convention independence of ranks).
    """
    _check_genus(g, cap)
    values = complete_values if convention == "h" else elem_values
    if convention not in ("h", "e"):
        raise ValueError(f"unknown convention {convention!r}")
    ring = Ring.lambda_psi(g)
    points = []
    for h in enumerate_semigroups(g):
        points.append([values(k, h.gaps) for k in range(1, g + 1)] + [1])
    rows = []
    for exps in monomials_of_degree(ring, d):
        row = []
        for pt in points:
            v: Rational = 1
            for x, k in zip(pt, exps):
                if k:
                    v *= x**k
            row.append(v)
        rows.append(row)
    return rows


def ev_image_hilbert(g: int, d_max: int, convention: str = "h") -> HilbertFunction:
    return HilbertFunction(g, tuple(rank(ev_matrix(g, d, convention)) for d in range(d_max + 1)))


def vanishing_mus(
    g: int,
    degree_cap: int,
    criterion: str = "empty-ge",
    explicit: Iterable[Sequence[int]] | None = None,
) -> GeneratorSet:
    """Partitions whose Schubert cycle misses the Krichever locus, with their classes.

    ``empty-ge``: no semigroup sequence dominates ``Z(mu)``.
    ``empty-le``: no semigroup sequence lies below ``Z(mu)``.
    ``explicit``: the partitions given in ``explicit``.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"unknown criterion {criterion!r}")
    _check_genus(g, DEFAULT_GENUS_CAP)
    if criterion == "explicit":
        mus = [Partition(m) for m in (explicit or [])]
        if any(m.size > degree_cap for m in mus):
            raise ValueError("explicit generator above the degree cap")
    else:
        seqs = semigroup_sequences(g)
        mus = []
        for mu in partitions_up_to(degree_cap, max_len=g):
            z = sequence_from_partition(mu, g)
            if criterion == "empty-ge":
                empty = not any(leq(z, s) for s in seqs)
            else:
                empty = not any(leq(s, z) for s in seqs)
            if empty:
                mus.append(mu)
    return GeneratorSet(g, criterion, degree_cap, tuple(class_of_cycle(mu, g) for mu in mus))


def _row(poly: Poly, index: dict[tuple[int, ...], int]) -> dict[int, Rational]:
    return {index[e]: c for e, c in poly.terms.items()}


def ideal_hilbert(gens: GeneratorSet | Sequence[Poly], d_max: int, genus: int | None = None) -> HilbertFunction:
    """Hilbert function of ``A / (gens)`` for homogeneous generators, degrees ``0..d_max``."""
    if isinstance(gens, GeneratorSet):
        polys = gens.polys
        genus = gens.genus
    else:
        polys = list(gens)
        if genus is None:
            if not polys:
                raise ValueError("genus is required for an empty generator list")
            genus = polys[0].ring.nvars - 1
    ring = Ring.lambda_psi(genus)
    gens_by_degree: list[tuple[int, Poly]] = []
    for f in polys:
        if f.ring != ring:
            raise ValueError("generator lives in the wrong ring")
        if f.is_zero():
            continue
        if not f.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {f}")
        gens_by_degree.append((f.degree(), f))
    values = []
    for d in range(d_max + 1):
        basis = monomials_of_degree(ring, d)
        index = {e: i for i, e in enumerate(basis)}
        ech = RowEchelon()
        full = len(basis)
        for deg, f in gens_by_degree:
            if deg > d or ech.rank == full:
                continue
            for m in monomials_of_degree(ring, d - deg):
                ech.add(_row(f * ring.monomial(m), index))
                if ech.rank == full:
                    break
        values.append(full - ech.rank)
    return HilbertFunction(genus, tuple(values))


def schubert_quotient_hilbert(g: int, d_max: int, criterion: str = "empty-ge") -> HilbertFunction:
    return ideal_hilbert(vanishing_mus(g, d_max, criterion), d_max)


@dataclass(frozen=True)
class ComparisonRow:
    degree: int
    computed: int
    paper: int
    match: bool

    def to_json(self) -> dict:
        return {"degree": self.degree, "computed": self.computed, "paper": self.paper, "match": self.match}


@dataclass(frozen=True)
class ComparisonReport:
    genus: int
    target: str
    criterion: str | None
    rows: tuple[ComparisonRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "ideal": self.target,
            "criterion": self.criterion,
            "all_match": self.all_match,
            "rows": [r.to_json() for r in self.rows],
        }


def reference_series(g: int, target: str, terms: int) -> list[int]:
    if target == "A_Iev":
        return reference_data.ev_series(g, terms)
    if target == "A_I":
        return reference_data.schubert_series(g, terms)
    raise ValueError(f"unknown target {target!r}")


def compare_with_paper(g: int, series: HilbertFunction | Sequence[int], target: str, criterion: str | None = None) -> ComparisonReport:
    """Per-degree comparison with the published series; reporting only."""
    values = series.values if isinstance(series, HilbertFunction) else tuple(series)
    ref = reference_series(g, target, len(values))
    rows = tuple(ComparisonRow(d, a, b, a == b) for d, (a, b) in enumerate(zip(values, ref)))
    return ComparisonReport(g, target, criterion, rows)


def calibrate(g: int, d_max: int | None = None) -> list[ComparisonReport]:
    """Compare both quotients (and both Schubert criteria) with the published series."""
    if d_max is None:
        d_max = reference_data.degree_cap(g)
    reports = [compare_with_paper(g, ev_image_hilbert(g, d_max), "A_Iev")]
    for criterion in ("empty-ge", "empty-le"):
        reports.append(compare_with_paper(g, schubert_quotient_hilbert(g, d_max, criterion), "A_I", criterion))
    return reports
