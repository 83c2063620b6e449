"""Codimension estimates for Weierstrass cycles.

Three bounds are combined per semigroup ``H`` with Weierstrass sequence ``S``:

* the Eisenbud-Harris bound ``codim W_S <= w(S)``;
* the improved bound ``min w(Z)`` over canonical ``Z <= S`` for which ``S`` is
  the cycle selected by ``Z`` (see :func:`admissible`);
* a lower bound ``g - t`` from the dimension bound ``2g - 2 + t`` with
  ``t = |End H minus H|``, against ``dim M_{g,1} = 3g - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import reference_data
from .semigroup import NumericalSemigroup, deligne_dim_upper, end_extension, enumerate_semigroups
from .sequence import (
    GapSequence,
    VCSequence,
    gaps_of_sequence,
    leq,
    sequence_from_gaps,
    sequences_below,
    weight,
)

VARIANTS = ("minimum", "unique")
DEFAULT_ESTIMATE_CAP = 10


@lru_cache(maxsize=None)
def semigroup_sequences(genus: int) -> tuple[VCSequence, ...]:
    """Weierstrass sequences of every numerical semigroup of the genus."""
    return tuple(sequence_from_gaps(GapSequence(genus, h.gaps)) for h in enumerate_semigroups(genus))


def _as_sequence(s) -> VCSequence:
    if isinstance(s, VCSequence):
        return s
    if isinstance(s, NumericalSemigroup):
        return sequence_from_gaps(GapSequence(s.genus, s.gaps))
    return sequence_from_gaps(s)


def eh_bound(s) -> int:
    return weight(_as_sequence(s))


def admissible(s, z, variant: str = "minimum") -> bool:
    """Whether the estimate ``w(Z)`` may be attributed to ``S``.

    ``unique``: ``S`` is the only semigroup sequence dominating ``Z``.
    ``minimum``: ``S`` dominates ``Z`` and lies below every semigroup
    sequence that does.
    """
    s, z = _as_sequence(s), _as_sequence(z)
    if not leq(z, s):
        raise ValueError(f"{z} is not below {s}")
    above = [t for t in semigroup_sequences(s.genus) if leq(z, t)]
    if variant == "unique":
        return above == [s]
    if variant == "minimum":
        return all(leq(s, t) for t in above)
    raise ValueError(f"unknown variant {variant!r}")


def improved_bound(s, variant: str = "minimum") -> tuple[int, list[GapSequence]]:
    """Minimum of ``w(Z)`` over admissible ``Z <= S`` and every minimizing ``Z``.

    ``Z = S`` always competes: it is admissible under ``minimum`` and, under
    ``unique``, stands for the Eisenbud-Harris bound which holds regardless.
    """
    s = _as_sequence(s)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    above_cache = semigroup_sequences(s.genus)
    best = weight(s)
    witnesses = [s]
    for z in sequences_below(s):
        w = weight(z)
        if w > best or z == s:
            continue
        above = [t for t in above_cache if leq(z, t)]
        ok = above == [s] if variant == "unique" else all(leq(s, t) for t in above)
        if not ok:
            continue
        if w < best:
            best, witnesses = w, [z]
        else:
            witnesses.append(z)
    return best, sorted(gaps_of_sequence(z) for z in witnesses)


def codim_lower(h: NumericalSemigroup) -> int:
    return max(0, h.genus - len(end_extension(h)))


def reference_exact_codim(gaps: tuple[int, ...]) -> Optional[int]:
    """Published exact codimension, where one is stated."""
    g = len(gaps)
    if g == 6:
        row = reference_data.GENUS6_ROWS.get(gaps)
        return row[3] if row else None
    if g <= 5:
        if gaps in reference_data.LOW_GENUS_ROWS:
            return reference_data.LOW_GENUS_ROWS[gaps][0]
        return eh_bound(GapSequence(g, gaps))
    return None


def reference_estimate(gaps: tuple[int, ...]) -> Optional[int]:
    if len(gaps) == 6 and gaps in reference_data.GENUS6_ROWS:
        return reference_data.GENUS6_ROWS[gaps][1]
    if gaps in reference_data.LOW_GENUS_ROWS:
        return reference_data.LOW_GENUS_ROWS[gaps][0]
    return None


@dataclass(frozen=True)
class EstimateRecord:
    gap_sequence: GapSequence
    eh_bound: int
    improved_bound: int
    improved_witnesses: list[GapSequence] = field(default_factory=list)
    deligne_dim_upper: int = 0
    codim_lower: int = 0
    exact_codim: Optional[int] = None
    reference_estimate: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "gap_sequence": list(self.gap_sequence.entries),
            "eh_bound": self.eh_bound,
            "improved_bound": self.improved_bound,
            "improved_witnesses": [list(w.entries) for w in self.improved_witnesses],
            "deligne_dim_upper": self.deligne_dim_upper,
            "codim_lower": self.codim_lower,
            "exact_codim": self.exact_codim,
            "reference_estimate": self.reference_estimate,
        }

    @classmethod
    def from_json(cls, data: dict) -> EstimateRecord:
        gaps = tuple(data["gap_sequence"])
        return cls(
            gap_sequence=GapSequence(len(gaps), gaps),
            eh_bound=data["eh_bound"],
            improved_bound=data["improved_bound"],
            improved_witnesses=[GapSequence(len(w), tuple(w)) for w in data["improved_witnesses"]],
            deligne_dim_upper=data["deligne_dim_upper"],
            codim_lower=data["codim_lower"],
            exact_codim=data.get("exact_codim"),
            reference_estimate=data.get("reference_estimate"),
        )


def estimate_record(h: NumericalSemigroup, variant: str = "minimum") -> EstimateRecord:
    gaps = GapSequence(h.genus, h.gaps)
    s = sequence_from_gaps(gaps)
    value, witnesses = improved_bound(s, variant)
    has_end = h.genus >= 1
    return EstimateRecord(
        gap_sequence=gaps,
        eh_bound=weight(s),
        improved_bound=value,
        improved_witnesses=witnesses,
        deligne_dim_upper=deligne_dim_upper(h) if has_end else 0,
        codim_lower=codim_lower(h) if has_end else 0,
        exact_codim=reference_exact_codim(h.gaps),
        reference_estimate=reference_estimate(h.gaps),
    )


def estimates_table(genus: int, variant: str = "minimum", cap: int = DEFAULT_ESTIMATE_CAP) -> list[EstimateRecord]:
    """One record per numerical semigroup of the genus, in gap-list order."""
    semigroups = enumerate_semigroups(genus, cap=cap)
    return [estimate_record(h, variant) for h in semigroups]
