"""Numerical semigroups stored by their gap sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ResourceCapError

DEFAULT_GENUS_CAP = 16


@dataclass(frozen=True, order=True)
class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    Ordering compares gap lists lexicographically, which is the canonical
    enumeration order.
    """

    gaps: tuple[int, ...]
    genus: int = field(init=False, compare=False)
    frobenius: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        gaps = tuple(sorted(int(n) for n in self.gaps))
        if any(n <= 0 for n in gaps) or len(set(gaps)) != len(gaps):
            raise ValueError(f"gaps must be distinct positive integers: {gaps}")
        if not is_numerical_semigroup(gaps):
            raise ValueError(f"{gaps} is not the gap set of a numerical semigroup")
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "genus", len(gaps))
        object.__setattr__(self, "frobenius", gaps[-1] if gaps else -1)

    @classmethod
    def generated_by(cls, *generators: int) -> NumericalSemigroup:
        """The semigroup spanned by coprime generators, e.g. ``generated_by(2, 13)``."""
        if not generators or min(generators) <= 0:
            raise ValueError("need positive generators")
        # every integer past (a-1)(b-1)-ish bounds is reached; a generous bound
        bound = max(generators) * min(generators) + max(generators)
        reach = [False] * (bound + 1)
        reach[0] = True
        for n in range(1, bound + 1):
            reach[n] = any(n >= a and reach[n - a] for a in generators)
        gaps = [n for n in range(1, bound + 1) if not reach[n]]
        if gaps and gaps[-1] > bound - min(generators):
            raise ValueError(f"generators {generators} are not coprime")
        return cls(tuple(gaps))

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        return n not in self._gap_set

    @cached_property
    def _gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element."""
        m = 1
        while m in self._gap_set:
            m += 1
        return m

    def elements_upto(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n in self]

    def minimal_generators(self) -> list[int]:
        bound = self.frobenius + self.multiplicity + 1
        elems = [n for n in self.elements_upto(bound) if n]
        nonzero = set(elems)
        return [n for n in elems if not any(n - a in nonzero for a in elems if a < n)]

    def to_json(self) -> dict:
        return {"genus": self.genus, "gaps": list(self.gaps)}

    @classmethod
    def from_json(cls, data: dict) -> NumericalSemigroup:
        h = cls(tuple(data["gaps"]))
        if "genus" in data and data["genus"] != h.genus:
            raise ValueError("genus field disagrees with gap count")
        return h

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.gaps)) + "}"


def is_numerical_semigroup(gap_set: Iterable[int]) -> bool:
    """True iff the complement of ``gap_set`` in N_0 is closed under addition.

    Only sums up to ``max(gap_set)`` can land on a gap, so the check is finite.
    """
    gaps = set(gap_set)
    if not gaps:
        return True
    top = max(gaps)
    members = [n for n in range(1, top + 1) if n not in gaps]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b > top:
                break
            if a + b in gaps:
                return False
    return True


def _children(gaps: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Semigroup-tree children: remove a minimal generator larger than the Frobenius number."""
    frob = gaps[-1] if gaps else -1
    gap_set = set(gaps)
    mult = 1
    while mult in gap_set:
        mult += 1
    # minimal generators never exceed frobenius + multiplicity + 1
    bound = frob + mult + 1
    elems = [n for n in range(1, bound + 1) if n not in gap_set]
    members = set(elems)
    for n in elems:
        if n <= frob:
            continue
        if any(n - a in members for a in elems if a < n):
            continue
        yield gaps + (n,)


def enumerate_semigroups(genus: int, cap: int = DEFAULT_GENUS_CAP) -> list[NumericalSemigroup]:
    """All numerical semigroups of the given genus, sorted by gap list."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if genus > cap:
        raise ResourceCapError(f"genus {genus} exceeds the enumeration cap {cap}")
    level: list[tuple[int, ...]] = [()]
    for _ in range(genus):
        level = [child for gaps in level for child in _children(gaps)]
    return sorted(NumericalSemigroup(g) for g in level)


def end_extension(h: NumericalSemigroup) -> set[int]:
    """Gaps ``n`` with ``n + x`` in H for every nonzero ``x`` in H.

    These are the elements of ``End H = {n : n + (H minus 0) in H}`` lying
    outside H.  Nonzero ``x`` beyond the Frobenius number need no check.
    """
    if h.genus < 1:
        raise ValueError("end_extension needs genus >= 1")
    nonzero = [x for x in h.elements_upto(h.frobenius) if x]
    return {n for n in h.gaps if all(n + x in h for x in nonzero)}


def deligne_dim_upper(h: NumericalSemigroup, convention: str = "plus") -> int:
    """Upper bound on the dimension of the locus with Weierstrass semigroup H.

    ``plus`` returns ``2g - 2 + t`` and ``minus`` returns ``2g - t - 2``,
    where ``t = |End H minus H|``.
    """
    t = len(end_extension(h))
    g = h.genus
    if convention == "plus":
        return 2 * g - 2 + t
    if convention == "minus":
        return 2 * g - t - 2
    raise ValueError(f"unknown convention {convention!r}")
