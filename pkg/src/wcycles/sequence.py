"""Labels of Schubert cells of virtual cardinality g.

Three interchangeable encodings are used throughout the package:

* :class:`VCSequence` -- the strictly decreasing head ``(z_1, ..., z_g)`` of a
  sequence of virtual cardinality ``g``; the tail ``z_i = g - i - 1`` for
  ``i > g`` is implicit.  Only canonical sequences (``z_g >= 0``) exist here.
* :class:`GapSequence` -- ``gamma_i = z_{g-i+1} + 1``, strictly increasing.
* :class:`Partition` -- ``mu_i = z_i - (g - i)``.

The weight ``w(Z) = sum_i (z_i + i - g)`` is the codimension of the cell and
equals ``|mu|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (zeros are trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, tuple(p for p in parts if p))

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """Young-diagram containment ``other <= self``."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem: int, cap: int, room: int, prefix: tuple[int, ...]):
        if rem == 0:
            yield Partition(prefix)
            return
        if room == 0:
            return
        for p in range(min(rem, cap), 0, -1):
            yield from rec(rem - p, p, room - 1, prefix + (p,))

    yield from rec(n, max_part, max_len, ())


def partitions_up_to(total: int, max_len: int | None = None, min_size: int = 0) -> list[Partition]:
    """All partitions with ``min_size <= |mu| <= total``, by size then reverse lex."""
    out: list[Partition] = []
    for n in range(min_size, total + 1):
        out.extend(partitions(n, max_len=max_len))
    return out


@dataclass(frozen=True, order=True)
class VCSequence:
    genus: int
    head: tuple[int, ...]

    def __post_init__(self) -> None:
        head = tuple(int(z) for z in self.head)
        object.__setattr__(self, "head", head)
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if len(head) != self.genus:
            raise ValueError(f"expected {self.genus} entries, got {len(head)}")
        if any(a <= b for a, b in zip(head, head[1:])):
            raise ValueError(f"sequence must strictly decrease: {head}")
        if head and head[-1] < 0:
            raise ValueError("canonical sequences need z_g >= 0")

    @classmethod
    def generic(cls, genus: int) -> VCSequence:
        return cls(genus, tuple(range(genus - 1, -1, -1)))

    def z(self, i: int) -> int:
        """Entry ``z_i`` (1-based) of the full infinite sequence."""
        if i < 1:
            raise IndexError(i)
        return self.head[i - 1] if i <= self.genus else self.genus - i - 1

    def to_json(self) -> dict:
        return {"genus": self.genus, "z": list(self.head)}

    @classmethod
    def from_json(cls, data: dict) -> VCSequence:
        return cls(data["genus"], tuple(data["z"]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.head)) + ")"


@dataclass(frozen=True, order=True)
class GapSequence:
    genus: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.genus:
            raise ValueError(f"expected {self.genus} gaps, got {len(entries)}")
        if entries and entries[0] < 1:
            raise ValueError("gaps are positive")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"gap sequence must strictly increase: {entries}")

    @classmethod
    def of(cls, entries: Iterable[int]) -> GapSequence:
        entries = tuple(sorted(entries))
        return cls(len(entries), entries)

    def to_json(self) -> dict:
        return {"genus": self.genus, "gaps": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> GapSequence:
        return cls(data["genus"], tuple(data["gaps"]))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.entries)) + "}"


def sequence_from_gaps(gaps: GapSequence | Sequence[int]) -> VCSequence:
    if not isinstance(gaps, GapSequence):
        gaps = GapSequence.of(gaps)
    return VCSequence(gaps.genus, tuple(n - 1 for n in reversed(gaps.entries)))


def gaps_of_sequence(z: VCSequence) -> GapSequence:
    return GapSequence(z.genus, tuple(x + 1 for x in reversed(z.head)))


def partition_of(z: VCSequence) -> Partition:
    g = z.genus
    return Partition(zi - (g - i) for i, zi in enumerate(z.head, start=1))


def sequence_from_partition(mu: Sequence[int], genus: int) -> VCSequence:
    mu = Partition(mu)
    if len(mu) > genus:
        raise ValueError(f"partition {mu} has more than {genus} parts")
    return VCSequence(genus, tuple(m + genus - i for i, m in enumerate(mu.padded(genus), start=1)))


def weight(z: VCSequence) -> int:
    g = z.genus
    return sum(zi + i - g for i, zi in enumerate(z.head, start=1))


def leq(a: VCSequence, b: VCSequence) -> bool:
    """Dominance ``a <= b``: componentwise on heads (tails agree)."""
    if a.genus != b.genus:
        raise ValueError(f"genus mismatch: {a.genus} vs {b.genus}")
    return all(x <= y for x, y in zip(a.head, b.head))


def sequences_below(s: VCSequence) -> Iterator[VCSequence]:
    """Every canonical ``Z <= s`` (strictly decreasing, ``0 <= z_i <= s_i``)."""
    g = s.genus

    def rec(i: int, upper: int, prefix: tuple[int, ...]):
        if i == g:
            yield VCSequence(g, prefix)
            return
        # leave room for the g - i - 1 remaining strictly smaller entries
        lo = g - i - 1
        for zi in range(min(upper, s.head[i]), lo - 1, -1):
            yield from rec(i + 1, zi - 1, prefix + (zi,))

    yield from rec(0, s.head[0] if g else 0, ())
