"""Exact multivariate polynomials over the rationals with weighted gradings.

A :class:`Ring` carries the variable names and their positive integer
weights; a :class:`Poly` is a sparse map from exponent vectors to nonzero
rational coefficients.  Coefficients are ``int`` whenever they are integral
and :class:`fractions.Fraction` otherwise, so integer-heavy workloads stay on
the fast path.

The module also hosts the exact linear algebra the rest of the package is
built on: determinants (fraction-free elimination or memoized cofactor
expansion) and ranks of rational matrices.
"""

from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DivisibilityError

Rational = Union[int, Fraction]
Exps = tuple[int, ...]


def as_rational(value) -> Rational:
    """Normalize an int/Fraction (or rational string) to the canonical form."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(value: Rational) -> str:
    value = as_rational(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


# --------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class Ring:
    """Ordered variables with per-variable degree weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @classmethod
    def uniform(cls, prefix: str, n: int) -> Ring:
        """Variables ``prefix_1 .. prefix_n`` all of weight 1."""
        return cls(tuple(f"{prefix}_{i}" for i in range(1, n + 1)), (1,) * n)

    @classmethod
    def indexed(cls, prefix: str, n: int) -> Ring:
        """Variables ``prefix_k`` of weight ``k`` (elementary/complete bases)."""
        return cls(tuple(f"{prefix}_{i}" for i in range(1, n + 1)), tuple(range(1, n + 1)))

    @classmethod
    def lambda_psi(cls, genus: int) -> Ring:
        """The algebra Q[lambda_1..lambda_g, psi], deg lambda_i = i, deg psi = 1."""
        names = tuple(f"lambda_{i}" for i in range(1, genus + 1)) + ("psi",)
        return cls(names, tuple(range(1, genus + 1)) + (1,))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a variable of {self.names}") from None

    def degree_of(self, exps: Exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def zero(self) -> Poly:
        return Poly(self)

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        return Poly(self, {(0,) * self.nvars: c})

    def gen(self, which: int | str) -> Poly:
        i = self.index(which) if isinstance(which, str) else which
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): 1})

    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> Poly:
        return Poly(self, {tuple(exps): coeff})

    def monomials_of_degree(self, d: int) -> list[Exps]:
        return list(monomials_of_degree(self, d))

    def parse(self, text: str) -> Poly:
        return parse_poly(self, text)


def _order_key(ring: Ring, exps: Exps) -> tuple[int, Exps]:
    # graded lexicographic; larger key = earlier in canonical order
    return ring.degree_of(exps), exps


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """An immutable polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Sequence[int], object] | None = None):
        self.ring = ring
        clean: dict[Exps, Rational] = {}
        n = ring.nvars
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            c = as_rational(c)
            if c:
                clean[exps] = as_rational(clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[Exps, Rational]) -> Poly:
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exps, Rational]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, Rational]]:
        """Terms in canonical (graded lexicographic, descending) order."""
        return sorted(self._terms.items(), key=lambda t: _order_key(self.ring, t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exps, Rational]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(tuple(exps), 0)

    def constant_term(self) -> Rational:
        return self._terms.get((0,) * self.ring.nvars, 0)

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return all(e == zero for e in self._terms)

    def degree(self) -> int:
        """Weighted total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self.ring.degree_of(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree_of(e) for e in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, Poly]:
        return homogeneous_components(self)

    def variables_used(self) -> set[int]:
        return {i for e in self._terms for i, k in enumerate(e) if k}

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = as_rational(v)
            else:
                out.pop(e, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = as_rational(other)
            if not c:
                return self.ring.zero()
            return Poly._raw(self.ring, {e: as_rational(v * c) for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exps, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.ring, {e: as_rational(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero")
            return self * (Fraction(1) / as_rational(other))
        if isinstance(other, Poly):
            return exact_divide(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == self.ring.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, divisor)

    # -- substitution ------------------------------------------------------

    def evaluate(self, values: Sequence) -> Rational:
        """Value at a point given one exact rational per variable."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        vals = [as_rational(v) for v in values]
        total: Rational = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return as_rational(total)

    def compose(self, images: Sequence, target: Ring) -> Poly:
        """Substitute ``images[i]`` (polynomial in ``target`` or scalar) for variable i."""
        if len(images) != self.ring.nvars:
            raise ValueError("wrong number of images")
        imgs = [im if isinstance(im, Poly) else target.const(im) for im in images]
        for im in imgs:
            if im.ring != target:
                raise ValueError("image lives in the wrong ring")
        powers: list[dict[int, Poly]] = [{0: target.one(), 1: im} for im in imgs]

        def power(i: int, k: int) -> Poly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * imgs[i]
            return cache[k]

        acc: dict[Exps, Rational] = {}
        for e, c in self._terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term._terms.items():
                acc[te] = acc.get(te, 0) + tc
        return Poly._raw(target, {e: as_rational(c) for e, c in acc.items() if c})

    def map_ring(self, target: Ring) -> Poly:
        """Reinterpret the same exponent vectors in a compatible ring."""
        if target.nvars != self.ring.nvars:
            raise ValueError("rings differ in variable count")
        return Poly._raw(target, dict(self._terms))

    def permute(self, perm: Sequence[int]) -> Poly:
        """Apply the variable substitution x_i -> x_{perm[i]}."""
        out: dict[Exps, Rational] = {}
        n = self.ring.nvars
        for e, c in self._terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[perm[i]] += k
            out[tuple(new)] = c
        return Poly._raw(self.ring, out)

    # -- rendering ---------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        return format_poly(self.items(), names or self.ring.names)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


# --------------------------------------------------------------------------
# text format


def format_monomial(exps: Sequence[int], names: Sequence[str], sep: str = "*") -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return sep.join(parts)


def format_poly(terms: Iterable[tuple[Sequence[int], Rational]], names: Sequence[str]) -> str:
    """Render ordered terms as e.g. ``3*psi - lambda_1`` or ``1/2*x_1^2 + 3``."""
    out = []
    for exps, c in terms:
        c = as_rational(c)
        mono = format_monomial(exps, names)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out) if out else "0"


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")
_TOKEN_RE = re.compile(
    r"[\s*]*(?:(?P<num>\d+(?:/\d+)?)"
    r"|(?P<var>\\?[A-Za-z]+(?:_\{?\d+\}?|\d+)?)(?:\^\{?(?P<exp>\d+)\}?)?)[\s*]*"
)


def _normalize_name(name: str) -> str:
    return name.replace("\\", "").replace("{", "").replace("}", "")


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse the text format (``*`` or whitespace between factors).

    Also accepts light LaTeX such as ``x_1^2 x_2`` or ``\\lambda_{1}``.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    lookup = {_normalize_name(n): i for i, n in enumerate(ring.names)}
    acc = ring.zero()
    pos = 0
    for m in _TERM_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff: Rational = sign
        exps = [0] * ring.nvars
        at = 0
        while at < len(body):
            fm = _TOKEN_RE.match(body, at)
            if fm is None or fm.end() == at:
                raise ValueError(f"bad factor {body[at:]!r} in {text!r}")
            at = fm.end()
            if fm.group("num"):
                coeff = as_rational(coeff * Fraction(fm.group("num")))
            else:
                name = _normalize_name(fm.group("var"))
                if name not in lookup:
                    raise ValueError(f"unknown variable {name!r}")
                exps[lookup[name]] += int(fm.group("exp") or 1)
        acc = acc + ring.monomial(exps, coeff)
    if text[pos:].strip():
        raise ValueError(f"cannot parse {text!r}")
    return acc


# --------------------------------------------------------------------------
# structural operations


def homogeneous_components(f: Poly) -> dict[int, Poly]:
    """Split ``f`` into weighted-homogeneous pieces keyed by degree."""
    buckets: dict[int, dict[Exps, Rational]] = {}
    for e, c in f._terms.items():
        buckets.setdefault(f.ring.degree_of(e), {})[e] = c
    return {d: Poly._raw(f.ring, t) for d, t in sorted(buckets.items())}


def monomials_of_degree(ring: Ring, d: int) -> list[Exps]:
    """All exponent vectors of weighted degree exactly ``d``, descending lex order."""
    if d < 0:
        return []
    return list(_monomials(ring.weights, d))


@lru_cache(maxsize=None)
def _monomials(weights: tuple[int, ...], d: int) -> tuple[Exps, ...]:
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for k in range(d // w, -1, -1):
        for tail in _monomials(rest, d - k * w):
            out.append((k,) + tail)
    return tuple(out)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Multivariate division of ``f`` by a single divisor ``g`` (lex order).

    Returns ``(q, r)`` with ``f = q*g + r`` and no term of ``r`` divisible by
    the leading monomial of ``g``.  With one divisor the remainder is zero
    exactly when ``g`` divides ``f``.
    """
    if f.ring != g.ring:
        raise ValueError("polynomials live in different rings")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = max(g._terms)
    lead_c = g._terms[lead]
    tail = [(e, c) for e, c in g._terms.items() if e != lead]

    work = dict(f._terms)
    heap = [tuple(-k for k in e) for e in work]
    heapq.heapify(heap)
    quot: dict[Exps, Rational] = {}
    rem: dict[Exps, Rational] = {}
    while heap:
        key = heapq.heappop(heap)
        while heap and heap[0] == key:
            heapq.heappop(heap)
        e = tuple(-k for k in key)
        c = work.pop(e, 0)
        if not c:
            continue
        if all(a >= b for a, b in zip(e, lead)):
            shift = tuple(a - b for a, b in zip(e, lead))
            qc = as_rational(Fraction(c) / lead_c)
            quot[shift] = qc
            for te, tc in tail:
                m = tuple(a + b for a, b in zip(shift, te))
                v = work.get(m, 0) - qc * tc
                if m not in work:
                    heapq.heappush(heap, tuple(-k for k in m))
                if v:
                    work[m] = as_rational(v)
                else:
                    work[m] = 0
        else:
            rem[e] = c
    return Poly._raw(f.ring, quot), Poly._raw(f.ring, rem)


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Quotient ``f / g``; raises :class:`DivisibilityError` on a remainder."""
    q, r = poly_divmod(f, g)
    if r:
        raise DivisibilityError(f"{g} does not divide {f} (remainder {r})")
    return q


def divide_by_difference(f: Poly, i: int, j: int) -> Poly:
    """Exact quotient ``f / (x_i - x_j)`` by synthetic division in ``x_i``.

    Writing ``f = sum_k a_k x_i^k``, the quotient coefficients satisfy
    ``q_(k-1) = a_k + x_j q_k``; the remainder ``f(x_i = x_j)`` must vanish.
    """
    if i == j:
        raise ZeroDivisionError("x_i - x_i is zero")
    by_power: dict[int, dict[Exps, Rational]] = {}
    for e, c in f.terms.items():
        rest = e[:i] + (0,) + e[i + 1:]
        by_power.setdefault(e[i], {})[rest] = c
    quot: dict[Exps, Rational] = {}
    carry: dict[Exps, Rational] = {}
    for k in range(max(by_power, default=0), -1, -1):
        layer = dict(by_power.get(k, {}))
        for e, c in carry.items():
            shifted = e[:j] + (e[j] + 1,) + e[j + 1:]
            v = layer.get(shifted, 0) + c
            if v:
                layer[shifted] = v
            else:
                layer.pop(shifted, None)
        if k == 0:
            if layer:
                raise DivisibilityError(f"x_{i} - x_{j} does not divide {f}")
            break
        for e, c in layer.items():
            quot[e[:i] + (k - 1,) + e[i + 1:]] = c
        carry = layer
    return Poly._raw(f.ring, quot)


# --------------------------------------------------------------------------
# matrices


def _square(matrix: Sequence[Sequence]) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    return n


def _poly_ring(matrix: Sequence[Sequence]) -> Ring | None:
    for row in matrix:
        for x in row:
            if isinstance(x, Poly):
                return x.ring
    return None


def det(matrix: Sequence[Sequence], method: str = "bareiss"):
    """Exact determinant of a square matrix of rationals or polynomials.

    ``method`` is ``"bareiss"`` (fraction-free elimination) or ``"cofactor"``
    (Laplace expansion memoized over column subsets, fine up to n = 8 or so).
    """
    n = _square(matrix)
    ring = _poly_ring(matrix)
    if ring is not None:
        rows = [[x if isinstance(x, Poly) else ring.const(x) for x in row] for row in matrix]
        one, zero = ring.one(), ring.zero()
    else:
        rows = [[as_rational(x) for x in row] for row in matrix]
        one, zero = 1, 0
    if n == 0:
        return one
    if method == "cofactor":
        return _det_cofactor(rows, zero)
    if method != "bareiss":
        raise ValueError(f"unknown determinant method {method!r}")
    return _det_bareiss(rows, one, zero, ring is not None)


def _det_bareiss(rows, one, zero, is_poly: bool):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if is_poly:
                    m[i][j] = num if prev == 1 else exact_divide(num, prev)
                else:
                    m[i][j] = as_rational(Fraction(num) / prev)
            m[i][k] = zero
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def _det_cofactor(rows, zero):
    n = len(rows)
    memo: dict[tuple[int, int], object] = {}

    def minor(r: int, cols: int):
        # determinant of rows r..n-1 restricted to the column bitmask ``cols``
        if r == n:
            return 1
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = zero
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                a = rows[r][j]
                if a:
                    sub = minor(r + 1, cols & ~(1 << j))
                    if sub:
                        total = total + a * sub if sign > 0 else total - a * sub
                sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


class RowEchelon:
    """Incremental fraction-free row echelon form over the integers.

    Rows are sparse ``{column: value}`` maps of exact rationals; each row is
    scaled to primitive integers before elimination, so no fractions appear
    during reduction.
    """

    def __init__(self) -> None:
        self._pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @staticmethod
    def _primitive(row: Mapping[int, Rational]) -> dict[int, int]:
        vals = {c: Fraction(v) for c, v in row.items() if v}
        if not vals:
            return {}
        den = math.lcm(*(v.denominator for v in vals.values()))
        ints = {c: int(v * den) for c, v in vals.items()}
        g = math.gcd(*ints.values())
        return {c: v // g for c, v in ints.items()}

    def reduce(self, row: Mapping[int, Rational]) -> dict[int, int]:
        v = self._primitive(row)
        while v:
            lead = min(v)
            p = self._pivots.get(lead)
            if p is None:
                break
            a, b = p[lead], v[lead]
            out = {c: a * x for c, x in v.items()}
            for c, x in p.items():
                y = out.get(c, 0) - b * x
                if y:
                    out[c] = y
                else:
                    out.pop(c, None)
            v = self._primitive(out)
        return v

    def add(self, row: Mapping[int, Rational]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        v = self.reduce(row)
        if not v:
            return False
        self._pivots[min(v)] = v
        return True


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    ech = RowEchelon()
    for row in matrix:
        ech.add({j: as_rational(x) for j, x in enumerate(row) if x})
    return ech.rank


def transpose(matrix: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*matrix)] if matrix else []
