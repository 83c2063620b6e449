"""Text, LaTeX and JSON rendering of library results."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .estimates import EstimateRecord
from .polyalg import Poly, Rational, Ring, as_rational, format_rational
from .schur import CycleClass, NORMALIZATION
from .semigroup import NumericalSemigroup
from .sequence import Partition
from .symmetric import SymmetricExpression
from .tautring import ComparisonReport, HilbertFunction

MINUS = "−"


def dump_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


# -- cycle classes ---------------------------------------------------------


def _class_factors(lam: Sequence[int], psi: int, style: str) -> list[str]:
    out = []
    if psi:
        if style == "latex":
            out.append("\\psi" + (f"^{{{psi}}}" if psi > 1 else ""))
        elif style == "ascii":
            out.append("psi" + (f"^{psi}" if psi > 1 else ""))
        else:
            out.append("ψ" + (f"^{psi}" if psi > 1 else ""))
    for k, a in enumerate(lam, start=1):
        if not a:
            continue
        if style == "latex":
            out.append(f"\\lambda_{{{k}}}" + (f"^{{{a}}}" if a > 1 else ""))
        elif style == "ascii":
            out.append(f"L{k}" + (f"^{a}" if a > 1 else ""))
        else:
            out.append(f"λ_{k}" + (f"^{a}" if a > 1 else ""))
    return out


def _coeff_latex(c: Rational) -> str:
    c = as_rational(c)
    if isinstance(c, Fraction):
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def format_class(c: CycleClass, style: str = "text") -> str:
    """Render ``[W_mu]`` with psi-descending term order.

    ``style`` is ``text`` (unicode), ``ascii`` or ``latex``.
    """
    pieces: list[str] = []
    for coeff, lam, psi in c.terms():
        factors = _class_factors(lam, psi, style)
        mag = abs(coeff)
        if style == "latex":
            body = "".join(factors)
            num = _coeff_latex(mag)
        else:
            body = ("*" if style == "ascii" else "").join(factors)
            num = format_rational(mag)
        if not factors:
            term = num
        elif mag == 1:
            term = body
        else:
            term = f"{num}*{body}" if style == "ascii" else f"{num}{body}"
        negative = coeff < 0
        if style == "latex":
            pieces.append(("-" if negative else ("+" if pieces else "")) + term)
        else:
            minus = "-" if style == "ascii" else MINUS
            if not pieces:
                pieces.append((minus if negative else "") + term)
            else:
                pieces.append(f"{minus if negative else '+'} {term}")
    if not pieces:
        return "0"
    return ("" if style == "latex" else " ").join(pieces)


def class_to_json(c: CycleClass) -> dict:
    return {
        "genus": c.genus,
        "mu": list(c.mu),
        "normalization": c.normalization,
        "expected_codimension": c.expected_codimension,
        "terms": [
            {"coeff": format_rational(coeff), "lambda_exponents": list(lam), "psi_exponent": psi}
            for coeff, lam, psi in c.terms()
        ],
    }


def class_from_json(data: dict) -> CycleClass:
    g = data["genus"]
    ring = Ring.lambda_psi(g)
    terms = {tuple(t["lambda_exponents"]) + (t["psi_exponent"],): Fraction(t["coeff"]) for t in data["terms"]}
    return CycleClass(g, Partition(data["mu"]), Poly(ring, terms), data.get("normalization", NORMALIZATION))


# -- factorial Schur components ---------------------------------------------


def format_component(expr: SymmetricExpression, style: str = "text") -> str:
    if style == "latex":
        return expr.poly.to_text().replace("*", " ")
    return expr.poly.to_text()


def components_to_json(g: int, mu: Partition, comps: dict[int, SymmetricExpression]) -> dict:
    return {
        "genus": g,
        "mu": list(mu),
        "components": [{"degree": i, "poly": comps[i].poly.to_text()} for i in sorted(comps)],
    }


# -- estimates ---------------------------------------------------------------


ESTIMATE_HEADERS = ("gap sequence of S", "E-H", "our estimate", "gap sequence of Z", "codim lower", "dim upper", "exact codim")


def _gaps_text(gaps: Sequence[int]) -> str:
    return "{" + ",".join(map(str, gaps)) + "}"


def _estimate_cells(r: EstimateRecord) -> list[str]:
    return [
        _gaps_text(r.gap_sequence.entries),
        str(r.eh_bound),
        str(r.improved_bound),
        " ".join(_gaps_text(w.entries) for w in r.improved_witnesses),
        str(r.codim_lower),
        str(r.deligne_dim_upper),
        "-" if r.exact_codim is None else str(r.exact_codim),
    ]


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def format_estimates(records: Sequence[EstimateRecord], style: str = "text") -> str:
    rows = [_estimate_cells(r) for r in records]
    if style == "latex":
        out = ["\\begin{tabular}{|l|c|c|l|c|c|c|}", "\\hline", " & ".join(ESTIMATE_HEADERS) + " \\\\ \\hline"]
        for r in rows:
            cells = [c.replace("{", "\\{").replace("}", "\\}") for c in r]
            cells = [f"${c}$" if c.startswith("\\{") else c for c in cells]
            out.append(" & ".join(cells) + " \\\\")
        out += ["\\hline", "\\end{tabular}"]
        return "\n".join(out)
    return format_table(ESTIMATE_HEADERS, rows)


# -- Hilbert functions ------------------------------------------------------


def format_hilbert(h: HilbertFunction) -> str:
    return f"h = {', '.join(map(str, h.values))}"


def format_report(report: ComparisonReport) -> str:
    title = f"genus {report.genus}  {report.target}" + (f"  criterion {report.criterion}" if report.criterion else "")
    rows = [[str(r.degree), str(r.computed), str(r.paper), "yes" if r.match else "no"] for r in report.rows]
    return title + "\n" + format_table(("degree", "computed", "paper", "match"), rows)


def semigroups_text(semigroups: Sequence[NumericalSemigroup]) -> str:
    return "\n".join(str(h) for h in semigroups)


def _to_json(item):
    if isinstance(item, CycleClass):
        return class_to_json(item)
    if hasattr(item, "to_json"):
        return item.to_json()
    raise TypeError(f"cannot serialise {type(item).__name__}")


def render(result, fmt: str = "text", ascii: bool = False) -> str:
    """Render a library result (or a list of results of one kind)."""
    items = result if isinstance(result, list) else [result]
    if fmt == "json":
        payload = [_to_json(x) for x in items]
        return dump_json(payload if isinstance(result, list) else payload[0])
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    if not items:
        return ""
    first = items[0]
    if isinstance(first, EstimateRecord):
        return format_estimates(items, fmt)
    if isinstance(first, NumericalSemigroup):
        return semigroups_text(items)
    style = "latex" if fmt == "latex" else ("ascii" if ascii else "text")
    if isinstance(first, CycleClass):
        return "\n".join(format_class(c, style) for c in items)
    if isinstance(first, HilbertFunction):
        return "\n".join(format_hilbert(h) for h in items)
    if isinstance(first, ComparisonReport):
        return "\n\n".join(format_report(r) for r in items)
    raise TypeError(f"cannot render {type(first).__name__}")
