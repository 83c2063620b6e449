"""Command-line front end.

Every subcommand calls one library function and hands the result to
:mod:`wcycles.render`.  Exit status is 0 on success, 2 on usage or argument
errors and 3 when a resource cap is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import render
from .errors import ResourceCapError
from .estimates import DEFAULT_ESTIMATE_CAP, VARIANTS, estimates_table
from .schur import class_of_cycle, shifted_components, table_partitions
from .semigroup import DEFAULT_GENUS_CAP, enumerate_semigroups
from .sequence import Partition
from .tautring import calibrate, ev_image_hilbert, schubert_quotient_hilbert

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3

CRITERION_FLAGS = {"ge": "empty-ge", "le": "empty-le"}


def _mu(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _genus_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad genus list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("semigroups", help="list numerical semigroups of a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_GENUS_CAP)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("estimates", help="codimension estimates per semigroup")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="minimum")
    p.add_argument("--cap", type=int, default=DEFAULT_ESTIMATE_CAP)
    p.add_argument("--format", choices=("json", "text", "latex"), default="text")

    p = sub.add_parser("class", help="cohomology class of a Weierstrass cycle")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mu", type=_mu, required=True, help="partition, e.g. 2,1")
    p.add_argument("--format", choices=("json", "text", "latex"), default="text")
    p.add_argument("--ascii", action="store_true", help="write psi, L1, L2 instead of unicode")

    p = sub.add_parser("schur-table", help="homogeneous components of shifted factorial Schur polynomials")
    p.add_argument("--genus", type=_genus_list, default=[2, 3, 4, 5])
    p.add_argument("--format", choices=("json", "text", "latex"), default="text")

    p = sub.add_parser("table1", help="classes of all expected-codimension cycles")
    p.add_argument("--genus", type=_genus_list, default=[2, 3, 4, 5])
    p.add_argument("--format", choices=("json", "text", "latex"), default="text")
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("hilbert", help="Hilbert function of a quotient of the lambda-psi algebra")
    p.add_argument("--genus", type=_genus_list, required=True)
    p.add_argument("--ideal", choices=("ev", "schubert"), default="schubert")
    p.add_argument("--criterion", choices=tuple(CRITERION_FLAGS), default="ge")
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("calibrate", help="compare computed Hilbert functions with the published series")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _semigroups(args) -> str:
    return render.render(enumerate_semigroups(args.genus, cap=args.cap), args.format)


def _estimates(args) -> str:
    return render.render(estimates_table(args.genus, args.variant, cap=args.cap), args.format)


def _style(args) -> str:
    if args.format == "latex":
        return "latex"
    return "ascii" if getattr(args, "ascii", False) else "text"


def _class(args) -> str:
    return render.render(class_of_cycle(args.mu, args.genus), args.format, args.ascii)


def _table1(args) -> str:
    classes = [class_of_cycle(mu, g) for g in args.genus for mu in table_partitions(g)]
    if args.format == "json":
        return render.dump_json([render.class_to_json(c) for c in classes])
    style = _style(args)
    rows = [[str(c.genus), str(c.mu), str(c.degree), render.format_class(c, style)] for c in classes]
    if style == "latex":
        return "\n".join(" & ".join(r[:3] + [f"${r[3]}$"]) + " \\\\" for r in rows)
    return render.format_table(("genus", "mu", "codim", "class"), rows)


def _schur_table(args) -> str:
    entries = [(g, mu, shifted_components(mu, g)) for g in args.genus for mu in table_partitions(g)]
    if args.format == "json":
        return render.dump_json([render.components_to_json(g, mu, comps) for g, mu, comps in entries])
    rows = []
    for g, mu, comps in entries:
        for i in sorted(comps):
            rows.append([str(g), str(mu), str(i), render.format_component(comps[i], args.format)])
    if args.format == "latex":
        return "\n".join(f"{g} & $t_{{{mu}}}^{i}$ & ${p}$ \\\\" for g, mu, i, p in rows)
    return render.format_table(("genus", "mu", "degree", "component"), rows)


def _hilbert(args) -> str:
    results = []
    for g in args.genus:
        if args.ideal == "ev":
            results.append(ev_image_hilbert(g, args.max_degree))
        else:
            results.append(schubert_quotient_hilbert(g, args.max_degree, CRITERION_FLAGS[args.criterion]))
    return render.render(results, args.format)


def _calibrate(args) -> str:
    return render.render(calibrate(args.genus, args.max_degree), args.format)


HANDLERS = {
    "semigroups": _semigroups,
    "estimates": _estimates,
    "class": _class,
    "table1": _table1,
    "schur-table": _schur_table,
    "hilbert": _hilbert,
    "calibrate": _calibrate,
}


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute a command line; return ``(exit status, output)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), ""
    try:
        return EXIT_OK, HANDLERS[args.command](args)
    except ResourceCapError as exc:
        return EXIT_CAP, f"error: {exc}"
    except (ValueError, KeyError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv: Sequence[str] | None = None) -> int:
    status, output = run(argv)
    if output:
        stream = sys.stdout if status == EXIT_OK else sys.stderr
        print(output, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
