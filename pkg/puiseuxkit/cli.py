"""
Command-line interface.

    python -m puiseuxkit distinguished "T^(2/4)+T^(3/4)" --order lex --json
    python -m puiseuxkit pairs "T^(2/4)+T^(3/4)"
    python -m puiseuxkit root "1+T" --n 2 --trunc 3 --json

Exit codes: 0 success, 1 domain or parse error, 2 usage error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from .config import ORDERING_KINDS, get_settings
from .errors import PuiseuxError, SeriesSyntaxError
from .schemas.io import ErrorReport, Report
from .supervisor import Supervisor
from .tools.services.ordering import MonomialOrdering
from .tools.services.series_parser import parse_series
from .utils.template_loader import render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("series", nargs="?", help='Series text, e.g. "X1^(3/2) + X1*X2"')
    common.add_argument("--file", help="Read the series from this file instead")
    common.add_argument("--vars", type=int, default=None, help="Number of variables (default: largest index used)")
    common.add_argument("--json", action="store_true", help="Write a JSON document to stdout")

    normalizing = argparse.ArgumentParser(add_help=False)
    normalizing.add_argument(
        "--no-normalize",
        dest="normalize",
        action="store_false",
        help="Keep the denominator as written instead of reducing it",
    )

    ordered = argparse.ArgumentParser(add_help=False)
    ordered.add_argument("--order", choices=ORDERING_KINDS, default=None, help="Monomial ordering (default: PUISEUX_DEFAULT_ORDER)")

    parser = argparse.ArgumentParser(
        prog="puiseuxkit",
        description="Distinguished exponents, Puiseux pairs and n-th roots of Puiseux series.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", metavar="command", required=True)

    distinguished = commands.add_parser(
        "distinguished",
        parents=[common, normalizing, ordered],
        help="Distinguished exponents and the minor-gcd chain",
    )
    distinguished.add_argument("--oracle", action="store_true", help="Cross-check span and degree by enumeration")

    commands.add_parser("pairs", parents=[common, normalizing], help="Characteristic exponents and Puiseux pairs of a branch")
    commands.add_parser("qo", parents=[common, normalizing, ordered], help="Characteristic monomials of a quasi-ordinary branch")
    commands.add_parser("degree", parents=[common, normalizing], help="Extension degree and Galois group structure")
    commands.add_parser("normalize", parents=[common], help="Rewrite over the minimal denominator")

    root = commands.add_parser("root", parents=[common], help="Truncated n-th root of a power series")
    root.add_argument("--n", type=int, default=2, help="Root exponent (default: 2)")
    root.add_argument(
        "--trunc",
        "--order",
        dest="trunc",
        type=int,
        default=None,
        help="Target order in T (default: PUISEUX_DEFAULT_TRUNC)",
    )
    return parser


def _read_series_text(parser: argparse.ArgumentParser, args: argparse.Namespace) -> str:
    if (args.series is None) == (args.file is None):
        parser.error("give the series either as an argument or with --file")
    if args.file is not None:
        return Path(args.file).read_text(encoding="utf-8").strip()
    return args.series


def _command_options(args: argparse.Namespace) -> Dict[str, object]:
    options: Dict[str, object] = {}
    if args.command in ("distinguished", "qo"):
        options["order"] = args.order
    if args.command in ("distinguished", "pairs", "qo", "degree"):
        options["normalize"] = args.normalize
    if args.command == "distinguished":
        options["oracle"] = args.oracle
    if args.command == "root":
        options["n"] = args.n
        options["trunc"] = args.trunc
    return options


def _vector(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _root_text(terms: Dict[str, str]) -> str:
    parts: List[str] = []
    for mu, coefficient in terms.items():
        power = "" if mu == "0" else ("T" if mu == "1" else (f"T^({mu})" if "/" in mu else f"T^{mu}"))
        # sums in y print with spaces between their terms
        if " " in coefficient:
            negative, magnitude = False, f"({coefficient})"
        else:
            negative = coefficient.startswith("-")
            magnitude = coefficient.lstrip("-")
            if power and any(ch.isalpha() for ch in magnitude) and any(ch in "*/" for ch in magnitude):
                magnitude = f"({magnitude})"
        if not power:
            body = magnitude
        elif magnitude == "1":
            body = power
        else:
            body = f"{magnitude}*{power}"
        if parts:
            parts.append(f"{'-' if negative else '+'} {body}")
        else:
            parts.append(f"-{body}" if negative else body)
    return " ".join(parts)


def render_human(command: str, report: Report, args: argparse.Namespace) -> str:
    """Fill the text template of a subcommand from its report."""
    data = report.to_json_dict()
    if command == "distinguished":
        text = render(
            "distinguished",
            m=data["m"],
            order=MonomialOrdering(args.order).kind,
            pairs=" ".join(_vector(v) for v in data["pairs"]) or "none",
            gcd_chain=" > ".join(str(g) for g in data["gcd_chain"]),
            degree=data["degree"],
        )
        if "oracle" in data:
            text += "\n" + render("oracle", **data["oracle"])
        return text
    if command == "pairs":
        return render("pairs", pairs=" ".join(_vector(p) for p in data["pairs"]) or "none")
    if command == "qo":
        rows = [
            f"  {_vector(v)}  minimal={_yes_no(minimal)}  irredundant={_yes_no(irredundant)}"
            for v, minimal, irredundant in zip(data["pairs"], data["minimal"], data["irredundant"])
        ]
        return render("qo", m=data["m"], order=data["order"], degree=data["degree"], rows="\n".join(rows) or "  none")
    if command == "degree":
        group = " x ".join(f"C{c}" for c in data["galois_group"]) or "trivial"
        return render("degree", m=data["m"], degree=data["degree"], galois_group=group)
    if command == "root":
        ring = f"Q[y] with {data['extension']}" if "extension" in data else "Q"
        return render("root", root=_root_text(data["terms"]), ring=ring, order=data["verified_order"])
    return render("normalize", m=data["m"], series=data["series"])


def _dump(document: dict) -> str:
    return json.dumps(document, separators=(",", ":"))


def _configure_logging() -> None:
    level = getattr(logging, get_settings().log_level, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and print its output.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = _read_series_text(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read series: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    try:
        _configure_logging()
        series = parse_series(text, args.vars)
        report = Supervisor().dispatch(args.command, series, **_command_options(args))
        output = _dump(report.to_json_dict()) if args.json else render_human(args.command, report, args)
    except (PuiseuxError, ValidationError, ValueError, OSError) as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        if args.json:
            error = ErrorReport(
                error=str(exc),
                kind=type(exc).__name__,
                position=exc.position if isinstance(exc, SeriesSyntaxError) else None,
            )
            print(_dump(error.to_json_dict()), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    print(output)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
