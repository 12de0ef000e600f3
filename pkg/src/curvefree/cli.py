"""Command-line interface for curvefree."""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

try:
    import yaml
except ImportError:
    print("Error: PyYAML is required. Install with: pip install pyyaml", file=sys.stderr)
    sys.exit(1)

from . import __version__
from .analyzer import ArrangementAnalyzer, fixture_paths, run_self_test
from .combin import (
    betti_polynomial,
    dd_count_check,
    dd_inequality,
    euler_number,
    poincare_cl,
    split_over_rationals,
)
from .core import ReportRenderer, to_json
from .core.errors import CurveFreeError, PreconditionError, VariantMismatchError
from .core.models import WeakCombinatorics
from .singlocus import DEFAULT_MAX_RETRIES
from .variants import PoincareInput, get_variant

RED = "\033[91m"
YELLOW = "\033[93m"
RESET = "\033[0m"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONSISTENT = 2

DEFAULT_CONFIG: Dict[str, Any] = {
    "seed": 0,
    "max_degree": 16,
    "format": "text",
    "skip_singlocus": False,
    "fixtures_dir": None,
    "max_shear_retries": DEFAULT_MAX_RETRIES,
}

_CONFIG_TYPES: Dict[str, Any] = {
    "seed": int,
    "max_degree": int,
    "format": str,
    "skip_singlocus": bool,
    "fixtures_dir": (str, type(None)),
    "max_shear_retries": int,
}

_TACNODE_KEYS = ("t3", "t5", "t7")


def load_config(config_path: Optional[Path]) -> Dict[str, Any]:
    """Load configuration from a YAML file on top of the defaults.

    Args:
        config_path: Path to configuration file, or None for defaults only

    Returns:
        Configuration dictionary
    """
    config = dict(DEFAULT_CONFIG)
    if config_path is None:
        return config
    try:
        with open(config_path) as f:
            loaded = yaml.safe_load(f) or {}
    except Exception as e:
        print(f"Error loading config: {e}", file=sys.stderr)
        sys.exit(EXIT_ERROR)
    if not isinstance(loaded, dict):
        print(f"Error loading config: {config_path} is not a mapping", file=sys.stderr)
        sys.exit(EXIT_ERROR)
    unknown = sorted(set(loaded) - set(DEFAULT_CONFIG))
    if unknown:
        keys = ", ".join(unknown)
        print(f"{YELLOW}Warning: unknown config keys: {keys}{RESET}", file=sys.stderr)
    for key, value in loaded.items():
        problem = _config_type_problem(key, value)
        if problem:
            print(f"Error loading config: {config_path}: {problem}", file=sys.stderr)
            sys.exit(EXIT_ERROR)
    config.update(loaded)
    return config


def _config_type_problem(key: str, value: Any) -> Optional[str]:
    expected = _CONFIG_TYPES.get(key)
    if expected is None:
        return None
    if (expected is int and isinstance(value, bool)) or not isinstance(value, expected):
        return f"'{key}' has invalid value {value!r}"
    if key == "format" and value not in ("text", "json"):
        return f"'format' must be text or json, got {value!r}"
    if key in ("max_degree", "max_shear_retries") and value < 1:
        return f"'{key}' must be a positive integer, got {value}"
    return None


def load_combinatorics_file(path: Path) -> Dict[str, Any]:
    """Read a YAML or JSON combinatorics file into a plain mapping."""
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict):
        raise PreconditionError(f"{path}: expected a mapping with keys k, n, t3, t5, t7, d, tau")
    return data


def parse_tokens(tokens: List[str]) -> Dict[str, Any]:
    """Parse ``k1=6 k2=1 n2=12 t5=3 d=2 tau=0`` style tokens.

    ``k<i>`` and ``n<r>`` collect into mappings under ``k`` and ``n``; a bare
    ``k=<count>`` is kept as an integer.
    """
    data: Dict[str, Any] = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        key = key.strip().lower()
        if not sep or not value.strip().lstrip("-").isdigit():
            raise PreconditionError(f"Expected 'key=integer', got '{token}'")
        number = int(value)
        if key in ("d", "tau", "k") or key in _TACNODE_KEYS:
            if key in data:
                raise PreconditionError(f"'{key}' given twice")
            data[key] = number
        elif key[0] in "kn" and key[1:].isdigit():
            counts = data.setdefault(key[0], {})
            if not isinstance(counts, dict):
                raise PreconditionError(f"Cannot mix '{key[0]}=' with '{key}='")
            counts[int(key[1:])] = number
        else:
            raise PreconditionError(f"Unknown combinatorics token '{token}'")
    return data


def combinatorics_from(data: Dict[str, Any]) -> Optional[WeakCombinatorics]:
    """WeakCombinatorics described by a token or file mapping, if it describes any.

    A bare integer ``k`` counts conics.
    """
    if not any(key in data for key in ("k", "n") + _TACNODE_KEYS):
        return None
    k = data.get("k") or {}
    if isinstance(k, int):
        k = {2: k}
    return WeakCombinatorics.from_dict({**data, "k": k})


def _combinatorics_input(args: argparse.Namespace) -> Dict[str, Any]:
    if args.file is not None:
        if args.tokens:
            raise PreconditionError("Give either inline tokens or --file, not both")
        return load_combinatorics_file(args.file)
    return parse_tokens(args.tokens)


def _error(message: str) -> None:
    print(f"{RED}Error: {message}{RESET}", file=sys.stderr)


def cmd_analyze(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    for key in ("seed", "max_degree", "format", "fixtures_dir"):
        value = getattr(args, key)
        if value is not None:
            config[key] = value
    if args.skip_singlocus:
        config["skip_singlocus"] = True
    as_json = config["format"] == "json"
    verbose = not (args.quiet or as_json)
    analyzer = ArrangementAnalyzer(config, verbose=verbose)
    renderer = ReportRenderer()

    if args.self_test:
        rows = run_self_test(analyzer, fixture_paths(config.get("fixtures_dir")))
        if as_json:
            passed = sum(1 for row in rows if row["passed"])
            print(to_json({"fixtures": rows, "passed": passed, "total": len(rows)}))
        else:
            print(renderer.selftest(rows), end="")
        return EXIT_OK if all(row["passed"] for row in rows) else EXIT_INCONSISTENT

    if args.file is None:
        _error("analyze needs an arrangement FILE or --self-test")
        return EXIT_ERROR

    combinatorics = None
    if args.combinatorics is not None:
        if not config["skip_singlocus"]:
            _error("--combinatorics is only used together with --skip-singlocus")
            return EXIT_ERROR
        combinatorics = combinatorics_from(load_combinatorics_file(args.combinatorics))

    report = analyzer.analyze_file(args.file, combinatorics)
    if as_json:
        print(to_json(report.to_dict()))
    else:
        if verbose:
            print()
        print(renderer.analysis(report), end="")
    return report.verdict.exit_code


def cmd_poincare(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    data = _combinatorics_input(args)
    variant = get_variant(args.variant)()
    source = PoincareInput(combinatorics_from(data), data.get("d"), data.get("tau"))
    try:
        polynomial = variant.polynomial(source)
    except VariantMismatchError as e:
        _error(str(e))
        return EXIT_INCONSISTENT
    split = split_over_rationals(polynomial)
    print(ReportRenderer().poincare(variant.name, polynomial, split), end="")
    return EXIT_OK


def cmd_ddcheck(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    data = _combinatorics_input(args)
    d, k = data.get("d"), data.get("k")
    if not isinstance(d, int) or not isinstance(k, int):
        raise PreconditionError("ddcheck needs the curve degree d=<int> and curve count k=<int>")
    if d == 1:
        _error("the d-arrangement inequality is stated for curves of degree d >= 2")
        return EXIT_INCONSISTENT
    if k < 2:
        _error("the d-arrangement inequality needs at least k = 2 curves")
        return EXIT_INCONSISTENT
    tacnodes = {key: data.get(key, 0) for key in _TACNODE_KEYS}
    if any(tacnodes.values()):
        _error("ddcheck accepts ordinary singular points only (t3 = t5 = t7 = 0)")
        return EXIT_INCONSISTENT
    w = WeakCombinatorics({d: k}, data.get("n") or {})
    inequality = dd_inequality(w, d, k)
    consistent = dd_count_check(w, d, k)
    print(ReportRenderer().ddcheck(d, k, inequality, consistent), end="")
    return EXIT_OK


def cmd_euler(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    w = combinatorics_from(_combinatorics_input(args))
    if w is None:
        raise PreconditionError("euler needs weak combinatorics (k<i>=, n<r>= tokens or --file)")
    value = euler_number(w)
    print(ReportRenderer().euler(w, betti_polynomial(w), poincare_cl(w), value), end="")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "poincare": cmd_poincare,
    "ddcheck": cmd_ddcheck,
    "euler": cmd_euler,
}


def _add_combinatorics_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("tokens", nargs="*", help="Combinatorics tokens such as k1=6 n2=12 t5=3")
    parser.add_argument("--file", type=Path, help="YAML or JSON combinatorics file")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", type=Path, help="YAML configuration file")
    common.add_argument("-q", "--quiet", action="store_true", help="Minimal output")

    parser = argparse.ArgumentParser(
        prog="curvefree",
        description="Decide freeness of plane curve arrangements and audit their combinatorics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s analyze braid.arr                 # Full pipeline on one arrangement
  %(prog)s analyze --self-test               # Run the packaged fixtures
  %(prog)s analyze x.arr --format json       # Machine-readable report
  %(prog)s poincare --cl k1=6 k2=1 n2=12 n3=3 n4=1
  %(prog)s ddcheck d=2 k=2 n2=4
  %(prog)s euler k1=9 k2=1 n2=6 n3=4 n4=6
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    analyze = subparsers.add_parser(
        "analyze", parents=[common], help="Analyze an arrangement file end to end"
    )
    analyze.add_argument("file", nargs="?", type=Path, help="Arrangement file")
    analyze.add_argument("--self-test", action="store_true", help="Run every packaged fixture")
    analyze.add_argument("--seed", type=int, help="Seed for the random coordinate change")
    analyze.add_argument("--max-degree", type=int, help="Reject arrangements of higher degree")
    analyze.add_argument("--format", choices=["text", "json"], help="Report format")
    analyze.add_argument(
        "--skip-singlocus",
        action="store_true",
        help="Do not search singular points; use --combinatorics if given",
    )
    analyze.add_argument(
        "--combinatorics", type=Path, help="Combinatorics file used with --skip-singlocus"
    )
    analyze.add_argument("--fixtures-dir", type=Path, help="Fixture directory for --self-test")

    poincare = subparsers.add_parser(
        "poincare", parents=[common], help="Build and factor a combinatorial Poincaré polynomial"
    )
    group = poincare.add_mutually_exclusive_group(required=True)
    for name in ("lines", "cl", "conics", "general"):
        group.add_argument(
            f"--{name}",
            dest="variant",
            action="store_const",
            const=name,
            help=get_variant(name).description,
        )
    _add_combinatorics_input(poincare)

    ddcheck = subparsers.add_parser(
        "ddcheck", parents=[common], help="Check the d-arrangement freeness inequality"
    )
    _add_combinatorics_input(ddcheck)

    euler = subparsers.add_parser(
        "euler", parents=[common], help="Euler number of a conic-line arrangement complement"
    )
    _add_combinatorics_input(euler)
    return parser


def main(argv: Optional[List[str]] = None):
    """Main entry point."""
    args = build_parser().parse_args(argv)

    if args.config is not None and not args.config.exists():
        print(f"Error: Config file not found: {args.config}", file=sys.stderr)
        sys.exit(EXIT_ERROR)
    config = load_config(args.config)

    try:
        code = COMMANDS[args.command](args, config)
    except (CurveFreeError, OSError) as e:
        _error(str(e))
        sys.exit(EXIT_ERROR)

    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
