"""
Command-line front end.

    python -m src.cli analyze nets/p4.net --run homology,directed-0
    python -m src.cli analyze --pipeline 4,Nprime --all-states --json
    python -m src.cli verify --n-max 8
    python -m src.cli emit --pipeline 3

Exit codes: 0 ok, 1 a check failed, 2 usage, 3 parse error, 4 state cap.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.models.analysis_request import AnalysisRequest
from src.models.pipeline_spec import PipelineSpec
from src.parsers.net_parser import emit_net
from src.pipelines.generator import make_pipeline
from src.runner import AnalysisRunner
from src.utils.constants import (
    EXIT_OK,
    EXIT_USAGE,
    LIST_SEPARATOR,
    MODE_ALL_STATES,
    MODE_REACHABLE,
    OUTPUT_STRUCTURED,
    OUTPUT_TEXT,
    VALID_ANALYSES,
)
from src.utils.settings import get_settings


logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="petri-homology",
        description="Integral and directed homology of elementary Petri nets",
    )
    ap.add_argument("--verbose", "-v", action="store_true", help="log at DEBUG level")
    commands = ap.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="run analyses on a net file or generated pipeline")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("file", nargs="?", help="net file")
    source.add_argument("--pipeline", metavar="N[,variant]", help="generated pipeline (variant P, N or Nprime)")
    analyze.add_argument("--all-states", action="store_true", help="use {0,1}^P instead of reachable states")
    analyze.add_argument("--max-dim", type=int, metavar="K", help="highest cube grade to build")
    analyze.add_argument(
        "--run", default="homology", metavar="ANALYSIS,...",
        help=f"comma-separated analyses from {', '.join(VALID_ANALYSES)}",
    )
    analyze.add_argument("--json", action="store_true", help="print one structured JSON record")
    analyze.add_argument("--dump-complex", action="store_true", help="include every grade's cubes and faces")

    verify = commands.add_parser("verify", help="check the pipeline theorems for n = 2..K")
    verify.add_argument("--n-max", type=int, required=True, metavar="K")
    verify.add_argument("--json", action="store_true", help="print one structured JSON record")

    emit = commands.add_parser("emit", help="print a generated pipeline net in the net file format")
    emit.add_argument("--pipeline", required=True, metavar="N[,variant]")
    return ap


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def request_from_args(args: argparse.Namespace) -> AnalysisRequest:
    """
    Map `analyze` flags one-to-one onto an AnalysisRequest.

    Raises:
        ValueError: On a malformed --pipeline or --run value (pydantic
                    ValidationError is a ValueError)
    """
    analyses = tuple(a.strip() for a in args.run.split(LIST_SEPARATOR) if a.strip())
    return AnalysisRequest(
        net_path=args.file,
        pipeline=PipelineSpec.parse(args.pipeline) if args.pipeline else None,
        mode=MODE_ALL_STATES if args.all_states else MODE_REACHABLE,
        analyses=analyses,
        max_dim=args.max_dim,
        output=OUTPUT_STRUCTURED if args.json else OUTPUT_TEXT,
        dump_complex=args.dump_complex,
    )


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    configure_logging(args.verbose)

    runner = AnalysisRunner()
    try:
        if args.command == "emit":
            spec = PipelineSpec.parse(args.pipeline)
            print(emit_net(make_pipeline(spec), title=spec.label), end="")
            return EXIT_OK
        if args.command == "verify":
            result = runner.run_verify(args.n_max, OUTPUT_STRUCTURED if args.json else OUTPUT_TEXT)
        else:
            result = runner.run(request_from_args(args))
    except (ValueError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if result.stdout:
        print(result.stdout)
    if result.stderr:
        print(result.stderr, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
