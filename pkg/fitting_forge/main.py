"""
fitting_forge - CLI Entry Point
Parses a subcommand, runs the library operation and prints its report
"""
import sys
from typing import Optional, Sequence

from fitting_forge.commands import create_parser
from fitting_forge.commands.common import render_report
from fitting_forge.utils.errors import FittingForgeError
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_PARSE_ERROR = 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Exit code 0 on success, 1 on computation errors, 2 on parse errors."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_PARSE_ERROR

    try:
        report = args.handler(args)
    except FittingForgeError as e:
        logger.error(f"❌ {args.command} failed with {e.name}: {e.message}")
        print(f"{e.name}: {e.message}", file=sys.stderr)
        return e.exit_code

    print(render_report(report, args.json))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
