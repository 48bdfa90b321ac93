import argparse
import sys
from typing import Sequence

from chaincode.cli.router import include_commands
from chaincode.core.config import settings
from chaincode.core.exceptions import ChainCodeError
from chaincode.core.logging import configure_logging


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line parser with every sub-command attached."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description=(
            "Structure, distance and MDS/MHDR analysis of cyclic codes over finite chain rings"
        ),
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG"
    )
    include_commands(parser)
    return parser


def _log_level(verbose: int) -> str:
    if verbose >= 2 or settings.debug:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return settings.log_level


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors are input errors; 2 is reserved for exceeded budgets
        return 1 if exc.code == 2 else int(exc.code or 0)
    configure_logging(_log_level(args.verbose))
    try:
        text, code = args.handler(args)
    except ChainCodeError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(text)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
