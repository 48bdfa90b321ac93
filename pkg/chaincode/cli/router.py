import argparse

from chaincode.cli.commands import analyze, random_check, verify_paper

COMMANDS = (analyze, verify_paper, random_check)


def include_commands(parser: argparse.ArgumentParser) -> None:
    """Attach every sub-command to ``parser``."""
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
