import argparse

from chaincode.services.random_check_service import random_check, render_random_check_text
from chaincode.services.report_render_service import render_json


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "random-check", help="Run the property suite on seeded random codes"
    )
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-n", type=int, default=4, help="Largest code length")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> tuple[str, int]:
    report = random_check(args.seed, args.trials, args.max_n)
    text = render_json(report) if args.format == "json" else render_random_check_text(report)
    return text, 0 if report.ok else 3
