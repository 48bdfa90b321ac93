import argparse

from chaincode.services.example_corpus import EXAMPLES, render_corpus_text, verify_paper
from chaincode.services.report_render_service import render_json


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify-paper", help="Check the built-in worked examples against their recorded values"
    )
    parser.add_argument(
        "--example",
        default="all",
        choices=[e.example_id for e in EXAMPLES] + ["all"],
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--max-enum", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> tuple[str, int]:
    report = verify_paper(args.example, args.max_enum, args.threads)
    text = render_json(report) if args.format == "json" else render_corpus_text(report)
    return text, 0 if report.ok else 3
