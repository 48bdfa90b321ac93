import argparse

from chaincode.services.analysis_service import METHOD_CHOICES, analyze
from chaincode.services.report_render_service import render_json, render_text
from chaincode.services.spec_file_service import load_spec


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "analyze", help="Analyze the cyclic code described by a code-spec file"
    )
    parser.add_argument(
        "--input", required=True, help="Code-spec file (key = value lines, or .json)"
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument(
        "--distance-method",
        choices=list(METHOD_CHOICES),
        default=None,
        help=(
            "Distance methods to run next to the torsion search "
            "(default: the file's distance-method, else auto)"
        ),
    )
    parser.add_argument("--max-enum", type=int, default=None, help="Enumeration budget")
    parser.add_argument("--threads", type=int, default=None, help="Distance-search workers")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> tuple[str, int]:
    spec = load_spec(args.input)
    report = analyze(spec, args.distance_method, args.max_enum, args.threads)
    text = render_json(report) if args.format == "json" else render_text(report)
    return text, 0
