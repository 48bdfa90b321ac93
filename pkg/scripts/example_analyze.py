"""Example script analysing the bundled code specs.

Runs the full pipeline on every file in scripts/specs and prints the text
report, then shows the same pipeline driven from Python objects.
"""

import sys
from pathlib import Path

# Add project root to Python path - must be before chaincode imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from chaincode.core.exceptions import ChainCodeError  # noqa: E402
from chaincode.core.logging import configure_logging  # noqa: E402
from chaincode.services.analysis_service import analyze, analyze_code  # noqa: E402
from chaincode.services.chain_ring import ring_from_params  # noqa: E402
from chaincode.services.code_structure import build_code  # noqa: E402
from chaincode.services.poly_parser import parse_poly  # noqa: E402
from chaincode.services.report_render_service import render_text  # noqa: E402
from chaincode.services.spec_file_service import load_spec  # noqa: E402


def main() -> int:
    configure_logging("INFO")
    spec_dir = Path(__file__).parent / "specs"

    for path in sorted(spec_dir.iterdir()):
        print(f"=== {path.name} ===")
        try:
            print(render_text(analyze(load_spec(path))))
        except ChainCodeError as exc:
            print(f"error: {exc.message}")

    # The same pipeline without a spec file: <2, z - 1> over Z_4, n = 3
    print("=== <2, z - 1> over Z_4 ===")
    ring = ring_from_params("integer-modular", 2, 2)
    code = build_code(ring, 3, [parse_poly("2", ring, 3), parse_poly("z-1", ring, 3)])
    print(render_text(analyze_code(code, "exhaustive")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
