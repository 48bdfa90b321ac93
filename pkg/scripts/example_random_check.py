"""Run the seeded property suite and the worked-example corpus."""

import sys
from pathlib import Path

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from chaincode.services.example_corpus import render_corpus_text, verify_paper  # noqa: E402
from chaincode.services.random_check_service import (  # noqa: E402
    random_check,
    render_random_check_text,
)


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    corpus = verify_paper()
    print(render_corpus_text(corpus))
    report = random_check(seed=seed, trials=50, max_n=4)
    print(render_random_check_text(report))
    return 0 if corpus.ok and report.ok else 3


if __name__ == "__main__":
    sys.exit(main())
