#!/usr/bin/env python3
"""
frobeval - finite-field polynomial evaluation with operation accounting

Evaluates polynomials over GF(p^m) with Horner's rule or by automorphic
evaluation (stride-p decomposition plus the Frobenius map), counts every
field operation, tabulates the closed-form cost model and computes
Reed-Solomon [255,223,33] syndromes both ways.

Layout:
- main.py: entry point
- frobeval/gf.py, poly.py: field and polynomial arithmetic
- frobeval/autoeval.py, costmodel.py: the evaluation method and its cost model
- frobeval/rs.py: syndrome pipeline
- frobeval/cli.py, commands/: the eval, cost, bench and syndromes subcommands
- tests/: pytest suite
"""

import sys
from pathlib import Path

# Add the project root to Python path for imports
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))


def main() -> int:
    try:
        from frobeval.cli import FrobevalCLI
    except ImportError as e:
        print(f"Error importing frobeval modules: {e}", file=sys.stderr)
        print("Make sure all dependencies are installed: pip install -r requirements.txt", file=sys.stderr)
        return 1
    return FrobevalCLI().main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
