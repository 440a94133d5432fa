#!/usr/bin/env python3
"""
frobeval Live Demo

Walks through the four subcommands on throwaway files: a Reed-Solomon word
evaluated both ways, the cost table, a small benchmark and the syndrome
pipeline on one clean and one corrupted word.
"""

import sys
import tempfile
from pathlib import Path
from typing import List, Tuple

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from frobeval.cli import FrobevalCLI
from frobeval.config import EXIT_OK
from frobeval.poly import Polynomial, format_poly_text
from frobeval.rs import encode, random_message, rs_new


def write_demo_files(workdir: Path) -> Tuple[Path, Path]:
    """A codeword as a polynomial file, and a word file with it and a corrupted copy."""
    code = rs_new()
    codeword = encode(random_message(code, seed=7), code)
    poly_path = workdir / "codeword.txt"
    poly_path.write_text(format_poly_text(Polynomial(code.field, tuple(codeword))) + "\n", encoding="utf-8")

    clean = bytes(c.value for c in codeword)
    corrupted = bytearray(clean)
    corrupted[17] ^= 0x5A
    words_path = workdir / "words.bin"
    words_path.write_bytes(clean + bytes(corrupted))
    return poly_path, words_path


def demo_commands(poly_path: Path, words_path: Path) -> List[Tuple[List[str], str]]:
    return [
        (["help"], "Show available commands"),
        (["eval", "--poly", str(poly_path), "--point", "2", "--strategy", "horner"],
         "Horner: 254 multiplications"),
        (["eval", "--poly", str(poly_path), "--point", "2", "--strategy", "auto", "--split", "--L", "4", "--check"],
         "Split automorphic evaluation, checked against Horner"),
        (["cost", "--field", "p=2 m=1", "--n", "1024"], "Cost model with coefficients in GF(2)"),
        (["cost", "--field", "p=2 m=16", "--n", "65536"], "Cost of the quadratic split at n = 2^16"),
        (["bench", "--seed", "1", "--degree", "254", "--subfield-d", "4", "--trials", "3"],
         "Benchmark over GF(2^8) with GF(16) coefficients"),
        (["syndromes", "--words", str(words_path), "--strategy", "both"],
         "Syndromes of a clean and a corrupted word"),
    ]


def run_live_demo() -> int:
    """Run every demo command; returns the number of commands that failed."""
    print("=" * 60)
    print(" frobeval Live Demo")
    print("=" * 60)

    cli = FrobevalCLI()
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        poly_path, words_path = write_demo_files(Path(tmp))
        for i, (argv, description) in enumerate(demo_commands(poly_path, words_path), 1):
            print(f"\n[{i:2d}] {description}")
            print(f"Command: frobeval {' '.join(argv)}")
            print("-" * 30)
            if cli.main(argv) != EXIT_OK:
                failures += 1

    print("\n" + "=" * 60)
    print(" Demo completed" + (" successfully!" if not failures else f" with {failures} failure(s)"))
    print("=" * 60)
    return failures


if __name__ == "__main__":
    sys.exit(1 if run_live_demo() else 0)
