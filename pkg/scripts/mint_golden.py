"""Regenerate the golden-value table shipped in ``src/mzeta/data``.

    python scripts/mint_golden.py            # rewrite the table
    python scripts/mint_golden.py --check    # fail if the table is stale
"""

import argparse
import sys
from importlib import resources

from mzeta.series import GOLDEN_FILE, golden_csv, mint_golden


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--check", action="store_true")
    args = parser.parse_args()
    text = golden_csv(mint_golden())
    target = resources.files("mzeta.data").joinpath(GOLDEN_FILE)
    if args.check:
        if target.read_text() != text:
            sys.exit(f"{GOLDEN_FILE} is out of date")
        return
    with open(target, "w", newline="") as fh:
        fh.write(text)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
