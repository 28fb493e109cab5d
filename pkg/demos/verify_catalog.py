"""Print the verification scorecards for the cheap catalog entries.

Run: python3 demos/verify_catalog.py [LABELS...]
Defaults to A2 and A4; A6 takes a few minutes, E6 up to half an hour.
"""

import sys

from severi.reports import scorecard_text, verify_paper


def main(labels):
    for label in labels:
        print(f"=== {label} ===")
        print(scorecard_text(verify_paper(label)), end="")


if __name__ == "__main__":
    main(sys.argv[1:] or ["A2", "A4"])
