#!/usr/bin/env python3
"""Regenerates src/unicode_letter_ranges.inc from Python's unicodedata.

The table lists closed codepoint ranges whose general category is a letter
category (Lu, Ll, Lt, Lm, Lo). Run from the repository root:

    python3 tools/gen_letter_ranges.py > src/unicode_letter_ranges.inc
"""

import sys
import unicodedata


def main() -> None:
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        ch = chr(cp)
        if unicodedata.category(ch).startswith("L"):
            if start is None:
                start = cp
            prev = cp
        else:
            if start is not None:
                ranges.append((start, prev))
                start = None
    if start is not None:
        ranges.append((start, prev))

    out = sys.stdout
    out.write("// Generated by tools/gen_letter_ranges.py (unicodedata %s)\n"
              % unicodedata.unidata_version)
    out.write("// Closed ranges of codepoints in Unicode general category L*.\n")
    for lo, hi in ranges:
        out.write("{0x%X, 0x%X},\n" % (lo, hi))


if __name__ == "__main__":
    main()
