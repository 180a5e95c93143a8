#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from the Python unicodedata module.

The tables are frozen in the repository; rerun only when intentionally moving
to a newer Unicode version (this changes tokenization golden files).
"""

import sys
import unicodedata


def punctuation_ranges():
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        if unicodedata.category(chr(cp)).startswith("P"):
            if start is None:
                start = cp
            prev = cp
        else:
            if start is not None:
                ranges.append((start, prev))
                start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def whitespace_codepoints():
    cps = []
    for cp in range(0x110000):
        ch = chr(cp)
        if ch.isspace() or unicodedata.category(ch) == "Zs":
            cps.append(cp)
    return cps


def lowercase_pairs():
    pairs = []
    for cp in range(0x110000):
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    return pairs


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
              % unicodedata.unidata_version)

    ranges = punctuation_ranges()
    out.write("inline constexpr CodepointRange kPunctuationRanges[] = {\n")
    for lo, hi in ranges:
        out.write("    {0x%X, 0x%X},\n" % (lo, hi))
    out.write("};\n\n")

    ws = whitespace_codepoints()
    out.write("inline constexpr char32_t kWhitespaceCodepoints[] = {\n")
    for cp in ws:
        out.write("    0x%X,\n" % cp)
    out.write("};\n\n")

    pairs = lowercase_pairs()
    out.write("inline constexpr LowercasePair kLowercasePairs[] = {\n")
    for cp, low in pairs:
        out.write("    {0x%X, 0x%X},\n" % (cp, low))
    out.write("};\n")


if __name__ == "__main__":
    main()
