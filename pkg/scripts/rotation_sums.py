#!/usr/bin/env python3
"""Tabulate overlap-defect sums of rotation chains against the closed form.

For the planar rotation chain with angle theta the plain partial sum obeys
S(p, M) = 2 M sin^2(pi p theta); rational angles make some shift summable
(the chain is eventually periodic), irrational angles make none.

Usage: python3 scripts/rotation_sums.py [theta | a/b] [p_max] [M]
"""

import math
import sys
from fractions import Fraction

import gpcuntz as g


def main(argv):
    raw = argv[1] if len(argv) > 1 else "1/3"
    p_max = int(argv[2]) if len(argv) > 2 else 4
    m_max = int(argv[3]) if len(argv) > 3 else 10_000
    if "/" in raw:
        theta_in = Fraction(raw)
        theta = float(theta_in)
    else:
        theta_in = theta = float(raw)
    chain = g.rotation_chain(theta_in)
    table = g.asymptotic_diagnostics(chain, p_max, m_max)
    print(f"# theta={raw} M={m_max}")
    print("p\tS_plain\t\tclosed_form\tS_abs")
    for p in range(1, p_max + 1):
        plain, absolute = table.final(p)
        closed = 2 * m_max * math.sin(math.pi * p * theta) ** 2
        print(f"{p}\t{plain:.9f}\t{closed:.9f}\t{absolute:.9f}")
    verdict = g.classify(chain)
    print(f"# classification: {verdict.verdict} ({verdict.reason})")


if __name__ == "__main__":
    main(sys.argv)
