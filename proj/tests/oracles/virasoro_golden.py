"""Writes the unitary-series golden fixtures tests/golden/virasoro_m<m>.json.

Independent of the C++ code: weights from the closed formula with
fractions.Fraction, fusion from the product of two su(2) level rules.
Run from the repository root:  python3 tests/oracles/virasoro_golden.py
"""

import json
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "golden"


def frac(x):
    return f"{x.numerator}/{x.denominator}"


def weight(m, r, s):
    p, q = m + 2, m + 3
    return Fraction((r * q - s * p) ** 2 - 1, 4 * p * q)


def canonical(m, r, s):
    return (r, s) if s <= r else (m + 2 - r, m + 3 - s)


def su2(a, b, level_plus_two):
    top = min(a + b - 1, 2 * level_plus_two - a - b - 1)
    return list(range(abs(a - b) + 1, top + 1, 2))


def fuse(m, x, y):
    out = set()
    for r in su2(x[0], y[0], m + 2):
        for s in su2(x[1], y[1], m + 3):
            out.add(canonical(m, r, s))
    return sorted(out)


def tau(m, r, s):
    return (-1) ** (r + 1) if m % 2 == 0 else (-1) ** (s + 1)


def sigma(m, r, s):
    # P_m is {h_{1,s}} for m even and {h_{r,1}} for m odd, on either representative
    for rr, ss in ((r, s), (m + 2 - r, m + 3 - s)):
        if m % 2 == 0 and rr == 1:
            return (-1) ** (ss + 1)
        if m % 2 == 1 and ss == 1:
            return (-1) ** (rr + 1)
    return None


def label(x):
    return f"({x[0]},{x[1]})"


def fixture(m):
    labels = sorted({canonical(m, r, s) for r in range(1, m + 2) for s in range(1, m + 3)})
    assert len(labels) == (m + 1) * (m + 2) // 2
    rows = []
    for r, s in labels:
        sg = sigma(m, r, s)
        rows.append({
            "label": label((r, s)),
            "weight": frac(weight(m, r, s)),
            "tau": tau(m, r, s),
            "in_sigma_sector": sg is not None,
            "sigma": sg,
        })
    fusion = []
    for i, x in enumerate(labels):
        for y in labels[i:]:
            fusion.append({"left": label(x), "right": label(y), "result": [label(z) for z in fuse(m, x, y)]})
    c = 1 - Fraction(6, (m + 2) * (m + 3))
    return {"m": m, "central_charge": frac(c), "labels": rows, "fusion": fusion}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for m in range(1, 5):
        path = OUT / f"virasoro_m{m}.json"
        path.write_text(json.dumps(fixture(m), indent=2, sort_keys=True) + "\n")
        print(path)


if __name__ == "__main__":
    main()
