"""Regenerate the bundled corpus JSON files from the fixture builders."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from ncpoisson import constructions as c
from ncpoisson.document import dumps, to_document

OUT = Path(__file__).resolve().parents[1] / "src" / "ncpoisson" / "corpus"


def renamed(A, name, mapping=None):
    doc = to_document(A)
    doc["name"] = name
    for item in doc["labels"]:
        item["name"] = (mapping or {}).get(item["name"], item["name"])
    return doc


def main(argv: list[str] | None = None) -> int:
    check = "--check" in (sys.argv[1:] if argv is None else argv)
    m2 = c.m2_cartan()
    point = c.from_rules("point", [("z", 1)], lambda i, j: {}, lambda i, j: {}, "z")
    docs = {
        "m2-cartan": renamed(m2, "m2-cartan"),
        "heis3": renamed(c.heis3(), "heis3"),
        "m2-double": renamed(c.m2_double(), "m2-double"),
        "sl2-lie": renamed(c.sl2_lie(), "sl2-lie"),
        "aff2-lie": renamed(c.aff2_lie(), "aff2-lie"),
        "shift3": renamed(c.shift3(), "shift3"),
        # [E11, E12] doubled: still antisymmetric, Jacobi fails on (e1, e3, e4)
        "broken-jacobi": renamed(
            m2.with_constant("bracket", 0, 2, 2, Fraction(2)).with_constant("bracket", 2, 0, 2, Fraction(-2)),
            "broken-jacobi",
        ),
        # E12 E21 = E22 instead of E11
        "broken-leibniz": renamed(
            m2.with_constant("aprod", 2, 3, 0, Fraction(0)).with_constant("aprod", 2, 3, 1, Fraction(1)),
            "broken-leibniz",
        ),
        # an extra annihilated vector in the zero block
        "untight-z": renamed(c.direct_sum([m2, point], "merge"), "untight-z", {"p1": "p", "m1": "m"}),
    }
    stale = []
    if not check:
        OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in docs.items():
        target = OUT / f"{name}.json"
        if check:
            if not target.exists() or target.read_text(encoding="utf-8") != dumps(doc):
                stale.append(target.name)
        else:
            target.write_text(dumps(doc), encoding="utf-8")
    for name in stale:
        print(f"stale: {name}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
