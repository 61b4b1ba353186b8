"""Small algebras and direct sums used as fixtures and random test suites."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import GradedAlgebra, Sparse, Table

# Products on basis indices: (i, j) -> sparse value.
Rule = Callable[[int, int], Sparse]


def from_rules(
    name: str,
    labels: Sequence[tuple[str, int]],
    bracket: Rule,
    aprod: Rule,
    zero_label: str | None = None,
) -> GradedAlgebra:
    n = sum(d for _, d in labels)
    tables: list[Table] = [{}, {}]
    for table, rule in zip(tables, (bracket, aprod)):
        for i in range(n):
            for j in range(n):
                v = {k: Fraction(c) for k, c in rule(i, j).items() if c}
                if v:
                    table[(i, j)] = v
    return GradedAlgebra(name, tuple(s for s, _ in labels), dict(labels), tables[0], tables[1], zero_label)


def _none(i: int, j: int) -> Sparse:
    return {}


def m2_cartan() -> GradedAlgebra:
    """2x2 matrices: z = diagonal (E11, E22), p = E12, m = E21."""
    units = [(0, 0), (1, 1), (0, 1), (1, 0)]

    def mul(i: int, j: int) -> Sparse:
        (a, b), (c, d) = units[i], units[j]
        return {units.index((a, d)): Fraction(1)} if b == c else {}

    def br(i: int, j: int) -> Sparse:
        out = dict(mul(i, j))
        for k, c in mul(j, i).items():
            out[k] = out.get(k, 0) - c
        return {k: c for k, c in out.items() if c}

    return from_rules("m2-cartan", [("z", 2), ("p", 1), ("m", 1)], br, mul, "z")


def heis3() -> GradedAlgebra:
    """Heisenberg algebra [x, y] = c with zero associative product; z = span{c}."""
    table = {(1, 2): {0: 1}, (2, 1): {0: -1}}
    return from_rules("heis3", [("z", 1), ("a", 1), ("b", 1)], lambda i, j: table.get((i, j), {}), _none, "z")


def sl2_lie() -> GradedAlgebra:
    """sl2 with zero associative product: z = h, p = e, m = f."""
    table = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
    table.update({(j, i): {k: -c for k, c in v.items()} for (i, j), v in list(table.items())})
    return from_rules("sl2-lie", [("z", 1), ("p", 1), ("m", 1)], lambda i, j: table.get((i, j), {}), _none, "z")


def aff2_lie() -> GradedAlgebra:
    """Non-abelian 2-dimensional Lie algebra [h, e] = e, zero product."""
    table = {(0, 1): {1: 1}, (1, 0): {1: -1}}
    return from_rules("aff2-lie", [("z", 1), ("p", 1)], lambda i, j: table.get((i, j), {}), _none, "z")


def shift3() -> GradedAlgebra:
    """[x, h] = y with everything else zero; connected but not multiplicative."""
    table = {(1, 0): {2: 1}, (0, 1): {2: -1}}
    return from_rules("shift3", [("z", 1), ("a", 1), ("b", 1)], lambda i, j: table.get((i, j), {}), _none, "z")


def line() -> GradedAlgebra:
    return from_rules("line", [("l", 1)], _none, _none)


def idem() -> GradedAlgebra:
    """The field itself: one idempotent e, e e = e."""
    return from_rules("idem", [("e", 1)], _none, lambda i, j: {0: 1})


def direct_sum(parts: Sequence[GradedAlgebra], zero: str = "merge", name: str | None = None) -> GradedAlgebra:
    """Direct sum with nonzero labels suffixed by the part number (1-based).

    ``zero`` chooses what happens to the parts' distinguished zeros:
    ``merge`` glues them into one block ``z``; ``separate`` keeps them as
    ``z1, z2, ...`` with the first one distinguished; ``none`` keeps them
    separate and distinguishes nothing.
    """
    if zero not in ("merge", "separate", "none"):
        raise ValueError(f"unknown zero mode {zero!r}")
    new_labels: list[tuple[str, int]] = []
    index_map: list[dict[int, int]] = [{} for _ in parts]
    zero_members: list[tuple[int, str]] = []
    # Order: merged zero block first, then each part's labels in order.
    if zero == "merge":
        for p, A in enumerate(parts):
            if A.zero_label is not None:
                zero_members.append((p, A.zero_label))
        if zero_members:
            new_labels.append(("z", sum(parts[p].dims[s] for p, s in zero_members)))
    pos = 0
    for p, s in zero_members:
        for i in parts[p].block(s):
            index_map[p][i] = pos
            pos += 1
    distinguished = "z" if zero_members else None
    for p, A in enumerate(parts):
        for s in A.labels:
            if zero == "merge" and s == A.zero_label:
                continue
            label = f"{s}{p + 1}"
            if zero == "separate" and s == A.zero_label and distinguished is None:
                distinguished = label
            new_labels.append((label, A.dims[s]))
            for i in A.block(s):
                index_map[p][i] = pos
                pos += 1
    tables: list[Table] = [{}, {}]
    for p, A in enumerate(parts):
        m = index_map[p]
        for table, src in zip(tables, (A.bracket, A.aprod)):
            for (i, j), v in src.items():
                if v:
                    table[(m[i], m[j])] = {m[k]: c for k, c in v.items()}
    if name is None:
        name = "+".join(A.name for A in parts) + f"[{zero}]"
    return GradedAlgebra(name, tuple(s for s, _ in new_labels), dict(new_labels), tables[0], tables[1], distinguished)


def m2_double() -> GradedAlgebra:
    return direct_sum([m2_cartan(), m2_cartan()], "merge", name="m2-double")


POOL: dict[str, Callable[[], GradedAlgebra]] = {
    "m2-cartan": m2_cartan,
    "heis3": heis3,
    "sl2-lie": sl2_lie,
    "aff2-lie": aff2_lie,
    "shift3": shift3,
    "line": line,
    "idem": idem,
}


def random_suite_algebra(rng: random.Random, max_labels: int = 6, max_block: int = 2) -> GradedAlgebra:
    """A random direct sum of pool algebras with at most ``max_labels`` labels
    and every block of dimension at most ``max_block``."""
    while True:
        count = rng.choice((1, 2, 2, 3))
        parts = [POOL[rng.choice(sorted(POOL))]() for _ in range(count)]
        mode = rng.choice(("merge", "separate", "none"))
        try:
            A = direct_sum(parts, mode)
        except ValueError:
            continue
        if len(A.labels) <= max_labels and max(A.dims.values()) <= max_block:
            return A
