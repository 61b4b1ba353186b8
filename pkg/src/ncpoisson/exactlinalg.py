"""Exact rational linear algebra over ``fractions.Fraction``.

Vectors are plain tuples of ``Fraction``.  A :class:`Subspace` always keeps its
basis in reduced row-echelon form, so two spans are equal exactly when their
bases are equal row for row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


def vector(values: Iterable[int | Fraction | str]) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def unit_vector(dim: int, i: int) -> Vector:
    out = [Fraction(0)] * dim
    out[i] = Fraction(1)
    return tuple(out)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def lincomb(terms: Iterable[tuple[Fraction, Vector]], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for c, v in terms:
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination in place; returns (nonzero rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c] != 0:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        inv = 1 / rows[r][c]
        prow = [a * inv for a in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    row = rows[i]
                    for k in range(c, ncols):
                        if prow[k]:
                            row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^dim`` held by its canonical echelon basis."""

    dim: int
    basis: tuple[Vector, ...] = ()
    pivots: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.dim

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residue of ``v`` after eliminating every pivot column of the basis."""
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.dim}")
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = out[p]
            if f:
                for k, a in enumerate(row):
                    if a:
                        out[k] -= f * a
        return tuple(out)

    def __contains__(self, v: Sequence[Fraction]) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the echelon basis; raises if ``v`` is outside."""
        coeffs = tuple(Fraction(v[p]) for p in self.pivots)
        if tuple(v) != lincomb(zip(coeffs, self.basis), self.dim):
            raise ValueError("vector does not lie in the subspace")
        return coeffs


def echelonize(vectors: Iterable[Sequence[Fraction]], dim: int | None = None) -> Subspace:
    rows = [list(map(Fraction, v)) for v in vectors]
    if dim is None:
        if not rows:
            raise DimensionError("cannot infer the ambient dimension of an empty family")
        dim = len(rows[0])
    for row in rows:
        if len(row) != dim:
            raise DimensionError(f"vector of length {len(row)} in ambient dimension {dim}")
    rows = [row for row in rows if any(row)]
    reduced, pivots = _rref(rows, dim)
    return Subspace(dim, tuple(tuple(r) for r in reduced), tuple(pivots))


def zero_space(dim: int) -> Subspace:
    return Subspace(dim)


def full_space(dim: int) -> Subspace:
    return echelonize([unit_vector(dim, i) for i in range(dim)], dim)


def contains(space: Subspace, v: Sequence[Fraction]) -> bool:
    return v in space


def is_subspace(a: Subspace, b: Subspace) -> bool:
    _check_same(a, b)
    return all(row in b for row in a.basis)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return echelonize(a.basis + b.basis, a.dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of ``(x, y) -> x·A - y·B``."""
    _check_same(a, b)
    if a.is_zero() or b.is_zero():
        return zero_space(a.dim)
    m, n = a.rank, b.rank
    # Columns index the combined coefficient vector (alpha | beta).
    rows = []
    for k in range(a.dim):
        rows.append([r[k] for r in a.basis] + [-r[k] for r in b.basis])
    ker = kernel(rows, m + n)
    gens = [lincomb(zip(sol[:m], a.basis), a.dim) for sol in ker.basis]
    return echelonize(gens, a.dim)


def complement_in(sub: Subspace, ambient: Subspace) -> Subspace:
    """Deterministic complement of ``sub`` inside ``ambient``.

    Takes the echelon rows of ``ambient`` whose pivots are not pivots of ``sub``.
    When ``sub`` has a pivot that ``ambient`` lacks (possible for non-coordinate
    ambients), falls back to greedy completion over the ambient rows in order.
    """
    if not is_subspace(sub, ambient):
        raise ValueError("sub is not contained in ambient")
    taken = set(sub.pivots)
    chosen = [row for row, p in zip(ambient.basis, ambient.pivots) if p not in taken]
    candidate = echelonize(chosen, ambient.dim)
    if candidate.rank + sub.rank == ambient.rank and span_sum(sub, candidate).rank == ambient.rank:
        return candidate
    current = sub
    chosen = []
    for row in ambient.basis:
        if row not in current:
            chosen.append(row)
            current = span_sum(current, echelonize([row], ambient.dim))
    return echelonize(chosen, ambient.dim)


def kernel(rows: Sequence[Sequence[Fraction]], ncols: int) -> Subspace:
    """Null space ``{x : M x = 0}`` of the matrix given by ``rows``."""
    for row in rows:
        if len(row) != ncols:
            raise DimensionError(f"row of length {len(row)} with {ncols} columns")
    work = [list(map(Fraction, r)) for r in rows if any(r)]
    reduced, pivots = _rref(work, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    gens = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        gens.append(x)
    return echelonize(gens, ncols)


def _check_same(a: Subspace, b: Subspace) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"ambient dimensions differ: {a.dim} != {b.dim}")
