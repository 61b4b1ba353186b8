"""Graded subspaces, the ideals attached to connection classes, and ideal closure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from . import exactlinalg as la
from .algebra import CheckReport, ExtLabel, GradedAlgebra, Sparse
from .exactlinalg import Subspace, Vector
from .support import star


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace given block by block; ``per_label[s]`` lives inside block ``s``.

    Block subspaces are kept in ambient coordinates (zero outside their block)
    so containment and sums need no translation.
    """

    per_label: Mapping[str, Subspace]

    @property
    def dim(self) -> int:
        return sum(sp.rank for sp in self.per_label.values())

    def block(self, s: str) -> Subspace:
        return self.per_label[s]

    def basis(self) -> Iterator[tuple[str, Vector]]:
        for s, sp in self.per_label.items():
            for v in sp.basis:
                yield s, v

    def total(self) -> Subspace:
        vecs = [v for _, v in self.basis()]
        n = next(iter(self.per_label.values())).dim
        return la.echelonize(vecs, n)

    def __contains__(self, v: Vector) -> bool:
        return v in self.total()

    def dims(self) -> dict[str, int]:
        return {s: sp.rank for s, sp in self.per_label.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return dict(self.per_label) == dict(other.per_label)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.per_label.items())))


def graded_from_vectors(A: GradedAlgebra, vectors: Iterable[Vector]) -> GradedSubspace:
    """Span of the homogeneous components of ``vectors``, block by block."""
    n = A.total_dim
    pieces: dict[str, list[Vector]] = {s: [] for s in A.labels}
    for v in vectors:
        for s in A.labels:
            r = A.block(s)
            if any(v[k] for k in r):
                pieces[s].append(tuple(v[k] if k in r else Fraction(0) for k in range(n)))
    return GradedSubspace({s: la.echelonize(pieces[s], n) for s in A.labels})


def zero_graded(A: GradedAlgebra) -> GradedSubspace:
    n = A.total_dim
    return GradedSubspace({s: la.zero_space(n) for s in A.labels})


def block_graded(A: GradedAlgebra, labels: Iterable[str]) -> GradedSubspace:
    chosen = set(labels)
    n = A.total_dim
    return GradedSubspace({s: A.block_space(s) if s in chosen else la.zero_space(n) for s in A.labels})


def _check_class(A: GradedAlgebra, cls: Iterable[str]) -> tuple[str, ...]:
    from .support import connection_classes

    cls = tuple(cls)
    wanted = set(cls)
    for c in connection_classes(A).classes:
        if set(c) == wanted:
            return c
    raise ValueError(f"{sorted(wanted)} is not a connection class")


def _sparse_products(A: GradedAlgebra, mu: str, eta: str) -> Iterator[Sparse]:
    for i in A.block(mu):
        for j in A.block(eta):
            yield A.bracket_basis(i, j)
            yield A.aprod_basis(i, j)


def i0_of_class(A: GradedAlgebra, cls: Iterable[str]) -> GradedSubspace:
    """Span inside block 0 of the in-class products whose ⋆ value is {0}."""
    cls = _check_class(A, cls)
    z = A.zero_label
    if z is None:
        return zero_graded(A)
    vecs = []
    for mu in cls:
        for eta in cls:
            if star(A, ExtLabel(mu), ExtLabel(eta)) == {z}:
                vecs.extend(A.dense(v) for v in _sparse_products(A, mu, eta) if v)
    return graded_from_vectors(A, vecs) if vecs else zero_graded(A)


def v_of_class(A: GradedAlgebra, cls: Iterable[str]) -> GradedSubspace:
    return block_graded(A, _check_class(A, cls))


def ideal_of_class(A: GradedAlgebra, cls: Iterable[str]) -> GradedSubspace:
    cls = _check_class(A, cls)
    i0, v = i0_of_class(A, cls), v_of_class(A, cls)
    return GradedSubspace({s: la.span_sum(i0.block(s), v.block(s)) for s in A.labels})


def _products_with_basis(A: GradedAlgebra, v: Vector) -> Iterator[tuple[str, int, Vector]]:
    x = {k: a for k, a in enumerate(v) if a}
    for j in range(A.total_dim):
        e = {j: Fraction(1)}
        yield "bracket", j, A.dense(A.bracket_sparse(x, e))
        yield "right", j, A.dense(A.aprod_sparse(x, e))
        yield "left", j, A.dense(A.aprod_sparse(e, x))


def is_graded_subalgebra(A: GradedAlgebra, S: GradedSubspace) -> CheckReport:
    report = CheckReport("graded_subalgebra")
    total = S.total()
    basis = [v for _, v in S.basis()]
    for a, x in enumerate(basis):
        for b, y in enumerate(basis):
            br = A.dense(A.bracket_sparse(_sp(x), _sp(y)))
            pr = A.dense(A.aprod_sparse(_sp(x), _sp(y)))
            if br not in total:
                report.violations.append(("bracket", a, b))
            if pr not in total:
                report.violations.append(("aprod", a, b))
    return report


def _sp(v: Vector) -> Sparse:
    return {k: a for k, a in enumerate(v) if a}


def is_graded_ideal(A: GradedAlgebra, S: GradedSubspace) -> CheckReport:
    """``[v, e]``, ``v e`` and ``e v`` stay in ``S`` for every basis vector ``v`` of S and ``e`` of P."""
    report = CheckReport("graded_ideal")
    total = S.total()
    for a, (_, v) in enumerate(S.basis()):
        for kind, j, w in _products_with_basis(A, v):
            if w not in total:
                report.violations.append((kind, a, j))
    return report


def ideal_closure(A: GradedAlgebra, gens: GradedSubspace) -> GradedSubspace:
    """Smallest graded ideal containing ``gens`` (fixed point of adjoining products)."""
    n = A.total_dim
    for s, sp in gens.per_label.items():
        if s not in A.labels or sp.dim != n:
            raise ValueError(f"generator block {s!r} does not fit the algebra")
        if not la.is_subspace(sp, A.block_space(s)):
            raise ValueError(f"generator block {s!r} leaves its coordinate range")
    current = GradedSubspace({s: gens.per_label.get(s, la.zero_space(n)) for s in A.labels})
    frontier = [v for _, v in current.basis()]
    while frontier:
        products = [w for v in frontier for _, _, w in _products_with_basis(A, v) if any(w)]
        grown = graded_from_vectors(A, [v for _, v in current.basis()] + products)
        if grown.dim == current.dim:
            break
        frontier = [v for _, v in grown.basis() if v not in current.total()]
        current = grown
    return current


def pairwise_orthogonal(A: GradedAlgebra, S1: GradedSubspace, S2: GradedSubspace) -> CheckReport:
    report = CheckReport("pairwise_orthogonal")
    for a, (_, x) in enumerate(S1.basis()):
        for b, (_, y) in enumerate(S2.basis()):
            sx, sy = _sp(x), _sp(y)
            if A.bracket_sparse(sx, sy):
                report.violations.append(("bracket", a, b))
            if A.aprod_sparse(sx, sy):
                report.violations.append(("aprod", a, b))
            if A.aprod_sparse(sy, sx):
                report.violations.append(("aprod_reversed", a, b))
    return report
