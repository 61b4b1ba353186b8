"""Set-graded non-commutative Poisson algebras given by structure constants."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from . import exactlinalg as la
from .exactlinalg import Subspace, Vector

Sparse = dict[int, Fraction]
Table = dict[tuple[int, int], Sparse]


class SpecError(ValueError):
    """Malformed algebra input (unknown label, bad index, bad rational...)."""


@dataclass(frozen=True, order=True)
class ExtLabel:
    """A support label or its tilde twin."""

    base: str
    tilded: bool = False

    def tilde(self) -> ExtLabel:
        return ExtLabel(self.base, not self.tilded)

    def __str__(self) -> str:
        return self.base + "~" if self.tilded else self.base

    @classmethod
    def parse(cls, text: str) -> ExtLabel:
        if text.endswith("~"):
            return cls(text[:-1], True)
        return cls(text)


@dataclass(frozen=True)
class ProductTarget:
    """Where ``[P_s, P_t] + P_s P_t`` lands: ``zero``, ``target`` or ``incoherent``."""

    kind: str
    labels: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        if self.kind != "target":
            raise ValueError(f"no single target for a {self.kind} product")
        return self.labels[0]


@dataclass
class CheckReport:
    name: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _sparse_add(acc: Sparse, c: Fraction, v: Mapping[int, Fraction]) -> None:
    for k, a in v.items():
        s = acc.get(k, 0) + c * a
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def _to_sparse(v: Iterable[Fraction]) -> Sparse:
    return {k: a for k, a in enumerate(v) if a}


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    """Structure constants of both products on a block-decomposed basis.

    ``bracket[(i, j)]`` and ``aprod[(i, j)]`` hold the sparse value of
    ``[e_i, e_j]`` and ``e_i e_j``; missing keys are zero.  The loader fills
    both orders of the bracket, so the tables are used as-is here.
    """

    name: str
    labels: tuple[str, ...]
    dims: Mapping[str, int]
    bracket: Table
    aprod: Table
    zero_label: str | None = None

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise SpecError("duplicate labels")
        for s in self.labels:
            if self.dims.get(s, 0) <= 0:
                raise SpecError(f"label {s!r} must have positive dimension")
        if self.zero_label is not None and self.zero_label not in self.labels:
            raise SpecError(f"zero_label {self.zero_label!r} is not a label")
        n = self.total_dim
        for table in (self.bracket, self.aprod):
            for (i, j), v in table.items():
                if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in v):
                    raise SpecError(f"structure constant index out of range at ({i}, {j})")

    @functools.cached_property
    def basis_offset(self) -> dict[str, int]:
        out, pos = {}, 0
        for s in self.labels:
            out[s] = pos
            pos += self.dims[s]
        return out

    @property
    def total_dim(self) -> int:
        return sum(self.dims[s] for s in self.labels)

    @functools.cached_property
    def label_of_index(self) -> tuple[str, ...]:
        return tuple(s for s in self.labels for _ in range(self.dims[s]))

    def block(self, s: str) -> range:
        start = self.basis_offset[s]
        return range(start, start + self.dims[s])

    def block_space(self, s: str) -> Subspace:
        n = self.total_dim
        return la.echelonize([la.unit_vector(n, i) for i in self.block(s)], n)

    @property
    def nonzero_labels(self) -> tuple[str, ...]:
        return tuple(s for s in self.labels if s != self.zero_label)

    @property
    def ext_labels(self) -> tuple[ExtLabel, ...]:
        return tuple(ExtLabel(s) for s in self.labels) + tuple(ExtLabel(s, True) for s in self.labels)

    def blocks_touched(self, v: Iterable[int]) -> tuple[str, ...]:
        """Labels whose coordinate ranges meet the support indices ``v``."""
        hit = {self.label_of_index[k] for k in v}
        return tuple(s for s in self.labels if s in hit)

    # --- products -------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Sparse:
        return self.bracket.get((i, j), {})

    def aprod_basis(self, i: int, j: int) -> Sparse:
        return self.aprod.get((i, j), {})

    def _apply(self, table: Table, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            for j, b in y.items():
                v = table.get((i, j))
                if v:
                    _sparse_add(out, a * b, v)
        return out

    def bracket_sparse(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Sparse:
        return self._apply(self.bracket, x, y)

    def aprod_sparse(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Sparse:
        return self._apply(self.aprod, x, y)

    def dense(self, v: Mapping[int, Fraction]) -> Vector:
        out = [Fraction(0)] * self.total_dim
        for k, a in v.items():
            out[k] = a
        return tuple(out)

    def _check_dim(self, *vs: Vector) -> None:
        for v in vs:
            if len(v) != self.total_dim:
                raise la.DimensionError(f"vector of length {len(v)}; algebra has dimension {self.total_dim}")

    def with_constant(self, table: str, i: int, j: int, k: int, value: Fraction) -> GradedAlgebra:
        """Copy with a single structure constant replaced (no antisymmetrization)."""
        tables = {"bracket": self.bracket, "aprod": self.aprod}
        new = {key: dict(v) for key, v in tables[table].items()}
        entry = new.setdefault((i, j), {})
        if value:
            entry[k] = Fraction(value)
        else:
            entry.pop(k, None)
        tables[table] = new
        return GradedAlgebra(self.name, self.labels, dict(self.dims), tables["bracket"], tables["aprod"], self.zero_label)

    def constants(self) -> Iterator[tuple[str, int, int, int, Fraction]]:
        """Every nonzero structure constant as ``(table, i, j, k, value)``."""
        for name, table in (("bracket", self.bracket), ("aprod", self.aprod)):
            for (i, j) in sorted(table):
                for k in sorted(table[(i, j)]):
                    yield name, i, j, k, table[(i, j)][k]

    @functools.cached_property
    def star_table(self):
        from .support import StarTable

        return StarTable.build(self)


def bracket_vec(A: GradedAlgebra, x: Vector, y: Vector) -> Vector:
    A._check_dim(x, y)
    return A.dense(A.bracket_sparse(_to_sparse(x), _to_sparse(y)))


def aprod_vec(A: GradedAlgebra, x: Vector, y: Vector) -> Vector:
    A._check_dim(x, y)
    return A.dense(A.aprod_sparse(_to_sparse(x), _to_sparse(y)))


def _unit(i: int) -> Sparse:
    return {i: Fraction(1)}


# --- axiom checks ---------------------------------------------------------


def check_antisymmetry(A: GradedAlgebra) -> CheckReport:
    report = CheckReport("antisymmetry")
    n = A.total_dim
    for i in range(n):
        for j in range(i, n):
            acc = dict(A.bracket_basis(i, j))
            _sparse_add(acc, Fraction(1), A.bracket_basis(j, i))
            if acc:
                report.violations.append((i, j))
    return report


def check_jacobi(A: GradedAlgebra) -> CheckReport:
    report = CheckReport("jacobi")
    n = A.total_dim
    br = A.bracket_sparse
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                ei, ej, ek = _unit(i), _unit(j), _unit(k)
                acc: Sparse = {}
                _sparse_add(acc, Fraction(1), br(br(ei, ej), ek))
                _sparse_add(acc, Fraction(1), br(br(ej, ek), ei))
                _sparse_add(acc, Fraction(1), br(br(ek, ei), ej))
                if acc:
                    report.violations.append((i, j, k))
    return report


def check_associativity(A: GradedAlgebra) -> CheckReport:
    report = CheckReport("associativity")
    n = A.total_dim
    mul = A.aprod_sparse
    for i in range(n):
        for j in range(n):
            eij = A.aprod_basis(i, j)
            for k in range(n):
                lhs = mul(eij, _unit(k))
                _sparse_add(lhs, Fraction(-1), mul(_unit(i), A.aprod_basis(j, k)))
                if lhs:
                    report.violations.append((i, j, k))
    return report


def check_leibniz(A: GradedAlgebra) -> CheckReport:
    """``[x, yz] = [x, y]z + y[x, z]`` on every ordered basis triple."""
    report = CheckReport("leibniz")
    n = A.total_dim
    br, mul = A.bracket_sparse, A.aprod_sparse
    for i in range(n):
        ei = _unit(i)
        for j in range(n):
            ej = _unit(j)
            xy = A.bracket_basis(i, j)
            for k in range(n):
                ek = _unit(k)
                acc = br(ei, A.aprod_basis(j, k))
                _sparse_add(acc, Fraction(-1), mul(xy, ek))
                _sparse_add(acc, Fraction(-1), mul(ej, A.bracket_basis(i, k)))
                if acc:
                    report.violations.append((i, j, k))
    return report


def component_product_target(A: GradedAlgebra, s: str, t: str) -> ProductTarget:
    touched: set[str] = set()
    for i in A.block(s):
        for j in A.block(t):
            for v in (A.bracket_basis(i, j), A.aprod_basis(i, j)):
                touched.update(A.blocks_touched(v))
    if not touched:
        return ProductTarget("zero")
    ordered = tuple(u for u in A.labels if u in touched)
    if len(ordered) == 1:
        return ProductTarget("target", ordered)
    return ProductTarget("incoherent", ordered)


def check_grading_coherence(A: GradedAlgebra) -> CheckReport:
    report = CheckReport("grading_coherence")
    for s in A.labels:
        for t in A.labels:
            target = component_product_target(A, s, t)
            if target.kind == "incoherent":
                report.violations.append((s, t, list(target.labels)))
    return report


def validate_zero_label(A: GradedAlgebra) -> CheckReport:
    """Admissibility of the distinguished zero: ``0 ⋆ λ`` is never ``{0}`` for ``λ ≠ 0``."""
    report = CheckReport("zero_label")
    z = A.zero_label
    if z is None:
        return report
    for lam in A.nonzero_labels:
        target = component_product_target(A, z, lam)
        if target.kind == "target" and target.label == z:
            report.violations.append((lam,))
    return report


AXIOM_CHECKS = (check_antisymmetry, check_jacobi, check_associativity, check_leibniz, check_grading_coherence)


def validate(A: GradedAlgebra) -> list[CheckReport]:
    """Run every axiom check; the zero-label check only once grading is coherent."""
    reports = [check(A) for check in AXIOM_CHECKS]
    if reports[-1].ok:
        reports.append(validate_zero_label(A))
    else:
        reports.append(CheckReport("zero_label", [("skipped: grading incoherent",)]))
    return reports


def is_valid(A: GradedAlgebra) -> bool:
    return all(r.ok for r in validate(A))
