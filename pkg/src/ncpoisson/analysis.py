"""Global structure: center, tightness, multiplicativity, decomposition, gr-simplicity."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactlinalg as la
from .algebra import CheckReport, ExtLabel, GradedAlgebra, Table, validate
from .exactlinalg import Subspace
from .ideals import (
    GradedSubspace,
    block_graded,
    i0_of_class,
    ideal_closure,
    ideal_of_class,
    pairwise_orthogonal,
)
from .support import connection_classes, star


class Verdict(enum.Enum):
    SIMPLE = "Simple"
    NOT_SIMPLE = "NotSimple"
    INAPPLICABLE = "Inapplicable"


@dataclass
class SimplicityResult:
    verdict: Verdict
    reasons: list[str] = field(default_factory=list)
    witness: GradedSubspace | None = None


@dataclass
class StructureFlags:
    centerless: bool
    tight_zero: bool
    maximal_length: bool
    multiplicative: bool
    center: Subspace


@dataclass
class DecompositionReport:
    U: Subspace
    summands: list[tuple[tuple[str, ...], GradedSubspace]]
    direct: bool
    covers: bool


class HypothesisError(ValueError):
    pass


def center(A: GradedAlgebra) -> Subspace:
    """Kernel of ``x -> ([x, e_j], x e_j, e_j x)`` stacked over all basis vectors."""
    n = A.total_dim
    rows = []
    for j in range(n):
        for get in (lambda i: A.bracket_basis(i, j), lambda i: A.aprod_basis(i, j), lambda i: A.aprod_basis(j, i)):
            cols = [get(i) for i in range(n)]
            for k in range(n):
                row = [c.get(k, Fraction(0)) for c in cols]
                if any(row):
                    rows.append(row)
    return la.kernel(rows, n)


def _products_span(A: GradedAlgebra, pairs) -> Subspace:
    n = A.total_dim
    vecs = []
    for mu, eta in pairs:
        for i in A.block(mu):
            for j in A.block(eta):
                for v in (A.bracket_basis(i, j), A.aprod_basis(i, j)):
                    if v:
                        vecs.append(A.dense(v))
    return la.echelonize(vecs, n)


def is_tight_zero(A: GradedAlgebra) -> bool:
    z = A.zero_label
    if z is None:
        return True
    nz = A.nonzero_labels
    pairs = [(lam, mu) for lam in nz for mu in nz if star(A, ExtLabel(lam), ExtLabel(mu)) == {z}]
    return _products_span(A, pairs) == A.block_space(z)


def is_maximal_length(A: GradedAlgebra) -> bool:
    return all(A.dims[s] == 1 for s in A.nonzero_labels)


def is_multiplicative(A: GradedAlgebra) -> CheckReport:
    """Λ-multiplicativity over nonzero λ, μ with ``λ ∈ μ ⋆ s``.

    The tilde block is taken as zero, so ``P_s + P_s~`` is always the plain
    block of ``s``.  The distinguished zero never enters as λ or μ.
    """
    report = CheckReport("multiplicative")
    nz = A.nonzero_labels
    for mu in nz:
        for s in A.ext_labels:
            image = star(A, ExtLabel(mu), s)
            for lam in nz:
                if lam not in image:
                    continue
                generated = _products_span(A, [(mu, s.base)])
                if not la.is_subspace(A.block_space(lam), generated):
                    report.violations.append((lam, mu, str(s)))
    return report


def structure_flags(A: GradedAlgebra) -> StructureFlags:
    z = center(A)
    return StructureFlags(
        centerless=z.is_zero(),
        tight_zero=is_tight_zero(A),
        maximal_length=is_maximal_length(A),
        multiplicative=is_multiplicative(A).ok,
        center=z,
    )


def decompose(A: GradedAlgebra) -> DecompositionReport:
    n = A.total_dim
    classes = connection_classes(A).classes
    summands = [(cls, ideal_of_class(A, cls)) for cls in classes]
    if A.zero_label is None:
        U = la.zero_space(n)
    else:
        zero_part = la.zero_space(n)
        for cls in classes:
            zero_part = la.span_sum(zero_part, i0_of_class(A, cls).block(A.zero_label))
        U = la.complement_in(zero_part, A.block_space(A.zero_label))
    total = U
    for _, S in summands:
        total = la.span_sum(total, S.total())
    covers = total.is_full()
    dims_add_up = U.rank + sum(S.dim for _, S in summands) == n
    orthogonal = all(
        pairwise_orthogonal(A, summands[a][1], summands[b][1]).ok
        for a in range(len(summands))
        for b in range(a + 1, len(summands))
    )
    return DecompositionReport(U, summands, dims_add_up and orthogonal, covers)


def check_direct_sum_theorem(A: GradedAlgebra) -> CheckReport:
    """With trivial center and tight P_0, P is the direct sum of the class ideals."""
    report = CheckReport("direct_sum_theorem")
    flags = structure_flags(A)
    if not (flags.centerless and flags.tight_zero):
        report.name = "direct_sum_theorem (hypotheses not met)"
        return report
    d = decompose(A)
    if not d.U.is_zero():
        report.violations.append(("U nonzero", d.U.rank))
    if not d.covers:
        report.violations.append(("does not cover",))
    if not d.direct:
        report.violations.append(("not direct",))
    return report


def _hypothesis_gaps(flags: StructureFlags, need_multiplicative: bool) -> list[str]:
    gaps = []
    if not flags.centerless:
        gaps.append("center nonzero")
    if need_multiplicative and not flags.multiplicative:
        gaps.append("not multiplicative")
    if not flags.maximal_length:
        gaps.append("not maximal length")
    if not flags.tight_zero:
        gaps.append("zero component not tight")
    return gaps


def _has_products(A: GradedAlgebra) -> bool:
    return any(any(v.values()) for t in (A.bracket, A.aprod) for v in t.values())


def gr_simple_direct(A: GradedAlgebra) -> SimplicityResult:
    """Decide gr-simplicity by generating the ideal of every nonzero block.

    Sound only when P has maximal length, trivial center and tight P_0: then a
    nonzero graded ideal either contains a whole 1-dimensional block or lies in
    P_0, and the latter is forced to vanish.  Otherwise the verdict is Inapplicable.
    """
    gaps = _hypothesis_gaps(structure_flags(A), need_multiplicative=False)
    if gaps:
        return SimplicityResult(Verdict.INAPPLICABLE, gaps)
    if not _has_products(A):
        return SimplicityResult(Verdict.NOT_SIMPLE, ["[P,P] + PP = 0"])
    for lam in A.nonzero_labels:
        closure = ideal_closure(A, block_graded(A, [lam]))
        if closure.dim != A.total_dim:
            return SimplicityResult(Verdict.NOT_SIMPLE, [f"ideal generated by P_{lam} is proper"], closure)
    return SimplicityResult(Verdict.SIMPLE, ["every nonzero block generates P (graded ideals)"])


def gr_simple_criterion(A: GradedAlgebra) -> SimplicityResult:
    gaps = _hypothesis_gaps(structure_flags(A), need_multiplicative=True)
    if gaps:
        return SimplicityResult(Verdict.INAPPLICABLE, gaps)
    classes = connection_classes(A).classes
    if not _has_products(A):
        return SimplicityResult(Verdict.NOT_SIMPLE, ["[P,P] + PP = 0"])
    if len(classes) == 1:
        return SimplicityResult(Verdict.SIMPLE, ["all nonzero support elements connected"])
    return SimplicityResult(Verdict.NOT_SIMPLE, [f"{len(classes)} connection classes"])


def _table_in_basis(A: GradedAlgebra, basis, space: Subspace, table: Table) -> Table:
    out: Table = {}
    for a, x in enumerate(basis):
        for b, y in enumerate(basis):
            v = A.dense(table_apply(A, table, x, y))
            if not any(v):
                continue
            coeffs = _coordinates(space, basis, v)
            entry = {k: c for k, c in enumerate(coeffs) if c}
            if entry:
                out[(a, b)] = entry
    return out


def table_apply(A: GradedAlgebra, table: Table, x, y):
    sx = {k: c for k, c in enumerate(x) if c}
    sy = {k: c for k, c in enumerate(y) if c}
    return A._apply(table, sx, sy)


def _coordinates(space: Subspace, basis, v) -> list[Fraction]:
    rows = [[row[k] for row in basis] + [-v[k]] for k in range(space.dim)]
    ker = la.kernel(rows, len(basis) + 1)
    for sol in ker.basis:
        if sol[-1]:
            return [c / sol[-1] for c in sol[:-1]]
    raise ValueError("product leaves the restricted subspace")


def restrict(A: GradedAlgebra, cls: tuple[str, ...], summand: GradedSubspace) -> GradedAlgebra:
    """The summand as an algebra in its own right.

    Its zero component is the summand's slice of block 0 (omitted when zero,
    so the restriction has no distinguished zero) and the remaining labels are
    those of the class.  Structure constants are re-expressed in the slice bases.
    """
    labels: list[str] = []
    dims: dict[str, int] = {}
    basis = []
    z = A.zero_label
    for s in A.labels:
        if s == z:
            sp = summand.block(s)
            if sp.is_zero():
                continue
        elif s in cls:
            sp = summand.block(s)
        else:
            continue
        labels.append(s)
        dims[s] = sp.rank
        basis.extend(sp.basis)
    space = la.echelonize(basis, A.total_dim)
    bracket = _table_in_basis(A, basis, space, A.bracket)
    aprod = _table_in_basis(A, basis, space, A.aprod)
    zero = z if z in labels else None
    return GradedAlgebra(f"{A.name}|{','.join(cls)}", tuple(labels), dims, bracket, aprod, zero)


@dataclass
class FineSummand:
    cls: tuple[str, ...]
    restriction: GradedAlgebra
    axioms_ok: bool
    simple: SimplicityResult


def fine_decomposition_check(A: GradedAlgebra) -> tuple[CheckReport, list[FineSummand]]:
    """Restrict to every class ideal, re-validate it and decide its gr-simplicity directly."""
    gaps = _hypothesis_gaps(structure_flags(A), need_multiplicative=True)
    if gaps:
        raise HypothesisError("hypotheses not met: " + ", ".join(gaps))
    report = CheckReport("fine_decomposition")
    parts = []
    for cls, S in decompose(A).summands:
        B = restrict(A, cls, S)
        ok = all(r.ok for r in validate(B))
        verdict = gr_simple_direct(B)
        parts.append(FineSummand(cls, B, ok, verdict))
        if not ok:
            report.violations.append((list(cls), "restriction fails axioms"))
        if verdict.verdict is not Verdict.SIMPLE:
            report.violations.append((list(cls), verdict.verdict.value, verdict.reasons))
    return report, parts
