"""The ⋆ operation, the ψ map and connection classes on the extended support."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import ExtLabel, GradedAlgebra, component_product_target


@dataclass(frozen=True)
class StarTable:
    """Plain ⋆ results ``plain[(s, t)]`` (``None`` for the empty set) plus the
    inverse lookup ``preimage[(u, t)] = {η : η ⋆ t = {u}}`` used by tilde arguments."""

    plain: dict[tuple[str, str], str | None]
    preimage: dict[tuple[str, str], frozenset[str]]

    @classmethod
    def build(cls, A: GradedAlgebra) -> StarTable:
        plain: dict[tuple[str, str], str | None] = {}
        preimage: dict[tuple[str, str], set[str]] = {}
        for s in A.labels:
            for t in A.labels:
                target = component_product_target(A, s, t)
                if target.kind == "incoherent":
                    raise ValueError(f"products of ({s}, {t}) touch {list(target.labels)}: grading is not coherent")
                u = target.labels[0] if target.kind == "target" else None
                plain[(s, t)] = u
                if u is not None:
                    preimage.setdefault((u, t), set()).add(s)
        return cls(plain, {k: frozenset(v) for k, v in preimage.items()})


def star(A: GradedAlgebra, a: ExtLabel, b: ExtLabel) -> frozenset[str]:
    table = A.star_table
    if a.tilded and b.tilded:
        return frozenset()
    if not a.tilded and not b.tilded:
        u = table.plain[(a.base, b.base)]
        return frozenset() if u is None else frozenset((u,))
    lam, mu = (b.base, a.base) if a.tilded else (a.base, b.base)
    return table.preimage.get((lam, mu), frozenset())


def _excluded(A: GradedAlgebra) -> frozenset[ExtLabel]:
    z = A.zero_label
    return frozenset() if z is None else frozenset((ExtLabel(z), ExtLabel(z, True)))


def psi(A: GradedAlgebra, omega: Iterable[ExtLabel], a: ExtLabel) -> frozenset[ExtLabel]:
    omega = frozenset(omega)
    if omega & _excluded(A):
        raise ValueError("psi is undefined on sets containing the distinguished zero or its tilde")
    hit: set[str] = set()
    for x in omega:
        hit |= star(A, x, a)
    hit.discard(A.zero_label)  # type: ignore[arg-type]
    return frozenset(ExtLabel(u) for u in hit) | frozenset(ExtLabel(u, True) for u in hit)


def _check_nonzero(A: GradedAlgebra, lam: str) -> None:
    if lam not in A.labels:
        raise ValueError(f"{lam!r} is not in the support")
    if lam == A.zero_label:
        raise ValueError("the distinguished zero has no connection class")


@dataclass
class _Search:
    reached: set[ExtLabel]
    parent: dict[ExtLabel, tuple[ExtLabel, ExtLabel]]


def _bfs(A: GradedAlgebra, lam: str) -> _Search:
    _check_nonzero(A, lam)
    starts = [ExtLabel(lam), ExtLabel(lam, True)]
    reached = set(starts)
    parent: dict[ExtLabel, tuple[ExtLabel, ExtLabel]] = {}
    queue = deque(starts)
    moves = A.ext_labels
    while queue:
        x = queue.popleft()
        for a in moves:
            for y in sorted(psi(A, (x,), a)):
                if y not in reached:
                    reached.add(y)
                    parent[y] = (x, a)
                    queue.append(y)
    return _Search(reached, parent)


def reachable(A: GradedAlgebra, lam: str) -> frozenset[ExtLabel]:
    """Every symbol reached from ``{λ, λ~}`` by single-element ψ steps."""
    return frozenset(_bfs(A, lam).reached)


def _family(search: _Search, target: ExtLabel) -> list[ExtLabel]:
    moves: list[ExtLabel] = []
    node = target
    while node in search.parent:
        node, a = search.parent[node]
        moves.append(a)
    return [node] + moves[::-1]


def is_connected(A: GradedAlgebra, lam: str, mu: str) -> list[ExtLabel] | None:
    """A connection family from ``lam`` to ``mu``, or ``None`` when they are not connected."""
    _check_nonzero(A, mu)
    search = _bfs(A, lam)
    if lam == mu:
        return [ExtLabel(lam)]
    if ExtLabel(mu) not in search.reached:
        return None
    return _family(search, ExtLabel(mu))


def replay_connection(A: GradedAlgebra, family: Sequence[ExtLabel], lam: str, mu: str) -> bool:
    """Check a family against the defining conditions of a connection."""
    if not family:
        return False
    if len(family) == 1:
        return family[0] == ExtLabel(lam) and lam == mu
    if family[0] not in (ExtLabel(lam), ExtLabel(lam, True)):
        return False
    current = psi(A, {family[0]}, family[1])
    for a in family[2:]:
        if not current:
            return False
        current = psi(A, current, a)
    return ExtLabel(mu) in current


@dataclass
class ConnectionPartition:
    classes: list[tuple[str, ...]]
    witness: dict[tuple[str, str], list[ExtLabel]] = field(default_factory=dict)

    def class_of(self, lam: str) -> tuple[str, ...]:
        for cls in self.classes:
            if lam in cls:
                return cls
        raise KeyError(lam)


def connection_classes(A: GradedAlgebra) -> ConnectionPartition:
    """Quotient of the nonzero support by connection, classes in label order.

    Witnesses are stored for every ordered pair inside a class.  The result is
    cached on the algebra; treat it as read-only.
    """
    cached = A.__dict__.get("_partition")
    if cached is None:
        cached = A.__dict__["_partition"] = _partition(A)
    return cached


def _partition(A: GradedAlgebra) -> ConnectionPartition:
    searches = {lam: _bfs(A, lam) for lam in A.nonzero_labels}
    classes: list[tuple[str, ...]] = []
    seen: set[str] = set()
    for lam in A.nonzero_labels:
        if lam in seen:
            continue
        members = {x.base for x in searches[lam].reached if not x.tilded} - {A.zero_label}
        cls = tuple(s for s in A.nonzero_labels if s in members)
        classes.append(cls)
        seen.update(cls)
    witness: dict[tuple[str, str], list[ExtLabel]] = {}
    for cls in classes:
        for lam in cls:
            for mu in cls:
                if lam == mu:
                    witness[(lam, mu)] = [ExtLabel(lam)]
                elif ExtLabel(mu) in searches[lam].reached:
                    witness[(lam, mu)] = _family(searches[lam], ExtLabel(mu))
    return ConnectionPartition(classes, witness)
