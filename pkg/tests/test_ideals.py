import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpoisson.constructions import random_suite_algebra
from ncpoisson.document import load_corpus
from ncpoisson.exactlinalg import unit_vector, vector
from ncpoisson.ideals import (
    block_graded,
    graded_from_vectors,
    i0_of_class,
    ideal_closure,
    ideal_of_class,
    is_graded_ideal,
    is_graded_subalgebra,
    pairwise_orthogonal,
    v_of_class,
    zero_graded,
)
from ncpoisson.support import connection_classes

from .conftest import VALID_CORPUS

SUITE = [load_corpus(n) for n in VALID_CORPUS] + [random_suite_algebra(random.Random(s)) for s in range(100, 130)]


def e(n, i):
    return unit_vector(n, i - 1)


def sympy_ideal_dim(A, gens):
    """Span closure under left/right products with the basis, computed with sympy ranks."""
    n = A.total_dim
    rows = [list(v) for v in gens]
    if not rows:
        return 0
    while True:
        mat = sympy.Matrix(rows)
        rank = mat.rank()
        basis = [list(r) for r in mat.rref()[0].tolist()[:rank]]
        new = list(basis)
        for v in basis:
            x = {k: c for k, c in enumerate(v) if c}
            for j in range(n):
                y = {j: 1}
                for w in (A.bracket_sparse(x, y), A.aprod_sparse(x, y), A.aprod_sparse(y, x)):
                    new.append([w.get(k, 0) for k in range(n)])
        if sympy.Matrix(new).rank() == rank:
            return rank
        rows = new


def test_class_ideal_examples(m2, heis, double):
    assert i0_of_class(m2, ["p", "m"]).dims() == {"z": 2, "p": 0, "m": 0}
    assert i0_of_class(heis, ["a", "b"]).dim == 1
    i0 = i0_of_class(double, ["p1", "m1"])
    assert i0.dim == 2
    assert i0.block("z").basis == (e(8, 1), e(8, 2))
    assert v_of_class(m2, ["p", "m"]).dims() == {"z": 0, "p": 1, "m": 1}
    v2 = v_of_class(double, ["p2", "m2"])
    assert v2.dims() == {"z": 0, "p1": 0, "m1": 0, "p2": 1, "m2": 1}
    assert ideal_of_class(m2, ["p", "m"]).dim == 4
    assert ideal_of_class(heis, ["a", "b"]).dim == 3
    first = ideal_of_class(double, ["p1", "m1"])
    assert first.dim == 4 and first.dims()["p1"] == 1 and first.dims()["p2"] == 0


def test_non_class_rejected(m2, double):
    with pytest.raises(ValueError):
        i0_of_class(double, ["p1"])
    with pytest.raises(ValueError):
        ideal_of_class(m2, ["z"])


def test_subalgebra_and_ideal_examples(m2, double):
    e12 = graded_from_vectors(m2, [e(4, 3)])
    e11 = graded_from_vectors(m2, [e(4, 1)])
    assert is_graded_subalgebra(m2, e12).ok
    assert is_graded_subalgebra(m2, e11).ok
    assert not is_graded_ideal(m2, e11).ok
    assert is_graded_ideal(m2, zero_graded(m2)).ok
    assert is_graded_ideal(double, ideal_of_class(double, ["p1", "m1"])).ok


def test_graded_from_vectors_splits_into_components(m2):
    G = graded_from_vectors(m2, [vector([1, 0, 1, 0])])
    assert G.dims() == {"z": 1, "p": 1, "m": 0}
    assert e(4, 1) in G and e(4, 3) in G


def test_closure_examples(m2, heis):
    assert ideal_closure(m2, block_graded(m2, ["p"])).dim == 4
    c = graded_from_vectors(heis, [e(3, 1)])
    assert ideal_closure(heis, c) == c
    assert ideal_closure(m2, zero_graded(m2)).dim == 0
    assert ideal_closure(heis, block_graded(heis, ["a"])).dims() == {"z": 1, "a": 1, "b": 0}


def test_orthogonality_examples(m2, double):
    a, b = (ideal_of_class(double, c) for c in connection_classes(double).classes)
    assert pairwise_orthogonal(double, a, b).ok
    whole = ideal_of_class(m2, ["p", "m"])
    assert not pairwise_orthogonal(m2, whole, whole).ok
    assert pairwise_orthogonal(m2, zero_graded(m2), whole).ok


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_class_ideals_are_orthogonal_graded_ideals(A):
    classes = connection_classes(A).classes
    ideals = [ideal_of_class(A, c) for c in classes]
    for I in ideals:
        assert is_graded_subalgebra(A, I).ok
        assert is_graded_ideal(A, I).ok
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            assert pairwise_orthogonal(A, ideals[a], ideals[b]).ok


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_i0_inside_closure_of_v(A):
    for cls in connection_classes(A).classes:
        i0 = i0_of_class(A, cls)
        if A.zero_label is not None:
            assert all(i0.block(s).is_zero() for s in A.labels if s != A.zero_label)
        closure = ideal_closure(A, v_of_class(A, cls))
        assert all(v in closure for _, v in i0.basis())


def homogeneous_generators(data, A):
    gens = []
    for _ in range(data.draw(st.integers(0, 3))):
        s = data.draw(st.sampled_from(A.labels))
        coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=A.dims[s], max_size=A.dims[s]))
        v = [0] * A.total_dim
        for c, i in zip(coeffs, A.block(s)):
            v[i] = c
        gens.append(vector(v))
    return gens


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_is_least_ideal_and_matches_oracle(data):
    A = data.draw(st.sampled_from(SUITE))
    gens = homogeneous_generators(data, A)
    G = graded_from_vectors(A, gens)
    C = ideal_closure(A, G)
    assert is_graded_ideal(A, C).ok
    assert all(v in C for _, v in G.basis())
    assert ideal_closure(A, C) == C
    assert C.dim == sympy_ideal_dim(A, [v for _, v in G.basis()])
    extra = homogeneous_generators(data, A)
    bigger = ideal_closure(A, graded_from_vectors(A, [v for _, v in G.basis()] + extra))
    assert all(v in bigger for _, v in C.basis())
