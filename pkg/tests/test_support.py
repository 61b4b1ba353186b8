import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpoisson.algebra import ExtLabel
from ncpoisson.constructions import random_suite_algebra
from ncpoisson.document import load_corpus
from ncpoisson.support import (
    connection_classes,
    is_connected,
    psi,
    reachable,
    replay_connection,
    star,
)

from .conftest import VALID_CORPUS

P, M, Z = ExtLabel("p"), ExtLabel("m"), ExtLabel("z")
Pt, Mt, Zt = P.tilde(), M.tilde(), Z.tilde()


def brute_plain_star(A, s, t):
    """Labels whose blocks receive a nonzero coordinate of some basis product."""
    hit = set()
    for i in A.block(s):
        for j in A.block(t):
            for v in (A.bracket_basis(i, j), A.aprod_basis(i, j)):
                hit.update(A.label_of_index[k] for k, c in v.items() if c)
    return hit


def brute_star(A, a, b):
    if a.tilded and b.tilded:
        return set()
    if not a.tilded and not b.tilded:
        return brute_plain_star(A, a.base, b.base)
    lam, mu = (b.base, a.base) if a.tilded else (a.base, b.base)
    return {eta for eta in A.labels if brute_plain_star(A, eta, mu) == {lam}}


def set_level_classes(A):
    """Connection by iterating psi on whole sets, exactly as in the definition."""
    out = {}
    moves = A.ext_labels
    for lam in A.nonzero_labels:
        seen_sets = set()
        frontier = [frozenset({ExtLabel(lam)}), frozenset({ExtLabel(lam, True)})]
        seen_sets.update(frontier)
        while frontier:
            nxt = []
            for omega in frontier:
                for a in moves:
                    image = psi(A, omega, a)
                    if image and image not in seen_sets:
                        seen_sets.add(image)
                        nxt.append(image)
            frontier = nxt
        hit = {x.base for om in seen_sets for x in om if not x.tilded}
        out[lam] = hit | {lam}
    return out


def suite():
    rng = random.Random(2024)
    return [load_corpus(n) for n in VALID_CORPUS] + [random_suite_algebra(rng) for _ in range(40)]


SUITE = suite()


def test_star_examples(m2):
    assert star(m2, P, M) == {"z"}
    assert star(m2, Pt, Mt) == frozenset()
    assert star(m2, Pt, Z) == {"m"}
    assert star(m2, Z, P) == {"p"}


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_star_matches_brute_force(A):
    for a in A.ext_labels:
        for b in A.ext_labels:
            assert star(A, a, b) == brute_star(A, a, b)


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_tilde_argument_inverts_plain_lookup(A):
    for lam in A.labels:
        for mu in A.labels:
            left = star(A, ExtLabel(lam), ExtLabel(mu, True))
            assert left == star(A, ExtLabel(mu, True), ExtLabel(lam))
            for eta in A.labels:
                assert (eta in left) == (star(A, ExtLabel(eta), ExtLabel(mu)) == {lam})


def test_psi_examples(m2):
    for a in m2.ext_labels:
        assert psi(m2, set(), a) == frozenset()
    assert psi(m2, {P}, M) == frozenset()
    assert psi(m2, {Pt}, Z) == {M, Mt}


def test_psi_rejects_zero(m2):
    with pytest.raises(ValueError):
        psi(m2, {Z}, P)
    with pytest.raises(ValueError):
        psi(m2, {Zt, P}, P)


def domain(A):
    z = A.zero_label
    return [x for x in A.ext_labels if x.base != z]


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_psi_tilde_closed_and_distributive(data):
    A = data.draw(st.sampled_from(SUITE))
    dom = domain(A)
    w1 = frozenset(data.draw(st.lists(st.sampled_from(dom), max_size=4)))
    w2 = frozenset(data.draw(st.lists(st.sampled_from(dom), max_size=4)))
    a = data.draw(st.sampled_from(A.ext_labels))
    image = psi(A, w1, a)
    assert {x.tilde() for x in image} == image
    assert psi(A, w1 | w2, a) == image | psi(A, w2, a)
    assert all(x.base != A.zero_label for x in image)


def test_reachable_examples(m2, heis, double):
    assert reachable(m2, "p") == {P, Pt, M, Mt}
    a, b = ExtLabel("a"), ExtLabel("b")
    assert reachable(heis, "a") == {a, a.tilde(), b, b.tilde()}
    p1, m1 = ExtLabel("p1"), ExtLabel("m1")
    assert reachable(double, "p1") == {p1, p1.tilde(), m1, m1.tilde()}


def test_reachable_rejects_zero_and_unknown(m2):
    with pytest.raises(ValueError):
        reachable(m2, "z")
    with pytest.raises(ValueError):
        reachable(m2, "q")


def test_is_connected_examples(m2, double):
    assert is_connected(m2, "p", "m") == [Pt, Z]
    assert is_connected(m2, "p", "p") == [P]
    assert is_connected(double, "p1", "p2") is None


def test_class_examples(m2, double, heis):
    assert connection_classes(m2).classes == [("p", "m")]
    assert connection_classes(double).classes == [("p1", "m1"), ("p2", "m2")]
    assert connection_classes(heis).classes == [("a", "b")]


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_element_bfs_matches_set_iteration(A):
    oracle = set_level_classes(A)
    part = connection_classes(A)
    for lam in A.nonzero_labels:
        assert set(part.class_of(lam)) == oracle[lam] - {A.zero_label}


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_connection_is_an_equivalence(A):
    nz = A.nonzero_labels
    rel = {(l, m) for l in nz for m in nz if is_connected(A, l, m) is not None}
    assert all((l, l) in rel for l in nz)
    assert all((m, l) in rel for l, m in rel)
    assert all((l, t) in rel for l, m in rel for m2, t in rel if m == m2)
    part = connection_classes(A)
    assert sorted(s for c in part.classes for s in c) == sorted(nz)


@pytest.mark.parametrize("A", SUITE, ids=lambda A: A.name)
def test_witnesses_replay(A):
    part = connection_classes(A)
    for cls in part.classes:
        for lam in cls:
            for mu in cls:
                fam = part.witness[(lam, mu)]
                assert replay_connection(A, fam, lam, mu)


def test_replay_rejects_bad_families(m2, double):
    assert not replay_connection(m2, [], "p", "m")
    assert not replay_connection(m2, [P], "p", "m")
    assert not replay_connection(m2, [M, Z], "p", "m")
    assert not replay_connection(m2, [P, Mt, Zt], "p", "m")
    assert not replay_connection(double, [ExtLabel("p1"), ExtLabel("z")], "p1", "p2")
