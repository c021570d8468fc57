from itertools import product

import pytest
from hypothesis import given, strategies as st

from yokonuma import perms as P
from oracle import double_coset_count, young_subgroup_size

COMPOSITIONS = {
    n: [c for k in range(1, n + 1) for c in product(range(1, n + 1), repeat=k) if sum(c) == n] for n in range(1, 5)
}


def test_reduced_word_examples():
    assert P.reduced_word(P.identity(3)) == []
    assert len(P.reduced_word((2, 1, 0))) == 3
    w = P.compose(P.simple(1, 3), P.simple(2, 3))
    assert P.reduced_word(w) == [1, 2] and P.length(w) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduced_words_round_trip(n):
    for w in P.all_perms(n):
        word = P.reduced_word(w)
        assert P.from_word(word, n) == w
        assert len(word) == P.length(w)


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_composition_applies_the_left_factor_first(u, v):
    u, v = tuple(u), tuple(v)
    uv = P.compose(u, v)
    assert all(uv[j] == v[u[j]] for j in range(4))
    assert P.compose(uv, P.inverse(v)) == u
    assert P.length(uv) <= P.length(u) + P.length(v)


def test_coset_rep_examples():
    assert P.coset_reps((3,)) == [P.identity(3)]
    assert len(P.coset_reps((2, 1))) == 3
    assert sorted(P.coset_reps((1, 1))) == sorted(P.all_perms(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coset_reps_are_minimal_and_lengths_add(n):
    for mu in COMPOSITIONS[n]:
        reps = P.coset_reps(mu)
        assert len(reps) * young_subgroup_size(mu) == len(P.all_perms(n))
        S = P.young_subgroup(mu)
        cosets = set()
        for d in reps:
            coset = {P.compose(u, d) for u in S}
            assert all(P.length(d) <= P.length(w) for w in coset)
            assert all(P.length(P.compose(u, d)) == P.length(u) + P.length(d) for u in S)
            cosets.add(frozenset(coset))
        assert len(cosets) == len(reps)


def test_double_coset_examples():
    assert len(P.double_coset_reps((2, 1), (2, 1))) == 2
    assert P.double_coset_reps((3,), (1, 1, 1)) == [P.identity(3)]
    assert sorted(P.double_coset_reps((1, 1), (1, 1))) == sorted(P.all_perms(2))
    w = P.compose(P.simple(1, 3), P.simple(2, 3))
    d = P.min_double_coset_rep(w, (2, 1), (2, 1))
    dc = P.double_coset(w, (2, 1), (2, 1))
    assert d in dc and P.length(d) == min(P.length(x) for x in dc)
    assert P.min_double_coset_rep(P.identity(3), (2, 1), (2, 1)) == P.identity(3)
    assert P.min_double_coset_rep(P.simple(1, 3), (2, 1), (1, 1, 1)) == P.identity(3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_double_cosets_partition_the_group(n):
    for lam in COMPOSITIONS[n]:
        for mu in COMPOSITIONS[n]:
            reps = P.double_coset_reps(lam, mu)
            assert len(reps) == double_coset_count(n, lam, mu)
            cosets = [P.double_coset(d, lam, mu) for d in reps]
            assert sum(len(c) for c in cosets) == len(P.all_perms(n))
            for d, c in zip(reps, cosets):
                assert P.min_double_coset_rep(d, lam, mu) == d
                assert all(P.min_double_coset_rep(w, lam, mu) == d for w in c)
