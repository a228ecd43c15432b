from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operad_forge import combinat as cb
from operad_forge.combinat import Inj


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda t: Inj(n, n, t))


def test_identity_and_composition_order():
    f = Inj(2, 3, [3, 1])
    g = cb.perm([2, 3, 1])
    assert g.compose(f).table == (1, 2)
    assert cb.identity(3).compose(f) == f


def test_injection_validation():
    with pytest.raises(cb.CombinatError):
        Inj(2, 2, [1, 1])
    with pytest.raises(cb.CombinatError):
        Inj(1, 2, [0])
    with pytest.raises(cb.CombinatError):
        cb.BasedMap(1, 1, [2])


def test_degeneracy_skips_i():
    assert cb.degeneracy(3, 2).table == (1, 3)
    with pytest.raises(cb.CombinatError):
        cb.degeneracy(2, 3)


@pytest.mark.parametrize("m,n", [(m, n) for n in range(5) for m in range(5)])
def test_class_counts(m, n):
    assert len(cb.enumerate_morphisms(m, n, "Λ")) == cb.lambda_count(m, n)
    assert len(cb.enumerate_morphisms(m, n, "PS")) == n ** m
    assert len(cb.enumerate_morphisms(m, n, "F")) == (n + 1) ** m
    assert len(cb.enumerate_morphisms(m, n, "Σ")) == (factorial(n) if m == n else 0)


def test_unknown_class():
    with pytest.raises(cb.CombinatError):
        cb.enumerate_morphisms(1, 1, "X")


@pytest.mark.parametrize("sizes", [(2, 1), (1, 1, 1), (2, 2), (0, 3), (1, 2, 1)])
def test_multi_shuffle_count(sizes):
    n = sum(sizes)
    expected = factorial(n)
    for s in sizes:
        expected //= factorial(s)
    shs = cb.multi_shuffles(sizes)
    assert len(shs) == expected
    assert all(cb.is_multi_shuffle(a, sizes) for a in shs)
    brute = [p for p in permutations(range(1, n + 1)) if cb.is_multi_shuffle(Inj(n, n, p), sizes)]
    assert sorted(a.table for a in shs) == sorted(brute)


@given(st.integers(0, 5).flatmap(lambda n: st.tuples(perms(n), st.integers(0, n))))
def test_shuffle_factorization(data):
    sigma, p = data
    n = sigma.n
    alpha, s1, s2 = cb.shuffle_factorize(sigma, p, n - p)
    assert cb.is_multi_shuffle(alpha, (s1.m, s2.m))
    assert cb.block_sum(s1, s2).compose(alpha.inverse()) == sigma


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(
    st.permutations(list(range(1, n + 2))).map(lambda t: Inj(n, n + 1, t[:n])),
    st.lists(st.integers(0, 3), min_size=2, max_size=2))))
def test_multi_factorize(data):
    lam, sizes = data
    total = lam.n
    blocks = [sizes[0], max(0, total - sizes[0])] if sizes[0] <= total else [total, 0]
    alpha, parts = cb.multi_factorize(lam, blocks)
    assert cb.is_multi_shuffle(alpha, [p.m for p in parts])
    assert cb.block_sum_many(parts).compose(alpha.inverse()) == lam


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(perms(k), st.lists(st.integers(0, 2), min_size=k, max_size=k))))
def test_block_permutation_moves_blocks(data):
    tau, sizes = data
    bp = cb.block_permutation(tau, sizes)
    starts = [sum(sizes[:a]) for a in range(len(sizes))]
    new_sizes = cb.permute_sizes(tau, sizes)
    new_starts = [sum(new_sizes[:b]) for b in range(len(sizes))]
    for a, j in enumerate(sizes):
        for t in range(1, j + 1):
            assert bp(starts[a] + t) == new_starts[tau(a + 1) - 1] + t


@given(st.integers(0, 5).flatmap(perms))
def test_adjacent_word_roundtrip(sigma):
    assert cb.from_word(sigma.n, cb.adjacent_word(sigma)) == sigma


@given(st.integers(0, 4).flatmap(lambda n: st.integers(0, n).flatmap(
    lambda m: st.permutations(list(range(1, n + 1))).map(lambda t: Inj(m, n, t[:m])))))
def test_standard_factor(lam):
    pi = cb.standard_factor(lam)
    assert pi.compose(cb.inclusion(lam.m, lam.n)) == lam


def test_compositions():
    assert cb.compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert cb.compositions(0, 0) == [()]
    assert len(cb.compositions(3, 3)) == comb(5, 2)
    assert len(cb.weak_compositions_upto(2, 2)) == 6


def test_fibers_and_ps():
    f = cb.BasedMap(3, 2, [2, 0, 2])
    assert f.fiber(2) == (1, 3) and not f.is_ps()
    assert all(g.is_ps() for g in cb.enumerate_morphisms(2, 2, "PS"))


def test_based_map_composition_sends_base_to_base():
    for f, g in product(cb.enumerate_morphisms(2, 2, "F"), repeat=2):
        h = g.compose(f)
        for a in range(1, 3):
            assert h(a) == g(f(a))
