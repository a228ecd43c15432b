import random
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as orc
from operad_forge import combinat as cb
from operad_forge import ground as gd
from operad_forge import operads as op
from operad_forge import products as pr
from operad_forge import seq as sq


def builtins(N):
    return {"com": op.com(N).C, "ass": op.ass(N).C, "i1": sq.I1(N=N)}


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def fubini(n):
    return sum(factorial(k) * _stirling2(n, k) for k in range(n + 1))


def _stirling2(n, k):
    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)


# Day convolution


@pytest.mark.parametrize("a,b", [("com", "com"), ("ass", "ass"), ("i1", "i1"), ("com", "ass"), ("i1", "ass")])
def test_day_closed_naive_and_literal_coend(a, b):
    S = builtins(3)
    D, E = S[a], S[b]
    closed, naive = pr.day_closed(D, E), pr.day_naive(D, E)
    expected = [orc.day_count(D, E, n) for n in range(4)]
    assert closed.sizes() == naive.sizes() == expected
    assert expected == [orc.day_formula(D, E, n) for n in range(4)]
    _, ok = pr.iota_compare(D, E, closed, naive)
    assert ok
    assert sq.validate(closed).ok


def test_day_frozen_values():
    S = builtins(3)
    assert pr.day(S["ass"], S["ass"]).sizes() == [1, 2, 6, 24]
    assert pr.day(S["com"], S["com"]).sizes() == [1, 2, 4, 8]
    assert pr.day(S["i1"], S["i1"]).sizes() == [1, 2, 2, 0]


def test_day_unknown_flavor():
    with pytest.raises(pr.ProductError):
        pr.day(sq.I0(), sq.I0(), "fast")


@given(st.integers(0, 10_000))
def test_day_random_pairs(seed):
    rng = random.Random(seed)
    D, E = orc.random_lamseq(rng), orc.random_lamseq(rng)
    closed = pr.day_closed(D, E)
    assert closed.sizes() == [orc.day_formula(D, E, n) for n in range(4)]
    assert sq.validate(closed).ok


def test_day_unit_is_I0():
    D = op.ass(3).C
    assert pr.day(sq.I0(N=3), D).sizes() == D.sizes()
    assert pr.day(D, sq.I0(N=3)).sizes() == D.sizes()


# powers


@pytest.mark.parametrize("name", ["com", "ass", "i1"])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_power_against_literal_coend(name, k):
    E = builtins(3)[name]
    P = pr.day_power(E, k)
    assert P.sizes() == [orc.power_count(E, k, n) for n in range(4)]
    if name == "ass":
        assert P.sizes() == [orc.ass_power_count(k, n) for n in range(4)]
    if name == "com":
        assert P.sizes() == [k ** n for n in range(4)]


def test_power_comparison_iso():
    E = op.ass(3).C
    for k in (2, 3):
        P, Q = pr.day_power(E, k), pr.naive_power(E, k)
        assert pr.levelwise_iso(pr.power_to_naive(E, k, P, Q))


def test_negative_power():
    with pytest.raises(pr.ProductError):
        pr.day_power(sq.I1(), -1)


def test_power_covariant_functorial():
    E = op.ass(2).C
    P2 = pr.day_power(E, 2)
    swap = cb.perm([2, 1])
    for n in range(3):
        f = pr.power_covariant(E, swap, n, P2, P2)
        assert f.compose(f) == gd.identity(P2.levels[n])


# Kelly product


@pytest.mark.parametrize("a,b", [(a, b) for a in ("com", "ass", "i1") for b in ("com", "ass", "i1")])
def test_kelly_closed_equals_naive(a, b):
    S = builtins(3)
    kc, kn = pr.kelly(S[a], S[b]), pr.kelly(S[a], S[b], "lambda_naive")
    assert kc.levels == kn.levels
    assert sq.validate(kc).ok


def test_kelly_against_counting_formulas():
    S = builtins(3)
    assert pr.kelly(S["com"], S["com"]).sizes() == [bell(n) for n in range(4)]
    assert pr.kelly(S["com"], S["ass"]).sizes() == [fubini(n) for n in range(4)]
    assert pr.kelly(S["ass"], S["com"]).sizes() == [fubini(n) for n in range(4)]
    assert pr.kelly(S["ass"], S["ass"]).sizes() == [1] + [factorial(n) * 2 ** (n - 1) for n in range(1, 4)]


def test_kelly_sigma_flavor_is_larger():
    S = builtins(2)
    ks = pr.kelly(S["com"], S["com"], "sigma")
    assert ks.sizes() == [3, 2, 3]


def test_kelly_needs_base_maps():
    D = op.com(2).C
    bare = sq.LamSeq(D.tag, D.N, D.levels, D.swaps, D.degs, None)
    with pytest.raises(pr.ProductError):
        pr.kelly(bare, D)
    with pytest.raises(pr.ProductError):
        pr.kelly(D, D, "other")


@pytest.mark.parametrize("name", ["com", "ass", "i1"])
def test_unitors(name):
    D = builtins(2)[name]
    I1 = sq.I1(N=2)
    for phi in (pr.left_unitor(pr.kelly(I1, D)), pr.right_unitor(pr.kelly(D, I1))):
        assert phi.is_iso() and sq.check_morphism(phi).ok


def test_associator_bijective():
    S = builtins(2)
    for D, E, F in [(S["com"], S["ass"], S["com"]), (S["ass"], S["ass"], S["ass"])]:
        DE, EF = pr.kelly(D, E), pr.kelly(E, F)
        a = pr.kelly_assoc(DE, pr.kelly(DE, F), EF, pr.kelly(D, EF))
        assert a.is_iso() and sq.check_morphism(a).ok


def test_distribution_iso():
    S = builtins(2)
    D, D2, E = S["com"], S["ass"], S["ass"]
    DD = pr.day(D, D2)
    KD, KD2 = pr.kelly(D, E), pr.kelly(D2, E)
    phi = pr.distribution_iso(DD, pr.kelly(DD, E), KD, KD2, pr.day(KD, KD2))
    assert phi.is_iso() and sq.check_morphism(phi).ok


# D ⊗_Λ X^{⊗*}


@pytest.mark.parametrize("name,points,size", [("com", "a", 4), ("com", "ab", 10), ("ass", "a", 4), ("ass", "ab", 15)])
def test_lambda_tensor(name, points, size):
    D = op.builtin(name, 3).C
    X = gd.based_set(["*"] + list(points))
    closed, naive = pr.tensor_lambda(D, X), pr.tensor_lambda(D, X, "naive")
    # monomials (com) or words (ass) of length ≤ 3 in the non-base points
    q = len(points)
    brute = comb(q + 3, 3) if name == "com" else sum(q ** k for k in range(4))
    assert closed.size == naive.size == brute == size
    assert closed.carrier == naive.carrier


def test_tensor_distribution():
    X = gd.based_set(["*", "a"])
    D, D2 = op.com(2).C, op.ass(2).C
    T = pr.tensor_lambda(pr.day(D, D2), X)
    f = pr.tensor_distribution(T, pr.tensor_lambda(D, X), pr.tensor_lambda(D2, X))
    # above the truncation the right side has terms of total weight > N
    assert len(set(f.data)) == f.source.size


def test_normal_form_errors():
    with pytest.raises(pr.ProductError):
        pr.normal_form(object(), ())
