from itertools import combinations, permutations, product
from math import comb, factorial

import pytest

from operad_forge import algebras as al
from operad_forge import combinat as cb
from operad_forge import envelope as ev
from operad_forge import operads as op
from operad_forge import seq as sq


@pytest.fixture(scope="module")
def com_env():
    return ev.envelope(op.com(3))


@pytest.fixture(scope="module")
def ass_env():
    return ev.envelope(op.ass(3))


@pytest.fixture(scope="module")
def ass_ops():
    return ev.cat_of_operators(op.ass(3))


def ass_hom_count(m, n, based):
    """Σ_φ Π_j |φ⁻¹(j)|!: orderings of the points of m distributed over n lists."""
    if not based:
        return factorial(m) * comb(m + n - 1, n - 1) if n else int(m == 0)
    return sum(comb(m, i) * ass_hom_count(i, n, False) for i in range(m + 1))


# sizes


def test_com_hom_sizes(com_env):
    ops = ev.cat_of_operators(op.com(3))
    for m, n in product(range(4), repeat=2):
        assert com_env.hom[(m, n)].size == n ** m
        assert ops.hom[(m, n)].size == (n + 1) ** m


def test_ass_hom_sizes(ass_env, ass_ops):
    for m, n in product(range(4), repeat=2):
        assert ass_env.hom[(m, n)].size == ass_hom_count(m, n, False)
        assert ass_ops.hom[(m, n)].size == ass_hom_count(m, n, True)
    assert ass_env.hom[(3, 3)].size == 60 and ass_ops.hom[(3, 3)].size == 106


# category and monoidal structure


def test_com_envelope_axioms(com_env):
    assert ev.validate_category(com_env).ok
    assert ev.validate_pairing(com_env).ok
    assert ev.check_envelope(com_env).ok


def test_ass_envelope_axioms_sampled(ass_env):
    assert ev.validate_category(ass_env, budget=400).ok
    assert ev.validate_pairing(ass_env, budget=400).ok
    rep = ev.check_envelope(ass_env)
    assert rep.ok, rep.lines()


def test_trivial_envelope_is_the_injection_category():
    E = ev.envelope(op.trivial(3))
    for m, n in product(range(4), repeat=2):
        assert E.hom[(m, n)].size == len(cb.enumerate_morphisms(m, n, "Λ"))
    assert ev.validate_category(E).ok


def test_hom_into_one_is_the_operad(ass_env):
    C = op.ass(3).C
    for n in range(4):
        assert ass_env.hom[(n, 1)].size == C.levels[n].size


def test_permutations_compose_covariantly(ass_env):
    O = ass_env.operad
    for s, t in product(permutations([1, 2, 3]), repeat=2):
        sigma, tau = cb.perm(s), cb.perm(t)
        lhs = ass_env.compose(ev.envelope_perm(O, tau), ev.envelope_perm(O, sigma), 3, 3, 3)
        assert lhs == ev.envelope_perm(O, tau.compose(sigma))


def test_mutated_composition_detected():
    E = ev.envelope(op.ass(2))
    g, f = E.hom[(2, 2)].labels[1], E.hom[(2, 2)].labels[0]
    right = E.compose(g, f, 2, 2, 2)
    wrong = next(h for h in E.hom[(2, 2)].labels if h != right)
    rep = ev.validate_category(E.with_compose_entry(2, 2, 2, g, f, wrong))
    assert not rep.ok and rep.failures[0].where


# ω and the category of operators


@pytest.mark.parametrize("name", ["com", "ass"])
def test_omega(name):
    E = ev.envelope(op.builtin(name, 3))
    for m, n in product(range(4), repeat=2):
        rep = ev.check_omega(E, m, n)
        assert rep.ok, rep.lines()


def _sigma_oracle(phi, js):
    block = [i for j in js for i in range(1, len(phi) + 1) if phi[i - 1] == j]
    natural = sorted(block)
    return tuple(block.index(x) + 1 for x in natural)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(4)])
def test_order_conversion_against_labelled_sets(m, n):
    for phi in product(range(n + 1), repeat=m):
        for r in range(n + 1):
            for js in combinations(range(1, n + 1), r):
                for order in permutations(js):
                    assert ev.order_conversion(phi, order).table == _sigma_oracle(phi, order)


def _ass_compose_oracle(g, f):
    """Compose by concatenating linear orders on labelled fibres."""
    psi, ds = g
    phi, cs = f
    fib = {j: [i for i in range(1, len(phi) + 1) if phi[i - 1] == j] for j in range(1, len(cs) + 1)}
    orders = {j: [fib[j][t - 1] for t in cs[j - 1]] for j in fib}
    out = []
    for k, d in enumerate(ds, 1):
        js = [j for j in range(1, len(psi) + 1) if psi[j - 1] == k]
        seq = [x for t in d for x in orders[js[t - 1]]]
        natural = sorted(seq)
        out.append(tuple(natural.index(x) + 1 for x in seq))
    comp = tuple(0 if y == 0 else psi[y - 1] for y in phi)
    return comp, tuple(out)


def test_operators_composition_against_linear_orders(ass_ops):
    for m, n, p in product(range(4), repeat=3):
        for g in ass_ops.hom[(n, p)].labels:
            for f in ass_ops.hom[(m, n)].labels:
                assert ass_ops.compose(g, f, m, n, p) == _ass_compose_oracle(g, f)


def test_operators_category(ass_ops):
    assert ev.validate_category(ass_ops, budget=500).ok
    assert ev.validate_category(ev.cat_of_operators(op.com(3))).ok


def test_envelope_is_subcategory_of_operators(ass_env, ass_ops):
    assert ev.check_ps_restriction(ass_env, ass_ops).ok
    assert ev.check_ps_restriction(ev.envelope(op.com(3)), ev.cat_of_operators(op.com(3))).ok


def test_operators_truncation_bound():
    with pytest.raises(sq.TruncationError):
        ev.cat_of_operators(op.com(2), 3)


# endomorphism operads of finite sets


def _union_gamma(B, f, gs, J):
    """f ∘ (g_1 ⊔ ... ⊔ g_k) on elements (copy, point) encoded as copy·B + point."""
    out, pos = [], 0
    for i, (g, j) in enumerate(zip(gs, J)):
        out.extend(i * B + v for v in g)
        pos += j
    return tuple(f[x] for x in out)


def test_hw_union_sizes_and_gamma():
    W = ev.FinSetMonoidal("union")
    H = ev.HW(W, 2)
    for A, B in product((1, 2), repeat=2):
        assert H.seq(A, B).sizes() == [B ** (A * k) for k in range(3)]
    _, O = ev.hw_operad(W, 2, 2, 2)
    assert op.validate_operad(O, budget=None).ok
    for k, J in O.gamma_keys():
        for t in O.gamma_domain(k, J).labels:
            assert O.gamma(t[0], t[1:], J) == _union_gamma(2, t[0], t[1:], J)


def test_hw_on_a_point_is_com():
    _, O = ev.hw_operad(ev.FinSetMonoidal("union"), 1, 1, 2)
    C = op.com(2)
    point = {n: O.C.levels[n].labels[0] for n in range(3)}

    def gamma(c, cs, J):
        return "*" if O.gamma(point[len(cs)], [point[j] for j in J], J) == point[sum(J)] else None
    assert O.C.sizes() == [1, 1, 1]
    assert op.operads_equal(op.Operad(C.C, "*", gamma), C).ok


def test_hw_modules():
    H = ev.HW(ev.FinSetMonoidal("union"), 2)
    for A, B in product((1, 2), repeat=2):
        assert al.validate_module(H.right_module(A, B)).ok
        assert al.validate_module(H.left_module(A, B)).ok


def test_hw_needs_single_point_unit_maps():
    with pytest.raises(ev.EnvelopeError, match="B = 2"):
        ev.hw_operad(ev.FinSetMonoidal("product"), 2, 2, 2)
    with pytest.raises(ev.EnvelopeError, match="B = 2"):
        ev.hw_operad(ev.FinSetMonoidal("product"), 2, 1, 2)
    _, O = ev.hw_operad(ev.FinSetMonoidal("product"), 1, 1, 2)
    assert O.C.sizes() == [1, 1, 1] and op.validate_operad(O).ok


def test_unknown_monoidal_structure():
    with pytest.raises(ev.EnvelopeError):
        ev.FinSetMonoidal("smash")
