from itertools import product

import pytest

from operad_forge import ground as gd
from operad_forge import operads as op
from operad_forge import products as pr
from operad_forge import seq as sq

X2 = gd.based_set(["*", "a"])


@pytest.mark.parametrize("name", ["com", "ass", "trivial", "ass-op"])
def test_builtins_validate_exhaustively(name):
    rep = op.validate_operad(op.builtin(name, 3), budget=None)
    assert rep.ok, rep.lines()
    assert not rep.notes


def test_end_validates():
    assert op.validate_operad(op.end(X2, 2), budget=None).ok


def test_end_sizes():
    q = 2
    assert op.end(X2, 3).C.sizes() == [q ** (q ** n) for n in range(4)]
    X3 = gd.based_set(["*", "a", "b"])
    assert op.end(X3, 1).C.sizes() == [3, 27]


def _as_function(c, q, n):
    """Decode an End element into a dict on n-tuples of point indices."""
    return {xs: c[i] for i, xs in enumerate(product(range(q), repeat=n))}


def test_end_gamma_is_composition_of_functions():
    O = op.end(X2, 3)
    pts = X2.carrier.labels
    idx = {x: i for i, x in enumerate(pts)}
    for J in [(1, 2), (0, 3), (2, 0, 1)]:
        k = len(J)
        for c, *es in product(*[O.C.levels[j].labels for j in (k, *J)]):
            got = O.gamma(c, es, J)
            fc = _as_function(c, 2, k)
            fs = [_as_function(e, 2, j) for e, j in zip(es, J)]
            want = []
            for xs in product(range(2), repeat=sum(J)):
                pos, args = 0, []
                for f, j in zip(fs, J):
                    args.append(idx[f[xs[pos: pos + j]]])
                    pos += j
                want.append(fc[tuple(args)])
            assert got == tuple(want)


def test_ass_gamma_substitutes_words():
    O = op.ass(3)
    assert O.gamma((2, 1), [(1,), (2, 1)], (1, 2)) == (3, 2, 1)
    assert O.gamma((1, 2), [(), (1, 2)], (0, 2)) == (1, 2)


def test_reversed_concatenation_agrees_with_ass():
    # word reversal is an automorphism of Ass, so the transported γ coincides
    A, B = op.ass(3), op.opposite_ass(3)
    assert op.validate_operad(B, budget=None).ok
    assert op.operads_equal(A, B).ok


def test_monoid_roundtrip():
    for O in (op.com(3), op.ass(3), op.trivial(3)):
        M = op.to_monoid(O)
        assert op.validate_monoid(M).ok
        O2 = op.from_monoid(M)
        assert op.operads_equal(O2, O).ok
        assert op.monoids_equal(op.to_monoid(O2, materialize=False), op.to_monoid(O, materialize=False)).ok


def test_mu_domain_is_kelly_square():
    M = op.to_monoid(op.ass(2))
    assert M.product.levels == pr.kelly(M.C, M.C).levels


def test_degeneracies_are_determined_by_gamma():
    for O in (op.com(3), op.ass(3), op.end(X2, 2)):
        assert op.derive_injections(O).degs == O.C.degs


def test_mutated_gamma_detected():
    O = op.ass(3)
    bad = O.with_gamma_entry((1, 2), [(1,), (1, 2)], (1, 2), (3, 1, 2))
    rep = op.validate_operad(bad, budget=None)
    assert not rep.ok
    assert all(f.where for f in rep.failures)
    assert not op.operads_equal(bad, O).ok


def test_mutated_mu_detected():
    M = op.to_monoid(op.ass(2))
    x = M.product.levels[2].labels[0]
    other = next(v for v in M.C.levels[2].labels if v != M.mu[2](x))
    rep = op.validate_monoid(M.with_mu_entry(2, x, other))
    assert not rep.ok and rep.failures[0].where


def test_unit_outside_level_one():
    with pytest.raises(op.OperadError):
        op.Operad(op.com(2).C, "x", lambda c, cs, J: "*")


def test_dict_gamma_and_missing_entry():
    C = op.com(1).C
    O = op.Operad(C, "*", {(1, (1,)): {("*", "*"): "*"}})
    assert O.gamma("*", ["*"], [1]) == "*"
    with pytest.raises(op.OperadError):
        O.gamma("*", [], [])


def test_builtin_errors():
    with pytest.raises(op.OperadError):
        op.builtin("lie")
    with pytest.raises(op.OperadError):
        op.builtin("end")
    with pytest.raises(op.OperadError):
        op.end(gd.linearize_based(X2))


def test_level_zero_algebra_and_initial_map():
    O = op.end(X2, 2)
    act = op.algebra_on_level_zero(O)
    c = O.C.levels[2].labels[5]
    assert act(c, [("a",), ("*",)]) in O.C.levels[0].labels
    m = op.initial_algebra_map(O, lambda n, c, xs: c[0], X2)
    assert m == {("*",): "*", ("a",): "a"}


def test_sampled_validation_is_noted():
    rep = op.validate_operad(op.ass(3), budget=3)
    assert rep.ok and rep.notes


def test_linear_sequences_rejected():
    L = sq.embed(gd.linearize_based(X2), "i1", 1)
    with pytest.raises(op.OperadError):
        op.Operad(L, L.levels[1].labels[0], lambda c, cs, J: c)


def test_end_of_a_point_is_com():
    E = op.end(gd.based_set(["*"]), 3)
    assert E.C.sizes() == [1, 1, 1, 1]
    for k, J in E.gamma_keys():
        for t in E.gamma_domain(k, J).labels:
            assert E.gamma(t[0], t[1:], J) == ("*",)
    assert op.validate_operad(E, budget=None).ok
