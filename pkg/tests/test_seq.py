import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as orc
from operad_forge import combinat as cb
from operad_forge import ground as gd
from operad_forge import operads as op
from operad_forge import seq as sq
from operad_forge.ground import FINSET


@pytest.mark.parametrize("name", ["com", "ass", "trivial", "ass-op"])
def test_builtin_sequences_validate(name):
    assert sq.validate(op.builtin(name, 3).C).ok


def test_units():
    I0, I1 = sq.I0(N=3), sq.I1(N=3)
    assert I0.sizes() == [1, 0, 0, 0] and I1.sizes() == [1, 1, 0, 0]
    assert I0.is_unital and I1.is_unital
    assert sq.validate(I0).ok and sq.validate(I1).ok


def test_embed_and_p0():
    X = gd.based_set(["*", "a", "b"])
    D = sq.embed(X, "i1", 2)
    assert D.sizes() == [3, 3, 0]
    assert sq.p0(D) == X
    with pytest.raises(sq.SequenceError):
        sq.embed(X, "i7", 2)


def test_truncation_bounds():
    D = op.com(2).C
    with pytest.raises(sq.TruncationError):
        D.level(3)
    with pytest.raises(sq.TruncationError):
        D.act(cb.identity(3))
    with pytest.raises(sq.TruncationError):
        sq.check_level(sq.MAX_N + 1)


def test_missing_generator_rejected():
    D = op.ass(2).C
    swaps = dict(D.swaps)
    del swaps[(2, 1)]
    with pytest.raises(sq.SequenceError):
        sq.LamSeq(FINSET, 2, D.levels, swaps, D.degs, D.base)


def test_broken_involution_detected():
    D = op.ass(3).C
    s = D.swaps[(3, 1)]
    bad = D.replace(swaps={(3, 1): s.with_entry((1, 2, 3), (1, 2, 3))})
    rep = sq.validate(bad)
    assert not rep.ok
    assert rep.failures[0].where


def test_incoherent_degeneracy_detected():
    D = op.ass(3).C
    bad = D.replace(degs={(3, 3): D.degs[(3, 3)].with_entry((1, 2, 3), (2, 1))})
    rep = sq.validate(bad)
    assert not rep.ok and {f.relation for f in rep.failures} & {"degeneracy coherence", "functoriality"}


def test_action_of_composite_is_composite_of_actions():
    D = op.ass(3).C
    for g in cb.enumerate_morphisms(2, 3, "Λ"):
        for f in cb.enumerate_morphisms(1, 2, "Λ"):
            assert D.act(g.compose(f)) == D.act(f).compose(D.act(g))


def test_ass_action_deletes_and_renames():
    D = op.ass(3).C
    lam = cb.Inj(2, 3, [3, 1])
    assert D.act(lam)((2, 3, 1)) == (1, 2)


def test_enumerate_morphisms_into_com():
    # Λ-sequence maps I1 → Com under I: the level-0 and level-1 components are forced
    assert len(sq.enumerate_morphisms(sq.I1(N=2), op.com(2).C)) == 1


def test_identity_morphism_natural():
    D = op.ass(3).C
    assert sq.check_morphism(sq.identity_morphism(D)).ok


@given(st.integers(0, 10_000))
def test_random_sequences_validate(seed):
    D = orc.random_lamseq(random.Random(seed))
    assert sq.validate(D).ok
    assert all(L.size <= 2 for L in D.levels)


def test_report_rendering():
    rep = sq.Report("demo")
    rep.check(False, "rule", ("level 2", "i=1"), "detail")
    assert not rep.ok
    assert rep.lines()[1] == "  rule failed at [level 2, i=1]: detail"
    assert rep.to_dict()["failures"][0]["where"] == ["level 2", "i=1"]
