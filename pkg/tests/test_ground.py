from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from operad_forge import ground as gd
from operad_forge.ground import FINSET, FINVEC


def test_label_order_ints_strings_tuples():
    labels = [(1,), "b", 3, "a", (0, "x"), 1]
    assert gd.sort_labels(labels) == (1, 3, "a", "b", (0, "x"), (1,))


def test_boolean_labels_rejected():
    with pytest.raises(gd.GroundError):
        gd.label_key(True)


def test_duplicate_labels_rejected():
    with pytest.raises(gd.GroundError):
        gd.finset(["a", "a"])


def test_unit_and_empty():
    assert gd.unit(FINSET).labels == ("*",)
    assert gd.unit(FINVEC).labels == ("1",)
    assert gd.empty(FINSET).size == 0


def test_morphism_table_checked():
    A, B = gd.finset([1, 2]), gd.finset(["x"])
    with pytest.raises(gd.GroundError):
        gd.GroundMorphism(A, B, ["y", "x"])
    with pytest.raises(gd.GroundError):
        gd.GroundMorphism(A, B, ["x"])


def test_tag_mismatch():
    with pytest.raises(gd.TagMismatch):
        gd.tensor(gd.finset([1]), gd.finvec([1]))


def test_tensor_sizes_and_unitors():
    A, B = gd.finset([1, 2]), gd.finset("abc")
    assert gd.tensor(A, B).size == 6
    assert gd.left_unitor(A).is_iso() and gd.right_unitor(A).is_iso()
    assert gd.associator(A, B, A).is_iso()
    br = gd.braiding(A, B)
    assert gd.braiding(B, A).compose(br) == gd.identity(gd.tensor(A, B))
    assert gd.tensor_many([], FINSET) == gd.unit(FINSET)


def test_finvec_tensor_of_maps_is_kronecker():
    A = gd.finvec(["a", "b"])
    f = gd.from_matrix(A, A, [[1, 2], [3, 4]])
    g = gd.from_matrix(A, A, [[0, 1], [1, 0]])
    fg = gd.tensor(f, g)
    expected = sympy.kronecker_product(sympy.Matrix([[1, 2], [3, 4]]), sympy.Matrix([[0, 1], [1, 0]]))
    assert sympy.Matrix(fg.matrix()) == expected


def test_coproduct_with_initial_is_identity():
    A = gd.finset([1, 2])
    S, i, j = gd.coproduct(A, gd.empty(FINSET))
    assert S == A and i == gd.identity(A)


def test_direct_sum_and_copair():
    A, B = gd.finset([1]), gd.finset([1, 2])
    S, injs = gd.direct_sum([A, B], FINSET)
    T = gd.finset(["t"])
    h = gd.copair(S, [gd.from_function(A, T, lambda x: "t"), gd.from_function(B, T, lambda x: "t")], T)
    assert S.size == 3 and h.compose(injs[1]) == gd.from_function(B, T, lambda x: "t")


def _components(n, pairs):
    adj = {i: set() for i in range(n)}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), 0
    for s in range(n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(adj[x] - seen)
    return comps


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=10))))
def test_finset_coequalizer_counts_components(data):
    n, pairs = data
    T = gd.finset(range(n))
    Q, pi = gd.coequalize_relations(T, pairs)
    assert Q.size == _components(n, pairs)
    for a, b in pairs:
        assert pi(a) == pi(b)
    assert all(pi(q) == q for q in Q.labels)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), max_size=5))
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert gd.rank(rows) == expected


@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=4))
def test_quotient_space_dimension(rels):
    T = gd.finvec(["a", "b", "c"])
    vecs = [{k: Fraction(c) for k, c in zip(T.labels, r) if c} for r in rels]
    Q, pi = gd.quotient_space(T, vecs)
    assert Q.size == 3 - sympy.Matrix(rels).rank()
    for v in vecs:
        assert pi.apply_vec(v) == {}


def test_factor_through():
    T = gd.finset([1, 2, 3])
    Q, pi = gd.coequalize_relations(T, [(1, 2)])
    h = gd.from_function(T, gd.finset(["x", "y"]), lambda t: "x" if t < 3 else "y")
    u = gd.factor_through(pi, h)
    assert u.compose(pi) == h
    bad = gd.from_function(T, gd.finset(["x", "y"]), lambda t: "x" if t == 1 else "y")
    with pytest.raises(gd.GroundError):
        gd.factor_through(pi, bad)


def test_inverse_of_finvec_iso():
    A = gd.finvec(["a", "b"])
    f = gd.from_matrix(A, A, [[2, 1], [1, 1]])
    assert f.is_iso()
    assert f.inverse().compose(f) == gd.identity(A)


def test_with_entry_changes_one_value():
    A = gd.finset([1, 2])
    f = gd.identity(A)
    g = f.with_entry(1, 2)
    assert g(1) == 2 and g(2) == 2 and f(1) == 1


def test_linearize_based_point():
    X = gd.based_set(["*", "a"])
    L = gd.linearize_based(X)
    assert L.tag is FINVEC and L.point == (("*", Fraction(1)),)
