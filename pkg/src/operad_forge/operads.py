"""Operads over finite sets in classical form (γ, ι, η) and as monoids for ⊙.

Conventions.  For c ∈ C(n) and a based injection λ : m → n, ``C.act(λ)(c)`` is
the operation whose input a is input λ(a) of c, the inputs outside the image
being fed the base point η ∈ C(0).  Structure maps take an element
``(c, c_1, ..., c_k)`` of C(k) ⊗ C(j_1) ⊗ ... ⊗ C(j_k) to C(j_1 + ... + j_k),
with the inputs of c_i occupying the i-th consecutive block.

The axioms checked by ``validate_operad`` are, for c ∈ C(k), e_i ∈ C(j_i):

* unit:           γ(ι; e) = e  and  γ(c; ι, ..., ι) = c
* equivariance 1: γ(c·τ; e_1..e_k) = γ(c; τ_*(e_1..e_k))·σ_τ(j_1..j_k)
* equivariance 2: γ(c; e_1·τ_1, ..., e_k·τ_k) = γ(c; e)·(τ_1 ⊕ ... ⊕ τ_k)
* associativity:  γ(γ(c; e); f) = γ(c; γ(e_1; f-block 1), ..., γ(e_k; f-block k))
* coincidence:    C(σ_i) = γ(-; ι, .., η, .., ι) with η in slot i

where x·σ stands for ``act(σ)(x)``, τ_* places entry a at position τ(a) and
σ_τ(J) is the block permutation.
"""

from __future__ import annotations

import random
from itertools import permutations, product
from math import prod
from typing import Callable, Iterable, Sequence

from . import combinat as cb
from . import ground as gd
from . import products as pr
from . import seq as sq
from .combinat import Inj
from .ground import FINSET, BasedObject, GroundObject
from .seq import LamSeq, Report, SeqMorphism

DEFAULT_BUDGET = 20000


class OperadError(ValueError):
    pass


class Operad:
    """A Λ-sequence C with unit ι ∈ C(1) and structure maps γ (FINSET)."""

    def __init__(self, C: LamSeq, unit, gamma: Callable | dict, name: str = "operad"):
        if C.tag is not FINSET:
            raise OperadError("operads are implemented over FINSET; linearize afterwards")
        if C.N >= 1 and unit not in C.levels[1]:
            raise OperadError("unit is not an element of C(1)")
        self.C = C
        self.unit = unit
        self.name = name
        if isinstance(gamma, dict):
            tables = {key: dict(t) for key, t in gamma.items()}
            self.tables = tables

            def fn(c, cs, J):
                key = (len(cs), tuple(J))
                try:
                    return tables[key][(c,) + tuple(cs)]
                except KeyError:
                    raise OperadError(f"missing γ entry for arities {key}") from None
            self._gamma = fn
        else:
            self.tables = None
            self._gamma = gamma
        self._overrides: dict = {}

    @property
    def N(self) -> int:
        return self.C.N

    @property
    def eta(self):
        return self.C.base_point

    @property
    def is_unital(self) -> bool:
        return self.C.is_unital

    def gamma(self, c, cs: Sequence, J: Sequence[int]):
        """γ(c; c_1, ..., c_k) with c_i ∈ C(J_i)."""
        cs, J = tuple(cs), tuple(J)
        if self._overrides:
            hit = self._overrides.get((len(cs), J, (c,) + cs))
            if hit is not None:
                return hit
        return self._gamma(c, cs, J)

    def gamma_keys(self) -> list:
        """(k, J) with k ≤ N and ΣJ ≤ N, k-major then lexicographic in J."""
        out = []
        for k in range(self.N + 1):
            for J in cb.weak_compositions_upto(self.N, k):
                out.append((k, J))
        return out

    def gamma_domain(self, k: int, J: Sequence[int]) -> GroundObject:
        return gd.tensor_many([self.C.levels[k]] + [self.C.levels[j] for j in J])

    def gamma_morphism(self, k: int, J: Sequence[int]):
        src = self.gamma_domain(k, J)
        tgt = self.C.levels[sum(J)]
        return gd.from_function(src, tgt, lambda t: self.gamma(t[0], t[1:], J))

    def gamma_table(self, k: int, J: Sequence[int]) -> dict:
        return {t: self.gamma(t[0], t[1:], J) for t in self.gamma_domain(k, J).labels}

    def with_gamma_entry(self, c, cs: Sequence, J: Sequence[int], value) -> "Operad":
        """Copy with a single γ value replaced (used to build mutation fixtures)."""
        out = Operad.__new__(Operad)
        out.__dict__.update(self.__dict__)
        out._overrides = dict(self._overrides)
        out._overrides[(len(cs), tuple(J), (c,) + tuple(cs))] = value
        return out

    def with_seq(self, C: LamSeq) -> "Operad":
        out = Operad.__new__(Operad)
        out.__dict__.update(self.__dict__)
        out.C = C
        return out

    def __repr__(self) -> str:
        return f"Operad({self.name}, N={self.N}, sizes={self.C.sizes()})"


# Λ-structure from γ


def derived_degeneracy(O: Operad, k: int, i: int, c):
    """γ(c; ι, ..., η, ..., ι) with η in slot i."""
    args = [O.unit] * k
    args[i - 1] = O.eta
    J = [1] * k
    J[i - 1] = 0
    return O.gamma(c, args, J)


def derive_injections(O: Operad) -> LamSeq:
    """The Λ-sequence whose degeneracies come from γ, ι and η."""
    C = O.C
    degs = {}
    for k in range(1, O.N + 1):
        for i in range(1, k + 1):
            degs[(k, i)] = gd.from_function(C.levels[k], C.levels[k - 1],
                                            lambda c, k=k, i=i: derived_degeneracy(O, k, i, c))
    return LamSeq(C.tag, C.N, C.levels, C.swaps, degs, C.base)


# validation


def _instances(lists: Sequence[Sequence], budget: int | None, rng: random.Random):
    total = prod(len(x) for x in lists)
    if budget is None or total <= budget:
        yield from product(*lists)
        return
    for _ in range(budget):
        yield tuple(rng.choice(x) for x in lists)


def validate_operad(O: Operad, budget: int | None = DEFAULT_BUDGET) -> Report:
    """Check unit, equivariance, associativity and the degeneracy coincidence.

    Every family of instances of a fixed shape is checked exhaustively when
    it has at most ``budget`` members and on a seeded sample otherwise; the
    report notes which shapes were sampled.
    """
    rep = Report(f"operad {O.name}")
    C, N = O.C, O.N
    rep.merge(sq.validate(C))
    if not rep.ok:
        return rep
    rng = random.Random(0)
    L = [list(C.levels[n].labels) for n in range(N + 1)]
    sampled = set()

    def inst(lists, shape):
        if budget is not None and prod(len(x) for x in lists) > budget:
            sampled.add(shape)
        return _instances(lists, budget, rng)

    def fail_cap() -> bool:
        return len(rep.failures) > 50

    # coincidence of the stored Λ-structure with the one derived from γ
    for k in range(1, N + 1):
        for i in range(1, k + 1):
            for c in L[k]:
                got, want = C.degs[(k, i)](c), derived_degeneracy(O, k, i, c)
                rep.check(got == want, "degeneracy coincidence", (f"k={k}", f"σ_{i}", f"c={gd.fmt_label(c)}"),
                          f"stored {gd.fmt_label(got)} vs derived {gd.fmt_label(want)}")
    # unit laws
    if N >= 1:
        for j in range(N + 1):
            for e in L[j]:
                rep.check(O.gamma(O.unit, (e,), (j,)) == e, "left unit", (f"j={j}", f"e={gd.fmt_label(e)}"))
        for k in range(N + 1):
            for c in L[k]:
                rep.check(O.gamma(c, (O.unit,) * k, (1,) * k) == c, "right unit", (f"k={k}", f"c={gd.fmt_label(c)}"))
    for k, J in O.gamma_keys():
        n = sum(J)
        if k >= 2:
            for tau in cb.enumerate_morphisms(k, k, "Σ"):
                B = cb.block_permutation(tau, J)
                fB = C.act_perm(B)
                for t in inst([L[k]] + [L[j] for j in J], ("eq1", k, J)):
                    c, es = t[0], t[1:]
                    lhs = O.gamma(C.act_perm(tau)(c), es, J)
                    rhs = fB(O.gamma(c, cb.permute_entries(tau, es), cb.permute_sizes(tau, J)))
                    if not rep.check(lhs == rhs, "equivariance (outer)", (f"k={k}", f"J={J}", f"τ={list(tau.table)}",
                                                                          f"args={gd.fmt_label(t)}")) and fail_cap():
                        return rep
        for taus in product(*[cb.enumerate_morphisms(j, j, "Σ") for j in J]):
            if all(t == cb.identity(t.n) for t in taus):
                continue
            S = cb.block_sum_many(taus) if taus else cb.identity(0)
            fS = C.act_perm(S)
            acts = [C.act_perm(t) for t in taus]
            for t in inst([L[k]] + [L[j] for j in J], ("eq2", k, J)):
                c, es = t[0], t[1:]
                lhs = O.gamma(c, tuple(a(e) for a, e in zip(acts, es)), J)
                rhs = fS(O.gamma(c, es, J))
                if not rep.check(lhs == rhs, "equivariance (inner)", (f"k={k}", f"J={J}",
                                                                      f"τ={[list(x.table) for x in taus]}",
                                                                      f"args={gd.fmt_label(t)}")) and fail_cap():
                    return rep
        for I in cb.weak_compositions_upto(N, n):
            lists = [L[k]] + [L[j] for j in J] + [L[i] for i in I]
            for t in inst(lists, ("assoc", k, J, I)):
                c, es, fs = t[0], t[1: 1 + k], t[1 + k:]
                lhs = O.gamma(O.gamma(c, es, J), fs, I)
                inner, sizes, pos = [], [], 0
                for j, e in zip(J, es):
                    inner.append(O.gamma(e, fs[pos: pos + j], I[pos: pos + j]))
                    sizes.append(sum(I[pos: pos + j]))
                    pos += j
                rhs = O.gamma(c, inner, sizes)
                if not rep.check(lhs == rhs, "associativity", (f"k={k}", f"J={J}", f"I={I}",
                                                               f"args={gd.fmt_label(t)}"),
                                 f"{gd.fmt_label(lhs)} vs {gd.fmt_label(rhs)}") and fail_cap():
                    return rep
    if sampled:
        rep.notes.append(f"{len(sampled)} instance families sampled with budget {budget}")
    return rep


def operads_equal(A: Operad, B: Operad) -> Report:
    """Equality of sequences, units, base points and every γ value in truncation."""
    rep = Report(f"operad equality {A.name} / {B.name}")
    rep.check(A.C.levels == B.C.levels, "levels", ())
    if not rep.ok:
        return rep
    rep.check(A.C.swaps == B.C.swaps, "transposition tables", ())
    rep.check(A.C.degs == B.C.degs, "degeneracy tables", ())
    rep.check(A.C.base == B.C.base, "base map", ())
    rep.check(A.unit == B.unit, "unit", ())
    for k, J in A.gamma_keys():
        for t in A.gamma_domain(k, J).labels:
            c, es = t[0], t[1:]
            rep.checked += 1
            if A.gamma(c, es, J) != B.gamma(c, es, J):
                rep.fail("γ value", (f"k={k}", f"J={J}", gd.fmt_label(t)))
                if len(rep.failures) > 20:
                    return rep
    return rep


# monoids in (Λ-sequences, ⊙, I_1)


class MonoidSeq:
    """A Λ-sequence C with μ : C ⊙ C → C and η : I_1 → C.

    ``mu_raw`` evaluates μ on any raw representative (k, c, x) of C ⊙ C.
    ``product``/``mu`` hold the tabulated form when materialized.
    """

    def __init__(self, C: LamSeq, mu_raw: Callable, eta: SeqMorphism | tuple, product: pr.KellySeq | None = None,
                 mu: SeqMorphism | None = None):
        self.C = C
        self.mu_raw = mu_raw
        self.product = product
        self.mu = mu
        self.eta0, self.eta1 = eta if isinstance(eta, tuple) else (eta[0].data[0], eta[1].data[0])

    @property
    def N(self) -> int:
        return self.C.N

    def apply_mu(self, raw):
        if self.mu is not None:
            return self.mu[sum(raw[2][0])](self.product.normal_form(raw))
        return self.mu_raw(raw)

    def eta_morphism(self) -> SeqMorphism:
        I1 = sq.I1(FINSET, self.N)
        maps = [gd.GroundMorphism(I1.levels[n], self.C.levels[n],
                                  [self.eta0] if n == 0 else ([self.eta1] if n == 1 else []))
                for n in range(self.N + 1)]
        return SeqMorphism(I1, self.C, maps)

    def with_mu_entry(self, n: int, x, value) -> "MonoidSeq":
        """Copy with one tabulated μ value replaced (mutation fixtures)."""
        if self.mu is None:
            raise OperadError("monoid is not materialized")
        maps = list(self.mu.maps)
        maps[n] = maps[n].with_entry(x, value)
        return MonoidSeq(self.C, self.mu_raw, (self.eta0, self.eta1), self.product,
                         SeqMorphism(self.product, self.C, maps))

    def materialize(self) -> "MonoidSeq":
        if self.mu is not None:
            return self
        K = pr.kelly(self.C, self.C, "lambda_closed")
        maps = [gd.from_function(K.levels[n], self.C.levels[n], self.mu_raw) for n in range(self.N + 1)]
        return MonoidSeq(self.C, self.mu_raw, (self.eta0, self.eta1), K, SeqMorphism(K, self.C, maps))


_IDENT = [tuple(range(1, n + 1)) for n in range(sq.MAX_N + 1)]


def operad_mu(O: Operad) -> Callable:
    """μ(k, c, (J, es, α)) = C(α⁻¹)(γ(c; es))."""
    C = O.C

    def mu(raw):
        k, c, (J, es, a) = raw
        n = sum(J)
        value = O.gamma(c, es, J)
        if a == _IDENT[n]:
            return value
        return C.act_perm(Inj(n, n, a).inverse())(value)
    return mu


def to_monoid(O: Operad, materialize: bool = True, check: bool = False) -> MonoidSeq:
    """The monoid (C, μ, η) of an operad; μ is assembled from γ on canonical forms."""
    if check:
        rep = validate_operad(O)
        if not rep.ok:
            raise OperadError(f"operad does not validate:\n{rep}")
    M = MonoidSeq(O.C, operad_mu(O), (O.eta, O.unit))
    return M.materialize() if materialize else M


def from_monoid(M: MonoidSeq, name: str = "from-monoid") -> Operad:
    """γ as μ restricted to the identity-coset components."""
    def gamma(c, es, J):
        n = sum(J)
        return M.apply_mu((len(es), c, (tuple(J), tuple(es), tuple(range(1, n + 1)))))
    if M.C.base is None or M.C.base_point != M.eta0:
        raise OperadError("η at level 0 must be the base map of C")
    return Operad(M.C, M.eta1, gamma, name)


def _identity_coset_raws(C: LamSeq) -> Iterable:
    N = C.N
    for k in range(N + 1):
        for J in cb.weak_compositions_upto(N, k):
            n = sum(J)
            a = tuple(range(1, n + 1))
            for c in C.levels[k].labels:
                for es in product(*[C.levels[j].labels for j in J]):
                    yield (k, c, (J, es, a))


def monoids_equal(A: MonoidSeq, B: MonoidSeq) -> Report:
    """Equality of carriers, units and μ.

    Materialized monoids are compared on every canonical form.  Otherwise μ is
    compared on the identity-coset elements, which generate C ⊙ C under the
    Λ-action on which both μ are equivariant by construction.
    """
    rep = Report("monoid equality")
    rep.check(A.C.levels == B.C.levels and A.C.swaps == B.C.swaps and A.C.degs == B.C.degs, "carrier", ())
    rep.check((A.eta0, A.eta1) == (B.eta0, B.eta1), "unit", ())
    if A.mu is not None and B.mu is not None:
        for n in range(A.N + 1):
            rep.check(A.mu[n] == B.mu[n], "μ table", (f"level {n}",))
        return rep
    for raw in _identity_coset_raws(A.C):
        if not rep.check(A.apply_mu(raw) == B.apply_mu(raw), "μ value", (gd.fmt_label(raw),)) and len(rep.failures) > 20:
            break
    return rep


def validate_monoid(M: MonoidSeq) -> Report:
    """Naturality of μ, both unit laws and associativity on every canonical form."""
    M = M.materialize()
    C, N = M.C, M.N
    rep = Report("monoid")
    rep.merge(sq.validate(C))
    K = M.product
    sq.check_morphism(M.mu, rep)
    eta = M.eta_morphism()
    sq.check_morphism(eta, rep)
    if not rep.ok:
        return rep
    ident = sq.identity_morphism(C)
    I1 = eta.source
    # left unit: μ ∘ (η ⊙ id) = λ
    L = pr.kelly(I1, C)
    lu = pr.left_unitor(L)
    f = pr.kelly_mor(eta, ident, L, K)
    for n in range(N + 1):
        for x in L.levels[n].labels:
            rep.check(M.mu[n](f[n](x)) == lu[n](x), "left unit law", (f"level {n}", gd.fmt_label(x)))
    R = pr.kelly(C, I1)
    ru = pr.right_unitor(R)
    g = pr.kelly_mor(ident, eta, R, K)
    for n in range(N + 1):
        for x in R.levels[n].labels:
            rep.check(M.mu[n](g[n](x)) == ru[n](x), "right unit law", (f"level {n}", gd.fmt_label(x)))
    # associativity: μ ∘ (μ ⊙ id) = μ ∘ (id ⊙ μ) ∘ assoc
    KK = pr.kelly(K, C)
    CK = pr.kelly(C, K)
    a = pr.kelly_assoc(K, KK, K, CK)
    left = pr.kelly_mor(M.mu, ident, KK, K)
    right = pr.kelly_mor(ident, M.mu, CK, K)
    for n in range(N + 1):
        for x in KK.levels[n].labels:
            lhs = M.mu[n](left[n](x))
            rhs = M.mu[n](right[n](a[n](x)))
            if not rep.check(lhs == rhs, "associativity", (f"level {n}", gd.fmt_label(x))) and len(rep.failures) > 20:
                return rep
    return rep


# builtins


def _seq_from(N: int, levels: Sequence[Sequence], action: Callable, base) -> LamSeq:
    return sq.from_action(FINSET, N, [gd.finset(L) for L in levels], action, base)


def com(N: int = sq.DEFAULT_N) -> Operad:
    C = _seq_from(N, [["*"]] * (N + 1), lambda lam, x: x, "*")
    return Operad(C, "*", lambda c, cs, J: "*", "com")


def _ass_action(lam: Inj, w: tuple) -> tuple:
    inv = {lam(a): a for a in range(1, lam.m + 1)}
    return tuple(inv[x] for x in w if x in inv)


def _ass_gamma(w: tuple, vs: Sequence[tuple]) -> tuple:
    offs, s = [], 0
    for v in vs:
        offs.append(s)
        s += len(v)
    out: list = []
    for t in w:
        out.extend(offs[t - 1] + x for x in vs[t - 1])
    return tuple(out)


def ass(N: int = sq.DEFAULT_N) -> Operad:
    """C(n) = Σ_n as words; w stands for x_{w_1} ... x_{w_n}."""
    levels = [list(permutations(range(1, n + 1))) for n in range(N + 1)]
    C = _seq_from(N, levels, _ass_action, ())
    return Operad(C, (1,), lambda w, vs, J: _ass_gamma(w, vs), "ass")


def opposite_ass(N: int = sq.DEFAULT_N) -> Operad:
    """Ass with words read backwards: γ'(w; v) = rev γ(rev w; rev v_1, ..., rev v_k)."""
    O = ass(N)

    def gamma(w, vs, J):
        return _ass_gamma(w[::-1], [v[::-1] for v in vs])[::-1]
    return Operad(O.C, (1,), gamma, "ass-op")


def trivial(N: int = sq.DEFAULT_N) -> Operad:
    """The unit I_1 as an operad."""
    C = sq.I1(FINSET, N)
    return Operad(C, "*", lambda c, cs, J: "*", "trivial")


def end(X: BasedObject, N: int = sq.DEFAULT_N) -> Operad:
    """End_X with C(n) = Map(X^n, X) as output tuples over X^n in lexicographic order."""
    if X.tag is not FINSET:
        raise OperadError("endomorphism operads need finite hom-sets (FINSET)")
    pts = X.carrier.labels
    q = len(pts)
    idx = {x: i for i, x in enumerate(pts)}
    star = idx[X.point]
    levels = [list(product(pts, repeat=q ** n)) for n in range(N + 1)]

    block_codes: dict = {}

    def codes_for(J):
        out = block_codes.get(J)
        if out is None:
            out = []
            for xs in product(range(q), repeat=sum(J)):
                pos, row = 0, []
                for j in J:
                    row.append(_encode(xs[pos: pos + j], q))
                    pos += j
                out.append(tuple(row))
            block_codes[J] = out
        return out

    def action(lam: Inj, c):
        m, n = lam.m, lam.n
        out = []
        for xs in product(range(q), repeat=m):
            ys = [star] * n
            for a in range(m):
                ys[lam.table[a] - 1] = xs[a]
            out.append(c[_encode(ys, q)])
        return tuple(out)

    def gamma(c, cs, J):
        out = []
        for row in codes_for(tuple(J)):
            v = 0
            for e, code in zip(cs, row):
                v = v * q + idx[e[code]]
            out.append(c[v])
        return tuple(out)

    C = _seq_from(N, levels, action, (X.point,))
    unit = tuple(pts) if N >= 1 else None
    O = Operad(C, unit, gamma, f"end({','.join(gd.fmt_label(p) for p in pts)})")
    return O


def _encode(digits: Sequence[int], q: int) -> int:
    v = 0
    for d in digits:
        v = v * q + d
    return v


BUILTINS = {"com": com, "ass": ass, "trivial": trivial, "ass-op": opposite_ass}


def builtin(name: str, N: int = sq.DEFAULT_N, X: BasedObject | None = None) -> Operad:
    sq.check_level(N)
    if name == "end":
        if X is None:
            raise OperadError("end needs a based set X")
        return end(X, N)
    try:
        return BUILTINS[name](N)
    except KeyError:
        raise OperadError(f"unknown builtin {name}") from None


def algebra_on_level_zero(O: Operad):
    """The action γ : C(j) ⊗ C(0)^{⊗j} → C(0) making C(0) a C-algebra."""
    return lambda c, xs: O.gamma(c, xs, (0,) * len(xs))


def initial_algebra_map(O: Operad, theta: Callable, X: BasedObject) -> dict:
    """θ_0 : C(0) → X, c ↦ θ(c) on the arity-zero component."""
    return {c: theta(0, c, ()) for c in O.C.levels[0].labels}
