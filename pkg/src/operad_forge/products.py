"""Day convolution, Day powers, the Kelly product and the tensor D ⊗_Λ X^{⊗*}.

Elements of closed forms are nested label tuples:

* Day convolution, level n: ``(j, d, e, α)`` with d ∈ D(j), e ∈ E(n-j) and α
  the table of a (j, n-j)-shuffle.  It stands for the coend class of
  d ⊗ e ⊗ α⁻¹ with α⁻¹ ∈ Λ(n, j+k).
* Day power E^{⊠k}, level n: ``(J, es, α)`` with J a k-tuple of block sizes
  summing to n, es a tuple of elements e_i ∈ E(J_i) and α a multi-shuffle.
* Kelly product, level n: ``(k, d, x)`` with d ∈ D(k) and x a Day power label.
* D ⊗_Λ X^{⊗*}: ``(k, d, xs)`` with xs a k-tuple of points of X.

Naive variants compute the same coends literally, as coequalizers in the
ground category, and serve as oracles for the closed forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from . import combinat as cb
from . import ground as gd
from . import seq as sq
from .combinat import Inj
from .ground import FINSET, BasedObject, GroundMorphism, GroundObject
from .seq import LamSeq, SeqMorphism, TruncationError

ONE = Fraction(1)


class ProductError(ValueError):
    pass


def _same(D: LamSeq, E: LamSeq) -> None:
    if D.tag != E.tag:
        raise gd.TagMismatch(f"{D.tag.value} vs {E.tag.value}")
    if D.N != E.N:
        raise ProductError(f"truncation mismatch {D.N} vs {E.N}")


def _vals(f: GroundMorphism, x) -> list:
    if f.tag is FINSET:
        return [(f(x), ONE)]
    return list(f.vec(x).items())


def _out(tag, vec: dict):
    """Return a label for FINSET, the vector itself for FINVEC."""
    if tag is FINSET:
        if len(vec) != 1:
            raise ProductError("set-valued map produced a non-point")
        return next(iter(vec))
    return vec


def _base_vec(D: LamSeq) -> dict:
    return D.base.vec(gd.UNIT_LABEL[D.tag])


def _tensor_vals(choices: Sequence[list]) -> list:
    """All products of (label, coeff) choices as (tuple, coeff)."""
    out = [((), ONE)]
    for ch in choices:
        out = [(t + (x,), c * y) for t, c in out for x, y in ch]
    return out


# Day convolution, closed form


class DaySeq(LamSeq):
    """(D ⊠ E)(n) = ⊕_{j+k=n} D(j) ⊗ E(k) ⊗ Sh(j,k)."""

    D: LamSeq
    E: LamSeq

    def normal_form(self, raw: tuple):
        """Closed label (or vector) of a raw coend element (j1, j2, d, e, λ)."""
        j1, j2, d, e, lam = raw
        lam = Inj(len(lam), j1 + j2, lam)
        return _out(self.tag, _day_class(self.D, self.E, j1, j2, [(d, ONE)], [(e, ONE)], lam))


def _day_class(D: LamSeq, E: LamSeq, j1: int, j2: int, dv: list, ev: list, lam: Inj) -> dict:
    """Normal form of d ⊗ e ⊗ λ with λ : n → j1+j2, via the shuffle factorization."""
    alpha, t1, t2 = cb.shuffle_factorize(lam, j1, j2)
    fd, fe = D.act(t1), E.act(t2)
    out: dict = {}
    for d, c in dv:
        for d2, c2 in _vals(fd, d):
            for e, c3 in ev:
                for e2, c4 in _vals(fe, e):
                    key = (t1.m, d2, e2, alpha.table)
                    gd.vec_add(out, {key: c * c2 * c3 * c4})
    return out


def day_closed(D: LamSeq, E: LamSeq) -> DaySeq:
    _same(D, E)
    N, tag = D.N, D.tag
    levels = []
    for n in range(N + 1):
        labels = []
        for j in range(n + 1):
            sh = cb.shuffles(j, n - j)
            for d in D.levels[j].labels:
                for e in E.levels[n - j].labels:
                    labels.extend((j, d, e, a.table) for a in sh)
        levels.append(GroundObject(tag, labels))

    def action(lam: Inj, x):
        j, d, e, a = x
        alpha = Inj(lam.n, lam.n, a)
        return _out(tag, _day_class(D, E, j, lam.n - j, [(d, ONE)], [(e, ONE)], alpha.inverse().compose(lam)))

    base = None
    if D.base is not None and E.base is not None:
        v = {(0, d, e, ()): c1 * c2 for d, c1 in _base_vec(D).items() for e, c2 in _base_vec(E).items()}
        base = gd.from_vectors(gd.unit(tag), levels[0], lambda _: v)
    out = sq.from_action(tag, N, levels, action, base)
    out.__class__ = DaySeq
    out.D, out.E = D, E
    return out


# Day convolution, literal coend


class CoendSeq(LamSeq):
    """A Λ-sequence computed level by level as an explicit coequalizer."""

    raw_levels: list
    proj: list

    def classify(self, n: int, raw):
        return _out(self.tag, self.proj[n].vec(raw))


def _coend_seq(tag, N: int, raw_levels: list, relations: list, raw_action: Callable, raw_base) -> CoendSeq:
    quots, projs = [], []
    for n in range(N + 1):
        Q, pi = gd.coequalize_relations(raw_levels[n], relations[n])
        quots.append(Q)
        projs.append(pi)

    def action(lam: Inj, q):
        # quotient labels are raw labels: FINSET least representatives, FINVEC non-pivot basis labels
        img = raw_action(lam, q)
        return _out(tag, projs[lam.m].apply_vec(img))

    base = None
    if raw_base is not None:
        bv = raw_base
        base = gd.from_vectors(gd.unit(tag), quots[0], lambda _: projs[0].apply_vec(bv))
    out = sq.from_action(tag, N, quots, action, base)
    out.__class__ = CoendSeq
    out.raw_levels, out.proj = raw_levels, projs
    return out


def _generators(k: int) -> list:
    """Generating morphisms of Λ with target k: adjacent transpositions and ordered injections."""
    return [cb.transposition(k, i) for i in range(1, k)] + [cb.degeneracy(k, i) for i in range(1, k + 1)]


def day_naive(D: LamSeq, E: LamSeq) -> CoendSeq:
    """The coend ∫^{j1,j2} D(j1) ⊗ E(j2) ⊗ Λ(n, j1+j2) as a coequalizer.

    Relations come from the generating injections in each variable, which
    generate the same equivalence (resp. subspace) as all morphisms.
    """
    _same(D, E)
    N, tag = D.N, D.tag
    raw_levels, relations = [], []
    for n in range(N + 1):
        labels = []
        for j1 in range(N + 1):
            for j2 in range(N + 1):
                if j1 + j2 < n:
                    continue
                lams = cb.enumerate_morphisms(n, j1 + j2)
                for d in D.levels[j1].labels:
                    for e in E.levels[j2].labels:
                        labels.extend((j1, j2, d, e, l.table) for l in lams)
        raw = GroundObject(tag, labels)
        rels = []
        for j1 in range(N + 1):
            for j2 in range(N + 1):
                for a in _generators(j1):
                    fa = D.act(a)
                    ida = cb.identity(j2)
                    for mu in cb.enumerate_morphisms(n, a.m + j2):
                        lam = cb.block_sum(a, ida).compose(mu)
                        for d in D.levels[j1].labels:
                            for e in E.levels[j2].labels:
                                rhs = {(a.m, j2, d2, e, mu.table): c for d2, c in _vals(fa, d)}
                                rels.append(((j1, j2, d, e, lam.table), _out_rel(tag, rhs)))
                for b in _generators(j2):
                    fb = E.act(b)
                    idb = cb.identity(j1)
                    for mu in cb.enumerate_morphisms(n, j1 + b.m):
                        lam = cb.block_sum(idb, b).compose(mu)
                        for d in D.levels[j1].labels:
                            for e in E.levels[j2].labels:
                                rhs = {(j1, b.m, d, e2, mu.table): c for e2, c in _vals(fb, e)}
                                rels.append(((j1, j2, d, e, lam.table), _out_rel(tag, rhs)))
        raw_levels.append(raw)
        relations.append(rels)

    def raw_action(lam: Inj, q):
        j1, j2, d, e, t = q
        return {(j1, j2, d, e, Inj(len(t), j1 + j2, t).compose(lam).table): ONE}

    raw_base = None
    if D.base is not None and E.base is not None:
        raw_base = {(0, 0, d, e, ()): c1 * c2 for d, c1 in _base_vec(D).items() for e, c2 in _base_vec(E).items()}
    out = _coend_seq(tag, N, raw_levels, relations, raw_action, raw_base)
    out.D, out.E = D, E
    return out


def _out_rel(tag, vec: dict):
    return next(iter(vec)) if tag is FINSET else vec


def day(D: LamSeq, E: LamSeq, flavor: str = "closed") -> LamSeq:
    if flavor == "closed":
        return day_closed(D, E)
    if flavor == "naive":
        return day_naive(D, E)
    raise ProductError(f"unknown Day flavor {flavor}")


def iota_compare(D: LamSeq, E: LamSeq, closed: DaySeq | None = None, naive: CoendSeq | None = None):
    """The comparison ι from the closed form to the literal coend.

    Returns ``(ι, is_iso)``; ``is_iso`` also requires ι to be natural and its
    inverse, assembled from the shuffle factorization of raw elements, to be
    well defined on classes and two-sided inverse to ι.
    """
    closed = closed or day_closed(D, E)
    naive = naive or day_naive(D, E)
    maps = []
    for n in range(D.N + 1):
        def f(x, n=n):
            j, d, e, a = x
            inv = Inj(n, n, a).inverse()
            return naive.proj[n].vec((j, n - j, d, e, inv.table))
        maps.append(gd.from_vectors(closed.levels[n], naive.levels[n], f))
    iota = SeqMorphism(closed, naive, maps)
    ok = sq.check_morphism(iota).ok and iota.is_iso()
    if ok:
        inv = iota_inverse(closed, naive)
        ok = inv is not None and all(
            a.compose(b) == gd.identity(b.source) for a, b in zip(inv.maps, iota.maps)
        ) and all(b.compose(a) == gd.identity(a.source) for a, b in zip(inv.maps, iota.maps))
    return iota, ok


def iota_inverse(closed: DaySeq, naive: CoendSeq) -> SeqMorphism | None:
    """Inverse of ι from the shuffle factorization of every raw element, or None if ill defined."""
    maps = []
    for n in range(closed.N + 1):
        rho = gd.from_vectors(naive.raw_levels[n], closed.levels[n],
                              lambda r: _day_class(closed.D, closed.E, r[0], r[1], [(r[2], ONE)], [(r[3], ONE)],
                                                   Inj(len(r[4]), r[0] + r[1], r[4])))
        try:
            maps.append(gd.factor_through(naive.proj[n], rho))
        except gd.GroundError:
            return None
    return SeqMorphism(naive, closed, maps)


# Day powers


class PowerSeq(LamSeq):
    """E^{⊠k}(n) = ⊕_J (⊗_i E(J_i)) ⊗ (multi-shuffles of J)."""

    E: LamSeq
    k: int

    def normal_form(self, raw: tuple):
        J, es, lam = raw
        return _out(self.tag, power_class(self.E, J, [[(e, ONE)] for e in es], Inj(len(lam), sum(J), lam)))


def power_class(E: LamSeq, J: Sequence[int], es: Sequence[list], lam: Inj) -> dict:
    """Normal form of [e_1, ..., e_k ; λ] with λ : n → ΣJ, each e_i a list of (label, coeff)."""
    alpha, taus = cb.multi_factorize(lam, J)
    choices = []
    for t, ev in zip(taus, es):
        f = E.act(t)
        acc: dict = {}
        for e, c in ev:
            for e2, c2 in _vals(f, e):
                gd.vec_add(acc, {e2: c * c2})
        choices.append(list(acc.items()))
    newJ = tuple(t.m for t in taus)
    out: dict = {}
    for tup, c in _tensor_vals(choices):
        gd.vec_add(out, {(newJ, tup, alpha.table): c})
    return out


def day_power(E: LamSeq, k: int) -> PowerSeq:
    if k < 0:
        raise ProductError("negative power")
    N, tag = E.N, E.tag
    levels = []
    for n in range(N + 1):
        labels = []
        for J in cb.compositions(n, k):
            shs = cb.multi_shuffles(J)
            for es in product(*[E.levels[j].labels for j in J]):
                labels.extend((J, es, a.table) for a in shs)
        levels.append(GroundObject(tag, labels))

    def action(lam: Inj, x):
        J, es, a = x
        mu = Inj(lam.n, lam.n, a).inverse().compose(lam)
        return _out(tag, power_class(E, J, [[(e, ONE)] for e in es], mu))

    base = None
    if E.base is not None or k == 0:
        bv = list(_base_vec(E).items()) if k else []
        v = {((0,) * k, tup, ()): c for tup, c in _tensor_vals([bv] * k)}
        base = gd.from_vectors(gd.unit(tag), levels[0], lambda _: v)
    out = sq.from_action(tag, N, levels, action, base)
    out.__class__ = PowerSeq
    out.E, out.k = E, k
    return out


def power_covariant(E: LamSeq, lam: Inj, n: int, P_src: LamSeq | None = None, P_tgt: LamSeq | None = None):
    """λ_* : E^{⊠k'}(n) → E^{⊠k}(n) for λ : k' → k.

    Factor j goes to position λ(j); positions outside the image receive the
    base point of E(0); blocks are moved by the block permutation.
    """
    P_src = P_src or day_power(E, lam.m)
    P_tgt = P_tgt or day_power(E, lam.n)
    pi = cb.standard_factor(lam)
    bv = list(_base_vec(E).items()) if lam.n > lam.m else []

    def f(x):
        J, es, a = x
        J2 = tuple(J) + (0,) * (lam.n - lam.m)
        ev = [[(e, ONE)] for e in es] + [bv] * (lam.n - lam.m)
        Jp = cb.permute_sizes(pi, J2)
        evp = list(cb.permute_entries(pi, ev))
        mu = cb.block_permutation(pi, J2).compose(Inj(n, n, a).inverse())
        return power_class(E, Jp, evp, mu)

    return gd.from_vectors(P_src.levels[n], P_tgt.levels[n], f)


def naive_power(E: LamSeq, k: int) -> LamSeq:
    """Iterated literal convolution (((E ⊠ E) ⊠ E) ...), with E^{⊠0} = I_0."""
    if k == 0:
        return sq.I0(E.tag, E.N)
    out = E
    for _ in range(k - 1):
        out = day_naive(out, E)
    return out


def power_to_naive(E: LamSeq, k: int, P: PowerSeq, Q: LamSeq) -> SeqMorphism:
    """Comparison from the closed power to the iterated literal convolution."""
    maps = []
    for n in range(E.N + 1):
        def f(x, n=n):
            J, es, a = x
            inv = Inj(n, n, a).inverse()
            return _nested_class(Q, k, J, es, inv)
        maps.append(gd.from_vectors(P.levels[n], Q.levels[n], f))
    return SeqMorphism(P, Q, maps)


def _nested_class(Q: LamSeq, k: int, J, es, lam: Inj) -> dict:
    """Class of e_1 ⊗ ... ⊗ e_k ⊗ λ in the iterated coend Q = (..(E⊠E)..)⊠E."""
    if k == 0:
        return {gd.UNIT_LABEL[Q.tag]: ONE}
    if k == 1:
        n = lam.m
        return Q.act(lam).vec(es[0]) if n == J[0] else Q.act(lam).vec(es[0])
    inner = Q.D
    p = sum(J[:-1])
    ident = cb.identity(p)
    iv = _nested_class(inner, k - 1, J[:-1], es[:-1], ident)
    out: dict = {}
    for y, c in iv.items():
        gd.vec_add(out, Q.proj[lam.m].vec((p, J[-1], y, es[-1], lam.table)), c)
    return out


# Kelly product


class KellySeq(LamSeq):
    """(D ⊙ E)(n) = ∫^{k ∈ Λ} D(k) ⊗ E^{⊠k}(n)."""

    D: LamSeq
    E: LamSeq
    flavor: str
    powers: list
    approximate: bool
    proj: list | None = None
    raw_levels: list | None = None

    def normal_form(self, raw: tuple):
        if self.proj is not None:
            return _out(self.tag, self.proj[self._raw_level(raw)].vec(raw))
        return kelly_nf(self.D, self.E, raw, self.flavor)

    def _raw_level(self, raw) -> int:
        return sum(raw[2][0])


def _power_entry(x) -> tuple:
    return x


def kelly_nf(D: LamSeq, E: LamSeq, raw: tuple, flavor: str = "lambda_closed") -> tuple:
    """Canonical representative of (k, d, x) (FINSET).

    Blocks of size 0 holding the base point are removed against the
    degeneracies of D, then the least element of the Σ_k-orbit is chosen.
    """
    k, d, (J, es, a) = raw
    if flavor != "sigma":
        eta = E.base_point
        i = k
        while i >= 1:
            if J[i - 1] == 0 and es[i - 1] == eta:
                d = D.degs[(k, i)](d)
                J = J[: i - 1] + J[i:]
                es = es[: i - 1] + es[i:]
                k -= 1
            i -= 1
    if k <= 1:
        return (k, d, (J, es, a))
    best = None
    for tau_inv, J2, where, alpha, taus in _orbit_data(k, J, a):
        # (d, x) ~ (act(τ⁻¹) d, τ_* x)
        d2 = D.act_perm(tau_inv)(d)
        es3 = tuple(E.act_perm(t)(es[b]) for t, b in zip(taus, where))
        cand = (k, d2, (J2, es3, alpha))
        if best is None or gd.label_less(cand, best):
            best = cand
    return best


@lru_cache(maxsize=None)
def _orbit_data(k: int, J: tuple, a: tuple) -> tuple:
    """Per τ ∈ Σ_k: τ⁻¹, τ·J, source block of each new block, the new shuffle and block parts."""
    n = sum(J)
    ainv = Inj.fast(n, n, a).inverse()
    out = []
    for tau in cb.enumerate_morphisms(k, k, "Σ"):
        J2 = cb.permute_sizes(tau, J)
        where = cb.permute_entries(tau, tuple(range(k)))
        mu = cb.block_permutation(tau, J).compose(ainv)
        alpha, taus = cb.multi_factorize(mu, J2)
        out.append((tau.inverse(), J2, where, alpha.table, tuple(taus)))
    return tuple(out)


def _kelly_raw_labels(D: LamSeq, powers: list, n: int) -> list:
    labels = []
    for k in range(D.N + 1):
        for d in D.levels[k].labels:
            for x in powers[k].levels[n].labels:
                labels.append((k, d, x))
    return labels


def _approximate(D: LamSeq, E: LamSeq) -> bool:
    """True when D has data at the top level and E(0) has more than the base point."""
    if D.levels[D.N].size == 0:
        return False
    if E.base is None:
        return E.levels[0].size > 0
    return E.levels[0].size > 1


def kelly(D: LamSeq, E: LamSeq, flavor: str = "lambda_closed") -> KellySeq:
    """Kelly product in one of the flavors 'sigma', 'lambda_closed', 'lambda_naive'.

    Operator levels k ≤ N of D are used; the result is flagged approximate
    when higher levels of D could contribute.
    """
    _same(D, E)
    if flavor not in ("sigma", "lambda_closed", "lambda_naive"):
        raise ProductError(f"unknown Kelly flavor {flavor}")
    if flavor != "sigma" and (D.base is None or E.base is None):
        raise ProductError("Λ-flavored Kelly products need base maps on both factors")
    N, tag = D.N, D.tag
    powers = [day_power(E, k) for k in range(N + 1)]
    base_raw = None
    if D.base is not None:
        base_raw = {(0, d, ((), (), ())): c for d, c in _base_vec(D).items()}
    if tag is FINSET and flavor != "lambda_naive":
        levels = []
        for n in range(N + 1):
            reps = {kelly_nf(D, E, r, flavor) for r in _kelly_raw_labels(D, powers, n)}
            levels.append(GroundObject(tag, gd.sort_labels(reps)))

        def action(lam: Inj, x):
            k, d, y = x
            y2 = powers[k].act(lam)(y)
            return kelly_nf(D, E, (k, d, y2), flavor)

        base = None
        if base_raw is not None:
            b = kelly_nf(D, E, next(iter(base_raw)), flavor)
            base = gd.GroundMorphism(gd.unit(tag), levels[0], [b])
        out = sq.from_action(tag, N, levels, action, base)
        out.__class__ = KellySeq
        out.proj = out.raw_levels = None
    else:
        raw_levels, relations = [], []
        for n in range(N + 1):
            raw = GroundObject(tag, _kelly_raw_labels(D, powers, n))
            raw_levels.append(raw)
            relations.append(_kelly_relations(D, E, powers, n, flavor))

        def raw_action(lam: Inj, q):
            k, d, y = q
            return {(k, d, y2): c for y2, c in _vals(powers[k].act(lam), y)}

        out = _coend_seq(tag, N, raw_levels, relations, raw_action, base_raw)
        out.__class__ = KellySeq
    out.D, out.E, out.flavor, out.powers = D, E, flavor, powers
    out.approximate = _approximate(D, E)
    return out


def _kelly_relations(D: LamSeq, E: LamSeq, powers: list, n: int, flavor: str) -> list:
    rels = []
    N = D.N
    for k in range(N + 1):
        if flavor == "lambda_naive":
            gens = [l for kp in range(k + 1) for l in cb.enumerate_morphisms(kp, k)]
        elif flavor == "lambda_closed":
            gens = _generators(k)
        else:
            gens = [cb.transposition(k, i) for i in range(1, k)]
        for lam in gens:
            fd = D.act(lam)
            push = power_covariant(E, lam, n, powers[lam.m], powers[lam.n])
            for d in D.levels[k].labels:
                for x in powers[lam.m].levels[n].labels:
                    lhs = {(lam.m, d2, x): c for d2, c in _vals(fd, d)}
                    rhs = {(k, d, y): c for y, c in _vals(push, x)}
                    if D.tag is FINSET:
                        rels.append((next(iter(lhs)), next(iter(rhs))))
                    else:
                        rels.append((lhs, rhs))
    return rels


def kelly_mor(f: SeqMorphism, g: SeqMorphism, src: KellySeq, tgt: KellySeq) -> SeqMorphism:
    """f ⊙ g on canonical forms (FINSET)."""
    maps = []
    for n in range(src.N + 1):
        def h(x):
            k, d, (J, es, a) = x
            y = (J, tuple(g[j](e) for j, e in zip(J, es)), a)
            return tgt.normal_form((k, f[k](d), y))
        maps.append(gd.from_function(src.levels[n], tgt.levels[n], h))
    return SeqMorphism(src, tgt, maps)


def power_mor(g: SeqMorphism, k: int, src: PowerSeq, tgt: PowerSeq) -> SeqMorphism:
    maps = []
    for n in range(src.N + 1):
        maps.append(gd.from_function(src.levels[n], tgt.levels[n],
                                     lambda x: (x[0], tuple(g[j](e) for j, e in zip(x[0], x[1])), x[2])))
    return SeqMorphism(src, tgt, maps)


def left_unitor(K: KellySeq) -> SeqMorphism:
    """I_1 ⊙ D → D."""
    D = K.E
    maps = []
    for n in range(K.N + 1):
        def h(x, n=n):
            k, _, (J, es, a) = x
            if k == 0:
                return D.base_point
            return D.act_perm(Inj(n, n, a).inverse())(es[0])
        maps.append(gd.from_function(K.levels[n], D.levels[n], h))
    return SeqMorphism(K, D, maps)


def right_unitor(K: KellySeq) -> SeqMorphism:
    """D ⊙ I_1 → D, through I_1^{⊠k}(n) ≅ Λ(n, k)."""
    D = K.D
    maps = []
    for n in range(K.N + 1):
        def h(x, n=n):
            k, d, y = x
            return D.act(unit_power_injection(y, n))(d)
        maps.append(gd.from_function(K.levels[n], D.levels[n], h))
    return SeqMorphism(K, D, maps)


def unit_power_injection(y, n: int) -> Inj:
    """The injection n → k named by an element (J, es, α) of I_1^{⊠k}(n)."""
    J, _, a = y
    slot_block = []
    for b, j in enumerate(J, 1):
        slot_block.extend([b] * j)
    inv = Inj(n, n, a).inverse()
    return Inj(n, len(J), [slot_block[inv(t) - 1] for t in range(1, n + 1)])


def kelly_assoc(DE: KellySeq, left: KellySeq, EF: KellySeq, right: KellySeq) -> SeqMorphism:
    """(D⊙E)⊙F → D⊙(E⊙F), with DE = D⊙E, left = DE⊙F, EF = E⊙F, right = D⊙EF."""
    maps = []
    for n in range(left.N + 1):
        def h(x, n=n):
            k, y, (L, fs, b) = x
            r, d, (J, es, a) = y
            # move α to the outer factor: (act(α⁻¹) y0, z) ~ (y0, (α⁻¹)_* z)
            ainv = Inj(k, k, a).inverse()
            L2 = cb.permute_sizes(ainv, L)
            fs2 = cb.permute_entries(ainv, fs)
            lam = cb.block_permutation(ainv, L).compose(Inj(n, n, b).inverse())
            us, M, pos = [], [], 0
            for t in range(r):
                g = L2[pos: pos + J[t]]
                z = (tuple(g), tuple(fs2[pos: pos + J[t]]), tuple(range(1, sum(g) + 1)))
                us.append(EF.normal_form((J[t], es[t], z)))
                M.append(sum(g))
                pos += J[t]
            w = _power_class_set(right.powers[r].E, tuple(M), us, lam)
            return right.normal_form((r, d, w))
        maps.append(gd.from_function(left.levels[n], right.levels[n], h))
    return SeqMorphism(left, right, maps)


def _power_class_set(E: LamSeq, J, es, lam: Inj):
    return next(iter(power_class(E, J, [[(e, ONE)] for e in es], lam)))


# D ⊗_Λ X^{⊗*}


class LambdaTensor(BasedObject):
    """D̄X = D ⊗_Λ X^{⊗*} with its canonical forms (k, d, xs)."""

    def __init__(self, carrier, base, D: LamSeq, X: BasedObject, flavor: str, proj=None, raw=None):
        super().__init__(carrier, base)
        self.D, self.X, self.flavor = D, X, flavor
        self.proj, self.raw = proj, raw

    def normal_form(self, raw: tuple):
        if self.proj is not None:
            return _out(self.tag, self.proj.vec(raw))
        return tensor_nf(self.D, self.X, raw)

    @property
    def approximate(self) -> bool:
        return self.D.levels[self.D.N].size > 0 and self.X.size > 1


def tensor_nf(D: LamSeq, X: BasedObject, raw: tuple) -> tuple:
    """Canonical form of (k, d, xs): drop base points through degeneracies, then Σ_k-orbit minimum."""
    k, d, xs = raw
    pt = X.point
    i = k
    while i >= 1:
        if xs[i - 1] == pt:
            d = D.degs[(k, i)](d)
            xs = xs[: i - 1] + xs[i:]
            k -= 1
        i -= 1
    if k <= 1:
        return (k, d, tuple(xs))
    best = None
    for tau in cb.enumerate_morphisms(k, k, "Σ"):
        cand = (k, D.act_perm(tau.inverse())(d), cb.permute_entries(tau, xs))
        if best is None or gd.label_less(cand, best):
            best = cand
    return best


def _tensor_raw(D: LamSeq, X: BasedObject) -> list:
    out = []
    for k in range(D.N + 1):
        for d in D.levels[k].labels:
            for xs in product(X.carrier.labels, repeat=k):
                out.append((k, d, xs))
    return out


def tensor_lambda(D: LamSeq, X: BasedObject, flavor: str = "closed") -> LambdaTensor:
    """D̄X as a based object; 'closed' uses canonical forms, 'naive' the literal coequalizer."""
    if D.tag != X.tag:
        raise gd.TagMismatch("sequence and object tags differ")
    if D.base is None:
        raise ProductError("D̄X needs a base map on D")
    tag = D.tag
    raw = _tensor_raw(D, X)
    if flavor == "closed" and tag is FINSET:
        reps = gd.sort_labels({tensor_nf(D, X, r) for r in raw})
        C = GroundObject(tag, reps)
        b = tensor_nf(D, X, (0, D.base_point, ()))
        return LambdaTensor(C, gd.GroundMorphism(gd.unit(tag), C, [b]), D, X, flavor)
    if flavor not in ("closed", "naive"):
        raise ProductError(f"unknown flavor {flavor}")
    R = GroundObject(tag, raw)
    xb = list(X.base.vec(gd.UNIT_LABEL[tag]).items())
    rels = []
    for k in range(D.N + 1):
        lams = [l for kp in range(k + 1) for l in cb.enumerate_morphisms(kp, k)] if flavor == "naive" else _generators(k)
        for lam in lams:
            fd = D.act(lam)
            for d in D.levels[k].labels:
                for xs in product(X.carrier.labels, repeat=lam.m):
                    lhs = {(lam.m, d2, xs): c for d2, c in _vals(fd, d)}
                    rhs = {(k, d, tup): c for tup, c in _push_points(lam, xs, xb)}
                    rels.append((_out_rel(tag, lhs), _out_rel(tag, rhs)) if tag is FINSET else (lhs, rhs))
    Q, pi = gd.coequalize_relations(R, rels)
    bv = {(0, d, ()): c for d, c in _base_vec(D).items()}
    base = gd.from_vectors(gd.unit(tag), Q, lambda _: pi.apply_vec(bv))
    return LambdaTensor(Q, base, D, X, flavor, proj=pi, raw=R)


def _push_points(lam: Inj, xs: tuple, xb: list) -> list:
    """λ_* on X^{⊗m}: point j to slot λ(j), base point elsewhere."""
    choices = [None] * lam.n
    for j, x in enumerate(xs, 1):
        choices[lam(j) - 1] = [(x, ONE)]
    choices = [c if c is not None else xb for c in choices]
    return _tensor_vals(choices)


def tensor_lambda_map(T: LambdaTensor, T2: LambdaTensor, f: GroundMorphism | None = None,
                      phi: SeqMorphism | None = None) -> GroundMorphism:
    """Map D̄X → D'̄X' induced by a based map f : X → X' and/or φ : D → D' (FINSET)."""
    def h(z):
        k, d, xs = z
        d2 = phi[k](d) if phi is not None else d
        xs2 = tuple(f(x) for x in xs) if f is not None else xs
        return T2.normal_form((k, d2, xs2))
    return gd.from_function(T.carrier, T2.carrier, h)


# structural isomorphisms


def distribution_iso(DD: LamSeq, K: KellySeq, KD: KellySeq, KD2: KellySeq, target: DaySeq) -> SeqMorphism:
    """(D ⊠ D') ⊙ E → (D ⊙ E) ⊠ (D' ⊙ E), where K = DD ⊙ E and DD = D ⊠ D'."""
    maps = []
    for n in range(K.N + 1):
        def h(x, n=n):
            k, (j, d, d2, a), (J, es, b) = x
            ainv = Inj(k, k, a).inverse()
            J2 = cb.permute_sizes(ainv, J)
            es2 = cb.permute_entries(ainv, es)
            lam = cb.block_permutation(ainv, J).compose(Inj(n, n, b).inverse())
            p, q = sum(J2[:j]), sum(J2[j:])
            gam, l1, l2 = cb.shuffle_factorize(lam, p, q)
            x1 = _power_class_set(K.E, J2[:j], es2[:j], l1)
            x2 = _power_class_set(K.E, J2[j:], es2[j:], l2)
            u1 = KD.normal_form((j, d, x1))
            u2 = KD2.normal_form((k - j, d2, x2))
            return (p, u1, u2, gam.table)
        maps.append(gd.from_function(K.levels[n], target.levels[n], h))
    return SeqMorphism(K, target, maps)


def tensor_distribution(T: LambdaTensor, T1: LambdaTensor, T2: LambdaTensor) -> GroundMorphism:
    """(D ⊠ D') ⊗_Λ X^{⊗*} → (D̄X) ⊗ (D̄'X)."""
    def h(z):
        k, (j, d, d2, a), xs = z
        ainv = Inj(k, k, a).inverse()
        xs2 = cb.permute_entries(ainv, xs)
        return (T1.normal_form((j, d, xs2[:j])), T2.normal_form((k - j, d2, xs2[j:])))
    return gd.from_function(T.carrier, gd.tensor(T1.carrier, T2.carrier), h)


def iodot_iso(K: KellySeq, T: LambdaTensor) -> GroundMorphism:
    """Level 0 of D ⊙ i0X → D̄X (all higher levels of both sides are empty)."""
    def h(z):
        k, d, (J, xs, a) = z
        return T.normal_form((k, d, tuple(xs)))
    return gd.from_function(K.levels[0], T.carrier, h)


def i1_monoidal(K: KellySeq, XY: LamSeq) -> SeqMorphism:
    """i1X ⊙ i1Y → i1(X ⊗ Y)."""
    Y = K.E
    maps = []
    for n in range(K.N + 1):
        def h(z, n=n):
            k, x, (J, ys, a) = z
            return (x, ys[0] if k == 1 else Y.base_point)
        maps.append(gd.from_function(K.levels[n], XY.levels[n], h))
    return SeqMorphism(K, XY, maps)


def relabel_seq(D: LamSeq, fn: Callable) -> LamSeq:
    """Copy of a FINSET sequence with every label x renamed fn(n, x)."""
    levels = [GroundObject(D.tag, [fn(n, x) for x in L.labels]) for n, L in enumerate(D.levels)]
    back = [{fn(n, x): x for x in L.labels} for n, L in enumerate(D.levels)]

    def action(lam, y):
        return fn(lam.m, D.act(lam)(back[lam.n][y]))

    base = fn(0, D.base_point) if D.base is not None else None
    return sq.from_action(D.tag, D.N, levels, action, base)


def levelwise_iso(phi: SeqMorphism) -> bool:
    return phi.is_iso() and sq.check_morphism(phi).ok


def normal_form(seq_or_obj, raw):
    """Canonical form of a raw element in any product built by this module."""
    nf = getattr(seq_or_obj, "normal_form", None)
    if nf is None:
        raise ProductError("object has no canonical forms")
    try:
        return nf(raw)
    except (ValueError, IndexError, TypeError, KeyError) as exc:
        raise ProductError(f"malformed representative {raw!r}: {exc}") from exc


__all__ = [
    "DaySeq", "CoendSeq", "PowerSeq", "KellySeq", "LambdaTensor", "TruncationError",
    "day", "day_closed", "day_naive", "iota_compare", "iota_inverse", "day_power", "power_covariant",
    "naive_power", "power_to_naive", "kelly", "kelly_nf", "kelly_mor", "power_mor", "left_unitor",
    "right_unitor", "kelly_assoc", "tensor_lambda", "tensor_nf", "tensor_lambda_map", "distribution_iso",
    "tensor_distribution", "iodot_iso", "i1_monoidal", "normal_form", "power_class", "levelwise_iso",
]
