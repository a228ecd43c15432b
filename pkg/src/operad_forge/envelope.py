"""The symmetric monoidal envelope of an operad and related categories.

Hom labels of the envelope are the canonical labels (J, es, α) of the Day
power C^{⊠n}(m): output j is the operation e_j, block position u of the
concatenation e_1 ⊕ ... ⊕ e_n is fed by input α(u).  The PS-indexed form
stores (φ, es) instead, with e_j reading the fiber φ⁻¹(j) in natural order.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Callable, Sequence

from . import combinat as cb
from . import ground as gd
from . import products as pr
from . import seq as sq
from .algebras import ModuleStructure
from .combinat import Inj
from .ground import FINSET, GroundMorphism, GroundObject
from .operads import Operad
from .seq import LamSeq, Report

ONE = pr.ONE


class EnvelopeError(ValueError):
    pass


def _starts(sizes: Sequence[int]) -> list:
    out, s = [], 0
    for j in sizes:
        out.append(s)
        s += j
    return out


def _single(vec: dict):
    (x,) = vec
    return x


class EnrichedCat:
    """A FINSET-enriched category on objects 0..N given by hom objects and a composition rule.

    ``compose(g, f)`` is g ∘ f for f ∈ hom(m, n), g ∈ hom(n, p).  Composition
    tables are filled lazily and can be exported.
    """

    def __init__(self, N: int, hom: dict, compose: Callable, identity: dict, pair: Callable | None = None,
                 symmetry: Callable | None = None, name: str = "category"):
        self.N = N
        self.hom = hom
        self._compose = compose
        self.identity = identity
        self.pair = pair
        self.symmetry = symmetry
        self.name = name
        self._tables: dict = {}
        self.overrides: dict = {}

    @property
    def objects(self) -> range:
        return range(self.N + 1)

    def compose(self, g, f, m: int, n: int, p: int):
        return self.compose_table(m, n, p)[(g, f)]

    def compose_table(self, m: int, n: int, p: int) -> dict:
        t = self._tables.get((m, n, p))
        if t is None:
            t = {(g, f): self._compose(g, f, m, n, p)
                 for g in self.hom[(n, p)].labels for f in self.hom[(m, n)].labels}
            for key, v in self.overrides.items():
                if key[0] == (m, n, p):
                    t[key[1]] = v
            self._tables[(m, n, p)] = t
        return t

    def with_compose_entry(self, m: int, n: int, p: int, g, f, value) -> "EnrichedCat":
        out = EnrichedCat(self.N, self.hom, self._compose, self.identity, self.pair, self.symmetry, self.name)
        out.overrides = dict(self.overrides)
        out.overrides[((m, n, p), (g, f))] = value
        return out

    def sizes(self) -> dict:
        return {key: H.size for key, H in sorted(self.hom.items())}

    def __repr__(self) -> str:
        return f"EnrichedCat({self.name}, N={self.N})"


def _sample(items: list, budget: int | None, rng: random.Random) -> list:
    if budget is None or len(items) <= budget:
        return items
    return rng.sample(items, budget)


def validate_category(E: EnrichedCat, budget: int | None = None, seed: int = 0) -> Report:
    """Unit laws on every hom; associativity on every (or a sampled set of) composable triple."""
    rep = Report(f"category axioms {E.name}")
    rng = random.Random(seed)
    R = E.objects
    for m in R:
        for n in R:
            for f in E.hom[(m, n)].labels:
                rep.check(E.compose(E.identity[n], f, m, n, n) == f, "left unit", (m, n, gd.fmt_label(f)))
                rep.check(E.compose(f, E.identity[m], m, m, n) == f, "right unit", (m, n, gd.fmt_label(f)))
    for m, n, p, q in product(R, repeat=4):
        triples = [(h, g, f) for h in E.hom[(p, q)].labels for g in E.hom[(n, p)].labels
                   for f in E.hom[(m, n)].labels]
        for h, g, f in _sample(triples, budget, rng):
            lhs = E.compose(h, E.compose(g, f, m, n, p), m, p, q)
            rhs = E.compose(E.compose(h, g, n, p, q), f, m, n, q)
            rep.check(lhs == rhs, "associativity", (m, n, p, q, gd.fmt_label((h, g, f))))
    return rep


def validate_pairing(E: EnrichedCat, budget: int | None = 2000, seed: int = 0) -> Report:
    """Functoriality, strict associativity and unit of ⊠, and naturality and involutivity of the symmetry."""
    rep = Report(f"symmetric monoidal axioms {E.name}")
    if E.pair is None:
        rep.fail("pairing", (), "no pairing declared")
        return rep
    rng = random.Random(seed)
    N = E.N
    R = E.objects
    ident0 = E.identity[0]
    for m, n in product(R, repeat=2):
        for f in E.hom[(m, n)].labels:
            rep.check(E.pair(ident0, f) == f and E.pair(f, ident0) == f, "unit object", (m, n, gd.fmt_label(f)))
    for n, n2 in product(R, repeat=2):
        if n + n2 <= N:
            rep.check(E.pair(E.identity[n], E.identity[n2]) == E.identity[n + n2], "pairing of identities", (n, n2))
    shapes = [(m, n, p, m2, n2, p2) for m, n, p, m2, n2, p2 in product(R, repeat=6)
              if m + m2 <= N and n + n2 <= N and p + p2 <= N]
    for m, n, p, m2, n2, p2 in shapes:
        quads = [(g, f, g2, f2) for g in E.hom[(n, p)].labels for f in E.hom[(m, n)].labels
                 for g2 in E.hom[(n2, p2)].labels for f2 in E.hom[(m2, n2)].labels]
        for g, f, g2, f2 in _sample(quads, budget, rng):
            lhs = E.compose(E.pair(g, g2), E.pair(f, f2), m + m2, n + n2, p + p2)
            rhs = E.pair(E.compose(g, f, m, n, p), E.compose(g2, f2, m2, n2, p2))
            rep.check(lhs == rhs, "interchange", (m, n, p, m2, n2, p2, gd.fmt_label((g, f, g2, f2))))
    for a, b, c in product(R, repeat=3):
        if a + b + c > N:
            continue
        for x in E.hom[(a, a)].labels:
            for y in E.hom[(b, b)].labels:
                for z in _sample(list(E.hom[(c, c)].labels), 4, rng):
                    rep.check(E.pair(E.pair(x, y), z) == E.pair(x, E.pair(y, z)), "pairing associativity", (a, b, c))
    if E.symmetry is not None:
        for m, n, m2, n2 in product(R, repeat=4):
            if m + m2 > N or n + n2 > N:
                continue
            s_src, s_tgt = E.symmetry(m, m2), E.symmetry(n, n2)
            pairs = [(f, f2) for f in E.hom[(m, n)].labels for f2 in E.hom[(m2, n2)].labels]
            for f, f2 in _sample(pairs, budget, rng):
                lhs = E.compose(s_tgt, E.pair(f, f2), m + m2, n + n2, n2 + n)
                rhs = E.compose(E.pair(f2, f), s_src, m + m2, m2 + m, n2 + n)
                rep.check(lhs == rhs, "symmetry naturality", (m, n, m2, n2, gd.fmt_label((f, f2))))
        for a, b in product(R, repeat=2):
            if a + b <= N:
                back = E.compose(E.symmetry(b, a), E.symmetry(a, b), a + b, b + a, a + b)
                rep.check(back == E.identity[a + b], "symmetry involutive", (a, b))
    return rep


# the envelope


def envelope_compose(O: Operad, g, f):
    """g ∘ f: feed output b of f into input b of g, apply γ blockwise, restore canonical form."""
    K, cs, beta = g
    J, es, alpha = f
    sJ, sK = _starts(J), _starts(K)
    blocks, ops, order = [], [], []
    for k, c in enumerate(cs):
        bs = [beta[sK[k] + t] for t in range(K[k])]
        Jsub = [J[b - 1] for b in bs]
        ops.append(O.gamma(c, [es[b - 1] for b in bs], Jsub))
        blocks.append(sum(Jsub))
        for b in bs:
            order.extend(alpha[sJ[b - 1] + s] for s in range(J[b - 1]))
    m = len(order)
    lam = Inj.fast(m, m, tuple(order)).inverse()
    return _single(pr.power_class(O.C, blocks, [[(h, ONE)] for h in ops], lam))


def envelope_pair(f, f2):
    J, es, a = f
    J2, es2, a2 = f2
    alpha = cb.block_sum(Inj.fast(len(a), len(a), tuple(a)), Inj.fast(len(a2), len(a2), tuple(a2)))
    return (tuple(J) + tuple(J2), tuple(es) + tuple(es2), alpha.table)


def envelope_unit_power(O: Operad, n: int):
    return ((1,) * n, (O.unit,) * n, tuple(range(1, n + 1)))


def envelope_perm(O: Operad, sigma: Inj):
    """i_n(σ): the element sending input a to output σ(a)."""
    return ((1,) * sigma.n, (O.unit,) * sigma.n, sigma.inverse().table)


def envelope(C: Operad, N: int | None = None) -> EnrichedCat:
    """C̃ with hom(m, n) = C^{⊠n}(m) for m, n ≤ N."""
    N = C.N if N is None else N
    if N > C.N:
        raise sq.TruncationError(f"envelope truncation {N} exceeds operad truncation {C.N}")
    if C.N < 1:
        raise EnvelopeError("the envelope needs the unit of C(1)")
    powers = [pr.day_power(C.C, n) for n in range(N + 1)]
    hom = {(m, n): powers[n].levels[m] for m in range(N + 1) for n in range(N + 1)}
    ident = {n: envelope_unit_power(C, n) for n in range(N + 1)}

    def comp(g, f, m, n, p):
        return envelope_compose(C, g, f)

    def sym(a, b):
        tau = Inj(a + b, a + b, [b + t for t in range(1, a + 1)] + list(range(1, b + 1)))
        return envelope_perm(C, tau)

    E = EnrichedCat(N, hom, comp, ident, envelope_pair, sym, f"envelope({C.name})")
    E.operad, E.powers = C, powers
    return E


def check_envelope(E: EnrichedCat) -> Report:
    """hom(n,1) = C(n) with its Σ_n-action, hom(0,m) = I for unital C, i_n a monoid map,
    precomposition with i_m(σ) is the Σ_m-action, and γ is recovered as c ∘ (c_1 ⊠ ... ⊠ c_k)."""
    C: Operad = E.operad
    rep = Report(f"envelope structure {E.name}")
    N = E.N
    for n in range(N + 1):
        H = E.hom[(n, 1)]
        ok = rep.check(sorted(H.labels, key=gd.label_key) == sorted(
            [((n,), (c,), tuple(range(1, n + 1))) for c in C.C.levels[n].labels], key=gd.label_key),
            "hom(n,1) = C(n)", (n,))
        if ok:
            for i in range(1, n):
                s = cb.transposition(n, i)
                for c in C.C.levels[n].labels:
                    x = ((n,), (c,), tuple(range(1, n + 1)))
                    rep.check(E.powers[1].act(s)(x) == ((n,), (C.C.act(s)(c),), tuple(range(1, n + 1))),
                              "Σ_n-action on hom(n,1)", (n, i, gd.fmt_label(c)))
    if C.is_unital:
        for m in range(N + 1):
            rep.check(E.hom[(0, m)].size == 1, "hom(0,m) = I", (m,))
    for n in range(N + 1):
        perms = cb.enumerate_morphisms(n, n, "Σ")
        rep.check(envelope_perm(C, cb.identity(n)) == E.identity[n], "i_n(id) = id", (n,))
        for s in perms:
            for t in perms:
                rep.check(E.compose(envelope_perm(C, s), envelope_perm(C, t), n, n, n) == envelope_perm(C, s.compose(t)),
                          "i_n(σ∘τ) = i_n(σ)∘i_n(τ)", (n, s.table, t.table))
        for m in range(N + 1):
            for s in perms if m == n else []:
                for f in E.hom[(m, n)].labels:
                    rep.check(E.compose(f, envelope_perm(C, s), m, m, n) == E.powers[n].act(s)(f),
                              "precomposition with i_m(σ) = Σ_m-action", (m, n, s.table, gd.fmt_label(f)))
    for k, J in C.gamma_keys():
        if k == 0 or sum(J) > N:
            continue
        for t in C.gamma_domain(k, J).labels:
            c, cs = t[0], t[1:]
            tail = E.identity[0]
            for j, e in zip(J, cs):
                tail = envelope_pair(tail, ((j,), (e,), tuple(range(1, j + 1))))
            got = E.compose(((k,), (c,), tuple(range(1, k + 1))), tail, sum(J), k, 1)
            rep.check(got == ((sum(J),), (C.gamma(c, cs, J),), tuple(range(1, sum(J) + 1))),
                      "γ recovered from the envelope", (k, J, gd.fmt_label(t)))
    return rep


# the PS-indexed form and ω


def _fiber_sizes(phi: Sequence[int], n: int) -> tuple:
    sizes = [0] * n
    for y in phi:
        if y:
            sizes[y - 1] += 1
    return tuple(sizes)


def indexed_hom(C: Operad, m: int, n: int, cls: str = "PS") -> GroundObject:
    """⊕_{φ ∈ cls(m,n)} ⊗_j C(|φ⁻¹(j)|), labels (φ, (e_1, ..., e_n))."""
    labels = []
    for phi in cb.enumerate_morphisms(m, n, cls):
        sizes = _fiber_sizes(phi.table, n)
        for es in product(*[C.C.levels[j].labels for j in sizes]):
            labels.append((phi.table, es))
    return gd.finset(labels)


def omega_value(f):
    J, es, alpha = f
    phi = [0] * len(alpha)
    for j, s in enumerate(_starts(J)):
        for u in range(J[j]):
            phi[alpha[s + u] - 1] = j + 1
    return (tuple(phi), tuple(es))


def omega_inverse_value(x, n: int):
    phi, es = x
    fibers = [[a for a in range(1, len(phi) + 1) if phi[a - 1] == j] for j in range(1, n + 1)]
    return (tuple(len(F) for F in fibers), tuple(es), tuple(a for F in fibers for a in F))


def omega(C: Operad, m: int, n: int, E: EnrichedCat | None = None) -> GroundMorphism:
    """ω : C̃(m,n) → C̄(m,n)."""
    src = E.hom[(m, n)] if E is not None else pr.day_power(C.C, n).levels[m]
    return gd.from_function(src, indexed_hom(C, m, n), omega_value)


def indexed_act(C: Operad, sigma: Inj, x):
    """Right Σ_m-action on C̄(m,n): φ ↦ φ∘σ, each e_j reindexed along its fiber."""
    phi, es = x
    m = len(phi)
    new_phi = tuple(phi[sigma(a) - 1] for a in range(1, m + 1))
    out = []
    for j, e in enumerate(es, 1):
        old = [a for a in range(1, m + 1) if phi[a - 1] == j]
        new = [a for a in range(1, m + 1) if new_phi[a - 1] == j]
        rho = Inj(len(new), len(new), [old.index(sigma(a)) + 1 for a in new])
        out.append(C.C.act(rho)(e))
    return (new_phi, tuple(out))


def indexed_permute(tau: Inj, x):
    """Left Σ_n-action on C̄(m,n): φ ↦ τ∘φ, factors permuted."""
    phi, es = x
    return (tuple(tau(y) for y in phi), cb.permute_entries(tau, es))


def check_omega(E: EnrichedCat, m: int, n: int) -> Report:
    C: Operad = E.operad
    rep = Report(f"ω at ({m},{n}) for {C.name}")
    w = omega(C, m, n, E)
    if not rep.check(w.is_iso(), "bijective", (m, n), f"{w.source.size} → {w.target.size}"):
        return rep
    for x in w.target.labels:
        rep.check(w(omega_inverse_value(x, n)) == x, "explicit inverse", (m, n, gd.fmt_label(x)))
    for f in w.source.labels:
        for i in range(1, m):
            s = cb.transposition(m, i)
            rep.check(w(E.powers[n].act(s)(f)) == indexed_act(C, s, w(f)), "Σ_m-equivariance",
                      (m, n, i, gd.fmt_label(f)))
        for i in range(1, n):
            t = cb.transposition(n, i)
            lhs = w(E.compose(envelope_perm(C, t), f, m, n, n))
            rep.check(lhs == indexed_permute(t, w(f)), "Σ_n-equivariance", (m, n, i, gd.fmt_label(f)))
    return rep


# the category of operators


def order_conversion(phi: Sequence[int], js: Sequence[int]) -> Inj:
    """σ_k: position of each element of ⋃_{j ∈ js} φ⁻¹(j), taken in natural order, within the block order."""
    sizes = {j: 0 for j in js}
    for y in phi:
        if y in sizes:
            sizes[y] += 1
    offset, s = {}, 0
    for j in js:
        offset[j] = s
        s += sizes[j]
    seen = {j: 0 for j in js}
    table = []
    for y in phi:
        if y in seen:
            seen[y] += 1
            table.append(offset[y] + seen[y])
    return Inj.fast(len(table), len(table), tuple(table))


def operators_compose(O: Operad, g, f):
    """(ψ, d) ∘ (φ, c): γ(d_k; c_j for j ∈ ψ⁻¹(k)) reordered by σ_k; factors over 0 are dropped."""
    psi, ds = g
    phi, cs = f
    comp = tuple(0 if y == 0 else psi[y - 1] for y in phi)
    sizes = _fiber_sizes(phi, len(cs))
    out = []
    for k, d in enumerate(ds, 1):
        js = [j for j in range(1, len(psi) + 1) if psi[j - 1] == k]
        h = O.gamma(d, [cs[j - 1] for j in js], [sizes[j - 1] for j in js])
        out.append(O.C.act(order_conversion(phi, js))(h))
    return (comp, tuple(out))


def cat_of_operators(C: Operad, N: int | None = None) -> EnrichedCat:
    """Ĉ with hom(m, n) indexed by all based maps F(m, n)."""
    N = C.N if N is None else N
    if N > C.N:
        raise sq.TruncationError(f"truncation {N} exceeds operad truncation {C.N}")
    hom = {(m, n): indexed_hom(C, m, n, "F") for m in range(N + 1) for n in range(N + 1)}
    ident = {n: (tuple(range(1, n + 1)), (C.unit,) * n) for n in range(N + 1)}

    def pair(f, f2):
        phi, es = f
        phi2, es2 = f2
        shift = len(es)
        return (tuple(phi) + tuple(0 if y == 0 else y + shift for y in phi2), tuple(es) + tuple(es2))

    E = EnrichedCat(N, hom, lambda g, f, m, n, p: operators_compose(C, g, f), ident, pair, None,
                    f"operators({C.name})")
    E.operad = C
    return E


def check_ps_restriction(env: EnrichedCat, ops: EnrichedCat, budget: int | None = None, seed: int = 0) -> Report:
    """ω(g ∘ f) = ω(g) ∘ ω(f) with the right side composed in Ĉ."""
    rep = Report(f"PS-restriction {ops.name} vs {env.name}")
    rng = random.Random(seed)
    R = range(min(env.N, ops.N) + 1)
    for m, n, p in product(R, repeat=3):
        pairs = [(g, f) for g in env.hom[(n, p)].labels for f in env.hom[(m, n)].labels]
        for g, f in _sample(pairs, budget, rng):
            lhs = omega_value(env.compose(g, f, m, n, p))
            rhs = ops.compose(omega_value(g), omega_value(f), m, n, p)
            rep.check(lhs == rhs, "ω(g∘f) = ω(g)∘ω(f)", (m, n, p, gd.fmt_label((g, f))))
    return rep


# endomorphism operads in a symmetric monoidal category


class FinSetMonoidal:
    """Finite sets {0..a-1} with ⊗ either disjoint union (unit ∅) or product (unit a point).

    Morphisms a → b are tuples of images.  Both structures are strict: for
    disjoint union copy c of A sits at offsets c·|A|; for product, tuples are
    encoded in mixed radix with the first factor most significant.
    """

    def __init__(self, kind: str = "union"):
        if kind not in ("union", "product"):
            raise EnvelopeError(f"unknown monoidal structure {kind}")
        self.kind = kind
        self.unit_object = 0 if kind == "union" else 1

    def hom(self, a: int, b: int) -> list:
        return list(product(range(b), repeat=a))

    def identity(self, a: int) -> tuple:
        return tuple(range(a))

    def compose(self, g: tuple, f: tuple) -> tuple:
        return tuple(g[y] for y in f)

    def power(self, a: int, k: int) -> int:
        return a * k if self.kind == "union" else a ** k

    def tensor(self, fs: Sequence[tuple], targets: Sequence[int]) -> tuple:
        if self.kind == "union":
            out, off = [], 0
            for f, b in zip(fs, targets):
                out.extend(off + y for y in f)
                off += b
            return tuple(out)
        out = [0]
        for f, b in zip(fs, targets):
            out = [v * b + y for v in out for y in f]
        return tuple(out)

    def permute(self, sigma: Inj, a: int) -> tuple:
        """A^{⊗k} → A^{⊗k} moving factor i to position σ(i)."""
        k = sigma.n
        if self.kind == "union":
            out = []
            for i in range(1, k + 1):
                out.extend((sigma(i) - 1) * a + x for x in range(a))
            return tuple(out)
        out = []
        for xs in product(range(a), repeat=k):
            out.append(_mixed(cb.permute_entries(sigma, xs), a))
        return tuple(out)

    def unit_map(self, a: int) -> tuple | None:
        """The unique map J → A, if there is exactly one."""
        maps = self.hom(self.unit_object, a)
        return maps[0] if len(maps) == 1 else None

    def lam_map(self, lam: Inj, a: int) -> tuple:
        """W(λ) : A^{⊗m} → A^{⊗n}, unit maps in the missing factors, then the permutation."""
        u = self.unit_map(a)
        if u is None and lam.n > lam.m:
            raise EnvelopeError(f"no unique unit map into {a}")
        ident = self.identity(a)
        pad = self.tensor([ident] * lam.m + [u] * (lam.n - lam.m), [a] * lam.n)
        return self.compose(self.permute(cb.standard_factor(lam), a), pad)


def _mixed(digits: Sequence[int], q: int) -> int:
    v = 0
    for d in digits:
        v = v * q + d
    return v


class HW:
    """H_W(A, B)(k) = W(A^{⊗k}, B) over a finite symmetric monoidal W, truncated at N."""

    def __init__(self, W: FinSetMonoidal, N: int = 2):
        self.W, self.N = W, N
        self._seqs: dict = {}

    def require_unit(self, B: int) -> None:
        if len(self.W.hom(self.W.unit_object, B)) != 1:
            raise EnvelopeError(f"W(J, B) is not a point for B = {B}: the construction needs W(J,B) ≅ I")

    def seq(self, A: int, B: int) -> LamSeq:
        S = self._seqs.get((A, B))
        if S is None:
            self.require_unit(B)
            self.require_unit(A)
            W = self.W
            levels = [gd.finset(W.hom(W.power(A, k), B)) for k in range(self.N + 1)]
            S = sq.from_action(FINSET, self.N, levels, lambda lam, f: W.compose(f, W.lam_map(lam, A)),
                               W.hom(W.unit_object, B)[0])
            self._seqs[(A, B)] = S
        return S

    def gamma(self, A: int, B: int, C: int) -> Callable:
        """g ∘ (f_1 ⊗ ... ⊗ f_k) for g ∈ H(B,C)(k), f_i ∈ H(A,B)(J_i)."""
        W = self.W

        def fn(g, fs, J):
            return W.compose(g, W.tensor(fs, [B] * len(fs)))
        return fn

    def operad(self, B: int) -> Operad:
        return Operad(self.seq(B, B), self.W.identity(B), self.gamma(B, B, B), f"H_W({B},{B})")

    def right_module(self, A: int, B: int) -> ModuleStructure:
        M, O = self.seq(A, B), self.operad(A)
        K = pr.kelly(M, O.C)
        g = self.gamma(A, A, B)

        def act(x):
            k, d, (J, es, a) = x
            return M.act(Inj(len(a), len(a), a).inverse())(g(d, es, J))
        return ModuleStructure(M, O, "right", act, K, f"H_W({A},{B}) over H_W({A},{A})")

    def left_module(self, A: int, B: int) -> ModuleStructure:
        M, O = self.seq(A, B), self.operad(B)
        K = pr.kelly(O.C, M)
        g = self.gamma(A, B, B)

        def act(x):
            k, c, (J, ms, a) = x
            return M.act(Inj(len(a), len(a), a).inverse())(g(c, ms, J))
        return ModuleStructure(M, O, "left", act, K, f"H_W({A},{B}) over H_W({B},{B})")


def hw_operad(W: FinSetMonoidal, A: int, B: int, N: int = 2):
    """(H_W(A,B), H_W(B,B) as an operad)."""
    H = HW(W, N)
    return H.seq(A, B), H.operad(B)


__all__ = [
    "EnrichedCat", "EnvelopeError", "validate_category", "validate_pairing", "envelope", "envelope_compose",
    "envelope_pair", "envelope_perm", "check_envelope", "indexed_hom", "omega", "omega_value",
    "omega_inverse_value", "indexed_act", "indexed_permute", "check_omega", "order_conversion",
    "operators_compose", "cat_of_operators", "check_ps_restriction", "FinSetMonoidal", "HW", "hw_operad",
]
