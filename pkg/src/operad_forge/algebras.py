"""The monad C̄X = C ⊗_Λ X^{⊗*} of an operad, its algebras and modules.

Truncation.  Every based set handled here carries a weight: base point 0,
other points 1 unless stated otherwise, additive on C̄-terms.  C̄Y keeps the
terms of total weight ≤ N, so C̄C̄X consists of two-level trees with at most
N leaves and μ_X is total.  An algebra structure θ must not raise weights;
a term that would leave the truncation raises ``TruncationError``.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Sequence

from . import combinat as cb
from . import ground as gd
from . import products as pr
from . import seq as sq
from .combinat import Inj
from .ground import FINSET, BasedObject, GroundMorphism, GroundObject
from .operads import Operad, to_monoid
from .seq import LamSeq, Report, SeqMorphism, TruncationError


class AlgebraError(ValueError):
    pass


class Weighted(BasedObject):
    """A based finite set whose points carry additive weights.

    When built as D̄Y, ``D`` and ``inner`` record the construction and
    ``term`` produces canonical forms.
    """

    def __init__(self, carrier: GroundObject, base: GroundMorphism, weight: dict, N: int,
                 D: LamSeq | None = None, inner: "Weighted | None" = None, dropped: int = 0):
        super().__init__(carrier, base)
        self.weight = weight
        self.N = N
        self.D = D
        self.inner = inner
        self.dropped = dropped

    @property
    def approximate(self) -> bool:
        """True when terms were discarded for exceeding the weight bound."""
        return self.dropped > 0

    def term(self, k: int, d, ys: Sequence):
        """Canonical form of (k, d, ys) in D̄Y."""
        if self.D is None:
            raise AlgebraError("not a D̄Y object")
        ys = tuple(ys)
        if k > self.D.N or sum(self.inner.weight[y] for y in ys) > self.N:
            raise TruncationError(f"term of arity {k} over {gd.fmt_label(ys)} exceeds N={self.N}")
        return pr.tensor_nf(self.D, self.inner, (k, d, ys))

    def __repr__(self) -> str:
        return f"Weighted(size={self.size}, N={self.N})"


def weighted(X: BasedObject, N: int, weight: dict | None = None) -> Weighted:
    """X with weight 0 at the base point and 1 elsewhere (or the given weights)."""
    if isinstance(X, Weighted) and weight is None:
        return X
    if X.tag is not FINSET:
        raise gd.TagMismatch("the monad is implemented over FINSET")
    if weight is None:
        weight = {x: 0 if x == X.point else 1 for x in X.carrier.labels}
    return Weighted(X.carrier, X.base, dict(weight), N)


def apply_seq(D: LamSeq, Y: BasedObject, N: int | None = None) -> Weighted:
    """D̄Y = D ⊗_Λ Y^{⊗*}, restricted to total weight ≤ N."""
    N = D.N if N is None else N
    Y = weighted(Y, N)
    if D.base is None:
        raise AlgebraError("D̄Y needs a base map on D")
    pt = Y.point
    pts = [y for y in Y.carrier.labels if y != pt]
    weight = {}
    dropped = 0
    for k in range(min(N, D.N) + 1):
        if D.levels[k].size == 0:
            continue
        for ys in product(pts, repeat=k):
            w = sum(Y.weight[y] for y in ys)
            if w > N:
                dropped += 1
                continue
            for d in D.levels[k].labels:
                weight[pr.tensor_nf(D, Y, (k, d, ys))] = w
    b = pr.tensor_nf(D, Y, (0, D.base_point, ()))
    weight[b] = 0
    carrier = gd.finset(gd.sort_labels(weight))
    base = GroundMorphism(gd.unit(FINSET), carrier, [b])
    return Weighted(carrier, base, weight, N, D, Y, dropped)


def fmap(T: Weighted, T2: Weighted, f: Callable) -> GroundMorphism:
    """D̄f : D̄Y → D̄Y' for a based map f given pointwise."""
    return gd.from_function(T.carrier, T2.carrier, lambda z: T2.term(z[0], z[1], tuple(f(y) for y in z[2])))


# the monad


class Monad:
    """C̄ with μ and η, for a FINSET operad."""

    def __init__(self, O: Operad):
        self.O = O
        self.N = O.N

    def __call__(self, Y: BasedObject) -> Weighted:
        return apply_seq(self.O.C, Y, self.N)

    def eta(self, Y: Weighted, TY: Weighted) -> GroundMorphism:
        return gd.from_function(Y.carrier, TY.carrier, lambda y: TY.term(1, self.O.unit, (y,)))

    def mu_value(self, TY: Weighted, z):
        """μ on one element (k, c, (z_1..z_k)) of C̄C̄Y."""
        k, c, zs = z
        J = tuple(zi[0] for zi in zs)
        g = self.O.gamma(c, [zi[1] for zi in zs], J)
        return TY.term(sum(J), g, tuple(y for zi in zs for y in zi[2]))

    def mu(self, TY: Weighted, TTY: Weighted) -> GroundMorphism:
        return gd.from_function(TTY.carrier, TY.carrier, lambda z: self.mu_value(TY, z))


def monad(C: Operad, X: BasedObject):
    """(C̄X, μ_X : C̄C̄X → C̄X, η_X : X → C̄X)."""
    T = Monad(C)
    X = weighted(X, C.N)
    TX = T(X)
    TTX = T(TX)
    return TX, T.mu(TX, TTX), T.eta(X, TX)


def validate_monad(C: Operad, X: BasedObject) -> Report:
    """Both unit laws on C̄X and associativity on C̄C̄C̄X."""
    T = Monad(C)
    X = weighted(X, C.N)
    TX = T(X)
    TTX = T(TX)
    TTTX = T(TTX)
    rep = Report(f"monad {C.name}")
    mu, mu2 = T.mu(TX, TTX), T.mu(TTX, TTTX)
    eta_T = T.eta(TX, TTX)
    T_eta = fmap(TX, TTX, T.eta(X, TX))
    for z in TX.carrier.labels:
        rep.check(mu(eta_T(z)) == z, "left unit μ∘ηC̄ = id", (gd.fmt_label(z),))
        rep.check(mu(T_eta(z)) == z, "right unit μ∘C̄η = id", (gd.fmt_label(z),))
    T_mu = fmap(TTTX, TTX, mu)
    for w in TTTX.carrier.labels:
        rep.check(mu(T_mu(w)) == mu(mu2(w)), "associativity μ∘C̄μ = μ∘μC̄", (gd.fmt_label(w),))
    if TTX.approximate or TTTX.approximate:
        rep.notes.append(f"terms above weight {C.N} discarded")
    return rep


# algebras


class AlgebraStructure:
    """(X, θ : C̄X → X).  ``action`` optionally evaluates θ on raw terms."""

    def __init__(self, C: Operad, X: Weighted, theta: GroundMorphism, CX: Weighted,
                 action: Callable | None = None, name: str = "algebra"):
        self.C, self.X, self.theta, self.CX = C, X, theta, CX
        self.action = action
        self.name = name

    def __call__(self, z):
        return self.theta(z)

    def with_theta_entry(self, z, value) -> "AlgebraStructure":
        """Copy with one value of θ replaced (mutation fixtures)."""
        return AlgebraStructure(self.C, self.X, self.theta.with_entry(z, value), self.CX, None, self.name)


def algebra(C: Operad, X: BasedObject, action: Callable, name: str = "algebra") -> AlgebraStructure:
    """Algebra from ``action(k, c, xs)``, tabulated on canonical forms of C̄X."""
    X = weighted(X, C.N)
    CX = Monad(C)(X)
    theta = gd.from_function(CX.carrier, X.carrier, lambda z: action(*z))
    return AlgebraStructure(C, X, theta, CX, action, name)


def level_zero_algebra(C: Operad) -> AlgebraStructure:
    """C(0) acted on by γ(c; x_1, ..., x_k)."""
    X = BasedObject(C.C.levels[0], C.C.base)
    return algebra(C, X, lambda k, c, xs: C.gamma(c, xs, (0,) * k), f"{C.name}(0)")


def free_algebra(C: Operad, Y: BasedObject) -> AlgebraStructure:
    """(C̄Y, μ_Y), with C̄Y weighted by its terms."""
    T = Monad(C)
    TY = T(weighted(Y, C.N))
    TTY = T(TY)
    mu = T.mu(TY, TTY)
    return AlgebraStructure(C, TY, mu, TTY, lambda k, c, zs: T.mu_value(TY, (k, c, tuple(zs))), f"free {C.name}")


def monoid_algebra(C: Operad, X: BasedObject, mult: Callable, name: str = "monoid") -> AlgebraStructure:
    """A monoid with unit the base point, as an algebra over Com or Ass.

    Word-valued operations (Ass) multiply x_{w_1} ... x_{w_n}; other
    operations multiply in input order, so the monoid must then be commutative.
    """
    unit = X.point

    def action(k, c, xs):
        order = c if isinstance(c, tuple) and sorted(c) == list(range(1, k + 1)) else range(1, k + 1)
        out = unit
        for a in order:
            out = mult(out, xs[a - 1])
        return out
    return algebra(C, X, action, name)


def validate_algebra(A: AlgebraStructure) -> Report:
    """Base point, the unit square and the associativity square.

    Instances whose image under C̄θ leaves the truncation are skipped and
    counted in the report notes.
    """
    C, X, CX, theta = A.C, A.X, A.CX, A.theta
    T = Monad(C)
    rep = Report(f"algebra {A.name}")
    rep.check(theta(CX.point) == X.point, "base point θ(η) = *", (gd.fmt_label(CX.point),))
    eta = T.eta(X, CX)
    for x in X.carrier.labels:
        rep.check(theta(eta(x)) == x, "unit square θ∘η = id", (gd.fmt_label(x),))
    CCX = T(CX)
    mu = T.mu(CX, CCX)
    skipped = 0
    for w in CCX.carrier.labels:
        k, c, zs = w
        try:
            lhs = theta(CX.term(k, c, tuple(theta(z) for z in zs)))
        except TruncationError:
            skipped += 1
            continue
        rhs = theta(mu(w))
        rep.check(lhs == rhs, "associativity square θ∘C̄θ = θ∘μ", (gd.fmt_label(w),),
                  f"{gd.fmt_label(lhs)} vs {gd.fmt_label(rhs)}")
    if A.action is not None:
        # θ must be constant on Λ-classes of raw terms
        for k in range(C.N + 1):
            for xs in product(X.carrier.labels, repeat=k):
                if sum(X.weight[x] for x in xs) > C.N:
                    continue
                for c in C.C.levels[k].labels:
                    z = pr.tensor_nf(C.C, X, (k, c, xs))
                    rep.check(A.action(k, c, xs) == theta(z), "well-defined on classes", (k, gd.fmt_label(c), gd.fmt_label(xs)))
    if skipped:
        rep.notes.append(f"{skipped} instances above the weight bound skipped")
    return rep


def algebra_map_check(A: AlgebraStructure, B: AlgebraStructure, f: Callable) -> Report:
    """f : X → Y commutes with the structure maps."""
    rep = Report("algebra morphism")
    Tf = fmap(A.CX, B.CX, f)
    for z in A.CX.carrier.labels:
        rep.check(f(A.theta(z)) == B.theta(Tf(z)), "f∘θ = θ∘C̄f", (gd.fmt_label(z),))
    return rep


# modules


def _kmap(tgt: pr.KellySeq, x, f: Callable | None = None, g: Callable | None = None):
    """Apply f on the operation factor and g blockwise on the power factor of a Kelly element."""
    k, d, (J, es, a) = x
    d2 = f(k, d) if f is not None else d
    es2 = tuple(g(j, e) for j, e in zip(J, es)) if g is not None else tuple(es)
    return tgt.normal_form((k, d2, (tuple(J), es2, a)))


def _kelly_level(x) -> int:
    return sum(x[2][0])


class ModuleStructure:
    """A right (M ⊙ C → M) or left (C ⊙ M → M) module over an operad.

    ``act`` maps canonical elements of ``product`` to M; modules over i0X may
    be partial, raising ``TruncationError`` above the weight bound.
    """

    def __init__(self, M: LamSeq, C: Operad, side: str, act: Callable, product: pr.KellySeq,
                 name: str = "module", overrides: dict | None = None):
        if side not in ("left", "right"):
            raise AlgebraError(f"unknown side {side}")
        self.M, self.C, self.side, self.product = M, C, side, product
        self._act = act
        self.name = name
        self.overrides = dict(overrides or {})

    def act(self, x):
        hit = self.overrides.get(x)
        return hit if hit is not None else self._act(x)

    @property
    def action(self) -> SeqMorphism:
        maps = [gd.from_function(self.product.levels[n], self.M.levels[n], self.act) for n in range(self.M.N + 1)]
        return SeqMorphism(self.product, self.M, maps)

    def with_action_entry(self, x, value) -> "ModuleStructure":
        o = dict(self.overrides)
        o[x] = value
        return ModuleStructure(self.M, self.C, self.side, self._act, self.product, self.name, o)


def right_regular(C: Operad) -> ModuleStructure:
    Mo = to_monoid(C)
    return ModuleStructure(C.C, C, "right", lambda x: Mo.mu[_kelly_level(x)](x), Mo.product, f"{C.name} (right)")


def left_regular(C: Operad) -> ModuleStructure:
    Mo = to_monoid(C)
    return ModuleStructure(C.C, C, "left", lambda x: Mo.mu[_kelly_level(x)](x), Mo.product, f"{C.name} (left)")


def module_from_algebra(A: AlgebraStructure) -> ModuleStructure:
    """The left module i0X, acting through θ at level 0."""
    C = A.C
    M = sq.embed(A.X, "i0", C.N)
    K = pr.kelly(C.C, M)

    def act(x):
        k, c, (J, xs, a) = x
        return A.theta(A.CX.term(k, c, xs))
    return ModuleStructure(M, C, "left", act, K, f"i0 {A.name}")


def algebra_from_module(Mo: ModuleStructure, X: BasedObject | None = None) -> AlgebraStructure:
    """p0 of a left module concentrated at level 0."""
    if Mo.side != "left":
        raise AlgebraError("only left modules give algebras")
    for n in range(1, Mo.M.N + 1):
        if Mo.M.levels[n].size:
            raise AlgebraError(f"module is not concentrated at level 0 (level {n} nonempty)")
    X = X if X is not None else sq.p0(Mo.M)
    K = Mo.product
    return algebra(Mo.C, X, lambda k, c, xs: Mo.act(K.normal_form((k, c, ((0,) * k, tuple(xs), ())))), Mo.name)


def algebra_module_roundtrip(A: AlgebraStructure) -> Report:
    """p0 ∘ i0 on algebras and i0 ∘ p0 on level-0 left modules are identities."""
    rep = Report("algebra/module correspondence")
    Mo = module_from_algebra(A)
    B = algebra_from_module(Mo, A.X)
    rep.check(B.CX.carrier == A.CX.carrier and B.theta == A.theta, "p0 i0 = id", (A.name,))
    Mo2 = module_from_algebra(B)
    for x in Mo.product.levels[0].labels:
        try:
            v = Mo.act(x)
        except TruncationError:
            continue
        rep.check(Mo2.act(x) == v, "i0 p0 = id", (gd.fmt_label(x),))
    return rep


def _unit_to_C(C: Operad) -> Callable:
    return lambda j, e: C.eta if j == 0 else C.unit


def validate_module(Mo: ModuleStructure) -> Report:
    """The unit and associativity diagrams; instances above the weight bound are skipped."""
    C, M = Mo.C, Mo.M
    rep = Report(f"{Mo.side} module {Mo.name}")
    Cm = to_monoid(C)
    mu = lambda j, y: Cm.mu[_kelly_level(y)](y)  # noqa: E731
    I1 = sq.I1(FINSET, C.N)
    skipped = 0

    def guarded(relation, where, lhs_fn, rhs_fn):
        nonlocal skipped
        try:
            lhs = lhs_fn()
            rhs = rhs_fn()
        except TruncationError:
            skipped += 1
            return
        rep.check(lhs == rhs, relation, where, f"{gd.fmt_label(lhs)} vs {gd.fmt_label(rhs)}")

    P = Mo.product
    if Mo.side == "right":
        R = pr.kelly(M, I1)
        ru = pr.right_unitor(R)
        for n in range(C.N + 1):
            for x in R.levels[n].labels:
                guarded("unit ρ∘(id⊙η) = r", (f"level {n}", gd.fmt_label(x)),
                        lambda: Mo.act(_kmap(P, x, g=_unit_to_C(C))), lambda: ru[n](x))
        left = pr.kelly(P, C.C)
        CC = Cm.product
        right = pr.kelly(M, CC)
        a = pr.kelly_assoc(P, left, CC, right)
        for n in range(C.N + 1):
            for x in left.levels[n].labels:
                guarded("associativity ρ∘(ρ⊙id) = ρ∘(id⊙μ)∘α", (f"level {n}", gd.fmt_label(x)),
                        lambda: Mo.act(_kmap(P, x, f=lambda k, y: Mo.act(y))),
                        lambda: Mo.act(_kmap(P, a[n](x), g=mu)))
    else:
        L = pr.kelly(I1, M)
        lu = pr.left_unitor(L)
        for n in range(C.N + 1):
            for x in L.levels[n].labels:
                guarded("unit λ∘(η⊙id) = l", (f"level {n}", gd.fmt_label(x)),
                        lambda: Mo.act(_kmap(P, x, f=_unit_to_C(C))), lambda: lu[n](x))
        CC = Cm.product
        left = pr.kelly(CC, M)
        right = pr.kelly(C.C, P)
        a = pr.kelly_assoc(CC, left, P, right)
        for n in range(C.N + 1):
            for x in left.levels[n].labels:
                guarded("associativity λ∘(μ⊙id) = λ∘(id⊙λ)∘α", (f"level {n}", gd.fmt_label(x)),
                        lambda: Mo.act(_kmap(P, x, f=mu)),
                        lambda: Mo.act(_kmap(P, a[n](x), g=lambda j, y: Mo.act(y))))
    if skipped:
        rep.notes.append(f"{skipped} instances above the weight bound skipped")
    return rep


# (D ⊙ E) ⊗_Λ X^{⊗*} ≅ D̄(ĒX)


def _split_blocks(J: Sequence[int], xs: Sequence) -> list:
    out, pos = [], 0
    for j in J:
        out.append(tuple(xs[pos: pos + j]))
        pos += j
    return out


def kelly_to_composite(L: pr.LambdaTensor, R: Weighted, raw) -> tuple:
    """Send (n, (k, d, (J, es, α)), xs) to (k, d, (z_1..z_k)) in D̄(ĒX).

    The tensor X^{⊗*} is first moved across α⁻¹ (associativity of ⊗_Λ), then
    each block is tensored with its E-operation (distribution over ⊠).
    """
    n, (k, d, (J, es, a)), xs = raw
    ys = cb.permute_entries(Inj(n, n, a).inverse(), xs)
    EX = R.inner
    zs = tuple(EX.term(j, e, blk) for j, e, blk in zip(J, es, _split_blocks(J, ys)))
    return R.term(k, d, zs)


def compose_vs_kelly(D: LamSeq, E: LamSeq, X: BasedObject, f: GroundMorphism | None = None,
                     X2: BasedObject | None = None):
    """The isomorphism (D ⊙ E) ⊗_Λ X^{⊗*} → D̄(ĒX) and its verification report.

    With a based map f : X → X2 the naturality square is checked as well.
    """
    rep = Report("D̄⊙Ē ≅ D̄∘Ē")
    K = pr.kelly(D, E)
    X = weighted(X, D.N)
    L = pr.tensor_lambda(K, X)
    R = apply_seq(D, apply_seq(E, X, D.N), D.N)
    iso = gd.from_function(L.carrier, R.carrier, lambda z: kelly_to_composite(L, R, z))
    rep.check(iso.is_iso(), "bijective", (f"{L.size} → {R.size}",))
    if iso.is_iso():
        inv = iso.inverse()
        rep.check(inv.compose(iso) == gd.identity(L.carrier) and iso.compose(inv) == gd.identity(R.carrier),
                  "two-sided inverse", ())
    for raw in pr._tensor_raw(K, X):
        rep.check(kelly_to_composite(L, R, raw) == iso(L.normal_form(raw)), "well-defined on classes",
                  (gd.fmt_label(raw),))
    if f is not None:
        X2 = weighted(X2, D.N)
        L2 = pr.tensor_lambda(K, X2)
        EX2 = apply_seq(E, X2, D.N)
        R2 = apply_seq(D, EX2, D.N)
        iso2 = gd.from_function(L2.carrier, R2.carrier, lambda z: kelly_to_composite(L2, R2, z))
        Lf = pr.tensor_lambda_map(L, L2, f)
        Rf = fmap(R, R2, fmap(R.inner, EX2, f))
        rep.check(iso2.compose(Lf) == Rf.compose(iso), "naturality in X", (gd.fmt_label(f.data),))
    return iso, rep


# two elementary maps (cartesian setting)


def copower_seq(Y: BasedObject, N: int) -> LamSeq:
    """*Y : k ↦ wedge of k copies of Y, injections acting by coprojections."""
    pt = Y.point
    pts = [y for y in Y.carrier.labels if y != pt]
    levels = [gd.finset([pt] + [(i, y) for i in range(1, k + 1) for y in pts]) for k in range(N + 1)]

    def action(lam: Inj, w):
        if w == pt:
            return pt
        i, y = w
        if i not in lam.table:
            return pt
        return (lam.table.index(i) + 1, y)
    return sq.from_action(FINSET, N, levels, action, pt)


def smash(Y: BasedObject, X: BasedObject) -> BasedObject:
    """Y ∧ X with base point (*_Y, *_X)."""
    pts = [(y, x) for y in Y.carrier.labels if y != Y.point for x in X.carrier.labels if x != X.point]
    return gd.based_set([(Y.point, X.point)] + pts, (Y.point, X.point))


def _rho_k(Y: BasedObject, X: BasedObject, w, xs):
    base = (Y.point, X.point)
    if w == Y.point:
        return base
    i, y = w
    x = xs[i - 1]
    return base if x == X.point else (y, x)


def rho_smash(Y: BasedObject, X: BasedObject, N: int = sq.DEFAULT_N) -> GroundMorphism:
    """ρ : *Y ⊗_Λ X^{⊗*} → Y ∧ X, the i-th wedge summand projecting to the i-th coordinate."""
    if Y.tag is not FINSET or X.tag is not FINSET:
        raise gd.TagMismatch("ρ is defined over FINSET only")
    T = pr.tensor_lambda(copower_seq(Y, N), X)
    S = smash(Y, X)
    return gd.from_function(T.carrier, S.carrier, lambda z: _rho_k(Y, X, z[1], z[2]))


def check_rho_smash(Y: BasedObject, X: BasedObject, N: int = sq.DEFAULT_N,
                    f: GroundMorphism | None = None, X2: BasedObject | None = None) -> Report:
    """Well-definedness on classes, the σ_i square for every k < N, naturality in X."""
    rep = Report("ρ : *Y ⊗_Λ X^* → Y∧X")
    D = copower_seq(Y, N)
    T = pr.tensor_lambda(D, X)
    rho = rho_smash(Y, X, N)
    for raw in pr._tensor_raw(D, X):
        rep.check(_rho_k(Y, X, raw[1], raw[2]) == rho(T.normal_form(raw)), "well-defined on classes", (gd.fmt_label(raw),))
    for k in range(N):
        for i in range(1, k + 2):
            s = cb.degeneracy(k + 1, i)
            for w in D.levels[k + 1].labels:
                for xs in product(X.carrier.labels, repeat=k):
                    wide = xs[: i - 1] + (X.point,) + xs[i - 1:]
                    rep.check(_rho_k(Y, X, w, wide) == _rho_k(Y, X, D.act(s)(w), xs), "σ_i square",
                              (f"k={k}", f"i={i}", gd.fmt_label(w), gd.fmt_label(xs)))
    if f is not None:
        T2 = pr.tensor_lambda(D, X2)
        rho2 = rho_smash(Y, X2, N)
        Tf = pr.tensor_lambda_map(T, T2, f)
        S, S2 = smash(Y, X), smash(Y, X2)
        sf = gd.from_function(S.carrier, S2.carrier,
                              lambda p: (Y.point, X2.point) if f(p[1]) == X2.point else (p[0], f(p[1])))
        rep.check(rho2.compose(Tf) == sf.compose(rho), "naturality in X", ())
    return rep


def hom_seq(V: GroundObject, D: LamSeq) -> LamSeq:
    """V̲(V, D) : k ↦ maps V → D(k), stored as tuples indexed by V's labels."""
    levels = [gd.finset(product(D.levels[k].labels, repeat=V.size)) for k in range(D.N + 1)]

    def action(lam: Inj, fs):
        g = D.act(lam)
        return tuple(g(x) for x in fs)
    base = (D.base_point,) * V.size if D.base is not None else None
    return sq.from_action(FINSET, D.N, levels, action, base)


def phi_hom(V: GroundObject, D: LamSeq, X: BasedObject) -> GroundMorphism:
    """φ : V̲(V, D) ⊗_Λ X^{⊗*} → V̲(V, D ⊗_Λ X^{⊗*}), evaluation in each v."""
    if V.tag is not FINSET or D.tag is not FINSET:
        raise gd.TagMismatch("φ is defined over FINSET only")
    H = hom_seq(V, D)
    S = pr.tensor_lambda(H, X)
    DX = pr.tensor_lambda(D, X)
    target = gd.finset(product(DX.carrier.labels, repeat=V.size))
    return gd.from_function(S.carrier, target, lambda z: _phi_k(DX, z))


def _phi_k(DX: pr.LambdaTensor, raw):
    k, fs, xs = raw
    return tuple(DX.normal_form((k, d, tuple(xs))) for d in fs)


def check_phi_hom(V: GroundObject, D: LamSeq, X: BasedObject,
                  f: GroundMorphism | None = None, X2: BasedObject | None = None) -> Report:
    """Σ_k-equivariance of the components, constancy on classes, naturality in X."""
    rep = Report("φ : V̲(V,D) ⊗_Λ X^* → V̲(V, D ⊗_Λ X^*)")
    H = hom_seq(V, D)
    S = pr.tensor_lambda(H, X)
    DX = pr.tensor_lambda(D, X)
    phi = phi_hom(V, D, X)
    for k in range(D.N + 1):
        for tau in cb.enumerate_morphisms(k, k, "Σ"):
            for fs in H.levels[k].labels:
                for xs in product(X.carrier.labels, repeat=k):
                    rep.check(_phi_k(DX, (k, H.act(tau)(fs), xs)) == _phi_k(DX, (k, fs, cb.permute_entries(tau, xs))),
                              "Σ_k-equivariance", (f"k={k}", str(tau.table), gd.fmt_label(fs), gd.fmt_label(xs)))
    for raw in pr._tensor_raw(H, X):
        rep.check(_phi_k(DX, raw) == phi(S.normal_form(raw)), "well-defined on classes", (gd.fmt_label(raw),))
    if f is not None:
        S2 = pr.tensor_lambda(H, X2)
        DX2 = pr.tensor_lambda(D, X2)
        phi2 = phi_hom(V, D, X2)
        Sf = pr.tensor_lambda_map(S, S2, f)
        DXf = pr.tensor_lambda_map(DX, DX2, f)
        post = gd.from_function(phi.target, phi2.target, lambda t: tuple(DXf(z) for z in t))
        rep.check(phi2.compose(Sf) == post.compose(phi), "naturality in X", ())
    return rep
