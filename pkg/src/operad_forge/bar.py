"""Two-sided bar constructions B_q(M, C, X) as truncated simplicial objects.

Three forms are built independently:

* ``monadic``:      M̄ C̄^q X, nested terms of the monad;
* ``mixed``:        (M ⊙ C^{⊙q}) ⊗_Λ X^{⊗*}, iterated Kelly products tensored with X;
* ``monoidal_i0``:  M ⊙ C^{⊙q} ⊙ i0X, concentrated in sequence level 0.

Faces: d_0 uses the right action of M, d_i (0 < i < q) the product of C on the
i-th and (i+1)-st copies, d_q the algebra structure.  Degeneracies s_i insert
the unit after the i-th copy.  Weights bound every level as in ``algebras``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import combinat as cb
from . import ground as gd
from . import products as pr
from .algebras import (AlgebraStructure, ModuleStructure, Monad, Weighted, _kmap, _kelly_level,
                       _split_blocks, apply_seq, fmap, module_from_algebra)
from .combinat import Inj
from .ground import FINSET, FINVEC, GroundMorphism, GroundObject
from .operads import to_monoid
from .seq import Report

FORMS = ("monoidal_i0", "mixed", "monadic")


class BarError(ValueError):
    pass


class SimplicialLevels:
    """Carriers ``level[q]`` for q ≤ Q with ``face[q][i]`` : B_q → B_{q-1} and ``degeneracy[q][i]`` : B_q → B_{q+1}."""

    def __init__(self, Q: int, level: list, face: dict, degeneracy: dict, form: str = "", seqs: list | None = None):
        self.Q, self.level, self.face, self.degeneracy = Q, level, face, degeneracy
        self.form = form
        self.seqs = seqs

    @property
    def tag(self):
        return self.level[0].tag

    def sizes(self) -> list:
        return [L.size for L in self.level]

    def with_face_entry(self, q: int, i: int, x, value) -> "SimplicialLevels":
        """Copy with one value of d_i on B_q replaced (mutation fixtures)."""
        face = {k: dict(v) for k, v in self.face.items()}
        face[q][i] = face[q][i].with_entry(x, value)
        return SimplicialLevels(self.Q, self.level, face, self.degeneracy, self.form, self.seqs)


def _carrier(L) -> GroundObject:
    return L.carrier if hasattr(L, "carrier") else L


def validate_simplicial(S: SimplicialLevels) -> Report:
    """Every simplicial identity among the stored maps."""
    rep = Report(f"simplicial {S.form}".strip())
    d, s, Q = S.face, S.degeneracy, S.Q
    for q in range(2, Q + 1):
        for j in range(q + 1):
            for i in range(j):
                rep.check(d[q - 1][i].compose(d[q][j]) == d[q - 1][j - 1].compose(d[q][i]),
                          "d_i d_j = d_{j-1} d_i", (f"q={q}", f"i={i}", f"j={j}"))
    for q in range(0, Q - 1):
        for j in range(q + 1):
            for i in range(j + 1):
                rep.check(s[q + 1][i].compose(s[q][j]) == s[q + 1][j + 1].compose(s[q][i]),
                          "s_i s_j = s_{j+1} s_i", (f"q={q}", f"i={i}", f"j={j}"))
    for q in range(0, Q):
        ident = GroundMorphism(_carrier(S.level[q]), _carrier(S.level[q]), _identity_data(_carrier(S.level[q])), check=False)
        for j in range(q + 1):
            for i in range(q + 2):
                lhs = d[q + 1][i].compose(s[q][j])
                if i < j:
                    rhs = s[q - 1][j - 1].compose(d[q][i])
                    rel = "d_i s_j = s_{j-1} d_i"
                elif i in (j, j + 1):
                    rhs = ident
                    rel = "d_j s_j = d_{j+1} s_j = id"
                else:
                    rhs = s[q - 1][j].compose(d[q][i - 1])
                    rel = "d_i s_j = s_j d_{i-1}"
                rep.check(lhs == rhs, rel, (f"q={q}", f"i={i}", f"j={j}"))
    return rep


def _identity_data(A: GroundObject) -> list:
    return gd.identity(A).data


# the monadic form


def _monadic(Mo: ModuleStructure, A: AlgebraStructure, Q: int) -> SimplicialLevels:
    C = A.C
    T = Monad(C)
    Ys = [A.X]
    for _ in range(Q):
        Ys.append(T(Ys[-1]))
    B = [apply_seq(Mo.M, Ys[q], C.N) for q in range(Q + 1)]

    F: dict = {}

    def inner_face(p: int, r: int) -> GroundMorphism:
        """Y_p → Y_{p-1}: μ at depth r, or θ when it reaches the bottom."""
        if (p, r) not in F:
            if r > 0:
                F[(p, r)] = fmap(Ys[p], Ys[p - 1], inner_face(p - 1, r - 1))
            elif p == 1:
                F[(p, r)] = A.theta
            else:
                F[(p, r)] = T.mu(Ys[p - 1], Ys[p])
        return F[(p, r)]

    G: dict = {}

    def inner_degen(p: int, r: int) -> GroundMorphism:
        """Y_p → Y_{p+1}: η inserted at depth r."""
        if (p, r) not in G:
            if r > 0:
                G[(p, r)] = fmap(Ys[p], Ys[p + 1], inner_degen(p - 1, r - 1))
            else:
                G[(p, r)] = T.eta(Ys[p], Ys[p + 1])
        return G[(p, r)]

    def rho_face(q: int) -> GroundMorphism:
        Bq, Bp = B[q], B[q - 1]
        P = Mo.product

        def h(z):
            k, m, zs = z
            J = tuple(zi[0] for zi in zs)
            m2 = Mo.act(P.normal_form((k, m, (J, tuple(zi[1] for zi in zs), tuple(range(1, sum(J) + 1))))))
            return Bp.term(sum(J), m2, tuple(y for zi in zs for y in zi[2]))
        return gd.from_function(Bq.carrier, Bp.carrier, h)

    face = {q: {} for q in range(1, Q + 1)}
    for q in range(1, Q + 1):
        face[q][0] = rho_face(q)
        for i in range(1, q + 1):
            face[q][i] = fmap(B[q], B[q - 1], inner_face(q, i - 1))
    degen = {q: {} for q in range(Q)}
    for q in range(Q):
        for i in range(q + 1):
            degen[q][i] = fmap(B[q], B[q + 1], inner_degen(q, i))
    return SimplicialLevels(Q, B, face, degen, "monadic")


# iterated Kelly products P_q = (..(M ⊙ C) ⊙ ..) ⊙ C


class _Powers:
    """P_q with the maps R (action), Mu (product of adjacent copies) and S (unit insertion)."""

    def __init__(self, Mo: ModuleStructure, Q: int):
        self.Mo, self.C = Mo, Mo.C
        CC = self.C.C
        self.P = [Mo.M]
        for _ in range(Q + 1):
            self.P.append(pr.kelly(self.P[-1], CC))
        self.monoid = to_monoid(self.C)
        self._assoc: dict = {}

    def assoc(self, q: int):
        """(P_{q-2} ⊙ C) ⊙ C → P_{q-2} ⊙ (C ⊙ C)."""
        if q not in self._assoc:
            CC = self.monoid.product
            right = pr.kelly(self.P[q - 2], CC)
            self._assoc[q] = (pr.kelly_assoc(self.P[q - 1], self.P[q], CC, right), right)
        return self._assoc[q]

    def R(self, q: int, n: int, p):
        """ρ ⊙ id : P_q → P_{q-1}."""
        if q == 1:
            return self.Mo.act(p)
        return _kmap(self.P[q - 1], p, f=lambda k, y: self.R(q - 1, k, y))

    def Mu(self, q: int, i: int, n: int, p):
        """μ on copies i, i+1 : P_q → P_{q-1}."""
        if i + 1 == q:
            a, _ = self.assoc(q)
            mu = self.monoid.mu
            return _kmap(self.P[q - 1], a[n](p), g=lambda j, y: mu[_kelly_level(y)](y))
        return _kmap(self.P[q - 1], p, f=lambda k, y: self.Mu(q - 1, i, k, y))

    def S(self, q: int, i: int, n: int, p):
        """Unit inserted after copy i : P_q → P_{q+1}."""
        if i == q:
            return self.P[q + 1].normal_form((n, p, ((1,) * n, (self.C.unit,) * n, tuple(range(1, n + 1)))))
        return _kmap(self.P[q + 1], p, f=lambda k, y: self.S(q - 1, i, k, y))


def _mixed(Mo: ModuleStructure, A: AlgebraStructure, Q: int, pw: _Powers) -> SimplicialLevels:
    N = A.C.N
    B = [apply_seq(pw.P[q], A.X, N) for q in range(Q + 1)]
    CX = A.CX

    def theta_face(q: int):
        Bp = B[q - 1]

        def h(z):
            n, (k, p, (J, cs, a)), xs = z
            ys = cb.permute_entries(Inj(n, n, a).inverse(), xs)
            zs = tuple(A.theta(CX.term(j, c, blk)) for j, c, blk in zip(J, cs, _split_blocks(J, ys)))
            return Bp.term(k, p, zs)
        return h

    def lift(q: int, fn: Callable, tgt: Weighted) -> GroundMorphism:
        return gd.from_function(B[q].carrier, tgt.carrier, lambda z: tgt.term(z[0], fn(z[0], z[1]), z[2]))

    face = {q: {} for q in range(1, Q + 1)}
    for q in range(1, Q + 1):
        face[q][0] = lift(q, lambda n, p, q=q: pw.R(q, n, p), B[q - 1])
        for i in range(1, q):
            face[q][i] = lift(q, lambda n, p, q=q, i=i: pw.Mu(q, i, n, p), B[q - 1])
        face[q][q] = gd.from_function(B[q].carrier, B[q - 1].carrier, theta_face(q))
    degen = {q: {} for q in range(Q)}
    for q in range(Q):
        for i in range(q + 1):
            degen[q][i] = lift(q, lambda n, p, q=q, i=i: pw.S(q, i, n, p), B[q + 1])
    return SimplicialLevels(Q, B, face, degen, "mixed", pw.P[: Q + 1])


def _monoidal(Mo: ModuleStructure, A: AlgebraStructure, Q: int, pw: _Powers) -> SimplicialLevels:
    N = A.C.N
    L = module_from_algebra(A)
    X = A.X
    K = [pr.kelly(pw.P[q], L.M) for q in range(Q + 1)]
    for q, Kq in enumerate(K):
        for n in range(1, N + 1):
            if Kq.levels[n].size:
                raise BarError(f"B_{q} has elements above sequence level 0")

    def weight(x) -> int:
        return sum(X.weight[v] for v in x[2][1])

    B = []
    for Kq in K:
        keep = {x: weight(x) for x in Kq.levels[0].labels if weight(x) <= N}
        carrier = gd.finset(gd.sort_labels(keep))
        base = GroundMorphism(gd.unit(FINSET), carrier, [Kq.base_point])
        B.append(Weighted(carrier, base, keep, N))

    CL = pr.kelly(A.C.C, L.M)

    def theta_face(q: int):
        right = pr.kelly(pw.P[q - 1], CL)
        a = pr.kelly_assoc(pw.P[q], K[q], CL, right)
        return lambda x: _kmap(K[q - 1], a[0](x), g=lambda j, y: L.act(y))

    def lift(q: int, fn: Callable, tgt: int) -> GroundMorphism:
        return gd.from_function(B[q].carrier, B[tgt].carrier, lambda x: _kmap(K[tgt], x, f=fn))

    face = {q: {} for q in range(1, Q + 1)}
    for q in range(1, Q + 1):
        face[q][0] = lift(q, lambda n, p, q=q: pw.R(q, n, p), q - 1)
        for i in range(1, q):
            face[q][i] = lift(q, lambda n, p, q=q, i=i: pw.Mu(q, i, n, p), q - 1)
        face[q][q] = gd.from_function(B[q].carrier, B[q - 1].carrier, theta_face(q))
    degen = {q: {} for q in range(Q)}
    for q in range(Q):
        for i in range(q + 1):
            degen[q][i] = lift(q, lambda n, p, q=q, i=i: pw.S(q, i, n, p), q + 1)
    return SimplicialLevels(Q, B, face, degen, "monoidal_i0", K)


def bar(Mo: ModuleStructure, A: AlgebraStructure, form: str = "monadic", Q: int = 2,
        _powers: _Powers | None = None) -> SimplicialLevels:
    """B_*(M, C, X) up to simplicial degree Q; C is the operad of the module and the algebra."""
    if Mo.side != "right":
        raise BarError("the bar construction needs a right module")
    if Mo.C is not A.C and Mo.C.name != A.C.name:
        raise BarError("module and algebra are over different operads")
    if form == "monadic":
        return _monadic(Mo, A, Q)
    pw = _powers or _Powers(Mo, Q)
    if form == "mixed":
        return _mixed(Mo, A, Q, pw)
    if form == "monoidal_i0":
        return _monoidal(Mo, A, Q, pw)
    raise BarError(f"unknown form {form}")


# comparison


def _mixed_to_monadic(Mo: ModuleStructure, A: AlgebraStructure, Q: int, target: SimplicialLevels) -> list:
    T = Monad(A.C)
    Ys = [A.X]
    for _ in range(Q):
        Ys.append(T(Ys[-1]))

    def conv(q: int, depth: int, n: int, p, ys):
        if q == 0:
            return target.level[depth].term(n, p, ys)
        k, p2, (J, cs, a) = p
        ys2 = cb.permute_entries(Inj(n, n, a).inverse(), ys)
        Y = Ys[depth + 1]
        zs = tuple(Y.term(j, c, blk) for j, c, blk in zip(J, cs, _split_blocks(J, ys2)))
        return conv(q - 1, depth + 1, k, p2, zs)

    return [lambda z, q=q: conv(q, 0, z[0], z[1], z[2]) for q in range(Q + 1)]


def _identifications(Mo: ModuleStructure, A: AlgebraStructure, Q: int, forms: dict) -> tuple:
    S0, S1, S2 = forms["monoidal_i0"], forms["mixed"], forms["monadic"]
    conv = _mixed_to_monadic(Mo, A, Q, S2)
    phi1 = [gd.from_function(S0.level[q].carrier, S1.level[q].carrier,
                             lambda x, q=q: S1.level[q].term(x[0], x[1], tuple(x[2][1]))) for q in range(Q + 1)]
    phi2 = [gd.from_function(S1.level[q].carrier, S2.level[q].carrier, conv[q]) for q in range(Q + 1)]
    return phi1, phi2


def compare_bars(Mo: ModuleStructure, A: AlgebraStructure, Q: int = 2, forms: dict | None = None) -> Report:
    """Levelwise isomorphisms monoidal_i0 → mixed → monadic commuting with all faces and degeneracies."""
    rep = Report("bar comparison")
    if forms is None:
        pw = _Powers(Mo, Q)
        forms = {f: bar(Mo, A, f, Q, pw) for f in FORMS}
    S0, S1, S2 = forms["monoidal_i0"], forms["mixed"], forms["monadic"]
    phi1, phi2 = _identifications(Mo, A, Q, forms)
    for name, phi, src, tgt in (("monoidal→mixed", phi1, S0, S1), ("mixed→monadic", phi2, S1, S2)):
        for q in range(Q + 1):
            rep.check(phi[q].is_iso(), f"{name} bijective", (f"q={q}", f"{phi[q].source.size}→{phi[q].target.size}"))
        _check_simplicial_map(rep, name, phi, src, tgt, Q)
    rep.notes.append("sizes " + ", ".join(f"{f}={forms[f].sizes()}" for f in FORMS))
    return rep


def _check_simplicial_map(rep: Report, name: str, phi: list, src: SimplicialLevels, tgt: SimplicialLevels, Q: int):
    for q in range(1, Q + 1):
        for i in range(q + 1):
            rep.check(phi[q - 1].compose(src.face[q][i]) == tgt.face[q][i].compose(phi[q]),
                      f"{name} commutes with d_i", (f"q={q}", f"i={i}"))
    for q in range(Q):
        for i in range(q + 1):
            rep.check(phi[q + 1].compose(src.degeneracy[q][i]) == tgt.degeneracy[q][i].compose(phi[q]),
                      f"{name} commutes with s_i", (f"q={q}", f"i={i}"))


def bar_map(S: SimplicialLevels, T: SimplicialLevels, f: Callable) -> list:
    """Levelwise maps B_q(M, C, X) → B_q(M, C, X') induced by a based map f : X → X'."""
    if S.form != T.form or S.Q != T.Q:
        raise BarError("bar_map needs two bar constructions of the same form and degree")
    out = []
    for q in range(S.Q + 1):
        src, tgt = S.level[q], T.level[q]
        if S.form == "mixed":
            out.append(gd.from_function(src.carrier, tgt.carrier,
                                        lambda z, tgt=tgt: tgt.term(z[0], z[1], tuple(f(x) for x in z[2]))))
        elif S.form == "monadic":
            chain_s, chain_t = [src], [tgt]
            for _ in range(q + 1):
                chain_s.append(chain_s[-1].inner)
                chain_t.append(chain_t[-1].inner)
            g = gd.from_function(chain_s[-1].carrier, chain_t[-1].carrier, f)
            for Ys, Yt in zip(reversed(chain_s[:-1]), reversed(chain_t[:-1])):
                g = fmap(Ys, Yt, g)
            out.append(g)
        else:
            K = T.seqs[q]
            out.append(gd.from_function(src.carrier, tgt.carrier,
                                        lambda x, K=K: _kmap(K, x, g=lambda j, y: f(y))))
    return out


def check_bar_naturality(Mo: ModuleStructure, A: AlgebraStructure, B: AlgebraStructure, f: Callable,
                         Q: int = 2) -> Report:
    """An algebra map f : A → B induces simplicial maps on every form, and the identifications are natural in f."""
    rep = Report("bar naturality")
    pw = _Powers(Mo, Q)
    SA = {form: bar(Mo, A, form, Q, pw) for form in FORMS}
    SB = {form: bar(Mo, B, form, Q, pw) for form in FORMS}
    maps = {form: bar_map(SA[form], SB[form], f) for form in FORMS}
    for form in FORMS:
        _check_simplicial_map(rep, f"f_* on {form}", maps[form], SA[form], SB[form], Q)
    pa, pb = _identifications(Mo, A, Q, SA), _identifications(Mo, B, Q, SB)
    for name, k, src, tgt in (("monoidal→mixed", 0, "monoidal_i0", "mixed"), ("mixed→monadic", 1, "mixed", "monadic")):
        for q in range(Q + 1):
            rep.check(pb[k][q].compose(maps[src][q]) == maps[tgt][q].compose(pa[k][q]),
                      f"{name} natural in X", (f"q={q}",))
    return rep


# chain complexes


def linearize_simplicial(S: SimplicialLevels) -> SimplicialLevels:
    level = [gd.linearize(_carrier(L)) for L in S.level]
    face = {q: {i: gd.linearize_mor(f) for i, f in fs.items()} for q, fs in S.face.items()}
    degen = {q: {i: gd.linearize_mor(f) for i, f in fs.items()} for q, fs in S.degeneracy.items()}
    return SimplicialLevels(S.Q, level, face, degen, S.form)


class ChainComplex:
    """Carriers C_q (q ≤ Q) and ∂_q = Σ (-1)^i d_i : C_q → C_{q-1}."""

    def __init__(self, carriers: list, diffs: dict):
        self.carriers, self.diffs = carriers, diffs
        self.Q = len(carriers) - 1

    def dims(self) -> list:
        return [C.dim for C in self.carriers]

    def ranks(self) -> dict:
        return {q: gd.rank(d.matrix()) for q, d in self.diffs.items()}

    def check_dd(self) -> Report:
        rep = Report("∂∂ = 0")
        for q in range(2, self.Q + 1):
            prod = gd.mat_mul(self.diffs[q - 1].matrix(), self.diffs[q].matrix())
            rep.check(all(c == 0 for row in prod for c in row), "∂_{q-1}∂_q = 0", (f"q={q}",))
        return rep

    def betti(self) -> list:
        """Betti numbers for q < Q; degree Q is reported as unknown (truncated)."""
        r = self.ranks()
        out = []
        for q in range(self.Q + 1):
            if q == self.Q:
                out.append("unknown (truncated)")
                continue
            out.append(self.carriers[q].dim - r.get(q, 0) - r.get(q + 1, 0))
        return out

    def euler(self) -> int:
        return sum((-1) ** q * C.dim for q, C in enumerate(self.carriers))

    def euler_from_homology(self) -> int:
        """Alternating sum of the truncated homology, with ker ∂_Q at the top."""
        r = self.ranks()
        tot = 0
        for q in range(self.Q + 1):
            h = self.carriers[q].dim - r.get(q, 0) - (r.get(q + 1, 0) if q < self.Q else 0)
            tot += (-1) ** q * h
        return tot


def chain_complex(S: SimplicialLevels) -> ChainComplex:
    if S.tag is not FINVEC:
        raise gd.TagMismatch("chain complexes need FINVEC levels; linearize first")
    carriers = [_carrier(L) for L in S.level]
    diffs = {}
    for q in range(1, S.Q + 1):
        faces = S.face[q]

        def col(x, faces=faces):
            v: dict = {}
            for i, f in faces.items():
                gd.vec_add(v, f.vec(x), Fraction((-1) ** i))
            return v
        diffs[q] = gd.from_vectors(carriers[q], carriers[q - 1], col)
    return ChainComplex(carriers, diffs)
