"""Truncated Σ- and Λ-sequences with generator-based actions.

A sequence stores, for every level n ≤ N, a ground object together with the
action of each adjacent transposition s_i ∈ Σ_n and, for Λ-sequences, of each
ordered injection σ_i : n-1 → n.  The action of an arbitrary based injection is
assembled from these through the factorization λ = π ∘ ι with ι the standard
inclusion, and functoriality is checked exhaustively by ``validate``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import combinat as cb
from . import ground as gd
from .ground import BasedObject, GroundMorphism, GroundObject, GroundTag

DEFAULT_N = 3
MAX_N = 5


class TruncationError(ValueError):
    """Raised when a computation needs a level above the truncation bound."""


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class Failure:
    relation: str
    where: tuple
    detail: str = ""

    def __str__(self) -> str:
        loc = ", ".join(str(w) for w in self.where)
        return f"{self.relation} failed at [{loc}]" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    """Outcome of a validator: failures are data, never exceptions."""

    subject: str
    failures: list = field(default_factory=list)
    checked: int = 0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, relation: str, where: tuple, detail: str = "") -> None:
        self.failures.append(Failure(relation, tuple(where), detail))

    def check(self, cond: bool, relation: str, where: tuple, detail: str = "") -> bool:
        self.checked += 1
        if not cond:
            self.fail(relation, where, detail)
        return cond

    def merge(self, other: "Report") -> "Report":
        self.failures.extend(other.failures)
        self.checked += other.checked
        self.notes.extend(other.notes)
        return self

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list:
        head = f"{self.subject}: {'ok' if self.ok else 'FAILED'} ({self.checked} checks)"
        return [head] + [f"  {f}" for f in self.failures] + [f"  note: {n}" for n in self.notes]

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [{"relation": f.relation, "where": [str(w) for w in f.where], "detail": f.detail} for f in self.failures],
            "notes": list(self.notes),
        }


def check_level(N: int) -> int:
    if not 0 <= N <= MAX_N:
        raise TruncationError(f"truncation level {N} outside 0..{MAX_N}")
    return N


class SymSeq:
    """A contravariant functor on Σ truncated at N."""

    def __init__(self, tag: GroundTag, N: int, levels: Sequence[GroundObject], swaps: dict):
        self.tag = tag
        self.N = check_level(N)
        self.levels = tuple(levels)
        if len(self.levels) != N + 1:
            raise SequenceError(f"expected {N + 1} levels, got {len(self.levels)}")
        for L in self.levels:
            if L.tag != tag:
                raise gd.TagMismatch("level tag differs from sequence tag")
        self.swaps = dict(swaps)
        for n in range(2, N + 1):
            for i in range(1, n):
                f = self.swaps.get((n, i))
                if f is None:
                    raise SequenceError(f"missing s_{i} action at level {n}")
                if f.source != self.levels[n] or f.target != self.levels[n]:
                    raise SequenceError(f"s_{i} action at level {n} has wrong endpoints")
        self._memo: dict = {}

    def level(self, n: int) -> GroundObject:
        if n > self.N:
            raise TruncationError(f"level {n} exceeds truncation N={self.N}")
        return self.levels[n]

    def __getitem__(self, n: int) -> GroundObject:
        return self.level(n)

    def sizes(self) -> list:
        return [L.size for L in self.levels]

    def act_perm(self, sigma: cb.Inj) -> GroundMorphism:
        n = sigma.n
        if n > self.N:
            raise TruncationError(f"level {n} exceeds truncation N={self.N}")
        key = ("p", sigma.table)
        out = self._memo.get(key)
        if out is None:
            out = gd.identity(self.levels[n])
            for i in cb.adjacent_word(sigma):
                out = self.swaps[(n, i)].compose(out)
            self._memo[key] = out
        return out

    act = act_perm

    def forget(self) -> "SymSeq":
        return SymSeq(self.tag, self.N, self.levels, self.swaps)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tag.value}, N={self.N}, sizes={self.sizes()})"


class LamSeq(SymSeq):
    """A contravariant functor on Λ truncated at N, with a base map I → D(0)."""

    def __init__(self, tag: GroundTag, N: int, levels: Sequence[GroundObject], swaps: dict, degs: dict,
                 base: GroundMorphism | None):
        super().__init__(tag, N, levels, swaps)
        self.degs = dict(degs)
        for n in range(1, N + 1):
            for i in range(1, n + 1):
                f = self.degs.get((n, i))
                if f is None:
                    raise SequenceError(f"missing σ_{i} action at level {n}")
                if f.source != self.levels[n] or f.target != self.levels[n - 1]:
                    raise SequenceError(f"σ_{i} action at level {n} has wrong endpoints")
        if base is not None and (base.source != gd.unit(tag) or base.target != self.levels[0]):
            raise SequenceError("base map must go from the unit to level 0")
        self.base = base

    def act(self, lam: cb.Inj) -> GroundMorphism:
        """D(λ) : D(n) → D(m) for λ : m → n."""
        if lam.n > self.N:
            raise TruncationError(f"level {lam.n} exceeds truncation N={self.N}")
        if lam.is_perm:
            return self.act_perm(lam)
        key = ("l", lam.m, lam.n, lam.table)
        out = self._memo.get(key)
        if out is None:
            out = self.act_perm(cb.standard_factor(lam))
            for n in range(lam.n, lam.m, -1):
                out = self.degs[(n, n)].compose(out)
            self._memo[key] = out
        return out

    @property
    def is_unital(self) -> bool:
        return self.base is not None and self.levels[0] == gd.unit(self.tag) and self.base.is_iso()

    @property
    def base_point(self):
        return self.base.data[0]

    def forget(self) -> SymSeq:
        return SymSeq(self.tag, self.N, self.levels, self.swaps)

    def p0(self) -> BasedObject:
        return p0(self)

    def replace(self, swaps: dict | None = None, degs: dict | None = None, base=None) -> "LamSeq":
        s = dict(self.swaps)
        s.update(swaps or {})
        d = dict(self.degs)
        d.update(degs or {})
        return LamSeq(self.tag, self.N, self.levels, s, d, base if base is not None else self.base)


def from_action(tag: GroundTag, N: int, levels: Sequence[GroundObject], action: Callable, base=None) -> LamSeq:
    """Build a Λ-sequence from a pointwise action ``action(λ, x)``.

    ``action`` receives λ : m → n and an element of level n and returns the
    image in level m (a label, or a sparse vector for FINVEC).  Only generator
    tables are stored.
    """
    levels = tuple(levels)
    swaps, degs = {}, {}
    for n in range(N + 1):
        for i in range(1, n):
            s = cb.transposition(n, i)
            swaps[(n, i)] = _gen(levels[n], levels[n], s, action)
        for i in range(1, n + 1):
            d = cb.degeneracy(n, i)
            degs[(n, i)] = _gen(levels[n], levels[n - 1], d, action)
    if base is not None and not isinstance(base, GroundMorphism):
        base = gd.GroundMorphism(gd.unit(tag), levels[0], [base] if tag is gd.FINSET else [((base, Fraction(1)),)])
    return LamSeq(tag, N, levels, swaps, degs, base)


def _gen(src: GroundObject, tgt: GroundObject, lam: cb.Inj, action: Callable) -> GroundMorphism:
    return gd.from_function(src, tgt, lambda x: action(lam, x))


def from_pointwise(tag: GroundTag, N: int, levels: Sequence[GroundObject], action: Callable, base=None) -> LamSeq:
    return from_action(tag, N, levels, action, base)


# validation


def validate(D: SymSeq) -> Report:
    """Check the Coxeter relations, degeneracy coherence and exhaustive functoriality."""
    rep = Report(f"sequence {D!r}")
    N = D.N
    for n in range(2, N + 1):
        ident = gd.identity(D.levels[n])
        s = {i: D.swaps[(n, i)] for i in range(1, n)}
        for i in range(1, n):
            rep.check(s[i].compose(s[i]) == ident, "involution s_i^2 = id", (f"level {n}", f"i={i}"))
        for i in range(1, n - 1):
            a = s[i].compose(s[i + 1]).compose(s[i])
            b = s[i + 1].compose(s[i]).compose(s[i + 1])
            rep.check(a == b, "braid relation", (f"level {n}", f"i={i}"))
        for i in range(1, n):
            for j in range(i + 2, n):
                rep.check(s[i].compose(s[j]) == s[j].compose(s[i]), "commutation relation",
                          (f"level {n}", f"i={i}", f"j={j}"))
    if not rep.ok:
        return rep
    lam = isinstance(D, LamSeq)
    if lam:
        for n in range(1, N + 1):
            for i in range(1, n + 1):
                rep.check(D.degs[(n, i)] == D.act(cb.degeneracy(n, i)), "degeneracy coherence",
                          (f"level {n}", f"σ_{i}"))
    cls = "Λ" if lam else "Σ"
    for n in range(N + 1):
        for m in (range(n + 1) if lam else (n,)):
            gs = cb.enumerate_morphisms(m, n, cls)
            for l in (range(m + 1) if lam else (m,)):
                fs = cb.enumerate_morphisms(l, m, cls)
                for g in gs:
                    ag = D.act(g)
                    for f in fs:
                        ok = D.act(g.compose(f)) == D.act(f).compose(ag)
                        where = (f"levels {l}->{m}->{n}", f"g={list(g.table)}", f"f={list(f.table)}")
                        if not rep.check(ok, "functoriality", where) and len(rep.failures) > 20:
                            return rep
    if lam:
        if D.base is None:
            rep.notes.append("no base map")
    return rep


# special sequences


def empty_levels(tag: GroundTag, N: int) -> list:
    return [gd.empty(tag) for _ in range(N + 1)]


def const_seq(tag: GroundTag, N: int, levels: Sequence[GroundObject], base=None) -> LamSeq:
    """Λ-sequence whose generator actions are all identities on a fixed label set.

    Only meaningful when every nonempty level carries the same labels or is
    connected by identity-like degeneracies; used for the unit sequences.
    """
    swaps = {(n, i): gd.identity(levels[n]) for n in range(N + 1) for i in range(1, n)}
    degs = {}
    for n in range(1, N + 1):
        for i in range(1, n + 1):
            degs[(n, i)] = gd.GroundMorphism(levels[n], levels[n - 1],
                                             _same_label_data(levels[n], levels[n - 1]))
    return LamSeq(tag, N, levels, swaps, degs, base)


def _same_label_data(src: GroundObject, tgt: GroundObject) -> list:
    if src.tag is gd.FINSET:
        return [x for x in src.labels]
    return [((x, Fraction(1)),) for x in src.labels]


def I0(tag: GroundTag = gd.FINSET, N: int = DEFAULT_N) -> LamSeq:
    """The unit for Day convolution: I at level 0, empty above."""
    return embed(gd.unit_based(tag), "i0", N)


def I1(tag: GroundTag = gd.FINSET, N: int = DEFAULT_N) -> LamSeq:
    """The unit for the Kelly product: I at levels 0 and 1, empty above."""
    return embed(gd.unit_based(tag), "i1", N)


def embed(X: BasedObject, mode: str = "i0", N: int = DEFAULT_N) -> LamSeq:
    """i0X (X at level 0) or i1X (X at levels 0 and 1, degeneracy the identity)."""
    check_level(N)
    tag = X.tag
    levels = empty_levels(tag, N)
    levels[0] = X.carrier
    if mode == "i1":
        if N >= 1:
            levels[1] = X.carrier
    elif mode != "i0":
        raise SequenceError(f"unknown embedding {mode}")
    return const_seq(tag, N, levels, X.base)


def p0(D: LamSeq) -> BasedObject:
    """The level-0 object with its base map."""
    if D.base is None:
        raise SequenceError("p0 needs a base map")
    return BasedObject(D.levels[0], D.base)


# morphisms


class SeqMorphism:
    def __init__(self, source: SymSeq, target: SymSeq, maps: Sequence[GroundMorphism]):
        if source.N != target.N:
            raise SequenceError("truncation mismatch")
        self.source, self.target = source, target
        self.maps = tuple(maps)
        if len(self.maps) != source.N + 1:
            raise SequenceError("one map per level required")
        for n, f in enumerate(self.maps):
            if f.source != source.levels[n] or f.target != target.levels[n]:
                raise SequenceError(f"component at level {n} has wrong endpoints")

    def __getitem__(self, n: int) -> GroundMorphism:
        return self.maps[n]

    def compose(self, other: "SeqMorphism") -> "SeqMorphism":
        return SeqMorphism(other.source, self.target, [f.compose(g) for f, g in zip(self.maps, other.maps)])

    def is_iso(self) -> bool:
        return all(f.is_iso() for f in self.maps)

    def inverse(self) -> "SeqMorphism":
        return SeqMorphism(self.target, self.source, [f.inverse() for f in self.maps])

    def __eq__(self, other) -> bool:
        return isinstance(other, SeqMorphism) and self.maps == other.maps

    def __hash__(self) -> int:
        return hash(self.maps)


def identity_morphism(D: SymSeq) -> SeqMorphism:
    return SeqMorphism(D, D, [gd.identity(L) for L in D.levels])


def check_morphism(phi: SeqMorphism, report: Report | None = None) -> Report:
    """Naturality against every generator, and compatibility with base maps."""
    rep = report or Report("sequence morphism")
    A, B = phi.source, phi.target
    for n in range(2, A.N + 1):
        for i in range(1, n):
            rep.check(phi[n].compose(A.swaps[(n, i)]) == B.swaps[(n, i)].compose(phi[n]),
                      "naturality for s_i", (f"level {n}", f"i={i}"))
    if isinstance(A, LamSeq) and isinstance(B, LamSeq):
        for n in range(1, A.N + 1):
            for i in range(1, n + 1):
                rep.check(phi[n - 1].compose(A.degs[(n, i)]) == B.degs[(n, i)].compose(phi[n]),
                          "naturality for σ_i", (f"level {n}", f"i={i}"))
        if A.base is not None and B.base is not None:
            rep.check(phi[0].compose(A.base) == B.base, "base compatibility", ("level 0",))
    return rep


def all_maps(A: GroundObject, B: GroundObject) -> Iterable[GroundMorphism]:
    """Every FINSET map A → B."""
    for data in product(B.labels, repeat=A.size):
        yield GroundMorphism(A, B, data, check=False)


def enumerate_morphisms(A: LamSeq, B: LamSeq) -> list:
    """Brute-force list of all Λ-sequence morphisms under I (FINSET, tiny sizes)."""
    out = []
    for maps in product(*[list(all_maps(a, b)) for a, b in zip(A.levels, B.levels)]):
        phi = SeqMorphism(A, B, maps)
        if check_morphism(phi).ok:
            out.append(phi)
    return out


def based_maps(X: BasedObject, Y: BasedObject) -> list:
    return [f for f in all_maps(X.carrier, Y.carrier) if f.compose(X.base) == Y.base]
