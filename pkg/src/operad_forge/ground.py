"""Finite ground categories: finite sets and finite-dimensional rational vector spaces.

Objects carry an ordered tuple of labels.  A label is a string, an int, or a
tuple of labels; tuples are what the product and quotient constructions emit.
Morphisms of finite sets are stored as image tables.  Linear morphisms are
stored as sparse columns of exact ``Fraction`` entries, one column per source
basis label.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence, Union

Label = Union[str, int, tuple]


class GroundTag(Enum):
    FINSET = "FINSET"
    FINVEC = "FINVEC"


FINSET = GroundTag.FINSET
FINVEC = GroundTag.FINVEC


class GroundError(ValueError):
    pass


class TagMismatch(GroundError):
    pass


def label_key(x: Label):
    """Total order on labels: ints before strings before tuples."""
    if isinstance(x, bool):
        raise GroundError(f"boolean label {x!r}")
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(y) for y in x))
    raise GroundError(f"unsupported label {x!r}")


def label_less(a: Label, b: Label) -> bool:
    """a < b in the label order; native comparison agrees whenever it is defined."""
    try:
        return a < b
    except TypeError:
        return label_key(a) < label_key(b)


def fmt_label(x: Label) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(fmt_label(y) for y in x) + ")"
    return str(x)


def sort_labels(labels: Iterable[Label]) -> tuple:
    labels = list(labels)
    try:
        return tuple(sorted(labels))
    except TypeError:
        return tuple(sorted(labels, key=label_key))


class GroundObject:
    __slots__ = ("tag", "labels", "_index")

    def __init__(self, tag: GroundTag, labels: Iterable[Label]):
        self.tag = tag
        self.labels = tuple(labels)
        self._index = {x: i for i, x in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise GroundError("duplicate labels")

    @property
    def size(self) -> int:
        return len(self.labels)

    dim = size

    def index(self, x: Label) -> int:
        return self._index[x]

    def __contains__(self, x) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundObject) and self.tag == other.tag and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.tag, self.labels))

    def __repr__(self) -> str:
        body = ", ".join(fmt_label(x) for x in self.labels[:6])
        more = ", ..." if len(self.labels) > 6 else ""
        return f"GroundObject({self.tag.value}, [{body}{more}])"


def obj(tag: GroundTag, labels: Iterable[Label]) -> GroundObject:
    return GroundObject(tag, labels)


def finset(labels: Iterable[Label]) -> GroundObject:
    return GroundObject(FINSET, labels)


def finvec(labels: Iterable[Label]) -> GroundObject:
    return GroundObject(FINVEC, labels)


UNIT_LABEL = {FINSET: "*", FINVEC: "1"}


def unit(tag: GroundTag) -> GroundObject:
    return GroundObject(tag, (UNIT_LABEL[tag],))


def empty(tag: GroundTag) -> GroundObject:
    return GroundObject(tag, ())


def _check_same(*objs: GroundObject) -> GroundTag:
    tag = objs[0].tag
    for o in objs[1:]:
        if o.tag != tag:
            raise TagMismatch(f"{tag.value} vs {o.tag.value}")
    return tag


# sparse vectors: dict label -> Fraction with nonzero entries


def vec_add(acc: dict, v: Mapping, scale=1) -> dict:
    for k, c in v.items():
        s = acc.get(k, 0) + scale * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def vec_tensor(u: Mapping, v: Mapping) -> dict:
    return {(a, b): x * y for a, x in u.items() for b, y in v.items()}


def vec_tensor_many(vs: Sequence[Mapping]) -> dict:
    out = {(): Fraction(1)}
    for v in vs:
        out = {k + (b,): x * y for k, x in out.items() for b, y in v.items()}
    return out


class GroundMorphism:
    """An arrow of a ground category.

    For FINSET ``data[i]`` is the image of ``source.labels[i]``.  For FINVEC
    ``data[i]`` is a tuple of ``(target label, Fraction)`` pairs, the sparse
    column of the source basis vector.
    """

    __slots__ = ("source", "target", "data", "__dict__")

    def __init__(self, source: GroundObject, target: GroundObject, data: Sequence, check: bool = True):
        _check_same(source, target)
        self.source = source
        self.target = target
        self.data = tuple(data)
        if check:
            self._validate()

    def _validate(self) -> None:
        if len(self.data) != self.source.size:
            raise GroundError(f"table has {len(self.data)} entries for a source of size {self.source.size}")
        if self.tag is FINSET:
            for y in self.data:
                if y not in self.target:
                    raise GroundError(f"image {fmt_label(y)} not in target")
        else:
            for col in self.data:
                for y, c in col:
                    if y not in self.target:
                        raise GroundError(f"basis label {fmt_label(y)} not in target")
                    if not isinstance(c, Fraction) or c == 0:
                        raise GroundError("columns must hold nonzero Fractions")

    @property
    def tag(self) -> GroundTag:
        return self.source.tag

    def __call__(self, x: Label) -> Label:
        if self.tag is not FINSET:
            raise GroundError("pointwise evaluation is only defined for FINSET")
        return self.data[self.source.index(x)]

    def vec(self, x: Label) -> dict:
        """Image of the basis element or point ``x`` as a sparse vector."""
        d = self.data[self.source.index(x)]
        if self.tag is FINSET:
            return {d: Fraction(1)}
        return dict(d)

    def apply_vec(self, v: Mapping) -> dict:
        out: dict = {}
        for x, c in v.items():
            vec_add(out, self.vec(x), c)
        return out

    @cached_property
    def _table(self) -> dict:
        return dict(zip(self.source.labels, self.data))

    def as_dict(self) -> dict:
        return dict(self._table)

    def matrix(self) -> list:
        """Dense matrix, target-dim rows by source-dim columns."""
        rows = [[Fraction(0)] * self.source.size for _ in range(self.target.size)]
        for j, x in enumerate(self.source.labels):
            for y, c in self.vec(x).items():
                rows[self.target.index(y)][j] += c
        return rows

    def compose(self, other: "GroundMorphism") -> "GroundMorphism":
        """``self ∘ other``."""
        if other.target != self.source:
            raise GroundError("composition of non-composable morphisms")
        if self.tag is FINSET:
            t = self._table
            return GroundMorphism(other.source, self.target, [t[y] for y in other.data], check=False)
        cols = [_col(self.apply_vec(dict(c))) for c in other.data]
        return GroundMorphism(other.source, self.target, cols, check=False)

    __matmul__ = compose

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroundMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.data))

    def __repr__(self) -> str:
        return f"GroundMorphism({self.source.size}->{self.target.size}, {self.tag.value})"

    def is_iso(self) -> bool:
        if self.source.size != self.target.size:
            return False
        if self.tag is FINSET:
            return len(set(self.data)) == len(self.data)
        return rank(self.matrix()) == self.source.size

    def inverse(self) -> "GroundMorphism":
        if not self.is_iso():
            raise GroundError("morphism is not invertible")
        if self.tag is FINSET:
            inv = {y: x for x, y in zip(self.source.labels, self.data)}
            return GroundMorphism(self.target, self.source, [inv[y] for y in self.target.labels], check=False)
        m = self.matrix()
        inv = _invert(m)
        return from_matrix(self.target, self.source, inv)

    def with_entry(self, x: Label, image) -> "GroundMorphism":
        """Copy with the image of one source element replaced."""
        data = list(self.data)
        i = self.source.index(x)
        data[i] = image if self.tag is FINSET else _col(image)
        return GroundMorphism(self.source, self.target, data)


def _col(v: Mapping) -> tuple:
    return tuple(sorted(((k, Fraction(c)) for k, c in v.items() if c), key=lambda kc: label_key(kc[0])))


def identity(A: GroundObject) -> GroundMorphism:
    if A.tag is FINSET:
        return GroundMorphism(A, A, A.labels, check=False)
    return GroundMorphism(A, A, [((x, Fraction(1)),) for x in A.labels], check=False)


def from_function(A: GroundObject, B: GroundObject, fn: Callable) -> GroundMorphism:
    """Build a morphism from a function on source labels.

    For FINSET ``fn`` returns a target label.  For FINVEC it may return a
    target label (a basis vector) or a sparse vector mapping.
    """
    _check_same(A, B)
    if A.tag is FINSET:
        return GroundMorphism(A, B, [fn(x) for x in A.labels])
    cols = []
    for x in A.labels:
        v = fn(x)
        cols.append(_col(v) if isinstance(v, Mapping) else ((v, Fraction(1)),))
    return GroundMorphism(A, B, cols)


def from_vectors(A: GroundObject, B: GroundObject, fn: Callable[[Label], Mapping]) -> GroundMorphism:
    """Build a morphism of either tag from a function returning sparse vectors."""
    _check_same(A, B)
    if A.tag is FINSET:
        data = []
        for x in A.labels:
            v = fn(x)
            if len(v) != 1 or next(iter(v.values())) != 1:
                raise GroundError(f"FINSET image of {fmt_label(x)} is not a single point")
            data.append(next(iter(v)))
        return GroundMorphism(A, B, data)
    return GroundMorphism(A, B, [_col(fn(x)) for x in A.labels])


def from_matrix(A: GroundObject, B: GroundObject, rows: Sequence[Sequence]) -> GroundMorphism:
    if A.tag is not FINVEC:
        raise GroundError("matrices are FINVEC morphisms")
    cols = []
    for j in range(A.size):
        cols.append(_col({B.labels[i]: Fraction(rows[i][j]) for i in range(B.size)}))
    return GroundMorphism(A, B, cols)


def zero_morphism(A: GroundObject, B: GroundObject) -> GroundMorphism:
    if A.tag is not FINVEC:
        raise GroundError("zero morphisms exist only in FINVEC")
    return GroundMorphism(A, B, [() for _ in A.labels], check=False)


def initial_morphism(B: GroundObject) -> GroundMorphism:
    return GroundMorphism(empty(B.tag), B, (), check=False)


# monoidal structure


def tensor(A, B):
    """Tensor of two objects, or of two morphisms."""
    if isinstance(A, GroundMorphism):
        return _tensor_mor(A, B)
    _check_same(A, B)
    return GroundObject(A.tag, [(a, b) for a in A.labels for b in B.labels])


def _tensor_mor(f: GroundMorphism, g: GroundMorphism) -> GroundMorphism:
    S, T = tensor(f.source, g.source), tensor(f.target, g.target)
    if f.tag is FINSET:
        return GroundMorphism(S, T, [(f(a), g(b)) for a, b in S.labels], check=False)
    return from_vectors(S, T, lambda ab: vec_tensor(f.vec(ab[0]), g.vec(ab[1])))


def tensor_many(objs: Sequence[GroundObject], tag: GroundTag | None = None) -> GroundObject:
    """Iterated tensor with flat tuple labels; the empty tensor is the unit."""
    if not objs:
        if tag is None:
            raise GroundError("empty tensor needs a tag")
        return unit(tag)
    t = _check_same(*objs)
    labels = [()]
    for o in objs:
        labels = [k + (b,) for k in labels for b in o.labels]
    return GroundObject(t, labels)


def tensor_many_mor(fs: Sequence[GroundMorphism], tag: GroundTag | None = None) -> GroundMorphism:
    if not fs:
        return identity(unit(tag))
    S = tensor_many([f.source for f in fs])
    T = tensor_many([f.target for f in fs])
    if S.tag is FINSET:
        return GroundMorphism(S, T, [tuple(f(x) for f, x in zip(fs, xs)) for xs in S.labels], check=False)
    return from_vectors(S, T, lambda xs: vec_tensor_many([f.vec(x) for f, x in zip(fs, xs)]))


def left_unitor(A: GroundObject) -> GroundMorphism:
    """I ⊗ A → A."""
    return from_function(tensor(unit(A.tag), A), A, lambda p: p[1])


def right_unitor(A: GroundObject) -> GroundMorphism:
    """A ⊗ I → A."""
    return from_function(tensor(A, unit(A.tag)), A, lambda p: p[0])


def associator(A: GroundObject, B: GroundObject, C: GroundObject) -> GroundMorphism:
    """(A⊗B)⊗C → A⊗(B⊗C)."""
    return from_function(tensor(tensor(A, B), C), tensor(A, tensor(B, C)), lambda p: (p[0][0], (p[0][1], p[1])))


def braiding(A: GroundObject, B: GroundObject) -> GroundMorphism:
    """The symmetry A⊗B → B⊗A."""
    _check_same(A, B)
    return from_function(tensor(A, B), tensor(B, A), lambda p: (p[1], p[0]))


# colimits


def coproduct(A: GroundObject, B: GroundObject):
    """Binary coproduct with its two injections.

    Labels are tagged ``(0, a)`` and ``(1, b)``.  A coproduct with the initial
    object returns the other summand and its identity.
    """
    tag = _check_same(A, B)
    if B.size == 0:
        return A, identity(A), initial_morphism(A)
    if A.size == 0:
        return B, initial_morphism(B), identity(B)
    S = GroundObject(tag, [(0, a) for a in A.labels] + [(1, b) for b in B.labels])
    return S, from_function(A, S, lambda a: (0, a)), from_function(B, S, lambda b: (1, b))


def direct_sum(objs: Sequence[GroundObject], tag: GroundTag):
    """Coproduct of a list, labels ``(i, x)``; returns the sum and injections."""
    for o in objs:
        if o.tag != tag:
            raise TagMismatch(f"{tag.value} vs {o.tag.value}")
    S = GroundObject(tag, [(i, x) for i, o in enumerate(objs) for x in o.labels])
    injs = [from_function(o, S, lambda x, i=i: (i, x)) for i, o in enumerate(objs)]
    return S, injs


def copair(S: GroundObject, maps: Sequence[GroundMorphism], target: GroundObject) -> GroundMorphism:
    """The map out of a ``direct_sum`` determined by its components."""
    return from_vectors(S, target, lambda ix: maps[ix[0]].vec(ix[1]))


class UnionFind:
    """Union-find over hashable items keeping the least label as root."""

    def __init__(self, items: Iterable = ()):
        self.parent: dict = {}
        for x in items:
            self.parent[x] = x

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if label_less(rb, ra):
            ra, rb = rb, ra
        self.parent[rb] = ra

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def coequalizer(f: GroundMorphism, g: GroundMorphism):
    """Coequalizer (Q, π) of a parallel pair.

    FINSET: classes of the relation f(a) ~ g(a), each named by its least
    label, listed in label order.  FINVEC: target modulo the span of the
    differences f(e) - g(e); the quotient basis is the set of non-pivot
    target labels of the reduced echelon form.
    """
    if f.source != g.source or f.target != g.target:
        raise GroundError("coequalizer of a non-parallel pair")
    T = f.target
    if f.tag is FINSET:
        uf = UnionFind(T.labels)
        for a, b in zip(f.data, g.data):
            uf.union(a, b)
        reps = sort_labels({uf.find(x) for x in T.labels})
        Q = GroundObject(FINSET, reps)
        return Q, GroundMorphism(T, Q, [uf.find(x) for x in T.labels], check=False)
    rels = []
    for x in f.source.labels:
        v = f.vec(x)
        vec_add(v, g.vec(x), -1)
        if v:
            rels.append(v)
    return quotient_space(T, rels)


def quotient_space(T: GroundObject, rels: Sequence[Mapping]):
    """FINVEC quotient of ``T`` by the span of sparse vectors ``rels``."""
    n = T.size
    rows = []
    for v in rels:
        row = [Fraction(0)] * n
        for k, c in v.items():
            row[T.index(k)] += c
        rows.append(row)
    red, pivots = rref(rows, n)
    pivset = set(pivots)
    keep = [T.labels[j] for j in range(n) if j not in pivset]
    Q = GroundObject(FINVEC, keep)
    cols: list = [None] * n
    for j in range(n):
        if j not in pivset:
            cols[j] = ((T.labels[j], Fraction(1)),)
    for r, p in enumerate(pivots):
        cols[p] = _col({T.labels[j]: -red[r][j] for j in range(n) if j not in pivset and red[r][j]})
    return Q, GroundMorphism(T, Q, cols, check=False)


def coequalize_relations(T: GroundObject, pairs: Sequence[tuple]):
    """Coequalizer of the relations ``u ~ v`` given as pairs of labels or vectors.

    Builds the parallel pair out of an indexing object and delegates to
    ``coequalizer``.
    """
    R = GroundObject(T.tag, list(range(len(pairs))))
    if T.tag is FINSET:
        f = GroundMorphism(R, T, [p[0] for p in pairs])
        g = GroundMorphism(R, T, [p[1] for p in pairs])
    else:
        def as_vec(u):
            return u if isinstance(u, Mapping) else {u: Fraction(1)}
        f = from_vectors(R, T, lambda i: as_vec(pairs[i][0]))
        g = from_vectors(R, T, lambda i: as_vec(pairs[i][1]))
    return coequalizer(f, g)


def factor_through(pi: GroundMorphism, h: GroundMorphism) -> GroundMorphism:
    """The unique u with u∘π = h for a surjection π that h coequalizes."""
    if pi.source != h.source:
        raise GroundError("h and π must share a source")
    Q = pi.target
    if pi.tag is FINSET:
        table: dict = {}
        for x, q in zip(pi.source.labels, pi.data):
            y = h(x)
            if table.setdefault(q, y) != y:
                raise GroundError("h does not factor through π")
        return GroundMorphism(Q, h.target, [table[q] for q in Q.labels])
    # quotient basis labels are source labels mapped to themselves
    u = from_vectors(Q, h.target, lambda q: h.vec(q))
    if u.compose(pi) != h:
        raise GroundError("h does not factor through π")
    return u


# exact linear algebra


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form over the rationals; returns (nonzero rows, pivots)."""
    m = [[Fraction(c) for c in r] for r in rows]
    pivots: list = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]))[1])


def _invert(m: Sequence[Sequence]) -> list:
    n = len(m)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug, n)
    if piv != list(range(n)):
        raise GroundError("singular matrix")
    return [row[n:] for row in red]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


class BasedObject:
    """An object X with a base map η: I → X."""

    __slots__ = ("carrier", "base")

    def __init__(self, carrier: GroundObject, base: GroundMorphism):
        if base.source != unit(carrier.tag) or base.target != carrier:
            raise GroundError("base map must go from the unit to the carrier")
        self.carrier = carrier
        self.base = base

    @property
    def tag(self) -> GroundTag:
        return self.carrier.tag

    @property
    def point(self) -> Label:
        """The basepoint (FINSET only)."""
        return self.base.data[0]

    @property
    def size(self) -> int:
        return self.carrier.size

    def __eq__(self, other) -> bool:
        return isinstance(other, BasedObject) and self.carrier == other.carrier and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.carrier, self.base))

    def __repr__(self) -> str:
        return f"BasedObject({self.carrier!r})"


def based_set(labels: Iterable[Label], point: Label = "*") -> BasedObject:
    """Based finite set with the given basepoint."""
    X = finset(labels)
    return BasedObject(X, GroundMorphism(unit(FINSET), X, [point]))


def unit_based(tag: GroundTag) -> BasedObject:
    return BasedObject(unit(tag), identity(unit(tag)))


def linearize(X: GroundObject) -> GroundObject:
    """Free vector space on a finite set, same labels."""
    return GroundObject(FINVEC, X.labels)


def linearize_mor(f: GroundMorphism) -> GroundMorphism:
    if f.tag is FINVEC:
        return f
    S, T = linearize(f.source), linearize(f.target)
    return GroundMorphism(S, T, [((y, Fraction(1)),) for y in f.data], check=False)


def linearize_based(X: BasedObject) -> BasedObject:
    """Linearization preserving the base; the unit label is renamed to the FINVEC unit."""
    C = linearize(X.carrier)
    return BasedObject(C, GroundMorphism(unit(FINVEC), C, [((X.point, Fraction(1)),)]))
