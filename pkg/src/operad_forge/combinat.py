"""Based finite sets n = {0, 1, ..., n} and the categories Σ, Λ, PS and F.

A morphism m → n is stored as the tuple of images of 1..m; the basepoint 0
always maps to 0 and is left implicit.  Composition is ``g.compose(f)`` for
g ∘ f, so tables read right to left like functions.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from functools import lru_cache
from math import comb
from typing import Sequence


class CombinatError(ValueError):
    pass


class BasedMap:
    """A based map of finite sets m → n; ``kind`` is 'F', 'PS' or 'Λ'."""

    __slots__ = ("m", "n", "table")

    def __init__(self, m: int, n: int, table: Sequence[int]):
        table = tuple(table)
        if len(table) != m:
            raise CombinatError(f"table of length {len(table)} for source level {m}")
        for y in table:
            if not 0 <= y <= n:
                raise CombinatError(f"image {y} outside 0..{n}")
        self.m, self.n, self.table = m, n, table

    def __call__(self, a: int) -> int:
        return 0 if a == 0 else self.table[a - 1]

    def compose(self, f: "BasedMap") -> "BasedMap":
        if f.n != self.m:
            raise CombinatError(f"level mismatch: {f.m}->{f.n} then {self.m}->{self.n}")
        return type(self)._make(f.m, self.n, tuple(self(y) for y in f.table), self, f)

    @classmethod
    def _make(cls, m, n, table, g, f):
        if isinstance(g, Inj) and isinstance(f, Inj):
            return Inj.fast(m, n, table)
        return BasedMap(m, n, table)

    def fiber(self, j: int) -> tuple:
        return tuple(a for a in range(1, self.m + 1) if self(a) == j)

    def is_ps(self) -> bool:
        return all(y != 0 for y in self.table)

    def __eq__(self, other) -> bool:
        return isinstance(other, BasedMap) and (self.m, self.n, self.table) == (other.m, other.n, other.table)

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.table))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.m}->{self.n}, {list(self.table)})"


class Inj(BasedMap):
    """A based injection m → n (a morphism of Λ); permutations when m = n."""

    __slots__ = ()

    def __init__(self, m: int, n: int, table: Sequence[int]):
        super().__init__(m, n, table)
        if m > n or 0 in self.table or len(set(self.table)) != m:
            raise CombinatError(f"not a based injection: {self.table} into {n}")

    @classmethod
    def fast(cls, m: int, n: int, table: tuple) -> "Inj":
        """Unchecked constructor for tables known to be injective."""
        out = object.__new__(cls)
        out.m, out.n, out.table = m, n, table
        return out

    @property
    def is_perm(self) -> bool:
        return self.m == self.n

    def inverse(self) -> "Inj":
        if not self.is_perm:
            raise CombinatError("only permutations are invertible")
        inv = [0] * self.n
        for a, y in enumerate(self.table, 1):
            inv[y - 1] = a
        return Inj.fast(self.n, self.n, tuple(inv))

    def image(self) -> frozenset:
        return frozenset(self.table)


def identity(n: int) -> Inj:
    return Inj(n, n, range(1, n + 1))


def degeneracy(n: int, i: int) -> Inj:
    """σ_i : n-1 → n, the ordered injection skipping i."""
    if not 1 <= i <= n:
        raise CombinatError(f"σ_{i} undefined into level {n}")
    return Inj(n - 1, n, [a if a < i else a + 1 for a in range(1, n)])


def transposition(n: int, i: int) -> Inj:
    """s_i ∈ Σ_n swapping i and i+1."""
    if not 1 <= i < n:
        raise CombinatError(f"s_{i} undefined in Σ_{n}")
    t = list(range(1, n + 1))
    t[i - 1], t[i] = t[i], t[i - 1]
    return Inj(n, n, t)


def perm(table: Sequence[int]) -> Inj:
    return Inj(len(table), len(table), table)


def compose(g: BasedMap, f: BasedMap) -> BasedMap:
    """g ∘ f."""
    return g.compose(f)


def block_sum(f: BasedMap, g: BasedMap) -> BasedMap:
    """f ∨ g : (j+k) → (p+q), f on the first block, g shifted by p on the second."""
    return block_sum_many([f, g])


def block_sum_many(fs: Sequence[BasedMap]) -> BasedMap:
    table: list = []
    m = n = 0
    for f in fs:
        table.extend(0 if y == 0 else y + n for y in f.table)
        m += f.m
        n += f.n
    if all(isinstance(f, Inj) for f in fs):
        return Inj(m, n, table)
    return BasedMap(m, n, table)


def shuffle_factorize(sigma: Inj, p: int, q: int):
    """Split σ : n → p+q as (σ1 ∨ σ2) ∘ α⁻¹ with α a (j,k)-shuffle.

    The sources landing in the first block, listed increasingly, followed by
    those landing in the second, give α(a) = i_a.
    """
    alpha, parts = multi_factorize(sigma, (p, q))
    return alpha, parts[0], parts[1]


def multi_factorize(lam: Inj, blocks: Sequence[int]):
    """Split λ : n → Σ blocks as (τ_1 ∨ ... ∨ τ_r) ∘ α⁻¹ with α a multi-shuffle."""
    if lam.n != sum(blocks):
        raise CombinatError(f"target {lam.n} is not the block total {sum(blocks)}")
    starts, s = [], 0
    for b in blocks:
        starts.append(s)
        s += b
    which = []
    for y in lam.table:
        r = 0
        while y > starts[r] + blocks[r]:
            r += 1
        which.append(r)
    order: list = []
    parts = []
    for r, b in enumerate(blocks):
        src = [a for a in range(1, lam.m + 1) if which[a - 1] == r]
        order.extend(src)
        parts.append(Inj.fast(len(src), b, tuple(lam(a) - starts[r] for a in src)))
    return Inj.fast(lam.m, lam.m, tuple(order)), parts


def is_multi_shuffle(alpha: Inj, sizes: Sequence[int]) -> bool:
    s = 0
    for b in sizes:
        seg = alpha.table[s : s + b]
        if any(x >= y for x, y in zip(seg, seg[1:])):
            return False
        s += b
    return True


def shuffles(j: int, k: int) -> list:
    """(j,k)-shuffles in lexicographic order of tables."""
    return multi_shuffles((j, k))


def multi_shuffles(sizes: Sequence[int]) -> list:
    """Permutations increasing on each consecutive block of ``sizes``."""
    n = sum(sizes)
    out: list = []

    def rec(remaining: frozenset, rest: Sequence[int], acc: tuple):
        if not rest:
            out.append(acc)
            return
        for c in combinations(sorted(remaining), rest[0]):
            rec(remaining - set(c), rest[1:], acc + c)

    rec(frozenset(range(1, n + 1)), tuple(sizes), ())
    return [Inj(n, n, t) for t in sorted(out)]


def block_permutation(tau: Inj, sizes: Sequence[int]) -> Inj:
    """σ(j_1..j_k): moves block a (of size j_a) to block position τ(a)."""
    k = len(sizes)
    if tau.m != k or not tau.is_perm:
        raise CombinatError("τ must be a permutation of the block indices")
    new_sizes = permute_sizes(tau, sizes)
    new_start = [0] * k
    s = 0
    for b in range(k):
        new_start[b] = s
        s += new_sizes[b]
    table: list = []
    for a in range(k):
        off = new_start[tau(a + 1) - 1]
        table.extend(off + t for t in range(1, sizes[a] + 1))
    return Inj.fast(s, s, tuple(table))


def permute_sizes(tau: Inj, sizes: Sequence[int]) -> tuple:
    """τ·J: the entry at position a moves to position τ(a)."""
    out = [0] * len(sizes)
    for a, j in enumerate(sizes):
        out[tau(a + 1) - 1] = j
    return tuple(out)


def permute_entries(tau: Inj, xs: Sequence) -> tuple:
    out: list = [None] * len(xs)
    for a, x in enumerate(xs):
        out[tau(a + 1) - 1] = x
    return tuple(out)


CLASSES = ("Σ", "Λ", "PS", "F")


@lru_cache(maxsize=None)
def _enumerate_cached(m: int, n: int, cls: str) -> tuple:
    return tuple(_enumerate(m, n, cls))


def enumerate_morphisms(m: int, n: int, cls: str = "Λ") -> list:
    """All morphisms m → n of a class, lexicographic in tables."""
    return list(_enumerate_cached(m, n, cls))


def _enumerate(m: int, n: int, cls: str) -> list:
    if cls in ("Σ", "Sigma"):
        if m != n:
            return []
        return [Inj(n, n, t) for t in permutations(range(1, n + 1))]
    if cls in ("Λ", "Lambda"):
        return [Inj(m, n, t) for t in permutations(range(1, n + 1), m)] if m <= n else []
    if cls == "PS":
        return [BasedMap(m, n, t) for t in product(range(1, n + 1), repeat=m)]
    if cls == "F":
        return [BasedMap(m, n, t) for t in product(range(0, n + 1), repeat=m)]
    raise CombinatError(f"unknown class {cls}")


def lambda_count(m: int, n: int) -> int:
    """|Λ(m,n)| = n!/(n-m)!."""
    if m > n:
        return 0
    out = 1
    for t in range(n - m + 1, n + 1):
        out *= t
    return out


def adjacent_word(sigma: Inj) -> list:
    """Indices i_1..i_r with σ = s_{i_1} ∘ ... ∘ s_{i_r} (bubble sort, reduced)."""
    if not sigma.is_perm:
        raise CombinatError("adjacent words exist for permutations only")
    t = list(sigma.table)
    word: list = []
    # right-multiplying by s_i swaps entries i and i+1 of the table
    changed = True
    while changed:
        changed = False
        for i in range(len(t) - 1):
            if t[i] > t[i + 1]:
                t[i], t[i + 1] = t[i + 1], t[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def from_word(n: int, word: Sequence[int]) -> Inj:
    out = identity(n)
    for i in word:
        out = out.compose(transposition(n, i))
    return out


def standard_factor(lam: Inj):
    """λ = π ∘ ι with ι : m → n the inclusion a ↦ a and π ∈ Σ_n.

    π agrees with λ on 1..m and is increasing on the complement.
    """
    rest = [y for y in range(1, lam.n + 1) if y not in lam.image()]
    return Inj(lam.n, lam.n, list(lam.table) + rest)


def inclusion(m: int, n: int) -> Inj:
    return Inj(m, n, range(1, m + 1))


def binomial(n: int, k: int) -> int:
    return comb(n, k)


def compositions(n: int, k: int) -> list:
    """Ordered k-tuples of non-negative integers summing to n, lexicographic."""
    if k == 0:
        return [()] if n == 0 else []
    return [c for c in product(range(n + 1), repeat=k) if sum(c) == n]


def weak_compositions_upto(total: int, k: int) -> list:
    return [c for c in product(range(total + 1), repeat=k) if sum(c) <= total]
