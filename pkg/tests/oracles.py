"""Brute-force reference computations used to derive expected values.

Nothing here calls the product code under test: coends are built from all
Λ-morphisms (not generators) and quotiented with a local union-find.
"""

from __future__ import annotations

import random
from itertools import permutations, product
from math import comb, factorial

from operad_forge import combinat as cb
from operad_forge import ground as gd
from operad_forge import seq as sq


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)

    def count(self):
        return len({self.find(x) for x in list(self.p)})


def injections(m: int, n: int):
    """All based injections m → n as image tuples."""
    return list(permutations(range(1, n + 1), m))


def _act(D, table, n):
    return D.act(cb.Inj(len(table), n, table))


def day_count(D, E, n: int) -> int:
    """|(D ⊠ E)(n)| as the literal coend over all pairs of injections."""
    N = D.N
    uf = _UF()
    for j in range(N + 1):
        for k in range(N + 1 - j):
            for lam in injections(n, j + k):
                for d in D.levels[j].labels:
                    for e in E.levels[k].labels:
                        uf.find((j, k, d, e, lam))
    for j in range(N + 1):
        for k in range(N + 1 - j):
            for j2 in range(j + 1):
                for k2 in range(k + 1):
                    for f in injections(j2, j):
                        for g in injections(k2, k):
                            h = tuple(f) + tuple(j + y for y in g)
                            for lam in injections(n, j2 + k2):
                                mu = tuple(h[a - 1] for a in lam)
                                for d in D.levels[j].labels:
                                    d2 = _act(D, f, j)(d)
                                    for e in E.levels[k].labels:
                                        e2 = _act(E, g, k)(e)
                                        uf.union((j, k, d, e, mu), (j2, k2, d2, e2, lam))
    return uf.count()


def day_formula(D, E, n: int) -> int:
    return sum(D.levels[j].size * E.levels[n - j].size * comb(n, j) for j in range(n + 1))


def power_count(E, k: int, n: int) -> int:
    """|E^{⊠k}(n)| as the literal k-fold coend."""
    N = E.N
    uf = _UF()
    shapes = [J for J in product(range(N + 1), repeat=k) if sum(J) <= N]
    for J in shapes:
        for lam in injections(n, sum(J)):
            for es in product(*[E.levels[j].labels for j in J]):
                uf.find((J, es, lam))
    for J in shapes:
        for i in range(k):
            for j2 in range(J[i] + 1):
                J2 = J[:i] + (j2,) + J[i + 1:]
                off = sum(J[:i])
                for f in injections(j2, J[i]):
                    h = [a for a in range(1, off + 1)] + [off + y for y in f] + \
                        [a + J[i] - j2 for a in range(off + j2 + 1, sum(J2) + 1)]
                    for lam in injections(n, sum(J2)):
                        mu = tuple(h[a - 1] for a in lam)
                        for es in product(*[E.levels[j].labels for j in J]):
                            es2 = es[:i] + (_act(E, f, J[i])(es[i]),) + es[i + 1:]
                            uf.union((J, es, mu), (J2, es2, lam))
    return uf.count()


def ass_power_count(k: int, n: int) -> int:
    """Ass^{⊠k}(n) = n! · #weak compositions of n into k parts."""
    if k == 0:
        return int(n == 0)
    return factorial(n) * comb(n + k - 1, k - 1)


def random_lamseq(rng: random.Random, N: int = 3, max_size: int = 2):
    """A random FINSET Λ-sequence with levels of at most ``max_size`` elements.

    Σ acts trivially or, on two-element levels, through the sign; degeneracies
    are drawn at random and the candidate is kept once it validates.
    """
    while True:
        sizes = [rng.randint(0, max_size) for _ in range(N + 1)]
        labels = [[f"x{n}{i}" for i in range(s)] for n, s in enumerate(sizes)]
        sign = [len(L) == 2 and n >= 2 and rng.random() < 0.4 for n, L in enumerate(labels)]
        g = {}
        ok = True
        for n in range(1, N + 1):
            if labels[n] and not labels[n - 1]:
                ok = False
                break
            g[n] = {x: rng.choice(labels[n - 1]) for x in labels[n]}
        if not ok:
            continue

        def parity(lam):
            t = list(lam.table) + [y for y in range(1, lam.n + 1) if y not in lam.table]
            inv = sum(1 for a in range(len(t)) for b in range(a + 1, len(t)) if t[a] > t[b])
            return inv % 2

        def action(lam, x, labels=labels, sign=sign, g=g):
            n = lam.n
            if sign[n] and parity(lam):
                x = labels[n][1 - labels[n].index(x)]
            for k in range(n, lam.m, -1):
                x = g[k][x]
            return x

        base = rng.choice(labels[0]) if labels[0] and rng.random() < 0.7 else None
        try:
            D = sq.from_action(gd.FINSET, N, [gd.finset(L) for L in labels], action, base)
        except (sq.SequenceError, gd.GroundError):
            continue
        if sq.validate(D).ok:
            return D


def tensor_classes(D, points, base, weight=None, N=None):
    """Classes of D ⊗_Λ X^{⊗*} (total weight ≤ N) as the literal coend.

    Returns a dict from raw terms (k, d, xs) to a class id.
    """
    N = D.N if N is None else N
    weight = weight or {x: 0 if x == base else 1 for x in points}
    uf = _UF()
    terms = []
    for k in range(D.N + 1):
        for xs in product(points, repeat=k):
            if sum(weight[x] for x in xs) > N:
                continue
            for d in D.levels[k].labels:
                terms.append((k, d, xs))
                uf.find((k, d, xs))
    for (m, d, xs) in terms:
        for n in range(m, D.N + 1):
            for lam in injections(m, n):
                wide = [base] * n
                for a, y in enumerate(lam):
                    wide[y - 1] = xs[a]
                for d2 in D.levels[n].labels:
                    if _act(D, lam, n)(d2) == d:
                        uf.union((n, d2, tuple(wide)), (m, d, xs))
    return {t: uf.find(t) for t in terms}


def tensor_count(D, points, base, weight=None, N=None) -> int:
    return len(set(tensor_classes(D, points, base, weight, N).values()))
