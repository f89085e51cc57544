"""Brute-force reference implementations used only by the tests.

Nothing here calls into the engine's algorithms; only ``mul``/``inv`` of a
handle (scalar calls) are used to read off the group.
"""
from __future__ import annotations

import math

import numpy as np


def table(G):
    n = G.order
    r = np.arange(n)
    return np.asarray(G.mul(r[:, None], r[None, :]))


def naive_classes(G) -> list[frozenset[int]]:
    T = table(G)
    n = G.order
    inv = [int(np.flatnonzero(T[x] == G.identity)[0]) for x in range(n)]
    seen = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        cls = frozenset(int(T[T[inv[g], x], g]) for g in range(n))
        seen |= cls
        classes.append(cls)
    return classes


def naive_centralizer(G, x: int) -> list[int]:
    T = table(G)
    return [g for g in range(G.order) if T[g, x] == T[x, g]]


def naive_order(G, x: int) -> int:
    T = table(G)
    cur, k = x, 1
    while cur != G.identity:
        cur = int(T[cur, x])
        k += 1
    return k


def naive_nilpotent(G) -> bool:
    """Nilpotent iff elements of coprime orders always commute."""
    T = table(G)
    orders = [naive_order(G, x) for x in range(G.order)]
    for x in range(G.order):
        for y in range(G.order):
            if math.gcd(orders[x], orders[y]) == 1 and T[x, y] != T[y, x]:
                return False
    return True


def naive_closure(G, seed) -> list[int]:
    T = table(G)
    elems = {G.identity} | {int(s) for s in seed}
    changed = True
    while changed:
        changed = False
        for x in list(elems):
            for y in list(elems):
                z = int(T[x, y])
                if z not in elems:
                    elems.add(z)
                    changed = True
    return sorted(elems)


def is_prime_td(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def sophie_germain_td(limit: int) -> list[tuple[int, int]]:
    return [(q, 2 * q + 1) for q in range(2, limit + 1) if is_prime_td(q) and is_prime_td(2 * q + 1)]


def mult_order(r: int, p: int) -> int:
    k, x = 1, r % p
    while x != 1:
        x = (x * r) % p
        k += 1
    return k


class PermutationModel:
    """``G`` as permutations of ``H`` (the right cosets of ``A x| B``).

    Element ``h * t`` sends ``v`` to ``(v + h)^t``; this action is faithful.
    Everything is recomputed from scratch with plain lists.
    """

    def __init__(self, p: int, r: int):
        self.p, self.r = p, r
        self.q = (p - 1) // 2
        self.points = [self._unrank(i) for i in range(p ** (p - 1))]
        self.index = {v: i for i, v in enumerate(self.points)}

    def _unrank(self, i):
        v = [0]
        for _ in range(self.p - 1):
            i, d = divmod(i, self.p)
            v.append(d)
        return tuple(v)

    def _norm(self, v):
        return tuple((x - v[0]) % self.p for x in v)

    def top(self, a: int, b: int) -> list[int]:
        # 0-based point j -> r^b (j + a)
        return [(pow(self.r, b, self.p) * (j + a)) % self.p for j in range(self.p)]

    def element(self, h, a: int, b: int) -> tuple[int, ...]:
        t = self.top(a, b)
        out = []
        for v in self.points:
            w = [(x + y) % self.p for x, y in zip(v, h)]
            moved = [0] * self.p
            for j, x in enumerate(w):
                moved[t[j]] = x
            out.append(self.index[self._norm(moved)])
        return tuple(out)

    @staticmethod
    def compose(x, y):
        """``x`` then ``y``."""
        return tuple(y[i] for i in x)
