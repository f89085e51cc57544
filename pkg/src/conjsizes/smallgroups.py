"""Small test groups: cyclic, dihedral, permutation groups and Cayley tables."""
from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .core import GroupHandle


def from_table(table: np.ndarray, label: str, generators: Sequence[int] | None = None) -> GroupHandle:
    """Wrap a Cayley table ``table[x, y] = x*y``."""
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    identity = int(np.flatnonzero((table == np.arange(n)).all(axis=1))[0])
    inverse = np.argmax(table == identity, axis=1).astype(np.int64)
    if generators is None:
        generators = list(range(n))
    return GroupHandle(
        order=n,
        mul=lambda x, y: table[x, y],
        inv=lambda x: inverse[x],
        identity=identity,
        label=label,
        generators=tuple(int(g) for g in generators),
    )


def from_permutations(gens: Sequence[Sequence[int]], label: str) -> GroupHandle:
    """Group generated by permutations of ``0..d-1`` given in array form.

    Elements are ranked in lexicographic order of their array forms, so the
    identity always has rank 0. Composition is left to right: ``(x*y)(i) = y(x(i))``.
    """
    gens = [tuple(g) for g in gens]
    degree = len(gens[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    elems = np.array(sorted(seen), dtype=np.int64)
    index = {tuple(e): i for i, e in enumerate(elems.tolist())}
    # composed[x, y] = y o x as array forms
    composed = np.take_along_axis(elems[None, :, :].repeat(len(elems), 0), elems[:, None, :].repeat(len(elems), 1), axis=2)
    table = np.array(
        [[index[tuple(row)] for row in block] for block in composed.tolist()],
        dtype=np.int64,
    )
    return from_table(table, label, [index[g] for g in gens])


def cyclic(n: int) -> GroupHandle:
    return GroupHandle(
        order=n,
        mul=lambda x, y: (np.asarray(x) + np.asarray(y)) % n,
        inv=lambda x: (-np.asarray(x)) % n,
        identity=0,
        label=f"C{n}",
        generators=(1 % n,),
    )


def dihedral(n: int) -> GroupHandle:
    """Dihedral group of order ``2n``; rank ``2*k + f`` stands for ``r^k s^f``."""

    def mul(x, y):
        k1, f1 = np.divmod(np.asarray(x, dtype=np.int64), 2)
        k2, f2 = np.divmod(np.asarray(y, dtype=np.int64), 2)
        k = (k1 + np.where(f1 == 1, -k2, k2)) % n
        return 2 * k + ((f1 + f2) % 2)

    def inv(x):
        k, f = np.divmod(np.asarray(x, dtype=np.int64), 2)
        return 2 * np.where(f == 1, k, (-k) % n) + f

    return GroupHandle(
        order=2 * n,
        mul=mul,
        inv=inv,
        identity=0,
        label=f"D{2 * n}",
        generators=(2 % (2 * n), 1),
    )


def symmetric(d: int) -> GroupHandle:
    gens = [tuple([1, 0] + list(range(2, d)))]
    if d > 2:
        gens.append(tuple(list(range(1, d)) + [0]))
    return from_permutations(gens, f"S{d}")


def affine(p: int, multipliers: Sequence[int] | None = None) -> GroupHandle:
    """Affine maps ``i -> m*i + c`` on Z/p with ``m`` in the given multiplier group.

    ``affine(5)`` is the Frobenius group of order 20.
    """
    mults = list(range(1, p)) if multipliers is None else list(multipliers)
    gens = [tuple((i + 1) % p for i in range(p))]
    gens += [tuple((m * i) % p for i in range(p)) for m in mults if m != 1]
    return from_permutations(gens, f"AGL1({p})" if multipliers is None else f"Aff({p},{sorted(mults)})")


class CoprimeInstance(NamedTuple):
    group: GroupHandle
    h_ranks: np.ndarray
    a_rank: int
    m: int
    k: int
    n: int


def automorphism_order(m: int, perm: Sequence[int], scalar: int) -> int:
    """Order of ``v -> scalar * v`` followed by moving coordinate ``i`` to ``perm[i]``."""
    k = len(perm)
    basis = np.eye(k, dtype=np.int64) % m
    images = basis
    for n in range(1, m**k + 1):
        nxt = np.empty_like(images)
        nxt[:, np.asarray(perm)] = (scalar * images) % m
        images = nxt
        if np.array_equal(images, basis):
            return n
    raise ArithmeticError("automorphism order search did not terminate")


def coprime_semidirect(m: int, k: int, perm: Sequence[int], scalar: int) -> CoprimeInstance:
    """``(Z/m)^k x| <a>`` where ``a`` scales by ``scalar`` and permutes coordinates.

    The order ``n`` of ``a`` must be coprime to ``m``. Ranks are
    ``hRank * n + e`` for ``h * a^e`` with ``hRank`` little-endian base ``m``.
    """
    if len(perm) != k or sorted(perm) != list(range(k)):
        raise ValueError(f"{perm} is not a permutation of 0..{k - 1}")
    if math.gcd(scalar, m) != 1:
        raise ValueError(f"scalar {scalar} is not a unit modulo {m}")
    n = automorphism_order(m, perm, scalar)
    if math.gcd(m, n) != 1:
        raise ValueError(f"|H| = {m}^{k} and |a| = {n} are not coprime")
    size = m**k
    weights = m ** np.arange(k, dtype=np.int64)
    digits = (np.arange(size, dtype=np.int64)[:, None] // weights) % m
    perm_arr = np.asarray(perm, dtype=np.int64)
    # phi_pow[e, h] = rank of a^e h a^-e
    phi_pow = np.empty((n, size), dtype=np.int64)
    cur = digits.copy()
    for e in range(n):
        phi_pow[e] = cur @ weights
        nxt = np.empty_like(cur)
        nxt[:, perm_arr] = (scalar * cur) % m
        cur = nxt

    def mul(x, y):
        hx, ex = np.divmod(np.asarray(x, dtype=np.int64), n)
        hy, ey = np.divmod(np.asarray(y, dtype=np.int64), n)
        moved = phi_pow[ex, hy]
        h = ((digits[hx] + digits[moved]) % m) @ weights
        return h * n + (ex + ey) % n

    def inv(x):
        h, e = np.divmod(np.asarray(x, dtype=np.int64), n)
        e_inv = (-e) % n
        neg = ((-digits[h]) % m) @ weights
        return phi_pow[e_inv, neg] * n + e_inv

    gens = [int(weights[i]) * n for i in range(k)] + [1 % (size * n)]
    G = GroupHandle(
        order=size * n,
        mul=mul,
        inv=inv,
        identity=0,
        label=f"(Z/{m})^{k} x| C{n}",
        generators=tuple(gens),
    )
    return CoprimeInstance(G, np.arange(size, dtype=np.int64) * n, 1 % (size * n), m, k, n)
