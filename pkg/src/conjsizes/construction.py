"""The family of centerless groups and their nilpotent twins.

For a Sophie Germain pair ``(q, p = 2q + 1)``:

* ``H = C_p^p / <k_1 ... k_p>``, stored as exponent vectors mod ``p`` whose
  first coordinate is normalised to 0;
* ``A = <alpha>`` with ``alpha = (1 2 ... p)`` and ``B = <beta>`` where
  ``beta: x -> r(x-1) + 1`` and ``r`` has multiplicative order ``q`` mod ``p``;
* ``G = H x| (A x| B)``, with ``A x| B`` permuting the coordinates of ``H``;
* ``P = H x| A``, ``Q = C_{q^2} x| C_q`` and ``L = P x Q``.

Permutations use the right-action convention: a permutation is a tuple of
1-based images, and ``compose(x, y)`` applies ``x`` first. Elements of ``G``
are written ``h * alpha^a * beta^b``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from sympy import isprime, n_order, primerange

from .core import BYTES_PER_ELEMENT, GroupHandle, check_budget, direct_product

Perm = tuple[int, ...]
HVec = tuple[int, ...]


class InvalidParameters(ValueError):
    pass


# -- permutations -----------------------------------------------------------

def compose(x: Perm, y: Perm) -> Perm:
    """``x`` then ``y``."""
    return tuple(y[x[i] - 1] for i in range(len(x)))


def perm_inverse(x: Perm) -> Perm:
    out = [0] * len(x)
    for i, img in enumerate(x, start=1):
        out[img - 1] = i
    return tuple(out)


def perm_power(x: Perm, e: int) -> Perm:
    out = tuple(range(1, len(x) + 1))
    base = x if e >= 0 else perm_inverse(x)
    for _ in range(abs(e)):
        out = compose(out, base)
    return out


def cycles(x: Perm) -> list[list[int]]:
    """Nontrivial cycles, each starting at its smallest point."""
    seen = set()
    out = []
    for start in range(1, len(x) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = x[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = x[nxt - 1]
        if len(cyc) > 1:
            out.append(cyc)
    return out


def from_cycles(cycs: Sequence[Sequence[int]], degree: int) -> Perm:
    img = list(range(1, degree + 1))
    for cyc in cycs:
        for i, pt in enumerate(cyc):
            img[pt - 1] = cyc[(i + 1) % len(cyc)]
    if sorted(img) != list(range(1, degree + 1)):
        raise InvalidParameters(f"cycles {cycs} do not describe a permutation of 1..{degree}")
    return tuple(img)


def alpha_permutation(p: int) -> Perm:
    return tuple(i % p + 1 for i in range(1, p + 1))


# -- parameters -------------------------------------------------------------

def sophie_germain_pairs(limit: int, bound: str = "q") -> list[tuple[int, int]]:
    """All ``(q, 2q + 1)`` with both prime, ascending.

    ``bound="q"`` keeps pairs with ``q <= limit``; ``bound="p"`` keeps pairs
    whose larger prime ``2q + 1`` is at most ``limit``.
    """
    if bound == "p":
        limit = (limit - 1) // 2
    elif bound != "q":
        raise ValueError(f"bound must be 'q' or 'p', not {bound!r}")
    return [(q, 2 * q + 1) for q in primerange(2, limit + 1) if isprime(2 * q + 1)]


def find_twist_exponent(p: int, q: int) -> int:
    """Smallest ``r`` in ``(1, p)`` of multiplicative order exactly ``q`` mod ``p``."""
    for r in range(2, p):
        if n_order(r, p) == q:
            return r
    raise AssertionError(f"no residue of order {q} modulo {p}")


def beta_permutation(p: int, r: int) -> Perm:
    """The map ``x -> r(x-1) + 1`` on ``1..p``; normalises ``alpha`` to ``alpha^r``."""
    q = (p - 1) // 2
    if not (isprime(p) and 1 < r < p and n_order(r, p) == q):
        raise InvalidParameters(f"r={r} does not have multiplicative order {q} modulo {p}")
    return tuple((r * (x - 1)) % p + 1 for x in range(1, p + 1))


@dataclass(frozen=True)
class FamilyParams:
    q: int
    p: int
    r: int
    beta: Perm

    @classmethod
    def create(cls, p: int, r: int | None = None) -> "FamilyParams":
        if not isprime(p) or p < 5 or not isprime((p - 1) // 2) or p % 2 == 0:
            raise InvalidParameters(f"p={p} is not of the form 2q+1 with q and p prime (q >= 2)")
        q = (p - 1) // 2
        if r is None:
            r = find_twist_exponent(p, q)
        params = cls(q=q, p=p, r=r, beta=beta_permutation(p, r))
        params.validate()
        return params

    def problems(self) -> list[str]:
        p, q, r = self.p, self.q, self.r
        out = []
        if not (isprime(q) and isprime(p) and p == 2 * q + 1):
            out.append(f"(q, p) = ({q}, {p}) is not a Sophie Germain pair")
            return out
        if not (1 < r < p) or n_order(r, p) != q:
            out.append(f"r={r} does not have multiplicative order {q} modulo {p}")
        if len(self.beta) != p or sorted(self.beta) != list(range(1, p + 1)):
            out.append("beta is not a permutation of 1..p")
            return out
        if self.beta[0] != 1:
            out.append("beta does not fix the point 1")
        cyc = cycles(self.beta)
        if sorted(len(c) for c in cyc) != [q, q]:
            out.append(f"beta has cycle type {[len(c) for c in cyc]}, expected two {q}-cycles")
        alpha = alpha_permutation(p)
        conj = compose(compose(perm_inverse(self.beta), alpha), self.beta)
        if conj != perm_power(alpha, r):
            out.append("beta^-1 alpha beta != alpha^r")
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise InvalidParameters("; ".join(problems))

    def beta_cycles(self) -> list[list[int]]:
        return cycles(self.beta)

    def to_dict(self) -> dict:
        return {"q": self.q, "p": self.p, "r": self.r, "beta": self.beta_cycles()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> "FamilyParams":
        p = int(data["p"])
        params = cls(q=int(data["q"]), p=p, r=int(data["r"]), beta=from_cycles(data["beta"], p))
        if validate:
            params.validate()
        return params

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> "FamilyParams":
        return cls.from_dict(json.loads(text), validate)


# -- H = K/N ----------------------------------------------------------------

def normalize(exps: Sequence[int], p: int) -> HVec:
    """Coset representative with first coordinate 0 (the diagonal is trivial)."""
    c = exps[0]
    return tuple((x - c) % p for x in exps)


def hvec_add(x: HVec, y: HVec, p: int) -> HVec:
    return normalize([a + b for a, b in zip(x, y)], p)


def hvec_neg(x: HVec, p: int) -> HVec:
    return normalize([-a for a in x], p)


def act(h: HVec, gamma: Perm, p: int | None = None) -> HVec:
    """``k_1^{x_1} ... k_p^{x_p} N  ->  k_{1^gamma}^{x_1} ... k_{p^gamma}^{x_p} N``."""
    p = len(h) if p is None else p
    out = [0] * len(h)
    for i, x in enumerate(h):
        out[gamma[i] - 1] = x
    return normalize(out, p)


def hvec_rank(h: HVec, p: int | None = None) -> int:
    """Little-endian base-``p`` integer of ``(x_2, ..., x_p)``."""
    p = len(h) if p is None else p
    h = normalize(h, p)
    rank = 0
    for x in reversed(h[1:]):
        rank = rank * p + x
    return rank


def hvec_unrank(rank: int, p: int) -> HVec:
    digits = [0]
    for _ in range(p - 1):
        rank, d = divmod(rank, p)
        digits.append(d)
    return tuple(digits)


def hvec_from_indicator(points: Sequence[int], p: int) -> HVec:
    """``k_{i_1} k_{i_2} ... N`` for 1-based points ``i_j``."""
    v = [0] * p
    for i in points:
        v[i - 1] += 1
    return normalize(v, p)


# -- G = H x| (A x| B), element level ----------------------------------------

class GElem(NamedTuple):
    h: HVec
    a: int
    b: int


class QElem(NamedTuple):
    u: int
    v: int


def top_permutation(params: FamilyParams, a: int, b: int) -> Perm:
    """``alpha^a beta^b`` as a permutation of ``1..p``."""
    return compose(perm_power(alpha_permutation(params.p), a), perm_power(params.beta, b))


def _split_top(params: FamilyParams, gamma: Perm) -> tuple[int, int]:
    for a in range(params.p):
        for b in range(params.q):
            if top_permutation(params, a, b) == gamma:
                return a, b
    raise ArithmeticError(f"{gamma} is not in <alpha, beta>")


def g_identity(params: FamilyParams) -> GElem:
    return GElem((0,) * params.p, 0, 0)


def g_mul(params: FamilyParams, x: GElem, y: GElem) -> GElem:
    """Product in canonical form, computed through explicit permutations.

    ``(h1 t1)(h2 t2) = h1 (t1 h2 t1^-1) t1 t2 = (h1 * h2^(t1^-1)) (t1 t2)``.
    """
    p = params.p
    t1 = top_permutation(params, x.a, x.b)
    t2 = top_permutation(params, y.a, y.b)
    h = hvec_add(x.h, act(y.h, perm_inverse(t1), p), p)
    a, b = _split_top(params, compose(t1, t2))
    return GElem(h, a, b)


def g_inv(params: FamilyParams, x: GElem) -> GElem:
    t = top_permutation(params, x.a, x.b)
    a, b = _split_top(params, perm_inverse(t))
    return GElem(act(hvec_neg(x.h, params.p), t, params.p), a, b)


def g_rank(params: FamilyParams, x: GElem) -> int:
    return (hvec_rank(x.h, params.p) * params.p + x.a % params.p) * params.q + x.b % params.q


def g_unrank(params: FamilyParams, rank: int) -> GElem:
    rest, b = divmod(rank, params.q)
    hr, a = divmod(rest, params.p)
    return GElem(hvec_unrank(hr, params.p), a, b)


def q_mul(q: int, x: QElem, y: QElem, twist: int | None = None) -> QElem:
    """``(u1, v1)(u2, v2) = (u1 + u2 * t^v1, v1 + v2)`` with ``t = 1 + q`` by default."""
    t = 1 + q if twist is None else twist
    m = q * q
    return QElem((x.u + y.u * pow(t, x.v, m)) % m, (x.v + y.v) % q)


# -- vectorised groups -------------------------------------------------------

class _FamilyArithmetic:
    """Rank arithmetic for ``H x| <alpha, beta^...>`` with ``nb`` powers of beta.

    ``nb = q`` gives ``G``; ``nb = 1`` gives ``P = H x| A``.
    Rank layout: ``(hRank * p + a) * nb + b``.
    """

    def __init__(self, params: FamilyParams, nb: int):
        p = params.p
        self.p, self.nb = p, nb
        self.weights = p ** np.arange(p - 1, dtype=np.int64)
        # perm[a, b, j] = image of 0-based point j under alpha^a beta^b
        perm = np.empty((p, nb, p), dtype=np.int64)
        inv_perm = np.empty_like(perm)
        for a in range(p):
            for b in range(nb):
                t = np.array(top_permutation(params, a, b), dtype=np.int64) - 1
                perm[a, b] = t
                inv_perm[a, b] = np.argsort(t)
        self.perm = perm
        self.inv_perm = inv_perm
        rinv = pow(params.r, -1, p)
        self.rinv_pow = np.array([pow(rinv, b, p) for b in range(nb)], dtype=np.int64)
        self.r_pow = np.array([pow(params.r, b, p) for b in range(nb)], dtype=np.int64)
        self.all_ranks = None
        self.all_decoded = None

    def decode(self, x):
        if x is self.all_ranks:
            if self.all_decoded is None:
                self.all_decoded = self._decode(x)
            return self.all_decoded
        return self._decode(np.asarray(x, dtype=np.int64))

    def _decode(self, x):
        rest, b = np.divmod(x, self.nb)
        hr, a = np.divmod(rest, self.p)
        h = np.zeros(x.shape + (self.p,), dtype=np.int64)
        h[..., 1:] = (hr[..., None] // self.weights) % self.p
        return h, a, b

    def encode(self, h, a, b):
        h = (h - h[..., :1]) % self.p
        hr = h[..., 1:] @ self.weights
        return (hr * self.p + a) * self.nb + b

    def mul(self, x, y):
        hx, ax, bx = self.decode(x)
        hy, ay, by = self.decode(y)
        hx, hy, ax, ay, bx, by = _broadcast(hx, hy, ax, ay, bx, by)
        # (h1 t1)(h2 t2) = (h1 + h2^(t1^-1)) t1 t2, and h^(t^-1)[j] = h[t(j)]
        moved = np.take_along_axis(hy, self.perm[ax, bx], axis=-1)
        a = (ax + ay * self.rinv_pow[bx]) % self.p
        b = (bx + by) % self.nb
        return self.encode(hx + moved, a, b)

    def inv(self, x):
        h, a, b = self.decode(x)
        b_inv = (-b) % self.nb
        a_inv = (-a * self.r_pow[b]) % self.p
        h_inv = -np.take_along_axis(h, self.perm[a_inv, b_inv], axis=-1)
        return self.encode(h_inv, a_inv, b_inv)


def _broadcast(hx, hy, ax, ay, bx, by):
    shape = np.broadcast_shapes(ax.shape, ay.shape)
    p = hx.shape[-1]
    return (
        np.broadcast_to(hx, shape + (p,)),
        np.broadcast_to(hy, shape + (p,)),
        np.broadcast_to(ax, shape),
        np.broadcast_to(ay, shape),
        np.broadcast_to(bx, shape),
        np.broadcast_to(by, shape),
    )


def family_bytes_per_element(p: int) -> int:
    return 8 * (5 * p + 12) + BYTES_PER_ELEMENT


def _family_group(params: FamilyParams, nb: int, label: str, force: bool, strict: bool) -> GroupHandle:
    if strict:
        params.validate()
    p = params.p
    order = p**p * nb
    check_budget(f"{label} for p={p} (order {order:,})", order * family_bytes_per_element(p), force)
    arith = _FamilyArithmetic(params, nb)
    h_gen = arith.encode(np.array(hvec_from_indicator([2], p)), 0, 0)
    alpha = arith.encode(np.zeros(p, dtype=np.int64), 1, 0)
    gens = [int(h_gen), int(alpha)]
    if nb > 1:
        gens.append(int(arith.encode(np.zeros(p, dtype=np.int64), 0, 1)))
    G = GroupHandle(
        order=order,
        mul=arith.mul,
        inv=arith.inv,
        identity=0,
        label=label,
        generators=tuple(gens),
        bytes_per_element=family_bytes_per_element(p),
    )
    G._cache["arith"] = arith
    arith.all_ranks = G.ranks()
    G._cache["params"] = params
    return G


def build_G(params: FamilyParams, force: bool = False, strict: bool = True) -> GroupHandle:
    """``G = H x| (A x| B)`` of order ``p^p q``; ``strict=False`` skips parameter validation."""
    return _family_group(params, params.q, f"G(p={params.p})", force, strict)


def build_P(params: FamilyParams, force: bool = False, strict: bool = True) -> GroupHandle:
    """``P = H x| A`` of order ``p^p``; rank ``hRank * p + a``."""
    return _family_group(params, 1, f"P(p={params.p})", force, strict)


def build_AB(params: FamilyParams) -> GroupHandle:
    """``A x| B`` on its own, rank ``a * q + b``."""
    p, q = params.p, params.q
    rinv_pow = np.array([pow(pow(params.r, -1, p), b, p) for b in range(q)], dtype=np.int64)
    r_pow = np.array([pow(params.r, b, p) for b in range(q)], dtype=np.int64)

    def mul(x, y):
        ax, bx = np.divmod(np.asarray(x, dtype=np.int64), q)
        ay, by = np.divmod(np.asarray(y, dtype=np.int64), q)
        return ((ax + ay * rinv_pow[bx]) % p) * q + (bx + by) % q

    def inv(x):
        a, b = np.divmod(np.asarray(x, dtype=np.int64), q)
        return ((-a * r_pow[b]) % p) * q + (-b) % q

    return GroupHandle(
        order=p * q, mul=mul, inv=inv, identity=0, label=f"AB(p={p})", generators=(q, 1)
    )


def build_Q(q: int, twist: int | None = None) -> GroupHandle:
    """``C_{q^2} x| C_q`` with the generator of ``C_q`` raising the other to the power ``twist``.

    Rank ``u * q + v``. The default twist ``1 + q`` has order ``q`` mod ``q^2``.
    """
    t = 1 + q if twist is None else twist
    m = q * q
    t_pow = np.array([pow(t, v, m) for v in range(q)], dtype=np.int64)
    # inverse of (u, v) is (-u * t^-v, -v); t^-v = t^(q-v) when t has order dividing q
    t_neg = np.array([pow(t, (q - v) % q, m) for v in range(q)], dtype=np.int64)

    def mul(x, y):
        ux, vx = np.divmod(np.asarray(x, dtype=np.int64), q)
        uy, vy = np.divmod(np.asarray(y, dtype=np.int64), q)
        return ((ux + uy * t_pow[vx]) % m) * q + (vx + vy) % q

    def inv(x):
        u, v = np.divmod(np.asarray(x, dtype=np.int64), q)
        return ((-u * t_neg[v]) % m) * q + (-v) % q

    return GroupHandle(
        order=q**3, mul=mul, inv=inv, identity=0, label=f"Q(q={q})", generators=(q, 1)
    )


def build_L(params: FamilyParams, force: bool = False, strict: bool = True, twist: int | None = None) -> GroupHandle:
    """``L = P x Q``."""
    return direct_product(build_P(params, force, strict), build_Q(params.q, twist), force)


# -- rank helpers for G -------------------------------------------------------

def h_ranks(G: GroupHandle) -> np.ndarray:
    """Ranks of the elements of ``H`` inside ``G`` or ``P`` (``a = b = 0``)."""
    arith: _FamilyArithmetic = G._cache["arith"]
    hr = np.arange(arith.p ** (arith.p - 1), dtype=np.int64)
    return hr * arith.p * arith.nb


def coset_ranks(G: GroupHandle, a: int, b: int) -> np.ndarray:
    """Ranks of ``h * alpha^a * beta^b`` for all ``h`` in ``H``, ordered by ``hRank``."""
    arith: _FamilyArithmetic = G._cache["arith"]
    return (h_ranks(G) // arith.nb + a) * arith.nb + b


def decode_ranks(G: GroupHandle, x):
    """``(h, a, b)`` arrays for ranks of a family group."""
    return G._cache["arith"].decode(x)


def describe(G: GroupHandle, x: int) -> str:
    h, a, b = decode_ranks(G, int(x))
    return f"h={tuple(int(v) for v in h)} a={int(a)} b={int(b)}"
