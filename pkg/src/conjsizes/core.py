"""Generic finite-group engine over dense rank encodings.

Every group is a :class:`GroupHandle`: elements are the integers
``0 .. order-1`` and ``mul``/``inv`` work elementwise on numpy integer
arrays (scalars broadcast). All algorithms below only ever talk to a group
through that interface, so the same code runs on a 6-element cyclic group
and on a 2.5 million element semidirect product.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import factorint

BUDGET_ENV = "CONJSIZES_MEMORY_BUDGET"
DEFAULT_BUDGET = 2 * 1024**3
# rough footprint of a dense pass (rank arrays, graph edges, temporaries)
BYTES_PER_ELEMENT = 96
EXHAUSTIVE_SUBGROUP_LIMIT = 10_000


class BudgetExceeded(RuntimeError):
    """Raised instead of attempting a computation that would not fit in memory."""

    def __init__(self, what: str, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs about {required:,} bytes but the memory budget is "
            f"{budget:,} bytes (set {BUDGET_ENV} or pass force=True to override)"
        )


def memory_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


def check_budget(what: str, required: int, force: bool = False) -> None:
    budget = memory_budget()
    if required > budget and not force:
        raise BudgetExceeded(what, required, budget)


Mul = Callable[[np.ndarray, np.ndarray], np.ndarray]
Inv = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class GroupHandle:
    """A finite group with elements encoded as ranks ``0 .. order-1``.

    ``mul`` and ``inv`` must accept integer arrays (or scalars) and broadcast.
    ``identity`` is the rank of the neutral element and ``generators`` a
    nonempty list of ranks generating the whole group. ``bytes_per_element``
    feeds the memory estimate of whole-group passes.
    """

    order: int
    mul: Mul
    inv: Inv
    identity: int
    label: str
    generators: tuple[int, ...]
    bytes_per_element: int = BYTES_PER_ELEMENT
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("group order must be positive")
        if not self.generators:
            raise ValueError("at least one generator is required")

    def ranks(self) -> np.ndarray:
        """All ranks, as one shared read-only array."""
        ranks = self._cache.get("ranks")
        if ranks is None:
            ranks = np.arange(self.order, dtype=np.int64)
            ranks.flags.writeable = False
            self._cache["ranks"] = ranks
        return ranks

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupHandle({self.label!r}, order={self.order})"


@dataclass
class ClassData:
    """Conjugacy partition: class id per rank, minimal-rank reps, class sizes."""

    class_of: np.ndarray
    reps: list[int]
    sizes: list[int]

    def __len__(self) -> int:
        return len(self.reps)

    def size_of(self, x) -> np.ndarray | int:
        sizes = np.asarray(self.sizes, dtype=np.int64)
        out = sizes[self.class_of[x]]
        return int(out) if np.ndim(out) == 0 else out


@dataclass
class ClassSizeSet:
    distinct_sizes: list[int]
    multiplicity: dict[int, int]

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "ClassSizeSet":
        counts = Counter(int(s) for s in sizes)
        distinct = sorted(counts)
        return cls(distinct, {s: counts[s] for s in distinct})

    def as_set(self) -> set[int]:
        return set(self.distinct_sizes)


def _as_int(x) -> int:
    return int(np.asarray(x))


def product_of(G: GroupHandle, x: int, y: int) -> int:
    return _as_int(G.mul(np.int64(x), np.int64(y)))


def power(G: GroupHandle, x, e: int) -> np.ndarray:
    """Elementwise ``x**e`` by square-and-multiply; ``e`` may be negative."""
    x = np.asarray(x, dtype=np.int64)
    if e < 0:
        x = np.asarray(G.inv(x), dtype=np.int64)
        e = -e
    result = np.full(x.shape, G.identity, dtype=np.int64)
    base = x
    while e:
        if e & 1:
            result = G.mul(result, base)
        e >>= 1
        if e:
            base = G.mul(base, base)
    return result


def element_order(G: GroupHandle, x: int) -> int:
    cur = int(x)
    k = 1
    while cur != G.identity:
        cur = product_of(G, cur, x)
        k += 1
        if k > G.order:
            raise ArithmeticError(f"element {x} has no finite order in {G.label}")
    return k


def element_orders(G: GroupHandle, xs=None) -> np.ndarray:
    """Orders of many elements at once (all of ``G`` by default)."""
    xs = G.ranks() if xs is None else np.asarray(xs, dtype=np.int64)
    orders = np.zeros(xs.shape, dtype=np.int64)
    cur = xs.copy()
    k = 1
    pending = np.ones(xs.shape, dtype=bool)
    while pending.any():
        done = pending & (cur == G.identity)
        orders[done] = k
        pending &= ~done
        if not pending.any():
            break
        if k >= G.order:
            raise ArithmeticError(f"element of infinite order in {G.label}")
        cur = np.where(pending, G.mul(cur, xs), cur)
        k += 1
    return orders


def commuting_mask(G: GroupHandle, x: int, candidates=None) -> np.ndarray:
    cand = G.ranks() if candidates is None else np.asarray(candidates, dtype=np.int64)
    x = np.int64(x)
    return G.mul(cand, x) == G.mul(x, cand)


def centralizer(G: GroupHandle, x: int) -> list[int]:
    ranks = G.ranks()
    return ranks[commuting_mask(G, x, ranks)].tolist()


def centralizer_in(G: GroupHandle, subgroup: Sequence[int], x: int) -> list[int]:
    """``C_S(x)`` for a subset ``S`` of ``G`` given by its ranks."""
    sub = np.unique(np.asarray(subgroup, dtype=np.int64))
    return sub[commuting_mask(G, x, sub)].tolist()


def index_of(G: GroupHandle, x: int) -> int:
    return G.order // int(commuting_mask(G, x).sum())


def conjugation_map(G: GroupHandle, g: int) -> np.ndarray:
    """The permutation ``x -> g^-1 x g`` of all ranks."""
    g = np.int64(g)
    return G.mul(G.mul(G.inv(g), G.ranks()), g)


def conjugacy_partition(G: GroupHandle, force: bool = False) -> ClassData:
    """Partition ``G`` into conjugacy classes.

    Classes are the orbits of the conjugation action, which are the connected
    components of the graph joining ``x`` to ``g^-1 x g`` for each generator
    ``g``. Class ids are numbered by increasing minimal rank.
    """
    if "classes" in G._cache:
        return G._cache["classes"]
    n = G.order
    check_budget(f"conjugacy partition of {G.label}", n * G.bytes_per_element, force)
    ranks = G.ranks()
    src = np.concatenate([ranks] * len(G.generators))
    dst = np.concatenate([conjugation_map(G, g) for g in G.generators])
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=False)
    del graph, src, dst
    _, first = np.unique(labels, return_index=True)
    # ranks are visited in increasing order, so first hit is the minimal rank
    by_rep = np.argsort(first, kind="stable")
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[by_rep] = np.arange(ncomp)
    class_of = relabel[labels]
    sizes = np.bincount(class_of, minlength=ncomp)
    data = ClassData(class_of, first[by_rep].tolist(), sizes.tolist())
    G._cache["classes"] = data
    return data


def class_size_set(G: GroupHandle, force: bool = False) -> ClassSizeSet:
    return ClassSizeSet.from_sizes(conjugacy_partition(G, force).sizes)


def center(G: GroupHandle, force: bool = False) -> list[int]:
    data = conjugacy_partition(G, force)
    return sorted(r for r, s in zip(data.reps, data.sizes) if s == 1)


def direct_product(G1: GroupHandle, G2: GroupHandle, force: bool = False) -> GroupHandle:
    """``G1 x G2`` with rank ``r1 * |G2| + r2``."""
    n2 = G2.order
    order = G1.order * n2
    per_element = G1.bytes_per_element + G2.bytes_per_element
    check_budget(f"direct product {G1.label} x {G2.label}", order * per_element, force)

    def mul(x, y):
        x1, x2 = np.divmod(np.asarray(x, dtype=np.int64), n2)
        y1, y2 = np.divmod(np.asarray(y, dtype=np.int64), n2)
        return G1.mul(x1, y1) * n2 + G2.mul(x2, y2)

    def inv(x):
        x1, x2 = np.divmod(np.asarray(x, dtype=np.int64), n2)
        return G1.inv(x1) * n2 + G2.inv(x2)

    gens = [g * n2 + G2.identity for g in G1.generators]
    gens += [G1.identity * n2 + g for g in G2.generators]
    return GroupHandle(
        order=order,
        mul=mul,
        inv=inv,
        identity=G1.identity * n2 + G2.identity,
        label=f"{G1.label} x {G2.label}",
        generators=tuple(gens),
        bytes_per_element=per_element,
    )


def prime_part(n: int, s: int) -> int:
    return s ** factorint(n).get(s, 0)


def is_nilpotent(G: GroupHandle) -> bool:
    """Frobenius criterion: for each prime s, the s-elements number exactly |G|_s."""
    ranks = G.ranks()
    for s in factorint(G.order):
        part = prime_part(G.order, s)
        count = int((power(G, ranks, part) == G.identity).sum())
        if count != part:
            return False
    return True


def subgroup_closure(G: GroupHandle, seed: Sequence[int]) -> list[int]:
    """Smallest subgroup containing ``seed``."""
    gens = np.unique(np.asarray(list(seed), dtype=np.int64))
    member = np.zeros(G.order, dtype=bool)
    member[G.identity] = True
    frontier = np.array([G.identity], dtype=np.int64)
    while frontier.size and gens.size:
        prods = G.mul(frontier[:, None], gens[None, :]).ravel()
        fresh = np.unique(prods[~member[prods]])
        member[fresh] = True
        frontier = fresh
    return np.flatnonzero(member).tolist()


def _sylow_subgroup(G: GroupHandle, s: int, part: int) -> list[int]:
    # grow an s-subgroup by s-elements of its normalizer until it has order |G|_s
    ranks = G.ranks()
    s_elements = ranks[power(G, ranks, part) == G.identity]
    current = [G.identity]
    while len(current) < part:
        cur = np.asarray(current, dtype=np.int64)
        members = np.zeros(G.order, dtype=bool)
        members[cur] = True
        for x in s_elements:
            if members[x]:
                continue
            conj = G.mul(G.mul(G.inv(np.int64(x)), cur), np.int64(x))
            if members[conj].all():
                current = subgroup_closure(G, current + [int(x)])
                break
        else:
            raise ArithmeticError(f"no Sylow {s}-subgroup found in {G.label}")
    return current


def count_sylow_subgroups(G: GroupHandle, s: int) -> int:
    """Number of Sylow ``s``-subgroups.

    When ``|G|_s = s`` each Sylow subgroup is cyclic of prime order, so the
    count is the number of distinct cyclic subgroups generated by elements of
    order ``s``. Larger ``s``-parts fall back to ``|G : N_G(P)|`` and are only
    attempted for groups of order at most 10**4.
    """
    part = prime_part(G.order, s)
    if part == 1:
        raise ValueError(f"{s} does not divide |{G.label}| = {G.order}")
    if part == s:
        ranks = G.ranks()
        hits = ranks[(element_orders(G) == s)]
        subgroups = {tuple(subgroup_closure(G, [int(x)])) for x in hits}
        return len(subgroups)
    if G.order > EXHAUSTIVE_SUBGROUP_LIMIT:
        raise BudgetExceeded(
            f"Sylow {s}-subgroup count of {G.label} (s-part {part})",
            G.order,
            EXHAUSTIVE_SUBGROUP_LIMIT,
        )
    P = np.asarray(_sylow_subgroup(G, s, part), dtype=np.int64)
    in_P = np.zeros(G.order, dtype=bool)
    in_P[P] = True
    normalizer = 0
    for g in G.ranks():
        g = np.int64(g)
        if in_P[G.mul(G.mul(G.inv(g), P), g)].all():
            normalizer += 1
    return G.order // normalizer


def check_axioms(
    G: GroupHandle,
    exhaustive_limit: int = 200,
    samples: int = 10_000,
    seed: int = 0,
) -> list[str]:
    """Return a list of violated group axioms (empty when none are found)."""
    problems = []
    ranks = G.ranks()
    e = np.int64(G.identity)
    if not (np.array_equal(G.mul(e, ranks), ranks) and np.array_equal(G.mul(ranks, e), ranks)):
        problems.append("identity")
    if not (G.mul(ranks, G.inv(ranks)) == G.identity).all():
        problems.append("inverse")
    if G.order <= exhaustive_limit:
        x, y, z = (a.ravel() for a in np.meshgrid(ranks, ranks, ranks, indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, G.order, size=(3, samples))
    if not np.array_equal(G.mul(G.mul(x, y), z), G.mul(x, G.mul(y, z))):
        problems.append("associativity")
    if G.order <= EXHAUSTIVE_SUBGROUP_LIMIT * 1000:
        if len(subgroup_closure(G, G.generators)) != G.order:
            problems.append("generators")
    return problems


def is_abelian(G: GroupHandle) -> bool:
    gens = np.asarray(G.generators, dtype=np.int64)
    return bool((G.mul(gens[:, None], gens[None, :]) == G.mul(gens[None, :], gens[:, None])).all())

