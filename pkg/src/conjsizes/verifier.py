"""Executable checks of the main theorem, its corollary, the two lemmas and
each step of the case analysis, on concrete parameter choices.

Numeric claims about single elements are computed twice: once by filtering
the whole group for commuting elements (``index_of``) and once from the
orbit partition, and the two are reconciled.
"""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import core
from .construction import (
    FamilyParams,
    build_AB,
    build_G,
    build_P,
    build_Q,
    coset_ranks,
    describe,
    h_ranks,
    hvec_from_indicator,
    hvec_rank,
)
from .core import BudgetExceeded, GroupHandle
from .smallgroups import (
    affine,
    automorphism_order,
    coprime_semidirect,
    cyclic,
    dihedral,
    symmetric,
)

SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: Any
    actual: Any
    witness: Any = None

    @classmethod
    def compare(cls, name: str, expected, actual, witness=None) -> "CheckResult":
        return cls(name, expected == actual, expected, actual, witness)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    params: FamilyParams | None
    checks: list[CheckResult] = field(default_factory=list)
    wallclock: float = 0.0
    settings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.wallclock += other.wallclock

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "params": None if self.params is None else self.params.to_dict(),
            "settings": self.settings,
            "passed": self.passed,
            "num_checks": len(self.checks),
            "num_failed": len(self.failures()),
            "checks": [c.to_dict() for c in self.checks],
        }
        if include_timing:
            out["wallclock"] = round(self.wallclock, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        if self.params is not None:
            pr = self.params
            lines.append(f"p={pr.p} q={pr.q} r={pr.r} beta={format_cycles(pr.beta_cycles())}")
        width = max((len(c.name) for c in self.checks), default=4)
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name:<{width}}  expected={_short(c.expected)}  actual={_short(c.actual)}"
            if c.witness is not None:
                line += f"  witness={_short(c.witness)}"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def format_cycles(cycs: Sequence[Sequence[int]]) -> str:
    return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycs) or "()"


def _short(value, limit: int = 120) -> str:
    text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return text if len(text) <= limit else text[: limit - 3] + "..."


# -- shared state for one parameter choice -----------------------------------

class FamilyContext:
    """``G`` for one parameter choice, with its partition and the special elements."""

    def __init__(
        self,
        params: FamilyParams,
        force: bool = False,
        strict: bool = True,
        samples: int | None = None,
        seed: int = 0,
    ):
        self.params = params
        self.p, self.q = params.p, params.q
        self.G = build_G(params, force=force, strict=strict)
        self.force = force
        self.classes = core.conjugacy_partition(self.G, force=force)
        self.H = h_ranks(self.G)
        self.identity = self.G.identity
        self.alpha = int(coset_ranks(self.G, 1, 0)[0])
        self.beta = int(coset_ranks(self.G, 0, 1)[0])
        self.alpha_beta = int(coset_ranks(self.G, 1, 1)[0])
        # reconciliation sample size per family of elements; exhaustive when small
        self.samples = samples
        self.seed = seed

    def sample(self, ranks: np.ndarray, salt: int) -> np.ndarray:
        limit = self.samples
        if limit is None:
            limit = ranks.size if ranks.size <= 625 else 16
        if ranks.size <= limit:
            return ranks
        rng = np.random.default_rng([self.seed, salt])
        return np.sort(rng.choice(ranks, size=limit, replace=False))

    def h_element(self, vec) -> int:
        return int(self.H[hvec_rank(tuple(vec), self.p)])

    def index_set(self, ranks: np.ndarray) -> list[int]:
        return sorted(set(self.classes.size_of(ranks).tolist()))

    def reconcile(self, name: str, ranks: np.ndarray, salt: int) -> CheckResult:
        """Centralizer-filter index vs. partition class size on a sample."""
        picked = self.sample(np.asarray(ranks), salt)
        bad = None
        for x in picked.tolist():
            idx = core.index_of(self.G, x)
            size = self.classes.size_of(x)
            if idx != size:
                bad = {"rank": x, "element": describe(self.G, x), "centralizer_index": idx, "class_size": size}
                break
        return CheckResult(
            f"{name} reconciled with partition ({picked.size} elements)",
            bad is None,
            0,
            0 if bad is None else 1,
            bad,
        )


def _context(obj, **kwargs) -> FamilyContext:
    return obj if isinstance(obj, FamilyContext) else FamilyContext(obj, **kwargs)


# -- theorem ------------------------------------------------------------------

def expected_sizes(p: int, q: int) -> list[int]:
    return sorted({d * e for d in (1, p, p ** (p - 2)) for e in (1, q)})


def check_relations(ctx: FamilyContext) -> list[CheckResult]:
    G, p, q = ctx.G, ctx.p, ctx.q
    a, b = ctx.alpha, ctx.beta
    out = [CheckResult.compare("parameters valid", [], ctx.params.problems())]
    out.append(CheckResult.compare("alpha^p = 1", True, bool(core.power(G, a, p) == G.identity)))
    out.append(CheckResult.compare("beta^q = 1", True, bool(core.power(G, b, q) == G.identity)))
    conj = core.product_of(G, core.product_of(G, int(G.inv(np.int64(b))), a), b)
    out.append(
        CheckResult.compare("beta^-1 alpha beta = alpha^r", int(core.power(G, a, ctx.params.r)), conj)
    )
    h_orders = core.power(G, ctx.H, p)
    out.append(CheckResult.compare("H has exponent p", True, bool((h_orders == G.identity).all())))
    basis = [ctx.h_element(hvec_from_indicator([i], p)) for i in range(2, p + 1)]
    bx = np.asarray(basis)
    commute = bool((G.mul(bx[:, None], bx[None, :]) == G.mul(bx[None, :], bx[:, None])).all())
    out.append(CheckResult.compare("H is abelian", True, commute))
    out.append(CheckResult.compare("group axioms (sampled associativity)", [], core.check_axioms(G, seed=ctx.seed)))
    return out


def check_theorem(params, **kwargs) -> VerificationReport:
    """Class sizes of ``G`` are ``{1, p, p^(p-2)} x {1, q}`` and the center is trivial."""
    start = time.perf_counter()
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    sizes = ctx.classes.sizes
    checks = check_relations(ctx)
    checks.append(CheckResult.compare("|G| = p^p q", p**p * q, G.order))
    checks.append(CheckResult.compare("class equation", G.order, int(sum(sizes))))
    checks.append(
        CheckResult.compare("class sizes divide |G|", True, all(G.order % s == 0 for s in sizes))
    )
    checks.append(
        CheckResult.compare("N(G)", expected_sizes(p, q), core.class_size_set(G).distinct_sizes)
    )
    z = core.center(G)
    checks.append(CheckResult.compare("|Z(G)|", 1, len(z), witness=z[:8] if len(z) > 1 else None))
    return VerificationReport(ctx.params, checks, time.perf_counter() - start)


# -- corollary ----------------------------------------------------------------

def check_corollary(params, twist: int | None = None, **kwargs) -> VerificationReport:
    """``N(G) = N(L)`` for the nilpotent ``L = (H x| A) x (C_{q^2} x| C_q)``.

    If ``L`` is over the memory budget its class sizes, nilpotency and center
    are assembled from those of ``P`` and ``Q``; such checks are labelled
    ``(via factors)``.
    """
    start = time.perf_counter()
    ctx = _context(params, **kwargs)
    p, q = ctx.p, ctx.q
    force = ctx.force
    P = build_P(ctx.params, force=force, strict=False)
    Q = build_Q(q, twist)
    checks = [
        CheckResult.compare("|P| = p^p", p**p, P.order),
        CheckResult.compare("|Q| = q^3", q**3, Q.order),
        CheckResult.compare("Q group axioms", [], core.check_axioms(Q)),
    ]
    n_p = core.class_size_set(P, force).distinct_sizes
    n_q = core.class_size_set(Q).distinct_sizes
    checks.append(CheckResult.compare("N(P)", [1, p, p ** (p - 2)], n_p))
    checks.append(CheckResult.compare("N(Q)", [1, q], n_q))
    products = sorted({a * b for a in n_p for b in n_q})
    n_g = core.class_size_set(ctx.G).distinct_sizes
    try:
        L = core.direct_product(P, Q, force)
        core.conjugacy_partition(L, force)
    except BudgetExceeded:
        L = None
    if L is not None:
        n_l = core.class_size_set(L).distinct_sizes
        checks.append(CheckResult.compare("|L| = p^p q^3", p**p * q**3, L.order))
        checks.append(CheckResult.compare("N(L) = N(G)", n_g, n_l))
        checks.append(CheckResult.compare("N(L) = N(P) x N(Q)", products, n_l))
        checks.append(CheckResult.compare("L nilpotent", True, core.is_nilpotent(L)))
        z_l = len(core.center(L))
        checks.append(CheckResult.compare("Z(L) nontrivial", True, z_l > 1, witness={"|Z(L)|": z_l}))
    else:
        checks.append(CheckResult.compare("N(L) = N(G) (via factors)", n_g, products))
        nil = core.is_nilpotent(P) and core.is_nilpotent(Q)
        checks.append(CheckResult.compare("L nilpotent (via factors)", True, nil))
        z_l = len(core.center(P)) * len(core.center(Q))
        checks.append(
            CheckResult.compare("Z(L) nontrivial (via factors)", True, z_l > 1, witness={"|Z(L)|": z_l})
        )
    checks.append(CheckResult.compare("G not nilpotent", False, core.is_nilpotent(ctx.G)))
    return VerificationReport(ctx.params, checks, time.perf_counter() - start)


# -- proof steps ---------------------------------------------------------------

def _subset_product(G: GroupHandle, xs, ys) -> list[int]:
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    return np.unique(G.mul(xs[:, None], ys[None, :])).tolist()


def check_step1(params, **kwargs) -> list[CheckResult]:
    """``|C_H(alpha)| = p`` and ``Ind_G(alpha) = p^(p-2) q``."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    c_h = core.centralizer_in(G, ctx.H, ctx.alpha)
    fixed = ctx.h_element([0] + [p - i for i in range(1, p)])
    cyclic_part = core.subgroup_closure(G, [fixed])
    a_powers = [int(core.power(G, ctx.alpha, i)) for i in range(p)]
    out = [
        CheckResult.compare("step1 |C_H(alpha)|", p, len(c_h)),
        CheckResult.compare(
            "step1 C_H(alpha) = <(0, p-1, ..., 1)>", cyclic_part, c_h, witness=describe(G, fixed)
        ),
        CheckResult.compare(
            "step1 C_H(alpha^i) = C_H(alpha) for 0<i<p",
            [c_h] * (p - 1),
            [core.centralizer_in(G, ctx.H, x) for x in a_powers[1:]],
        ),
        CheckResult.compare("step1 Ind_G(alpha)", p ** (p - 2) * q, core.index_of(G, ctx.alpha)),
        CheckResult.compare(
            "step1 C_G(alpha) = C_H(alpha) A",
            _subset_product(G, c_h, a_powers),
            core.centralizer(G, ctx.alpha),
        ),
        ctx.reconcile("step1 Ind_G(alpha)", np.array([ctx.alpha]), 1),
    ]
    return out


def check_step2(params, **kwargs) -> list[CheckResult]:
    """``|C_H(beta)| = p^2`` and ``Ind_G(beta) = p^(p-2)``."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    c_h = core.centralizer_in(G, ctx.H, ctx.beta)
    cycs = ctx.params.beta_cycles()
    spanning = [ctx.h_element(hvec_from_indicator(c, p)) for c in cycs]
    b_powers = [int(core.power(G, ctx.beta, i)) for i in range(q)]
    c_h_alpha = core.centralizer_in(G, ctx.H, ctx.alpha)
    return [
        CheckResult.compare(
            "step2 C_H(beta) = <k_m1..k_mq N, k_n1..k_nq N>",
            core.subgroup_closure(G, spanning),
            c_h,
            witness=[describe(G, x) for x in spanning],
        ),
        CheckResult.compare("step2 |C_H(beta)|", p**2, len(c_h)),
        CheckResult.compare(
            "step2 C_H(alpha) & C_H(beta) = 1", [G.identity], sorted(set(c_h) & set(c_h_alpha))
        ),
        CheckResult.compare("step2 Ind_G(beta)", p ** (p - 2), core.index_of(G, ctx.beta)),
        CheckResult.compare(
            "step2 C_G(beta) = C_H(beta) B", _subset_product(G, c_h, b_powers), core.centralizer(G, ctx.beta)
        ),
        ctx.reconcile("step2 Ind_G(beta)", np.array([ctx.beta]), 2),
    ]


def check_step3(params, **kwargs) -> list[CheckResult]:
    """``AB`` has ``p`` Sylow ``q``-subgroups and ``Ind_G(alpha beta) = p^(p-2)``."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    AB = build_AB(ctx.params)
    ranks = AB.ranks()
    outside_a = ranks[ranks % q != 0]
    orders = sorted(set(core.element_orders(AB, outside_a).tolist()))
    # the same elements inside G: h = 1, b != 0
    in_g = np.concatenate([coset_ranks(G, a, b)[:1] for a in range(p) for b in range(1, q)])
    orders_g = sorted(set(core.element_orders(G, in_g).tolist()))
    b_class = set(ctx.classes.class_of[coset_ranks(G, 0, b)[0]] for b in range(1, q))
    return [
        CheckResult.compare("step3 Sylow q-subgroups of AB", p, core.count_sylow_subgroups(AB, q)),
        CheckResult.compare("step3 orders on AB - A", [q], orders),
        CheckResult.compare("step3 orders on AB - A inside G", [q], orders_g),
        CheckResult.compare(
            "step3 alpha beta conjugate into B", True, int(ctx.classes.class_of[ctx.alpha_beta]) in b_class
        ),
        CheckResult.compare("step3 Ind_G(alpha beta)", p ** (p - 2), core.index_of(G, ctx.alpha_beta)),
        ctx.reconcile("step3 Ind_G(alpha beta)", np.array([ctx.alpha_beta]), 3),
    ]


def check_step4(params, **kwargs) -> list[CheckResult]:
    """``{Ind_G(h) : 1 != h in H} = {p, q, pq}``."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    nontrivial = ctx.H[ctx.H != G.identity]
    values = ctx.index_set(nontrivial)
    generic = nontrivial[ctx.classes.size_of(nontrivial) == p * q]
    witness = None
    if generic.size:
        h = int(generic[0])
        found = core.centralizer(G, h) == ctx.H.tolist()
        witness = describe(G, h)
    else:
        found = False
    return [
        CheckResult.compare("step4 {Ind_G(h) : 1 != h in H}", sorted({p, q, p * q}), values),
        CheckResult.compare("step4 some h has C_G(h) = H", True, found, witness=witness),
        CheckResult.compare("step4 p^3 + p < p^(p-1)", True, p**3 + p < p ** (p - 1)),
        ctx.reconcile("step4 Ind_G(h)", nontrivial, 4),
    ]


def check_step5(params, **kwargs) -> list[CheckResult]:
    """``(h alpha)^p = 1`` and ``Ind_G(h alpha) = p^(p-2) q`` for every ``h``."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    coset = coset_ranks(G, 1, 0)
    powers = core.power(G, coset, p)
    bad = coset[powers != G.identity]
    return [
        CheckResult.compare(
            f"step5 (h alpha)^p = 1 for all {coset.size} h",
            0,
            int(bad.size),
            witness=describe(G, int(bad[0])) if bad.size else None,
        ),
        CheckResult.compare(f"step5 Ind_G(h alpha) over all {coset.size} h", [p ** (p - 2) * q], ctx.index_set(coset)),
        ctx.reconcile("step5 Ind_G(h alpha)", coset, 5),
    ]


def check_step6(params, **kwargs) -> list[CheckResult]:
    """``Ind_G(h alpha beta) = Ind_G(h beta) = p^(p-2)``."""
    ctx = _context(params, **kwargs)
    G, p = ctx.G, ctx.p
    hb = coset_ranks(G, 0, 1)
    hab = coset_ranks(G, 1, 1)
    hb_classes = np.zeros(len(ctx.classes), dtype=bool)
    hb_classes[ctx.classes.class_of[hb]] = True
    stray = hab[~hb_classes[ctx.classes.class_of[hab]]]
    return [
        CheckResult.compare(f"step6 Ind_G(h beta) over all {hb.size} h", [p ** (p - 2)], ctx.index_set(hb)),
        CheckResult.compare(f"step6 Ind_G(h alpha beta) over all {hab.size} h", [p ** (p - 2)], ctx.index_set(hab)),
        CheckResult.compare(
            "step6 every h alpha beta is conjugate to some h' beta",
            0,
            int(stray.size),
            witness=describe(G, int(stray[0])) if stray.size else None,
        ),
        ctx.reconcile("step6 Ind_G(h beta)", hb, 6),
        ctx.reconcile("step6 Ind_G(h alpha beta)", hab, 7),
    ]


STEPS: dict[int, Callable[..., list[CheckResult]]] = {
    1: check_step1,
    2: check_step2,
    3: check_step3,
    4: check_step4,
    5: check_step5,
    6: check_step6,
}


def check_case_analysis(params, **kwargs) -> list[CheckResult]:
    """Every element of ``G`` falls into one of the cases, with the claimed indices."""
    ctx = _context(params, **kwargs)
    G, p, q = ctx.G, ctx.p, ctx.q
    _, a, b = G._cache["arith"].decode(G.ranks())
    sizes = ctx.classes.size_of(G.ranks())
    in_h = (a == 0) & (b == 0)
    cases = {
        "identity": (G.ranks() == G.identity, [1]),
        "H - 1": (in_h & (G.ranks() != G.identity), sorted({p, q, p * q})),
        "h a, 1 != a in A": ((a != 0) & (b == 0), [p ** (p - 2) * q]),
        "h t, t in AB - A": (b != 0, [p ** (p - 2)]),
    }
    covered = np.zeros(G.order, dtype=bool)
    out = []
    union: set[int] = set()
    for label, (mask, expected) in cases.items():
        covered |= mask
        values = sorted(set(sizes[mask].tolist()))
        union.update(values)
        out.append(CheckResult.compare(f"cases {label}: indices", expected, values))
    out.append(CheckResult.compare("cases cover G", G.order, int(covered.sum())))
    out.append(
        CheckResult.compare("cases union = N(G)", core.class_size_set(G).distinct_sizes, sorted(union))
    )
    return out


def _guarded(label: str, job: Callable[[], list[CheckResult]]) -> list[CheckResult]:
    # a broken construction may not even be a group; report that as a failure
    try:
        return job()
    except (ArithmeticError, ValueError, IndexError) as exc:
        return [CheckResult(f"{label} completed", False, "no error", f"{type(exc).__name__}: {exc}")]


def verify(
    params: FamilyParams,
    *,
    samples: int | None = None,
    seed: int = 0,
    threads: int = 1,
    force: bool = False,
    strict: bool = True,
    twist: int | None = None,
) -> VerificationReport:
    """Theorem, corollary, steps (1)-(6) and the case analysis for one ``p``."""
    start = time.perf_counter()
    ctx = FamilyContext(params, force=force, strict=strict, samples=samples, seed=seed)
    ctx.G._cache["arith"].decode(ctx.G.ranks())
    report = VerificationReport(
        params,
        settings={
            "budget_bytes": core.memory_budget(),
            "force": force,
            "samples": samples,
            "seed": seed,
        },
    )
    jobs = [
        ("theorem", lambda: check_theorem(ctx).checks),
        ("corollary", lambda: check_corollary(ctx, twist=twist).checks),
    ]
    jobs += [(f"step{i}", (lambda fn: lambda: fn(ctx))(STEPS[i])) for i in sorted(STEPS)]
    jobs.append(("cases", lambda: check_case_analysis(ctx)))
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(lambda job: _guarded(*job), jobs))
    for checks in results:
        report.checks.extend(checks)
    report.wallclock = time.perf_counter() - start
    return report


# -- lemmas -------------------------------------------------------------------

def default_zoo(max_order: int = 200) -> list[GroupHandle]:
    """Small groups used for property runs and oracle cross-checks."""
    p5 = FamilyParams.create(5)
    p7 = FamilyParams.create(7)
    base = [
        cyclic(1),
        cyclic(6),
        cyclic(12),
        dihedral(3),
        dihedral(4),
        dihedral(5),
        dihedral(6),
        symmetric(3),
        symmetric(4),
        build_Q(2),
        build_Q(3),
        build_AB(p5),
        build_AB(p7),
        affine(5),
    ]
    pairs = [(1, 3), (9, 2), (10, 7), (8, 1), (9, 10), (11, 1), (7, 2), (13, 2), (4, 6), (3, 9)]
    prods = [core.direct_product(base[i], base[j]) for i, j in pairs]
    zoo = [G for G in base + prods if G.order <= max_order]
    if max_order >= 6250:
        zoo += [build_P(p5), build_G(p5)]
    return zoo


def lemma1_property(
    zoo: Sequence[GroupHandle] | None = None, samples: int = 200, seed: int = 0
) -> CheckResult:
    """``C_H(x) = C_H(x^n)`` whenever ``gcd(n, |x|) = 1``, on random triples."""
    if zoo is None:
        zoo = default_zoo(10_000)
    rng = np.random.default_rng(seed)
    violations = 0
    witness = None
    for _ in range(samples):
        G = zoo[int(rng.integers(len(zoo)))]
        seeds = rng.integers(0, G.order, size=int(rng.integers(1, 4))).tolist()
        H = core.subgroup_closure(G, seeds)
        x = int(rng.integers(G.order))
        order = core.element_order(G, x)
        while True:
            n = int(rng.integers(-3 * order - 2, 3 * order + 3))
            if math.gcd(n, order) == 1:
                break
        xn = int(core.power(G, x, n))
        if core.centralizer_in(G, H, x) != core.centralizer_in(G, H, xn):
            violations += 1
            if witness is None:
                witness = {"group": G.label, "subgroup_order": len(H), "x": x, "n": n}
    return CheckResult(f"lemma1 C_H(x) = C_H(x^n) ({samples} cases)", violations == 0, 0, violations, witness)


def random_coprime_instance(rng: np.random.Generator, max_order: int = 10_000):
    """Draw ``(Z/m)^k x| <a>`` with ``gcd(m, |a|) = 1`` and ``|a| > 1``."""
    while True:
        m = int(rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 13]))
        k = int(rng.integers(1, 5))
        if m**k > max_order // 2:
            continue
        perm = rng.permutation(k).tolist()
        units = [u for u in range(1, m) if math.gcd(u, m) == 1]
        scalar = int(rng.choice(units))
        n = automorphism_order(m, perm, scalar)
        if n > 1 and math.gcd(m, n) == 1 and m**k * n <= max_order:
            return coprime_semidirect(m, k, perm, scalar), (m, k, perm, scalar)


def lemma2_property(instances: int = 200, seed: int = 0) -> CheckResult:
    """``Ind(ha) = Ind(a) = |H : C_H(a)|`` for every ``h``, on random coprime instances."""
    rng = np.random.default_rng(seed)
    violations = 0
    witness = None
    for _ in range(instances):
        inst, shape = random_coprime_instance(rng)
        G = inst.group
        ind_a = core.index_of(G, inst.a_rank)
        c_h = core.centralizer_in(G, inst.h_ranks, inst.a_rank)
        quotient = inst.h_ranks.size // len(c_h)
        ha = G.mul(inst.h_ranks, np.int64(inst.a_rank))
        ind_ha = core.conjugacy_partition(G).size_of(ha)
        bad = ind_ha != ind_a
        if ind_a != quotient or bad.any():
            violations += 1
            if witness is None:
                witness = {
                    "instance": {"m": shape[0], "k": shape[1], "perm": shape[2], "scalar": shape[3]},
                    "Ind(a)": ind_a,
                    "|H:C_H(a)|": quotient,
                    "bad_h": int(inst.h_ranks[bad][0]) if bad.any() else None,
                }
    return CheckResult(
        f"lemma2 Ind(ha) = Ind(a) = |H:C_H(a)| ({instances} instances)", violations == 0, 0, violations, witness
    )


def lemma_report(samples: int = 200, seed: int = 0) -> VerificationReport:
    start = time.perf_counter()
    checks = [lemma1_property(samples=samples, seed=seed), lemma2_property(samples, seed)]
    return VerificationReport(
        None, checks, time.perf_counter() - start, settings={"samples": samples, "seed": seed}
    )
