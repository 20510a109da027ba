"""Parameter sweeps over the model family, with per-suite tallies.

Each suite walks a bounded region of the ``(d, n, m, c, a)`` parameter
space (plus the D/E catalogue where it applies), re-derives an invariant
by an independent route, and records any mismatch.  The suites are what
the command line ``sweep`` subcommand runs and what the acceptance
tests call directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterator

from .arith import hj_evaluate, mod_inverse
from .birational import blowup_at_R2, blowup_description, roundtrip_check
from .compactify import (
    CompactificationModel,
    RootConfig,
    build_cyclic,
    build_rdp,
    enumerate_weights,
    minimal_resolution,
    smoothness_status,
    topology,
)
from .quotients import QuotientSingularity, detect_class_T, hj_resolution, normalize
from .tianyau import check_hypotheses, orbifold_adjunction_residual

_MAX_RECORDED = 12


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failure_count: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def tick(self) -> None:
        self.cases += 1

    def fail(self, message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < _MAX_RECORDED:
            self.failures.append(message)


def cyclic_tuples(max_d: int, max_n: int, max_c: int) -> Iterator[tuple[int, int, int, int]]:
    """All ``(d, n, m, c)`` with ``gcd(m, n) = gcd(c, n) = 1`` in range."""
    for d in range(1, max_d + 1):
        for n in range(1, max_n + 1):
            for m in range(1, n + 1):
                if gcd(m, n) != 1:
                    continue
                for c in range(1, max_c + 1):
                    if gcd(c, n) != 1:
                        continue
                    yield d, n, m, c


def default_roots(d: int) -> RootConfig:
    return RootConfig.simple(range(1, d + 1))


def iter_models(max_d: int, max_n: int, max_c: int) -> Iterator[CompactificationModel]:
    """Every model with simple roots ``1..d`` over the admissible weights."""
    for d, n, m, c in cyclic_tuples(max_d, max_n, max_c):
        enum = enumerate_weights(d, n, m, c)
        for pair in enum.pairs:
            yield build_cyclic(d, n, m, c, pair.a, default_roots(d))


def rdp_models(max_dk: int = 12):
    for k in range(4, max_dk + 1):
        yield build_rdp("D", k)
    for k in (6, 7, 8):
        yield build_rdp("E", k)


def weight_family_suite(max_d: int, max_n: int) -> SuiteResult:
    """At ``c = 1`` and ``n >= 2`` the admissible weights must be exactly
    the ``d`` pairs ``(u + k*n, (d - k)*n - u)`` for ``k = 0..d-1``."""
    out = SuiteResult("weight-family")
    for d in range(1, max_d + 1):
        for n in range(2, max_n + 1):
            for m in range(1, n + 1):
                if gcd(m, n) != 1:
                    continue
                out.tick()
                u = mod_inverse(m, n)
                expected = [(u + k * n, (d - k) * n - u) for k in range(d)]
                got = enumerate_weights(d, n, m, 1).pair_tuples()
                if got != expected:
                    out.fail(f"(d,n,m)=({d},{n},{m}): pairs {got} != {expected}")
                if len(got) != d:
                    out.fail(f"(d,n,m)=({d},{n},{m}): {len(got)} pairs, wanted {d}")
    return out


def residual_suite(max_d: int, max_n: int, max_c: int, max_dk: int = 12) -> SuiteResult:
    """Weight conditions and the orbifold adjunction residual, every model."""
    out = SuiteResult("adjunction-residual")
    for model in iter_models(max_d, max_n, max_c):
        out.tick()
        a, b, c = model.weights_abc
        d, n, m = model.descriptor.d, model.descriptor.n, model.descriptor.m
        if a + b != d * n * c:
            out.fail(f"{model.label()}: a+b != dnc")
        if (a * m - c) % n:
            out.fail(f"{model.label()}: action congruence fails")
        if gcd(c, n) != 1 or gcd(a, c) != 1:
            out.fail(f"{model.label()}: divisibility condition fails")
        res = orbifold_adjunction_residual(model)
        if res != 0:
            out.fail(f"{model.label()}: residual {res}")
        report = check_hypotheses(minimal_resolution(model))
        if not report.all_satisfied:
            out.fail(f"{model.label()}: hypotheses fail after resolution")
    for model in rdp_models(max_dk):
        out.tick()
        res = orbifold_adjunction_residual(model)
        if res != 0:
            out.fail(f"{model.label()}: residual {res}")
        if not check_hypotheses(model).all_satisfied:
            out.fail(f"{model.label()}: hypotheses fail")
    return out


def topology_suite(max_d: int, max_n: int, max_c: int) -> SuiteResult:
    """Euler characteristics, Betti numbers, fundamental group order,
    and the blow-up Euler count, for simple roots and for one fully
    degenerate root configuration per parameter tuple."""
    out = SuiteResult("topology")
    for d, n, m, c in cyclic_tuples(max_d, max_n, max_c):
        enum = enumerate_weights(d, n, m, c)
        if not enum.pairs:
            continue
        a = enum.pairs[0].a
        for roots in (default_roots(d), RootConfig.of([(1, d)])):
            out.tick()
            model = build_cyclic(d, n, m, c, a, roots)
            t = topology(model)
            label = model.label()
            if t.chi_Mbar != d + 2 or t.b2_Mbar != d:
                out.fail(f"{label}: compact invariants ({t.chi_Mbar}, {t.b2_Mbar})")
            if t.pi1_order_M != n:
                out.fail(f"{label}: pi1 order {t.pi1_order_M} != {n}")
            if t.chi_Mbar != t.chi_M + 2 or t.b2_Mbar != t.b2_M + 1:
                out.fail(f"{label}: fibre/compact bookkeeping off")
            if t.chi_Mbar != 2 + t.b2_Mbar:
                out.fail(f"{label}: chi != 2 + b2")
            desc = blowup_description(model)
            if desc.euler_characteristic != t.chi_Mbar + 1:
                out.fail(
                    f"{label}: blow-up Euler count {desc.euler_characteristic} "
                    f"!= chi + 1 = {t.chi_Mbar + 1}"
                )
            status = smoothness_status(roots)
            model_indices = tuple(sorted(k for _, k in model.interior_singularities))
            if status.a_indices != model_indices:
                out.fail(f"{label}: fibre status {status.a_indices} != {model_indices}")
            resolved = minimal_resolution(model)
            if resolved.beta != model.beta:
                out.fail(f"{label}: resolution changed beta")
            for lbl, chain in resolved.exceptional_chains:
                if any(e != 2 for e in chain.entries):
                    out.fail(f"{label}: chain at {lbl} not all (-2)")
    return out


def roundtrip_suite(
    max_d: int, max_n: int, max_c: int, samples: int, seed: int
) -> SuiteResult:
    out = SuiteResult("projection-roundtrip")
    for index, model in enumerate(iter_models(max_d, max_n, max_c)):
        out.tick()
        if not roundtrip_check(model, samples, seed + index):
            out.fail(f"{model.label()}: roundtrip mismatch")
    return out


def blowup_suite(max_d: int, max_n: int, max_c: int, count: int, seed: int) -> SuiteResult:
    """Blow-up chart actions must normalize to the plane's coordinate
    quotient points ``1/c(a, n)`` and ``1/n(a, c)``."""
    out = SuiteResult("blowup-singularities")
    models = list(iter_models(max_d, max_n, max_c))
    rng = random.Random(seed)
    chosen = rng.sample(models, min(count, len(models)))
    for model in chosen:
        out.tick()
        blow = blowup_at_R2(model)
        a, c, n = model.a, model.c, model.n
        expected = (
            normalize(QuotientSingularity(c, (a, n))),
            normalize(QuotientSingularity(n, (a, c))),
        )
        if blow.new_singularities != expected:
            out.fail(f"{model.label()}: blow-up points {blow.new_singularities}")
        orders = tuple(o for o in (c, n) if o > 1)
        if blow.exceptional_curve.orbifold_orders != orders:
            out.fail(f"{model.label()}: exceptional orders")
    return out


def brute_force_class_t(r: int, q: int) -> list[tuple[int, int, int]]:
    """Enumerate ``(d, n, m)`` readings of ``1/r(1, q)`` directly.

    Checks ``d*n*m - 1 == q (mod r)`` for every ``n`` with ``n^2 | r``
    and every ``m`` prime to ``n``; used as the oracle against
    detect_class_T.
    """
    sols = []
    for n in range(isqrt(r), 0, -1):
        if r % (n * n):
            continue
        d = r // (n * n)
        for m in range(1, n + 1):
            if gcd(m, n) == 1 and (d * n * m - 1 - q) % r == 0:
                sols.append((d, n, m))
    return sols


def class_t_suite(max_r: int) -> SuiteResult:
    out = SuiteResult("class-t-detection")
    for r in range(1, max_r + 1):
        qs = [1] if r == 1 else [q for q in range(1, r) if gcd(q, r) == 1]
        for q in qs:
            out.tick()
            s = QuotientSingularity(r, (1, q))
            found = detect_class_T(s)
            expected = brute_force_class_t(r, q)
            if not expected:
                if found is not None:
                    out.fail(f"1/{r}(1,{q}): false positive {found}")
                continue
            if found is None:
                out.fail(f"1/{r}(1,{q}): missed {expected}")
                continue
            if list(found.solutions) != expected:
                out.fail(f"1/{r}(1,{q}): {found.solutions} != {expected}")
            if (found.d, found.n, found.m) != expected[0]:
                out.fail(f"1/{r}(1,{q}): primary reading off")
    return out


def hj_suite(max_r: int) -> SuiteResult:
    """Resolution chains re-evaluate to ``r/q`` with all entries >= 2."""
    out = SuiteResult("hj-chains")
    for r in range(2, max_r + 1):
        for q in range(1, r):
            if gcd(q, r) != 1:
                continue
            out.tick()
            chain = hj_resolution(QuotientSingularity(r, (1, q)))
            if any(b < 2 for b in chain.entries):
                out.fail(f"1/{r}(1,{q}): entry below 2")
            if hj_evaluate(chain.entries) * q != r:
                out.fail(f"1/{r}(1,{q}): chain does not evaluate to {r}/{q}")
    return out


def run_all(
    max_d: int = 4,
    max_n: int = 4,
    max_c: int = 3,
    samples: int = 10,
    seed: int = 0,
    max_r: int = 80,
    blowup_count: int = 20,
) -> list[SuiteResult]:
    return [
        weight_family_suite(max_d, max_n),
        residual_suite(max_d, max_n, max_c),
        topology_suite(max_d, max_n, max_c),
        roundtrip_suite(max_d, max_n, max_c, samples, seed),
        blowup_suite(max_d, max_n, max_c, blowup_count, seed),
        class_t_suite(max_r),
        hj_suite(max_r),
    ]
