# carlitz/selfcheck.py
"""Built-in acceptance suite.

Golden values are the worked examples for r = 3; the sweeps compare
independent routes against each other and the infrastructure against
brute-force oracles.
"""

import itertools
import math
import random
import sys
import time
import traceback
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from core.algebra import FieldSpec, Poly, RatFunc
from core.exceptions import ConfigurationError
from core.logging import get_logger

from .arith import binom_mod_p
from .compositions import enumerate_power_compositions
from .context import CarlitzContext
from .series import (
    SparseSeries,
    carlitz_exp,
    carlitz_log,
    ht_derive,
    ht_product_rule,
    ht_quotient_rule,
)
from .special import (
    Family,
    Method,
    SpecialNumberCalculator,
    SpecialNumberQuery,
    support_step,
    vanishes,
)
from .special.routes import DEFAULT_QUOTIENT_MAX_N
from .stirling import (
    COMPLETE,
    Flavor,
    StirlingKind,
    assoc1_via_compositions,
    assoc2_via_compositions,
    bc_untruncated,
    cc_untruncated,
    normalized_stirling,
    stirling_c,
)

logger = get_logger("carlitz_lab.carlitz.selfcheck")

DEFAULT_SEED = 20240501


class CheckLevel(Enum):
    FAST = "fast"
    FULL = "full"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SweepLimits:
    """Sizes of the sweeps for one level"""

    route_fields: Tuple[int, ...]
    route_N: Tuple[int, ...]
    route_max_n: int
    identity_fields: Tuple[int, ...]
    identity_max_N: int
    identity_max_n: int
    identity_max_k: int
    untruncated_max_n: int
    stirling_max_n: int
    stirling_max_k: int
    first_kind_max_k: int
    random_series: int
    lucas_max_m: int
    composition_max_target: int


LIMITS = {
    CheckLevel.FAST: SweepLimits(
        route_fields=(3,),
        route_N=(1, 2),
        route_max_n=36,
        identity_fields=(3,),
        identity_max_N=2,
        identity_max_n=36,
        identity_max_k=4,
        untruncated_max_n=30,
        stirling_max_n=40,
        stirling_max_k=6,
        first_kind_max_k=6,
        random_series=25,
        lucas_max_m=100,
        composition_max_target=100,
    ),
    CheckLevel.FULL: SweepLimits(
        route_fields=(2, 3),
        route_N=(0, 1, 2),
        route_max_n=120,
        identity_fields=(2, 3),
        identity_max_N=3,
        identity_max_n=120,
        identity_max_k=8,
        untruncated_max_n=120,
        stirling_max_n=200,
        stirling_max_k=20,
        first_kind_max_k=8,
        random_series=100,
        lucas_max_m=300,
        composition_max_target=400,
    ),
}


def _poly_diff(name: str, expected: Poly, actual: Poly) -> List[str]:
    if expected == actual:
        return [f"  {name}: equal (degree {expected.degree})"]
    width = max(expected.degree, actual.degree) + 1
    differing = [d for d in range(width) if expected[d] != actual[d]]
    shown = ", ".join(f"T^{d}: {expected[d]} != {actual[d]}" for d in differing[:5])
    more = f" (+{len(differing) - 5} more)" if len(differing) > 5 else ""
    return [
        f"  {name}: degree {expected.degree} vs {actual.degree}, "
        f"{len(differing)} coefficients differ",
        f"    {shown}{more}",
    ]


def ratfunc_diff(expected: RatFunc, actual: RatFunc) -> str:
    """Side-by-side comparison of numerators and denominators"""
    lines = [f"  expected: {expected}", f"  actual:   {actual}"]
    lines += _poly_diff("numerator", expected.num, actual.num)
    lines += _poly_diff("denominator", expected.den, actual.den)
    return "\n".join(lines)


@dataclass
class Mismatch:
    label: str
    expected: RatFunc
    actual: RatFunc

    def describe(self) -> str:
        return f"{self.label}\n{ratfunc_diff(self.expected, self.actual)}"


@dataclass
class CheckResult:
    """Outcome of one named check"""

    name: str
    cases: int = 0
    elapsed: float = 0.0
    mismatches: List[Mismatch] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.failures

    def expect(self, label: str, expected: RatFunc, actual: RatFunc) -> bool:
        self.cases += 1
        if expected == actual:
            return True
        self.mismatches.append(Mismatch(label, expected, actual))
        return False

    def expect_true(self, label: str, condition: bool) -> bool:
        self.cases += 1
        if not condition:
            self.failures.append(label)
        return condition

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "elapsed": round(self.elapsed, 3),
            "failures": self.failures + [m.describe() for m in self.mismatches],
        }


@dataclass
class SelfCheckReport:
    level: CheckLevel
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failed(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> Dict:
        return {
            "level": str(self.level),
            "passed": self.passed,
            "checks": [result.to_dict() for result in self.results],
        }

    def to_text(self) -> str:
        lines = [f"selfcheck level={self.level}"]
        for result in self.results:
            status = "PASS" if result.passed else "FAIL"
            lines.append(
                f"{status}  {result.name:<28} {result.cases:>6} cases  {result.elapsed:8.3f}s"
            )
            lines.extend(f"  - {failure}" for failure in result.failures)
            for mismatch in result.mismatches:
                lines.append(f"  - {mismatch.describe()}")
        total = sum(result.cases for result in self.results)
        summary = "all checks passed" if self.passed else f"{len(self.failed)} checks failed"
        lines.append(f"{summary} ({total} cases)")
        return "\n".join(lines) + "\n"


# Golden values, r = 3, as value / Pi(n)


def bc_goldens(ctx: CarlitzContext) -> Dict[int, RatFunc]:
    """BC_{2,n} / Pi(n)"""
    d2, d3, d4 = ctx.d_frac(2), ctx.d_frac(3), ctx.d_frac(4)
    return {
        18: -d2 / d3,
        36: d2**2 / d3**2,
        54: -(d2**3) / d3**3,
        72: -d2 / d4 + d2**4 / d3**4,
        90: -(d2**5) / d3**5 + 2 * d2**2 / (d3 * d4),
    }


def cc_goldens(ctx: CarlitzContext) -> Dict[int, RatFunc]:
    """CC_{3,n} / Pi(n)"""
    l3, l4, l5 = ctx.l_frac(3), ctx.l_frac(4), ctx.l_frac(5)
    return {
        54: l3 / l4,
        108: l3**2 / l4**2,
        162: l3**3 / l4**3,
        216: l3**4 / l4**4 - l3 / l5,
        270: l3**5 / l4**5 - 2 * l3**2 / (l4 * l5),
        324: l3**6 / l4**6,
    }


def second_kind_worked(ctx: CarlitzContext, k: int) -> RatFunc:
    """Pi(k)/Pi(18 + 9k) {18 + 9k, k}_(C, >= 2) at r = 3"""
    d2, d3 = ctx.d_frac(2), ctx.d_frac(3)
    return k * (d2 ** (k - 1) * d3).inverse()


def first_kind_worked(ctx: CarlitzContext, k: int) -> RatFunc:
    """Pi(k)/Pi(270 + 27k) [270 + 27k, k]_(C, >= 3) at r = 3"""
    l3, l4, l5 = ctx.l_frac(3), ctx.l_frac(4), ctx.l_frac(5)
    sign = ctx.sign(k - 1)
    total = RatFunc.zero(ctx.spec)
    if k >= 5:
        total = total + math.comb(k, 5) * (l3 ** (k - 5) * l4**5).inverse()
    if k >= 2:
        total = total + k * (k - 1) * (l3 ** (k - 2) * l4 * l5).inverse()
    return sign * total


def random_ratfunc(rng: random.Random, spec: FieldSpec, nonzero: bool = False) -> RatFunc:
    while True:
        num = Poly(spec, [rng.randrange(spec.r) for _ in range(rng.randint(1, 3))])
        den = Poly(spec, [rng.randrange(spec.r) for _ in range(rng.randint(1, 3))])
        if den.is_zero or (nonzero and num.is_zero):
            continue
        return RatFunc(num, den)


def random_unit_series(rng: random.Random, spec: FieldSpec, order: int) -> SparseSeries:
    terms = {0: random_ratfunc(rng, spec, nonzero=True)}
    for exp in rng.sample(range(1, order + 1), k=min(order, rng.randint(1, 4))):
        terms[exp] = random_ratfunc(rng, spec)
    return SparseSeries(spec, terms, order)


class SelfCheck:
    """Runs the named checks of one level in a fixed order"""

    def __init__(
        self,
        level: CheckLevel = CheckLevel.FAST,
        seed: int = DEFAULT_SEED,
        quotient_max_n: int = DEFAULT_QUOTIENT_MAX_N,
    ):
        self.level = level
        self.limits = LIMITS[level]
        self.seed = seed
        self.calculator = SpecialNumberCalculator(quotient_max_n)
        self._contexts: Dict[int, CarlitzContext] = {}
        self.checks: Dict[str, Callable[[CheckResult], None]] = {}
        self._init_checks()

    def _init_checks(self):
        self.checks = {
            "golden_bc": self.check_golden_bc,
            "golden_cc": self.check_golden_cc,
            "stirling_worked_examples": self.check_stirling_worked,
            "stirling_boundaries": self.check_stirling_boundaries,
            "flavor_degeneration": self.check_flavor_degeneration,
            "composition_identities": self.check_composition_identities,
            "untruncated_reductions": self.check_untruncated_reductions,
            "route_agreement": self.check_route_agreement,
            "ht_laws": self.check_ht_laws,
            "lucas_oracle": self.check_lucas,
            "composition_oracle": self.check_composition_oracle,
            "series_inversion": self.check_series_inversion,
        }

    def ctx(self, r: int) -> CarlitzContext:
        if r not in self._contexts:
            self._contexts[r] = CarlitzContext.for_order(r)
        return self._contexts[r]

    def normalized(self, family: Family, ctx: CarlitzContext, N: int, n: int, method: Method):
        return self.calculator.compute(SpecialNumberQuery(family, ctx, N, n, method)).normalized

    def run(self, names: Optional[Sequence[str]] = None, progress: bool = False):
        selected = list(names) if names else list(self.checks)
        unknown = [name for name in selected if name not in self.checks]
        if unknown:
            raise ConfigurationError(f"unknown checks: {', '.join(unknown)}")
        report = SelfCheckReport(self.level)
        with logger.workflow_context("selfcheck", level=str(self.level), checks=len(selected)):
            for name in tqdm(selected, desc="selfcheck", file=sys.stderr, disable=not progress):
                report.results.append(self._run_one(name))
        logger.info(
            f"Selfcheck {self.level}: {len(report.results) - len(report.failed)} of "
            f"{len(report.results)} checks passed"
        )
        return report

    def _run_one(self, name: str) -> CheckResult:
        result = CheckResult(name)
        start = time.perf_counter()
        try:
            self.checks[name](result)
        except Exception as e:
            logger.exception(f"Check {name} raised")
            frame = traceback.extract_tb(e.__traceback__)[-1]
            where = f"{frame.filename}:{frame.lineno} in {frame.name}"
            result.failures.append(f"raised {type(e).__name__}: {e} (at {where})")
        result.elapsed = time.perf_counter() - start
        if not result.passed:
            logger.warning(f"Check {name} failed", cases=result.cases)
        return result

    # Golden values

    def check_golden_bc(self, result: CheckResult):
        ctx = self.ctx(3)
        for n, expected in bc_goldens(ctx).items():
            for method in (Method.SERIES, Method.COMPOSITION):
                actual = self.normalized(Family.BC, ctx, 2, n, method)
                result.expect(f"BC_{{2,{n}}}/Pi({n}) via {method}", expected, actual)
        value = self.calculator.compute(SpecialNumberQuery(Family.BC, ctx, 2, 18)).value
        expected = -ctx.factorial_frac(18) * ctx.d_frac(2) / ctx.d_frac(3)
        result.expect("BC_{2,18}", expected, value)
        result.expect_true(
            "BC_{2,19} vanishes",
            self.normalized(Family.BC, ctx, 2, 19, Method.SERIES).is_zero,
        )

    def check_golden_cc(self, result: CheckResult):
        ctx = self.ctx(3)
        for n, expected in cc_goldens(ctx).items():
            for method in (Method.SERIES, Method.BINOMIAL):
                actual = self.normalized(Family.CC, ctx, 3, n, method)
                result.expect(f"CC_{{3,{n}}}/Pi({n}) via {method}", expected, actual)

    # Stirling-Carlitz numbers

    def check_stirling_worked(self, result: CheckResult):
        ctx = self.ctx(3)
        second = Flavor.associated(2)
        for k in range(1, 19):
            actual = normalized_stirling(ctx, StirlingKind.SECOND, 18 + 9 * k, k, second)
            result.expect(f"{{18+9k,k}}>=2 at k={k}", second_kind_worked(ctx, k), actual)
        first = Flavor.associated(3)
        for k in range(1, self.limits.first_kind_max_k + 1):
            actual = normalized_stirling(ctx, StirlingKind.FIRST, 270 + 27 * k, k, first)
            result.expect(f"[270+27k,k]>=3 at k={k}", first_kind_worked(ctx, k), actual)
        d2, d3 = ctx.d_frac(2), ctx.d_frac(3)
        result.expect("assoc2 N=2 n=18 k=1", d3.inverse(), assoc2_via_compositions(ctx, 2, 18, 1))
        result.expect(
            "assoc2 N=2 n=18 k=2", 2 * (d2 * d3).inverse(), assoc2_via_compositions(ctx, 2, 18, 2)
        )
        l4, l5 = ctx.l_frac(4), ctx.l_frac(5)
        actual = assoc1_via_compositions(ctx, 3, 270, 2)
        result.expect("assoc1 N=3 n=270 k=2", -2 * (l4 * l5).inverse(), actual)
        stirling = stirling_c(ctx, StirlingKind.SECOND, 27, 1, Flavor.associated(2))
        result.expect("{27,1}>=2", ctx.factorial_frac(27) / d3, stirling)

    def check_stirling_boundaries(self, result: CheckResult):
        ctx = self.ctx(3)
        one, zero = RatFunc.one(ctx.spec), RatFunc.zero(ctx.spec)
        for kind in StirlingKind:
            for n in range(self.limits.stirling_max_n + 1):
                result.expect(f"{kind} ({n},{n})", one, stirling_c(ctx, kind, n, n))
                if n >= 1:
                    result.expect(f"{kind} ({n},0)", zero, stirling_c(ctx, kind, n, 0))
                    result.expect(f"{kind} ({n - 1},{n})", zero, stirling_c(ctx, kind, n - 1, n))

    def check_flavor_degeneration(self, result: CheckResult):
        ctx = self.ctx(3)
        limits = self.limits
        for kind in StirlingKind:
            for n in range(1, limits.stirling_max_n + 1):
                m = 0
                while 3**m < n:
                    m += 1
                restricted = Flavor.restricted(m)
                for k in range(1, min(n, limits.stirling_max_k) + 1):
                    complete = normalized_stirling(ctx, kind, n, k, COMPLETE)
                    result.expect(
                        f"{kind} ({n},{k}) associated(0)",
                        complete,
                        normalized_stirling(ctx, kind, n, k, Flavor.associated(0)),
                    )
                    result.expect(
                        f"{kind} ({n},{k}) {restricted}",
                        complete,
                        normalized_stirling(ctx, kind, n, k, restricted),
                    )

    def check_composition_identities(self, result: CheckResult):
        limits = self.limits
        for r in limits.identity_fields:
            ctx = self.ctx(r)
            for N in range(limits.identity_max_N + 1):
                rn = r**N
                for n in range(1, limits.identity_max_n + 1):
                    for k in range(1, limits.identity_max_k + 1):
                        target = n + k * rn
                        flavor = Flavor.associated(N)
                        result.expect(
                            f"second kind r={r} N={N} n={n} k={k}",
                            normalized_stirling(ctx, StirlingKind.SECOND, target, k, flavor),
                            assoc2_via_compositions(ctx, N, n, k),
                        )
                        result.expect(
                            f"first kind r={r} N={N} n={n} k={k}",
                            normalized_stirling(ctx, StirlingKind.FIRST, target, k, flavor),
                            assoc1_via_compositions(ctx, N, n, k),
                        )

    def check_untruncated_reductions(self, result: CheckResult):
        ctx = self.ctx(3)
        for n in range(self.limits.untruncated_max_n + 1):
            bc = self.calculator.compute(SpecialNumberQuery(Family.BC, ctx, 0, n)).value
            cc = self.calculator.compute(SpecialNumberQuery(Family.CC, ctx, 0, n)).value
            result.expect(f"BC_{{0,{n}}} vs BC_{n}", bc_untruncated(ctx, n), bc)
            result.expect(f"CC_{{0,{n}}} vs CC_{n}", cc_untruncated(ctx, n), cc)

    # Route sweeps

    def check_route_agreement(self, result: CheckResult):
        limits = self.limits
        for r in limits.route_fields:
            ctx = self.ctx(r)
            for family in Family:
                for N in limits.route_N:
                    step = support_step(r, N)
                    for n in range(limits.route_max_n + 1):
                        results = self.calculator.compute_all(ctx, family, N, n)
                        reference = results[0]
                        for other in results[1:]:
                            result.expect(
                                f"{family} r={r} N={N} n={n} {reference.method} vs {other.method}",
                                reference.value,
                                other.value,
                            )
                        if vanishes(r, N, n):
                            result.expect_true(
                                f"{family} r={r} N={N} n={n} vanishes", reference.is_zero
                            )
                        if not reference.is_zero:
                            result.expect_true(
                                f"{family} r={r} N={N} n={n} off the support step {step}",
                                n % step == 0,
                            )

    def check_ht_laws(self, result: CheckResult):
        rng = random.Random(self.seed)
        spec = FieldSpec.of_order(3)
        for trial in range(self.limits.random_series):
            n = rng.randint(1, 5)
            f = random_unit_series(rng, spec, order=12)
            expected = ht_derive(f.inverse(), n)
            for variant in (1, 2):
                actual = ht_quotient_rule(f, n, variant)
                result.expect_true(f"quotient rule {variant} trial {trial}", actual == expected)
            factors = [random_unit_series(rng, spec, order=12) for _ in range(rng.randint(2, 4))]
            product = factors[0]
            for g in factors[1:]:
                product = product * g
            result.expect_true(
                f"product rule trial {trial} n={n} k={len(factors)}",
                ht_product_rule(factors, n) == ht_derive(product, n),
            )
        one = RatFunc.one(spec)
        for m in range(51):
            x_m = SparseSeries.monomial(m, one, 60)
            for a in range(6):
                for b in range(6):
                    lhs = ht_derive(ht_derive(x_m, b), a)
                    c = binom_mod_p(a + b, a, spec.p)
                    rhs = ht_derive(x_m, a + b).scale(c).truncate(lhs.order)
                    result.expect_true(f"H^{a} H^{b} x^{m}", lhs == rhs)

    # Infrastructure oracles

    def check_lucas(self, result: CheckResult):
        for p in (2, 3, 5, 7):
            for m in range(self.limits.lucas_max_m + 1):
                for k in range(m + 1):
                    result.cases += 1
                    if binom_mod_p(m, k, p) != math.comb(m, k) % p:
                        result.failures.append(f"C({m},{k}) mod {p}")

    def check_composition_oracle(self, result: CheckResult):
        max_target = self.limits.composition_max_target
        for r in (2, 3):
            for N in (0, 1, 2):
                rn = r**N
                for n in range(0, max_target + 1, max(1, rn)):
                    for k in range(1, 5):
                        if n + k * rn > max_target:
                            break
                        for min_part in (0, 1):
                            expected = _brute_force_compositions(r, N, n, k, min_part)
                            actual = {
                                c.parts: c.multiplicity
                                for c in enumerate_power_compositions(r, N, n, k, min_part)
                            }
                            result.expect_true(
                                f"S_k r={r} N={N} n={n} k={k} min_part={min_part}",
                                actual == expected,
                            )

    def check_series_inversion(self, result: CheckResult):
        rng = random.Random(self.seed + 1)
        for r in (2, 3, 4):
            spec = FieldSpec.of_order(r)
            one = SparseSeries.one(spec, 20)
            for trial in range(self.limits.random_series // 5 + 1):
                f = random_unit_series(rng, spec, order=20)
                g = f.inverse()
                result.expect_true(f"r={r} f*g trial {trial}", f * g == one)
                result.expect_true(f"r={r} g*f trial {trial}", g * f == one)
        ctx = self.ctx(3)
        exp, log = carlitz_exp(ctx, 90), carlitz_log(ctx, 90)
        for series, name in ((exp, "e_C"), (log, "log_C")):
            quotient = series.shift(-1)
            one = SparseSeries.one(ctx.spec, quotient.order)
            result.expect_true(f"{name}/x inverse", quotient * quotient.inverse() == one)


def _brute_force_compositions(r: int, N: int, n: int, k: int, min_part: int) -> Dict:
    """Sorted exponent tuples mapped to their number of orderings, by exhaustive search"""
    target = n + k * r**N
    exponents = []
    i = min_part
    while r ** (N + i) <= target:
        exponents.append(i)
        i += 1
    counts: Counter = Counter()
    for ordered in itertools.product(exponents, repeat=k):
        if sum(r ** (N + i) for i in ordered) == target:
            counts[tuple(sorted(ordered))] += 1
    return dict(counts)


def run_selfcheck(
    level: CheckLevel = CheckLevel.FAST, progress: bool = False, **kwargs
) -> SelfCheckReport:
    return SelfCheck(level, **kwargs).run(progress=progress)
