"""Named verification suites with uniform pass/fail reporting.

Each suite compares computed artifacts against an independent reference:
an exact closed form, a brute-force oracle, or an explicit construction.
The provenance column records which.  Cases flagged required=False are
informational: they document known discrepancies without failing the
suite.  All numbers in reports are exact (integers or p/q rationals).
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import bipartite, constructions, formulas, shifting, solver, witness
from .vectors import Profile, SignedVector, VectorFamily, enumerate_all, scalar_product

PROVENANCE_FORMULA = "closed-form"
PROVENANCE_ORACLE = "oracle"
PROVENANCE_CONSTRUCTION = "construction"


@dataclass(frozen=True)
class CaseResult:
    case: str
    expected: str
    actual: str
    passed: bool
    provenance: str
    required: bool = True


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(
        self,
        case: str,
        expected,
        actual,
        passed: bool,
        provenance: str,
        required: bool = True,
    ) -> None:
        self.cases.append(
            CaseResult(case, _fmt(expected), _fmt(actual), passed, provenance, required)
        )

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases if c.required)

    @property
    def counts(self) -> tuple[int, int, int]:
        """(passed, failed-required, informational) case counts."""
        passed = sum(1 for c in self.cases if c.passed)
        failed = sum(1 for c in self.cases if c.required and not c.passed)
        info = sum(1 for c in self.cases if not c.required)
        return passed, failed, info

    def to_json_dict(self) -> dict:
        passed, failed, info = self.counts
        return {
            "suite": self.suite,
            "ok": self.ok,
            "passed": passed,
            "failed_required": failed,
            "informational": info,
            "notes": self.notes,
            "cases": [
                {
                    "case": c.case,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                    "provenance": c.provenance,
                    "required": c.required,
                }
                for c in self.cases
            ],
        }

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "case", "expected", "actual", "pass", "provenance"])
        for c in self.cases:
            writer.writerow(
                [
                    self.suite,
                    c.case,
                    c.expected,
                    c.actual,
                    "true" if c.passed else "false",
                    c.provenance,
                ]
            )
        return buf.getvalue()


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# shared per-process memo so repeated suites reuse expensive solves
_SOLVE_MEMO: dict[tuple, solver.SolveResult] = {}


def solve_memo(
    n: int, k: int, l: int, target: str = "g", budget: float = 600.0, pruning=None
) -> solver.SolveResult:
    key = (n, k, l, target, pruning)
    result = _SOLVE_MEMO.get(key)
    if result is None or (not result.is_exact and budget > 0):
        result = solver.solve_extremal(
            Profile(n, k, l), target, budget=budget, shifted_pruning=pruning
        )
        _SOLVE_MEMO[key] = result
    return result


def solved_instances() -> list[tuple[tuple, solver.SolveResult]]:
    """Everything solved so far in this process, in insertion order."""
    return list(_SOLVE_MEMO.items())


def _suite_theorem1(params: dict) -> VerificationReport:
    """Solver values against the exact closed form for l = 1."""
    report = VerificationReport("theorem1")
    budget = float(params.pop("budget", 60.0))
    instances = params.pop("instances", [(4, 2), (5, 2), (6, 2), (6, 3)])
    _reject_extra(params)
    for n, k in instances:
        expected = formulas.g_closed_l1(n, k)
        result = solve_memo(n, k, 1, "g", budget)
        report.add(
            f"g({n},{k},1)",
            expected,
            result.value,
            result.is_exact and result.value == expected,
            PROVENANCE_FORMULA,
        )
    return report


def _suite_eq111(params: dict) -> VerificationReport:
    """Solver values against the fixed-first-coordinate count in its proven window."""
    report = VerificationReport("eq111")
    budget = float(params.pop("budget", 600.0))
    instances = params.pop("instances", [(6, 3, 2), (7, 3, 2)])
    _reject_extra(params)
    for n, k, l in instances:
        value, in_range = formulas.g_ekr_value(n, k, l)
        result = solve_memo(n, k, l, "g", budget)
        report.add(
            f"g({n},{k},{l})",
            value,
            result.value,
            result.is_exact and result.value == value,
            PROVENANCE_FORMULA,
            required=in_range,
        )
    return report


def _suite_bounds(params: dict) -> VerificationReport:
    """Lower/upper sandwich holds at every solved instance."""
    report = VerificationReport("bounds")
    budget = float(params.pop("budget", 60.0))
    instances = params.pop(
        "instances",
        [(4, 2, 1), (5, 2, 1), (6, 2, 1), (5, 3, 1), (5, 3, 2), (6, 3, 2), (6, 4, 2)],
    )
    _reject_extra(params)
    for n, k, l in instances:
        lower, upper = formulas.g_bounds(n, k, l)
        result = solve_memo(n, k, l, "g", budget)
        report.add(
            f"bounds({n},{k},{l})",
            f"{lower} <= value <= {upper}",
            result.value,
            result.is_exact and lower <= result.value <= upper,
            PROVENANCE_FORMULA,
        )
    return report


def _witness_failures(profile: Profile, use_oracle: bool) -> tuple[int, int, str]:
    """(eligible, failures, first failure description) over a whole class."""
    eligible = 0
    failures = 0
    first = ""
    floor = -2 * profile.l
    for w in enumerate_all(profile):
        cond_i, cond_ii = witness.check_conditions(w)
        if not (cond_i and cond_ii):
            continue
        eligible += 1
        v, trace = witness.construct_witness(w)
        ok = scalar_product(v, w) == floor
        ok = ok and shifting.precedes(v, w)
        if use_oracle:
            ok = ok and shifting.precedes_oracle(v, w)
        ok = ok and witness.verify_trace_claims(trace, w).all_pass
        if not ok:
            failures += 1
            if not first:
                first = f"w={w}"
    return eligible, failures, first


def _suite_lemma1(params: dict) -> VerificationReport:
    """Exhaustive witness construction and validation over whole classes."""
    report = VerificationReport("lemma1")
    if {"n", "k", "l"} <= params.keys():
        profiles = [(params.pop("n"), params.pop("k"), params.pop("l"))]
    else:
        profiles = params.pop("profiles", [(5, 2, 1), (6, 3, 2), (8, 3, 2)])
    _reject_extra(params)
    for n, k, l in profiles:
        profile = Profile(n, k, l)
        use_oracle = n <= 8
        eligible, failures, first = _witness_failures(profile, use_oracle)
        report.add(
            f"witness({n},{k},{l})",
            f"0 failures among {eligible} eligible",
            f"{failures} failures among {eligible} eligible"
            + (f"; first {first}" if first else ""),
            failures == 0,
            PROVENANCE_ORACLE,
        )
        report.notes.append(
            f"profile ({n},{k},{l}): {eligible} eligible vectors, oracle={'on' if use_oracle else 'off'}"
        )
    return report


def _random_biregular_params(rng: random.Random) -> tuple[int, int, int, int]:
    while True:
        a = rng.randint(2, 12)
        da = rng.randint(1, min(4, a))
        total = a * da
        candidates = [
            (b, total // b)
            for b in range(2, 41)
            if total % b == 0 and total // b <= a and da <= b and total // b >= 1
        ]
        if candidates:
            b, db = rng.choice(candidates)
            return a, b, da, db


def _suite_lemma3(params: dict) -> VerificationReport:
    """Averaging bound on randomized biregular graphs and independent sets."""
    report = VerificationReport("lemma3")
    trials = int(params.pop("trials", 1000))
    seed = int(params.pop("seed", 20260815))
    _reject_extra(params)
    rng = random.Random(seed)
    violations = 0
    first = ""
    for trial in range(trials):
        a, b, da, db = _random_biregular_params(rng)
        g = bipartite.random_biregular(a, b, da, db, seed=rng.randrange(2**32))
        i_a, i_b = bipartite.random_independent_set(g, seed=rng.randrange(2**32))
        alpha = Fraction(b, a) + Fraction(rng.randint(0, 3), rng.randint(1, 4))
        if not bipartite.lemma3_check(g, i_a, i_b, alpha):
            violations += 1
            if not first:
                first = f"trial {trial}: sides ({a},{b}), degrees ({da},{db}), alpha {alpha}"
    report.add(
        f"averaging-bound[{trials} trials]",
        "0 violations",
        f"{violations} violations" + (f"; first {first}" if first else ""),
        violations == 0,
        PROVENANCE_ORACLE,
    )
    return report


def _suite_ratios(params: dict) -> VerificationReport:
    """Window-class cardinalities and their ratio against the closed forms."""
    report = VerificationReport("ratios")
    max_dim = int(params.pop("max_dim", 12))
    pairs = params.pop("pairs", None)
    _reject_extra(params)
    if pairs is None:
        pairs = [
            (k, l)
            for k in range(2, max_dim)
            for l in range(1, k)
            if k + l + 1 <= max_dim
        ]
    for k, l in pairs:
        for dim in range(k + l + 1, max_dim + 1):
            n = dim - 1
            mismatches = 0
            checked = 0
            first = ""
            for t in range(1, k + 1):
                if 2 * t - 1 > dim - 1:
                    break
                for m in range(0, 2 * t):
                    x_size, y_size = formulas.xy_family_sizes(n, k, l, t, m)
                    profile = Profile(dim, k, l)
                    x_fam = constructions.family_xy_tm(profile, t, m, "x")
                    y_fam = constructions.family_xy_tm(profile, t, m, "y")
                    checked += 1
                    if len(x_fam) != x_size or len(y_fam) != y_size:
                        mismatches += 1
                        if not first:
                            first = (
                                f"t={t}, m={m}: formula ({x_size},{y_size}), "
                                f"enumerated ({len(x_fam)},{len(y_fam)})"
                            )
                        continue
                    if len(x_fam) > 0 and n > 3 * k:
                        ratio = formulas.ratio_and_alpha(n, k, l, t, m).ratio
                        if ratio != Fraction(len(y_fam), len(x_fam)):
                            mismatches += 1
                            if not first:
                                first = (
                                    f"t={t}, m={m}: ratio {ratio} != "
                                    f"{len(y_fam)}/{len(x_fam)}"
                                )
            report.add(
                f"xy-sizes(dim={dim},k={k},l={l})",
                f"0 mismatches among {checked}",
                f"{mismatches} mismatches among {checked}"
                + (f"; first {first}" if first else ""),
                mismatches == 0,
                PROVENANCE_FORMULA,
            )
    return report


def _suite_precedes(params: dict) -> VerificationReport:
    """Fast reachability test against the breadth-first oracle."""
    report = VerificationReport("precedes")
    max_exhaustive = int(params.pop("max_exhaustive", 5))
    random_pairs = int(params.pop("random_pairs", 10000))
    seed = int(params.pop("seed", 20260815))
    _reject_extra(params)

    mism = 0
    checked = 0
    first = ""
    for n in range(2, max_exhaustive + 1):
        for k in range(1, n + 1):
            for l in range(0, min(k, n - k) + 1):
                fam = enumerate_all(Profile(n, k, l)).members
                for v in fam:
                    for w in fam:
                        checked += 1
                        if shifting.precedes(v, w) != shifting.precedes_oracle(v, w):
                            mism += 1
                            if not first:
                                first = f"v={v}, w={w}"
    report.add(
        f"exhaustive(n<={max_exhaustive})",
        f"0 mismatches among {checked}",
        f"{mism} mismatches among {checked}" + (f"; first {first}" if first else ""),
        mism == 0,
        PROVENANCE_ORACLE,
    )

    rng = random.Random(seed)
    mism = 0
    first = ""
    dims = [6, 7]
    profiles_by_dim = {
        n: [
            (k, l)
            for k in range(1, n + 1)
            for l in range(0, min(k, n - k) + 1)
        ]
        for n in dims
    }
    for _ in range(random_pairs):
        n = rng.choice(dims)
        k, l = rng.choice(profiles_by_dim[n])
        v = _random_vector(rng, n, k, l)
        w = _random_vector(rng, n, k, l)
        if shifting.precedes(v, w) != shifting.precedes_oracle(v, w):
            mism += 1
            if not first:
                first = f"v={v}, w={w}"
    report.add(
        f"random(n=6..7, {random_pairs} pairs)",
        "0 mismatches",
        f"{mism} mismatches" + (f"; first {first}" if first else ""),
        mism == 0,
        PROVENANCE_ORACLE,
    )
    return report


def _random_vector(rng: random.Random, n: int, k: int, l: int) -> SignedVector:
    support = rng.sample(range(1, n + 1), k + l)
    plus = rng.sample(support, k)
    minus = [i for i in support if i not in set(plus)]
    return SignedVector.from_supports(n, plus, minus)


def _suite_constructions(params: dict) -> VerificationReport:
    """Construction families: validity at small scale, sizes at full scale."""
    report = VerificationReport("constructions")
    max_n = int(params.pop("max_n", 30))
    pairs = params.pop("pairs", [(2, 1), (3, 1), (3, 2)])
    _reject_extra(params)

    for k, l in pairs:
        ok = True
        first = ""
        count = 0
        for n in range(max(k + l, 2 * k), max_n + 1):
            fam = constructions.ekr_family(Profile(n, k, l))
            expected = formulas.g_ekr_value(n, k, l).value
            count += 1
            if len(fam) != expected:
                ok = False
                if not first:
                    first = f"n={n}: {len(fam)} != {expected}"
                break
        report.add(
            f"ekr-sizes(k={k},l={l},n<={max_n})",
            f"sizes match at {count} dimensions",
            "all match" if ok else first,
            ok,
            PROVENANCE_FORMULA,
        )

    for k, l in pairs:
        ok = True
        first = ""
        count = 0
        for n in range(k + l, max_n):
            grown = constructions.inductive_extend(
                VectorFamily(Profile(n, k, l)), check=True
            )
            expected = formulas.increment_value(n, k, l).value
            count += 1
            if len(grown) != expected:
                ok = False
                if not first:
                    first = f"n={n}: {len(grown)} != {expected}"
                break
        report.add(
            f"increment-sizes(k={k},l={l},n<{max_n})",
            f"growth counts match at {count} dimensions",
            "all match" if ok else first,
            ok,
            PROVENANCE_FORMULA,
        )

    for k, l in pairs:
        ok = True
        first = ""
        count = 0
        for n in range(k + l, max_n + 1):
            value, x = formulas.p_split(n, k, l)
            fam = constructions.split_family(Profile(n, k, l), range(1, x + 1))
            count += 1
            if len(fam) != value:
                ok = False
                if not first:
                    first = f"n={n}: {len(fam)} != {value}"
                break
        report.add(
            f"split-sizes(k={k},l={l},n<={max_n})",
            f"sizes match at {count} dimensions",
            "all match" if ok else first,
            ok,
            PROVENANCE_FORMULA,
        )

    # validity of all three constructions under the pairwise scans, small scale
    for k, l in pairs:
        for n in range(max(k + l, 2 * k), 9):
            profile = Profile(n, k, l)
            floor_spec = solver.ForbiddenSpec.exact({-2 * l})
            ekr_ok = solver.verify_family(constructions.ekr_family(profile), floor_spec).ok
            grown = constructions.inductive_extend(constructions.ekr_family(profile))
            grown_ok = solver.verify_family(grown, floor_spec).ok
            x = formulas.p_split(n, k, l).argmax
            split = constructions.split_family(profile, range(1, x + 1))
            split_ok = solver.verify_family(split, solver.ForbiddenSpec.all_below(0)).ok
            report.add(
                f"validity(n={n},k={k},l={l})",
                "ekr, inductive, split all valid",
                f"ekr={_fmt(ekr_ok)}, inductive={_fmt(grown_ok)}, split={_fmt(split_ok)}",
                ekr_ok and grown_ok and split_ok,
                PROVENANCE_CONSTRUCTION,
            )
    return report


def _random_graph(rng: random.Random, n: int, p: float) -> solver.ConflictGraph:
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return solver.ConflictGraph(adj)


def _suite_solver_oracle(params: dict) -> VerificationReport:
    """Branch-and-bound against the exhaustive oracle."""
    report = VerificationReport("solver-oracle")
    seed = int(params.pop("seed", 20260815))
    random_graphs = int(params.pop("random_graphs", 200))
    _reject_extra(params)

    profile_cases = []
    for n in range(2, 9):
        for k in range(1, n + 1):
            for l in range(0, min(k, n - k) + 1):
                profile = Profile(n, k, l)
                if profile.family_size() > solver.BRUTEFORCE_VERTEX_CAP:
                    continue
                specs = [solver.ForbiddenSpec.all_below(0)]
                if profile.is_g_profile:
                    specs.append(solver.ForbiddenSpec.exact({-2 * l}))
                for spec in specs:
                    profile_cases.append((profile, spec))
    mism = 0
    first = ""
    for profile, spec in profile_cases:
        graph = solver.build_conflict_graph(profile, spec)
        exact = solver.mis_exact(graph, budget=60.0)
        oracle = solver.mis_bruteforce(graph)
        if not exact.is_exact or exact.value != oracle.value:
            mism += 1
            if not first:
                first = (
                    f"profile ({profile.n},{profile.k},{profile.l}), {spec.describe()}: "
                    f"{exact.value} vs {oracle.value}"
                )
    report.add(
        f"profile-graphs[{len(profile_cases)}]",
        "0 mismatches",
        f"{mism} mismatches" + (f"; first {first}" if first else ""),
        mism == 0,
        PROVENANCE_ORACLE,
    )

    rng = random.Random(seed)
    mism = 0
    first = ""
    densities = [0.1, 0.3, 0.5]
    for i in range(random_graphs):
        p = densities[i % len(densities)]
        graph = _random_graph(rng, 25, p)
        exact = solver.mis_exact(graph, budget=60.0)
        oracle = solver.mis_bruteforce(graph)
        if not exact.is_exact or exact.value != oracle.value:
            mism += 1
            if not first:
                first = f"graph {i} (p={p}): {exact.value} vs {oracle.value}"
    report.add(
        f"random-graphs[{random_graphs}]",
        "0 mismatches",
        f"{mism} mismatches" + (f"; first {first}" if first else ""),
        mism == 0,
        PROVENANCE_ORACLE,
    )
    return report


def _suite_p_increment(params: dict) -> VerificationReport:
    """Split-count increment versus the claimed recursion: informational."""
    report = VerificationReport("p-increment")
    max_n = int(params.pop("max_n", 60))
    max_kl = int(params.pop("max_kl", 5))
    _reject_extra(params)

    r = formulas.p_increment_report(10, 2, 1)
    report.add(
        "increment(10,2,1)",
        f"claimed max({r.candidate_lower_l},{r.candidate_lower_k}) = "
        f"{max(r.candidate_lower_l, r.candidate_lower_k)}",
        f"actual increment {r.increment}; equality {_fmt(r.equality_holds)}",
        True,
        PROVENANCE_ORACLE,
        required=False,
    )

    total = 0
    eq_fail = 0
    avg_fail = 0
    min_fail = 0
    for k in range(1, max_kl + 1):
        for l in range(1, max_kl + 1):
            for n in range(k + l + 1, max_n + 1):
                rep = formulas.p_increment_report(n, k, l)
                total += 1
                if not rep.equality_holds:
                    eq_fail += 1
                if not rep.ge_average_holds:
                    avg_fail += 1
                if not rep.le_min_holds:
                    min_fail += 1
    report.add(
        f"sweep(n<={max_n},k,l<={max_kl})",
        f"{total} instances examined",
        f"equality fails {eq_fail}, >=average fails {avg_fail}, <=min fails {min_fail}",
        True,
        PROVENANCE_ORACLE,
        required=False,
    )
    report.add(
        f"le-min-bound(n<={max_n},k,l<={max_kl})",
        "0 violations",
        f"{min_fail} violations",
        min_fail == 0,
        PROVENANCE_ORACLE,
    )
    return report


def _reject_extra(params: dict) -> None:
    if params:
        raise ValueError(f"unknown suite parameters: {sorted(params)}")


_SUITES: dict[str, Callable[[dict], VerificationReport]] = {
    "theorem1": _suite_theorem1,
    "eq111": _suite_eq111,
    "bounds": _suite_bounds,
    "lemma1": _suite_lemma1,
    "lemma3": _suite_lemma3,
    "ratios": _suite_ratios,
    "precedes": _suite_precedes,
    "constructions": _suite_constructions,
    "solver-oracle": _suite_solver_oracle,
    "p-increment": _suite_p_increment,
}


def suite_names() -> list[str]:
    return sorted(_SUITES)


def run_suite(name: str, **params) -> VerificationReport:
    """Run one named suite; unknown names or parameters raise ValueError."""
    fn = _SUITES.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(suite_names())}")
    return fn(dict(params))
