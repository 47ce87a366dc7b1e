"""Deterministic verification suites behind the CLI `verify` subcommand.

Each suite checks one of the structural results numerically over a list of
signatures, under a fixed seed, and reports every failing case with its
residual.  Suite ids: "1".."8" for the numbered theorems, "golden" for the
tabulated generator matrices, "unitary" for the group checks.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import brackets
from .algebra import (
    Multivector,
    Signature,
    all_signatures,
    blade,
    blade_product_sign,
    clifford_product,
    commutator,
    generator,
    generator_contraction,
    grade_project,
    grade_of_mask,
    grades_array,
    indices_from_mask,
    random_multivector,
    trace,
    volume_element,
)
from .golden import golden_cases, golden_matrices
from .idempotents import preset_ideal_basis, standard_ideal_basis
from .involutions import (
    clifford_conjugate,
    dagger,
    grade_involution,
)
from .representations import Representation, is_normal
from .structure import (
    ANTICOMMUTATOR,
    COMMUTATOR,
    grade2_nondegeneracy,
    predicted_support,
    solve_commutator_system,
)
from .unitary import conjugated_bases, group_dimension_check, random_unitary


@dataclass
class VerifyReport:
    suite: str
    signature: str
    trials: int
    seed: int
    eps: float
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "signature": self.signature,
            "trials": self.trials,
            "seed": self.seed,
            "eps": self.eps,
            "checks": self.checks,
            "failures": self.failures,
            "notes": self.notes,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _fail(case: str, residual: float) -> dict:
    return {"case": case, "residual": float(residual)}


def _rng(seed: int, sig: Signature, salt: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, sig.p, sig.q, salt])


# ---------------------------------------------------------------------------
# per-signature suite bodies; each returns (checks, failures, notes)

def _theorem1_sig(sig: Signature, trials: int, seed: int, eps: float):
    # commutator of a grade-k blade with a grade-2 blade stays in grade k
    checks, failures = 0, []
    dim = sig.dim
    g = grades_array(sig.n)
    grade2 = [m for m in range(dim) if g[m] == 2]
    neg = sig.neg_mask
    for mask_u in range(dim):
        k = int(g[mask_u])
        if not 1 <= k <= sig.n - 1:
            continue
        for mask_v in grade2:
            checks += 1
            s_uv = blade_product_sign(mask_u, mask_v, neg)
            s_vu = blade_product_sign(mask_v, mask_u, neg)
            if s_uv != s_vu and grade_of_mask(mask_u ^ mask_v) != k:
                failures.append(_fail(f"{sig} [e^{indices_from_mask(mask_u)}, e^{indices_from_mask(mask_v)}]", 1.0))
    return checks, failures, []


def _theorem2_sig(sig: Signature, trials: int, seed: int, eps: float):
    # exhaustive blade-pair support containment for both brackets
    checks, failures = 0, []
    g = grades_array(sig.n)
    neg = sig.neg_mask
    for mask_u in range(sig.dim):
        k = int(g[mask_u])
        for mask_v in range(sig.dim):
            l = int(g[mask_v])
            s_uv = blade_product_sign(mask_u, mask_v, neg)
            s_vu = blade_product_sign(mask_v, mask_u, neg)
            result_grade = grade_of_mask(mask_u ^ mask_v)
            checks += 2
            if s_uv - s_vu != 0 and result_grade not in predicted_support(k, l, COMMUTATOR, sig.n):
                failures.append(_fail(f"{sig} comm support ({k},{l}) grade {result_grade}", 1.0))
            if s_uv + s_vu != 0 and result_grade not in predicted_support(k, l, ANTICOMMUTATOR, sig.n):
                failures.append(_fail(f"{sig} anti support ({k},{l}) grade {result_grade}", 1.0))
    return checks, failures, []


def _rank_table_n8():
    """Reproduce the printed rank table (k, l <= 4) as maximal supports at n = 8."""
    sig = Signature(8, 0)
    g = grades_array(8)
    checks, failures, notes = 0, [], []
    for k in range(1, 5):
        for l in range(1, k + 1):
            seen = {COMMUTATOR: set(), ANTICOMMUTATOR: set()}
            for mask_u in (m for m in range(sig.dim) if g[m] == k):
                for mask_v in (m for m in range(sig.dim) if g[m] == l):
                    s = grade_of_mask(mask_u & mask_v)
                    result_grade = k + l - 2 * s
                    if (k * l - s) % 2:
                        seen[COMMUTATOR].add(result_grade)
                    else:
                        seen[ANTICOMMUTATOR].add(result_grade)
            for bracket in (COMMUTATOR, ANTICOMMUTATOR):
                checks += 1
                predicted = set(predicted_support(k, l, bracket, 8).grades)
                if seen[bracket] != predicted:
                    failures.append(_fail(f"rank table ({k},{l}) {bracket}: saw {sorted(seen[bracket])}, table {sorted(predicted)}", 1.0))
    notes.append("rank table (k,l<=4) reproduced as maximal supports at n=8")
    return checks, failures, notes


def _theorem3_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures, notes = 0, [], []
    for result in brackets.check_all_laws(sig.n, trials=trials, seed=seed, eps=eps,
                                          signatures=[sig]):
        checks += 1
        if not result.ok:
            failures.append(_fail(f"{sig} {result.law.case_id}", result.max_residual))
            if result.fitted is not None:
                notes.append(f"{sig} {result.law.case_id}: fitted expression {result.fitted}")
        if result.law.note and sig.p == sig.n:
            notes.append(f"{result.law.case_id}: {result.law.note}")
    return checks, failures, notes


def _theorem4_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    real = Signature(sig.p, sig.q, "real")
    for k in range(1, sig.n):
        checks += 1
        if not grade2_nondegeneracy(real, k):
            failures.append(_fail(f"{real} k={k}: nonzero grade-2 kernel", 1.0))
    return checks, failures, []


def _theorem5_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    rng = _rng(seed, sig, 5)
    n = sig.n
    for k in range(n + 1):
        worst = 0.0
        for _ in range(trials):
            u = random_multivector(sig, rng, grade=k)
            residual = (generator_contraction(u) - ((-1) ** k * (n - 2 * k)) * u).norm()
            worst = max(worst, residual)
        checks += trials
        if worst > eps:
            failures.append(_fail(f"{sig} grade {k}", worst))
    # special cases: e^a e_a = n; e^a l e_a = (-1)^(n+1) n l
    checks += 2
    unit_case = (generator_contraction(Multivector.scalar(sig, 1.0))
                 - Multivector.scalar(sig, n)).norm()
    if unit_case > eps:
        failures.append(_fail(f"{sig} e^a e_a = n", unit_case))
    ell = volume_element(sig)
    ell_case = (generator_contraction(ell) - ((-1) ** (n + 1) * n) * ell).norm()
    if ell_case > eps:
        failures.append(_fail(f"{sig} e^a l e_a", ell_case))
    if n == 4:
        checks += 1
        u_parts = [random_multivector(sig, rng, grade=k) for k in range(5)]
        total = u_parts[0] + u_parts[1] + u_parts[2] + u_parts[3] + u_parts[4]
        expect = 4 * u_parts[0] - 2 * u_parts[1] + 2 * u_parts[3] - 4 * u_parts[4]
        residual = (generator_contraction(total) - expect).norm()
        if residual > eps:
            failures.append(_fail(f"{sig} n=4 gradewise line", residual))
    return checks, failures, []


def _theorem6_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    rng = _rng(seed, sig, 6)
    worst = 0.0
    for _ in range(trials):
        b = random_multivector(sig, rng)
        cs = [commutator(b, generator(sig, a)) for a in range(1, sig.n + 1)]
        rec = solve_commutator_system(cs, sig, tol=max(eps, 1e-8))
        center = grade_project(b, 0)
        if sig.n % 2 == 1:
            center = center + grade_project(b, sig.n)
        worst = max(worst, (rec.particular - (b - center)).norm())
    checks += trials
    if worst > max(eps, 1e-8):
        failures.append(_fail(f"{sig} round-trip", worst))
    return checks, failures, []


def _sandwich(u: Multivector, gens: list[int]) -> Multivector:
    """e^{a_m} ... e^{a_1} u e^{a_1} ... e^{a_m} for an ascending index list."""
    out = u
    for a in gens:
        out = clifford_product(generator(u.sig, a), out)
        out = clifford_product(out, generator(u.sig, a))
    return out


def dagger_via_negative_generators(u: Multivector) -> Multivector:
    """Sandwich form of the dagger over e^{p+1}..e^n, with grade involution
    for odd q and overall sign (-1)^q."""
    sig = u.sig
    core = clifford_conjugate(u)
    if sig.q % 2 == 1:
        core = grade_involution(core)
    out = _sandwich(core, list(range(sig.p + 1, sig.n + 1)))
    return ((-1) ** sig.q) * out


def dagger_via_positive_generators(u: Multivector) -> Multivector:
    """Sandwich form of the dagger over e^1..e^p, with grade involution for
    even p."""
    sig = u.sig
    core = clifford_conjugate(u)
    if sig.p % 2 == 0:
        core = grade_involution(core)
    return _sandwich(core, list(range(1, sig.p + 1)))


def _theorem7_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    rng = _rng(seed, sig, 7)
    worst_a = worst_b = 0.0
    for _ in range(trials):
        u = random_multivector(sig, rng)
        d = dagger(u)
        worst_a = max(worst_a, (d - dagger_via_negative_generators(u)).norm())
        worst_b = max(worst_b, (d - dagger_via_positive_generators(u)).norm())
    checks += 2 * trials
    if worst_a > eps:
        failures.append(_fail(f"{sig} dagger vs negative-generator sandwich", worst_a))
    if worst_b > eps:
        failures.append(_fail(f"{sig} dagger vs positive-generator sandwich", worst_b))
    for a in range(1, sig.n + 1):
        checks += 1
        expected = 1.0 if a <= sig.p else -1.0
        actual = dagger(generator(sig, a)).coeffs[1 << (a - 1)]
        if actual != expected:
            failures.append(_fail(f"{sig} generator sign e^{a}", abs(actual - expected)))
    return checks, failures, []


def _theorem8_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    basis = standard_ideal_basis(sig)
    t = basis.t
    checks += 3
    idem = (clifford_product(t, t) - t).norm()
    herm = (dagger(t) - t).norm()
    if idem > eps:
        failures.append(_fail(f"{sig} t^2 = t", idem))
    if herm > eps:
        failures.append(_fail(f"{sig} t^dagger = t", herm))
    tr_gap = abs(trace(t) - 2.0 ** (-(sig.n // 2)))
    if tr_gap > eps:
        failures.append(_fail(f"{sig} Tr(t)", tr_gap))
    gram_gap = float(np.max(np.abs(basis.gram() - np.eye(basis.d))))
    checks += 1
    if gram_gap > eps:
        failures.append(_fail(f"{sig} Gram matrix", gram_gap))
    # normality of the induced representation on every basis blade
    rep = Representation(basis)
    report = is_normal(rep, tol=eps)
    checks += sig.dim
    for indices, gap in report.failures:
        failures.append(_fail(f"{sig} normality on e^{indices}", gap))
    if report.d != report.expected_d:
        failures.append(_fail(f"{sig} dimension {report.d} != {report.expected_d}", 1.0))
    return checks, failures, []


def _golden_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures, notes = 0, [], []
    presets = [p for (pp, qq, p) in golden_cases() if (pp, qq) == (sig.p, sig.q)]
    if not presets:
        raise ValueError(f"no golden tables for signature ({sig.p},{sig.q})")
    for preset in presets:
        rep = Representation(preset_ideal_basis(sig, preset))
        gold = golden_matrices(sig, preset)
        for a in range(1, sig.n + 1):
            checks += 1
            gap = float(np.max(np.abs(rep.generator_matrix(a) - gold[a - 1])))
            if gap > eps:
                failures.append(_fail(f"{sig} {preset} e^{a}", gap))
        notes.append(f"{sig} {preset}: matched {sig.n} generator matrices")
    return checks, failures, notes


def _unitary_sig(sig: Signature, trials: int, seed: int, eps: float):
    checks, failures = 0, []
    tol = max(eps, 1e-8)
    preset = "paper" if (sig.n % 2 == 1 and sig.n <= 5) else "standard"
    rep = Representation(preset_ideal_basis(sig, preset))
    samples = max(2, min(trials, 5))
    report = group_dimension_check(sig, rep, samples=samples, seed=seed, tol=tol)
    checks += samples + 1
    if not report.matrix_unitary_ok:
        failures.append(_fail(f"{sig} gamma(U) unitarity", report.max_unitarity_residual))
    if report.block_diagonal_ok is False:
        failures.append(_fail(f"{sig} odd-n block structure", 1.0))
    if report.antihermitian_dim != report.expected_dim:
        failures.append(_fail(
            f"{sig} antiHermitian dimension {report.antihermitian_dim} != {report.expected_dim}", 1.0))
    # basis-change relations
    rng = _rng(seed, sig, 8)
    u = random_unitary(sig, rng)
    bases = conjugated_bases(rep, u, tol=tol)
    gu = rep.gamma(u)
    gu_inv = rep.gamma(dagger(u))
    worst = {"left": 0.0, "right": 0.0, "sandwich": 0.0}
    for _ in range(max(2, min(trials, 5))):
        v = random_multivector(sig, rng)
        gv = rep.gamma(v)
        conj = gu_inv @ gv @ gu
        worst["left"] = max(worst["left"], float(np.max(np.abs(bases.left.gamma(v) - conj))))
        worst["right"] = max(worst["right"], float(np.max(np.abs(bases.right.gamma(v) - gv))))
        worst["sandwich"] = max(worst["sandwich"], float(np.max(np.abs(bases.sandwich.gamma(v) - conj))))
    for name, value in worst.items():
        checks += 1
        if value > tol:
            failures.append(_fail(f"{sig} {name}-basis matrix relation", value))
    return checks, failures, []


# ---------------------------------------------------------------------------
# registry and runner

# suite id -> (per-signature body, default n for --all, extra whole-suite body)
SUITES: dict[str, tuple] = {
    "1": (_theorem1_sig, 6, None),
    "2": (_theorem2_sig, 6, _rank_table_n8),
    "3": (_theorem3_sig, 5, None),
    "4": (_theorem4_sig, 5, None),
    "5": (_theorem5_sig, 8, None),
    "6": (_theorem6_sig, 6, None),
    "7": (_theorem7_sig, 6, None),
    "8": (_theorem8_sig, 6, None),
    "golden": (_golden_sig, 5, None),
    "unitary": (_unitary_sig, 6, None),
}


def suite_signatures(suite: str) -> list[Signature]:
    """Default signature list for --all runs of a suite."""
    _, n_all, _ = SUITES[suite]
    if suite == "golden":
        return [Signature(p, q) for (p, q, preset) in golden_cases() if preset == "paper"]
    return all_signatures(n_all)


def run_suite(suite: str, signatures: list[Signature] | None = None, trials: int = 100,
              seed: int = 0, eps: float = 1e-9, jobs: int = 1) -> VerifyReport:
    """Run one verification suite and collect a report.

    With jobs > 1 the per-signature bodies run on a thread pool; the report
    ordering stays deterministic (input signature order).
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; valid ids: {', '.join(SUITES)}")
    body, _, extra = SUITES[suite]
    sigs = signatures if signatures is not None else suite_signatures(suite)
    label = "all" if signatures is None else ";".join(f"{s.p},{s.q}" for s in sigs)
    report = VerifyReport(suite=suite, signature=label, trials=trials, seed=seed, eps=eps)
    start = time.perf_counter()

    def run_one(sig: Signature):
        return body(sig, trials, seed, eps)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, sigs))
    else:
        results = [run_one(sig) for sig in sigs]
    for checks, failures, notes in results:
        report.checks += checks
        report.failures.extend(failures)
        report.notes.extend(notes)
    if extra is not None and signatures is None:
        checks, failures, notes = extra()
        report.checks += checks
        report.failures.extend(failures)
        report.notes.extend(notes)
    report.elapsed_s = time.perf_counter() - start
    return report
