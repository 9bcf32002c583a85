"""Seeded verification suites for the integral inequalities and exact identities.

Random streams come from numpy's PCG64 seeded through ``SeedSequence(seed,
spawn_key=(n, k, trial))``, so each trial has its own reproducible stream
independent of scheduling.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cone import lf_loewner, max_extreme_form, reflect_through_center
from .errors import TermBudgetExceeded
from .harmonic import dim_forms, dim_harmonics, dual_point, legendre_harmonic, level_components, rational_sphere_point
from .poly import HomoForm, laplacian, linear_form, monomial_exponents
from .power import power_expansion
from .sphere import TERM_BUDGET, integral, inner_product, norm_squared, power_integral, sphere_max, sphere_min

COEFF_RANGE = 3


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(stream))))


def random_form(n: int, d: int, rng: np.random.Generator, lo: int = -COEFF_RANGE, hi: int = COEFF_RANGE) -> HomoForm:
    exps = monomial_exponents(n, d)
    while True:
        coeffs = rng.integers(lo, hi + 1, size=len(exps))
        if coeffs.any():
            return HomoForm(n, d, {e: int(c) for e, c in zip(exps, coeffs)})


def sos_from(generators: Iterable[HomoForm]) -> HomoForm:
    """``sum g^2`` rescaled to integral 1."""
    gens = list(generators)
    f = gens[0] * gens[0]
    for g in gens[1:]:
        f = f + g * g
    return f / integral(f)


def sample_sos(n: int, k: int, terms: int, seed: int, stream: Sequence[int] = ()) -> HomoForm:
    """A normalized sum of ``terms`` squares of random degree-``k`` forms."""
    if terms < 1:
        raise ValueError("need at least one square")
    rng = rng_for(seed, *stream)
    return sos_from(random_form(n, k, rng) for _ in range(terms))


@dataclass(frozen=True)
class SuiteConfig:
    n_values: tuple = (2, 3)
    k_values: tuple = (1, 2)
    trials: int = 200
    seed: int = 0
    tol: float = 1e-9
    budget: int = TERM_BUDGET
    l_values: tuple = (1, 2)
    jobs: int = 1


@dataclass
class ClaimRecord:
    claim: str
    paper_ref: str
    exact: bool
    lhs: str
    rhs: str
    slack: str
    passed: bool
    witness: str | None = None

    def as_json(self) -> dict:
        out = {
            "claim": self.claim,
            "paper_ref": self.paper_ref,
            "exact": self.exact,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "pass": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class ClaimSummary:
    claim: str
    paper_ref: str
    exact: bool
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    worst: ClaimRecord | None = None
    witnesses: list = field(default_factory=list)

    def add(self, rec: ClaimRecord):
        if rec.passed:
            self.passed += 1
        else:
            self.failed += 1
            self.witnesses.append(rec.witness)
        if self.worst is None or _slack_key(rec) < _slack_key(self.worst):
            self.worst = rec

    def as_json(self) -> dict:
        w = self.worst
        return {
            "claim": self.claim,
            "paper_ref": self.paper_ref,
            "exact": self.exact,
            "lhs": w.lhs if w else "",
            "rhs": w.rhs if w else "",
            "slack": w.slack if w else "",
            "pass": self.failed == 0,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "witnesses": [x for x in self.witnesses if x is not None],
        }


def _slack_key(rec: ClaimRecord):
    # worst record = smallest slack; exact slacks compare as Fractions
    return Fraction(rec.slack) if rec.exact else float(rec.slack)


@dataclass
class SuiteReport:
    config: SuiteConfig
    summaries: dict = field(default_factory=dict)  # key: (claim, n, k)

    def add(self, n: int, k: int, rec: ClaimRecord):
        key = (rec.claim, n, k)
        if key not in self.summaries:
            self.summaries[key] = ClaimSummary(rec.claim, rec.paper_ref, rec.exact)
        self.summaries[key].add(rec)

    def skip(self, n: int, k: int, claim: str, paper_ref: str, exact: bool):
        key = (claim, n, k)
        if key not in self.summaries:
            self.summaries[key] = ClaimSummary(claim, paper_ref, exact)
        self.summaries[key].skipped += 1

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.summaries.values())

    def rows(self) -> list[dict]:
        out = []
        for (claim, n, k), s in self.summaries.items():
            row = s.as_json()
            row["n"], row["k"] = n, k
            out.append(row)
        return out

    def to_json(self) -> str:
        return json.dumps({"ok": self.ok, "seed": self.config.seed, "tol": self.config.tol,
                           "claims": self.rows()}, indent=1, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for (claim, n, k), s in self.summaries.items():
            status = "PASS" if s.failed == 0 else "FAIL"
            w = s.worst
            slack = w.slack if w else "-"
            lines.append(f"{status} {claim:<28} n={n} k={k} passed={s.passed} failed={s.failed} "
                         f"skipped={s.skipped} worst_slack={slack} [{s.paper_ref}]")
        lines.append("OK" if self.ok else "FAILURES")
        return "\n".join(lines)


def _fmt(x) -> str:
    return str(x) if isinstance(x, (Fraction, int)) else repr(float(x))


def _float_rec(claim, ref, lhs, rhs, tol, witness) -> ClaimRecord:
    slack = float(rhs) - float(lhs)
    ok = slack >= -tol
    return ClaimRecord(claim, ref, False, _fmt(lhs), _fmt(rhs), repr(slack), ok, None if ok else witness)


def _exact_rec(claim, ref, lhs: Fraction, rhs: Fraction, witness) -> ClaimRecord:
    slack = rhs - lhs
    ok = slack >= 0
    return ClaimRecord(claim, ref, True, _fmt(lhs), _fmt(rhs), _fmt(slack), ok, None if ok else witness)


def _identity_rec(claim, ref, holds: bool, witness) -> ClaimRecord:
    return ClaimRecord(claim, ref, True, "identity", "identity", "0", holds, None if holds else witness)


def inequality_records(f: HomoForm, config: SuiteConfig) -> list:
    """Check the four integral inequalities on a normalized nonnegative form."""
    n, k, tol = f.n, f.d // 2, config.tol
    D = dim_forms(n, k)
    alpha = Fraction(1, D)
    mass = integral(f)
    M = sphere_max(f).value
    m = sphere_min(f).value
    wit = str(f)
    recs = [
        _float_rec("sup<=D(n,k)*L1", "sup-norm-vs-mean", M, D * mass, tol, wit),
        _float_rec("mean>=aM+(1-a)m", "mean-bounds/lower", alpha * M + (1 - float(alpha)) * m, mass, tol, wit),
        _float_rec("mean<=(1-a)M+am", "mean-bounds/upper", mass, (1 - float(alpha)) * M + float(alpha) * m, tol, wit),
        _exact_rec("L2^2<=D(n,k)*L1^2", "l2-vs-l1", norm_squared(f), D * mass * mass, wit),
    ]
    for l in config.l_values:
        claim = f"sup<=D(n,2kl)^(1/2l)*L{2 * l}"
        try:
            moment = power_integral(f, 2 * l, budget=config.budget)
        except TermBudgetExceeded:
            recs.append(("skip", claim))
            continue
        rhs = (dim_forms(n, 2 * k * l) * float(moment)) ** (1.0 / (2 * l))
        recs.append(_float_rec(claim, "sup-vs-even-moment", M, rhs, tol, wit))
    return recs


def _trial(args):
    n, k, trial, config = args
    rng = rng_for(config.seed, n, k, trial)
    terms = int(rng.integers(1, dim_forms(n, k) + 1))
    f = sos_from(random_form(n, k, rng) for _ in range(terms))
    recs = inequality_records(f, config)
    parts_ok = norm_squared(f) == sum(norm_squared(c) for c in level_components(f).values())
    recs.append(_identity_rec("parseval", "level-orthogonality", parts_ok, str(f)))
    return recs


def sharpness_records(n: int, k: int, tol: float) -> list:
    """Equality cases: the extreme form and its reflection through ``r^(2k)``."""
    D = dim_forms(n, k)
    alpha = 1.0 / D
    f = max_extreme_form(n, k)
    M = sphere_max(f).value
    m = sphere_min(f).value
    recs = []
    for claim, lhs, rhs in [
        ("sharp:sup==D(n,k)", M, D),
        ("sharp:mean==aM+(1-a)m", alpha * M + (1 - alpha) * m, 1.0),
    ]:
        slack = rhs - lhs
        recs.append(ClaimRecord(claim, "extreme-form", False, _fmt(lhs), _fmt(rhs), repr(slack),
                                abs(slack) <= tol, None if abs(slack) <= tol else str(f)))
    if D > 1:
        fbar = reflect_through_center(f, D)
        Mb = sphere_max(fbar).value
        mb = sphere_min(fbar).value
        lhs, rhs = 1.0, (1 - alpha) * Mb + alpha * mb
        slack = rhs - lhs
        recs.append(ClaimRecord("sharp:mean==(1-a)M+am", "reflected-extreme-form", False, _fmt(lhs), _fmt(rhs),
                                repr(slack), abs(slack) <= tol, None if abs(slack) <= tol else str(fbar)))
    return recs


def identity_records(n: int, k: int, seed: int, forms: int = 3) -> list:
    """Zero-tolerance identities in degree ``2k``."""
    recs = []
    d = 2 * k
    xn = HomoForm.monomial((0,) * (n - 1) + (d,))
    recs.append(_identity_rec("power-expansion", "zonal-expansion-of-xn-power",
                              power_expansion(n, k) == xn / integral(xn), f"n={n} k={k}"))
    rng = rng_for(seed, n, k, 10**6)
    points = [rational_sphere_point([Fraction(int(a), int(b)) for a, b in
                                     zip(rng.integers(-5, 6, n - 1), rng.integers(1, 6, n - 1))])
              for _ in range(2)]
    for v in points:
        p = dual_point(n, d, v)
        for _ in range(forms):
            g = random_form(n, d, rng)
            recs.append(_identity_rec("reproducing-property", "dual-point", inner_product(p, g) == g(v),
                                      f"v={v} f={g}"))
        lin = linear_form(v) ** d
        lin = lin / integral(lin)
        ell = lf_loewner(n, k)
        recs.append(_identity_rec("powers-on-loewner-boundary", "loewner-ellipsoid/powers",
                                  ell.functional(lin) == ell.bound, f"v={v}"))
    for j in range(d + 1):
        L = legendre_harmonic(n, j)
        ok = (laplacian(L).is_zero() and L((0,) * (n - 1) + (1,)) == 1
              and norm_squared(L) == Fraction(1, dim_harmonics(n, j)))
        recs.append(_identity_rec("legendre-harmonic", "legendre-norm", ok, f"n={n} d={j}"))
    return recs


def run_suite(config: SuiteConfig) -> SuiteReport:
    report = SuiteReport(config)
    for n in config.n_values:
        for k in config.k_values:
            for rec in identity_records(n, k, config.seed):
                report.add(n, k, rec)
            for rec in sharpness_records(n, k, config.tol):
                report.add(n, k, rec)
            jobs = [(n, k, t, config) for t in range(config.trials)]
            if config.jobs > 1:
                with ProcessPoolExecutor(config.jobs) as pool:
                    results = list(pool.map(_trial, jobs, chunksize=8))
            else:
                results = map(_trial, jobs)
            for recs in results:
                for rec in recs:
                    if isinstance(rec, tuple):
                        report.skip(n, k, rec[1], "sup-vs-even-moment", False)
                    else:
                        report.add(n, k, rec)
    return report
