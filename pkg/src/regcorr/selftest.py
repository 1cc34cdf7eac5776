"""Built-in verification suites.

Each suite returns a :class:`SuiteResult` with the number of individual
checks and the failures found.  ``run_selftest(inject_fault=True)`` swaps
in a slightly perturbed erfc so the harness itself can be shown to catch
a broken special function.
"""

from dataclasses import dataclass, field

import numpy as np

from . import lattice, special
from ._erfc_reference import ERFC_TABLE
from .partition import QuadParams, beta, zeta

__all__ = ["SuiteResult", "erfc_oracle_suite", "lemma1_suite", "partition_suite",
           "tail_dominance_suite", "run_selftest", "perturbed_erfc"]

SLACK = 1e-12
FD_STEP = 1e-5
FD_RTOL = 1e-6
MONO_STEP = 1e-3
PE_CONST = 0.429


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, label):
        ok = np.asarray(ok, dtype=bool)
        self.checks += ok.size
        bad = int(ok.size - np.count_nonzero(ok))
        if bad:
            self.failures.append(f"{label}: {bad} violation(s)")


def perturbed_erfc(z):
    return special.erfc(z) * (1 + 1e-3)


def erfc_oracle_suite(erfc=special.erfc, erfcx=special.erfcx, rtol=1e-13):
    res = SuiteResult("erfc_oracle")
    worst = 0.0
    for z, ref, refx in ERFC_TABLE:
        e = float(ref)
        err = abs(erfc(z) - e) / e
        worst = max(worst, err)
        res.check(err <= rtol, f"erfc({z})")
        if z >= 0:
            ex = float(refx)
            res.check(abs(erfcx(z) - ex) / ex <= rtol, f"erfcx({z})")
    big = np.linspace(0.0, 100.0, 1001)
    vx = erfcx(big)
    res.check(np.isfinite(vx) & (vx > 0), "erfcx finite and positive on [0, 100]")
    res.check(vx[1:] <= vx[:-1], "erfcx decreasing on [0, 100]")
    res.info["max_rel_err"] = worst
    return res


def lemma1_suite(erfc=special.erfc, E=special.E, E_minus=special.E_minus, n=200):
    """Inequalities and identities for erfc and E on an ``n x n`` grid of ``[0, 6]^2``."""
    res = SuiteResult("lemma1")
    z = np.linspace(-8.0, 8.0, 4 * n + 1)
    ez = erfc(z)
    res.check((ez > 0) & (ez <= 2), "0 < erfc <= 2")
    zp = z[z >= 0]
    res.check(erfc(zp) <= np.exp(-zp * zp) / (1 + zp) + 1e-15, "erfc(z) <= exp(-z^2)/(1+z)")

    grid = np.linspace(0.0, 6.0, n)
    P, Q = np.meshgrid(grid, grid, indexing="ij")
    pos = Q > 0
    p, q = P[pos], Q[pos]
    e = E(p, q)
    res.check(e > 0, "E positive")
    res.check(E(-p, q) == e, "E even in p")
    res.check(E(p + MONO_STEP, q) - e <= SLACK, "E decreasing in p")
    res.check(E(p, q + MONO_STEP) - e <= SLACK, "E decreasing in q")

    lo = p <= q
    bound6 = (1 / (1 + q[lo]) + 1) * np.exp(-p[lo] ** 2) * np.exp(-q[lo] ** 2)
    res.check(e[lo] <= bound6 + SLACK, "E bound for p <= q")
    hi = p >= q
    bound7 = 3 * np.exp(-p[hi] * q[hi]) * np.exp(-q[hi] ** 2)
    res.check(e[hi] <= bound7 + SLACK, "E bound for p >= q")

    sel = (p >= q) & (q > 1)
    ps, qs = p[sel], q[sel]
    res.check((ps + MONO_STEP) * E(ps + MONO_STEP, qs) - ps * E(ps, qs) <= SLACK,
              "pE decreasing in p for p >= q > 1")
    sel = q > 1
    bound8 = PE_CONST * (1 / (1 + q[sel]) + 1) * np.exp(-q[sel] ** 2)
    res.check(p[sel] * e[sel] <= bound8 + SLACK, "pE bound for q > 1")

    # derivative identities away from p = 0 (and q = 0)
    sel = (p >= 0.1) & (q >= 0.1)
    ps, qs = p[sel], q[sel]
    dEdp = (E(ps + FD_STEP, qs) - E(ps - FD_STEP, qs)) / (2 * FD_STEP)
    rhs = 2 * qs * E_minus(ps, qs)
    res.check(np.abs(dEdp - rhs) <= FD_RTOL * np.abs(rhs), "dE/dp = 2q E^-")
    dEmdq = (E_minus(ps, qs + FD_STEP) - E_minus(ps, qs - FD_STEP)) / (2 * FD_STEP)
    rhs = 2 * ps * E(ps, qs)
    res.check(np.abs(dEmdq - rhs) <= FD_RTOL * np.abs(rhs), "dE^-/dq = 2p E")
    res.check(E_minus(ps, qs) < 0, "E^- negative")
    return res


def partition_suite(n_normals=2000, seed=0):
    res = SuiteResult("partition")
    rng = np.random.default_rng(seed)
    g = np.abs(rng.normal(size=(n_normals, 3)))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    for a in (1.0, 2.0):
        params = QuadParams.from_degrees(2.0, 70.0, a)
        z = zeta(g, params)
        res.check(np.abs(z.sum(axis=1) - 1) <= 1e-14, f"zeta sums to 1 (a={a:g})")
        res.check((z >= 0) & (z <= 1), f"zeta in [0, 1] (a={a:g})")
        b = beta(g, params)
        res.check(~(b > 0) | (g > params.gamma0), f"beta vanishes outside support (a={a:g})")
        # exp underflow empties a sliver of width ~1e-3 just inside the edge
        res.check((b > 0) | (g < params.gamma0 + 1e-2), f"beta positive inside support (a={a:g})")
    return res


def tail_dominance_suite(rhos=(2.0, 2.5, 3.0), Rs=(1, 2, 3), cutoff=50):
    """Brute-force far sums never exceed the closed-form tail bounds."""
    res = SuiteResult("tail_dominance")
    ratios = {}
    for rho in rhos:
        params = QuadParams.from_degrees(rho, 70.0, 1.0)
        # terms beyond the cutoff lie in the far set with R = cutoff - 2
        env_s = lattice.tail_single(params, cutoff - 2).value
        env_d = lattice.tail_double(params, cutoff - 2).value
        res.check(env_s < 1e-30 and env_d < 1e-30, f"truncation envelope rho={rho:g}")
        for R in Rs:
            ts = lattice.tail_single(params, R).value
            td = lattice.tail_double(params, R).value
            for mirrored in (False, True):
                ss = lattice.brute_tail_sum(lambda m: lattice.crude_term_single(m, params), R,
                                            cutoff, mirrored)
                sd = lattice.brute_tail_sum(lambda m: lattice.crude_term_double(m, params), R,
                                            cutoff, mirrored)
                tag = f"rho={rho:g} R={R}{' mirrored' if mirrored else ''}"
                res.check(ss <= ts, f"single tail {tag}")
                res.check(sd <= td, f"double tail {tag}")
                if not mirrored:
                    ratios[(rho, R)] = (ts / ss, td / sd)
    res.info["ratios"] = ratios
    return res


def run_selftest(inject_fault=False):
    if inject_fault:
        E_f, Em_f = special.make_E(perturbed_erfc)
        lemma = lemma1_suite(perturbed_erfc, E_f, Em_f)
        oracle = erfc_oracle_suite(erfc=perturbed_erfc)
    else:
        lemma = lemma1_suite()
        oracle = erfc_oracle_suite()
    return [oracle, lemma, partition_suite(), tail_dominance_suite()]
