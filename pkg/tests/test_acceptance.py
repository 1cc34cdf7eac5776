"""Exit criteria for the package; one summary line per criterion is printed at the end."""

import json
import time

import numpy as np
import pytest

from regcorr import (QuadParams, certify_double_layer, certify_single_layer,
                     certify_single_onsurface, max_beta_derivative, tail_onsurface_extra)
from regcorr.cli import main
from regcorr.lattice import brute_tail_sum, crude_term_double, crude_term_single, tail_double, tail_single
from regcorr.selftest import erfc_oracle_suite, lemma1_suite

from conftest import AS, RHOS, record

TABLE1 = {(1.0, 2.0): 1.8e-6, (1.0, 2.5): 1.6e-8, (1.0, 3.0): 7.7e-11,
          (2.0, 2.0): 2.1e-7, (2.0, 2.5): 6.0e-10, (2.0, 3.0): 1.2e-12}
TABLE2 = {(1.0, 2.0): 7.0e-6, (1.0, 2.5): 7.6e-8, (1.0, 3.0): 4.6e-10,
          (2.0, 2.0): 8.3e-7, (2.0, 2.5): 3.0e-9, (2.0, 3.0): 6.6e-12}
RTOL = 0.10


def _run_table(certifier):
    t0 = time.perf_counter()
    out = {(a, rho): certifier(QuadParams.from_degrees(rho, 70.0, a)) for a in AS for rho in RHOS}
    return out, time.perf_counter() - t0


def _table_detail(reports, ref):
    return ", ".join(f"a={a:g} rho={rho:g}: {reports[(a, rho)].epsilon:.3g} (paper {ref[(a, rho)]:.2g})"
                     for a, rho in ref)


def test_criterion1_table1():
    reports, elapsed = _run_table(certify_single_layer)
    errs = {k: abs(reports[k].epsilon - v) / v for k, v in TABLE1.items()}
    ok = max(errs.values()) <= RTOL and elapsed <= 60
    record(1, ok, f"max rel err {max(errs.values()):.3f}, {elapsed:.1f}s; " + _table_detail(reports, TABLE1))
    assert ok


def test_criterion2_table2():
    reports, elapsed = _run_table(certify_double_layer)
    errs = {k: abs(reports[k].epsilon - v) / v for k, v in TABLE2.items()}
    lams = [r.argmax_lambda for r in reports.values()]
    ok = max(errs.values()) <= RTOL and all(0.7 <= l <= 0.8 for l in lams) and elapsed <= 120
    record(2, ok, f"max rel err {max(errs.values()):.3f}, lambda* in [{min(lams):.4f}, "
                  f"{max(lams):.4f}], {elapsed:.1f}s; " + _table_detail(reports, TABLE2))
    assert ok


def test_criterion3_partition_derivatives():
    d1 = max_beta_derivative(QuadParams.from_degrees(2.0, 70.0, 1.0))
    d2 = max_beta_derivative(QuadParams.from_degrees(2.0, 70.0, 2.0))
    with pytest.warns(UserWarning):
        p3 = QuadParams.from_degrees(2.0, 70.0, 3.0)
    d3 = max_beta_derivative(p3)
    ok = abs(d1 - 2.3) <= 0.1 and abs(d2 - 2.7) <= 0.1 and d3 > d2
    record(3, ok, f"a=1: {d1:.4f}, a=2: {d2:.4f}, a=3: {d3:.4f}")
    assert ok


def test_criterion4_onsurface_substitute():
    r1 = certify_single_onsurface(QuadParams.from_degrees(3.0, 70.0, 1.0))
    r2 = certify_single_onsurface(QuadParams.from_degrees(3.0, 70.0, 2.0))
    extra = tail_onsurface_extra(QuadParams.from_degrees(3.0, 70.0, 1.0), 2).value
    ok = r1.leading_value <= 9.3e-8 and r2.leading_value <= 1.9e-9 and extra < 1e-12
    record(4, ok, f"a=1: {r1.leading_value:.3g} <= 9.3e-8, a=2: {r2.leading_value:.3g} <= 1.9e-9, "
                  f"extra tail {extra:.3g} < 1e-12")
    assert ok


def test_criterion5_lemma1_suite():
    res = lemma1_suite(n=200)
    record(5, res.passed, f"{res.checks} checks, failures: {res.failures or 'none'}")
    assert res.passed


def test_criterion6_tail_dominance():
    ratios = []
    ok = True
    for rho in RHOS:
        p = QuadParams.from_degrees(rho, 70.0, 1.0)
        for R in (1, 2, 3):
            ss = brute_tail_sum(lambda m: crude_term_single(m, p), R, 50)
            sd = brute_tail_sum(lambda m: crude_term_double(m, p), R, 50)
            rs = tail_single(p, R).value / ss
            rd = tail_double(p, R).value / sd
            ok &= bool(np.isfinite(rs) and np.isfinite(rd) and rs >= 1 and rd >= 1)
            ratios += [rs, rd]
    record(6, ok, f"bound/sum ratios in [{min(ratios):.3g}, {max(ratios):.3g}] over 9 (rho, R) pairs")
    assert ok


def test_criterion7_erfc_accuracy():
    res = erfc_oracle_suite(rtol=1e-13)
    record(7, res.passed, f"max rel err {res.info['max_rel_err']:.2e} over {res.checks} checks")
    assert res.passed


def test_criterion8_orderings(table1, table2):
    ok = True
    for table in (table1, table2):
        for a in AS:
            e = [table[(a, rho)].epsilon for rho in RHOS]
            ok &= e[0] > e[1] > e[2]
        for rho in RHOS:
            ok &= table[(2.0, rho)].epsilon < table[(1.0, rho)].epsilon
    record(8, ok, "epsilon decreasing in rho and smaller for a=2, both tables")
    assert ok


def test_criterion9_determinism(tmp_path):
    ok = True
    for cmd in ("table1", "table2"):
        outs = []
        for i in range(2):
            path = tmp_path / f"{cmd}_{i}.json"
            assert main([cmd, "--format", "json", "--out", str(path)]) == 0
            outs.append(path.read_bytes())
        ok &= outs[0] == outs[1]
        json.loads(outs[0])
    record(9, ok, "table1/table2 JSON byte-identical across runs")
    assert ok
