"""Maximization over admissible normals and the resulting certified coefficients.

The search runs over the octant of unit normals in spherical angles
(polar ``t``, azimuth ``phi``) on a fixed coarse grid, then zooms twice by
a factor of 10 around each of the best local maxima.  For the double layer
the scaled distance ``lambda`` is maximized inside every normal evaluation
with a vectorized golden-section search on ``[0, q0]``.  Every grid is
fixed, so reports are bit-reproducible.
"""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

from . import lattice
from .lattice import TailBoundValue
from .partition import QuadParams, UnitNormal

__all__ = [
    "Kind",
    "BoundReport",
    "ErrorBudget",
    "NoQualifyingParameters",
    "TABLE_RHOS",
    "TABLE_AS",
    "certify_single_layer",
    "certify_double_layer",
    "certify_single_onsurface",
    "certify",
    "budget",
    "advise",
]

TABLE_RHOS = (2.0, 2.5, 3.0)
TABLE_AS = (1.0, 2.0)

GAMMA_NOTE = ("double layer crude terms and tail use gamma0 = cos(theta) for the "
              "unsubscripted gamma in the per-term bound and its tail")
ONSURFACE_NOTE = ("partial bound: the small-m terms of the non-erfc part of the on-surface "
                  "correction are not computable here; epsilon is the erfc part only and "
                  "the tail adds the Gaussian far-field bound")
CRUDE_NOTE = ("explicit_remainder uses crude per-term bounds, which overestimate the "
              "non-leading double layer terms")


class Kind(str, Enum):
    SINGLE = "single_offsurface"
    DOUBLE = "double_offsurface"
    SINGLE_ONSURFACE = "single_onsurface_tailonly"


class NoQualifyingParameters(RuntimeError):
    def __init__(self, message, best_value, best_params):
        super().__init__(message)
        self.best_value = best_value
        self.best_params = best_params


@dataclass(frozen=True)
class BoundReport:
    kind: Kind
    epsilon: float
    argmax_normal: UnitNormal
    argmax_lambda: Optional[float]
    leading_value: float
    explicit_remainder: float
    tail_value: TailBoundValue
    params: QuadParams
    truncation: tuple
    notes: tuple = field(default=())


@dataclass(frozen=True)
class ErrorBudget:
    h: float
    density_bound: float
    neglected_correction: float


def _octant(t, phi):
    st = np.sin(t)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(t)], axis=-1)


def _coarse_angles(params, n):
    base = np.linspace(0.0, math.pi / 2, n)
    # cluster polar nodes toward the support edge gamma_3 = cos(theta)
    edge = params.theta
    offsets = (math.pi / 2) / n * np.logspace(-4, 0, 9)
    extra = np.concatenate([edge - offsets, edge + offsets])
    t = np.unique(np.clip(np.concatenate([base, extra]), 0.0, math.pi / 2))
    return t, base


class _Search:
    """Coarse grid plus two zoom rounds around the best local maxima."""

    def __init__(self, objective, params, coarse=200, zoom=10, rounds=2, keep=6):
        self.objective = objective
        self.params = params
        self.coarse = coarse
        self.zoom = zoom
        self.rounds = rounds
        self.keep = keep

    def _local_maxima(self, values):
        v = np.pad(values, 1, constant_values=-np.inf)
        c = v[1:-1, 1:-1]
        is_max = np.ones_like(c, dtype=bool)
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                if di or dj:
                    is_max &= c >= v[1 + di:v.shape[0] - 1 + di, 1 + dj:v.shape[1] - 1 + dj]
        idx = np.argwhere(is_max)
        order = np.lexsort((idx[:, 1], idx[:, 0], -c[is_max]))
        return idx[order][: self.keep]

    def run(self):
        t, phi = _coarse_angles(self.params, self.coarse)
        T, P = np.meshgrid(t, phi, indexing="ij")
        values, extra = self.objective(_octant(T, P))
        i, j = np.unravel_index(np.argmax(values), values.shape)
        best = (values[i, j], (T[i, j], P[i, j]), _pick(extra, (i, j)))
        dt = (math.pi / 2) / (self.coarse - 1)
        for i, j in self._local_maxima(values):
            center = (T[i, j], P[i, j])
            step = dt
            for _ in range(self.rounds):
                step = step / self.zoom
                k = np.arange(-self.zoom, self.zoom + 1)
                tt = np.clip(center[0] + k * step, 0.0, math.pi / 2)
                pp = np.clip(center[1] + k * step, 0.0, math.pi / 2)
                TT, PP = np.meshgrid(tt, pp, indexing="ij")
                v, ex = self.objective(_octant(TT, PP))
                a, b = np.unravel_index(np.argmax(v), v.shape)
                center = (TT[a, b], PP[a, b])
                if v[a, b] > best[0]:
                    best = (v[a, b], center, _pick(ex, (a, b)))
        value, (bt, bp), ex = best
        return float(value), _octant(np.float64(bt), np.float64(bp)), ex


def _pick(extra, index):
    return None if extra is None else float(extra[index])


def _golden_lambda(gammas, params, tol=1e-4, coarse=41):
    """Maximize the leading double layer expression in lambda for each normal."""
    q0 = params.q0
    lam_grid = np.linspace(0.0, q0, coarse)
    vals = lattice.double_layer_objective(gammas[..., None, :], lam_grid, params)
    k = np.argmax(vals, axis=-1)
    h = lam_grid[1] - lam_grid[0]
    lo = np.clip(lam_grid[k] - h, 0.0, q0)
    hi = np.clip(lam_grid[k] + h, 0.0, q0)
    invphi = (math.sqrt(5) - 1) / 2
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1 = lattice.double_layer_objective(gammas, x1, params)
    f2 = lattice.double_layer_objective(gammas, x2, params)
    n_iter = int(math.ceil(math.log(tol / (2 * h)) / math.log(invphi))) + 1
    for _ in range(n_iter):
        left = f1 >= f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        x1n = np.where(left, hi - invphi * (hi - lo), x2)
        x2n = np.where(left, x1, lo + invphi * (hi - lo))
        fnew = lattice.double_layer_objective(gammas, np.where(left, x1n, x2n), params)
        f1, f2 = np.where(left, fnew, f2), np.where(left, f1, fnew)
        x1, x2 = x1n, x2n
    lam = np.where(f1 >= f2, x1, x2)
    fbest = np.maximum(f1, f2)
    # the coarse grid value can beat the bracket only at an endpoint maximum
    coarse_best = np.take_along_axis(vals, k[..., None], axis=-1)[..., 0]
    use_coarse = coarse_best > fbest
    return np.where(use_coarse, coarse_best, fbest), np.where(use_coarse, lam_grid[k], lam)


def _check(params):
    params.require_q0_above_one()


def certify_single_layer(params, maxidx=2, R=2):
    """Certified coefficient for the off-surface single layer correction."""
    _check(params)
    search = _Search(lambda g: (lattice.single_layer_objective(g, params, maxidx), None), params)
    value, normal, _ = search.run()
    band = lattice.middle_band(maxidx, R)
    remainder = math.fsum(lattice.crude_term_single(m, params) for m in band)
    return BoundReport(
        kind=Kind.SINGLE,
        epsilon=value,
        argmax_normal=UnitNormal(tuple(normal)),
        argmax_lambda=None,
        leading_value=value,
        explicit_remainder=remainder,
        tail_value=lattice.tail_single(params, R),
        params=params,
        truncation=(maxidx, R),
        notes=(GAMMA_NOTE,),
    )


def certify_double_layer(params, R=2):
    """Certified coefficient for the off-surface double layer correction."""
    _check(params)
    search = _Search(lambda g: _golden_lambda(g, params), params)
    value, normal, lam = search.run()
    band = lattice.middle_band(0, R, exclude=lattice.LEADING)
    remainder = math.fsum(lattice.crude_term_double(m, params) for m in band)
    return BoundReport(
        kind=Kind.DOUBLE,
        epsilon=value,
        argmax_normal=UnitNormal(tuple(normal)),
        argmax_lambda=lam,
        leading_value=value,
        explicit_remainder=remainder,
        tail_value=lattice.tail_double(params, R),
        params=params,
        truncation=(None, R),
        notes=(GAMMA_NOTE, CRUDE_NOTE),
    )


def certify_single_onsurface(params, maxidx=2, R=2):
    """Erfc part of the on-surface single layer bound, with the combined far-field tail."""
    base = certify_single_layer(params, maxidx, R)
    extra = lattice.tail_onsurface_extra(params, R)
    tail = TailBoundValue(base.tail_value.value + extra.value, R, "single_erfc_tail+onsurface_gaussian_tail")
    return replace(base, kind=Kind.SINGLE_ONSURFACE, tail_value=tail, notes=(ONSURFACE_NOTE,))


def certify(kind, params, maxidx=2, R=2):
    kind = Kind(kind)
    if kind is Kind.SINGLE:
        return certify_single_layer(params, maxidx, R)
    if kind is Kind.DOUBLE:
        return certify_double_layer(params, R)
    return certify_single_onsurface(params, maxidx, R)


def budget(report, h, density_bound):
    """Size ``epsilon * h * density_bound`` of the neglected correction."""
    if not h > 0:
        raise ValueError(f"mesh spacing h must be positive, got {h!r}")
    if density_bound < 0:
        raise ValueError("density_bound must be non-negative")
    return ErrorBudget(h, density_bound, report.epsilon * h * density_bound)


def advise(target_error, h, density_bound, kind=Kind.DOUBLE, theta=math.radians(70.0)):
    """Cheapest tabulated ``(rho, a)`` whose neglected correction meets ``target_error``.

    Candidates are tried in order of increasing rho, then increasing a.

    Returns
    -------
    (QuadParams, BoundReport)

    Raises
    ------
    NoQualifyingParameters
        If no candidate reaches the target; carries the best value found.
    """
    if not target_error > 0:
        raise ValueError("target_error must be positive")
    best = (math.inf, None)
    for rho in TABLE_RHOS:
        for a in TABLE_AS:
            params = QuadParams(rho=rho, theta=theta, a=a)
            report = certify(kind, params)
            err = budget(report, h, density_bound).neglected_correction
            if err <= target_error:
                return params, report
            if err < best[0]:
                best = (err, params)
    raise NoQualifyingParameters(
        f"no parameters qualify for target {target_error:g}; best achievable is "
        f"{best[0]:.3g} at rho={best[1].rho}, a={best[1].a}",
        best[0],
        best[1],
    )
