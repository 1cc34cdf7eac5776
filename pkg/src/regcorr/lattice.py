"""Lattice index sets, per-term majorants and closed-form tail bounds.

The corrections are sums over the half lattice

    Q = {(m1, m2) : m2 > 0, or m2 = 0 and m1 > 0}.

Far terms are grouped into ``Q_R`` and bounded by comparing the lattice sum
with an integral.  Each closed-form tail has a brute-force counterpart here
(``brute_*``) so the bound can be checked against direct summation.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .partition import UnitNormal, zeta
from .special import E, erfc

__all__ = [
    "LatticeIndex",
    "TailBoundValue",
    "in_Q",
    "in_QR",
    "in_far_region",
    "enumerate_Q",
    "box_indices",
    "single_layer_objective",
    "single_layer_sum",
    "crude_term_single",
    "tail_single",
    "tail_onsurface_extra",
    "double_layer_objective",
    "double_layer_leading",
    "crude_term_double",
    "tail_double",
    "middle_band",
    "brute_tail_sum",
]

LEADING = ((1, 0), (0, 1))


class LatticeIndex(NamedTuple):
    m1: int
    m2: int

    @property
    def norm(self):
        return math.hypot(self.m1, self.m2)


@dataclass(frozen=True)
class TailBoundValue:
    value: float
    R: int
    formula_id: str


def in_Q(m):
    m1, m2 = m
    return m2 > 0 or (m2 == 0 and m1 > 0)


def in_QR(m, R):
    """Membership in the far set ``Q_R`` (first quadrant and positive axes)."""
    m1, m2 = m
    if m1 > 0 and m2 > 0:
        return math.hypot(m1 - 1, m2 - 1) >= R
    if m2 == 0:
        return m1 - 1 >= R
    if m1 == 0:
        return m2 - 1 >= R
    return False


def in_far_region(m, R):
    """``Q_R`` together with its mirror image ``m1 -> -m1`` in the second quadrant.

    The integral comparison behind the tail bounds carries a factor pi (a
    half plane) rather than pi/2, so the same closed form also covers the
    quadrant ``m1 < 0, m2 > 0``.  Used to partition Q for remainder accounting.
    """
    m1, m2 = m
    if m1 < 0 and m2 > 0:
        return math.hypot(-m1 - 1, m2 - 1) >= R
    return in_QR(m, R)


def enumerate_Q(maxnorm):
    """All ``m`` in Q with ``max(|m1|, |m2|) <= maxnorm``, lexicographic order."""
    if maxnorm < 1:
        raise ValueError("maxnorm must be >= 1")
    return [
        LatticeIndex(m1, m2)
        for m1 in range(-maxnorm, maxnorm + 1)
        for m2 in range(-maxnorm, maxnorm + 1)
        if in_Q((m1, m2))
    ]


def box_indices(maxidx):
    return enumerate_Q(maxidx)


def _as_gammas(normal):
    if isinstance(normal, UnitNormal):
        return normal.as_array()
    return np.abs(np.asarray(normal, dtype=float))


def _weighted(z, g, values):
    # zeta_k / gamma_k * values, dropping inactive patches (gamma_k may be 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(z > 0, z / g * values, 0.0)


def single_layer_objective(gammas, params, maxidx=2):
    """Majorant sum for the single layer correction, vectorized over normals.

    ``gammas`` has shape ``(..., 3)``; returns shape ``(...)``.
    """
    g = np.asarray(gammas, dtype=float)
    z = zeta(g, params)
    total = np.zeros(g.shape[:-1])
    for m in enumerate_Q(maxidx):
        mn = m.norm
        total += np.sum(_weighted(z, g * mn, E(0.0, math.pi * params.rho * g * mn)), axis=-1)
    return total / (4 * math.pi)


def single_layer_sum(normal, params, maxidx=2):
    """Majorant ``(1/4pi) sum_m sum_k zeta_k / (gamma_k |m|) E(0, pi rho gamma_k |m|)``.

    The sum runs over ``m`` in Q with ``|m1|, |m2| <= maxidx``.
    """
    if maxidx < 1:
        raise ValueError("maxidx must be >= 1")
    return float(single_layer_objective(_as_gammas(normal), params, maxidx))


def crude_term_single(m, params):
    """Normal-independent bound ``erfc(q0 |m|) / (2 pi gamma0 |m|)`` on the m-th term."""
    mn = math.hypot(*m)
    return erfc(params.q0 * mn) / (2 * math.pi * params.gamma0 * mn)


def tail_single(params, R=2):
    """Closed-form bound on the crude single layer terms summed over ``Q_R``."""
    if R < 1:
        raise ValueError("R must be >= 1")
    g0, q0 = params.gamma0, params.q0
    value = (math.sqrt(math.pi) / (g0 * q0**2) * erfc(q0 * R)
             * (1 / (4 * R) + 1 / (2 * math.pi * R**2)))
    return TailBoundValue(value, R, "single_erfc_tail")


def tail_onsurface_extra(params, R=2):
    """Additional far-field bound from the Gaussian part of the on-surface correction."""
    if R < 1:
        raise ValueError("R must be >= 1")
    q0, rho = params.q0, params.rho
    x = (q0 * R) ** 2
    value = (rho**2 / (2 * math.sqrt(math.pi) * q0**2) * (math.pi + 2 / R)
             * (5 / 3 + 2 / 3 * x) * math.exp(-x))
    return TailBoundValue(value, R, "onsurface_gaussian_tail")


def double_layer_objective(gammas, lam, params):
    """Leading double layer expression, broadcasting ``gammas[..., 3]`` against ``lam[...]``."""
    g = np.asarray(gammas, dtype=float)
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 0):
        raise ValueError("lambda must be non-negative")
    z = zeta(g, params)
    s = np.sum(_weighted(z, g, E(lam[..., None], math.pi * params.rho * g)), axis=-1)
    return math.sqrt(2) * params.rho * lam / 2 * s


def double_layer_leading(normal, lam, params):
    """``(sqrt2 rho lam / 2) sum_k zeta_k / gamma_k E(lam, pi rho gamma_k)``.

    Bounds the two leading terms ``m = (1,0), (0,1)`` of the double layer
    correction, per unit ``h * max|grad phi|``.
    """
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    return float(double_layer_objective(_as_gammas(normal), lam, params))


def crude_term_double(m, params):
    """Bound ``(rho / (2 gamma0)) exp(-q0^2 |m|^2)`` on the m-th double layer term.

    ``gamma`` in this bound is taken as ``gamma0 = cos(theta)``.
    """
    n2 = m[0] ** 2 + m[1] ** 2
    return params.rho / (2 * params.gamma0) * math.exp(-params.q0**2 * n2)


def tail_double(params, R=2):
    """Closed-form bound on the crude double layer terms summed over ``Q_R``."""
    if R < 1:
        raise ValueError("R must be >= 1")
    g0, q0 = params.gamma0, params.q0
    value = params.rho / (4 * g0 * q0**2) * (math.pi + 2 / R) * math.exp(-(q0 * R) ** 2)
    return TailBoundValue(value, R, "double_gaussian_tail")


def middle_band(maxidx, R, exclude=()):
    """Indices of Q outside the direct-sum box and outside the far region.

    These are the terms handled one by one with crude bounds.  ``exclude``
    removes further indices (e.g. the leading pair for the double layer).
    The set is finite because every ``m`` with ``|m| > R + 2`` is far.
    """
    reach = max(maxidx, int(math.ceil(R)) + 2)
    box = set(box_indices(maxidx)) if maxidx >= 1 else set()
    out = []
    for m in enumerate_Q(reach):
        if m in box or m in exclude or in_far_region(m, R):
            continue
        out.append(m)
    return out


def brute_tail_sum(term, R, cutoff=50, mirrored=False):
    """Direct sum of ``term(m)`` over ``Q_R`` truncated at ``|m| <= cutoff``.

    Terms are added in increasing ``|m|`` with ``math.fsum`` so the result
    does not depend on enumeration order.  ``mirrored`` also includes the
    second-quadrant mirror of ``Q_R``.
    """
    member = in_far_region if mirrored else in_QR
    values = []
    for m1 in range(-cutoff, cutoff + 1):
        for m2 in range(0, cutoff + 1):
            m = (m1, m2)
            if m1 * m1 + m2 * m2 > cutoff * cutoff or not in_Q(m) or not member(m, R):
                continue
            values.append((m1 * m1 + m2 * m2, m, term(m)))
    values.sort()
    return math.fsum(v for _, _, v in values)
