"""Partition of unity on the sphere of unit normals.

Each coordinate patch k (k = 1, 2, 3) gets a bump weight ``beta_k`` that
depends only on ``|n_k|``; the normalized weights ``zeta_k = beta_k / sum``
select the patch.  Everything here works on the octant representative
``gamma_k = |n_k|`` of a normal.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

__all__ = [
    "ParameterError",
    "DegeneratePartitionError",
    "QuadParams",
    "UnitNormal",
    "beta",
    "beta_derivative",
    "zeta",
    "max_beta_derivative",
]

# exp() of anything below this underflows to a subnormal; treat as exact zero
_EXP_FLOOR = -745.0


class ParameterError(ValueError):
    pass


class DegeneratePartitionError(ValueError):
    """All three bump weights vanish at the given normal."""


@dataclass(frozen=True)
class QuadParams:
    """Numerical parameters of the regularized quadrature.

    Parameters
    ----------
    rho : float
        Ratio of smoothing radius to mesh spacing, ``delta / h``.
    theta : float
        Partition angle in radians, in ``(0, pi/2)``.
    a : float
        Bump coefficient of the partition of unity.
    """

    rho: float
    theta: float = math.radians(70.0)
    a: float = 1.0
    gamma0: float = field(init=False, repr=False)
    q0: float = field(init=False, repr=False)

    def __post_init__(self):
        if not (self.rho > 0 and math.isfinite(self.rho)):
            raise ParameterError(f"rho must be positive, got {self.rho!r}")
        if not (0 < self.theta < math.pi / 2):
            raise ParameterError(f"theta must lie in (0, pi/2) radians, got {self.theta!r}")
        if not (self.a > 0 and math.isfinite(self.a)):
            raise ParameterError(f"a must be positive, got {self.a!r}")
        if self.a > 2:
            warnings.warn(
                f"a = {self.a} > 2 gives steep partition derivatives; a <= 2 is recommended",
                stacklevel=3,
            )
        gamma0 = math.cos(self.theta)
        object.__setattr__(self, "gamma0", gamma0)
        object.__setattr__(self, "q0", math.pi * self.rho * gamma0)

    @classmethod
    def from_degrees(cls, rho, theta_deg=70.0, a=1.0):
        return cls(rho=float(rho), theta=math.radians(theta_deg), a=float(a))

    @property
    def theta_deg(self):
        return math.degrees(self.theta)

    def require_q0_above_one(self):
        if self.q0 <= 1:
            raise ParameterError(
                f"q0 = pi*rho*cos(theta) = {self.q0:.6g} must exceed 1 for the bounds to apply"
            )


@dataclass(frozen=True)
class UnitNormal:
    """Octant representative ``(|n_1|, |n_2|, |n_3|)`` of a unit normal."""

    gamma: tuple

    def __post_init__(self):
        g = tuple(abs(float(x)) for x in self.gamma)
        if len(g) != 3:
            raise ValueError("a normal has exactly three components")
        if abs(math.fsum(x * x for x in g) - 1.0) > 1e-12:
            raise ValueError(f"normal {g} is not a unit vector")
        object.__setattr__(self, "gamma", g)

    @classmethod
    def from_vector(cls, n):
        n = np.abs(np.asarray(n, dtype=float))
        return cls(tuple(n / np.linalg.norm(n)))

    def as_array(self):
        return np.array(self.gamma)


def _radius(nk, theta):
    return np.arccos(np.clip(nk, -1.0, 1.0)) / theta


def beta(nk, params):
    """Bump weight ``exp(a r^2 / (r^2 - 1))`` with ``r = arccos(nk) / theta``.

    Zero for ``nk <= cos(theta)``.  Vectorized over ``nk``.
    """
    nk = np.asarray(nk, dtype=float)
    r = _radius(nk, params.theta)
    inside = nk > params.gamma0
    with np.errstate(divide="ignore", invalid="ignore"):
        expo = np.where(inside, params.a * r * r / (r * r - 1.0), -np.inf)
    out = np.where(expo < _EXP_FLOOR, 0.0, np.exp(np.maximum(expo, _EXP_FLOOR)))
    return float(out) if out.ndim == 0 else out


def beta_derivative(nk, params):
    """``d beta / d nk`` on ``[0, 1]``, finite at ``nk = 1``.

    With ``phi = arccos(nk)`` the derivative is
    ``beta * 2a (phi / sin phi) / (theta^2 (r^2 - 1)^2)``; the ratio
    ``phi / sin phi`` is evaluated through ``sinc`` so ``nk = 1`` is regular.
    """
    nk = np.asarray(nk, dtype=float)
    phi = np.arccos(np.clip(nk, -1.0, 1.0))
    r = phi / params.theta
    b = beta(nk, params)
    with np.errstate(divide="ignore", invalid="ignore"):
        d = b * 2.0 * params.a / (np.sinc(phi / np.pi) * params.theta**2 * (r * r - 1.0) ** 2)
    d = np.where(b > 0, d, 0.0)
    return float(d) if d.ndim == 0 else d


def zeta(gammas, params):
    """Normalized partition weights for one normal or an ``(N, 3)`` stack.

    Accepts a :class:`UnitNormal` or array-like of octant components.
    """
    g = gammas.as_array() if isinstance(gammas, UnitNormal) else np.asarray(gammas, dtype=float)
    b = beta(np.abs(g), params)
    total = np.sum(b, axis=-1, keepdims=True)
    if np.any(total <= 0):
        raise DegeneratePartitionError(
            "beta_1 + beta_2 + beta_3 = 0; need cos(theta) < 1/sqrt(3)"
        )
    return b / total


def max_beta_derivative(params, samples=100_001):
    """Maximum of ``|d beta / d nk|`` over ``nk`` in ``(cos theta, 1]``.

    Dense sampling, then bounded scalar refinement around the best sample.

    Returns
    -------
    float
    """
    lo = params.gamma0
    nk = np.linspace(lo, 1.0, samples)[1:]
    d = np.abs(beta_derivative(nk, params))
    i = int(np.argmax(d))
    best_x, best = nk[i], d[i]
    step = nk[1] - nk[0]
    left, right = max(lo, best_x - step), min(1.0, best_x + step)
    for _ in range(3):
        res = minimize_scalar(
            lambda x: -abs(beta_derivative(x, params)),
            bounds=(left, right),
            method="bounded",
            options={"xatol": 1e-10},
        )
        if -res.fun > best:
            best_x, best = res.x, -res.fun
        half = (right - left) / 4
        left, right = max(lo, best_x - half), min(1.0, best_x + half)
    return float(best)
