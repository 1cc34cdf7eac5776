"""Complementary error function and the two-sided combinations E, E^-.

All functions accept scalars or numpy arrays and return float64 (a Python
float for scalar input).  E and E^- are evaluated through the scaled
function ``erfcx`` so that the factor exp(2pq) never overflows even when
the product with erfc is tiny.
"""

import numpy as np
from scipy import special as _sp

__all__ = ["erfc", "erfcx", "E", "E_minus", "make_E"]


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def erfc(z):
    """Complementary error function ``(2/sqrt(pi)) * int_z^inf exp(-t^2) dt``."""
    return _out(_sp.erfc(np.asarray(z, dtype=float)))


def erfcx(z):
    """Scaled complementary error function ``exp(z^2) * erfc(z)``.

    Finite and positive for ``z >= -26``; for large positive ``z`` it behaves
    like ``1 / (sqrt(pi) * z)``.
    """
    return _out(_sp.erfcx(np.asarray(z, dtype=float)))


def _split_terms(p, q):
    """Return the two terms ``exp(2pq) erfc(p+q)`` and ``exp(-2pq) erfc(q-p)``.

    Assumes ``p >= 0``.  The first term is always scaled.  The second is
    scaled only when ``q - p >= 0``; otherwise erfc(q-p) lies in (1, 2) and
    ``exp(-2pq)`` is safe whenever ``pq >= 0``.
    """
    p, q = np.broadcast_arrays(np.asarray(p, dtype=float), np.asarray(q, dtype=float))
    s = p + q
    d = q - p
    gauss = np.exp(-(p * p + q * q))
    with np.errstate(over="ignore", invalid="ignore"):
        t1 = np.where(s >= 0, gauss * _sp.erfcx(np.where(s >= 0, s, 0.0)),
                      np.exp(2 * p * q) * _sp.erfc(s))
        t2 = np.where(d >= 0, gauss * _sp.erfcx(np.where(d >= 0, d, 0.0)),
                      np.exp(-2 * p * q) * _sp.erfc(d))
    return t1, t2


def E(p, q):
    """``E(p, q) = exp(2pq) erfc(p+q) + exp(-2pq) erfc(q-p)``.

    Even in ``p``; evaluated at ``|p|``.
    """
    t1, t2 = _split_terms(np.abs(p), q)
    return _out(t1 + t2)


def E_minus(p, q):
    """``E^-(p, q) = exp(2pq) erfc(p+q) - exp(-2pq) erfc(q-p)``, odd in ``p``."""
    p = np.asarray(p, dtype=float)
    t1, t2 = _split_terms(np.abs(p), q)
    return _out(np.sign(p) * (t1 - t2))


def make_E(erfc_fn):
    """Build ``(E, E_minus)`` directly from an arbitrary erfc implementation.

    Uses the unscaled definition, so it is only meant for moderate arguments
    (``2pq`` well below 700).  The self-test harness uses this to check that
    a faulty erfc is caught by the property suites.
    """

    def E_direct(p, q):
        p = np.abs(np.asarray(p, dtype=float))
        q = np.asarray(q, dtype=float)
        return _out(np.exp(2 * p * q) * erfc_fn(p + q) + np.exp(-2 * p * q) * erfc_fn(q - p))

    def E_minus_direct(p, q):
        p = np.asarray(p, dtype=float)
        q = np.asarray(q, dtype=float)
        return _out(np.exp(2 * p * q) * erfc_fn(p + q) - np.exp(-2 * p * q) * erfc_fn(q - p))

    return E_direct, E_minus_direct
