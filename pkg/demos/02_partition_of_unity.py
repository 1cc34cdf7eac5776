"""
Partition of unity on the sphere of normals
===========================================

The weights zeta_k select a coordinate patch from the normal vector.  A
steeper bump (larger a) shrinks the correction coefficients but raises the
derivative of beta; this script shows that trade-off at theta = 70 degrees.
"""

import warnings

import numpy as np

from regcorr import QuadParams, UnitNormal, beta, max_beta_derivative, zeta

params = QuadParams.from_degrees(rho=2.0, theta_deg=70.0, a=1.0)
print(f"gamma0 = cos(theta) = {params.gamma0:.6f}, q0 = pi rho gamma0 = {params.q0:.6f}")

nk = np.linspace(0.3, 1.0, 8)
print("beta(nk):", np.array2string(beta(nk, params), precision=4))

for n in ([0, 0, 1], [1, 1, 1], [0.342, 0.2, 0.9]):
    normal = UnitNormal.from_vector(n)
    print(np.round(normal.gamma, 4), "->", np.round(zeta(normal, params), 4))

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for a in (1.0, 2.0, 3.0, 4.0):
        p = QuadParams.from_degrees(2.0, 70.0, a)
        print(f"a={a:g}: max |d beta / d nk| = {max_beta_derivative(p):.3f}")
