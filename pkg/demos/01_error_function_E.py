"""
The two-sided error function combination E(p, q)
=================================================

Every correction term is a multiple of E(p, q).  This script evaluates it
in the overflow-free scaled form and checks the elementary bounds on a
small grid.
"""

import math

import numpy as np

from regcorr import E, E_minus, erfc, erfcx

# erfc and its scaled companion erfcx(z) = exp(z^2) erfc(z)
for z in (0.0, 1.0, 4.0, 8.0):
    print(f"z={z:4.1f}  erfc={erfc(z):.16e}  erfcx={erfcx(z):.16e}")

# At p = 0 both terms coincide: E(0, q) = 2 erfc(q)
q = 2.0
print("E(0, 2) =", E(0.0, q), " 2 erfc(2) =", 2 * erfc(q))

# exp(2pq) alone overflows here, the combination does not
print("E(18.85, 18.85) =", E(18.85, 18.85))

# E decreases in both arguments; E^- is negative for p, q > 0
p = np.linspace(0, 4, 9)
print("E(p, 1.5)  :", np.array2string(E(p, 1.5), precision=3))
print("E^-(p, 1.5):", np.array2string(E_minus(p, 1.5), precision=3))

# p E(p, q) is at most 0.429 (1 + 1/(1+q)) exp(-q^2) once q > 1
for q in (1.5, 2.15, 3.0):
    lam = np.linspace(0, 3 * q, 3001)
    worst = np.max(lam * E(lam, q)) / ((1 + 1 / (1 + q)) * math.exp(-q * q))
    print(f"q={q}: max_p pE / bound-shape = {worst:.4f} (<= 0.429)")
