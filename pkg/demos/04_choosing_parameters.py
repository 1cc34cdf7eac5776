"""
Choosing rho and a for a target error
=====================================

The neglected correction is at most epsilon * h * max|density|.  Given a
mesh spacing and a tolerance, pick the cheapest tabulated parameters.
"""

from regcorr import Kind, NoQualifyingParameters, QuadParams, advise, budget, certify_double_layer

report = certify_double_layer(QuadParams.from_degrees(2.0, 70.0, 1.0))
for h in (0.1, 0.05, 0.025):
    b = budget(report, h, density_bound=1.0)
    print(f"h={h:<6} neglected double layer correction <= {b.neglected_correction:.2e}")

for target in (1e-7, 1e-9, 1e-12):
    try:
        params, r = advise(target, h=0.01, density_bound=1.0, kind=Kind.DOUBLE)
        print(f"target {target:g}: rho={params.rho:g}, a={params.a:g} (epsilon {r.epsilon:.2e})")
    except NoQualifyingParameters as exc:
        print(f"target {target:g}: {exc}")
