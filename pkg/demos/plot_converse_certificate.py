"""
Certifying the region
=====================

A certificate lists the dof-accounting steps of the converse and checks that
the resulting outer bound equals the achievable region.
"""

from mac_sdof import certify, certify_grid

###############################################################################
# Two 2-antenna users, a 3-antenna receiver and a 1-antenna eavesdropper:
# the sum secrecy dof is 1.
cert = certify(3, 2, 2, 1)
print(cert.case.value, cert.verdict)
for step in cert.steps:
    print(f"  {step.label:22s} {step.weights} <= {step.rhs}")

###############################################################################
# A configuration in the pentagon regime where the users must be swapped
# before the bound is assembled.
cert = certify(7, 6, 4, 2)
print(cert.case.value, "swap:", cert.swap_applied, "verdict:", cert.verdict)
print("eavesdropper links:", cert.eavesdropper_sets["E1"], cert.eavesdropper_sets["E2"])
for step in cert.steps[-2:]:
    for desc, cap in step.terms:
        print(f"    {cap:3d}  {desc}")

###############################################################################
# Every antenna tuple up to 5 antennas per node.
results = certify_grid(5)
print(len(results), "configurations, all verdicts true:", all(c.verdict for _, c in results))
