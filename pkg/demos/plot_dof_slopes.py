"""
Secrecy rates at high power
===========================

With uniform Gaussian inputs on the allocated links, secrecy rates grow like
d_k log2 P.  Fitting the slope recovers the corner points of the region.
"""

import numpy as np

from mac_sdof import ParallelModel, Target, allocate, sdof_vertices, sweep

###############################################################################
# |A| = |B| = |C| = 1 with a single eavesdropper antenna.
model = ParallelModel(1, 1, 1, n_e=1, degradation_scale=1.3, s_bar=0.7)
for target in (Target.P3, Target.P4):
    scheme = allocate(model, target)
    res = sweep(model, scheme)
    print(target.value, "links", scheme.links1, scheme.links2,
          "slopes", np.round(res.fitted_slopes, 4))

###############################################################################
# Compare with the exact corner points.
v = sdof_vertices(model.r0, model.r1, model.r2, model.n_e)
print("p3 =", (str(v[3].d1), str(v[3].d2)), " p4 =", (str(v[4].d1), str(v[4].d2)))

###############################################################################
# The raw series, ready for plotting.
print(sweep(model, allocate(model, Target.P3)).to_csv())
