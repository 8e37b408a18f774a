"""
From channel matrices to parallel links
=======================================

A generalized SVD splits the receive space of a two-user channel into
links only user 1 reaches (A), links both users reach (B) and links only
user 2 reaches (C).
"""

import numpy as np

from mac_sdof import gsvd, gsvd_defects, to_parallel

rng = np.random.default_rng(0)

###############################################################################
# Two users with 3 and 2 transmit antennas, a 4-antenna receiver.  User 2's
# channel is built so that one of its directions overlaps user 1's range.
h1 = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
h2 = np.hstack([h1 @ rng.standard_normal((3, 1)),
                rng.standard_normal((4, 1)) + 1j * rng.standard_normal((4, 1))])

g = gsvd(h1, h2)
print("ranks", g.dims)

###############################################################################
# The shared block carries the generalized singular values; each pair of
# cosine and sine squares to one.
print("S1 =", g.s1, " S2 =", g.s2, " S1^2 + S2^2 =", g.s1 ** 2 + g.s2 ** 2)

# every factor is checked on construction, the defects are available too
for name, value in gsvd_defects(g, h1, h2).items():
    print(f"  {name:18s} {value:.2e}")

###############################################################################
# Link-set sizes and the noise scales used for the converse (enhancement)
# and achievability (degradation) models.
model = to_parallel(g, n_e=1)
print(model)
print("|A|, |B|, |C| =", model.a_size, model.b_size, model.c_size)
