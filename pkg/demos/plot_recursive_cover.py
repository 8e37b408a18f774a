"""
The recursive eavesdropper cover
================================

The converse for the triangle-shaped region walks through subsets F_i of the
shared links G.  Taken together, the subsets cover every link exactly |F| times.
"""

from mac_sdof import build_cover

###############################################################################
# |F| = 3, |G| = 7: the fifth subset wraps around and restarts the counter.
cov = build_cover(3, 7)
for i, f_i, h_i, v_i, c_i, case in cov.rows():
    print(i, case, f_i, sorted(h_i) if h_i is not None else None, sorted(v_i), c_i)

###############################################################################
# The checks used by the certifier.
cov.verify()
print("c_|G| =", cov.counters[-1], " V_|G| =", set(cov.v_sets[-1]))

# i|F| + |V_i| = c_i |G| at every stage; this is what makes the final
# weighted bound come out as |G| d1 + |F| d2 <= |F||G|
print([i * cov.f_size + len(v) == c * cov.g_size
       for i, (v, c) in enumerate(zip(cov.v_sets, cov.counters))])
