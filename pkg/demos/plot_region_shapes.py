"""
Shapes of the secrecy-dof region
================================

The region is the convex hull of five corner points.  Depending on the
eavesdropper antenna count N_E it is a polymatroid (A), a pentagon cut by a
sloped line (B) or a triangle (C).  Everything here is exact arithmetic.
"""

from mac_sdof import classify_case, rectangle_hull, sdof_region, sdof_vertices

###############################################################################
# Fix the ranks r0 = 7, r1 = 4, r2 = 6 and let the eavesdropper grow.
r0, r1, r2 = 7, 4, 6
for n_e in range(6):
    region = sdof_region(r0, r1, r2, n_e)
    verts = [(str(v.d1), str(v.d2)) for v in region.vertices]
    print(f"N_E={n_e}  case {classify_case(r0, r1, r2, n_e).value:10s} vertices {verts}")

###############################################################################
# The half-space form is exact and in lowest terms.  ``(a, b, c)`` reads
# ``a*d1 + b*d2 <= c``.
for h in sdof_region(r0, r1, r2, 2).halfspaces:
    print("  %s d1 + %s d2 <= %s" % h)

###############################################################################
# Each user occupies t_k dimensions and loses N_E of them to the eavesdropper;
# the hull of the resulting rectangles is the same region.
print(rectangle_hull(r0, r1, r2, 2) == sdof_region(r0, r1, r2, 2))
print("corner points:", [(str(p.d1), str(p.d2)) for p in sdof_vertices(r0, r1, r2, 2)])

###############################################################################
# Plot-ready vertex data.
print(sdof_region(r0, r1, r2, 2).vertices_csv())
