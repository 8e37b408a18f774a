"""Independent reference computations used to cross-check the package."""
import itertools
from fractions import Fraction

import numpy as np


def gauss_rank(m, tol=1e-10):
    """Rank by Gaussian elimination with full pivoting and a relative threshold."""
    a = np.array(m, dtype=complex)
    if a.size == 0:
        return 0
    scale = np.abs(a).max()
    if scale == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for _ in range(min(rows, cols)):
        sub = np.abs(a[r:, r:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        if sub[i, j] <= tol * scale * max(rows, cols):
            break
        a[[r, r + i]] = a[[r + i, r]]
        a[:, [r, r + j]] = a[:, [r + j, r]]
        a[r + 1:] -= np.outer(a[r + 1:, r] / a[r, r], a[r])
        r += 1
    return r


def naive_matmul(x, y):
    """Triple-loop matrix product."""
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    n, k = x.shape
    k2, m = y.shape
    assert k == k2
    out = np.zeros((n, m), dtype=complex)
    for i in range(n):
        for j in range(m):
            acc = 0j
            for t in range(k):
                acc += x[i, t] * y[t, j]
            out[i, j] = acc
    return out


def ols_slope(x, y):
    x, y = np.asarray(x, float), np.asarray(y, float)
    xm, ym = x.mean(), y.mean()
    return float(((x - xm) * (y - ym)).sum() / ((x - xm) ** 2).sum())


def min_eig(herm):
    return float(np.linalg.eigvalsh((herm + herm.conj().T) / 2).min())


def random_complex(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def point_in_hull(points, p):
    """Exact hull membership: p is a convex combination of at most 3 points."""
    pts = list(set(points))
    if p in pts:
        return True
    for a, b in itertools.combinations(pts, 2):
        if _on_segment(a, b, p):
            return True
    for a, b, c in itertools.combinations(pts, 3):
        if _in_triangle(a, b, c, p):
            return True
    return False


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(a, b, p):
    if _cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _in_triangle(a, b, c, p):
    if _cross(a, b, c) == 0:
        return False
    d1, d2, d3 = _cross(a, b, p), _cross(b, c, p), _cross(c, a, p)
    neg = d1 < 0 or d2 < 0 or d3 < 0
    pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (neg and pos)


def frac_pt(p):
    return (Fraction(p[0]), Fraction(p[1]))
