"""Numerical rank and the generalized SVD of a pair of channel matrices.

Channel matrices follow the receiver model ``Y = H1 X1 + H2 X2 + Z``: both
``H1`` (N_R x N_T1) and ``H2`` (N_R x N_T2) share their row count N_R.  The
factorization is computed for the conjugate transposes,

    U1^H H1^H Q = Sigma1 [W^H R, 0]
    U2^H H2^H Q = Sigma2 [W^H R, 0]

using the Paige-Saunders construction: a complete orthogonal decomposition
of the stacked matrix ``[H1^H; H2^H]`` followed by a cosine-sine
decomposition of the orthonormal factor.
"""
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, ToleranceViolation

DEFAULT_TOL = 1e-10
DEFAULT_CHECK_TOL = 1e-8

# cosines above this are resolved from the sine side of the CS pair
_SPLIT = 1.0 / np.sqrt(2.0)


def rank(m, tol=DEFAULT_TOL):
    """Number of singular values of `m` above ``tol * sigma_max``.

    Empty and all-zero matrices have rank 0.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    m = np.asarray(m)
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > tol * sv[0]))


@dataclass(frozen=True)
class DimProfile:
    """Rank bookkeeping of a channel pair.

    ``s = r1 + r2 - r0`` counts the receive dimensions shared by both users,
    ``r1_tilde`` and ``r2_tilde`` the dimensions private to each.
    """

    r0: int
    r1: int
    r2: int
    s: int
    r1_tilde: int
    r2_tilde: int

    def __post_init__(self):
        for name in ("r0", "r1", "r2", "s", "r1_tilde", "r2_tilde"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative: {self}")
        if self.s != self.r1 + self.r2 - self.r0:
            raise ValueError(f"s != r1 + r2 - r0: {self}")
        if self.r1_tilde != self.r1 - self.s or self.r2_tilde != self.r2 - self.s:
            raise ValueError(f"tilde ranks inconsistent: {self}")
        if self.r1_tilde + self.s + self.r2_tilde != self.r0:
            raise ValueError(f"r1~ + s + r2~ != r0: {self}")

    @classmethod
    def from_ranks(cls, r0, r1, r2):
        s = r1 + r2 - r0
        return cls(r0=r0, r1=r1, r2=r2, s=s, r1_tilde=r1 - s, r2_tilde=r2 - s)

    def to_json(self):
        return {
            "r0": self.r0, "r1": self.r1, "r2": self.r2, "s": self.s,
            "r1_tilde": self.r1_tilde, "r2_tilde": self.r2_tilde,
        }


@dataclass(frozen=True, eq=False)
class GsvdResult:
    """Factors of the generalized SVD; see the module docstring for layout.

    ``sigma1`` is N_T1 x r0 with an identity block of size ``r1_tilde``
    followed by the diagonal ``S1`` block; ``sigma2`` is N_T2 x r0 with
    ``N_T2 - r2`` leading zero rows, then ``S2``, then an identity block of
    size ``r2_tilde`` in its last rows and columns.
    """

    u1: np.ndarray
    u2: np.ndarray
    q: np.ndarray
    w: np.ndarray
    r_factor: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray
    dims: DimProfile

    @property
    def s1(self):
        """Diagonal of the S1 block (decreasing)."""
        d = self.dims
        cols = np.arange(d.r1_tilde, d.r1_tilde + d.s)
        return self.sigma1[cols, cols].real.copy()

    @property
    def s2(self):
        d = self.dims
        rows = self.sigma2.shape[0] - d.r2 + np.arange(d.s)
        cols = np.arange(d.r1_tilde, d.r1_tilde + d.s)
        return self.sigma2[rows, cols].real.copy()

    @property
    def a(self):
        """The nonsingular r0 x r0 matrix ``W^H R``."""
        return self.w.conj().T @ self.r_factor

    def reconstruct(self):
        """Rebuild ``(H1, H2)`` from the factors."""
        n_r = self.q.shape[0]
        k = self.dims.r0
        core = np.zeros((k, n_r), dtype=complex)
        core[:, :k] = self.a
        h1_h = self.u1 @ self.sigma1 @ core @ self.q.conj().T
        h2_h = self.u2 @ self.sigma2 @ core @ self.q.conj().T
        return h1_h.conj().T, h2_h.conj().T


def _unitary_defect(m):
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[1])))


def gsvd_defects(g, h1, h2):
    """Invariant residuals of `g` against its inputs.

    Returns a dict with Frobenius unitarity defects of U1, U2, Q, W, the
    relative reconstruction residuals of both decompositions, the
    ``S1^2 + S2^2 - I`` defect, the strictly-lower part of R, and the
    smallest diagonal magnitude of R relative to the largest.
    """
    h1 = np.asarray(h1, dtype=complex)
    h2 = np.asarray(h2, dtype=complex)
    n_r = g.q.shape[0]
    k = g.dims.r0
    core = np.zeros((k, n_r), dtype=complex)
    core[:, :k] = g.a
    out = {f"unitary_{name}": _unitary_defect(getattr(g, name))
           for name in ("u1", "u2", "q", "w")}
    for label, h, u, sig in (("h1", h1, g.u1, g.sigma1), ("h2", h2, g.u2, g.sigma2)):
        lhs = u.conj().T @ h.conj().T @ g.q
        rhs = sig @ core
        scale = np.linalg.norm(h)
        resid = np.linalg.norm(lhs - rhs)
        out[f"reconstruction_{label}"] = float(resid / scale) if scale > 0 else float(resid)
    s1, s2 = g.s1, g.s2
    out["cs_identity"] = float(np.linalg.norm(s1 ** 2 + s2 ** 2 - 1.0)) if s1.size else 0.0
    r = g.r_factor
    out["r_lower"] = float(np.linalg.norm(np.tril(r, -1))) if r.size else 0.0
    diag = np.abs(np.diag(r))
    out["r_diag_ratio"] = float(diag.min() / diag.max()) if diag.size else 1.0
    return out


def _complement(basis, n):
    """Orthonormal basis of the orthogonal complement of `basis` in C^n."""
    q = basis.shape[1]
    if q == 0:
        return np.eye(n, dtype=complex)
    full, _ = np.linalg.qr(basis, mode="complete")
    return full[:, q:]


def _project_out(x, basis):
    if basis.shape[1] == 0 or x.shape[1] == 0:
        return x
    for _ in range(2):
        x = x - basis @ (basis.conj().T @ x)
    return x


def _orthonormal_columns(x):
    """QR-orthonormalize `x`, phases chosen so that ``x ~= q diag(|r_jj|)``."""
    if x.shape[1] == 0:
        return np.zeros((x.shape[0], 0), dtype=complex)
    q, r = np.linalg.qr(x)
    d = np.diag(r)
    ph = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)
    return q * ph[None, :]


def _cs_decomposition(p11, p21, n_one, n_mid):
    """Cosine-sine decomposition of the orthonormal pair ``[p11; p21]``.

    Returns ``(v1, v2, w, c, s)`` with ``p11 @ w[:, j] ~= c[j] * v1[:, j]``
    for the first ``n_one + n_mid`` columns and ``p21 @ w[:, j] ~= s[j] *
    v2[:, j - n_one]`` for the last ``k - n_one`` columns.  Columns are ordered
    by decreasing cosine; the leading ``n_one`` have c = 1 and the trailing
    ``k - n_one - n_mid`` have c = 0.
    """
    m, k = p11.shape
    p = p21.shape[0]
    if k == 0:
        empty = np.zeros((0,))
        return (np.zeros((m, 0), complex), np.zeros((p, 0), complex),
                np.zeros((0, 0), complex), empty, empty)

    if m > 0:
        ua, ca, wh = np.linalg.svd(p11)
        w = wh.conj().T
    else:
        ua, ca, w = np.zeros((0, 0), complex), np.zeros(0), np.eye(k, dtype=complex)
    c = np.zeros(k)
    c[: ca.size] = np.clip(ca, 0.0, 1.0)
    nb = int(np.count_nonzero(c > _SPLIT))

    # Well-resolved sines: cosine side from the SVD, sine side by normalization.
    w_lo = w[:, nb:]
    c_lo = c[nb:]
    s_lo = np.sqrt(np.clip(1.0 - c_lo ** 2, 0.0, 1.0))
    v2_lo = _orthonormal_columns(p21 @ w_lo) if p > 0 else np.zeros((0, k - nb), complex)
    n_v1_lo = min(ca.size, k) - nb
    v1_lo = ua[:, nb: nb + max(n_v1_lo, 0)]

    # Small sines: rotate W within the block so the sine side is diagonal,
    # then recover the (large) cosine side by normalization.
    w_hi = w[:, :nb]
    if nb > 0:
        a_hi = _project_out(p21 @ w_hi, v2_lo) if p > 0 else np.zeros((0, nb), complex)
        if p > 0:
            x, sig, yh = np.linalg.svd(a_hi)
        else:
            x, sig, yh = np.zeros((0, 0), complex), np.zeros(0), np.eye(nb, dtype=complex)
        s_hi = np.zeros(nb)
        s_hi[: sig.size] = sig
        order = np.argsort(s_hi, kind="stable")
        s_hi = np.clip(s_hi[order], 0.0, 1.0)
        w_hi = w_hi @ yh.conj().T[:, order]
        v2_hi = np.zeros((p, nb), dtype=complex)
        for j, src in enumerate(order):
            if src < sig.size:
                v2_hi[:, j] = x[:, src]
        c_hi = np.sqrt(np.clip(1.0 - s_hi ** 2, 0.0, 1.0))
        # the tiny-sine vectors carry the larger error; keep them and
        # re-orthogonalize the well-resolved side so U2 stays unitary
        if v2_lo.shape[1]:
            v2_lo = _orthonormal_columns(_project_out(v2_lo, v2_hi[:, n_one:]))
        v1_hi = _orthonormal_columns(_project_out(p11 @ w_hi, v1_lo)) if m > 0 else np.zeros((0, nb), complex)
    else:
        s_hi = c_hi = np.zeros(0)
        v2_hi = np.zeros((p, 0), complex)
        v1_hi = np.zeros((m, 0), complex)

    w = np.hstack([w_hi, w_lo])
    c = np.concatenate([c_hi, c_lo])
    s = np.concatenate([s_hi, s_lo])

    # Rank-guided snapping into the identity and zero blocks.
    r1 = n_one + n_mid
    c[:n_one], s[:n_one] = 1.0, 0.0
    c[r1:], s[r1:] = 0.0, 1.0
    mid = slice(n_one, r1)
    if n_mid and (np.any(c[mid] <= 0.0) or np.any(c[mid] >= 1.0)
                  or np.any(s[mid] <= 0.0)):
        raise ToleranceViolation("interior generalized singular value collapsed to a block boundary")

    # Decreasing cosine inside the interior block, ties by column position.
    perm = np.arange(k)
    perm[mid] = n_one + np.argsort(-c[mid], kind="stable")
    w, c, s = w[:, perm], c[perm], s[perm]

    v1_all = np.hstack([v1_hi, v1_lo]) if m > 0 else np.zeros((0, k), complex)
    if v1_all.shape[1] < k:
        v1_all = np.hstack([v1_all, np.zeros((m, k - v1_all.shape[1]), complex)])
    v2_all = np.hstack([v2_hi, v2_lo])
    v1 = v1_all[:, perm][:, :r1]
    v2 = v2_all[:, perm][:, n_one:]
    return v1, v2, w, c, s


def gsvd(h1, h2, tol=DEFAULT_TOL, check_tol=DEFAULT_CHECK_TOL):
    """Generalized SVD of the channel pair ``(h1, h2)``.

    Parameters
    ----------
    h1, h2 : array_like
        Complex channel matrices of shapes (N_R, N_T1) and (N_R, N_T2).
    tol : float
        Relative rank tolerance used for r0, r1 and r2.
    check_tol : float
        Threshold on every invariant residual (see :func:`gsvd_defects`)
        above which the result is rejected.

    Returns
    -------
    GsvdResult

    Raises
    ------
    DimensionMismatch
        If the two matrices have different row counts.
    ToleranceViolation
        If the numerical ranks are inconsistent or any invariant check of
        the computed factors fails.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    h1 = np.atleast_2d(np.asarray(h1, dtype=complex))
    h2 = np.atleast_2d(np.asarray(h2, dtype=complex))
    if h1.ndim != 2 or h2.ndim != 2:
        raise DimensionMismatch("channel matrices must be two-dimensional")
    if h1.shape[0] != h2.shape[0]:
        raise DimensionMismatch(
            f"receiver dimensions differ: h1 has {h1.shape[0]} rows, h2 has {h2.shape[0]}")
    n_r, m = h1.shape
    p = h2.shape[1]

    stacked = np.vstack([h1.conj().T, h2.conj().T])
    r1, r2, r0 = rank(h1, tol), rank(h2, tol), rank(stacked, tol)
    try:
        dims = DimProfile.from_ranks(r0, r1, r2)
    except ValueError as exc:
        raise ToleranceViolation(f"numerical ranks are inconsistent: {exc}") from exc

    # Complete orthogonal decomposition: stacked @ q = [p1 @ r, 0].
    if stacked.size and r0 > 0:
        _, _, vh = np.linalg.svd(stacked)
        q = vh.conj().T
        p1, r = np.linalg.qr(stacked @ q[:, :r0])
        d = np.diag(r)
        ph = d / np.abs(d)
        r = ph.conj()[:, None] * r
        p1 = p1 * ph[None, :]
    else:
        q = np.eye(n_r, dtype=complex)
        p1 = np.zeros((m + p, 0), dtype=complex)
        r = np.zeros((0, 0), dtype=complex)

    v1, v2, w, c, s = _cs_decomposition(p1[:m], p1[m:], dims.r1_tilde, dims.s)

    u1 = np.hstack([v1, _complement(v1, m)])
    u2 = np.hstack([_complement(v2, p), v2])
    sigma1 = np.zeros((m, r0), dtype=complex)
    idx1 = np.arange(r1)
    sigma1[idx1, idx1] = c[:r1]
    sigma2 = np.zeros((p, r0), dtype=complex)
    cols2 = np.arange(dims.r1_tilde, r0)
    sigma2[p - r2 + np.arange(r2), cols2] = s[dims.r1_tilde:]

    result = GsvdResult(u1=u1, u2=u2, q=q, w=w, r_factor=r,
                        sigma1=sigma1, sigma2=sigma2, dims=dims)
    _check(result, h1, h2, tol, check_tol)
    return result


def _check(g, h1, h2, tol, check_tol):
    defects = gsvd_defects(g, h1, h2)
    bad = {k: v for k, v in defects.items() if k != "r_diag_ratio" and v > check_tol}
    if defects["r_diag_ratio"] <= tol:
        bad["r_diag_ratio"] = defects["r_diag_ratio"]
    if bad:
        raise ToleranceViolation(f"GSVD invariant check failed: {bad}")
