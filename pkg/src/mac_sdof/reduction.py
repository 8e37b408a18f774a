"""Reduction of a MIMO-MAC instance to parallel links.

After the GSVD, the receiver sees ``r0`` independent links split into a
user-1-only set A, a shared set B and a user-2-only set C with

    |A| = r0 - r2,   |B| = r1 + r2 - r0,   |C| = r0 - r1.

Enhancement (noise scaled down by ``sigma_plus``) yields the converse model
and degradation (noise scaled up by ``sigma / s_bar``) the achievability
model; both only change a constant noise factor.
"""
from dataclasses import dataclass

import numpy as np

from .exceptions import SingularMatrix

SAFETY = 1e-12


@dataclass(frozen=True)
class ParallelModel:
    a_size: int
    b_size: int
    c_size: int
    n_e: int = 0
    enhancement_scale: float = 1.0
    degradation_scale: float = 1.0
    s_bar: float = 1.0

    def __post_init__(self):
        for name in ("a_size", "b_size", "c_size", "n_e"):
            v = getattr(self, name)
            if int(v) != v or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if not 0.0 < self.enhancement_scale <= 1.0 <= self.degradation_scale:
            raise ValueError(
                "need 0 < enhancement_scale <= 1 <= degradation_scale, got "
                f"{self.enhancement_scale!r}, {self.degradation_scale!r}")
        if not 0.0 < self.s_bar <= 1.0:
            raise ValueError(f"s_bar must lie in (0, 1], got {self.s_bar!r}")

    @property
    def r0(self):
        return self.a_size + self.b_size + self.c_size

    @property
    def r1(self):
        return self.a_size + self.b_size

    @property
    def r2(self):
        return self.b_size + self.c_size

    @property
    def noise_power(self):
        """Per-link noise variance of the degraded (achievability) model."""
        return (self.degradation_scale / self.s_bar) ** 2

    @classmethod
    def from_ranks(cls, r0, r1, r2, n_e=0, **scales):
        return cls(r0 - r2, r1 + r2 - r0, r0 - r1, n_e, **scales)

    def to_json(self):
        return {
            "a": self.a_size, "b": self.b_size, "c": self.c_size, "n_e": self.n_e,
            "sigma_plus": float(self.enhancement_scale),
            "sigma": float(self.degradation_scale),
            "s_bar": float(self.s_bar),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            a_size=int(obj["a"]), b_size=int(obj["b"]), c_size=int(obj["c"]),
            n_e=int(obj.get("n_e", 0)),
            enhancement_scale=float(obj.get("sigma_plus", 1.0)),
            degradation_scale=float(obj.get("sigma", 1.0)),
            s_bar=float(obj.get("s_bar", 1.0)),
        )


def _square_singular_values(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def enhancement_sigma(a):
    """Largest noise scale with ``I - sigma_plus^2 A^H A`` positive semidefinite.

    Capped at 1 and shrunk by a relative margin of 1e-12.
    """
    sv = _square_singular_values(a)
    if sv.size == 0 or sv[0] == 0.0:
        raise SingularMatrix("enhancement needs a nonzero matrix")
    return float(min(1.0, 1.0 / sv[0]) * (1.0 - SAFETY))


def degradation_sigma(a, tol=SAFETY):
    """Smallest noise scale with ``sigma^2 A^H A - I`` positive semidefinite.

    Floored at 1 and grown by a relative margin of 1e-12.  Raises
    :class:`SingularMatrix` when ``sigma_min(A) <= tol * sigma_max(A)``.
    """
    sv = _square_singular_values(a)
    if sv.size == 0 or sv[0] == 0.0 or sv[-1] <= tol * sv[0]:
        raise SingularMatrix("degradation needs a nonsingular matrix")
    return float(max(1.0, 1.0 / sv[-1]) * (1.0 + SAFETY))


def to_parallel(g, n_e):
    """Parallel-link model of a :class:`~mac_sdof.gsvd.GsvdResult`.

    When ``r0 == 0`` there is no A matrix and both noise scales are 1.
    """
    d = g.dims
    if d.r0 > 0:
        a = g.a
        sigma_plus, sigma = float(enhancement_sigma(a)), float(degradation_sigma(a))
    else:
        sigma_plus = sigma = 1.0
    diag = np.concatenate([g.s1, g.s2])
    s_bar = float(diag.min()) if diag.size else 1.0
    return ParallelModel(
        a_size=d.r0 - d.r2, b_size=d.s, c_size=d.r0 - d.r1, n_e=int(n_e),
        enhancement_scale=sigma_plus, degradation_scale=sigma, s_bar=s_bar)
