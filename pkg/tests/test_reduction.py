import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mac_sdof import (ParallelModel, degradation_sigma, enhancement_sigma, gsvd, rank,
                      to_parallel)
from mac_sdof.exceptions import SingularMatrix
from oracles import gauss_rank, min_eig, random_complex


def test_enhancement_examples():
    assert enhancement_sigma(np.eye(2)) == pytest.approx(1.0, abs=1e-11)
    assert enhancement_sigma(np.diag([2.0, 1.0])) == pytest.approx(0.5, abs=1e-11)
    assert enhancement_sigma(np.eye(2)) < 1.0


def test_degradation_examples():
    assert degradation_sigma(np.eye(2)) == pytest.approx(1.0, abs=1e-11)
    assert degradation_sigma(np.diag([0.5, 1.0])) == pytest.approx(2.0, abs=1e-11)
    assert degradation_sigma(np.eye(2)) > 1.0


def test_psd_random_3x3():
    rng = np.random.default_rng(1)
    a = random_complex(rng, 3, 3)
    sp, sg = enhancement_sigma(a), degradation_sigma(a)
    g = a.conj().T @ a
    assert min_eig(np.eye(3) - sp ** 2 * g) >= -1e-12
    assert min_eig(sg ** 2 * g - np.eye(3)) >= -1e-12 * sg ** 2 * np.linalg.norm(g, 2)


def test_singular_inputs():
    with pytest.raises(SingularMatrix):
        enhancement_sigma(np.zeros((2, 2)))
    with pytest.raises(SingularMatrix):
        degradation_sigma(np.diag([1.0, 0.0]))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1),
       st.floats(0.05, 20.0, allow_nan=False))
def test_scale_ratio_and_scaling(n, seed, t):
    rng = np.random.default_rng(seed)
    a = random_complex(rng, n, n)
    sv = np.linalg.svd(a, compute_uv=False)
    sp, sg = enhancement_sigma(a), degradation_sigma(a)
    # sigma / sigma_plus >= 1, and equals the condition number on the uncapped branch
    assert sg / sp >= 1.0
    assert sg / sp >= sv[0] / sv[-1] * (1 - 1e-9)
    if sv[-1] <= 1.0 <= sv[0]:
        assert sg / sp == pytest.approx(sv[0] / sv[-1], rel=1e-9)
    b = a * t
    sb = np.linalg.svd(b, compute_uv=False)
    if sv[0] >= 1.0 and sb[0] >= 1.0:
        assert enhancement_sigma(b) == pytest.approx(sp / t, rel=1e-9)
    if sv[-1] <= 1.0 and sb[-1] <= 1.0:
        assert degradation_sigma(b) == pytest.approx(sg / t, rel=1e-9)


def test_equal_singular_values_give_unit_ratio():
    rng = np.random.default_rng(4)
    q, _ = np.linalg.qr(random_complex(rng, 3, 3))
    a = 0.5 * q
    assert degradation_sigma(a) / enhancement_sigma(a) == pytest.approx(2.0, rel=1e-9)
    # on the uncapped branch the ratio is sigma_max / sigma_min = 1
    b = 1.0 * q
    assert degradation_sigma(b) / enhancement_sigma(b) == pytest.approx(1.0, abs=1e-10)


def test_to_parallel_block_example():
    h1 = np.array([[1, 0], [0, 1], [0, 0]])
    h2 = np.array([[0, 0], [1, 0], [0, 1]])
    m = to_parallel(gsvd(h1, h2), 1)
    assert (m.a_size, m.b_size, m.c_size, m.n_e) == (1, 1, 1, 1)
    assert m.s_bar == pytest.approx(np.sqrt(0.5))
    assert 0 < m.enhancement_scale <= 1 <= m.degradation_scale


def test_single_user_degeneration():
    for n in range(1, 5):
        m = to_parallel(gsvd(np.eye(n), np.zeros((n, 2))), 0)
        assert (m.a_size, m.b_size, m.c_size) == (n, 0, 0)
        assert m.s_bar == 1.0


def test_sizes_against_rank_oracle():
    rng = np.random.default_rng(9)
    for _ in range(30):
        n_r = 4
        k1, k2 = rng.integers(0, 5, size=2)
        h1 = random_complex(rng, n_r, k1) @ random_complex(rng, k1, 3)
        h2 = random_complex(rng, n_r, k2) @ random_complex(rng, k2, 4)
        m = to_parallel(gsvd(h1, h2), 1)
        r1, r2 = gauss_rank(h1), gauss_rank(h2)
        r0 = gauss_rank(np.hstack([h1, h2]))
        assert (m.a_size, m.b_size, m.c_size) == (r0 - r2, r1 + r2 - r0, r0 - r1)
        assert m.r0 == r0 == rank(np.hstack([h1, h2]))
        assert min(m.a_size, m.b_size, m.c_size) >= 0


def test_zero_rank_model():
    m = to_parallel(gsvd(np.zeros((2, 2)), np.zeros((2, 2))), 0)
    assert m.r0 == 0 and m.enhancement_scale == m.degradation_scale == 1.0


def test_model_json_round_trip_and_validation():
    m = ParallelModel(2, 1, 0, 1, 0.5, 2.0, 0.25)
    assert ParallelModel.from_json(m.to_json()) == m
    assert m.noise_power == pytest.approx(64.0)
    for bad in (dict(enhancement_scale=1.5), dict(degradation_scale=0.5),
                dict(s_bar=0.0), dict(a_size=-1)):
        kw = dict(a_size=1, b_size=1, c_size=1) | bad
        with pytest.raises(ValueError):
            ParallelModel(**kw)
