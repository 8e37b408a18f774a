import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mac_sdof import (RegionCase, build_cover, certify, certify_from_channels, certify_grid,
                      generic_ranks, outer_bound, sdof_region)
from mac_sdof.certifier import BoundStep
from mac_sdof.exceptions import InvalidDims, InvalidSizes
from mac_sdof.region import normalize_halfspace
from oracles import random_complex
from test_region import valid_configs


def test_cover_trace_f3_g7():
    cov = build_cover(3, 7)
    assert cov.f_sets[4] == (6, 7, 1)
    assert cov.h_sets[4] == {1}
    assert cov.v_sets[5] == set(range(2, 8))
    assert cov.counters[4] == 2 and cov.counters[5] == 3
    assert cov.verify()


def test_cover_square_case():
    for n in range(1, 9):
        cov = build_cover(n, n)
        assert all(set(f) == set(range(1, n + 1)) for f in cov.f_sets)
        # c_0 = 1 and Case II fires from the second step on
        assert cov.counters[1:] == tuple(range(1, n + 1))
        assert cov.counters[n] == n


def test_cover_invariants_exhaustive():
    for g in range(1, 17):
        for f in range(1, g + 1):
            cov = build_cover(f, g)
            assert cov.verify()
            for i in range(1, g + 1):
                jump = cov.counters[i] - cov.counters[i - 1]
                assert jump in (0, 1)
                assert (jump == 1) == (cov.cases[i - 1] == "II")
            # i|F| + |V_i| = c_i |G| at every stage
            for i in range(g + 1):
                assert i * f + len(cov.v_sets[i]) == cov.counters[i] * g


@given(st.integers(-3, 20), st.integers(-3, 20))
def test_cover_rejects_bad_sizes(f, g):
    if 1 <= f <= g:
        build_cover(f, g).verify()
    else:
        with pytest.raises(InvalidSizes):
            build_cover(f, g)


def test_bound_step_validation():
    with pytest.raises(ValueError):
        BoundStep("x", (1, 0), [("t", -1)])
    with pytest.raises(ValueError):
        BoundStep("x", (0, 0), [("t", 1)])
    assert BoundStep("x", (2, 1), [("a", 1), ("b", 3)]).halfspace == (2, 1, 4)


def test_outer_motivating_example():
    region, _ = outer_bound(3, 2, 2, 1)
    assert normalize_halfspace(1, 1, 1) in region.halfspaces


def test_outer_polymatroid_example():
    region, steps = outer_bound(3, 2, 2, 0)
    for h in [(1, 0, 2), (0, 1, 2), (1, 1, 3)]:
        assert normalize_halfspace(*h) in region.halfspaces
    assert any(s.label == "sum bound" and s.halfspace == (1, 1, 3) for s in steps)


def test_outer_case_b_after_unswap():
    region, steps = outer_bound(5, 4, 2, 2)
    # frame users swapped: |B| d2 + |F| d1 <= ..., with |F| = 0 the line is d2 <= 0
    assert normalize_halfspace(0, 1, 0) in region.halfspaces
    assert region == sdof_region(5, 4, 2, 2)
    region, _ = outer_bound(7, 4, 6, 2)
    assert normalize_halfspace(3, 2, 8) in region.halfspaces


def test_case_c_weighted_sum_identity():
    for cfg in valid_configs(8):
        cert = certify(*cfg)
        if cert.case is not RegionCase.C:
            continue
        r0, r1, r2, n_e = cfg
        f, g = min(r1, r2) - n_e, max(r1, r2) - n_e
        final = [s for s in cert.steps if s.label == f"recursive bound i={g}"]
        assert len(final) == 1
        cover_caps = [c for d, c in final[0].terms if d.startswith("I(M, X_") and "Y_F" in d]
        assert len(cover_caps) == g and sum(cover_caps) == f * g
        assert sum(c for _, c in final[0].terms) == f * g


def test_certify_examples():
    assert certify(3, 2, 2, 1).verdict
    cert = certify(3, 2, 2, 0)
    assert cert.verdict and cert.achievable == cert.outer == sdof_region(3, 2, 2, 0)


def test_certify_sweep_and_containment():
    results = certify_grid(6)
    assert len(results) == 7 ** 4
    keys = [k for k, _ in results]
    assert keys == sorted(keys)
    for _, cert in results:
        assert cert.achievable.issubset(cert.outer)
        assert cert.verdict
        assert all(c >= 0 for s in cert.steps for _, c in s.terms)


def test_unswap_consistency():
    for r0, r1, r2, n_e in valid_configs(8):
        a, b = certify(r0, r1, r2, n_e), certify(r0, r2, r1, n_e)
        assert a.outer == b.outer.reflect()
        assert a.swap_applied == (r1 > r2)


def test_eavesdropper_sets():
    for r0, r1, r2, n_e in valid_configs(8):
        cert = certify(r0, r1, r2, n_e)
        sets = cert.eavesdropper_sets
        if cert.case is RegionCase.DEGENERATE:
            assert sets == {}
            continue
        assert len(sets["E1"]) == len(sets["E2"]) == n_e
        a, b = r0 - r2, r1 + r2 - r0
        link_a = set(range(1, a + 1))
        link_c = set(range(a + b + 1, r0 + 1))
        if cert.case is RegionCase.A:
            assert set(sets["E1"]) <= link_a and set(sets["E2"]) <= link_c
        elif cert.case is RegionCase.C:
            assert link_a <= set(sets["E1"]) and link_c <= set(sets["E2"])
        for key in ("E1_per_step", "E2_per_step"):
            for e in sets.get(key, []):
                assert len(e) == n_e


def test_steps_relabel_after_swap():
    cert = certify(6, 5, 4, 3)
    assert cert.swap_applied
    texts = " ".join(d for s in cert.steps for d, _ in s.terms)
    assert "{u}" not in texts and "{A}" not in texts


def test_invalid_dims():
    with pytest.raises(InvalidDims):
        certify(5, 1, 1, 0)


def test_from_channels_block_example():
    h1 = np.array([[1, 0], [0, 1], [0, 0]])
    h2 = np.array([[0, 0], [1, 0], [0, 1]])
    cert = certify_from_channels(h1, h2, 1)
    assert cert.verdict
    assert normalize_halfspace(1, 1, 1) in cert.outer.halfspaces


def test_from_channels_single_user():
    h1 = np.eye(3)[:, :2]
    cert = certify_from_channels(h1, np.zeros((3, 2)), 1)
    assert cert.verdict
    assert {(v.d1, v.d2) for v in cert.outer.vertices} == {(0, 0), (1, 0)}


def test_from_channels_random_full_rank():
    rng = np.random.default_rng(17)
    h1, h2 = random_complex(rng, 3, 3), random_complex(rng, 3, 3)
    cert = certify_from_channels(h1, h2, 1)
    assert cert.verdict and cert.config == (3, 3, 3, 1)
    assert cert.outer == certify(3, 3, 3, 1).outer


def test_generic_ranks():
    assert generic_ranks(2, 2, 3) == (3, 2, 2)
    assert generic_ranks(0, 5, 2) == (2, 0, 2)
