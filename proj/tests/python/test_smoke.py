"""End-to-end smoke tests for the python module: every layer is touched
once with a value checked against a closed form."""

import math

import numpy as np
import pytest

import schattenlab as sl


def diag(*entries):
    return np.diag(np.asarray(entries, dtype=complex))


def test_norms_match_closed_forms():
    a = diag(3, 4)
    assert sl.schatten_norm(a, 1) == pytest.approx(7.0)
    assert sl.schatten_norm(a, 2) == pytest.approx(5.0)
    assert sl.schatten_norm(a, math.inf) == pytest.approx(4.0)
    sv = sl.singular_values(a)
    assert list(sv) == pytest.approx([4.0, 3.0])


def test_trace_and_parts():
    a = diag(2, -1)
    assert sl.trace(a) == pytest.approx(1.0)
    pos, neg = sl.positive_negative_parts(a)
    assert pos[0, 0] == pytest.approx(2.0)
    assert neg[1, 1] == pytest.approx(1.0)
    assert np.linalg.norm(pos @ neg) == pytest.approx(0.0, abs=1e-12)


def test_haar_unitary_is_unitary_and_deterministic():
    u = sl.haar_unitary(4, 7)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)
    assert np.array_equal(u, sl.haar_unitary(4, 7))


def test_von_neumann_scenario():
    r = sl.run_von_neumann(diag(2, 1), diag(3, 1))
    assert r.claimed == pytest.approx(7.0)
    assert r.pass_
    d = r.to_dict()
    assert d["scenario"] == "von-neumann-max"
    assert "wall_time_s" not in d
    assert d["digest"]["seed"] == 42


def test_hermitian_extremes():
    ext = sl.hermitian_orbit_extremes(diag(2, -1), diag(3, -5))
    assert ext.max == pytest.approx(11.0)
    assert ext.min == pytest.approx(-13.0)
    r = sl.run_hermitian_bounds(diag(2, -1), diag(3, -5))
    assert r.pass_ and r.abs_gap < 1e-6


def test_orbit_optimizer_attains_radius():
    c, t = diag(2, 1), diag(3, 1)
    assert sl.s_range_radius(c, t) == pytest.approx(7.0)
    best = sl.alternating_bilinear_max(c, t)
    assert best.objective == pytest.approx(7.0, rel=1e-8)
    u, v = best.witnesses
    assert abs(sl.orbit_value(c, t, u, v)) == pytest.approx(7.0, rel=1e-8)


def test_c_spectrum_pairings():
    sample = sl.c_spectrum([1, 0], [5, 1])
    assert sample.exhaustive
    assert sorted(z.real for z in sample.points) == pytest.approx([1.0, 5.0])


def test_modified_sequence_padding():
    assert sl.modified_sequence([3], "finite_kernel:1", 3) == [0, 3, 0]
    assert sl.modified_sequence([2j, 1], "interleave", 4) == [0, 2j, 0, 1]


def test_compact_sets_and_hausdorff():
    assert sl.hausdorff_distance(
        sl.CompactSet.disc(1.0), sl.CompactSet.disc(2.0)
    ) == pytest.approx(1.0)
    a = sl.CompactSet.cloud([0j])
    b = sl.CompactSet.cloud([3 + 0j])
    assert sl.hausdorff_distance(a, b) == pytest.approx(3.0)
    assert sl.epsilon_cover_check(a, b, 3.0)
    assert not sl.epsilon_cover_check(a, b, 2.9)
    square = sl.CompactSet.polygon([0j, 1 + 0j, 1 + 1j, 1j])
    assert square.kind == "polygon"
    assert square.contains(0.5 + 0.5j)


def test_truncation_sweep_hits_the_analytic_tail():
    params = sl.ScenarioParams()
    params.threshold = 1e-4  # final delta of the short sweep is (1/3)*4^-7
    r = sl.run_truncation_convergence(
        "geometric-shift", list(range(4, 9)), params
    )
    assert r.pass_
    table = r.to_dict()["extra"]["delta_table"]
    for n, _radius, delta in table:
        assert delta == pytest.approx((1 / 3) * 4.0 ** -(n - 1), abs=1e-12)
    assert sl.builtin_limit_radius("geometric-shift") == pytest.approx(1 / 3)


def test_range_sampler_and_radius_law():
    c, t = sl.builtin_example("geometric-shift", 4)
    r = sl.s_range_radius(c, t)
    cloud = sl.sample_equivalence_range(c, t, 200, 5)
    assert max(abs(z) for z in cloud.points) <= r + 1e-9


def test_errors_are_python_exceptions():
    with pytest.raises(sl.SchattenError):
        sl.hermitian_orbit_extremes(diag(1j, 0), diag(1, 0))
    with pytest.raises(ValueError):
        sl.modified_sequence([1], "octarine", 3)
