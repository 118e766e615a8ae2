"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import ncball


def cyclic_generator():
    return ncball.MoebiusMap(np.array([[1.0, -0.5], [-0.5, 1.0]], dtype=complex))


def test_pseudo_distance_disk_value():
    assert ncball.pseudo_distance([0.5], [-0.5]) == pytest.approx(0.8, abs=1e-12)
    assert ncball.pseudo_distance([0.3 + 0.1j, 0.2], [0.3 + 0.1j, 0.2]) < 1e-14


def test_involution_swaps_center_and_origin():
    m = ncball.involution_at([0.5, 0.0])
    assert m.apply([0.0, 0.0]) == pytest.approx([0.5, 0.0], abs=1e-12)
    assert np.linalg.norm(m.apply([0.5, 0.0])) < 1e-12


def test_extremal_distance_matches_closed_form():
    value, witness = ncball.extremal_distance([0.0, 0.5], [0.5, 0.0])
    assert value == pytest.approx(math.sqrt(7.0) / 4.0, abs=1e-12)
    assert abs(witness([0.5, 0.0])) < 1e-12


def test_ball_function_round_trip():
    _, witness = ncball.extremal_distance([0.2, 0.1j], [0.0, 0.3])
    clone = ncball.BallFunction.from_json(witness.to_json())
    probe = [0.1 + 0.2j, -0.25]
    assert clone(probe) == pytest.approx(witness(probe), abs=1e-14)


def test_invalid_point_rejected():
    with pytest.raises(Exception):
        ncball.pseudo_distance([1.0], [0.0])


def test_fock_norm_of_linear_polynomial():
    assert ncball.op_norm(2, 4, [([1], 0.6), ([2], 0.8)]) == pytest.approx(
        1.0, abs=1e-12
    )
    assert ncball.coeff_l2(2, [([1], 0.6), ([2], 0.8)]) == pytest.approx(1.0)


def test_creation_matrix_shape_and_row_norm():
    s1 = ncball.creation_matrix(1, 2, 3)
    assert s1.shape == (15, 15)
    assert ncball.row_norm([np.array([[0.6]]), np.array([[0.8]])]) == pytest.approx(1.0)


def test_eval_and_popescu_consistency():
    terms = [([], 1.0), ([1], 2.0)]
    assert ncball.eval_scalar(2, terms, [0.5, 0.0]) == pytest.approx(2.0)
    scalar_tuple = [np.array([[0.5]]), np.array([[0.0]])]
    assert ncball.popescu_apply(2, terms, scalar_tuple)[0, 0] == pytest.approx(2.0)


def test_orbit_and_blaschke():
    en = ncball.enumerate_elements(1, [cyclic_generator()], 3)
    assert len(en.elements) == 7
    orbit = ncball.orbit_of_origin(en)
    radii = sorted(abs(p[0]) for p in orbit.points)
    assert radii[0] == 0.0
    assert radii[-1] == pytest.approx(13.0 / 14.0, abs=1e-12)
    report = ncball.blaschke_report(en)
    assert report["verdict"] == "convergent"
    assert report["shells"][1]["term_sum"] == pytest.approx(1.0, abs=1e-12)


def test_membership_and_witness():
    en = ncball.enumerate_elements(1, [cyclic_generator()], 3)
    orbit = ncball.orbit_of_origin(en)
    delta = [p for p in orbit.points if abs(p[0]) > 0]
    verdict = ncball.spectral_membership(delta, [0.5j])
    assert verdict.status == "Out"
    assert verdict.witness_value > 1e-6

    inside = ncball.spectral_membership(delta, delta[0])
    assert inside.status == "In"

    witness = ncball.vanishing_witness([[-0.5], [-0.8], [-13.0 / 14.0]], [0.0])
    assert witness.value_at_probe == pytest.approx(13.0 / 35.0, abs=1e-12)


def test_stabilizer_and_ergodicity():
    en = ncball.enumerate_elements(1, [cyclic_generator()], 6)
    orbit = ncball.orbit_of_origin(en)
    core = ncball.default_core_radius(orbit)
    flip = ncball.MoebiusMap.from_unitary(np.array([[-1.0]], dtype=complex))
    assert ncball.stabilizer_check(flip, orbit, core, 1e-9) == "pass"

    report = ncball.ergodicity_certificate(en, 1, [([1], 1.0)], 1e-10)
    assert report.invariance_defect >= 0.49
    constant = ncball.ergodicity_certificate(en, 1, [([], 1.0)], 1e-10)
    assert constant.constancy_defect == 0.0


def test_reduce_dimension():
    unitary, rank = ncball.reduce_dimension([[0.1, 0.0], [0.5, 0.0]])
    assert rank == 1
    assert np.allclose(unitary, np.eye(2))
