import json
import math

import pytest

import simapprox as sa


def test_geometry():
    assert sa.min_pair_gap([0.0, 0.5]) == pytest.approx(2.0)
    assert sa.min_pair_gap([0.0, 0.25]) == pytest.approx(math.sqrt(2))
    assert sa.separation_threshold(1.0, 0.5) == pytest.approx(4.0)
    assert sa.discs_pairwise_disjoint([(0j, 3.0), (7 + 0j, 3.0), (7j, 3.0)])
    assert not sa.discs_pairwise_disjoint([(0j, 3.0), (6 + 0j, 3.0)])


def test_two_disc_interpolation():
    pieces = [(0j, 1.0, []), (10 + 0j, 1.0, [1])]
    q = sa.hermite_crt(pieces, [1, 1])
    assert abs(q[0]) < 1e-12
    assert q[1] == pytest.approx(0.1)
    assert sa.certified_error(q, pieces) == pytest.approx([0.1, 0.1])
    q, bounds = sa.approximate(pieces, 0.01)
    assert max(bounds) < 0.01


def test_poly_helpers():
    assert sa.shift_argument([0, 0, 1], 1) == pytest.approx([1, 2, 1])
    assert sa.sup_bound_on_disc([1, 0, 1], 0j, 2.0) == pytest.approx(5.0)
    assert sa.density_probe([0, 1], 0.0, [5, 1], 1, 10) == (5, pytest.approx(0.0))


def test_errors_surface():
    with pytest.raises(sa.SimapproxError, match="domain"):
        sa.min_pair_gap([0.3])
    with pytest.raises(sa.SimapproxError, match="config"):
        sa.Series.build('{"directions": [0, 0]}')


def test_build_verify_round_trip():
    config = {
        "directions": ["0", "1/2"],
        "magnitudes": {"kind": "naturals"},
        "targets": [[1], [0, 1]],
        "schedule": [[1, 4, 1, 2]],
        "grid": 51,
        "construction": {"reserve_slots": 0, "clearance": 1.0},
    }
    series = sa.Series.build(json.dumps(config))
    [cert] = series.certificates
    assert cert["witness_s"] == 3
    assert cert["created_bound"] < 1 / 8
    [check] = series.verify()
    assert check["pass"] and check["measured"] < 0.25
    assert abs(series(3 + 0j) - 1) < 0.25

    text = series.to_archive()
    again = sa.Series.from_archive(text)
    assert again.to_archive() == text
    assert again.verify(101)[0]["measured"] == series.verify(101)[0]["measured"]
    with pytest.raises(sa.SimapproxError, match="missing-window"):
        series.extract([0, 1], 2)
