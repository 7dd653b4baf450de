import math

import pytest

import hypiso


def test_regular_convert_round_trip():
    m = hypiso.regular_convert(6, "circumradius", 1.0)
    back = hypiso.regular_convert(6, "side_length", m["side"])
    assert back["circumradius"] == pytest.approx(1.0, rel=1e-12)


def test_bound_anchor():
    r = hypiso.evaluate_bound("1.1", 4, math.asinh(0.5))
    assert r["value"] == pytest.approx(4 * math.log(3), rel=1e-14)
    assert r["feasible"] is True


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        hypiso.evaluate_bound("1.9", 4, 0.0, k=2)
    with pytest.raises(hypiso.HypisoError):
        hypiso.regular_convert(2, "circumradius", 1.0)


def test_polygon_metrics():
    poly = {"kind": "cyclic", "n": 4, "radius": 1.0, "thetas": [math.pi / 2] * 4}
    m = hypiso.polygon_metrics(poly)
    assert m["measured_perimeter"] == pytest.approx(m["perimeter"], rel=1e-12)
    assert m["measured_area"] == pytest.approx(m["area"], rel=1e-10)


def test_verify_and_optimize():
    rep = hypiso.verify("1.2", trials=100, n=6)
    assert rep["violations"] == 0
    opt = hypiso.optimize("half_side", k=2)
    assert opt["oracle_agreement"] is True


def test_cli():
    code, out, _ = hypiso.run_cli("bounds", "--thm", "1.2", "--range", "0.5:1:2", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 3
