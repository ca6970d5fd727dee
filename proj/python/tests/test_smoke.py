import math

import numpy as np
import pytest

import qws


def test_k2_transfer_matrix():
    h = qws.transition(qws.parse("complete:2"), math.pi / 2)
    assert np.allclose(h, [[0, 1j], [1j, 0]], atol=1e-12)


def test_spectral_and_oracle_agree():
    g = qws.parse("petersen")
    assert np.abs(qws.transition(g, 0.7) - qws.transition_oracle(g, 0.7)).max() < 1e-10


def test_graph_from_numpy():
    w = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    g = qws.Graph(w, "p3")
    cert = qws.find_pst(g, 0)
    assert cert["verdict"] == "pst"
    assert cert["v"] == 2
    assert cert["tau"] == pytest.approx(math.pi / math.sqrt(2), abs=1e-9)


def test_path4_refuted():
    report = qws.analyze("path:4")
    assert report["schema"] == 1
    assert report["pst_all"]["certificates"] == []
    assert len(report["pst_all"]["refutations"]) == 4


def test_cube_pair_check():
    verdict = qws.find_pst("cube:3", 0, 7)
    assert verdict["verdict"] == "pst"
    assert verdict["gamma"]["im"] == pytest.approx(-1.0, abs=1e-9)


def test_average_mixing_k2():
    assert np.allclose(qws.average_mixing(qws.parse("complete:2")), 0.5)


def test_census_odd_circulants_have_no_pst():
    rows = qws.census("circulant", 7)
    assert rows[-1]["summary"]["pst"] == 0
    assert all(r["verdict"] == "none" for r in rows[:-1])


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        qws.parse("path:")


def test_single_acceptance_check():
    assert qws.check(2)["passed"]
