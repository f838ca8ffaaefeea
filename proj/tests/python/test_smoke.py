import subprocess
import sys

import pytest

import superhowe as sh


def test_dimensions():
    assert sh.dim_of_degree(1, 3) == 38
    assert sh.harmonic_dim(1, 3) == 26
    assert sh.dim_of_degree(2, 0) == 1


def test_poly_arithmetic_and_parsing():
    x1 = sh.SuperPoly("x1", 1)
    e1 = sh.SuperPoly("e1", 1)
    assert str((x1 + e1) * (x1 - e1)) == "x1^2"
    assert (e1 * e1).is_zero()
    p = sh.SuperPoly("-3/2 * x1^2 x3 e1 e2", 1)
    assert str(p) == "-3/2 * x1^2 x3 e1 e2"
    assert p.degree() == 5


def test_families_and_weights():
    v = sh.p_vector(0, 3, 1)
    assert sh.is_joint_harmonic_hwv(v, 1)
    w = sh.joint_weights(v, 1)
    assert w["spo"] == ["0"]
    assert w["osp22"] == ["3/2", "3/2"]
    assert sh.omega(2, 1, 1) == sh.omega(3, 0, 1)


def test_decompose_reports():
    doc = sh.decompose(1, 3)
    assert doc["schema"] == 1
    rows = doc["reports"][3]["entries"]
    assert [r["spo_weight"] for r in rows] == [["3"], ["2"], ["0"]]
    assert rows[2]["partner_weight"] == ["3/2", "3/2"]
    audit = doc["reports"][3]["dim_audit"]
    assert audit["dim_sd"] == audit["dim_harmonic"] + audit["dim_lowered"]


def test_verify_suite():
    ok, ledger = sh.verify("A1", n=1, dmax=2)
    assert ok
    assert all(passed for _, passed in ledger)
    with pytest.raises(ValueError):
        sh.verify("bogus")


def test_cli_entry_point():
    assert sh.run_cli(["verify", "--list"]) == 0
    assert sh.run_cli(["decompose", "--n", "0", "--dmax", "1"]) == 64
