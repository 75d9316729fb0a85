from fractions import Fraction
from pathlib import Path

import pytest

import veechfib as v

DATA = Path(__file__).resolve().parents[2] / "data" / "curve_data.csv"


def test_double_pentagon_both_routes():
    for r in (v.weierstrass(5, 3), v.polygon(5, 3)):
        inv = r["invariants"]
        assert r["cover"]["degree"] == "60"
        assert (inv["euler"], inv["signature"], inv["c1_squared"], inv["p_g"]) == ("116", "-72", "16", "10")


def test_sporadic_ratio_is_level_independent():
    ratios = set()
    for p, exceptional in v.admissible_primes("E7", 20):
        r = v.sporadic("E7", p)
        ratios.add(v.exact(r["invariants"]["signature"]) / v.exact(r["cover"]["degree"]))
    assert ratios == {Fraction(-35, 9)}


def test_elliptic_k3():
    inv = v.elliptic(4)["invariants"]
    assert (inv["euler"], inv["signature"], inv["kodaira_tag"]) == ("24", "-16", "elliptic-surface/k3")


def test_noether_and_hirzebruch():
    inv = v.polygon(7, 3)["invariants"]
    e, s, c1 = (v.exact(inv[k]) for k in ("euler", "signature", "c1_squared"))
    assert 12 * v.exact(inv["chi_O"]) == c1 + e
    assert 3 * s == c1 - 2 * e


def test_prototypes_and_zeta():
    assert len(v.prototypes(5)) == 1
    assert len(v.prototypes(8)) == 2
    assert v.zeta_curve_euler_characteristic(5) == Fraction(-3, 10)


def test_group_order():
    assert v.group_order(3, "x^2-x-1", "x+1") == 120
    assert v.group_order(5, "x^2-x+2") == 15600


def test_tv_build_checks():
    j = v.tv_build("E8")
    assert j["genus"] == 4
    assert all(j["structural_checks"][k] for k in ("staircase_parity", "holonomy_basis", "cylinder_bound", "homology_span"))


def test_curve_data_file_matches_plugin():
    a = v.weierstrass(12, 5, data=str(DATA))
    b = v.weierstrass(12, 5, zeta=True)
    assert a["invariants"] == b["invariants"]


def test_errors_carry_a_kind():
    with pytest.raises(v.VeechfibError) as info:
        v.polygon(5, 5)
    assert v.error_kind(info.value) == "inadmissible-prime"
    with pytest.raises(v.VeechfibError) as info:
        v.weierstrass(13, 5)
    assert v.error_kind(info.value) == "missing-external-data"
    with pytest.raises(v.VeechfibError) as info:
        v.weierstrass(8, 3)
    assert v.error_kind(info.value) == "inconsistent-cover-data"
    assert v.weierstrass(8, 3, closure=True)["cover"]["degree"] == "360"
