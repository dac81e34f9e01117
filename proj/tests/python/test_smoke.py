import os
import pathlib

import pytest

camina = pytest.importorskip("camina")

DATA = pathlib.Path(os.environ.get("CAMINA_DATA_DIR", pathlib.Path(__file__).resolve().parents[1] / "data"))


def test_quaternion_is_center_pair():
    q = camina.build_family("quaternion:8")
    assert q.order == 8
    assert camina.center_order(q) == 2
    a = camina.analyze(q)
    assert a["verdict"] is True
    assert a["by_characters"] is True
    r = a["report"]
    assert (r["p"], r["n"], r["m"]) == (2, 2, 1)
    assert "FAIL" not in r["checks"].values()


def test_abelian_not_applicable():
    a = camina.analyze(camina.build_family("cyclic:5"))
    assert a["applicable"] is False
    assert a["verdict"] is None


def test_generators_and_table():
    s3 = camina.group_from_generators(3, [[2, 3, 1], [2, 1, 3]])
    assert s3.order == 6
    assert camina.center_order(s3) == 1
    assert sorted(camina.character_degrees(s3)) == [1, 1, 2]
    assert camina.is_camina_group(s3)
    c2 = camina.group_from_cayley_table([[0, 1], [1, 0]])
    assert c2.mul(1, 1) == 0


def test_errors_raise():
    with pytest.raises(camina.CaminaError):
        camina.build_family("heisenberg:4")
    with pytest.raises(camina.CaminaError):
        camina.group_from_cayley_table([[0, 1], [0, 1]])


def test_census_order_32():
    hits = camina.census([str(DATA / "order32.grp")], 32)
    assert hits == ["32:6", "32:7", "32:8", "32:43", "32:44"]


def test_cli():
    code, out, _ = camina.run_cli(["families", "--max-order", "8"])
    assert code == 0
    assert "quaternion:8" in out
    assert camina.run_cli(["analyze"])[0] == 1
