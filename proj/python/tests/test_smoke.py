import pytest

import usm


def test_catalog():
    assert "klein4" in usm.catalog_names()
    assert usm.group_order("dihedral:4") == 8
    assert usm.group_order("smallgroup:64:182") == 64


@pytest.mark.parametrize("name,dim", [("cyclic:2", 1), ("cyclic:5", 0), ("klein4", 3), ("symmetric:4", 2),
                                      ("quaternion:8", 2), ("dihedral:3", 1)])
def test_h2(name, dim):
    assert usm.h2_dim(name) == dim
    assert set(usm.hopf_dims(name)) == {dim}


def test_bogomolov():
    r = usm.bogomolov("dihedral:4")
    assert r["dim_h2"] == 3
    assert r["dim_b0"] == 0
    assert r["routes_agree"] is True


def test_extendable():
    assert usm.extendable("klein4", "orientable g=1 pairs=(a,b)")["verdict"] == "Extendable"
    assert usm.extendable("cyclic:3", "nonorientable k=1 z=(1)")["verdict"] == "TrivialRP2Component"


def test_errors():
    with pytest.raises(usm.UsageError):
        usm.h2_dim("nonsense:1")
    with pytest.raises(usm.ResourceError):
        usm.hopf_dims("cyclic:5000", 100)


def test_cli():
    code, out = usm.cli("schur", "--group", "symmetric:3")
    assert code == 0 and out["dim_h2"] == 1
    code, err = usm.cli("schur")
    assert code == 2 and "usm:" in err
