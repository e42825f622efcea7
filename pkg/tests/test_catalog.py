import json

import pytest

from innergalois import catalog

FAST = [n for n in catalog.names() if n != "va-gk2"]


def test_registry_names():
    assert catalog.names() == sorted(
        [
            "cyclic-via",
            "elliptic-iva",
            "elliptic-ivc",
            "elliptic-ive",
            "hermitian-q2",
            "hermitian-q3",
            "quartic-iiic",
            "quartic-vb",
            "rational-agl-4",
            "ree-q3",
            "roquette-q5",
            "suzuki-q8",
            "va-gk2",
        ]
    )


def test_unknown_entry():
    with pytest.raises(catalog.UnknownEntry):
        catalog.entry("no-such-curve")


@pytest.mark.parametrize("name", catalog.names())
def test_entry_metadata_is_json(name):
    e = catalog.entry(name)
    data = e.to_json()
    assert json.loads(json.dumps(data)) == data
    assert all(x["source"] in ("reference", "oracle", "formula") for x in data["expected"].values())


@pytest.mark.parametrize("name", FAST)
def test_entry_verifies(name):
    rep = catalog.verify(catalog.entry(name))
    failed = [c for c in rep["checks"] if not c["pass"]]
    assert rep["passed"], failed


def test_verify_reports_mismatch():
    e = catalog.entry("hermitian-q2")
    e.expected["point_count"] = catalog.Expectation(10, "oracle")
    rep = catalog.verify(e)
    assert not rep["passed"]
    bad = [c for c in rep["checks"] if not c["pass"]]
    assert [c["field"] for c in bad] == ["point_count"] and bad[0]["measured"] == 9


def test_unmeasured_expectation_fails():
    e = catalog.entry("roquette-q5")
    e.expected["nonsense"] = catalog.Expectation(1, "formula")
    assert not catalog.verify(e)["passed"]


def test_cross_check_rejects_bad_point():
    from innergalois.plane_curve import ProjPoint

    e = catalog.entry("hermitian-q2")
    e.P1 = ProjPoint.make(e.curve.ctx, (1, 1, 1))
    with pytest.raises(catalog.CatalogError):
        catalog._cross_check(e)


def test_filtration_discrepancy_is_recorded():
    rep = catalog.verify(catalog.entry("hermitian-q3"))
    m = rep["measured"]
    assert m["filtration"] == [3] * 5
    assert m["stated_filtration_check"] == "non-integral"


def test_ree_plane_and_space_counts_differ():
    m = catalog.verify(catalog.entry("ree-q3"))["measured"]
    assert m["rational_points"] == 28
    assert m["plane_affine_count"] != m["space_affine_count"]
