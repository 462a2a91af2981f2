import json

import pytest

from gccbicolor.core import validate_biregular
from gccbicolor.dataset import (
    DatasetError,
    FaceId,
    audit_errata,
    build_G,
    build_Gprime_quotient,
    build_Gprime_theta,
    covering_map,
    cross_validate_gprime,
    gprime_aliases,
    great_circles,
    load_corrected,
    load_dataset,
    name_kind,
    observation2_check,
    op_ep_check,
    pentagon_cycles_check,
    printed_pairing_discrepancies,
    read_errata,
    shipped_errata,
    theta_display_check,
    validate_dataset,
)


@pytest.fixture(scope="module")
def corrected():
    return load_corrected()


def test_names_and_faces_parse():
    assert name_kind("x'_4") == ("x'", 4)
    assert FaceId.parse("3_6").symbol == 3
    with pytest.raises(DatasetError):
        FaceId.parse("6_1")
    with pytest.raises(DatasetError):
        name_kind("w_1")


def test_raw_tables_show_the_y5_anomaly():
    report = validate_dataset(load_dataset())
    assert not report.ok
    counts = {v.location: v.message for v in report.violations if v.kind == "count"}
    assert "4x2" in counts["vertex y_5"]
    assert "[1, 2, 3, 5]" in counts["vertex y'_5"]


def test_corrected_tables_are_valid(corrected):
    assert len(corrected.s3p) == 60
    assert validate_dataset(corrected).ok
    assert len(corrected.errata) == len(shipped_errata()) == 4


def test_every_erratum_is_needed_and_sufficient():
    assert audit_errata().ok


def test_overlay_must_match_the_printed_row(tmp_path):
    e = shipped_errata()[0].to_dict()
    e["original"] = ["1_1", "1_2", "1_3", "1_4", "1_5"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"errata": [e]}))
    with pytest.raises(DatasetError):
        load_dataset(str(path))
    with pytest.raises(DatasetError):
        read_errata({"nothing": []})
    with pytest.raises(DatasetError):
        read_errata(str(tmp_path / "missing.json"))


def test_partial_overlay_leaves_some_violations():
    ds = load_dataset(shipped_errata()[:2])
    assert not validate_dataset(ds).ok


def test_build_G_shape(corrected):
    g = build_G(corrected)
    assert (g.y_count, g.x_count, len(g.edges)) == (12, 20, 60)
    assert validate_biregular(g).ok
    for star in g.y_stars:
        assert sorted(g.edges[i][2] for i in star) == [1, 2, 3, 4, 5]
    for x, star in enumerate(g.x_stars):
        tags = [g.edges[i][2] for i in star]
        assert len(set(tags)) == 3
    with pytest.raises(DatasetError):
        build_G(load_dataset())


def test_covering_map_is_two_to_one(corrected):
    cmap = covering_map(corrected)
    assert len(cmap.fibres) == 16
    assert all(len(pair) == 2 for pair in cmap.pairs)
    assert cmap.fibre("13524") == ("y_0", "y'_0")
    g = build_G(corrected)
    image = cmap.image
    # each fibre's two vertices see the same tagged neighbourhood downstairs
    down = {}
    for y, x, t in g.edges:
        down.setdefault(g.y_names[y], set()).add((image[g.x_names[x]], t))
        down.setdefault(g.x_names[x], set()).add((image[g.y_names[y]], t))
    for a, b in cmap.pairs:
        assert down[a] == down[b]


def test_printed_pairing_is_noted_not_failed(corrected):
    report = printed_pairing_discrepancies(corrected, covering_map(corrected))
    assert report.ok
    assert len(report.notes) == 10
    assert {n.kind for n in report.notes} == {"phi-pairing"}


def test_two_routes_to_gprime_agree(corrected):
    quotient = build_Gprime_quotient(corrected)
    assert quotient == build_Gprime_theta()
    assert cross_validate_gprime(corrected).ok
    assert validate_biregular(quotient).ok and len(quotient.edges) == 30


def test_raw_cross_validation_finds_the_row_error():
    report = cross_validate_gprime(load_dataset())
    kinds = report.kinds()
    assert kinds["extra-edge"] >= 1 and kinds["fibre-size"] >= 1


def test_aliases_cover_gprime(corrected):
    aliases = gprime_aliases(corrected)
    g = build_Gprime_theta()
    assert set(aliases) == set(g.y_names) | set(g.x_names)
    assert aliases["13524"] == "y_0"


def test_great_circles(corrected):
    circles = great_circles(corrected)
    assert len(circles) == 15
    assert sorted(r for c in circles for r in c.rows) == list(range(60))
    assert all(len(c.rows) == 4 and len(c.gprime_edges) == 2 for c in circles)
    assert [c.name for c in circles[:3]] == ["1.1", "1.2", "1.3"]


def test_auxiliary_checks(corrected):
    pent = pentagon_cycles_check(corrected)
    assert pent.ok and [n.kind for n in pent.notes] == ["transcription"]
    theta = theta_display_check(corrected)
    assert theta.ok and {n.kind for n in theta.notes} <= {"theta5-source"}
    assert op_ep_check(corrected).ok
    assert observation2_check(build_Gprime_theta()).ok
