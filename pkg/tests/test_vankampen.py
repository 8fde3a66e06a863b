"""Fundamental groupoid presentations and cover pushouts on small
complexes whose answers are known independently."""

from itertools import product

import pytest

from gpdkit.core import HypothesisError, ValidationError, battery, symmetric_group
from gpdkit.presentations import (
    empty_word,
    enumerate_group_morphisms,
    free_loop_counts,
    word,
    words_equal,
)
from gpdkit.vankampen import (
    check_cover,
    close_cells,
    complex2,
    cover,
    fundamental_groupoid,
    pi1,
    vkt_square,
)


def circle():
    # two arcs between two poles
    return complex2((0, 1), [("a", 0, 1), ("b", 0, 1)])


def circle_cover():
    x = circle()
    return cover(x, ["a"], ["b"])


def disc():
    return complex2((0, 1), [("a", 0, 1), ("b", 0, 1)], [("f", [("a", 1), ("b", -1)])])


def sphere():
    return complex2(
        (0, 1),
        [("a", 0, 1), ("b", 0, 1)],
        [("f1", [("a", 1), ("b", -1)]), ("f2", [("b", 1), ("a", -1)])],
    )


def wedge():
    return complex2(("*",), [("x", "*", "*"), ("y", "*", "*")])


def torus():
    boundary = [("x", 1), ("y", 1), ("x", -1), ("y", -1)]
    return complex2(("*",), [("x", "*", "*"), ("y", "*", "*")], [("f", boundary)])


def theta():
    return complex2((0, 1), [("a", 0, 1), ("b", 0, 1), ("c", 0, 1)])


def test_closure_pulls_in_boundary_cells():
    x = disc()
    sub = close_cells(x, ["f"])
    assert sub.vertices == (0, 1)
    assert sub.edges == ("a", "b")
    assert sub.faces == ("f",)


def test_closure_rejects_unknown_cells():
    with pytest.raises(ValidationError):
        close_cells(circle(), ["nope"])


def test_cover_must_reach_every_cell():
    x = circle()
    with pytest.raises(ValidationError):
        cover(x, ["a"], ["a"])


def test_circle_on_two_points_is_free_on_two_arrows():
    p = fundamental_groupoid(circle(), (0, 1))
    assert p.quiver.vertices == (0, 1)
    assert p.quiver.edges == ("a", "b")
    assert p.relations == ()


def test_circle_vertex_group_is_free_of_rank_one():
    for base in ((0, 1), (0,)):
        gp = pi1(circle(), base, 0)
        assert len(gp.generators) == 1
        assert gp.relators == ()
        assert free_loop_counts(gp, 6) == [2 * k + 1 for k in range(7)]


def test_empty_base_is_rejected():
    with pytest.raises(HypothesisError):
        fundamental_groupoid(circle(), ())


def test_missed_component_is_named():
    two = complex2(("p", "q"), [("x", "p", "p"), ("y", "q", "q")])
    with pytest.raises(HypothesisError) as exc:
        fundamental_groupoid(two, ("p",))
    assert exc.value.report == ("q",)
    p = fundamental_groupoid(two, ("p", "q"))
    assert p.quiver.edges == ("x", "y")
    gp = pi1(two, ("p", "q"), "p")
    assert len(gp.generators) == 1 and gp.relators == ()


def test_disc_vertex_group_is_trivial():
    x = disc()
    p = fundamental_groupoid(x, (0,))
    # one generator killed by the face relation
    assert len(p.quiver.edges) == 1
    gp = pi1(x, (0,), 0)
    for g in (symmetric_group(3),):
        assert len(enumerate_group_morphisms(gp, g)) == 1
    loop = word(p.quiver, [(p.quiver.edges[0], 1)])
    verdict = words_equal(p, loop, empty_word(loop.src))
    assert verdict.answer == "yes"


def test_sphere_vertex_group_is_trivial():
    gp = pi1(sphere(), (0,), 0)
    for g in (symmetric_group(3),):
        assert len(enumerate_group_morphisms(gp, g)) == 1


def test_torus_morphism_counts_match_commuting_pairs():
    gp = pi1(torus(), ("*",), "*")
    assert sorted(gp.generators) == ["x", "y"]
    assert len(gp.relators) == 1
    s3 = symmetric_group(3)
    pairs = sum(
        1
        for g, h in product(s3.elements, repeat=2)
        if s3.mul(g, h) == s3.mul(h, g)
    )
    assert len(enumerate_group_morphisms(gp, s3)) == pairs


def test_check_cover_reports_missed_w_component():
    report = check_cover(circle_cover(), (0,))
    assert not report.ok
    assert ("W", (1,)) in report.missed
    assert dict(report.pieces) == {"U": 1, "V": 1, "W": 2}
    assert check_cover(circle_cover(), (0, 1)).ok


def test_vkt_raises_on_missed_component():
    with pytest.raises(HypothesisError) as exc:
        vkt_square(circle_cover(), (0,))
    assert "W" in str(exc.value)


def test_vkt_circle_evidence():
    result = vkt_square(circle_cover(), (0, 1))
    assert result.evidence_ok
    assert result.square.apex.relations == ()
    assert len(result.square.apex.quiver.edges) == 2
    by_name = {t.target: t for t in result.evidence}
    # free groupoid on two parallel arrows over two objects
    assert by_name["s3"].apex_morphisms == by_name["s3"].direct_morphisms


def test_vkt_wedge_evidence():
    x = wedge()
    c = cover(x, ["x"], ["y"])
    result = vkt_square(c, ("*",))
    assert result.evidence_ok
    by_name = {t.target: t for t in result.evidence}
    assert by_name["c2"].apex_morphisms == 4
    assert by_name["s3"].apex_morphisms == 36


def test_vkt_theta_with_shared_arc():
    x = theta()
    c = cover(x, ["a", "b"], ["b", "c"])
    assert c.w.edges == ("b",)
    result = vkt_square(c, (0, 1))
    assert result.evidence_ok
    # the shared arc contributes exactly one gluing relation
    assert len(result.square.apex.relations) == 1


def test_vkt_disc_kills_the_loop():
    x = disc()
    c = cover(x, ["f"], ["a", "b"])
    result = vkt_square(c, (0, 1))
    assert result.evidence_ok
    by_name = {t.target: t for t in result.evidence}
    for name, t in by_name.items():
        assert t.apex_morphisms == t.direct_morphisms


def test_vkt_explicit_targets_and_determinism():
    targets = {k: v for k, v in battery().items() if k in ("c2", "s3")}
    a = vkt_square(circle_cover(), (0, 1), targets=targets)
    b = vkt_square(circle_cover(), (0, 1), targets=targets)
    assert a.battery_names == ("c2", "s3")
    assert a.evidence == b.evidence
    assert a.bridge.emap == b.bridge.emap


def test_pi1_requires_a_base_vertex():
    with pytest.raises(ValidationError):
        pi1(circle(), (0,), 1)
