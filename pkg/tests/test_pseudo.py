import pytest

from tropmom.cones import Cone, cone_equal
from tropmom.errors import PreconditionError, ResourceLimitError
from tropmom.funcones import cone_M
from tropmom.lattice import PointConfig, cubical_hull
from tropmom.moments import SemialgSpec, trop_moment_cone
from tropmom.pseudo import (
    clamp_extension,
    f_s_d,
    gap_report,
    normal_valid_on,
    sigma_dual_trop,
    stabilization_scan,
    stabilized_pseudomoment,
    trop_pseudomoment,
    trop_pseudomoment_cube_stable,
    trop_pseudomoment_stable,
)

MOTZKIN = PointConfig([(0, 0), (1, 1), (1, 2), (2, 1)])
ORTHANT2 = SemialgSpec.orthant(2)
CUBE2 = SemialgSpec.cube(2)
S2 = SemialgSpec.binomials(2, [((0, 2), (1, 0)), ((1, 0), (0, 3))])


def test_f_s_d_orthant_line():
    f = f_s_d(SemialgSpec.orthant(1), 2)
    assert f.cone.ineqs == ((1, -2, 1),)


def test_f_s_d_cube_line():
    f = f_s_d(SemialgSpec.cube(1), 2)
    assert cone_equal(f.cone, Cone.from_hrep(3, [(1, -1, 0), (0, 1, -1), (1, -2, 1)]))
    # h(0) >= h(1) follows from the midpoint row plus h(1) >= h(2)
    assert set(f.cone.ineqs) == {(0, 1, -1), (1, -2, 1)}


def test_f_s_d_defining_rows():
    f = f_s_d(CUBE2, 2)
    rows = set(f.defining_ineqs)
    # degree-2 simplex in graded-lex order: (0,0),(0,1),(1,0),(0,2),(1,1),(2,0)
    assert (1, 0, -2, 0, 0, 1) in rows
    assert (0, 0, 1, 0, -1, 0) in rows


def test_f_s_d_rejects_full_space():
    with pytest.raises(PreconditionError):
        f_s_d(SemialgSpec.full_space(2), 3)


def test_truncated_projection_low_degrees_are_free():
    p = trop_pseudomoment(MOTZKIN, ORTHANT2, 3)
    assert cone_equal(p.cone, Cone.full_space(4))
    assert p.degree == 3 and not p.stabilized
    assert cone_equal(trop_pseudomoment(MOTZKIN, ORTHANT2, 4).cone, Cone.full_space(4))
    seg = PointConfig([(0,), (2,)])
    assert cone_equal(
        trop_pseudomoment(seg, SemialgSpec.orthant(1), 2).cone, Cone.full_space(2)
    )


def test_truncated_projection_cube_degree_6():
    p = trop_pseudomoment(MOTZKIN, CUBE2, 6)
    assert set(p.cone.ineqs) == {
        (0, 1, -1, 0),
        (0, 1, 0, -1),
        (1, -2, 1, 0),
        (1, -2, 0, 1),
    }


def test_truncated_projection_errors():
    with pytest.raises(PreconditionError) as err:
        trop_pseudomoment(MOTZKIN, CUBE2, 2)
    assert "(1, 2)" in str(err.value) or "(2, 1)" in str(err.value)
    with pytest.raises(ResourceLimitError):
        trop_pseudomoment(MOTZKIN, CUBE2, 9, max_extension_points=40)


def test_cube_stabilization():
    cs = trop_pseudomoment_cube_stable(MOTZKIN)
    assert set(cs.cone.ineqs) == {
        (0, 1, -1, 0),
        (0, 1, 0, -1),
        (1, -2, 1, 0),
        (1, -2, 0, 1),
    }
    assert cs.degree is None and cs.stabilized
    assert len(cs.extension_support) == 9

    single = PointConfig([(3, 2)])
    assert cone_equal(trop_pseudomoment_cube_stable(single).cone, Cone.full_space(1))


def test_cube_stabilization_against_direct_projection():
    c04 = trop_pseudomoment_cube_stable(PointConfig([(0,), (4,)]))
    assert c04.cone.ineqs == ((1, -1),)
    hull = cone_M(PointConfig([(0,), (1,), (2,), (3,), (4,)]), Cone.nonpos_orthant(1))
    assert cone_equal(c04.cone, hull.cone.project([0, 4]))


def test_clamp_extension():
    box = cubical_hull(PointConfig([(0, 0), (2, 2)]))
    vals = list(range(9))
    assert clamp_extension(box, vals, (5, 1)) == vals[box.index((2, 1))]
    assert clamp_extension(box, vals, (1, 2)) == vals[box.index((1, 2))]


def test_general_stabilization_square():
    square = PointConfig([(0, 0), (1, 0), (0, 1), (1, 1)])
    s1 = SemialgSpec.binomials(2, [((0, 1), (2, 0)), ((1, 0), (0, 2))])
    st = trop_pseudomoment_stable(square, s1)
    assert set(st.cone.ineqs) == {
        (0, 1, 0, -1),
        (0, 0, 1, -1),
        (1, 1, -2, 0),
        (1, -2, 1, 0),
        (2, -3, 0, 1),
        (2, 0, -3, 1),
    }
    assert len(st.extension_support) == 13


def test_general_stabilization_motzkin():
    st = trop_pseudomoment_stable(MOTZKIN, S2)
    assert set(st.cone.ineqs) == {
        (1, -4, 3, 0),
        (4, -10, 1, 5),
        (0, 2, -3, 1),
        (0, 0, 1, -1),
    }
    assert st.cone.lineality == ((1, 1, 1, 1),)
    assert set(st.cone.rays) == {
        (0, -15, -20, -26),
        (0, -4, -5, -7),
        (0, -3, -4, -4),
        (0, -1, -1, -1),
    }


def test_general_stabilization_edge_cases():
    assert cone_equal(
        trop_pseudomoment_stable(PointConfig([(0, 0)]), S2).cone, Cone.full_space(1)
    )
    with pytest.raises(PreconditionError) as err:
        trop_pseudomoment_stable(MOTZKIN, CUBE2)
    assert "basis vector" in str(err.value)


def test_sigma_dual():
    dbl = PointConfig([(0, 0), (2, 4), (4, 2), (2, 2)])
    sg = sigma_dual_trop(dbl, max_extension_points=40)
    assert cone_equal(sg.cone, Cone.full_space(4))
    assert sigma_dual_trop(PointConfig([(0,), (2,), (4,)])).cone.ineqs == ((1, -2, 1),)
    assert sigma_dual_trop(PointConfig([(0,), (1,), (2,)])).cone.ineqs == ((1, -2, 1),)


def test_stabilized_dispatch():
    assert stabilized_pseudomoment(MOTZKIN, CUBE2).stabilized
    for bad in (ORTHANT2, SemialgSpec.toric_cube([[1, 2], [1, 3]])):
        with pytest.raises(PreconditionError):
            stabilized_pseudomoment(MOTZKIN, bad)


def test_scan_cube():
    cs = trop_pseudomoment_cube_stable(MOTZKIN)
    rep = stabilization_scan(MOTZKIN, CUBE2, 8, max_extension_points=45)
    assert rep.d_min == 3 and rep.first_stable == 3
    assert rep.matches_closed_form is True
    assert all(cone_equal(r.cone, cs.cone) for r in rep.results)


def test_scan_orthant():
    rep = stabilization_scan(MOTZKIN, ORTHANT2, 6)
    assert rep.first_stable == 3 and rep.matches_closed_form is None


def test_scan_segment():
    rep = stabilization_scan(PointConfig([(0,), (1,), (2,)]), SemialgSpec.orthant(1), 4)
    assert rep.d_min == 2 and rep.first_stable == 2
    assert all(r.cone.ineqs == ((1, -2, 1),) for r in rep.results)


def test_gap_reports():
    g = gap_report(MOTZKIN, CUBE2)
    assert [str(b) for b in g] == ["m(0,0)*m(1,2)*m(2,1) >= m(1,1)^3"]
    g2 = gap_report(MOTZKIN, S2)
    assert [str(b) for b in g2] == ["m(0,0)*m(1,2)*m(2,1) >= m(1,1)^3"]
    tri = PointConfig([(0, 0), (1, 0), (0, 1)])
    assert gap_report(tri, ORTHANT2) == ()
    assert gap_report(tri, CUBE2) == ()
    with pytest.raises(PreconditionError):
        gap_report(MOTZKIN, ORTHANT2)


def test_normal_valid_on():
    cone = Cone.from_hrep(2, [(1, -2), (-1, 3)])
    assert normal_valid_on(cone, (1, -2)) is True
    assert normal_valid_on(cone, (1, -3)) is False
    assert normal_valid_on(Cone.full_space(2), (1, 0)) is False
    assert normal_valid_on(Cone.full_space(2), (0, 0)) is True


def test_moment_cone_inside_pseudomoment_cone():
    for spec in (CUBE2, S2):
        mom = trop_moment_cone(MOTZKIN, spec).cone
        psd = stabilized_pseudomoment(MOTZKIN, spec).cone
        assert psd.contains_cone(mom)
