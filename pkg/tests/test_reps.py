import pytest

from quivertilt.algebra import (
    BoundAlgebra,
    Path,
    PathMatrix,
    build_algebra,
    combo_of,
    lazy_path,
)
from quivertilt.errors import RelationViolation, ShapeError, UnsupportedInput
from quivertilt.linalg import Matrix
from quivertilt.quiver import Quiver, r, s, t
from quivertilt import reps


@pytest.fixture(scope="module")
def a22():
    return build_algebra(2, 2)


@pytest.fixture(scope="module")
def a2_quiver():
    """The hereditary two-vertex path algebra (no relations)."""
    return BoundAlgebra(Quiver((r(1), r(2)), ((r(1), r(2)),)), [], name="A2")


def supp_labels(m):
    return sorted(v.label for v in m.support())


# -- projectives and injectives --------------------------------------------------


def test_projective_supports(a22):
    assert supp_labels(reps.projective(a22, r(0))) == ["r0", "r1", "t1"]
    assert supp_labels(reps.projective(a22, r(1))) == ["r1", "r2"]
    assert supp_labels(reps.projective(a22, s(1))) == ["r0", "r2", "s1", "t1"]
    assert supp_labels(reps.projective(a22, t(1))) == ["t1"]


def test_projective_top_is_simple(a22):
    for x in a22.quiver.vertices:
        top = reps.top_dims(reps.projective(a22, x))
        assert top == {v: (1 if v == x else 0) for v in a22.quiver.vertices}


def test_injective_socle_is_simple(a22):
    for x in a22.quiver.vertices:
        soc = reps.socle_dims(reps.injective(a22, x))
        assert soc == {v: (1 if v == x else 0) for v in a22.quiver.vertices}


def test_injective_supports(a22):
    assert supp_labels(reps.injective(a22, r(2))) == ["r1", "r2", "s1"]
    assert supp_labels(reps.injective(a22, s(1))) == ["s1"]
    assert supp_labels(reps.injective(a22, t(1))) == ["r0", "r2", "s1", "t1"]


def test_injective_column_for_s_branch():
    a = build_algebra(4, 2)
    assert supp_labels(reps.injective(a, s(2))) == ["s1", "s2"]


def test_dim_algebra_equals_sum_of_projectives_and_injectives(a22):
    total_p = sum(reps.projective(a22, x).total_dim for x in a22.quiver.vertices)
    total_i = sum(reps.injective(a22, x).total_dim for x in a22.quiver.vertices)
    assert total_p == a22.dimension == total_i


def test_projective_injective_selfduality():
    a = build_algebra(2, 3)
    op = a.opposite_algebra()
    p_dims = sorted(tuple(sorted(reps.projective(a, x).dims.values())) for x in a.quiver.vertices)
    i_dims = sorted(tuple(sorted(reps.injective(op, x).dims.values())) for x in op.quiver.vertices)
    assert p_dims == i_dims


# -- realize_path_matrix ----------------------------------------------------------


def test_realize_identity(a22):
    pm = PathMatrix((r(0),), (r(0),), ((combo_of(lazy_path(r(0))),),))
    f = reps.realize_path_matrix(a22, pm)
    assert f.source.dims == f.target.dims
    assert all(f.blocks[v] == Matrix.identity(f.source.dims[v]) for v in a22.quiver.vertices)


def test_realize_definition_map_gives_M_s1(a22):
    path = Path(r(0), t(1), ((r(0), t(1)),))
    pm = PathMatrix((r(0),), (t(1),), ((combo_of(path),),))
    g = reps.realize_path_matrix(a22, pm)
    cok, _ = reps.cokernel(g)
    assert supp_labels(cok) == ["r0", "r1"]  # M(s1) support at (2,2)


def test_realize_linearity(a22):
    p = Path(r(0), t(1), ((r(0), t(1)),))
    pm_sum = PathMatrix((r(0),), (t(1),), ((((2, p),),),))
    pm_one = PathMatrix((r(0),), (t(1),), ((combo_of(p),),))
    f2 = reps.realize_path_matrix(a22, pm_sum)
    f1 = reps.realize_path_matrix(a22, pm_one)
    for v in a22.quiver.vertices:
        assert f2.blocks[v] == f1.blocks[v].scale(2)


# -- presentations and tau ---------------------------------------------------------


def test_presentation_of_projective_has_no_p1(a22):
    pres = reps.minimal_projective_presentation(reps.projective(a22, s(1)))
    assert pres.p1_vertices == ()
    assert pres.p0_vertices == (s(1),)


def test_presentation_of_M_r0(a22):
    m = reps.thin_from_support(a22, [r(1), r(2), s(1)])  # M(r0) at (2,2)
    pres = reps.minimal_projective_presentation(m)
    assert sorted(v.label for v in pres.p0_vertices) == ["r1", "s1"]
    assert [v.label for v in pres.p1_vertices] == ["r2"]


def test_presentation_of_M_t_branch():
    a = build_algebra(3, 3)
    # M(t1) = thin on r1..r3, s2
    m = reps.thin_from_support(a, [r(1), r(2), r(3), s(2)])
    pres = reps.minimal_projective_presentation(m)
    assert sorted(v.label for v in pres.p0_vertices) == ["r1", "s2"]
    assert [v.label for v in pres.p1_vertices] == ["r3"]


def test_tau_of_projectives_is_zero(a22):
    for x in a22.quiver.vertices:
        assert reps.tau(reps.projective(a22, x)).is_zero()


def test_tau_strips_projective_summands(a22):
    m = reps.thin_from_support(a22, [r(1), r(2), s(1)])
    mixed, _ = reps.direct_sum([m, reps.projective(a22, r(0))])
    assert reps.is_isomorphic_reps(reps.tau(mixed), reps.tau(m))


def test_tau_inverse_inverts_tau(a22):
    m = reps.thin_from_support(a22, [r(1), r(2), s(1)])  # non-projective
    tm = reps.tau(m)
    back = reps.tau_inverse(tm)
    assert reps.is_isomorphic_reps(back, m)


def test_tau_inverse_kills_injectives(a22):
    assert reps.tau_inverse(reps.injective(a22, r(1))).is_zero()


def test_double_transpose_recovers_presentation(a22):
    m = reps.thin_from_support(a22, [r(1), r(2), s(1)])
    pres = reps.minimal_projective_presentation(m)
    pm2 = pres.path_matrix.transpose().transpose()
    assert pm2 == pres.path_matrix


# -- hom, ext, stable hom -----------------------------------------------------------


def test_hom_identity_present(a22):
    m = reps.thin_from_support(a22, [r(0), r(1)])
    assert reps.hom_dim(m, m) >= 1


def test_hom_requires_same_algebra(a22, a2_quiver):
    with pytest.raises(ShapeError):
        reps.hom_basis(reps.simple(a22, r(0)), reps.simple(a2_quiver, r(1)))


def test_ext1_hereditary_example(a2_quiver):
    s1 = reps.simple(a2_quiver, r(1))
    s2 = reps.simple(a2_quiver, r(2))
    assert reps.ext1_dim(s1, s2) == 1
    assert reps.ext1_dim(s2, s1) == 0


def test_ext1_vanishes_on_projectives(a22):
    for x in a22.quiver.vertices:
        p = reps.projective(a22, x)
        for y in a22.quiver.vertices:
            assert reps.ext1_dim(p, reps.simple(a22, y)) == 0


def test_stable_hom_projectives_examples(a2_quiver, a22):
    s2 = reps.simple(a2_quiver, r(2))  # = P(2) over the path algebra
    assert reps.stable_hom_dim(s2, s2, "projectives") == 0
    p = reps.projective(a22, s(1))
    for y in a22.quiver.vertices:
        assert reps.stable_hom_dim(p, reps.injective(a22, y), "projectives") == 0


def test_stable_hom_injectives_example(a2_quiver):
    s1 = reps.simple(a2_quiver, r(1))  # = I(1) over the path algebra
    assert reps.stable_hom_dim(s1, s1, "injectives") == 0


def test_stable_hom_bad_mode(a22):
    with pytest.raises(UnsupportedInput):
        reps.stable_hom_dim(reps.simple(a22, r(0)), reps.simple(a22, r(0)), "nonsense")


def test_ar_formula_on_a2(a2_quiver):
    s1 = reps.simple(a2_quiver, r(1))
    s2 = reps.simple(a2_quiver, r(2))
    assert reps.ext1_dim(s1, s2) == reps.stable_hom_dim(s2, reps.tau(s1), "injectives")


# -- pd certificates ------------------------------------------------------------------


def test_pd_le1_projective(a22):
    assert reps.projective_dimension_le1(reps.projective(a22, r(0)))


def test_pd_s_r0_exceeds_one(a22):
    # oracle: the first syzygy of S(r0) is S(r1) + S(t1), and S(r1) is not
    # projective (P(r1) is two-dimensional), so pd > 1
    s_r0 = reps.simple(a22, r(0))
    _, cover, _, _ = reps.projective_cover(s_r0)
    syz, _ = reps.kernel(cover)
    assert {v.label: d for v, d in syz.dims.items() if d} == {"r1": 1, "t1": 1}
    assert reps.projective(a22, r(1)).total_dim == 2
    assert not reps.projective_dimension_le1(s_r0)


# -- submodule lattices ----------------------------------------------------------------


def test_simple_has_two_submodules(a22):
    assert reps.submodules_thin(reps.simple(a22, r(0))).count == 2


def test_submodules_guard(a22):
    fat, _ = reps.direct_sum([reps.simple(a22, r(0)), reps.simple(a22, r(0))])
    with pytest.raises(UnsupportedInput):
        reps.submodules_thin(fat)


def test_lattice_closure(a22):
    m = reps.thin_from_support(a22, [r(0), r(1), t(1)])
    lat = reps.submodules_thin(m)
    assert lat.is_lattice()
    assert frozenset() in lat.subsets and m.support() in lat.subsets


# -- thin_from_support -------------------------------------------------------------------


def test_full_support_violates_relations(a22):
    with pytest.raises(RelationViolation):
        reps.thin_from_support(a22, list(a22.quiver.vertices))


def test_singleton_support_is_simple(a22):
    m = reps.thin_from_support(a22, [s(1)])
    assert m == reps.simple(a22, s(1))


# -- isomorphism --------------------------------------------------------------------------


def test_simples_not_isomorphic(a22):
    assert not reps.is_isomorphic_reps(reps.simple(a22, r(0)), reps.simple(a22, r(1)))


def test_isomorphism_detects_gauge_change(a22):
    m = reps.thin_from_support(a22, [r(0), r(1)])
    maps = dict(m.maps)
    maps[(r(0), r(1))] = Matrix([[-7]])
    n = reps.Representation(a22, dict(m.dims), maps)
    assert reps.is_isomorphic_reps(m, n)


def test_identification_examples(a22):
    m_r1 = reps.thin_from_support(a22, [s(1), r(2), r(0), t(1)])  # M(r_{a2-1})
    assert reps.is_isomorphic_reps(m_r1, reps.projective(a22, s(1)))
    assert reps.is_isomorphic_reps(m_r1, reps.injective(a22, t(1)))


# -- dump ----------------------------------------------------------------------------------


def test_representation_json(a22):
    m = reps.thin_from_support(a22, [r(0), r(1)])
    data = m.to_json()
    assert data["dims"] == {"r0": 1, "r1": 1}
    assert data["support"] == ["r0", "r1"]
    assert data["maps"]["r0->r1"] == [["1"]]


def test_stable_hom_of_tau_vanishes_for_family(a22):
    m_r0 = reps.thin_from_support(a22, [r(1), r(2), s(1)])
    assert reps.stable_hom_dim(m_r0, reps.tau(m_r0), "injectives") == 0


def test_projective_t_branch_column():
    a = build_algebra(3, 2)
    assert supp_labels(reps.projective(a, t(1))) == ["t1", "t2"]
    assert supp_labels(reps.projective(a, t(2))) == ["t2"]
