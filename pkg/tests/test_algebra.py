import pytest

from quivertilt.algebra import (
    BoundAlgebra,
    Path,
    PathMatrix,
    build_algebra,
    combo_of,
    lazy_path,
)
from quivertilt.errors import AlgebraError, UnsupportedParameters, VertexError
from quivertilt.quiver import Quiver, r, t


def test_build_22_shape():
    a = build_algebra(2, 2)
    assert a.quiver.n == 5
    assert len(a.quiver.arrows) == 5
    assert len(a.forbidden) == 3
    assert all(len(w) == 2 for w in a.forbidden)


def test_build_13_is_pure_cycle():
    a = build_algebra(1, 3)
    assert a.quiver.n == 4
    assert all(v.role == "r" for v in a.quiver.vertices)
    assert len(a.quiver.arrows) == 4


def test_vertex_counts():
    for (a1, a2) in [(1, 2), (2, 2), (3, 4), (4, 5)]:
        a = build_algebra(a1, a2)
        assert a.quiver.n == a2 + 2 * a1 - 1


def test_parameter_guards():
    with pytest.raises(UnsupportedParameters):
        build_algebra(2, 1)
    with pytest.raises(UnsupportedParameters):
        build_algebra(0, 3)


def test_lazy_loop_basis_is_trivial():
    for (a1, a2) in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        a = build_algebra(a1, a2)
        assert [p.label() for p in a.basis_paths(r(0), r(0))] == ["e(r0)"]


def test_no_basis_path_contains_forbidden_factor():
    a = build_algebra(2, 3)
    cycle = list(a.quiver.potential)
    for paths in a.basis.values():
        for p in paths:
            assert not a.path_is_zero(p.arrows)
            # count longest run of consecutive cycle arrows
            run = best = 0
            for arrow in p.arrows:
                run = run + 1 if arrow in cycle else 0
                best = max(best, run)
            assert best <= a.a2 - 1 or not all(x in cycle for x in p.arrows[:1])


def test_compose_zero_on_forbidden():
    a = build_algebra(2, 2)
    p1 = Path(r(0), r(1), ((r(0), r(1)),))
    p2 = Path(r(1), r(2), ((r(1), r(2)),))
    assert a.compose(p1, p2) is None  # two consecutive cycle arrows vanish
    branch = Path(r(0), t(1), ((r(0), t(1)),))
    assert a.compose(lazy_path(r(0)), branch) == branch


def test_dimension_matches_basis():
    a = build_algebra(2, 2)
    assert a.dimension == 13


def test_opposite_round_trip():
    a = build_algebra(2, 3)
    op = a.opposite_algebra()
    assert op.opposite_algebra() is a
    assert op.dimension == a.dimension
    assert len(op.forbidden) == len(a.forbidden)


def test_infinite_algebra_guard():
    q = Quiver((r(0), r(1)), ((r(0), r(1)),))
    # a 2-vertex quiver with a relation-free back-and-forth is impossible here
    # (2-cycles are rejected), so exercise the cap with an unbound cycle instead
    cyc = Quiver((r(0), r(1), r(2)), ((r(0), r(1)), (r(1), r(2)), (r(2), r(0))))
    with pytest.raises(AlgebraError):
        BoundAlgebra(cyc, [])  # no relations: infinite-dimensional


def test_path_validation():
    with pytest.raises(VertexError):
        Path(r(0), r(2), ((r(0), r(1)),))
    with pytest.raises(VertexError):
        Path(r(0), r(2), ((r(1), r(2)),))


def test_path_matrix_shape_checks():
    a = build_algebra(2, 2)
    good = PathMatrix((r(0),), (t(1),), ((combo_of(Path(r(0), t(1), ((r(0), t(1)),))),),))
    assert good.transpose().row_vertices == (t(1),)
    from quivertilt.errors import ShapeError

    with pytest.raises(ShapeError):
        PathMatrix((r(0),), (t(1),), ((combo_of(lazy_path(r(0))),),))


def test_path_matrix_double_transpose():
    p = Path(r(0), t(1), ((r(0), t(1)),))
    pm = PathMatrix((r(0),), (t(1),), ((combo_of(p),),))
    assert pm.transpose().transpose() == pm


def test_algebra_json_dump():
    a = build_algebra(2, 2)
    data = a.to_json()
    assert data["dim"] == 13
    assert data["a1"] == 2 and data["a2"] == 2
    assert data["basis"]["r0->r1"] == ["r0->r1"]
    assert "r0->r2" not in data["basis"]  # the length-2 cycle path vanishes
