import itertools

import pytest

from cbclab.errors import InconsistentRotation, PreconditionC4
from cbclab.graph import build_graph
from cbclab.planar import (
    Embedded, NonplanarWitness, RotationSystem, dual, embed, euler_ok, every_edge_on_big_face, faces,
    islands, planarity_embed,
)
from cbclab.classes import has_cycle_of_length
from cbclab.workbench.enumerate import enumerate_graphs

from conftest import W4, complete, cycle, path


def test_k4_embedding_has_four_triangles():
    rs = planarity_embed(complete(4))
    fs = faces(rs)
    assert len(fs) == 4 and fs.f3 == 4 and fs.f4 == fs.f5 == 0


def test_k5_witness():
    w = planarity_embed(complete(5))
    assert isinstance(w, NonplanarWitness)
    assert len(w.edges) == 10  # K5 itself is the subdivision


def test_c6_two_hexagons():
    fs = faces(planarity_embed(cycle(6)))
    assert fs.degrees() == [6, 6]


def test_bowtie_faces(bowtie_rs):
    fs = faces(bowtie_rs)
    assert sorted(fs.degrees()) == [3, 3, 6]
    assert sorted(dual(bowtie_rs, fs).degree(f) for f in range(len(fs))) == [3, 3, 6]


def test_w4_faces(w4_rs):
    assert sorted(faces(w4_rs).degrees()) == [3, 3, 3, 3, 4]


def test_duals():
    rs = planarity_embed(cycle(6))
    dm = dual(rs, faces(rs))
    assert len(dm.edges) == 6 and {tuple(sorted((a, b))) for a, b, _ in dm.edges} == {(0, 1)}
    rs = planarity_embed(complete(4))
    dm = dual(rs, faces(rs))
    assert sorted(tuple(sorted((a, b))) for a, b, _ in dm.edges) == list(itertools.combinations(range(4), 2))


def test_islands_w4(w4_rs):
    isl = Embedded(W4, w4_rs, faces(w4_rs)).islands(4)
    assert isl.gamma == 1 and len(isl.components) == 1


def test_islands_square_with_triangles(square_tri_rs):
    fs = faces(square_tri_rs)
    isl = islands(dual(square_tri_rs, fs), fs, 4)
    assert isl.gamma == 1
    by_degree = {tuple(sorted(fs.degree(f) for f in c)): b for c, b in zip(isl.components, isl.bad)}
    assert by_degree == {(4,): True, (8,): False}
    # every triangle touches the inner square island
    (bad_id,) = isl.bad_components()
    assert all(isl.gamma_face[f] == {bad_id} for f in fs.triangles())


def test_islands_c6_parallel_edges_make_a_cycle():
    rs = planarity_embed(cycle(6))
    fs = faces(rs)
    isl = islands(dual(rs, fs), fs, 5)
    assert len(isl.components) == 1 and isl.acyclic == (False,) and isl.gamma == 0


def test_bridge_gives_dual_loop():
    rs = planarity_embed(path(3))
    fs = faces(rs)
    dm = dual(rs, fs)
    assert all(a == b for a, b, _ in dm.edges)
    isl = islands(dm, fs, 4)
    assert isl.acyclic == (False,)


def test_every_edge_on_big_face(bowtie_rs):
    assert every_edge_on_big_face(faces(bowtie_rs)) is True
    assert every_edge_on_big_face(faces(planarity_embed(cycle(6)))) is True
    with pytest.raises(PreconditionC4):
        every_edge_on_big_face(faces(planarity_embed(complete(4))))


def test_rotation_validation_and_json(bowtie_rs):
    assert RotationSystem.from_json(bowtie_rs.to_json()) == bowtie_rs
    with pytest.raises(InconsistentRotation):
        RotationSystem(2, ((1,), ()))
    k4 = complete(4)
    rots = [tuple(sorted(k4.adj[u])) for u in range(4)]
    twisted = RotationSystem(4, tuple(rots[:3]) + ((0, 2, 1),))
    assert not euler_ok(k4, faces(twisted))
    with pytest.raises(InconsistentRotation):
        embed(k4, twisted)
    with pytest.raises(InconsistentRotation):
        embed(cycle(4), twisted)


@pytest.mark.parametrize("n", range(1, 8))
def test_euler_and_dart_sums_on_planar_corpus(n):
    for g in enumerate_graphs(n, ["planar"]):
        rs = planarity_embed(g)
        fs = faces(rs)
        assert g.n - g.m + len(fs) == 2
        assert sum(fs.degrees()) == 2 * g.m
        dm = dual(rs, fs)
        assert len(dm.edges) == g.m
        assert all(dm.degree(f) == fs.degree(f) for f in range(len(fs)))
        bridges = {e for e in g.edges if _is_bridge(g, e)}
        loops = {e for a, b, e in dm.edges if a == b}
        assert loops == bridges
        for r in (4, 5):
            isl = islands(dm, fs, r)
            assert sorted(f for c in isl.components for f in c) == [
                f for f in range(len(fs)) if fs.degree(f) != 3
            ]


def _is_bridge(g, e):
    h = build_graph(g.n, [x for x in g.edges if x != e])
    return len(h.components()) > len(g.components())


@pytest.mark.parametrize("n", range(3, 10))
def test_big_face_proposition_on_c4_free_corpus(n):
    for g in enumerate_graphs(n, ["planar", "c4_free"]):
        assert has_cycle_of_length(g, 4) is None
        if g == complete(3):
            continue  # both faces of a lone triangle have degree 3
        assert every_edge_on_big_face(faces(planarity_embed(g))) is True


def test_lone_triangle_is_the_exception():
    assert every_edge_on_big_face(faces(planarity_embed(complete(3)))) in complete(3).edges
