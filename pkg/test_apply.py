import itertools

import numpy as np
import pytest

from apply import (
    WILDCARD,
    AssignmentMatrix,
    assignment_graph,
    build_assignment_matrix,
    build_projective_plane,
    check_plane_axioms,
    find_assignments,
    monochromatic_clique_census,
    pad_to_square,
    triangle_census,
    verify_packing,
)
from core import CGraph
from exceptions import ColorConventionViolated, InvalidArgs, NotAPartition, NotBipartite, NotPrime, NotSquare
from field import make_modulus

# persons p1..p4 and jobs j1..j4; entry v+1 means person u can do job v
WORKED_EXAMPLE = ((1, 2, 0, 0), (1, 0, 3, 0), (0, 2, 0, 4), (0, 0, 0, 4))


def brute_force_assignments(M):
    n = M.persons
    return [
        sigma
        for sigma in itertools.permutations(range(n))
        if all(M.entries[u][sigma[u]] != 0 for u in range(n))
    ]


def test_worked_example_has_a_unique_assignment():
    M = AssignmentMatrix(WORKED_EXAMPLE)
    found = find_assignments(M, limit=10)
    assert len(found) == 1
    assert found[0].lines() == ["p1 j1", "p2 j3", "p3 j2", "p4 j4"]
    assert found[0].as_dict() == {0: 0, 1: 2, 2: 1, 3: 3}


def test_assignments_agree_with_determinant_support(rng):
    """Nonzero monomials of the determinant are exactly the assignments."""
    for _ in range(200):
        n = rng.randrange(1, 8)
        entries = tuple(
            tuple((v + 1) if rng.random() < 0.5 else 0 for v in range(n)) for _ in range(n)
        )
        M = AssignmentMatrix(entries)
        expected = brute_force_assignments(M)
        found = find_assignments(M, limit=10 ** 6)
        assert [tuple(a.as_dict()[u] for u in range(n)) for a in found] == expected
        first = find_assignments(M)
        assert len(first) == min(1, len(expected))
        if not expected:
            assert round(float(np.linalg.det(M.support()))) == 0


def test_column_convention():
    with pytest.raises(ColorConventionViolated):
        AssignmentMatrix(((1, 1), (0, 2)))
    with pytest.raises(InvalidArgs):
        AssignmentMatrix(((1, 2), (1,)))


def test_unbalanced_matrices_are_padded():
    tall = AssignmentMatrix(((1, 0), (1, 2), (0, 2)))
    with pytest.raises(NotSquare):
        find_assignments(tall)
    square = pad_to_square(tall)
    assert square.is_square and square.dummy_jobs == frozenset({2})
    assert square.rows()[0] == [1, 0, WILDCARD]
    first = find_assignments(square)[0]
    assert first.lines() == ["p1 j1", "p2 j2", "p3 unfilled"]

    wide = AssignmentMatrix(((0, 2, 3),))
    found = find_assignments(pad_to_square(wide), limit=10)
    assert found[0].lines() == ["p1 j2", "unfilled j1", "unfilled j3"]
    assert len(found) == 4


def test_build_assignment_matrix_from_a_cgraph():
    F = make_modulus(5)
    # persons 0, 1; jobs 2, 3 (job 1 is vertex 2, job 2 is vertex 3)
    g = CGraph(4, F, {(0, 2): 1, (1, 2): 1, (1, 3): 2})
    M = build_assignment_matrix(g, [0, 1], [2, 3])
    assert M.entries == ((1, 0), (1, 2))
    assert assignment_graph(M, F) == g
    with pytest.raises(NotAPartition):
        build_assignment_matrix(g, [0, 1], [2])
    with pytest.raises(NotBipartite):
        build_assignment_matrix(CGraph(4, F, {(0, 1): 1}), [0, 1], [2, 3])
    with pytest.raises(ColorConventionViolated):
        build_assignment_matrix(CGraph(4, F, {(0, 3): 1}), [0, 1], [2, 3])
    with pytest.raises(InvalidArgs):
        assignment_graph(M, make_modulus(2))


def test_fano_plane():
    fano = build_projective_plane(2)
    assert fano.m == 7
    assert len(fano.lines) == 7
    assert all(len(line) == 3 for line in fano.lines)
    assert verify_packing(fano).lines() == ["PASS"]
    assert check_plane_axioms(fano).passed
    assert tuple(triangle_census(fano)) == (35, 7, 28, 0)
    assert triangle_census(fano).line() == "35 7 28 0"


def test_plane_of_order_three():
    plane = build_projective_plane(3)
    assert plane.m == 13
    assert verify_packing(plane).passed
    assert check_plane_axioms(plane).passed
    census = triangle_census(plane)
    assert census.total == 286
    assert census.monochromatic == 52
    assert monochromatic_clique_census(plane, 4) == {c: 1 for c in range(1, 14)}


@pytest.mark.parametrize("q", [5, 7])
def test_larger_planes_pack_tightly(q):
    plane = build_projective_plane(q)
    n = q * q + q + 1
    assert plane.m == n
    assert len(plane.edges()) == n * (n - 1) // 2
    assert verify_packing(plane).passed


def test_plane_requires_prime_order():
    with pytest.raises(NotPrime):
        build_projective_plane(4)


def test_plane_as_cgraph():
    fano = build_projective_plane(2)
    g = fano.to_cgraph()
    assert g.p == 11
    assert g.edge_count == 21
    assert verify_packing(g).passed
    with pytest.raises(InvalidArgs):
        fano.to_cgraph(7)


def test_verify_packing_reports_each_failure():
    fano = build_projective_plane(2)
    u, v = sorted(fano.lines[0])[:2]
    assert verify_packing(fano.recolored((u, v), 0)).check == "no-white"
    other = 2 if fano.color(u, v) != 2 else 3
    report = verify_packing(fano.recolored((u, v), other))
    assert not report.passed
    assert report.check == "exactly-once"
    assert report.lines()[0].startswith("FAIL exactly-once: ")


def test_verify_packing_on_plain_cgraphs(gf3):
    # a monochromatic triangle packs K3 trivially
    assert verify_packing(CGraph(3, gf3, {(0, 1): 1, (0, 2): 1, (1, 2): 1})).passed
    # a path of two colors leaves a white pair
    assert verify_packing(CGraph(3, gf3, {(0, 1): 1, (1, 2): 2})).check == "no-white"


def test_triangle_census_of_a_mixed_triangle(gf5):
    rainbow = CGraph(3, gf5, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    assert tuple(triangle_census(rainbow)) == (1, 0, 1, 0)
    mixed = CGraph(4, gf5, {(0, 1): 1, (0, 2): 1, (1, 2): 2, (2, 3): 4})
    assert tuple(triangle_census(mixed)) == (1, 0, 0, 1)


def test_clique_census_rejects_small_r(gf3):
    with pytest.raises(InvalidArgs):
        monochromatic_clique_census(CGraph(3, gf3), 1)
