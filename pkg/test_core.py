import itertools
import random

import numpy as np
import pytest

from core import (
    CDigraph,
    CGraph,
    ColorPermutation,
    CVector,
    Relation,
    add_edge,
    adjacency_matrix,
    adjacency_matrix_directed,
    all_color_permutations,
    are_complements,
    classify_relative,
    degree,
    delete_edge,
    delete_vertex,
    from_matrix,
    from_matrix_directed,
    from_vector,
    incidence_matrix,
    induced_pair_permutation,
    is_j_complete,
    is_k_bipartite,
    is_k_independent,
    is_subcgraph,
    k_complete_bipartite,
    monochromatic_component,
    pair_order,
    pi_complement,
    pi_complement_directed,
    random_cgraph,
    scalar_mul,
    subgraph,
    to_vector,
    vector_add,
)
from exceptions import (
    EdgeAbsent,
    InvalidArgs,
    InvalidMatrix,
    LengthMismatch,
    ModulusMismatch,
    NotAPartition,
    NotAPermutation,
    VertexOutOfRange,
    WhiteColorRequested,
)
from field import make_modulus


def test_pair_order():
    assert pair_order(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert pair_order(1) == ()


def test_induced_pair_permutation_is_a_permutation():
    for sigma in itertools.permutations(range(4)):
        assert sorted(induced_pair_permutation(sigma)) == list(range(6))
    # swapping 0 and 1 fixes {0,1} and {2,3}
    assert induced_pair_permutation((1, 0, 2, 3)) == (0, 3, 4, 1, 2, 5)


def test_cgraph_normalizes_pairs_and_drops_white(gf3):
    g = CGraph(3, gf3, {(1, 0): 2, (1, 2): 0, (0, 2): gf3.element(1)})
    assert g.edges() == [(0, 1, 2), (0, 2, 1)]
    assert g.color(1, 0) == 2
    assert g.color(1, 2) == 0
    assert g.color(2, 2) == 0
    assert g.edge_count == 2
    assert g == CGraph(3, gf3, {(0, 1): 2, (0, 2): 1})
    assert hash(g) == hash(CGraph(3, gf3, {(0, 1): 2, (0, 2): 1}))


def test_cgraph_rejects_bad_input(gf3):
    with pytest.raises(InvalidArgs):
        CGraph(3, gf3, {(1, 1): 1})
    with pytest.raises(VertexOutOfRange):
        CGraph(3, gf3, {(0, 3): 1})
    with pytest.raises(InvalidArgs):
        CGraph(3, gf3, {(0, 1): 1, (1, 0): 2})
    with pytest.raises(InvalidArgs):
        CGraph(3, gf3, {(0, 1): 3})
    with pytest.raises(VertexOutOfRange):
        CGraph(3, gf3).color(0, 5)


def test_single_vertex_cgraph(gf2):
    g = CGraph(1, gf2)
    assert g.edges() == []
    assert adjacency_matrix(g).shape == (1, 1)


def test_neighbors_and_degree(mixed4):
    assert mixed4.neighbors(2) == [(0, 1), (1, 1), (3, 2)]
    assert degree(mixed4, 3) == 1


def test_adjacency_matrix(path3):
    a = adjacency_matrix(path3)
    assert a.tolist() == [[0, 1, 0], [1, 0, 2], [0, 2, 0]]
    assert np.array_equal(a, a.T)
    with pytest.raises(ValueError):
        a[0, 0] = 1


def test_from_matrix_round_trip(gf5, rng):
    g = random_cgraph(6, gf5, rng)
    assert from_matrix(adjacency_matrix(g), gf5) == g


def test_from_matrix_validation(gf3):
    with pytest.raises(InvalidMatrix):
        from_matrix(np.array([[0, 1], [2, 0]]), gf3)
    with pytest.raises(InvalidMatrix):
        from_matrix(np.array([[1, 0], [0, 0]]), gf3)
    with pytest.raises(InvalidMatrix):
        from_matrix(np.array([[0, 3], [3, 0]]), gf3)
    with pytest.raises(InvalidMatrix):
        from_matrix(np.zeros((2, 3), dtype=int), gf3)


def test_directed_matrices(gf3):
    d = CDigraph(3, gf3, {(0, 1): 1, (1, 0): 2, (2, 0): 1})
    a = adjacency_matrix_directed(d)
    assert a.tolist() == [[0, 1, 0], [2, 0, 0], [1, 0, 0]]
    assert from_matrix_directed(a, gf3) == d


def test_incidence_matrix(path3):
    inc = incidence_matrix(path3)
    assert inc.tolist() == [[1, 0], [1, 2], [0, 2]]


def test_color_permutation(gf3):
    swap = ColorPermutation(gf3, (0, 2, 1))
    assert swap(1) == 2
    assert swap.fixes_white()
    assert swap.compose(swap) == ColorPermutation.identity(gf3)
    rotate = ColorPermutation(gf3, (1, 2, 0))
    assert rotate.inverse().images == (2, 0, 1)
    assert ColorPermutation.fixing_white(gf3, {1: 2, 2: 1}) == swap
    with pytest.raises(NotAPermutation):
        ColorPermutation(gf3, (0, 0, 1))
    with pytest.raises(NotAPermutation):
        ColorPermutation.fixing_white(gf3, {1: 0, 0: 1})
    assert len(list(all_color_permutations(gf3))) == 6


def test_pi_complement_recolors_white_pairs(path3, gf3):
    pi = ColorPermutation(gf3, (1, 0, 2))
    h = pi_complement(path3, pi)
    assert h.edges() == [(0, 2, 1), (1, 2, 2)]


def test_pi_complement_composes(gf3, rng):
    perms = list(all_color_permutations(gf3))
    for _ in range(20):
        g = random_cgraph(5, gf3, rng)
        p1, p2 = rng.choice(perms), rng.choice(perms)
        assert pi_complement(pi_complement(g, p1), p2) == pi_complement(g, p2.compose(p1))
        assert pi_complement(pi_complement(g, p1), p1.inverse()) == g


def test_pi_complement_modulus_mismatch(path3, gf5):
    with pytest.raises(ModulusMismatch):
        pi_complement(path3, ColorPermutation.identity(gf5))


def test_pi_complement_directed(gf3):
    d = CDigraph(2, gf3, {(0, 1): 1})
    h = pi_complement_directed(d, ColorPermutation(gf3, (2, 1, 0)))
    assert h.arcs() == [(0, 1, 1), (1, 0, 2)]


def test_are_complements(gf3, rng):
    perms = list(all_color_permutations(gf3))
    for _ in range(20):
        g = random_cgraph(4, gf3, rng)
        h = pi_complement(g, rng.choice(perms))
        pi = are_complements(g, h)
        assert pi is not None
        assert pi_complement(g, pi) == h
    g = CGraph(3, gf3, {(0, 1): 1, (0, 2): 1})
    h = CGraph(3, gf3, {(0, 1): 1, (0, 2): 2})
    assert are_complements(g, h) is None


def test_monochromatic_decomposition_sums_to_adjacency(gf5, rng):
    for _ in range(10):
        g = random_cgraph(6, gf5, rng)
        total = sum(adjacency_matrix(monochromatic_component(g, j)) for j in gf5.visible_colors)
        assert np.array_equal(total, adjacency_matrix(g))


def test_monochromatic_component(mixed4):
    assert monochromatic_component(mixed4, 2).edges() == [(2, 3, 2)]
    with pytest.raises(WhiteColorRequested):
        monochromatic_component(mixed4, 0)


def test_local_predicates(mixed4, gf3):
    assert is_j_complete(subgraph(mixed4, [0, 1, 2]), 1)
    assert not is_j_complete(mixed4, 1)
    assert is_k_independent(mixed4, [0, 3], 1)
    assert not is_k_independent(mixed4, [0, 1, 3], 1)
    assert is_k_independent(mixed4, [0, 1, 3], 0) is False  # 0-3 and 1-3 are white
    assert is_k_independent(mixed4, [], 2)


def test_k_bipartite(gf3):
    k23 = k_complete_bipartite((2, 3), 2, gf3)
    assert k23.m == 5 and k23.edge_count == 6
    assert is_k_bipartite(k23, ({0, 1}, {2, 3, 4}), 2)
    assert not is_k_bipartite(k23, ({0, 2}, {1, 3, 4}), 2)
    assert not is_k_bipartite(k23, ({0, 1}, {2, 3, 4}), 1)
    with pytest.raises(NotAPartition):
        is_k_bipartite(k23, ({0, 1}, {1, 2, 3, 4}), 2)
    with pytest.raises(WhiteColorRequested):
        k_complete_bipartite((1, 1), 0, gf3)


def test_subgraph_relabels(mixed4):
    h = subgraph(mixed4, [3, 2, 0])
    assert h.m == 3
    assert h.edges() == [(0, 1, 1), (1, 2, 2)]
    assert delete_vertex(mixed4, 1) == h


def test_edge_edits(mixed4):
    g = delete_edge(mixed4, (3, 2))
    assert g.edge_count == 3
    with pytest.raises(EdgeAbsent):
        delete_edge(g, (2, 3))
    assert add_edge(g, (2, 3), 2) == mixed4
    assert add_edge(mixed4, (0, 1), 0).edge_count == 3
    assert is_subcgraph(g, mixed4)
    assert not is_subcgraph(mixed4, g)


def test_vector_round_trip(gf5, rng):
    g = random_cgraph(5, gf5, rng)
    v = to_vector(g)
    assert len(v) == 10
    assert from_vector(v) == g
    with pytest.raises(LengthMismatch):
        from_vector(v, 4)


def test_vector_arithmetic(gf3):
    u = CVector(gf3, 3, (1, 2, 0))
    v = CVector(gf3, 3, (2, 2, 1))
    assert vector_add(u, v).entries == (0, 1, 1)
    assert (u + v) == vector_add(u, v)
    assert scalar_mul(2, u).entries == (2, 1, 0)
    assert (2 * u) == scalar_mul(2, u)
    assert scalar_mul(0, u) == CVector.zero(gf3, 3)
    with pytest.raises(LengthMismatch):
        CVector(gf3, 3, (1, 2))
    with pytest.raises(ModulusMismatch):
        vector_add(u, CVector(make_modulus(5), 3, (1, 1, 1)))


def test_classify_relative_examples(gf3):
    v_g = CVector(gf3, 3, (1, 2, 0))
    assert classify_relative(v_g, CVector.zero(gf3, 3)) is Relation.SUBCGRAPH
    assert classify_relative(v_g, v_g) is Relation.BOTH
    assert classify_relative(v_g, CVector(gf3, 3, (2, 2, 1))) is Relation.SUPERCGRAPH
    assert classify_relative(v_g, CVector(gf3, 3, (2, 1, 0))) is Relation.NEITHER


@pytest.mark.parametrize("p, m", [(2, 3), (3, 3), (5, 3), (3, 4)])
def test_classify_relative_counts(p, m):
    """Subcgraph vectors number prod(c+1); supercgraph vectors prod(p-c)."""
    F = make_modulus(p)
    rng = random.Random(p * 100 + m)
    q = m * (m - 1) // 2
    for _ in range(3):
        v_g = CVector(F, m, tuple(rng.randrange(p) for _ in range(q)))
        tally = {relation: 0 for relation in Relation}
        for entries in itertools.product(range(p), repeat=q):
            tally[classify_relative(v_g, CVector(F, m, entries))] += 1
        both = tally[Relation.BOTH]
        assert both == 1
        assert tally[Relation.SUBCGRAPH] + both == int(np.prod([c + 1 for c in v_g.entries]))
        assert tally[Relation.SUPERCGRAPH] + both == int(np.prod([p - c for c in v_g.entries]))
        assert sum(tally.values()) == p ** q


def test_random_cgraph_is_reproducible(gf3):
    a = random_cgraph(6, gf3, random.Random(1))
    b = random_cgraph(6, gf3, random.Random(1))
    assert a == b
    sparse = random_cgraph(8, gf3, random.Random(1), density=0.0)
    assert sparse.edge_count == 0
    dense = random_cgraph(8, gf3, random.Random(1), density=1.0)
    assert dense.edge_count == 28


def test_vector_space_axioms(rng):
    for _ in range(10_000):
        F = make_modulus(rng.choice((2, 3, 5, 7)))
        m = rng.randrange(2, 6)
        q = m * (m - 1) // 2
        u, v, w = (CVector(F, m, tuple(rng.randrange(F.p) for _ in range(q))) for _ in range(3))
        a, b = rng.randrange(F.p), rng.randrange(F.p)
        zero = CVector.zero(F, m)
        assert (u + v) + w == u + (v + w)
        assert u + v == v + u
        assert u + zero == u
        assert u + scalar_mul(F.p - 1, u) == zero
        assert scalar_mul(a, u + v) == scalar_mul(a, u) + scalar_mul(a, v)
        assert scalar_mul((a + b) % F.p, u) == scalar_mul(a, u) + scalar_mul(b, u)
        assert scalar_mul(a * b % F.p, u) == scalar_mul(a, scalar_mul(b, u))
        assert scalar_mul(1, u) == u
