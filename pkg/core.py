"""The cgraph / cdigraph data model.

A cgraph on ``m`` vertices stores one GF(p) color per unordered vertex pair.
Color 0 is white and means "no edge"; white entries are never stored.
Vertices are the integers ``0..m-1``.
"""
import enum
import random
import logging
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from field import ColorLike, FieldElement, Modulus, color_value
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

# Configure logging
logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Edge = Tuple[int, int, int]


# Pair order

@lru_cache(maxsize=None)
def pair_order(m: int) -> Tuple[Pair, ...]:
    """Lexicographic order (0,1), (0,2), ..., (m-2, m-1) of unordered pairs."""
    return tuple(itertools.combinations(range(m), 2))


@lru_cache(maxsize=None)
def pair_index(m: int) -> Dict[Pair, int]:
    return {pair: k for k, pair in enumerate(pair_order(m))}


def pair_count(m: int) -> int:
    return m * (m - 1) // 2


def induced_pair_permutation(sigma: Sequence[int]) -> Tuple[int, ...]:
    """Permutation of pair positions induced by a vertex permutation.

    Entry ``k`` is the position of the pair ``{sigma(i), sigma(j)}`` where
    ``(i, j)`` is the pair at position ``k``.
    """
    m = len(sigma)
    index = pair_index(m)
    images = []
    for i, j in pair_order(m):
        a, b = sigma[i], sigma[j]
        images.append(index[(a, b) if a < b else (b, a)])
    return tuple(images)


def _normalize_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


# Cgraphs

class CGraph:
    """Simple edge-colored graph over GF(p). Immutable."""

    __slots__ = ("_m", "_modulus", "_colors", "_hash")

    def __init__(
        self,
        m: int,
        modulus: Modulus,
        colors: Optional[Mapping[Pair, ColorLike]] = None,
    ):
        if not isinstance(m, int) or m < 1:
            raise InvalidArgs(f"vertex count must be a positive integer, got {m!r}")
        normalized: Dict[Pair, int] = {}
        for (i, j), color in (colors or {}).items():
            if i == j:
                raise InvalidArgs(f"self-loop at vertex {i} is not allowed")
            if not (0 <= i < m and 0 <= j < m):
                raise VertexOutOfRange(f"pair ({i}, {j}) outside 0..{m - 1}")
            key = _normalize_pair(i, j)
            value = color_value(modulus, color)
            if normalized.get(key, value) != value:
                raise InvalidArgs(f"pair {key} given two different colors")
            normalized[key] = value
        self._m = m
        self._modulus = modulus
        self._colors = {k: v for k, v in sorted(normalized.items()) if v}
        self._hash = None

    @property
    def m(self) -> int:
        return self._m

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    @property
    def p(self) -> int:
        return self._modulus.p

    def color(self, i: int, j: int) -> int:
        check_vertex(self, i)
        check_vertex(self, j)
        if i == j:
            return 0
        return self._colors.get(_normalize_pair(i, j), 0)

    def color_element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.color(i, j), self._modulus)

    def edges(self) -> List[Edge]:
        """Non-white edges ``(u, v, color)`` with u < v, sorted."""
        return [(i, j, c) for (i, j), c in self._colors.items()]

    def color_map(self) -> Dict[Pair, int]:
        return dict(self._colors)

    @property
    def edge_count(self) -> int:
        return len(self._colors)

    def neighbors(self, v: int) -> List[Tuple[int, int]]:
        """``(u, color)`` for every non-white pair at ``v``, by ascending ``u``."""
        check_vertex(self, v)
        found = []
        for u in range(self._m):
            if u != v:
                c = self._colors.get(_normalize_pair(u, v), 0)
                if c:
                    found.append((u, c))
        return found

    def color_vector(self) -> Tuple[int, ...]:
        """Colors of all pairs in lexicographic pair order."""
        return tuple(self._colors.get(pair, 0) for pair in pair_order(self._m))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CGraph):
            return NotImplemented
        return (
            self._m == other._m
            and self._modulus == other._modulus
            and self._colors == other._colors
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, self._modulus.p, tuple(self._colors.items())))
        return self._hash

    def __repr__(self):
        edges = ", ".join(f"{i}-{j}:{c}" for i, j, c in self.edges())
        return f"CGraph(m={self._m}, p={self.p}, [{edges}])"


class CDigraph:
    """Directed cgraph: one color per ordered pair (i, j), i != j. Immutable."""

    __slots__ = ("_m", "_modulus", "_colors")

    def __init__(
        self,
        m: int,
        modulus: Modulus,
        colors: Optional[Mapping[Pair, ColorLike]] = None,
    ):
        if not isinstance(m, int) or m < 1:
            raise InvalidArgs(f"vertex count must be a positive integer, got {m!r}")
        normalized = {}
        for (i, j), color in (colors or {}).items():
            if i == j:
                raise InvalidArgs(f"self-loop at vertex {i} is not allowed")
            if not (0 <= i < m and 0 <= j < m):
                raise VertexOutOfRange(f"arc ({i}, {j}) outside 0..{m - 1}")
            value = color_value(modulus, color)
            if value:
                normalized[(i, j)] = value
        self._m = m
        self._modulus = modulus
        self._colors = dict(sorted(normalized.items()))

    @property
    def m(self) -> int:
        return self._m

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    def color(self, i: int, j: int) -> int:
        if not (0 <= i < self._m and 0 <= j < self._m):
            raise VertexOutOfRange(f"arc ({i}, {j}) outside 0..{self._m - 1}")
        return self._colors.get((i, j), 0)

    def arcs(self) -> List[Edge]:
        return [(i, j, c) for (i, j), c in self._colors.items()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CDigraph):
            return NotImplemented
        return (
            self._m == other._m
            and self._modulus == other._modulus
            and self._colors == other._colors
        )

    def __hash__(self) -> int:
        return hash((self._m, self._modulus.p, tuple(self._colors.items())))

    def __repr__(self):
        arcs = ", ".join(f"{i}->{j}:{c}" for i, j, c in self.arcs())
        return f"CDigraph(m={self._m}, p={self._modulus.p}, [{arcs}])"


def check_vertex(g, v: int) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < g.m:
        raise VertexOutOfRange(f"vertex {v!r} outside 0..{g.m - 1}")


def _check_vertex_set(g: CGraph, s: Iterable[int]) -> List[int]:
    vertices = sorted(set(s))
    for v in vertices:
        check_vertex(g, v)
    return vertices


def _visible_color(g, j: ColorLike) -> int:
    value = color_value(g.modulus, j)
    if value == 0:
        raise WhiteColorRequested()
    return value


# Matrices

def adjacency_matrix(g: CGraph) -> np.ndarray:
    """Symmetric m x m color matrix A(G) with zero diagonal (read-only)."""
    a = np.zeros((g.m, g.m), dtype=np.int64)
    for i, j, c in g.edges():
        a[i, j] = a[j, i] = c
    a.setflags(write=False)
    return a


def adjacency_matrix_directed(d: CDigraph) -> np.ndarray:
    a = np.zeros((d.m, d.m), dtype=np.int64)
    for i, j, c in d.arcs():
        a[i, j] = c
    a.setflags(write=False)
    return a


def _validate_square(a: np.ndarray, modulus: Modulus) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidMatrix(f"expected a non-empty square matrix, got shape {a.shape}")
    if np.any(np.diagonal(a) != 0):
        raise InvalidMatrix("diagonal must be zero (no self-loops)")
    if np.any(a < 0) or np.any(a >= modulus.p):
        raise InvalidMatrix(f"entries must lie in 0..{modulus.p - 1}")
    return a


def from_matrix(a: np.ndarray, modulus: Modulus) -> CGraph:
    a = _validate_square(a, modulus)
    if not np.array_equal(a, a.T):
        raise InvalidMatrix("adjacency matrix of a cgraph must be symmetric")
    m = a.shape[0]
    return CGraph(m, modulus, {(i, j): int(a[i, j]) for i, j in pair_order(m)})


def from_matrix_directed(a: np.ndarray, modulus: Modulus) -> CDigraph:
    a = _validate_square(a, modulus)
    m = a.shape[0]
    return CDigraph(
        m, modulus, {(i, j): int(a[i, j]) for i in range(m) for j in range(m) if i != j}
    )


def incidence_matrix(g: CGraph) -> np.ndarray:
    """m x e matrix I(G): column k is the k-th non-white edge, carrying its
    color at both endpoints."""
    edges = g.edges()
    inc = np.zeros((g.m, len(edges)), dtype=np.int64)
    for k, (i, j, c) in enumerate(edges):
        inc[i, k] = inc[j, k] = c
    inc.setflags(write=False)
    return inc


# Color permutations and pi-complements

@dataclass(frozen=True)
class ColorPermutation:
    modulus: Modulus
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(self.modulus.p)):
            raise NotAPermutation(
                f"{list(images)} is not a permutation of 0..{self.modulus.p - 1}"
            )

    @classmethod
    def identity(cls, modulus: Modulus) -> "ColorPermutation":
        return cls(modulus, tuple(range(modulus.p)))

    @classmethod
    def fixing_white(cls, modulus: Modulus, mapping: Mapping[int, int]) -> "ColorPermutation":
        """Permutation with pi(0) = 0 that sends ``c -> mapping.get(c, c)``."""
        if mapping.get(0, 0) != 0 or any(c != 0 and image == 0 for c, image in mapping.items()):
            raise NotAPermutation("a white-preserving permutation must fix 0")
        return cls(modulus, tuple(mapping.get(c, c) for c in range(modulus.p)))

    def __call__(self, color: ColorLike) -> int:
        return self.images[color_value(self.modulus, color)]

    def inverse(self) -> "ColorPermutation":
        inverse = [0] * len(self.images)
        for c, image in enumerate(self.images):
            inverse[image] = c
        return ColorPermutation(self.modulus, tuple(inverse))

    def compose(self, other: "ColorPermutation") -> "ColorPermutation":
        """``self ∘ other``: apply ``other`` first."""
        if other.modulus != self.modulus:
            raise ModulusMismatch("color permutations over different fields")
        return ColorPermutation(self.modulus, tuple(self.images[c] for c in other.images))

    def fixes_white(self) -> bool:
        return self.images[0] == 0


def all_color_permutations(modulus: Modulus) -> Iterable[ColorPermutation]:
    """The complementomorphism group S_p, in lexicographic order."""
    for images in itertools.permutations(range(modulus.p)):
        yield ColorPermutation(modulus, images)


def pi_complement(g: CGraph, pi: ColorPermutation) -> CGraph:
    """Recolor every pair, white included, from color j to pi(j)."""
    if pi.modulus != g.modulus:
        raise ModulusMismatch("permutation and cgraph use different fields")
    return CGraph(
        g.m,
        g.modulus,
        {(i, j): pi.images[g.color(i, j)] for i, j in pair_order(g.m)},
    )


def pi_complement_directed(d: CDigraph, pi: ColorPermutation) -> CDigraph:
    if pi.modulus != d.modulus:
        raise ModulusMismatch("permutation and cdigraph use different fields")
    return CDigraph(
        d.m,
        d.modulus,
        {
            (i, j): pi.images[d.color(i, j)]
            for i in range(d.m)
            for j in range(d.m)
            if i != j
        },
    )


def are_complements(g: CGraph, h: CGraph) -> Optional[ColorPermutation]:
    """Lexicographically least pi with pi(g) = h as labeled cgraphs, or None."""
    if g.modulus != h.modulus:
        raise ModulusMismatch("cgraphs over different fields")
    if g.m != h.m:
        return None
    forced: Dict[int, int] = {}
    for i, j in pair_order(g.m):
        a, b = g.color(i, j), h.color(i, j)
        if forced.setdefault(a, b) != b:
            return None
    if len(set(forced.values())) != len(forced):
        return None
    free_images = iter(sorted(set(g.modulus.colors) - set(forced.values())))
    images = tuple(
        forced[c] if c in forced else next(free_images) for c in g.modulus.colors
    )
    return ColorPermutation(g.modulus, images)


# Local predicates

def monochromatic_component(g: CGraph, j: ColorLike) -> CGraph:
    """G_j: the j-colored edges of g on the same vertex set."""
    value = _visible_color(g, j)
    return CGraph(g.m, g.modulus, {(u, v): c for u, v, c in g.edges() if c == value})


def degree(g: CGraph, v: int) -> int:
    return len(g.neighbors(v))


def is_j_complete(g: CGraph, j: ColorLike) -> bool:
    value = _visible_color(g, j)
    return all(g.color(u, v) == value for u, v in pair_order(g.m))


def is_k_independent(g: CGraph, s: Iterable[int], k: ColorLike) -> bool:
    value = color_value(g.modulus, k)
    vertices = _check_vertex_set(g, s)
    return all(g.color(u, v) != value for u, v in itertools.combinations(vertices, 2))


def _check_partition(g: CGraph, parts: Tuple[Iterable[int], Iterable[int]]) -> Tuple[set, set]:
    if len(parts) != 2:
        raise NotAPartition("expected exactly two parts")
    left, right = set(parts[0]), set(parts[1])
    for v in left | right:
        check_vertex(g, v)
    if left & right or left | right != set(range(g.m)):
        raise NotAPartition(f"{sorted(left)} / {sorted(right)} is not a partition of the vertices")
    return left, right


def is_k_bipartite(g: CGraph, parts: Tuple[Iterable[int], Iterable[int]], k: ColorLike) -> bool:
    """At least one k-edge crosses the parts and none lies inside a part."""
    left, right = _check_partition(g, parts)
    value = _visible_color(g, k)
    crossing = False
    for u, v, c in g.edges():
        if c != value:
            continue
        if (u in left) == (v in left):
            return False
        crossing = True
    return crossing


def k_complete_bipartite(sizes: Tuple[int, int], k: ColorLike, modulus: Modulus) -> CGraph:
    """Vertices 0..a-1 against a..a+b-1, every cross pair colored k."""
    a, b = sizes
    if a < 1 or b < 1:
        raise InvalidArgs(f"part sizes must be positive, got {sizes}")
    value = color_value(modulus, k)
    if value == 0:
        raise WhiteColorRequested()
    return CGraph(a + b, modulus, {(u, v): value for u in range(a) for v in range(a, a + b)})


# Subcgraphs

def subgraph(g: CGraph, s: Iterable[int]) -> CGraph:
    """Induced subcgraph on ``s``, relabeled 0..|s|-1 in ascending order."""
    vertices = _check_vertex_set(g, s)
    if not vertices:
        raise InvalidArgs("induced subcgraph needs at least one vertex")
    relabel = {v: k for k, v in enumerate(vertices)}
    return CGraph(
        len(vertices),
        g.modulus,
        {(relabel[u], relabel[v]): c for u, v, c in g.edges() if u in relabel and v in relabel},
    )


def delete_vertex(g: CGraph, v: int) -> CGraph:
    check_vertex(g, v)
    return subgraph(g, [u for u in range(g.m) if u != v])


def delete_edge(g: CGraph, pair: Pair) -> CGraph:
    u, v = pair
    if g.color(u, v) == 0:
        raise EdgeAbsent(f"pair ({u}, {v}) carries no colored edge")
    colors = g.color_map()
    del colors[_normalize_pair(u, v)]
    return CGraph(g.m, g.modulus, colors)


def add_edge(g: CGraph, pair: Pair, color: ColorLike) -> CGraph:
    """Copy of g with ``pair`` recolored (color 0 removes the edge)."""
    u, v = pair
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        raise InvalidArgs(f"self-loop at vertex {u} is not allowed")
    colors = g.color_map()
    colors[_normalize_pair(u, v)] = color_value(g.modulus, color)
    return CGraph(g.m, g.modulus, colors)


def is_subcgraph(h: CGraph, g: CGraph) -> bool:
    """Every colored edge of h appears in g with the same color."""
    if h.modulus != g.modulus:
        raise ModulusMismatch("cgraphs over different fields")
    if h.m > g.m:
        return False
    return all(g.color(u, v) == c for u, v, c in h.edges())


# The vector space GF(p)^q

class Relation(str, enum.Enum):
    SUBCGRAPH = "subcgraph"
    SUPERCGRAPH = "supercgraph"
    NEITHER = "neither"
    BOTH = "both"


@dataclass(frozen=True)
class CVector:
    modulus: Modulus
    m: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(c) for c in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != pair_count(self.m):
            raise LengthMismatch(
                f"vector of length {len(entries)} does not describe {self.m} vertices "
                f"({pair_count(self.m)} pairs)"
            )
        if any(not 0 <= c < self.modulus.p for c in entries):
            raise InvalidArgs(f"vector entries must lie in 0..{self.modulus.p - 1}")

    @classmethod
    def zero(cls, modulus: Modulus, m: int) -> "CVector":
        return cls(modulus, m, (0,) * pair_count(m))

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "CVector") -> "CVector":
        return vector_add(self, other)

    def __rmul__(self, scalar: ColorLike) -> "CVector":
        return scalar_mul(scalar, self)


def to_vector(g: CGraph) -> CVector:
    return CVector(g.modulus, g.m, g.color_vector())


def from_vector(v: CVector, m: Optional[int] = None) -> CGraph:
    if m is not None and pair_count(m) != len(v.entries):
        raise LengthMismatch(f"vector of length {len(v.entries)} does not fit {m} vertices")
    m = v.m if m is None else m
    return CGraph(m, v.modulus, dict(zip(pair_order(m), v.entries)))


def _check_compatible(u: CVector, v: CVector) -> None:
    if len(u.entries) != len(v.entries):
        raise LengthMismatch(f"vectors of length {len(u.entries)} and {len(v.entries)}")
    if u.modulus != v.modulus:
        raise ModulusMismatch("vectors over different fields")


def vector_add(u: CVector, v: CVector) -> CVector:
    _check_compatible(u, v)
    p = u.modulus.p
    return CVector(u.modulus, u.m, tuple((a + b) % p for a, b in zip(u.entries, v.entries)))


def scalar_mul(c: ColorLike, v: CVector) -> CVector:
    scalar = color_value(v.modulus, c)
    p = v.modulus.p
    return CVector(v.modulus, v.m, tuple(scalar * a % p for a in v.entries))


def classify_relative(v_g: CVector, w: CVector) -> Relation:
    """Place w relative to v_g under the representative order 0 < 1 < ... < p-1."""
    _check_compatible(v_g, w)
    below = all(b <= a for a, b in zip(v_g.entries, w.entries))
    above = all(a <= b for a, b in zip(v_g.entries, w.entries))
    if below and above:
        return Relation.BOTH
    if below:
        return Relation.SUBCGRAPH
    if above:
        return Relation.SUPERCGRAPH
    return Relation.NEITHER


# Sampling

def random_cgraph(
    m: int,
    modulus: Modulus,
    rng: Optional[random.Random] = None,
    density: Optional[float] = None,
) -> CGraph:
    """Random cgraph; with ``density`` set, each pair is colored (uniformly
    among 1..p-1) with that probability, otherwise colors are uniform on 0..p-1."""
    rng = rng or random.Random()
    colors = {}
    for pair in pair_order(m):
        if density is None:
            colors[pair] = rng.randrange(modulus.p)
        elif rng.random() < density:
            colors[pair] = rng.randrange(1, modulus.p)
    return CGraph(m, modulus, colors)
