"""Cisomorphism, canonical codes and cautomorphism groups.

Canonical codes are exact: the code of a cgraph is the lexicographically
least row-major upper-triangle color string over all vertex relabelings.
"""
import logging
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from config import get_settings
from core import (
    CGraph,
    ColorPermutation,
    adjacency_matrix,
    induced_pair_permutation,
    pair_count,
    pair_order,
    pi_complement,
)
from field import Modulus
from exceptions import (
    BudgetExceeded,
    CGraphParseError,
    ModulusMismatch,
    NotAPermutation,
    SizeMismatch,
    TooLarge,
)
from utils import timed

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection i -> images[i] on the vertices 0..m-1."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise NotAPermutation(f"{list(images)} is not a permutation of 0..{len(images) - 1}")

    @classmethod
    def identity(cls, m: int) -> "VertexPermutation":
        return cls(tuple(range(m)))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "VertexPermutation":
        inverse = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inverse[image] = i
        return VertexPermutation(tuple(inverse))

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """``self ∘ other``: apply ``other`` first."""
        if other.m != self.m:
            raise SizeMismatch(f"permutations on {self.m} and {other.m} points")
        return VertexPermutation(tuple(self.images[i] for i in other.images))

    def matrix(self) -> np.ndarray:
        """Permutation matrix M with M[sigma(i), i] = 1."""
        M = np.zeros((self.m, self.m), dtype=np.int64)
        M[list(self.images), list(range(self.m))] = 1
        return M


@dataclass(frozen=True, order=True)
class CanonicalCode:
    p: int
    m: int
    colors: Tuple[int, ...]

    def __str__(self) -> str:
        if self.p <= 10:
            return "".join(str(c) for c in self.colors)
        return ".".join(str(c) for c in self.colors)

    @classmethod
    def from_text(cls, p: int, m: int, text: str) -> "CanonicalCode":
        if p <= 10:
            parts = list(text)
        else:
            parts = text.split(".") if text else []
        try:
            colors = tuple(int(c) for c in parts)
        except ValueError:
            raise CGraphParseError(f"malformed canonical code {text!r}")
        if len(colors) != pair_count(m) or any(not 0 <= c < p for c in colors):
            raise CGraphParseError(f"code {text!r} does not describe {m} vertices over GF({p})")
        return cls(p, m, colors)

    @property
    def edge_count(self) -> int:
        return sum(1 for c in self.colors if c)

    def color_counts(self) -> Tuple[int, ...]:
        """Number of edges of each color 1..p-1."""
        return tuple(self.colors.count(c) for c in range(1, self.p))

    def to_cgraph(self, modulus: Modulus) -> CGraph:
        if modulus.p != self.p:
            raise ModulusMismatch(f"code over GF({self.p}) read with GF({modulus.p})")
        return CGraph(self.m, modulus, dict(zip(pair_order(self.m), self.colors)))


def _check_limit(m: int) -> None:
    limit = get_settings().search_limit
    if m > limit:
        raise TooLarge(f"{m} vertices exceeds the search limit of {limit} (CGRAPH_SEARCH_LIMIT)")


def apply_vertex_perm(g: CGraph, sigma: VertexPermutation) -> CGraph:
    """Pair {sigma(i), sigma(j)} receives the color of {i, j}."""
    if sigma.m != g.m:
        raise SizeMismatch(f"permutation on {sigma.m} points applied to {g.m} vertices")
    return CGraph(g.m, g.modulus, {(sigma(i), sigma(j)): c for i, j, c in g.edges()})


# Canonical form

Cells = Tuple[FrozenSet[int], ...]


def canonical_labeling(g: CGraph) -> Tuple[CanonicalCode, Tuple[int, ...]]:
    """Canonical code and the vertex order that realizes it.

    Vertices are placed one position at a time. Placing ``v`` fixes its row
    of the upper triangle once the remaining vertices are sorted, cell by
    cell, by their color to ``v``; only placements with the least row are
    explored, and the search is memoized on the ordered cells left over.
    """
    _check_limit(g.m)
    a = adjacency_matrix(g).tolist()
    memo: Dict[Cells, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}

    def best(cells: Cells) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        if not cells:
            return (), ()
        if cells in memo:
            return memo[cells]
        best_row = None
        candidates = []
        for v in sorted(cells[0]):
            row: List[int] = []
            rest: List[FrozenSet[int]] = []
            for cell in cells:
                groups: Dict[int, List[int]] = {}
                for u in cell:
                    if u != v:
                        groups.setdefault(a[v][u], []).append(u)
                for color in sorted(groups):
                    rest.append(frozenset(groups[color]))
                    row.extend([color] * len(groups[color]))
            row_key = tuple(row)
            if best_row is None or row_key < best_row:
                best_row, candidates = row_key, [(v, tuple(rest))]
            elif row_key == best_row:
                candidates.append((v, tuple(rest)))
        result = None
        for v, rest in candidates:
            suffix, order = best(rest)
            key = (suffix, (v,) + order)
            if result is None or key < result:
                result = key
        value = (best_row + result[0], result[1])
        memo[cells] = value
        return value

    colors, order = best((frozenset(range(g.m)),))
    logger.debug(f"canonical search visited {len(memo)} states for m={g.m}")
    return CanonicalCode(g.p, g.m, colors), order


def canonical_code(g: CGraph) -> CanonicalCode:
    return canonical_labeling(g)[0]


def canonical_form(g: CGraph) -> CGraph:
    """The representative cgraph whose color vector is the canonical code."""
    return canonical_code(g).to_cgraph(g.modulus)


# Witness search

def _vertex_invariants(g: CGraph) -> List[Tuple[int, ...]]:
    a = adjacency_matrix(g)
    return [tuple(sorted(int(c) for k, c in enumerate(a[v]) if k != v)) for v in range(g.m)]


def _witnesses(g: CGraph, h: CGraph) -> Iterator[VertexPermutation]:
    """Every sigma: V(h) -> V(g) with g = apply_vertex_perm(h, sigma), in lexicographic order."""
    m = g.m
    inv_g, inv_h = _vertex_invariants(g), _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return
    a_g = adjacency_matrix(g).tolist()
    a_h = adjacency_matrix(h).tolist()
    sigma = [-1] * m
    used = [False] * m

    def extend(i: int) -> Iterator[VertexPermutation]:
        if i == m:
            yield VertexPermutation(tuple(sigma))
            return
        for t in range(m):
            if used[t] or inv_g[t] != inv_h[i]:
                continue
            if any(a_g[t][sigma[k]] != a_h[i][k] for k in range(i)):
                continue
            sigma[i], used[t] = t, True
            yield from extend(i + 1)
            sigma[i], used[t] = -1, False

    yield from extend(0)


def cisomorphic(g: CGraph, h: CGraph) -> Optional[VertexPermutation]:
    """Lexicographically least sigma with A(g) = M A(h) M^T, or None."""
    if g.modulus != h.modulus:
        raise ModulusMismatch("cgraphs over different fields")
    _check_limit(max(g.m, h.m))
    if g.m != h.m or g.edge_count != h.edge_count:
        return None
    return next(_witnesses(g, h), None)


def verify_witness(g: CGraph, h: CGraph, sigma: VertexPermutation) -> bool:
    """Matrix form of the witness condition, checked over GF(p)."""
    if sigma.m != g.m or g.m != h.m:
        return False
    M = sigma.matrix()
    return np.array_equal(adjacency_matrix(g), (M @ adjacency_matrix(h) @ M.T) % g.p)


def cautomorphisms(g: CGraph) -> List[VertexPermutation]:
    """The full cautomorphism group, sorted lexicographically."""
    _check_limit(g.m)
    return list(_witnesses(g, g))


def complement_commutes_check(g: CGraph, h: CGraph, pi: ColorPermutation) -> bool:
    """Whether g ≅ h exactly when pi(g) ≅ pi(h)."""
    before = cisomorphic(g, h) is not None
    after = cisomorphic(pi_complement(g, pi), pi_complement(h, pi)) is not None
    if before != after:
        logger.error(f"complement commutation failed for {g} / {h} under {pi.images}")
    return before == after


# Census of labeled cgraphs

def _check_census_budget(n: int, modulus: Modulus) -> int:
    size = modulus.p ** pair_count(n)
    budget = get_settings().census_budget
    if size > budget:
        raise BudgetExceeded(
            f"census of {size} labeled cgraphs (n={n}, p={modulus.p}) exceeds "
            f"budget {budget} (CGRAPH_CENSUS_BUDGET)"
        )
    return size


def labeled_cgraphs(n: int, modulus: Modulus) -> Iterator[CGraph]:
    """Every labeled cgraph on n vertices, in lexicographic vector order."""
    _check_census_budget(n, modulus)
    pairs = pair_order(n)
    for colors in itertools.product(modulus.colors, repeat=len(pairs)):
        yield CGraph(n, modulus, dict(zip(pairs, colors)))


@timed
def census_codes(n: int, modulus: Modulus) -> List[CanonicalCode]:
    """Canonical codes of all cisomorphism classes on n vertices, sorted.

    Labeled cgraphs are indexed as base-p numbers in pair order. Sweeping the
    indices upward, the first unseen index of each orbit is its least member,
    so it is the class's canonical code; the whole orbit is then marked seen.
    """
    if n < 1:
        raise SizeMismatch(f"census needs at least one vertex, got {n}")
    size = _check_census_budget(n, modulus)
    p, q = modulus.p, pair_count(n)
    if q == 0:
        return [CanonicalCode(p, n, ())]
    perms = np.array(
        [induced_pair_permutation(s) for s in itertools.permutations(range(n))], dtype=np.int64
    )
    rows = np.arange(len(perms))[:, None]
    weights = np.array([p ** (q - 1 - k) for k in range(q)], dtype=np.int64)
    seen = np.zeros(size, dtype=bool)
    codes = []
    for index in range(size):
        if seen[index]:
            continue
        digits = []
        rest = index
        for _ in range(q):
            rest, digit = divmod(rest, p)
            digits.append(digit)
        vector = np.array(digits[::-1], dtype=np.int64)
        images = np.empty((len(perms), q), dtype=np.int64)
        images[rows, perms] = vector
        seen[images @ weights] = True
        codes.append(CanonicalCode(p, n, tuple(int(c) for c in vector)))
    logger.info(f"census n={n} p={p}: {size} labeled cgraphs, {len(codes)} classes")
    return codes
