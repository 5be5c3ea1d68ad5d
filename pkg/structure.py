"""Paths, cycles and connectivity of cgraphs.

Multicolored notions treat every non-white pair as an edge; the k-/j-
variants only follow edges of one color.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from core import CGraph, check_vertex, degree
from field import ColorLike, color_value
from exceptions import InvalidArgs, PreconditionViolated, WhiteColorRequested

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KPath:
    """A k-path (or, with ``closed``, a k-cycle) as an ordered vertex list."""

    color: int
    vertices: Tuple[int, ...]
    closed: bool = False

    def steps(self) -> List[Tuple[int, int]]:
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs

    def is_valid_in(self, g: CGraph) -> bool:
        if not self.vertices or len(set(self.vertices)) != len(self.vertices):
            return False
        if any(not 0 <= v < g.m for v in self.vertices):
            return False
        if self.closed and len(self.vertices) < 3:
            return False
        return all(g.color(u, v) == self.color for u, v in self.steps())


@dataclass(frozen=True)
class ColoredPath:
    """A path of non-white edges whose colors may vary along the way."""

    vertices: Tuple[int, ...]
    colors: Tuple[int, ...]

    def is_valid_in(self, g: CGraph) -> bool:
        if not self.vertices or len(set(self.vertices)) != len(self.vertices):
            return False
        if len(self.colors) != len(self.vertices) - 1:
            return False
        return all(
            c != 0 and g.color(u, v) == c
            for (u, v), c in zip(zip(self.vertices, self.vertices[1:]), self.colors)
        )


@dataclass(frozen=True)
class ComponentPartition:
    blocks: Tuple[FrozenSet[int], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> FrozenSet[int]:
        for block in self.blocks:
            if v in block:
                return block
        raise InvalidArgs(f"vertex {v} is not covered by the partition")


def _visible(g: CGraph, k: ColorLike) -> int:
    value = color_value(g.modulus, k)
    if value == 0:
        raise WhiteColorRequested()
    return value


def to_networkx(g: CGraph, color: Optional[int] = None) -> nx.Graph:
    """All vertices, with the non-white edges (or only those of ``color``)."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.m))
    for u, v, c in g.edges():
        if color is None or c == color:
            graph.add_edge(u, v, color=c)
    return graph


def components(g: CGraph) -> ComponentPartition:
    blocks = [frozenset(block) for block in nx.connected_components(to_networkx(g))]
    return ComponentPartition(tuple(sorted(blocks, key=min)))


def is_connected(g: CGraph) -> bool:
    return len(components(g)) == 1


def disconnecting_partition(g: CGraph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Two nonempty parts with no colored edge between them, or None if g is connected."""
    blocks = components(g).blocks
    if len(blocks) < 2:
        return None
    first = blocks[0]
    return first, frozenset(range(g.m)) - first


def find_k_path(g: CGraph, k: ColorLike, s: int, t: int) -> Optional[KPath]:
    """A shortest path from s to t using only k-colored edges."""
    color = _visible(g, k)
    check_vertex(g, s)
    check_vertex(g, t)
    try:
        vertices = nx.shortest_path(to_networkx(g, color), s, t)
    except nx.NetworkXNoPath:
        return None
    return KPath(color, tuple(vertices))


def _rotate_cycle(cycle: List[int]) -> Tuple[int, ...]:
    """Start at the least vertex and walk toward its smaller neighbour."""
    start = cycle.index(min(cycle))
    forward = cycle[start:] + cycle[:start]
    backward = [forward[0]] + forward[1:][::-1]
    return tuple(min(forward, backward))


def find_k_cycle(g: CGraph, k: ColorLike) -> Optional[KPath]:
    """A shortest k-cycle; ties go to the lexicographically least vertex sequence."""
    color = _visible(g, k)
    graph = to_networkx(g, color)
    best: Optional[Tuple[int, ...]] = None
    for u, v in sorted(graph.edges()):
        graph.remove_edge(u, v)
        if nx.has_path(graph, u, v):
            for path in nx.all_shortest_paths(graph, u, v):
                if len(path) < 3:
                    continue
                candidate = _rotate_cycle(path)
                if best is None or (len(candidate), candidate) < (len(best), best):
                    best = candidate
        graph.add_edge(u, v, color=color)
    if best is None:
        return None
    logger.debug(f"shortest {color}-cycle has length {len(best)}")
    return KPath(color, best, closed=True)


def is_j_connected(g: CGraph, j: ColorLike) -> bool:
    color = _visible(g, j)
    return nx.is_connected(to_networkx(g, color))


def spanning_j_tree(g: CGraph, j: ColorLike) -> Optional[List[Tuple[int, int]]]:
    """Edges of a BFS spanning tree of j-colored edges rooted at 0, or None."""
    color = _visible(g, j)
    graph = to_networkx(g, color)
    if not nx.is_connected(graph):
        return None
    return sorted(tuple(sorted(edge)) for edge in nx.bfs_edges(graph, 0))


def odd_degree_vertices(g: CGraph) -> List[int]:
    return [v for v in range(g.m) if degree(g, v) % 2 == 1]


def odd_degree_path(g: CGraph) -> ColoredPath:
    """The multicolored path joining the two odd-degree vertices."""
    odd = odd_degree_vertices(g)
    if len(odd) != 2:
        raise PreconditionViolated(f"expected exactly two odd-degree vertices, found {len(odd)}")
    s, t = odd
    graph = to_networkx(g)
    # both odd vertices share a component, so a path always exists
    vertices = nx.shortest_path(graph, s, t)
    colors = tuple(graph.edges[u, v]["color"] for u, v in zip(vertices, vertices[1:]))
    return ColoredPath(tuple(vertices), colors)


def max_colored_edges(n: int, k: int) -> int:
    """Upper bound (n-k)(n-k+1)/2 on colored edges with n vertices and k components."""
    if not 1 <= k <= n:
        raise InvalidArgs(f"need 1 <= k <= n, got n={n}, k={k}")
    return (n - k) * (n - k + 1) // 2
