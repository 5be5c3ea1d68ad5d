"""Two applications of colored edges: job assignment and tight packings of
complete cgraphs coming from projective planes of prime order.

Assignment colors are job indices 1..m and plane colors are line indices
1..N; both are plain integers that may exceed p-1, so neither is tied to a
field until a cgraph is explicitly requested.
"""
import math
import logging
import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Protocol, Sequence, Tuple

import numpy as np
import sympy as sp

from core import CGraph, Pair, pair_order
from field import Modulus, make_modulus
from exceptions import (
    ColorConventionViolated,
    InvalidArgs,
    NotAPartition,
    NotBipartite,
    NotSquare,
)
from utils import timed

# Configure logging
logger = logging.getLogger(__name__)

# Padding entry: a dummy person can take any job, a dummy job absorbs anyone.
WILDCARD = -1


class ColoredGraph(Protocol):
    m: int

    def color(self, i: int, j: int) -> int: ...

    def edges(self) -> List[Tuple[int, int, int]]: ...


# Job assignment

@dataclass(frozen=True)
class AssignmentMatrix:
    """Persons x jobs; entry (u, v) is v+1 when person u can do job v, else 0."""

    entries: Tuple[Tuple[int, ...], ...]
    dummy_persons: FrozenSet[int] = frozenset()
    dummy_jobs: FrozenSet[int] = frozenset()

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries or not entries[0]:
            raise InvalidArgs("assignment matrix must have at least one person and one job")
        if any(len(row) != len(entries[0]) for row in entries):
            raise InvalidArgs("assignment matrix rows differ in length")
        for u, row in enumerate(entries):
            for v, x in enumerate(row):
                if u in self.dummy_persons or v in self.dummy_jobs:
                    if x != WILDCARD:
                        raise InvalidArgs(f"padding entry ({u}, {v}) must be the wildcard")
                elif x not in (0, v + 1):
                    raise ColorConventionViolated(
                        f"entry ({u + 1}, {v + 1}) is {x}; column {v + 1} only admits {v + 1} or 0"
                    )

    @property
    def persons(self) -> int:
        return len(self.entries)

    @property
    def jobs(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.persons == self.jobs

    @property
    def is_padded(self) -> bool:
        return bool(self.dummy_persons or self.dummy_jobs)

    def support(self) -> np.ndarray:
        """0/1 matrix of usable entries (wildcards count as usable)."""
        return (np.array(self.entries, dtype=np.int64) != 0).astype(np.int64)

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class Assignment:
    """Real person -> job pairs (0-based), plus anyone matched to padding."""

    pairs: Tuple[Tuple[int, int], ...]
    unfilled_persons: Tuple[int, ...] = ()
    unfilled_jobs: Tuple[int, ...] = ()

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def lines(self) -> List[str]:
        out = [f"p{u + 1} j{v + 1}" for u, v in self.pairs]
        out.extend(f"p{u + 1} unfilled" for u in self.unfilled_persons)
        out.extend(f"unfilled j{v + 1}" for v in self.unfilled_jobs)
        return out


def build_assignment_matrix(
    g: CGraph, persons: Iterable[int], jobs: Iterable[int]
) -> AssignmentMatrix:
    """Rows are persons and columns jobs, both in ascending vertex order;
    every edge at the v-th job (1-based) must carry color v."""
    person_list, job_list = sorted(set(persons)), sorted(set(jobs))
    if set(person_list) & set(job_list) or set(person_list) | set(job_list) != set(range(g.m)):
        raise NotAPartition("persons and jobs must partition the vertices")
    if not person_list or not job_list:
        raise NotAPartition("persons and jobs must both be nonempty")
    row_of = {u: k for k, u in enumerate(person_list)}
    col_of = {v: k for k, v in enumerate(job_list)}

    entries = [[0] * len(job_list) for _ in person_list]
    for a, b, c in g.edges():
        if (a in row_of) == (b in row_of):
            raise NotBipartite(f"edge {a}-{b} does not join a person to a job")
        person, job = (a, b) if a in row_of else (b, a)
        index = col_of[job] + 1
        if c != index:
            raise ColorConventionViolated(f"edge at job {index} (vertex {job}) has color {c}")
        entries[row_of[person]][col_of[job]] = index
    return AssignmentMatrix(tuple(tuple(row) for row in entries))


def assignment_graph(M: AssignmentMatrix, modulus: Modulus) -> CGraph:
    """Persons 0..n-1, jobs n..n+m-1; needs p > m so job colors fit the field."""
    if M.is_padded:
        raise InvalidArgs("padded matrices have no cgraph")
    if modulus.p <= M.jobs:
        raise InvalidArgs(f"{M.jobs} job colors do not fit in GF({modulus.p})")
    n = M.persons
    return CGraph(
        n + M.jobs,
        modulus,
        {(u, n + v): x for u, row in enumerate(M.entries) for v, x in enumerate(row) if x},
    )


def pad_to_square(M: AssignmentMatrix) -> AssignmentMatrix:
    """Add wildcard dummy persons (rows) or dummy jobs (columns) until square."""
    if M.is_square:
        return M
    rows = [list(row) for row in M.entries]
    if M.persons < M.jobs:
        dummies = frozenset(range(M.persons, M.jobs))
        rows.extend([WILDCARD] * M.jobs for _ in dummies)
        return AssignmentMatrix(tuple(map(tuple, rows)), dummy_persons=dummies)
    dummies = frozenset(range(M.jobs, M.persons))
    rows = [row + [WILDCARD] * len(dummies) for row in rows]
    return AssignmentMatrix(tuple(map(tuple, rows)), dummy_jobs=dummies)


def _to_assignment(M: AssignmentMatrix, sigma: Sequence[int]) -> Assignment:
    pairs, unfilled_persons, unfilled_jobs = [], [], []
    for u, v in enumerate(sigma):
        if u in M.dummy_persons:
            unfilled_jobs.append(v)
        elif v in M.dummy_jobs:
            unfilled_persons.append(u)
        else:
            pairs.append((u, v))
    return Assignment(tuple(pairs), tuple(unfilled_persons), tuple(sorted(unfilled_jobs)))


def find_assignments(M: AssignmentMatrix, limit: int = 1) -> List[Assignment]:
    """Up to ``limit`` nonzero determinantal monomials, in lexicographic order
    of the permutation, found by backtracking over the nonzero support."""
    if not M.is_square:
        raise NotSquare(f"{M.persons} persons x {M.jobs} jobs; pad the matrix first")
    if limit < 1:
        raise InvalidArgs(f"limit must be at least 1, got {limit}")
    n = M.persons
    options = [[v for v in range(n) if M.entries[u][v] != 0] for u in range(n)]
    found: List[Assignment] = []
    sigma = [-1] * n
    taken = [False] * n

    def extend(u: int) -> bool:
        if u == n:
            found.append(_to_assignment(M, sigma))
            return len(found) >= limit
        for v in options[u]:
            if taken[v]:
                continue
            sigma[u], taken[v] = v, True
            done = extend(u + 1)
            sigma[u], taken[v] = -1, False
            if done:
                return True
        return False

    extend(0)
    logger.debug(f"found {len(found)} assignment(s) for a {n}x{n} matrix")
    return found


# Projective planes and tight packings

@dataclass(frozen=True)
class PlanePacking:
    """PG(2, q) as a coloring of K_N: the pairs on line i get color i + 1."""

    order: int
    points: Tuple[Tuple[int, int, int], ...]
    lines: Tuple[FrozenSet[int], ...]
    colors: Dict[Pair, int] = field(hash=False)

    @property
    def m(self) -> int:
        return len(self.points)

    def color(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self.colors.get((i, j) if i < j else (j, i), 0)

    def edges(self) -> List[Tuple[int, int, int]]:
        return [(u, v, c) for (u, v), c in sorted(self.colors.items())]

    def recolored(self, pair: Pair, color: int) -> "PlanePacking":
        u, v = pair
        colors = dict(self.colors)
        key = (u, v) if u < v else (v, u)
        if color:
            colors[key] = color
        else:
            colors.pop(key, None)
        return PlanePacking(self.order, self.points, self.lines, colors)

    def to_cgraph(self, p: Optional[int] = None) -> CGraph:
        """The packing over GF(p); p defaults to the smallest prime above N."""
        p = int(sp.nextprime(self.m)) if p is None else p
        if p <= self.m:
            raise InvalidArgs(f"{self.m} line colors need a prime above {self.m}, got {p}")
        return CGraph(self.m, make_modulus(p), self.colors)


def _normalized_vectors(q: int) -> List[Tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose first nonzero coordinate is 1."""
    return [
        v
        for v in itertools.product(range(q), repeat=3)
        if any(v) and next(c for c in v if c) == 1
    ]


@timed
def build_projective_plane(q: int) -> PlanePacking:
    """PG(2, q) over GF(q): points are 1-dim subspaces of GF(q)^3 and line i
    is the set of points orthogonal to the i-th normalized vector."""
    make_modulus(q)
    vectors = _normalized_vectors(q)
    n_points = q * q + q + 1
    if len(vectors) != n_points:
        raise ArithmeticError(f"expected {n_points} points, found {len(vectors)}")

    P = np.array(vectors, dtype=np.int64)
    incidence = (P @ P.T) % q == 0
    lines = tuple(frozenset(int(i) for i in np.flatnonzero(incidence[:, k])) for k in range(n_points))

    colors: Dict[Pair, int] = {}
    for index, line in enumerate(lines, start=1):
        for pair in itertools.combinations(sorted(line), 2):
            if pair in colors:
                raise ArithmeticError(f"pair {pair} lies on lines {colors[pair]} and {index}")
            colors[pair] = index
    expected = n_points * math.comb(q + 1, 2)
    if len(colors) != math.comb(n_points, 2) or len(colors) != expected:
        raise ArithmeticError(
            f"lines cover {len(colors)} pairs; C({n_points}, 2) = {math.comb(n_points, 2)}, "
            f"N*C(q+1, 2) = {expected}"
        )
    logger.info(f"built PG(2, {q}): {n_points} points, {n_points} lines of {q + 1}")
    return PlanePacking(q, tuple(vectors), lines, colors)


@dataclass(frozen=True)
class PackingReport:
    passed: bool
    check: Optional[str] = None
    detail: Optional[str] = None

    def lines(self) -> List[str]:
        if self.passed:
            return ["PASS"]
        return [f"FAIL {self.check}: {self.detail}"]


def _color_classes(g: ColoredGraph) -> Dict[int, set]:
    classes: Dict[int, set] = {}
    for u, v, c in g.edges():
        classes.setdefault(c, set()).update((u, v))
    return classes


def verify_packing(pk: ColoredGraph) -> PackingReport:
    """Check no white pairs, that each pair lies in exactly one color class's
    point set, and that each color class is complete on its points."""
    pairs = pair_order(pk.m)
    for u, v in pairs:
        if pk.color(u, v) == 0:
            return PackingReport(False, "no-white", f"pair {u} {v} is white")

    classes = _color_classes(pk)
    for u, v in pairs:
        covering = [c for c, points in classes.items() if u in points and v in points]
        if len(covering) != 1:
            return PackingReport(
                False, "exactly-once", f"pair {u} {v} lies in {len(covering)} color classes"
            )

    counts: Dict[int, int] = {}
    for _, _, c in pk.edges():
        counts[c] = counts.get(c, 0) + 1
    for c in sorted(classes):
        if counts[c] != math.comb(len(classes[c]), 2):
            return PackingReport(
                False,
                "monochromatic-complete",
                f"color {c} has {counts[c]} edges on {len(classes[c])} points",
            )

    for index, line in enumerate(getattr(pk, "lines", ()), start=1):
        if classes.get(index) != set(line):
            return PackingReport(False, "lines", f"line {index} is not the class of color {index}")
    return PackingReport(True)


def check_plane_axioms(pk: PlanePacking) -> PackingReport:
    """q+1 points per line and lines per point; lines meet pairwise in one point."""
    q, lines = pk.order, pk.lines
    for index, line in enumerate(lines, start=1):
        if len(line) != q + 1:
            return PackingReport(False, "line-size", f"line {index} has {len(line)} points")
    for point in range(pk.m):
        through = sum(1 for line in lines if point in line)
        if through != q + 1:
            return PackingReport(False, "point-degree", f"point {point} lies on {through} lines")
    for (a, la), (b, lb) in itertools.combinations(enumerate(lines, start=1), 2):
        if len(la & lb) != 1:
            return PackingReport(False, "intersection", f"lines {a} and {b} share {len(la & lb)} points")
    return PackingReport(True)


class TriangleCensus(NamedTuple):
    total: int
    monochromatic: int
    rainbow: int
    other: int

    def line(self) -> str:
        return f"{self.total} {self.monochromatic} {self.rainbow} {self.other}"


def triangle_census(g: ColoredGraph) -> TriangleCensus:
    """Classify vertex triples whose three pairs are all colored."""
    total = mono = rainbow = 0
    for a, b, c in itertools.combinations(range(g.m), 3):
        colors = (g.color(a, b), g.color(a, c), g.color(b, c))
        if 0 in colors:
            continue
        total += 1
        distinct = len(set(colors))
        if distinct == 1:
            mono += 1
        elif distinct == 3:
            rainbow += 1
    return TriangleCensus(total, mono, rainbow, total - mono - rainbow)


def monochromatic_clique_census(g: ColoredGraph, r: int) -> Dict[int, int]:
    """For every color present, the number of r-sets inducing a complete
    subcgraph of that single color."""
    if r < 2:
        raise InvalidArgs(f"clique size must be at least 2, got {r}")
    by_color: Dict[int, set] = {}
    for u, v, c in g.edges():
        by_color.setdefault(c, set()).add((u, v))
    census = {}
    for c in sorted(by_color):
        edges = by_color[c]
        points = sorted({x for e in edges for x in e})
        census[c] = sum(
            1
            for subset in itertools.combinations(points, r)
            if all(pair in edges for pair in itertools.combinations(subset, 2))
        )
    return census
