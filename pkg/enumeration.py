"""Polya enumeration of unlabeled cgraphs.

The pair group R_n is the action of S_n on unordered vertex pairs. Its cycle
index, with the figure series 1 + x_1 + ... + x_{p-1} substituted, counts
cisomorphism classes by how many edges carry each color.
"""
import math
import logging
import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd
import sympy as sp
from sympy.combinatorics import Permutation

from config import get_settings
from core import induced_pair_permutation, pair_count
from field import Modulus
from iso import census_codes
from exceptions import BudgetExceeded, InvalidArgs, TooLarge
from utils import timed

# Configure logging
logger = logging.getLogger(__name__)

CycleType = Tuple[int, ...]


@dataclass(frozen=True)
class CycleIndex:
    """Z(R_n): cycle types (pair-cycle lengths, descending) with exact weights."""

    n: int
    terms: Dict[CycleType, Fraction] = field(hash=False)

    def exponents(self, cycle_type: CycleType) -> Tuple[int, ...]:
        """Exponent vector (of t_1 .. t_q) for one cycle type."""
        q = pair_count(self.n)
        counts = Counter(cycle_type)
        return tuple(counts.get(k, 0) for k in range(1, q + 1))

    def evaluate(self, value) -> Fraction:
        """Substitute the same value for every t_k."""
        return sum(
            (coeff * Fraction(value) ** len(cycle_type) for cycle_type, coeff in self.terms.items()),
            Fraction(0),
        )

    def ordered_terms(self) -> List[Tuple[CycleType, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: self.exponents(item[0]), reverse=True)

    def lines(self) -> List[str]:
        out = []
        for cycle_type, coeff in self.ordered_terms():
            factors = []
            for k, e in enumerate(self.exponents(cycle_type), start=1):
                if e == 1:
                    factors.append(f"t{k}")
                elif e > 1:
                    factors.append(f"t{k}^{e}")
            out.append(f"{coeff} {' '.join(factors)}")
        return out


@dataclass(frozen=True)
class CountingSeries:
    """Integer polynomial in the color variables x_1 .. x_{p-1}."""

    nvars: int
    terms: Dict[Tuple[int, ...], int] = field(hash=False)

    def coefficient(self, exponents: Tuple[int, ...]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def ordered_terms(self) -> List[Tuple[Tuple[int, ...], int]]:
        """Ascending total degree; descending lexicographic within a degree."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )

    def lines(self) -> List[str]:
        return [
            f"{coeff} {' '.join(str(e) for e in exponents)}"
            for exponents, coeff in self.ordered_terms()
        ]


def _vertex_cycle_type(sigma: Tuple[int, ...]) -> CycleType:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length, v = 0, start
        while not seen[v]:
            seen[v] = True
            v = sigma[v]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _pair_cycle_type(sigma: Tuple[int, ...]) -> CycleType:
    structure = Permutation(list(induced_pair_permutation(sigma))).cycle_structure
    return tuple(sorted(itertools.chain.from_iterable([k] * c for k, c in structure.items()), reverse=True))


@timed
def pair_group_cycle_index(n: int) -> CycleIndex:
    """Z(R_n) by inducing every sigma in S_n on the vertex pairs.

    The pair cycle type only depends on the vertex cycle type of sigma, so
    it is computed once per vertex cycle type and tallied over all of S_n.
    """
    if n < 2:
        raise InvalidArgs(f"the pair group needs at least 2 vertices, got {n}")
    limit = get_settings().search_limit
    if n > limit:
        raise TooLarge(f"S_{n} exceeds the search limit of {limit} (CGRAPH_SEARCH_LIMIT)")

    tally: Counter = Counter()
    pair_types: Dict[CycleType, CycleType] = {}
    for sigma in itertools.permutations(range(n)):
        vertex_type = _vertex_cycle_type(sigma)
        if vertex_type not in pair_types:
            pair_types[vertex_type] = _pair_cycle_type(sigma)
        tally[pair_types[vertex_type]] += 1

    order = math.factorial(n)
    terms = {cycle_type: Fraction(count, order) for cycle_type, count in tally.items()}
    logger.info(f"Z(R_{n}) has {len(terms)} cycle types over {order} permutations")
    return CycleIndex(n, terms)


def figure_series(modulus: Modulus) -> CountingSeries:
    """1 + x_1 + ... + x_{p-1}; the constant term is white."""
    nvars = modulus.p - 1
    terms = {(0,) * nvars: 1}
    for j in range(nvars):
        terms[tuple(1 if k == j else 0 for k in range(nvars))] = 1
    return CountingSeries(nvars, terms)


@timed
def configuration_series(n: int, modulus: Modulus) -> CountingSeries:
    """Z(R_n) with t_k replaced by 1 + x_1^k + ... + x_{p-1}^k."""
    cycle_index = pair_group_cycle_index(n)
    xs = sp.symbols(f"x1:{modulus.p}")
    figure = {}
    total = sp.Poly(0, *xs, domain=sp.QQ)
    for cycle_type, coeff in cycle_index.terms.items():
        term = sp.Poly(sp.Rational(coeff.numerator, coeff.denominator), *xs, domain=sp.QQ)
        for k in cycle_type:
            if k not in figure:
                figure[k] = sp.Poly(1 + sum(x ** k for x in xs), *xs, domain=sp.QQ)
            term = term * figure[k]
        total = total + term

    terms = {}
    for exponents, coeff in total.terms():
        if coeff.q != 1:
            raise ArithmeticError(f"non-integral coefficient {coeff} at {exponents}")
        terms[tuple(int(e) for e in exponents)] = int(coeff.p)
    return CountingSeries(len(xs), terms)


def count_unlabeled(n: int, modulus: Modulus) -> int:
    """Number of cisomorphism classes on n vertices: Z(R_n) at t_k = p."""
    if n == 1:
        return 1
    value = pair_group_cycle_index(n).evaluate(modulus.p)
    if value.denominator != 1:
        raise ArithmeticError(f"cycle index evaluated to non-integer {value}")
    return int(value)


@timed
def burnside_oracle(n: int, modulus: Modulus) -> int:
    """Orbit count by brute force: average number of labeled colorings fixed
    by each induced pair permutation."""
    if n < 1:
        raise InvalidArgs(f"need at least one vertex, got {n}")
    p, q = modulus.p, pair_count(n)
    order = math.factorial(n)
    work = p ** q * order
    budget = get_settings().oracle_budget
    if work > budget:
        raise BudgetExceeded(
            f"oracle work {work} (n={n}, p={p}) exceeds budget {budget} (CGRAPH_ORACLE_BUDGET)"
        )
    if q == 0:
        return 1

    weights = np.array([p ** (q - 1 - k) for k in range(q)], dtype=np.int64)
    colorings = ((np.arange(p ** q, dtype=np.int64)[:, None] // weights) % p).astype(np.uint8)
    fixed = 0
    for sigma in itertools.permutations(range(n)):
        permuted = colorings[:, list(induced_pair_permutation(sigma))]
        fixed += int(np.count_nonzero(np.all(permuted == colorings, axis=1)))
    if fixed % order:
        raise ArithmeticError(f"fixed-point total {fixed} not divisible by {order}")
    return fixed // order


def color_class_table(n: int, modulus: Modulus) -> pd.DataFrame:
    """Census classes tallied by color-count vector (columns x1..x{p-1}, classes)."""
    columns = [f"x{j}" for j in range(1, modulus.p)]
    rows = [code.color_counts() for code in census_codes(n, modulus)]
    frame = pd.DataFrame(rows, columns=columns)
    table = frame.groupby(columns).size().reset_index(name="classes")
    return table.sort_values(columns).reset_index(drop=True)


def series_from_census(n: int, modulus: Modulus) -> CountingSeries:
    table = color_class_table(n, modulus)
    columns = [c for c in table.columns if c != "classes"]
    terms = {
        tuple(int(row[c]) for c in columns): int(row["classes"])
        for _, row in table.iterrows()
    }
    return CountingSeries(len(columns), terms)
