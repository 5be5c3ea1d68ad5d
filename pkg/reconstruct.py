"""Vertex and edge decks, and exhaustive searches for reconstruction
counterexamples among small cgraphs.

Nothing here assumes either reconstruction conjecture; the search reports
what it finds and re-verifies every reported pair with an independent
cisomorphism matching.
"""
import logging
import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from core import CGraph, delete_edge, delete_vertex
from field import Modulus
from iso import CanonicalCode, canonical_code, census_codes, cisomorphic
from exceptions import InvalidArgs, SizeMismatch, TooFewEdges, TooSmall
from utils import timed

# Configure logging
logger = logging.getLogger(__name__)

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class Deck:
    """Multiset of card codes, stored sorted."""

    kind: str
    cards: Tuple[CanonicalCode, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(sorted(self.cards)))

    def __len__(self) -> int:
        return len(self.cards)

    def key(self) -> str:
        return "|".join(str(card) for card in self.cards)

    def lines(self) -> List[str]:
        return [str(card) for card in self.cards]


def _vertex_cards(g: CGraph) -> List[CGraph]:
    if g.m < 3:
        raise TooSmall(f"vertex decks need at least three vertices, got {g.m}")
    return [delete_vertex(g, v) for v in range(g.m)]


def _edge_cards(g: CGraph) -> List[CGraph]:
    if g.edge_count < 4:
        raise TooFewEdges(f"edge decks need at least four colored edges, got {g.edge_count}")
    return [delete_edge(g, (u, v)) for u, v, _ in g.edges()]


def vertex_deck(g: CGraph) -> Deck:
    return Deck(VERTEX, tuple(canonical_code(card) for card in _vertex_cards(g)))


def edge_deck(g: CGraph) -> Deck:
    return Deck(EDGE, tuple(canonical_code(card) for card in _edge_cards(g)))


def _check_comparable(g: CGraph, h: CGraph) -> None:
    if g.m != h.m or g.modulus != h.modulus:
        raise SizeMismatch(
            f"cannot compare decks of (m={g.m}, p={g.p}) and (m={h.m}, p={h.p})"
        )


def chypomorphic(g: CGraph, h: CGraph) -> bool:
    """Equal vertex decks, i.e. some bijection v -> u with G - v ≅ H - u."""
    _check_comparable(g, h)
    return vertex_deck(g) == vertex_deck(h)


def edge_hypomorphic(g: CGraph, h: CGraph) -> bool:
    _check_comparable(g, h)
    return edge_deck(g) == edge_deck(h)


def edge_count_from_deck(deck: Deck, m: int) -> int:
    """Colored-edge count of the original cgraph: every edge survives in m-2 cards."""
    if deck.kind != VERTEX or len(deck) != m or m < 3:
        raise InvalidArgs(f"expected a vertex deck of {m} cards")
    total = sum(card.edge_count for card in deck.cards)
    if total % (m - 2):
        raise InvalidArgs(f"card edge total {total} is not divisible by {m - 2}")
    return total // (m - 2)


def cards_match(cards_g: Sequence[CGraph], cards_h: Sequence[CGraph]) -> bool:
    """Multiset equality of cards up to cisomorphism, by witness search."""
    if len(cards_g) != len(cards_h):
        return False
    unused = list(cards_h)
    for card in cards_g:
        for k, other in enumerate(unused):
            if cisomorphic(card, other) is not None:
                del unused[k]
                break
        else:
            return False
    return True


@dataclass
class SearchReport:
    n: int
    p: int
    mode: str
    classes: List[CanonicalCode] = field(default_factory=list)
    counterexamples: List[Tuple[CanonicalCode, CanonicalCode]] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.counterexamples)

    def lines(self) -> List[str]:
        out = [f"code {code}" for code in self.classes]
        out.extend(f"pair {a} {b}" for a, b in self.counterexamples)
        return out


def _verify_counterexample(g: CGraph, h: CGraph, mode: str) -> bool:
    cards = _vertex_cards if mode == VERTEX else _edge_cards
    return cards_match(cards(g), cards(h)) and cisomorphic(g, h) is None


@timed
def conjecture_search(
    n: int,
    modulus: Modulus,
    mode: str = VERTEX,
    classes: Optional[Sequence[CanonicalCode]] = None,
) -> SearchReport:
    """All pairs of distinct classes on n vertices sharing a deck.

    ``classes`` may carry a precomputed census (e.g. from the census store);
    otherwise the census is computed here.
    """
    if mode not in (VERTEX, EDGE):
        raise InvalidArgs(f"mode must be '{VERTEX}' or '{EDGE}', got {mode!r}")
    if mode == VERTEX and n < 3:
        raise TooSmall(f"vertex reconstruction needs at least three vertices, got {n}")
    codes = list(classes) if classes is not None else census_codes(n, modulus)
    if mode == EDGE:
        codes = [code for code in codes if code.edge_count >= 4]
    report = SearchReport(n, modulus.p, mode, classes=sorted(codes))
    if not codes:
        return report

    make_deck = vertex_deck if mode == VERTEX else edge_deck
    graphs = {code: code.to_cgraph(modulus) for code in report.classes}
    decks = {code: make_deck(graphs[code]) for code in report.classes}
    frame = pd.DataFrame(
        {"code": report.classes, "deck": [decks[c].key() for c in report.classes]}
    )
    for _, group in frame.groupby("deck", sort=True):
        if len(group) < 2:
            continue
        for a, b in itertools.combinations(sorted(group["code"]), 2):
            if decks[a].cards != decks[b].cards:
                continue
            if _verify_counterexample(graphs[a], graphs[b], mode):
                report.counterexamples.append((a, b))
            else:
                logger.error(f"candidate pair {a} / {b} failed independent re-verification")
    report.counterexamples.sort()
    logger.info(
        f"{mode} reconstruction search n={n} p={modulus.p}: {len(report.classes)} classes, "
        f"{len(report.counterexamples)} counterexample pairs"
    )
    return report
