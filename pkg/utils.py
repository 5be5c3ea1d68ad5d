import re
import sys
import time
import logging
from functools import wraps
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core import CGraph, Pair
from field import make_modulus
from exceptions import CGraphParseError, InputError, InvalidArgs

# Configure logging
logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "WARNING") -> None:
    """Send log records to standard error; stdout is reserved for results."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


# Performance Helpers
def timed(func: Callable) -> Callable:
    """Log the wall-clock time of a long computation at INFO."""
    func_logger = logging.getLogger(func.__module__)

    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        func_logger.info(f"{func.__name__} finished in {time.perf_counter() - start:.3f}s")
        return result

    return wrapper


# Cgraph text format
HEADER_PATTERN = re.compile(r'^cgraph\s+p=(\d+)\s+n=(\d+)$')


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Numbered lines with comments and blank lines removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_cgraph_text(text: str) -> CGraph:
    """
    Parse the cgraph text format.

    Line 1 is ``cgraph p=<prime> n=<vertex count>``; every further line is
    ``<u> <v> <color>`` with 0 <= u < v < n and 1 <= color <= p-1.
    """
    lines = _content_lines(text)
    if not lines:
        raise CGraphParseError("empty cgraph file")
    number, header = lines[0]
    match = HEADER_PATTERN.match(header)
    if not match:
        raise CGraphParseError(f"expected 'cgraph p=<prime> n=<count>', got {header!r}", number)
    p, n = int(match.group(1)), int(match.group(2))
    try:
        modulus = make_modulus(p)
    except InputError as e:
        raise CGraphParseError(str(e), number)
    if n < 1:
        raise CGraphParseError("vertex count must be at least 1", number)

    colors: Dict[Pair, int] = {}
    previous: Optional[Pair] = None
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 3 or not all(re.fullmatch(r'\d+', f) for f in fields):
            raise CGraphParseError(f"expected '<u> <v> <color>', got {line!r}", number)
        u, v, c = (int(f) for f in fields)
        if not 0 <= u < v < n:
            raise CGraphParseError(f"need 0 <= u < v < {n}, got {u} {v}", number)
        if not 1 <= c <= p - 1:
            raise CGraphParseError(f"color {c} outside 1..{p - 1}", number)
        if (u, v) in colors:
            raise CGraphParseError(f"duplicate pair {u} {v}", number)
        if previous is not None and (u, v) < previous:
            logger.warning(f"line {number}: edges out of lexicographic order")
        colors[(u, v)] = c
        previous = (u, v)
    return CGraph(n, modulus, colors)


def format_cgraph_text(g: CGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"cgraph p={g.p} n={g.m}")
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edges())
    return "\n".join(lines) + "\n"


# Input Validation
def parse_image_list(text: str, size: Optional[int] = None) -> Tuple[int, ...]:
    """Parse a permutation written as images: ``2 0 1`` means 0->2, 1->0, 2->1."""
    try:
        images = tuple(int(token) for token in text.split())
    except ValueError:
        raise InvalidArgs(f"permutation must be space-separated integers, got {text!r}")
    if sorted(images) != list(range(len(images))):
        raise InvalidArgs(f"{text!r} is not a permutation of 0..{len(images) - 1}")
    if size is not None and len(images) != size:
        raise InvalidArgs(f"permutation has {len(images)} images, expected {size}")
    return images


def format_image_list(images: Sequence[int]) -> str:
    return " ".join(str(i) for i in images)


def parse_int_grid(text: str) -> List[List[int]]:
    """Whitespace-separated nonnegative integer grid, one row per line."""
    rows = []
    for number, line in _content_lines(text):
        try:
            row = [int(token) for token in line.split()]
        except ValueError:
            raise CGraphParseError(f"non-integer entry in {line!r}", number)
        if any(x < 0 for x in row):
            raise CGraphParseError("matrix entries must be nonnegative", number)
        if rows and len(row) != len(rows[0]):
            raise CGraphParseError(f"row has {len(row)} entries, expected {len(rows[0])}", number)
        rows.append(row)
    if not rows:
        raise CGraphParseError("empty matrix")
    return rows


def format_int_grid(rows: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)


def read_text(path: str) -> str:
    """Read a file, with ``-`` meaning standard input."""
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise InvalidArgs(f"cannot read {path}: {e.strerror}")
