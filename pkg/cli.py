"""Batch command line over the cgraph text formats.

Exit status: 0 success, 1 domain failure (e.g. ``iso`` finds no witness),
2 usage or parse error. Results go to standard output (or ``-o FILE``);
diagnostics go to standard error.
"""
import sys
import logging
import argparse
import traceback
from typing import List, Optional, Sequence, Tuple

from config import get_settings
from core import (
    ColorPermutation,
    classify_relative,
    monochromatic_component,
    pi_complement,
    scalar_mul,
    to_vector,
    vector_add,
)
from field import make_modulus
from exceptions import CGraphError, CGraphParseError
from utils import (
    configure_logging,
    format_cgraph_text,
    format_image_list,
    parse_cgraph_text,
    parse_image_list,
    parse_int_grid,
    read_text,
)

# Configure logging
logger = logging.getLogger(__name__)

Result = Tuple[int, List[str]]


def _load_cgraph(path: str):
    try:
        return parse_cgraph_text(read_text(path))
    except CGraphParseError as e:
        raise CGraphParseError(f"{path}: {e}")


def _store_url(value: Optional[str]) -> Optional[str]:
    return value or get_settings().database_url


# Subcommand handlers

def _cmd_canon(args) -> Result:
    from iso import canonical_code
    return 0, [str(canonical_code(_load_cgraph(args.file)))]


def _cmd_iso(args) -> Result:
    from iso import cisomorphic, verify_witness
    g, h = _load_cgraph(args.file1), _load_cgraph(args.file2)
    sigma = cisomorphic(g, h)
    if sigma is None:
        return 1, ["ABSENT"]
    if not verify_witness(g, h, sigma):
        raise CGraphError(f"witness {sigma.images} failed re-verification")
    return 0, [format_image_list(sigma.images)]


def _cmd_aut(args) -> Result:
    from iso import cautomorphisms
    return 0, [format_image_list(s.images) for s in cautomorphisms(_load_cgraph(args.file))]


def _cmd_complement(args) -> Result:
    g = _load_cgraph(args.file)
    pi = ColorPermutation(g.modulus, parse_image_list(args.perm, g.p))
    return 0, [format_cgraph_text(pi_complement(g, pi)).rstrip("\n")]


def _cmd_decompose(args) -> Result:
    g = _load_cgraph(args.file)
    return 0, [format_cgraph_text(monochromatic_component(g, args.color)).rstrip("\n")]


def _cmd_components(args) -> Result:
    from structure import components
    partition = components(_load_cgraph(args.file))
    return 0, [" ".join(str(v) for v in sorted(block)) for block in partition.blocks]


def _cmd_kpath(args) -> Result:
    from structure import find_k_path
    path = find_k_path(_load_cgraph(args.file), args.k, args.s, args.t)
    if path is None:
        return 1, ["ABSENT"]
    return 0, [" ".join(str(v) for v in path.vertices)]


def _cmd_jconnected(args) -> Result:
    from structure import is_j_connected
    return 0, ["true" if is_j_connected(_load_cgraph(args.file), args.j) else "false"]


def _cmd_count(args) -> Result:
    from enumeration import count_unlabeled
    return 0, [str(count_unlabeled(args.n, make_modulus(args.p)))]


def _cmd_series(args) -> Result:
    from enumeration import configuration_series
    return 0, configuration_series(args.n, make_modulus(args.p)).lines()


def _cmd_cycle_index(args) -> Result:
    from enumeration import pair_group_cycle_index
    return 0, pair_group_cycle_index(args.n).lines()


def _cmd_oracle(args) -> Result:
    from enumeration import burnside_oracle
    return 0, [str(burnside_oracle(args.n, make_modulus(args.p)))]


def _cmd_census(args) -> Result:
    modulus = make_modulus(args.p)
    if args.by_colors:
        from enumeration import color_class_table
        table = color_class_table(args.n, modulus)
        return 0, [" ".join(str(int(x)) for x in row) for row in table.itertuples(index=False)]
    if args.store is not None:
        from database import cached_census
        codes = cached_census(args.n, modulus, _store_url(args.store))
    else:
        from iso import census_codes
        codes = census_codes(args.n, modulus)
    return 0, [str(code) for code in codes]


def _cmd_deck(args) -> Result:
    from reconstruct import edge_deck, vertex_deck
    g = _load_cgraph(args.file)
    deck = edge_deck(g) if args.edges else vertex_deck(g)
    return 0, deck.lines()


def _cmd_recon_search(args) -> Result:
    from reconstruct import EDGE, VERTEX, conjecture_search
    modulus = make_modulus(args.p)
    classes = None
    if args.store is not None:
        from database import cached_census
        classes = cached_census(args.n, modulus, _store_url(args.store))
    report = conjecture_search(args.n, modulus, EDGE if args.edges else VERTEX, classes=classes)
    return (1 if report.found else 0), report.lines()


def _cmd_assign(args) -> Result:
    from apply import AssignmentMatrix, find_assignments, pad_to_square
    try:
        rows = parse_int_grid(read_text(args.file))
    except CGraphParseError as e:
        raise CGraphParseError(f"{args.file}: {e}")
    matrix = pad_to_square(AssignmentMatrix(tuple(map(tuple, rows))))
    limit = sys.maxsize if args.all else 1
    assignments = find_assignments(matrix, limit)
    if not assignments:
        return 1, ["NONE"]
    out: List[str] = []
    for k, assignment in enumerate(assignments):
        if k:
            out.append("")
        out.extend(assignment.lines())
    return 0, out


def _cmd_plane(args) -> Result:
    from apply import build_projective_plane, check_plane_axioms, verify_packing
    packing = build_projective_plane(args.q)
    if args.verify:
        report = verify_packing(packing)
        if report.passed:
            report = check_plane_axioms(packing)
        return (0 if report.passed else 1), report.lines()
    text = format_cgraph_text(packing.to_cgraph(), comments=[f"plane order={args.q}"])
    return 0, [text.rstrip("\n")]


def _cmd_triangles(args) -> Result:
    from apply import triangle_census
    return 0, [triangle_census(_load_cgraph(args.file)).line()]


def _cmd_cliques(args) -> Result:
    from apply import monochromatic_clique_census
    census = monochromatic_clique_census(_load_cgraph(args.file), args.r)
    return 0, [f"{color} {count}" for color, count in census.items()]


def _cmd_vec(args) -> Result:
    if args.vec_command == "add":
        v = vector_add(to_vector(_load_cgraph(args.file1)), to_vector(_load_cgraph(args.file2)))
    elif args.vec_command == "scale":
        v = scalar_mul(args.c, to_vector(_load_cgraph(args.file)))
    else:
        relation = classify_relative(
            to_vector(_load_cgraph(args.file_g)), to_vector(_load_cgraph(args.file_w))
        )
        return 0, [relation.value]
    return 0, [" ".join(str(c) for c in v.entries)]


# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgraph", description="Colorful graphs over GF(p): algebra, isomorphism, enumeration."
    )
    parser.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("canon", _cmd_canon, "print the canonical code of a cgraph")
    p.add_argument("file")

    p = command("iso", _cmd_iso, "find a cisomorphism witness (image list) or print ABSENT")
    p.add_argument("file1")
    p.add_argument("file2")

    p = command("aut", _cmd_aut, "list the cautomorphism group")
    p.add_argument("file")

    p = command("complement", _cmd_complement, "pi-complement of a cgraph")
    p.add_argument("file")
    p.add_argument("--perm", required=True, help='color permutation as an image list, e.g. "0 2 1"')

    p = command("decompose", _cmd_decompose, "monochromatic component G_j")
    p.add_argument("file")
    p.add_argument("--color", type=int, required=True)

    p = command("components", _cmd_components, "connected components, one block per line")
    p.add_argument("file")

    p = command("kpath", _cmd_kpath, "shortest k-colored path from S to T")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)

    p = command("jconnected", _cmd_jconnected, "whether the cgraph is j-connected")
    p.add_argument("file")
    p.add_argument("-j", type=int, required=True)

    for name, handler, help_text in (
        ("count", _cmd_count, "number of unlabeled cgraphs"),
        ("series", _cmd_series, "configuration counting series, graded-lex lines"),
        ("oracle", _cmd_oracle, "Burnside brute-force orbit count"),
        ("census", _cmd_census, "canonical codes of all classes"),
    ):
        p = command(name, handler, help_text)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-p", type=int, required=True)
    p.add_argument("--by-colors", action="store_true", help="tally classes by color counts")
    p.add_argument("--store", nargs="?", const="", default=None, help="census store URL")

    p = command("cycle-index", _cmd_cycle_index, "cycle index of the pair group")
    p.add_argument("-n", type=int, required=True)

    p = command("deck", _cmd_deck, "vertex deck (or edge deck) card codes")
    p.add_argument("file")
    p.add_argument("--edges", action="store_true")

    p = command("recon-search", _cmd_recon_search, "search for reconstruction counterexamples")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--edges", action="store_true")
    p.add_argument("--store", nargs="?", const="", default=None, help="census store URL")

    p = command("assign", _cmd_assign, "job assignments from a matrix grid")
    p.add_argument("file")
    p.add_argument("--all", action="store_true")

    p = command("plane", _cmd_plane, "projective plane packing of prime order Q")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = command("triangles", _cmd_triangles, "total / monochromatic / rainbow / other triangles")
    p.add_argument("file")

    p = command("cliques", _cmd_cliques, "monochromatic r-clique count per color")
    p.add_argument("file")
    p.add_argument("-r", type=int, required=True)

    p = command("vec", _cmd_vec, "vector-space operations on cgraph files")
    vec = p.add_subparsers(dest="vec_command", required=True)
    q = vec.add_parser("add", help="componentwise sum mod p")
    q.add_argument("file1")
    q.add_argument("file2")
    q = vec.add_parser("scale", help="scalar multiple")
    q.add_argument("c", type=int)
    q.add_argument("file")
    q = vec.add_parser("classify", help="subcgraph / supercgraph / neither / both")
    q.add_argument("file_g")
    q.add_argument("file_w")

    return parser


def _emit(lines: List[str], output: str) -> None:
    text = "".join(line + "\n" for line in lines)
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    configure_logging(settings.log_level)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    try:
        status, lines = args.handler(args)
    except CGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure in {args.command}: {str(e)}")
        logger.debug(traceback.format_exc())
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        _emit(lines, args.output)
    except OSError as e:
        print(f"error: cannot write {args.output}: {e.strerror}", file=sys.stderr)
        return 2
    return status
