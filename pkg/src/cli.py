"""
Command-line interface for the bidiophantine toolkit.

Exit codes: 0 on success, 1 on domain errors (and failed ledger rows for ``reproduce``),
2 on usage errors, unreadable input files and malformed JSON.
"""
import os
import sys
import logging
import argparse
from itertools import combinations
from datetime import datetime
from typing import List, Optional, Tuple

from src.certificates import ParityCase, nonexistence_k12, verify_parity_case
from src.config import load_config
from src.constructors import rectangle_with_side, triangle_with_side
from src.exceptions import BidiophantineError, InputFileError
from src.families import admissible_b_values, member, realize
from src.geometry import canonical_form, certify
from src.pell import generate
from src.reproduce import ReproductionAgent
from src.search import brute_force_polygons, brute_force_triangles, extend_to_ngon, scan_apex_pairs
from src.utils.logger import setup_logger
from src.utils.serialization import (
    polygon_to_dict,
    dump_json,
    read_polygon_file,
    rows_to_csv,
    write_polygon_file,
)

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the options appear before or after the subcommand without clobbering.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, default=argparse.SUPPRESS, help='Path to custom configuration file')
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS, help='Enable verbose logging')
    common.add_argument('--format', choices=('json', 'csv'), default=argparse.SUPPRESS, help='Report format')
    common.add_argument('--jobs', type=int, default=argparse.SUPPRESS, help='Worker processes for searches')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per toolkit operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(prog='bidiophantine', description='Bidiophantine lattice polygons',
                                     parents=[common])
    commands = parser.add_subparsers(dest='command', required=True)

    certify_cmd = commands.add_parser('certify', parents=[common], help='Certify a polygon or point set')
    certify_cmd.add_argument('--file', required=True, help='Polygon or point-set JSON file')
    certify_cmd.add_argument('--k', type=int, help='List the pairs at distance k')

    pell_cmd = commands.add_parser('pell', parents=[common], help='Solutions of x^2 - D y^2 = N')
    pell_cmd.add_argument('--d', type=int, required=True)
    pell_cmd.add_argument('--n', type=int, required=True)
    pell_cmd.add_argument('--count', type=int, default=5)

    family_cmd = commands.add_parser('family', parents=[common], help='Admissible members of a family')
    family_cmd.add_argument('--k', type=int, required=True)
    family_cmd.add_argument('--limit', type=int, required=True)

    construct_cmd = commands.add_parser('construct', parents=[common], help='Triangle or rectangle with a side k')
    construct_cmd.add_argument('--shape', choices=('triangle', 'rectangle'), required=True)
    construct_cmd.add_argument('--k', type=int, required=True)
    construct_cmd.add_argument('--limit', type=int, help='Rectangles: every width up to limit')
    construct_cmd.add_argument('--output', help='Write the polygon file here')

    search_cmd = commands.add_parser('search', parents=[common], help='Exhaustive searches')
    searches = search_cmd.add_subparsers(dest='search', required=True)
    triangles = searches.add_parser('triangles', parents=[common], help='Raw-lattice triangle oracle')
    triangles.add_argument('--k', type=int, required=True)
    triangles.add_argument('--radius', type=int)
    polygons = searches.add_parser('polygons', parents=[common], help='Raw-lattice n-point oracle')
    polygons.add_argument('--k', type=int, required=True)
    polygons.add_argument('--n', type=int, required=True)
    polygons.add_argument('--radius', type=int)
    pairs = searches.add_parser('pairs', parents=[common], help='Apex pairs of a family')
    pairs.add_argument('--k', type=int, required=True)
    pairs.add_argument('--limit', type=int)
    ngon = searches.add_parser('ngon', parents=[common], help='Extend the segment to n points')
    ngon.add_argument('--k', type=int, required=True)
    ngon.add_argument('--n', type=int, required=True)
    ngon.add_argument('--limit', type=int)

    impossible = commands.add_parser('certify-impossible', parents=[common], help='Impossibility certificates')
    target = impossible.add_mutually_exclusive_group(required=True)
    target.add_argument('--case', choices=[case.value for case in ParityCase])
    target.add_argument('--k', type=int, choices=(1, 2), help='Nonexistence scan for k = 1 or 2')
    impossible.add_argument('--limit', type=int, default=10000)
    impossible.add_argument('--radius', type=int, default=30)

    reproduce = commands.add_parser('reproduce', parents=[common], help='Run the acceptance ledger')
    reproduce.add_argument('--save', action='store_true', help='Save the ledger as CSV and JSON')

    return parser


def _render(data, rows: List[dict], fmt: str, columns: Optional[List[str]] = None) -> str:
    return rows_to_csv(rows, columns) if fmt == 'csv' else dump_json(data)


def cmd_certify(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """Certify the polygon or point set read from ``--file``."""
    points, mode = read_polygon_file(args.file)
    report = certify(points, args.k, mode=mode)
    rows = [
        {'i': str(i), 'j': str(j), 'distance': '' if d is None else str(d)}
        for (i, j), d in zip(combinations(range(len(report.points)), 2), report.distances())
    ]
    return _render(report.to_dict(), rows, fmt, ['i', 'j', 'distance'])


def cmd_pell(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """First ``--count`` solutions of x^2 - D*y^2 = N."""
    rows = [s.as_row() for s in generate(args.d, args.n, args.count)]
    return _render(rows, rows, fmt, ['x', 'y', 'd', 'n'])


def cmd_family(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """Admissible members up to ``--limit`` with their canonical lattice realizations."""
    rows = []
    for b in admissible_b_values(args.k, args.limit):
        row = member(args.k, b).as_row()
        for i, p in enumerate(canonical_form(realize(member(args.k, b)))):
            row[f'x{i}'] = str(p.x)
            row[f'y{i}'] = str(p.y)
        rows.append(row)
    return _render(rows, rows, fmt)


def _output_path(path: str, index: int, count: int) -> str:
    if count == 1:
        return path
    stem, extension = os.path.splitext(path)
    return f"{stem}-{index}{extension}"


def cmd_construct(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """Triangle or rectangles with a side of length ``--k``, optionally written to ``--output``."""
    if args.shape == 'triangle':
        shapes = [triangle_with_side(args.k)]
    else:
        shapes = rectangle_with_side(args.k, args.limit)
    if args.output:
        for index, shape in enumerate(shapes):
            write_polygon_file(_output_path(args.output, index, len(shapes)), shape)
    documents = [polygon_to_dict(shape) for shape in shapes]
    rows = [
        {'shape': str(index), 'vertex': str(i), 'x': str(p.x), 'y': str(p.y)}
        for index, shape in enumerate(shapes) for i, p in enumerate(shape)
    ]
    return _render(documents[0] if len(documents) == 1 else documents, rows, fmt)


def _given(value: Optional[int], default: int) -> int:
    return default if value is None else value


def cmd_search(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """Run one of the four searches; bounds left off the command line come from ``search``."""
    search = config['search']
    jobs = search.get('jobs', 1)
    if args.search in ('triangles', 'polygons'):
        radius = _given(args.radius, search['triangle_radius'])
        if args.search == 'triangles':
            report = brute_force_triangles(args.k, radius, jobs=jobs)
        else:
            report = brute_force_polygons(args.k, args.n, radius, jobs=jobs)
    elif args.search == 'pairs':
        report = scan_apex_pairs(args.k, _given(args.limit, search['pair_limit']))
    else:
        report = extend_to_ngon(args.k, args.n, _given(args.limit, search['ngon_limit']))
    logger.info(f"Search {args.search} finished in {report.elapsed:.3f}s")
    return _render(report.to_dict(), report.witness_rows(), fmt)


def cmd_certify_impossible(args: argparse.Namespace, config: dict, fmt: str) -> str:
    """Bounded impossibility certificate for a parity case or for k = 1, 2."""
    if args.k is not None:
        certificate = nonexistence_k12(args.k, args.radius)
    else:
        certificate = verify_parity_case(args.case, args.limit)
    data = certificate.to_dict()
    row = {key: value for key, value in data.items() if key != 'witnesses'}
    return _render(data, [row], fmt)


def cmd_reproduce(args: argparse.Namespace, config: dict, fmt: str) -> Tuple[str, int]:
    """
    Run the ledger, optionally saving reports.

    Returns:
        tuple: (rendered table, exit code), the code being 1 when any row failed.
    """
    agent = ReproductionAgent(config)
    entries = agent.run()
    if args.save or config['output'].get('save_reports', False):
        agent.save_results(entries)
    explicit = getattr(args, 'format', None)
    if explicit == 'csv':
        text = rows_to_csv([entry.as_row() for entry in entries])
    elif explicit == 'json':
        text = dump_json([entry.as_row() for entry in entries])
    else:
        text = agent.display_summary(entries)
    return text, (0 if agent.succeeded(entries) else 1)


COMMANDS = {
    'certify': cmd_certify,
    'pell': cmd_pell,
    'family': cmd_family,
    'construct': cmd_construct,
    'search': cmd_search,
    'certify-impossible': cmd_certify_impossible,
    'reproduce': cmd_reproduce,
}

CSV_BY_DEFAULT = ('pell', 'family')


def _configure_logging(config: dict, verbose: bool) -> None:
    settings = config['logging']
    level = logging.DEBUG if verbose else getattr(logging, str(settings.get('level', 'INFO')).upper(), logging.INFO)
    log_file = None
    if settings.get('log_to_file', False):
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = os.path.join(settings.get('log_dir', 'logs'), f"bidiophantine_{timestamp}.log")
    setup_logger(log_file, level=level)


def run(argv: List[str]) -> int:
    """
    Parse ``argv``, run the subcommand and print its report to stdout.

    Args:
        argv (list): Arguments without the program name.

    Returns:
        int: Process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    config = load_config(getattr(args, 'config', None))
    if not config:
        print("error: failed to load configuration", file=sys.stderr)
        return 2
    _configure_logging(config, getattr(args, 'verbose', False))
    if getattr(args, 'jobs', None) is not None:
        config['search']['jobs'] = args.jobs

    fmt = getattr(args, 'format', None)
    if fmt is None:
        fmt = 'csv' if args.command in CSV_BY_DEFAULT else config['output'].get('format', 'json')

    try:
        result = COMMANDS[args.command](args, config, fmt)
    except InputFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BidiophantineError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 130

    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


def main() -> None:
    """Console-script entry point."""
    sys.exit(run(sys.argv[1:]))
