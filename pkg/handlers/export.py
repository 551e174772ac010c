"""
export command: writes a generated graph as an edge list or labelled JSON.
"""
import argparse
import logging

from core.errors import ParameterError
from core.graphs import build_family
from core.utils import output_flags_parser, positive_int, write_output
from services.data_exporter import render_graph

logger = logging.getLogger(__name__)

REQUIRED_PARAMS = {
    "hypercube": ("n",),
    "middle": ("k",),
    "johnson": ("n", "m"),
}


def cmd_export(args: argparse.Namespace) -> int:
    params = {}
    for name in REQUIRED_PARAMS[args.family]:
        value = getattr(args, name)
        if value is None:
            raise ParameterError(f"--{name} is required for the {args.family} family", source="export")
        params[name] = value

    g = build_family(args.family, params)
    logger.info(f"Exporting {args.family} {params}: {g.num_vertices} vertices, {g.num_edges} edges")
    write_output(render_graph(g, args.format), args.out)
    return 0


def setup_export_handlers(subparsers) -> None:
    export = subparsers.add_parser("export", parents=[output_flags_parser()],
                                   help="write a hypercube, middle-cube or Johnson graph")
    export.add_argument("--family", choices=tuple(REQUIRED_PARAMS), required=True)
    export.add_argument("--k", type=positive_int)
    export.add_argument("--n", type=positive_int)
    export.add_argument("--m", type=positive_int)
    export.set_defaults(handler=cmd_export)
