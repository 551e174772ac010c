"""
hamilton command: bounded Hamiltonian cycle search on M_{2k+1}.
"""
import argparse
import logging

from config import Config
from core.graphs import build_middle_cube
from core.utils import apply_flag_overrides, output_flags_parser, positive_int, write_output
from models.report import CheckResult, RunReport
from models.run import RunStatus
from services.data_exporter import certificate_to_json, dump_json
from services.hamiltonian import find_hamiltonian_cycle, revolving_door_steps, verify_cycle
from services.run_ledger import record_report

logger = logging.getLogger(__name__)


def cmd_hamilton(args: argparse.Namespace) -> int:
    """
    Returns:
        0 for a verified cycle, 2 when the budget ran out or the certificate failed
    """
    apply_flag_overrides({Config.BUDGET: args.budget})
    budget = Config.get_int(Config.BUDGET)
    g = build_middle_cube(args.k)
    logger.info(f"Searching M_{2 * args.k + 1} ({g.num_vertices} vertices) with budget {budget}")

    report = RunReport(command="hamilton", parameters={"k": args.k, "budget": budget})
    result = find_hamiltonian_cycle(g, budget)

    if not result.found:
        report.add(CheckResult(name="search", passed=False, detail=f"unknown: {result.note}",
                               counters={"expansions": result.expansions}))
        record_report(report, 2, status=RunStatus.UNKNOWN)
        if args.format == "json":
            write_output(dump_json({"status": "unknown", "note": result.note, "expansions": result.expansions}))
        else:
            write_output(f"unknown: {result.note} ({result.expansions} expansions)\n")
        return 2

    verified = verify_cycle(g, result.certificate)
    report.add(CheckResult(name="search", passed=verified,
                           detail=f"cycle of length {len(result.certificate.vertices)}, "
                                  f"{'verified' if verified else 'REJECTED'}",
                           counters={"expansions": result.expansions}))
    exit_code = 0 if verified else 2
    record_report(report, exit_code)

    steps = revolving_door_steps(g, result.certificate) if args.steps else None
    certificate = dump_json(certificate_to_json(g, result.certificate, steps))
    if args.out:
        write_output(certificate, args.out)
        write_output(f"found: {report.checks[0].detail}\n")
    else:
        write_output(certificate)
    return exit_code


def setup_hamilton_handlers(subparsers) -> None:
    hamilton = subparsers.add_parser("hamilton", parents=[output_flags_parser()],
                                     help="search for a Hamiltonian cycle of M_{2k+1}")
    hamilton.add_argument("--k", type=positive_int, required=True)
    hamilton.add_argument("--budget", type=positive_int, default=None,
                          help="node expansions before giving up (default: MIDSPEC_BUDGET)")
    hamilton.add_argument("--steps", action="store_true",
                          help="include the element added or removed at each step")
    hamilton.set_defaults(handler=cmd_hamilton)
