"""
Run ledger: stores RunReports when MIDSPEC_DATABASE_URL is configured.
"""
import json
import logging
from typing import List, Optional

from sqlalchemy.orm import selectinload

from config import Config
from core.db import get_db_session_ctx, ledger_enabled
from models.report import RunReport
from models.run import CheckRecord, RunRecord, RunStatus
from services.data_exporter import RecordExporter, create_formatters

logger = logging.getLogger(__name__)

DEFAULT_HISTORY_LIMIT = 20


def status_for(report: RunReport, exit_code: int) -> RunStatus:
    if report.passed and exit_code == 0:
        return RunStatus.PASSED
    if report.failed:
        return RunStatus.FAILED
    if report.skipped:
        return RunStatus.SKIPPED
    return RunStatus.UNKNOWN


def record_report(report: RunReport, exit_code: int, status: Optional[RunStatus] = None) -> Optional[int]:
    """
    Store a report with one CheckRecord per check.

    Never raises: a ledger failure is logged and the run is left unrecorded.

    Returns:
        New runID, or None when the ledger is disabled or the write failed
    """
    if not ledger_enabled():
        return None

    try:
        with get_db_session_ctx() as session:
            run = RunRecord(
                command=report.command,
                parameters=json.dumps(report.parameters, sort_keys=True),
                status=status or status_for(report, exit_code),
                exitCode=exit_code,
                elapsedSeconds=report.elapsed,
                systemVersion=Config.get(Config.SYSTEM_VERSION),
            )
            for position, check in enumerate(report.checks):
                run.checks.append(CheckRecord(
                    position=position,
                    name=check.name,
                    passed=check.passed,
                    skipped=check.skipped,
                    detail=check.detail,
                    counters=json.dumps({key: str(value) for key, value in check.counters.items()},
                                        sort_keys=True),
                ))
            session.add(run)
            session.flush()
            run_id = run.runID
        logger.info(f"Recorded {report.command} run {run_id} in the ledger")
        return run_id
    except Exception as e:
        logger.error(f"Could not record {report.command} run: {e}", exc_info=True)
        return None


def recent_runs(limit: int = DEFAULT_HISTORY_LIMIT) -> List[RunRecord]:
    """
    Most recent runs first, with their checks loaded.

    Raises:
        ConfigurationError: If the ledger is not configured
    """
    with get_db_session_ctx() as session:
        return (session.query(RunRecord)
                .options(selectinload(RunRecord.checks))
                .order_by(RunRecord.runID.desc())
                .limit(limit)
                .all())


def history_exporter() -> RecordExporter:
    formatters = create_formatters()
    return RecordExporter(
        field_mapping={
            'run': 'runID',
            'created': 'createdAt',
            'command': 'command',
            'parameters': 'parameters',
            'status': 'status',
            'exit': 'exitCode',
            'elapsed': 'elapsedSeconds',
            'checks': 'checkSummary',
        },
        format_funcs={
            'createdAt': formatters['date'],
            'status': formatters['enum'],
            'elapsedSeconds': formatters['float'],
        }
    )
