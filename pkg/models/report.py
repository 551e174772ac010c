"""
Run reports produced by the verify and hamilton commands.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False
    counters: Dict[str, int] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"


@dataclass
class RunReport:
    """
    Outcome of one command invocation.

    Attributes:
        command: CLI command name
        parameters: Effective parameters after config resolution
        checks: One entry per requested check, in request order
        elapsed: Wall time in seconds; excluded from deterministic output
    """
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: Optional[float] = None

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed and not c.skipped for c in self.checks)

    @property
    def skipped(self) -> List[str]:
        return [c.name for c in self.checks if c.skipped]

    @property
    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed and not c.skipped]

    def get_report(self) -> str:
        if self.passed:
            verdict = "PASS"
        elif self.failed or not self.checks:
            verdict = "FAIL"
        else:
            verdict = "INCOMPLETE"
        lines = [f"{self.command}: {verdict}"]
        for check in self.checks:
            line = f"  {check.name}: {check.status}"
            if check.detail and check.skipped:
                line += f": {check.detail}"
            elif check.detail:
                line += f" ({check.detail})"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self, include_elapsed: bool = True) -> dict:
        data = {
            "command": self.command,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "detail": c.detail,
                    "counters": {key: str(value) for key, value in c.counters.items()},
                }
                for c in self.checks
            ],
        }
        if include_elapsed and self.elapsed is not None:
            data["elapsed_seconds"] = round(self.elapsed, 3)
        return data
