"""
Runs the requested verification checks for one k and collects a RunReport.
"""
import logging
import time
from typing import Callable, Dict, List, Optional, Sequence

from core.combinatorics import binomial
from core.errors import MidspecError, ParameterError
from core.graphs import build_hypercube, build_johnson, build_middle_cube, extract_middle_subgraph
from models.report import CheckResult, RunReport
from models.spectrum import EigenbasisBlock
from services.certification import (
    certify_by_moments, characteristic_polynomial_oracle, check_block_orthogonality,
    verify_block, verify_incidence_ranks, verify_lemma_identities, verify_m_squared,
)
from services.eigenbasis import full_eigenbasis
from services.spectrum import (
    hypercube_spectrum, johnson_spectrum, middle_cube_spectrum,
    middle_cube_spectrum_via_johnson, theorem_polynomial,
)
from services.verify_checks import CheckConfig, default_check_names, get_check_config

logger = logging.getLogger(__name__)


def parse_check_names(raw: Optional[str]) -> List[str]:
    """
    Comma-separated check names; empty or None selects the default set.

    Raises:
        ParameterError: On an unknown or repeated name
    """
    if not raw or not raw.strip():
        return default_check_names()
    names = []
    for part in raw.split(","):
        name = part.strip().lower()
        if not name:
            continue
        if get_check_config(name) is None:
            raise ParameterError(f"unknown check {name!r}", source="--checks")
        if name in names:
            raise ParameterError(f"check {name!r} requested twice", source="--checks")
        names.append(name)
    if not names:
        return default_check_names()
    return names


class CheckProcessor:
    """
    Runs verification checks for M_{2k+1}.
    Each registered check maps to one handler method returning a CheckResult.
    """

    def __init__(self, k: int, workers: Optional[int] = None, trials: int = 1000, seed: int = 0):
        """
        Initialize check processor.

        Args:
            k: Half-dimension, n = 2k+1
            workers: Threads for the eigenbasis construction
            trials: Random subsets per kernel row for the lemma check
            seed: Seed for the lemma check
        """
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}", source="verify")
        self.k = k
        self.n = 2 * k + 1
        self.workers = workers
        self.trials = trials
        self.seed = seed
        self._blocks: Optional[List[EigenbasisBlock]] = None

        # Map handler names to methods
        self.handlers: Dict[str, Callable[[CheckConfig], CheckResult]] = {
            'certify_eigenbasis': self._handle_eigenbasis,
            'certify_m_squared': self._handle_m_squared,
            'certify_moments': self._handle_moments,
            'certify_ranks': self._handle_ranks,
            'certify_charpoly': self._handle_charpoly,
            'certify_johnson': self._handle_johnson,
            'certify_hypercube': self._handle_hypercube,
            'compare_first_proof': self._handle_first_proof,
            'certify_lemmas': self._handle_lemmas,
            'compare_extraction': self._handle_extraction,
            'certify_orthogonality': self._handle_orthogonality,
        }

    def run(self, names: Sequence[str]) -> RunReport:
        """
        Run every named check in order.

        Returns:
            RunReport with one CheckResult per name; over-cap checks are recorded as skipped
        """
        report = RunReport(command="verify", parameters={"k": self.k, "checks": list(names)})
        started = time.monotonic()

        for name in names:
            check = get_check_config(name)
            if check is None:
                raise ParameterError(f"unknown check {name!r}", source="verify")

            reason = check.over_cap(self.k)
            if reason:
                logger.warning(f"Check {name} for k={self.k} skipped: {reason}")
                report.add(CheckResult(name=name, passed=False, skipped=True, detail=reason))
                continue

            handler = self.handlers.get(check.handler)
            if not handler:
                logger.error(f"Handler {check.handler} not found")
                report.add(CheckResult(name=name, passed=False, detail=f"no handler {check.handler}"))
                continue

            logger.info(f"Running check {name} for k={self.k}")
            try:
                result = handler(check)
            except MidspecError as e:
                logger.error(f"Check {name} raised: {e}", exc_info=True)
                result = CheckResult(name=name, passed=False, detail=str(e))
            logger.info(f"Check {name}: {result.status}")
            report.add(result)

        report.elapsed = time.monotonic() - started
        return report

    def _eigenbasis(self) -> List[EigenbasisBlock]:
        if self._blocks is None:
            self._blocks = full_eigenbasis(self.k, workers=self.workers)
        return self._blocks

    # === Check Handlers ===

    def _handle_eigenbasis(self, check: CheckConfig) -> CheckResult:
        """Every row of every block is an exact eigenvector; dimensions add up to the order."""
        g = build_middle_cube(self.k)
        blocks = self._eigenbasis()
        certified = 0
        bad_blocks = []
        for block in blocks:
            good = verify_block(g, block)
            certified += good
            if good != block.dimension or block.dimension != block.expected_dimension:
                bad_blocks.append(f"{block.eigenvalue}")
        total = sum(block.dimension for block in blocks)
        passed = not bad_blocks and total == g.num_vertices and certified == total
        detail = f"{certified} eigenvectors certified"
        if bad_blocks:
            detail += f"; failing eigenvalues {', '.join(bad_blocks)}"
        return CheckResult(name=check.name, passed=passed, detail=detail,
                           counters={"eigenvectors": certified, "blocks": len(blocks), "order": g.num_vertices})

    def _handle_m_squared(self, check: CheckConfig) -> CheckResult:
        passed = verify_m_squared(self.k)
        size = 2 * binomial(self.n, self.k)
        return CheckResult(name=check.name, passed=passed, detail=f"{size}x{size} exact product",
                           counters={"order": size})

    def _handle_moments(self, check: CheckConfig) -> CheckResult:
        table = middle_cube_spectrum(self.k)
        passed = certify_by_moments(build_middle_cube(self.k), table)
        return CheckResult(name=check.name, passed=passed,
                           detail=f"p = 0..{table.distinct}",
                           counters={"traces": table.distinct + 1})

    def _handle_ranks(self, check: CheckConfig) -> CheckResult:
        results = verify_incidence_ranks(self.n)
        wrong = [f"M_{{{i},{j}}}" for i, j, found, expected in results if found != expected]
        detail = f"{len(results)} matrices full rank" if not wrong else f"rank deficient: {', '.join(wrong)}"
        return CheckResult(name=check.name, passed=not wrong, detail=detail,
                           counters={"matrices": len(results)})

    def _handle_charpoly(self, check: CheckConfig) -> CheckResult:
        coefficients = characteristic_polynomial_oracle(build_middle_cube(self.k))
        expected = theorem_polynomial(self.k)
        passed = coefficients == expected
        return CheckResult(name=check.name, passed=passed,
                           detail=f"degree {len(coefficients) - 1}",
                           counters={"degree": len(coefficients) - 1})

    def _handle_johnson(self, check: CheckConfig) -> CheckResult:
        failed = []
        for m in range(1, self.n // 2 + 1):
            if not certify_by_moments(build_johnson(self.n, m), johnson_spectrum(self.n, m)):
                failed.append(f"J({self.n},{m})")
        detail = f"{self.n // 2} Johnson graphs" if not failed else f"failed: {', '.join(failed)}"
        return CheckResult(name=check.name, passed=not failed, detail=detail,
                           counters={"graphs": self.n // 2})

    def _handle_hypercube(self, check: CheckConfig) -> CheckResult:
        passed = certify_by_moments(build_hypercube(self.n), hypercube_spectrum(self.n))
        return CheckResult(name=check.name, passed=passed, detail=f"Q_{self.n}",
                           counters={"order": 1 << self.n})

    def _handle_first_proof(self, check: CheckConfig) -> CheckResult:
        passed = middle_cube_spectrum_via_johnson(self.k) == middle_cube_spectrum(self.k)
        return CheckResult(name=check.name, passed=passed, detail="squared spectrum split by symmetry")

    def _handle_lemmas(self, check: CheckConfig) -> CheckResult:
        trials = 0
        failures = 0
        for r in range(1, self.k + 1):
            lemma_report = verify_lemma_identities(self.n, r, self.trials, self.seed)
            trials += lemma_report.trials
            failures += sum(lemma_report.failures.values())
        return CheckResult(name=check.name, passed=trials > 0 and failures == 0,
                           detail=f"{trials} trials, {failures} failures",
                           counters={"trials": trials, "failures": failures})

    def _handle_extraction(self, check: CheckConfig) -> CheckResult:
        extracted = extract_middle_subgraph(build_hypercube(self.n), self.k)
        direct = build_middle_cube(self.k)
        passed = extracted.adjacency == direct.adjacency and list(extracted.label_bits) == list(direct.label_bits)
        return CheckResult(name=check.name, passed=passed, detail=f"{direct.num_edges} edges compared",
                           counters={"edges": direct.num_edges})

    def _handle_orthogonality(self, check: CheckConfig) -> CheckResult:
        nonzero = check_block_orthogonality(self._eigenbasis())
        return CheckResult(name=check.name, passed=nonzero == 0,
                           detail=f"{nonzero} non-zero cross-block products",
                           counters={"nonzero": nonzero})


def exit_code_for(report: RunReport, allow_skip: bool = False) -> int:
    """0 when every check passed (skips tolerated with allow_skip), else 2."""
    if report.failed:
        return 2
    if report.skipped and not allow_skip:
        return 2
    if not report.checks:
        return 2
    return 0
