"""
Configuration and registry for the checks run by `verify`.
"""
from typing import Callable, Dict, List, Optional

from config import Config
from core.combinatorics import binomial


class CheckConfig:
    """Configuration for a single verification check."""

    def __init__(
            self,
            name: str,
            handler: str,
            description: str,
            cap_key: Optional[str] = None,
            fixed_cap: Optional[int] = None,
            measure: Callable[[int], int] = lambda k: k,
            measure_label: str = "k",
            default: bool = False
    ):
        self.name = name
        self.handler = handler
        self.description = description
        self.cap_key = cap_key
        self.fixed_cap = fixed_cap
        self.measure = measure
        self.measure_label = measure_label
        self.default = default

    def cap(self) -> Optional[int]:
        """Current limit on measure(k); None means uncapped."""
        if self.cap_key:
            return Config.get_int(self.cap_key)
        return self.fixed_cap

    def over_cap(self, k: int) -> Optional[str]:
        """Reason the check cannot run for k, or None when it is within its cap."""
        limit = self.cap()
        if limit is None:
            return None
        size = self.measure(k)
        if size > limit:
            return f"over cap ({self.measure_label}={size} > {limit})"
        return None


def _vertices(k: int) -> int:
    return 2 * binomial(2 * k + 1, k)


def _ground_size(k: int) -> int:
    return 2 * k + 1


# Registry of all verification checks, in the order they run for the default set
VERIFY_CHECKS = {
    'eigen': CheckConfig(
        name='eigen',
        handler='certify_eigenbasis',
        description='Lift every constraint kernel and certify each row as an exact eigenvector',
        cap_key=Config.MAX_K,
        default=True
    ),

    'msq': CheckConfig(
        name='msq',
        handler='certify_m_squared',
        description='Dense exact M^2 against the two Johnson blocks plus (k+1)I',
        cap_key=Config.MAX_K,
        default=True
    ),

    'moments': CheckConfig(
        name='moments',
        handler='certify_moments',
        description='Match trace(A^p) with the closed-form spectrum for p = 0..d',
        cap_key=Config.MOMENTS_MAX_K,
        default=True
    ),

    'rank': CheckConfig(
        name='rank',
        handler='certify_ranks',
        description='Full rank of the containment matrices M_{r,r-1}',
        cap_key=Config.MAX_K,
        default=True
    ),

    'charpoly': CheckConfig(
        name='charpoly',
        handler='certify_charpoly',
        description='Newton-identity characteristic polynomial against the product formula',
        cap_key=Config.CHARPOLY_MAX_N,
        measure=_vertices,
        measure_label='vertices',
        default=True
    ),

    'johnson': CheckConfig(
        name='johnson',
        handler='certify_johnson',
        description='Johnson spectra J(2k+1, m), 1 <= m <= k, certified by moments',
        cap_key=Config.MOMENTS_MAX_K
    ),

    'hypercube': CheckConfig(
        name='hypercube',
        handler='certify_hypercube',
        description='Hypercube spectrum of Q_{2k+1} certified by moments',
        fixed_cap=10,
        measure=_ground_size,
        measure_label='n'
    ),

    'firstproof': CheckConfig(
        name='firstproof',
        handler='compare_first_proof',
        description='Spectrum via M^2 and the Johnson graph equals the closed form'
    ),

    'lemmas': CheckConfig(
        name='lemmas',
        handler='certify_lemmas',
        description='Pointwise extension identities on random subsets for every kernel row',
        fixed_cap=7,
        measure=_ground_size,
        measure_label='n'
    ),

    'extract': CheckConfig(
        name='extract',
        handler='compare_extraction',
        description='Middle layers cut out of Q_{2k+1} equal the direct construction',
        fixed_cap=4
    ),

    'orthogonality': CheckConfig(
        name='orthogonality',
        handler='certify_orthogonality',
        description='Rows of blocks with distinct eigenvalues are exactly orthogonal',
        cap_key=Config.MAX_K
    ),
}


def get_check_config(name: str) -> Optional[CheckConfig]:
    """Get check configuration by name."""
    return VERIFY_CHECKS.get(name.strip().lower())


def get_all_checks() -> Dict[str, CheckConfig]:
    """Get all registered checks."""
    return VERIFY_CHECKS


def default_check_names() -> List[str]:
    return [name for name, check in VERIFY_CHECKS.items() if check.default]
