"""
SpringerKit Configuration
=========================
Defaults and scale guards for exhaustive computations.

Environment overrides (read from the process or a .env file):
- SPRINGERKIT_MAX_N: raise the flag-enumeration size guard (at your own risk;
  flag counts grow like q^(dim of the Springer fiber))
- SPRINGERKIT_SEED: default seed for sampled checks

To add a new guard:
1. Add a field to SuiteConfig
2. Read its override in load_config()
3. Add a check_* helper that raises ScaleError
"""

import os
import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from dotenv import load_dotenv

from errors import ScaleError

logger = logging.getLogger(__name__)


# =============================================================================
# DEFAULT CONFIGURATION
# =============================================================================

@dataclass(frozen=True)
class SuiteConfig:
    """Suite configuration settings."""
    default_q: int = 3
    allowed_flag_q: Tuple[int, ...] = (3, 5)
    max_flag_n: int = 8
    max_grid_radius: int = 3
    default_trials: int = 32
    default_seed: int = 7
    random_points: int = 10000


DEFAULT_CONFIG = SuiteConfig()


# =============================================================================
# ENVIRONMENT OVERRIDES
# =============================================================================

ENV_MAX_N = 'SPRINGERKIT_MAX_N'
ENV_SEED = 'SPRINGERKIT_SEED'


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError:
        print(f"⚠️  Ignoring {name}={raw!r} (not an integer)")
        return None


def load_config(base: SuiteConfig = DEFAULT_CONFIG) -> SuiteConfig:
    """
    Build the effective configuration.

    Loads a .env file if one is present, then applies environment overrides
    on top of base.
    """
    load_dotenv()
    config = base

    max_n = _env_int(ENV_MAX_N)
    if max_n is not None:
        logger.debug("flag size guard overridden: %d -> %d", config.max_flag_n, max_n)
        config = replace(config, max_flag_n=max_n)

    seed = _env_int(ENV_SEED)
    if seed is not None:
        config = replace(config, default_seed=seed)

    return config


# =============================================================================
# GUARDS
# =============================================================================

def check_flag_scale(n: int, q: int, config: Optional[SuiteConfig] = None) -> None:
    """Raise ScaleError unless (n, q) is inside the flag-enumeration guard."""
    config = config or load_config()
    if n > config.max_flag_n:
        raise ScaleError(
            f"flag enumeration limited to n <= {config.max_flag_n} (got n = {n}); "
            f"set {ENV_MAX_N} to override")
    if q not in config.allowed_flag_q:
        raise ScaleError(
            f"flag enumeration needs q in {config.allowed_flag_q} (got q = {q})")


def check_grid_radius(radius: int, config: Optional[SuiteConfig] = None) -> None:
    """Raise ScaleError if a G2 grid scan would be too large."""
    config = config or load_config()
    if radius < 0 or radius > config.max_grid_radius:
        raise ScaleError(
            f"grid radius must be in 0..{config.max_grid_radius} (got {radius})")


def get_default_seed() -> int:
    """Seed used when a command is run without --seed."""
    return load_config().default_seed


def get_default_q() -> int:
    return load_config().default_q


# =============================================================================
# TESTING
# =============================================================================

if __name__ == "__main__":
    print("SpringerKit Configuration")
    print("=" * 60)

    cfg = load_config()
    print(f"\nFlag enumeration: n <= {cfg.max_flag_n}, q in {cfg.allowed_flag_q}")
    print(f"G2 grid radius:   <= {cfg.max_grid_radius}")
    print(f"Sampling:         {cfg.default_trials} trials, seed {cfg.default_seed}")
    print(f"Random points:    {cfg.random_points}")
