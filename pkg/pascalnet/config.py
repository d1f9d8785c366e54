"""
Configuration Module
Reads settings from the environment, with a .env file loaded at import
"""

import os
from dataclasses import dataclass
from dotenv import load_dotenv

from .errors import ConfigError

# Load environment variables from .env file
load_dotenv()

DEFAULT_MAX_ORDER = 4096
DEFAULT_PLANARITY_CAP = 16
DEFAULT_SEED = 0

_TRUE_VALUES = ('true', '1', 'yes', 'on')
_FALSE_VALUES = ('false', '0', 'no', 'off')


@dataclass(frozen=True)
class Settings:
    """Runtime settings for generation, checks and the CLI"""
    max_order: int = DEFAULT_MAX_ORDER
    planarity_cap: int = DEFAULT_PLANARITY_CAP
    default_seed: int = DEFAULT_SEED
    use_color: bool = True


def _read_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _read_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    value = raw.strip().lower()
    if value in _TRUE_VALUES:
        return True
    if value in _FALSE_VALUES:
        return False
    raise ConfigError(f"{name} must be a boolean, got {raw!r}")


def load_settings() -> Settings:
    """
    Read settings from the environment.

    The environment is read on every call, so values changed after import
    (or monkeypatched in tests) take effect immediately.

    Returns:
        Settings instance
    """
    use_color = _read_bool('PASCALNET_COLOR', True)
    # https://no-color.org
    if os.getenv('NO_COLOR'):
        use_color = False

    return Settings(
        max_order=_read_int('PASCALNET_MAX_ORDER', DEFAULT_MAX_ORDER, minimum=1),
        planarity_cap=_read_int('PASCALNET_PLANARITY_CAP', DEFAULT_PLANARITY_CAP),
        default_seed=_read_int('PASCALNET_SEED', DEFAULT_SEED),
        use_color=use_color,
    )


def resolve_max_order(max_order=None) -> int:
    """Return an explicit limit, or the configured one when None"""
    if max_order is not None:
        return max_order
    return load_settings().max_order
