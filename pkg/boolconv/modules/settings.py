"""User settings: the ~/.boolconv/config file and the seed override."""

import os
from pathlib import Path
from typing import Dict, Optional

# Hard caps for exhaustive enumeration (atom counts).
MAX_ATOMS_TOPOLOGY = 4
MAX_ATOMS_BRUTE_FORCE = 2
MAX_ATOMS_OPEN_SET_FORM = 3

DEFAULT_SEED = 8675309
DEFAULT_SAMPLES = 500
DEFAULT_SELECTOR_SAMPLES = 100
DEFAULT_MAX_ATOMS = 3

SEED_ENV_VAR = 'BOOLCONV_SEED'

# Per atom count: (prefix_bound, cycle_bound) of the exhaustive corpus.
DEFAULT_CORPUS_BOUNDS = {
    1: (2, 4),
    2: (2, 4),
    3: (1, 3),
    4: (0, 2),
}

KNOWN_KEYS = ('lang', 'max_atoms', 'samples')


def get_config_dir() -> Path:
    """Directory holding the user config file."""
    return Path.home() / '.boolconv'


def get_config_file() -> Path:
    return get_config_dir() / 'config'


def read_config(path: Optional[Path] = None) -> Dict[str, str]:
    """Read key=value lines; anything unreadable is skipped."""
    config_file = path or get_config_file()
    values: Dict[str, str] = {}
    if not config_file.exists():
        return values

    try:
        content = config_file.read_text(encoding='utf-8')
    except OSError:
        return values

    for line in content.splitlines():
        line = line.strip()
        if not line or line.startswith('#') or '=' not in line:
            continue
        key, value = line.split('=', 1)
        key = key.strip()
        if key in KNOWN_KEYS:
            values[key] = value.strip()
    return values


def write_config(values: Dict[str, str], path: Optional[Path] = None) -> Path:
    """Merge values into the config file and return its path."""
    config_file = path or get_config_file()
    config_file.parent.mkdir(parents=True, exist_ok=True)

    merged = read_config(config_file)
    merged.update({k: str(v) for k, v in values.items() if v is not None})
    lines = [f"{key}={merged[key]}" for key in sorted(merged)]
    config_file.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    return config_file


def config_int(key: str, default: int, path: Optional[Path] = None) -> int:
    """Integer setting from the config file, falling back to default."""
    raw = read_config(path).get(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def default_seed() -> int:
    """The seed used when --seed is not given (BOOLCONV_SEED wins)."""
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        seed = int(raw.strip(), 0)
    except ValueError:
        return DEFAULT_SEED
    return seed & 0xFFFFFFFFFFFFFFFF


def corpus_bounds(atoms: int, prefix_bound: Optional[int] = None,
                  cycle_bound: Optional[int] = None):
    """Exhaustive corpus bounds for an atom count, explicit values first."""
    default_prefix, default_cycle = DEFAULT_CORPUS_BOUNDS.get(atoms, (0, 2))
    return (
        default_prefix if prefix_bound is None else prefix_bound,
        default_cycle if cycle_bound is None else cycle_bound,
    )
