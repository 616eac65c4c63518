"""
Configuration for the command-line tools.

Values come from the environment (a ``.env`` file is loaded on import);
command-line flags always take precedence.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Configure logging
logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_IO_ERROR = 3

OUTPUT_DIR_ENV = "THERMALNOISE_OUTPUT_DIR"
SEED_ENV = "THERMALNOISE_SEED"

DEFAULT_SEED = 0
DEFAULT_GRID = "0:1:0.1"


def get_output_dir() -> Optional[Path]:
    """Return the directory set in ``THERMALNOISE_OUTPUT_DIR``, or None when it is unset."""
    value = os.environ.get(OUTPUT_DIR_ENV)
    return Path(value) if value else None


def get_default_seed() -> int:
    """
    Return the default RNG seed.

    Falls back to ``DEFAULT_SEED`` with a warning when the environment value
    is not an integer.
    """
    value = os.environ.get(SEED_ENV)
    if not value:
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {SEED_ENV}={value!r}; using seed {DEFAULT_SEED}")
        return DEFAULT_SEED


def resolve_output_path(path) -> Path:
    """
    Resolve a relative output path against ``get_output_dir()``.

    Absolute paths pass through, and without ``THERMALNOISE_OUTPUT_DIR`` a
    relative path stays relative to the working directory.
    """
    path = Path(path)
    output_dir = get_output_dir()
    if path.is_absolute() or output_dir is None:
        return path
    return output_dir / path
