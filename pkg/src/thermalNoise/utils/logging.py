"""
Logging utilities for thermalNoise.
"""

import logging
import sys


def setup_logging(level=logging.INFO, stream=None):
    """
    Set up logging for the application.

    Log records go to stderr unless another stream is given, so the data a
    command prints on stdout stays machine-readable.

    Args:
        level: The logging level to use
        stream: The stream to log to, ``sys.stderr`` when None
    """
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr if stream is None else stream
    )

    # Reduce logging from other libraries
    logging.getLogger("numexpr").setLevel(logging.WARNING)

    return logging.getLogger(__name__)
