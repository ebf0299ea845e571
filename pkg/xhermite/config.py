# xhermite/config.py
import logging
import os

from dotenv import load_dotenv

# load .env (if present)
load_dotenv()

logger = logging.getLogger(__name__)


def _float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r (not a number), using %s", name, raw, default)
        return default


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r (not an integer), using %s", name, raw, default)
        return default


# Output / logging
OUTPUT_DIR = os.getenv("XHERMITE_OUTPUT_DIR", "out")
LOG_LEVEL = os.getenv("XHERMITE_LOG_LEVEL", "INFO").upper()

# Exact-check grid bounds
MAX_NU = _int("XHERMITE_MAX_NU", 12)
MAX_DEGREE = _int("XHERMITE_MAX_DEGREE", 20)

# Quadrature: integrand carries e^{-x^2}, so |x| > 9 contributes below 1e-35 times the rational growth
QUAD_HALF_WIDTH = _float("XHERMITE_QUAD_HALF_WIDTH", 9.0)
QUAD_NODES = _int("XHERMITE_QUAD_NODES", 2048)

# Finite differences
FD_HALF_WIDTH = _float("XHERMITE_FD_HALF_WIDTH", 8.0)
FD_POINTS = _int("XHERMITE_FD_POINTS", 2000)
# plain-oscillator calibration grid and tolerance
CALIBRATION_FD_POINTS = _int("XHERMITE_CALIBRATION_FD_POINTS", 4000)
CALIBRATION_TOL = _float("XHERMITE_CALIBRATION_TOL", 1e-4)

# Tolerances
GRAM_TOL = _float("XHERMITE_GRAM_TOL", 1e-7)
FD_TOL = _float("XHERMITE_FD_TOL", 1e-3)
NORM_REL_TOL = _float("XHERMITE_NORM_REL_TOL", 1e-6)

# Parallel verification across families (1 = in-process)
WORKERS = _int("XHERMITE_WORKERS", 1)

# Families swept by `verify`/`export` when no pair is given
DEFAULT_GRID = os.getenv("XHERMITE_DEFAULT_GRID", "2:3,2:5,2:7,4:5,4:7")


def parse_grid(spec: str):
    """'2:3,4:5' -> [(2, 3), (4, 5)]"""
    pairs = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        m1, _, m2 = item.partition(":")
        pairs.append((int(m1), int(m2)))
    return pairs
