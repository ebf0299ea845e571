# xhermite/agents/export_agent.py
"""Tables and on-disk artifacts: family JSON, EOP coefficient tables, spectra, ladder tables."""
import json
import logging
import os
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import pandas as pd

from xhermite import config
from xhermite.core.exactpoly import Polynomial, format_polynomial
from xhermite.core.families import (
    ExtendedFamily,
    FamilyParams,
    FirstOrderFamily,
    Which,
    build_family,
    degree_set,
    eop_second,
    potential_v2,
    spectrum,
)
from xhermite.core.numerics import FdGrid, fd_spectrum, sample_potential
from xhermite.core.operators import ladder_table, zero_modes
from xhermite.errors import XHermiteError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def family_json(params: FamilyParams, upto: int = config.MAX_DEGREE, levels: int = 8) -> dict:
    return build_family(params.m1, params.m2).to_json(upto, levels)


def write_family_json(params: FamilyParams, path: PathLike, upto: int = config.MAX_DEGREE) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(family_json(params, upto), indent=2, ensure_ascii=False), encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def load_family_json(path: PathLike) -> ExtendedFamily:
    """Reads a family written by ``write_family_json``; the exact data must match a fresh build."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        fam = ExtendedFamily.from_json(data)
    except (OSError, KeyError, ValueError) as e:
        raise XHermiteError(f"Could not load family from {path}: {e}") from e
    fresh = build_family(fam.params.m1, fam.params.m2)
    if fam != fresh:
        raise XHermiteError(f"{path} does not match the family {fam.params.label} built from scratch")
    return fam


def _coeff_row(n: int, p: Polynomial) -> dict:
    return {"n": n, "degree": p.degree, "polynomial": format_polynomial(p), "coefficients": json.dumps(p.to_json())}


def eop_table(params: FamilyParams, upto: int = config.MAX_DEGREE) -> pd.DataFrame:
    rows = [_coeff_row(n, eop_second(params, n)) for n in degree_set(params, upto)]
    return pd.DataFrame(rows, columns=["n", "degree", "polynomial", "coefficients"])


def first_order_eop_table(m: int, upto: int = config.MAX_DEGREE) -> pd.DataFrame:
    fam = FirstOrderFamily(m)
    rows = [_coeff_row(n, fam.eop(n)) for n in fam.degree_set(upto)]
    return pd.DataFrame(rows, columns=["n", "degree", "polynomial", "coefficients"])


def spectrum_table(params: FamilyParams, levels: int = 5, grid: Optional[FdGrid] = None) -> pd.DataFrame:
    """Exact H2 levels next to the finite-difference eigenvalues of V2."""
    exact = spectrum(params, Which.H2, levels)
    fd = fd_spectrum(potential_v2(params), grid, levels)
    df = pd.DataFrame({"nu": [lvl.nu for lvl in exact], "exact": [lvl.energy for lvl in exact], "fd": fd})
    df["error"] = (df["fd"] - df["exact"]).abs()
    return df


def first_order_spectrum_table(m: int, levels: int = 5, grid: Optional[FdGrid] = None) -> pd.DataFrame:
    fam = FirstOrderFamily(m)
    nus = fam.admissible_nus(levels)
    df = pd.DataFrame({
        "nu": nus,
        "exact": [fam.energy(nu) for nu in nus],
        "fd": fd_spectrum(fam.potential, grid, levels),
    })
    df["error"] = (df["fd"] - df["exact"]).abs()
    return df


def ladder_frame(params: FamilyParams, operator: str, max_nu: int = config.MAX_NU) -> pd.DataFrame:
    rows = [a.to_json() for a in ladder_table(params, operator, max_nu)]
    return pd.DataFrame(rows)


def zero_mode_frame(params: FamilyParams) -> pd.DataFrame:
    rows = []
    for op in ("b", "b_dagger", "c", "c_dagger"):
        zm = zero_modes(params, op)
        for lvl in zm.physical:
            rows.append({"operator": op, "nu": lvl.nu, "energy": lvl.energy})
    return pd.DataFrame(rows, columns=["operator", "nu", "energy"])


def write_bundle(
    pairs: Iterable[Tuple[int, int]],
    out_dir: PathLike = config.OUTPUT_DIR,
    upto: int = config.MAX_DEGREE,
    max_nu: int = config.MAX_NU,
    numeric: bool = True,
) -> List[Path]:
    """One directory per family holding its JSON, CSV tables and potential samples."""
    written: List[Path] = []
    for m1, m2 in pairs:
        params = FamilyParams(m1, m2)
        base = Path(out_dir) / f"X_{m1}_{m2}"
        os.makedirs(base, exist_ok=True)
        written.append(write_family_json(params, base / "family.json", upto))

        tables = {
            "eops.csv": eop_table(params, upto),
            "ladder_c.csv": ladder_frame(params, "c", max_nu),
            "ladder_b.csv": ladder_frame(params, "b", max_nu),
            "zero_modes.csv": zero_mode_frame(params),
            "potential_v2.csv": sample_potential(potential_v2(params)),
        }
        if numeric:
            tables["spectrum.csv"] = spectrum_table(params)
        for name, df in tables.items():
            path = base / name
            df.to_csv(path, index=False)
            written.append(path)
        logger.info("exported %s (%d files)", params.label, len(tables) + 1)
    return written
