import json

import pytest

from xhermite.agents.export_agent import (
    eop_table,
    first_order_eop_table,
    first_order_spectrum_table,
    ladder_frame,
    load_family_json,
    spectrum_table,
    write_bundle,
    write_family_json,
    zero_mode_frame,
)
from xhermite.core.exactpoly import Polynomial
from xhermite.core.families import build_family, eop_second
from xhermite.errors import XHermiteError


def test_family_json_round_trip(tmp_path, p25):
    path = write_family_json(p25, tmp_path / "fam.json")
    fam = load_family_json(path)
    assert fam == build_family(2, 5)
    assert fam.g.coeffs == build_family(2, 5).g.coeffs


def test_tampered_family_is_rejected(tmp_path, p23):
    path = write_family_json(p23, tmp_path / "fam.json")
    data = json.loads(path.read_text())
    data["g"][0] = ["25", "1"]
    path.write_text(json.dumps(data))
    with pytest.raises(XHermiteError):
        load_family_json(path)


def test_missing_file(tmp_path):
    with pytest.raises(XHermiteError):
        load_family_json(tmp_path / "nope.json")


def test_eop_table(p23):
    df = eop_table(p23, 8)
    assert list(df["n"]) == [2, 3, 6, 7, 8]
    assert (df["n"] == df["degree"]).all()
    row = df[df["n"] == 6].iloc[0]
    assert Polynomial.from_json(json.loads(row["coefficients"])) == eop_second(p23, 6)


def test_first_order_eop_table():
    df = first_order_eop_table(2, 6)
    assert list(df["n"]) == [0, 3, 4, 5, 6]
    assert df.iloc[0]["polynomial"] == "1"


def test_spectrum_tables(p23):
    df = spectrum_table(p23, 4)
    assert list(df.columns) == ["nu", "exact", "fd", "error"]
    assert list(df["exact"]) == [-1, 1, 7, 9]
    assert df["error"].max() < 1e-3
    fo = first_order_spectrum_table(2, 3)
    assert list(fo["exact"]) == [-5, 1, 3]


def test_ladder_and_zero_mode_frames(p23):
    df = ladder_frame(p23, "c", 4)
    assert df["matches"].all()
    assert list(df["nu"]) == [-4, -3, 0, 1, 2, 3, 4]
    zm = zero_mode_frame(p23)
    assert set(zm[zm["operator"] == "c"]["nu"]) == {-4, 0}


def test_write_bundle(tmp_path):
    written = write_bundle([(2, 3)], tmp_path, upto=10, max_nu=4, numeric=False)
    names = {p.name for p in written}
    assert names == {"family.json", "eops.csv", "ladder_c.csv", "ladder_b.csv", "zero_modes.csv", "potential_v2.csv"}
    assert all(p.exists() and p.parent.name == "X_2_3" for p in written)
