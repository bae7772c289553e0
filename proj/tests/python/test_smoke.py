import json

import pytest

import nodalhodge as nh


def test_catalog_lists_examples():
    names = nh.catalog_names()
    assert "kummer" in names and "ex47iii" in names


def test_kummer_pieces():
    h = nh.catalog("kummer")
    assert (h.n, h.d, h.m, h.node_count) == (3, 4, 1, 16)
    assert h.symbolic_dim(2, 8) == 101
    assert h.ordinary_dim(2, 8) == 101
    assert h.symbolic_times_jacobian_dim(1, 8) == 100


def test_kummer_record():
    rec = nh.record(nh.catalog("kummer"), 2)
    t2 = rec["theorem2_dims"]
    assert t2["line1_dim"] == 1
    assert t2["condition_a"]["overall"] is False
    assert [(p["M"], p["N"]) for p in t2["condition_a"]["pairs"]][0] == (64, 56)


def test_analyze_is_deterministic():
    a = nh.analyze("catalog:ex47i", [1, 2])
    b = nh.analyze("catalog:ex47i", [1, 2])
    assert a == b
    assert a["records"][1]["theorem2_dims"]["lines_agree"] is True


def test_smooth_fermat_matches_coefficient():
    h = nh.catalog("fermat-3-4")
    for q in range(3):
        assert h.grf_dim_low_q(q) == nh.c_coeff(4, 4, (q + 1) * 4)


def test_c_coeff_row_symmetry_and_total():
    row = nh.c_coeff_row(4, 4)
    top = 16
    padded = row + [0] * (top + 1 - len(row))
    assert all(padded[i] == padded[top - i] for i in range(top + 1))
    assert sum(row) == 3 ** 4
    assert nh.c_coeff(4, 4, 7) == 16 and nh.c_coeff(4, 4, 8) == 19


def test_node_bounds():
    b = nh.node_bounds(3, 4)
    assert (b["odd_bound"], b["varchenko_rhs"], b["varchenko_sum"]) == (19, 16, 17)
    assert b["sum_matches_rhs"] is False


def test_witness_matches_oracle():
    h = nh.catalog("thm1-d4-n3")
    dim_i, dim_j, quotient = h.brute_force_quotient(8)
    assert quotient == 0
    assert dim_i == h.symbolic_dim(1, 8)


def test_export_round_trip(tmp_path):
    path = tmp_path / "kummer.json"
    path.write_text(nh.catalog("kummer").export_json())
    h = nh.load(str(path))
    assert h.node_count == 16
    assert h.symbolic_dim(2, 8) == 101


def test_input_errors():
    with pytest.raises(nh.InputError, match="line 1"):
        nh.Hypersurface.from_json("{")
    doc = json.loads(nh.catalog("fermat-2-3").export_json())
    doc["nodes"] = [["1", "-1", "0"]]
    with pytest.raises(nh.NodeVerificationError):
        nh.Hypersurface.from_json(json.dumps(doc))
    with pytest.raises(ValueError):
        nh.catalog("no-such-entry")


def test_run_criteria_subset():
    rows = nh.run_criteria([6, 7])
    assert rows and all(r["match"] or r["kind"] == "reported" for r in rows)
