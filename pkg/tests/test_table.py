import json
import warnings
from fractions import Fraction as F
from pathlib import Path

import pytest

from symsolve.localdata import local_data, valg_set
from symsolve.ore import Operator
from symsolve.poly import P, Poly
from symsolve.symprod import symsquare_order2
from symsolve.table import (TableError, TableValidationError, default_table_path,
                            interlaced_gate, load_table, match_local_data,
                            solve_parameters, solve_parameters_detailed)

X = P(0, 1)


def hermite_sq(z=F(1)) -> Operator:
    K = Operator([P(2, 2), Poly.const(-2 * z), P(1)])
    return symsquare_order2(K).canonical()


def legendre_sq(z=F(3, 5)) -> Operator:
    K = Operator([P(1, 1), -(P(3, 2)) * z, P(2, 1)])
    return symsquare_order2(K).canonical()


def bessel_sq(z=F(2)) -> Operator:
    K = Operator([Poly.const(-z), P(2, 2), Poly.const(z)])
    return symsquare_order2(K).canonical()


def turan_op(z=F(1)) -> Operator:
    z2 = z * z
    a3 = P(1)
    a2 = P(2, 2) - Poly.const(4 * z2)
    a1 = (P(2, 1) * (X + Poly.const(4 - 2 * z2))) * F(-4)
    a0 = (X + P(1)) * P(2, 1) * P(2, 1) * F(-8)
    return Operator([a0, a1, a2, a3])


@pytest.fixture(scope="module")
def table():
    return load_table()


def gauss_entry(table):
    return table.entry("gauss2f1_sq")


def strs(vals):
    return [str(v) for v in vals]


# -- loading and schema ---------------------------------------------------


def test_ships_four_entries(table):
    assert [e.name for e in table] == [
        "gauss2f1_sq", "legendre_sq", "hermite_sq", "besseli_sq"]


def test_env_var_selects_table(monkeypatch, tmp_path, table):
    alt = tmp_path / "alt.json"
    alt.write_text(Path(default_table_path()).read_text())
    monkeypatch.setenv("SYMSOLVE_TABLE", str(alt))
    t2 = load_table()
    assert t2.path == str(alt)
    assert [e.name for e in t2] == [e.name for e in table]


def test_missing_file_and_bad_json(tmp_path):
    with pytest.raises(TableError, match="not found"):
        load_table(str(tmp_path / "nope.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(TableError, match="invalid JSON"):
        load_table(str(bad))
    empty = tmp_path / "empty.json"
    empty.write_text("{\"entries\": []}")
    with pytest.raises(TableError, match="no entries"):
        load_table(str(empty))


def test_schema_error_names_entry_and_field(tmp_path):
    raw = json.loads(Path(default_table_path()).read_text())
    del raw["entries"][1]["valg"]
    f = tmp_path / "t.json"
    f.write_text(json.dumps(raw))
    with pytest.raises(TableError, match="'legendre_sq'.*'valg'"):
        load_table(str(f))

    raw = json.loads(Path(default_table_path()).read_text())
    raw["entries"][2]["solution"]["evaluator"] = "nope"
    f.write_text(json.dumps(raw))
    with pytest.raises(TableError, match="'hermite_sq'.*unknown evaluator"):
        load_table(str(f))


def test_template_tampering_is_caught(tmp_path):
    raw = json.loads(Path(default_table_path()).read_text())
    ops = raw["entries"][2]["operator"]
    ops[0] = "(" + ops[0] + ") + 1"
    f = tmp_path / "t.json"
    f.write_text(json.dumps(raw))
    t = load_table(str(f))
    with pytest.raises(TableError, match="disagrees"):
        t.entry("hermite_sq").instantiate({"z": F(1)})


# -- instantiation --------------------------------------------------------


def test_instantiate_builds_the_square(table):
    M, desc = table.entry("hermite_sq").instantiate({"z": F(1)})
    assert M == hermite_sq(F(1))
    assert desc.evaluator == "H"
    assert desc.display() == "H_x(1)^2"
    M, _ = table.entry("legendre_sq").instantiate({"z": F(3, 5)})
    assert M == legendre_sq(F(3, 5))
    M, _ = table.entry("besseli_sq").instantiate({"z": F(2)})
    assert M == bessel_sq(F(2))


def test_instantiate_rejects_degenerate_values(table):
    with pytest.raises(TableError, match="middle root coefficient vanishes"):
        table.entry("hermite_sq").instantiate({"z": F(0)})
    with pytest.raises(TableError, match="missing parameters"):
        gauss_entry(table).instantiate({"a": F(0), "z": F(1, 4)})


def test_descriptor_evaluates(table):
    _, desc = table.entry("hermite_sq").instantiate({"z": F(1)})
    assert desc.eval(3, exact=True) == F(-4)
    _, desc = gauss_entry(table).instantiate(
        {"a": F(0), "b": F(2, 3), "c": F(7, 6), "z": F(1, 4)})
    assert desc.eval(2, exact=True) == F(9, 14)


# -- ValG templates and the merge law ---------------------------------------


def test_valg_merge_parity(table):
    e = gauss_entry(table)
    base = {"c": None, "z": F(1, 4)}

    def vg(a, b):
        asn = {"a": a, "b": b, "c": a + b + F(1, 2), "z": F(1, 4)}
        return {(v.cls.representative, v.gap) for v in e.expected_valg(asn)}

    # separated classes: one dip each
    assert vg(F(0), F(1, 3)) == {(P(F(2, 3), 1), 2), (P(0, 1), 2)}
    # odd collision offset: gaps add
    assert vg(F(0), F(3, 2)) == {(P(0, 1), 4)}
    assert vg(F(1, 2), F(1)) == {(P(0, 1), 4)}
    # even collision offset: the class cancels
    assert vg(F(0), F(1)) == set()
    assert vg(F(1, 2), F(1, 2)) == set()


def test_valg_merge_matches_computation(table):
    e = gauss_entry(table)
    for a, b in [(F(0), F(3, 2)), (F(0), F(1)), (F(1, 2), F(1, 2))]:
        asn = {"a": a, "b": b, "c": a + b + F(1, 2), "z": F(1, 4)}
        M, _ = e.instantiate(asn)
        assert valg_set(M) == e.expected_valg(asn)


# -- matching ---------------------------------------------------------------


def test_match_turan_and_hermite(table):
    d = local_data(turan_op(F(1)))
    assert [e.name for e in match_local_data(d, table)] == ["hermite_sq"]
    d2 = local_data(hermite_sq(F(2)))
    assert [e.name for e in match_local_data(d2, table)] == ["hermite_sq"]


def test_match_legendre_includes_gauss_shape(table):
    d = local_data(legendre_sq(F(3, 5)))
    assert [e.name for e in match_local_data(d, table)] == [
        "gauss2f1_sq", "legendre_sq"]


def test_match_bessel(table):
    d = local_data(bessel_sq(F(1, 3)))
    assert [e.name for e in match_local_data(d, table)] == ["besseli_sq"]


def test_no_match_for_foreign_operator(table):
    L = Operator([P(1), P(0, 1), P(1, 1), P(1)])  # no table shape
    assert match_local_data(local_data(L), table) == []


# -- parameter matchers ------------------------------------------------------


def test_hermite_candidates(table):
    e = table.entry("hermite_sq")
    for z in (F(1), F(2)):
        cands = solve_parameters(e, local_data(turan_op(z)))
        assert [m["z"] for m in cands] == [z, -z]


def test_bessel_candidates(table):
    e = table.entry("besseli_sq")
    cands = solve_parameters(e, local_data(bessel_sq(F(2))))
    assert [m["z"] for m in cands] == [F(2), F(-2)]


def test_legendre_candidates_include_spurious(table):
    e = table.entry("legendre_sq")
    cands = solve_parameters(e, local_data(legendre_sq(F(3, 5))))
    # the squared-constant readings produce extra values; only 3/5 survives
    # the later equivalence check
    assert [m["z"] for m in cands] == [
        F(7, 25), F(-7, 25), F(3, 5), F(-3, 5), F(4, 5), F(-4, 5)]


def test_gauss_candidates_small_parameter(table):
    e = gauss_entry(table)
    al = F(1, 3)
    asn = {"a": F(0), "b": al / 2 + F(1, 2), "c": al / 2 + 1, "z": F(1, 4)}
    M, _ = e.instantiate(asn)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        det = solve_parameters_detailed(e, local_data(M))
    assert det.param_candidates["a"] == [F(0), F(1, 2)]
    assert det.param_candidates["b"] == [F(1, 6), F(2, 3)]
    assert det.param_candidates["c"] == [F(7, 6), F(5, 3)]
    assert det.param_candidates["z"] == [F(1, 4), F(3, 4)]
    # the locus c = a + b + 1/2 keeps three of the eight triples
    assert [(m["a"], m["b"], m["c"]) for m in det.assignments[:3]] == [
        (F(0), F(2, 3), F(7, 6)),
        (F(1, 2), F(1, 6), F(7, 6)),
        (F(1, 2), F(2, 3), F(5, 3)),
    ]
    assert len(det.assignments) == 6
    assert det.assignments[0]["z"] == F(1, 4)
    assert any("degree-4" in w for w in det.warnings)


def test_gauss_candidates_merged_class(table):
    e = gauss_entry(table)
    asn = {"a": F(0), "b": F(3, 2), "c": F(2), "z": F(1, 4)}
    M, _ = e.instantiate(asn)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        det = solve_parameters_detailed(e, local_data(M))
    assert det.param_candidates["b"] == [F(0), F(1, 2)]
    assert det.param_candidates["c"] == [F(1), F(3, 2)]
    assert det.param_candidates["z"] == [F(1, 4), F(3, 4)]
    assert (det.assignments[0]["a"], det.assignments[0]["b"]) == (F(0), F(1, 2))


def test_gauss_constant_collision_still_recovers_z(table):
    # at z = 1/2 the two squared constants coincide and ValG cancels, yet
    # the ratio reading still pins z
    e = gauss_entry(table)
    M, _ = e.instantiate({"a": F(1, 2), "b": F(1, 2), "c": F(3, 2), "z": F(1, 2)})
    d = local_data(M)
    assert len(d.gquo) == 3 and not d.valg
    assert [x.name for x in match_local_data(d, table)] == ["gauss2f1_sq"]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        det = solve_parameters_detailed(e, d)
    assert det.param_candidates["z"] == [F(1, 2)]
    assert {"a": F(1, 2), "b": F(1, 2), "c": F(3, 2), "z": F(1, 2)} \
        in det.assignments


# -- self-validation and the interlaced gate ---------------------------------


def test_self_validation_passes(table):
    table.self_validate(seed=7, samples=2)


def test_self_validation_catches_wrong_templates(tmp_path, table):
    raw = json.loads(Path(default_table_path()).read_text())
    for entry in raw["entries"]:
        if entry["name"] == "hermite_sq":
            entry["valg"] = [{"point": "0", "gap": 3}]
    f = tmp_path / "t.json"
    f.write_text(json.dumps(raw))
    t = load_table(str(f))
    with pytest.raises(TableValidationError, match="ValG mismatch"):
        t.entry("hermite_sq").self_validate({"z": F(1)})


def test_interlaced_gate():
    assert interlaced_gate({"a": F(0), "b": F(1, 2), "c": F(1), "z": F(1, 4)})
