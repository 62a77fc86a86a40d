import json

import pytest

from feketepoly.cli import main
from feketepoly.ntheory import Family
from feketepoly.pipeline import (
    TableMode,
    TableSpec,
    cache_key,
    cache_load,
    cache_store,
    rows_to_csv,
    run_row,
    run_table,
    verify_csv,
    write_plot,
)
from conftest import DATA_DIR, paper_f44, paper_g44


# -- table sweeps ----------------------------------------------------------------


def test_table_spec_congruence_filter():
    spec = TableSpec(Family.FOUR_P, TableMode.TRIPLE, 2, 50)
    assert spec.qualifying_primes() == [3, 7, 11, 19, 23, 31, 43, 47]
    spec = TableSpec(Family.MINUS_THREE_P, TableMode.TWO_PLUS_FOUR_CYCLE, 2, 40)
    assert spec.qualifying_primes() == [5, 13, 29, 37]
    spec = TableSpec(Family.MINUS_THREE_P, TableMode.QUADRUPLE, 2, 60)
    assert spec.qualifying_primes() == [17, 41]


def test_table_spec_validation():
    with pytest.raises(ValueError):
        TableSpec(Family.FOUR_P, TableMode.TWO_PLUS_FOUR_CYCLE, 2, 50)
    with pytest.raises(ValueError):
        TableSpec(Family.GENERIC, TableMode.TRIPLE, 2, 50)


def test_run_row_triple():
    row = run_row(Family.FOUR_P, TableMode.TRIPLE, 11, 10**5)
    assert row.result == (3, 7, 43)
    assert row.delta == 44
    assert row.group == "S(4)"
    assert row.cert_key == cache_key(44, "triple", 10**5)
    assert row.to_json()["cert_key"] == row.cert_key


def test_run_table_matches_reference_rows():
    spec = TableSpec(Family.FOUR_P, TableMode.TRIPLE, 11, 31, bound=10**5)
    rows = run_table(spec)
    by_p = {r.p: r.result for r in rows}
    assert by_p[11] == (3, 7, 43)
    assert by_p[19] == (17, 43, 89)
    assert by_p[23] == (19, 3, 61)
    assert by_p[31] == (97, 3, 23)


def test_run_table_parallel_matches_serial():
    spec = TableSpec(Family.MINUS_THREE_P, TableMode.TWO_PLUS_FOUR_CYCLE, 2, 40, bound=10**3)
    serial = run_table(spec, jobs=1)
    parallel = run_table(spec, jobs=2)
    assert [(r.p, r.result) for r in serial] == [(r.p, r.result) for r in parallel]


def test_csv_determinism():
    spec = TableSpec(Family.FOUR_P, TableMode.TRIPLE, 11, 23, bound=10**4)
    first = rows_to_csv(run_table(spec), timestamp=False)
    second = rows_to_csv(run_table(spec), timestamp=False)

    def strip_ms(text):
        return [",".join(line.split(",")[:-1]) for line in text.splitlines()]

    assert strip_ms(first) == strip_ms(second)
    assert first.splitlines()[0] == "p,delta,q1,q2,q3,q4,group,ms"


def test_csv_renders_missing_result_as_x():
    from feketepoly.pipeline import TableRow

    row = TableRow(p=19, delta=76, result=None, group="", ms=12, cert_key="abc")
    text = rows_to_csv([row], timestamp=False)
    assert text.splitlines()[1] == "19,76,x,,,,,12"


def test_table_json_format(capsys):
    code = main(
        [
            "table",
            "--family",
            "4p",
            "--mode",
            "triple",
            "--p-min",
            "11",
            "--p-max",
            "11",
            "--format",
            "json",
        ]
    )
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data[0]["result"] == [3, 7, 43]
    assert data[0]["cert_key"]


def test_plot_writes_file(tmp_path):
    spec = TableSpec(Family.FOUR_P, TableMode.TRIPLE, 11, 23, bound=10**4)
    rows = run_table(spec)
    out = tmp_path / "witnesses.png"
    write_plot(rows, out)
    assert out.exists() and out.stat().st_size > 1000


# -- verify mode ------------------------------------------------------------------


def test_verify_reference_rows(tmp_path):
    csv_text = (
        "family,mode,p,q1,q2,q3,q4\n"
        "FourP,triple,11,3,7,43,\n"
        "FourP,triple,19,17,43,89,\n"
        "FourP,triple,23,19,3,61,\n"
        "FourP,quadruple,19,x,,,\n"
    )
    path = tmp_path / "rows.csv"
    path.write_text(csv_text)
    results = verify_csv(path)
    assert [r.ok for r in results] == [True, True, True, True]
    assert results[3].skipped


def test_verify_detects_corruption(tmp_path):
    # note q1=5 would NOT be a corruption here: the trace polynomial at 44
    # happens to be irreducible mod 5 too, and verify mode checks patterns,
    # not minimality; q1=7 (a linear times a cubic) genuinely fails
    path = tmp_path / "bad.csv"
    path.write_text("family,mode,p,q1,q2,q3,q4\nFourP,triple,11,7,7,43,\n")
    results = verify_csv(path)
    assert not results[0].ok
    assert "q1=7" in results[0].detail


def test_verify_accepts_non_minimal_witness(tmp_path):
    # pattern checks are independent of the search order, so a larger valid
    # witness still verifies
    path = tmp_path / "rows.csv"
    path.write_text("family,mode,p,q1,q2,q3,q4\nFourP,triple,11,5,7,43,\n")
    assert verify_csv(path)[0].ok


def test_verify_reports_malformed_rows(tmp_path):
    path = tmp_path / "broken.csv"
    path.write_text("family,mode,p,q1,q2,q3,q4\nNoSuchFamily,triple,11,3,7,43,\nFourP,triple,eleven,3,7,43,\n")
    results = verify_csv(path)
    assert len(results) == 2
    assert all(not r.ok for r in results)
    assert results[0].line == 2
    assert results[1].line == 3


def test_fixture_files_parse():
    for i in list(range(1, 13)):
        path = DATA_DIR / f"table{i:02d}.csv"
        assert path.exists(), path
        lines = [l for l in path.read_text().splitlines() if l and not l.startswith("#")]
        assert lines[0] == "family,mode,p,q1,q2,q3,q4"
        assert len(lines) > 5


# -- cache -----------------------------------------------------------------------


def test_cache_round_trip(tmp_path):
    payload = {"group": "S(4)", "witnesses": [3, 7, 43]}
    cache_store(tmp_path, 44, "triple", 10**5, payload)
    assert cache_load(tmp_path, 44, "triple", 10**5) == payload
    assert cache_load(tmp_path, 44, "quadruple", 10**5) is None


def test_cache_ignores_corruption(tmp_path):
    cache_store(tmp_path, 44, "triple", 100, {"a": 1})
    path = tmp_path / f"{cache_key(44, 'triple', 100)}.json"
    path.write_text("{ not json")
    assert cache_load(tmp_path, 44, "triple", 100) is None


def test_cache_version_invalidates(monkeypatch, tmp_path):
    import feketepoly.pipeline as pipeline

    cache_store(tmp_path, 44, "triple", 100, {"a": 1})
    monkeypatch.setattr(pipeline, "CACHE_VERSION", pipeline.CACHE_VERSION + 1)
    assert cache_load(tmp_path, 44, "triple", 100) is None


# -- command line -----------------------------------------------------------------


def test_cli_construct_44(capsys):
    assert main(["construct", "44"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["f"] == [str(c) for c in paper_f44()]
    assert data["g"] == [str(c) for c in paper_g44()]


def test_cli_construct_rejects_non_fundamental(capsys):
    assert main(["construct", "43"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_construct_minus15(capsys):
    assert main(["construct", "-15"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["family"] == "-3p"
    assert data["p"] == 5


def test_cli_compact_and_trace(capsys):
    assert main(["compact", "44"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["f_text"] == "x^8 - x^7 + 2*x^6 + 3*x^4 + 2*x^2 - x + 1"
    assert main(["trace", "44"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["g_text"] == "x^4 - x^3 - 2*x^2 + 3*x + 1"


def test_cli_mults(capsys):
    assert main(["mults", "44"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["v"] == 1
    assert {"n": 4, "r": 1} in data["factors"]


def test_cli_factor_mod(capsys):
    assert main(["factor-mod", "76", "227"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["degrees"] == {"2": 1, "4": 1, "5": 2}
    assert len(data["factors"]) == 4


def test_cli_certify_quadruple(capsys):
    assert main(["certify", "44", "--mode", "quadruple"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [w["q"] for w in data["witnesses"]] == [3, 31, 97, 647]


def test_cli_certify_kernel_76(capsys):
    assert main(["certify", "76", "--mode", "kernel"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["witnesses"][0]["q"] == 227
    assert data["group"] == "ker_sign_hyperoctahedral(8)"


def test_cli_certify_not_found_exit_code(capsys):
    assert main(["certify", "76", "--mode", "quadruple", "--bound", "5000"]) == 3


def test_cli_certify_cache(tmp_path, capsys):
    args = ["certify", "44", "--mode", "triple", "--cache-dir", str(tmp_path)]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_cli_table_and_verify(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code = main(
        [
            "table",
            "--family",
            "4p",
            "--mode",
            "triple",
            "--p-min",
            "11",
            "--p-max",
            "23",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# generated ")
    assert lines[1] == "p,delta,q1,q2,q3,q4,group,ms"
    assert lines[2].startswith("11,44,3,7,43,")

    fixture = tmp_path / "check.csv"
    fixture.write_text("family,mode,p,q1,q2,q3,q4\nFourP,triple,11,3,7,43,\n")
    assert main(["verify-table", str(fixture)]) == 0
    assert "0 failures" in capsys.readouterr().out

    bad = tmp_path / "bad.csv"
    bad.write_text("family,mode,p,q1,q2,q3,q4\nFourP,triple,11,7,7,43,\n")
    assert main(["verify-table", str(bad)]) == 4
    assert "FAIL" in capsys.readouterr().out


def test_cli_verify_missing_file(capsys):
    assert main(["verify-table", "/nonexistent/file.csv"]) == 2


def test_cli_table_rejects_bad_combo(capsys):
    code = main(
        [
            "table",
            "--family",
            "4p",
            "--mode",
            "twoplusfourcycle",
            "--p-max",
            "50",
        ]
    )
    assert code == 2
