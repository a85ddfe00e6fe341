"""Command-line behavior: formats, exit codes, table/grid output."""

import csv
import dataclasses
import io
import json

import pytest

from mpoly_topo import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


# -- compute -----------------------------------------------------------------------


def test_compute_text_output(capsys):
    code, out, _ = run(capsys, "compute", "--family", "vphy", "--params", "m=2,n=2", "--format", "text")
    assert code == 0
    assert out.strip() == "50.9117"


def test_compute_text_path(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path", "--params", "n=3")
    assert code == 0
    assert out.strip() == "4.4721"


def test_compute_graph_file_matches_family(tmp_path, capsys):
    edge_file = tmp_path / "p3.edges"
    edge_file.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "compute", "--graph", str(edge_file))
    assert code == 0
    assert out.strip() == "4.4721"


def test_compute_json_matches_text(capsys):
    _, text_out, _ = run(capsys, "compute", "--family", "vphy", "--params", "m=2,n=2")
    code, json_out, _ = run(
        capsys, "compute", "--family", "vphy", "--params", "m=2,n=2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(json_out)
    assert obj["routes"]["pipeline"] == float(text_out.strip())
    assert obj["agreement"] is True
    assert obj["input"] == "vphy{m=2,n=2}"


def test_compute_csv_format(capsys):
    code, out, _ = run(capsys, "compute", "--family", "cycle", "--params", "n=9", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0][:4] == ["input", "hso_float", "hso_exact", "agreement"]
    assert rows[1][1] == "12.7279"
    assert rows[1][2] == "9*sqrt(2)"


def test_format_env_var_sets_default(capsys, monkeypatch):
    monkeypatch.setenv(cli.FORMAT_ENV_VAR, "json")
    code, out, _ = run(capsys, "compute", "--family", "cycle", "--params", "n=9")
    assert code == 0
    assert json.loads(out)["routes"]["pipeline"] == 12.7279


def test_bad_env_var_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(cli.FORMAT_ENV_VAR, "yaml")
    code, _, err = run(capsys, "compute", "--family", "cycle", "--params", "n=9")
    assert code == 64
    assert "MPOLY_TOPO_FORMAT" in err


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "--family", "heptagon")
    assert code == 64
    assert "unknown family token" in err


def test_missing_source_is_usage_error(capsys):
    code, _, _ = run(capsys, "compute")
    assert code == 64
    code, _, _ = run(capsys, "compute", "--family", "cycle", "--params", "n=9", "--graph", "x")
    assert code == 64


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "compute", "--family", "path", "--params", "n=2")
    assert code == 3
    assert "n >= 3" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "compute", "--graph", "/nonexistent/p3.edges")
    assert code == 66


def test_malformed_edge_file_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 0\n")
    code, _, err = run(capsys, "compute", "--graph", str(bad))
    assert code == 66
    assert "self-loop" in err


def test_route_disagreement_exit_code(capsys, monkeypatch):
    real = cli.compute_report

    def broken(source, **kwargs):
        return dataclasses.replace(real(source, **kwargs), agreement=False)

    monkeypatch.setattr(cli, "compute_report", broken)
    code, _, _ = run(capsys, "compute", "--family", "cycle", "--params", "n=9")
    assert code == 2


# -- table --------------------------------------------------------------------------


def test_table_benzenoid_diagonal(capsys):
    code, out, _ = run(capsys, "table", "--family", "benzenoid", "--range", "1..3")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["params", "hso_float", "hso_exact", "table_expected", "match", "structural"]
    assert [r[1] for r in rows[1:]] == ["12.8680", "49.9176", "103.9378"]
    assert [r[4] for r in rows[1:]] == ["true", "true", "true"]
    assert [r[5] for r in rows[1:]] == ["false", "true", "true"]


def test_table_petaa_range(capsys):
    code, out, _ = run(capsys, "table", "--family", "petaa", "--range", "1..2")
    rows = parse_csv(out)
    assert code == 0
    assert [r[1] for r in rows[1:]] == ["126.6894", "287.2420"]
    assert [r[3] for r in rows[1:]] == ["126.6894", "287.2420"]


def test_table_flags_nanotube_erratum(capsys):
    code, out, _ = run(capsys, "table", "--family", "vphx", "--pairs", "2,2")
    rows = parse_csv(out)
    assert code == 0
    assert rows[1][0] == "m=2;n=2"
    assert rows[1][1] == "51.1918"
    assert rows[1][3] == "49.9176"
    assert rows[1][4] == "false"


def test_table_uses_lf_line_endings(capsys):
    _, out, _ = run(capsys, "table", "--family", "pah", "--range", "1..2")
    assert "\r" not in out


def test_table_skips_invalid_tuples(capsys):
    code, out, err = run(capsys, "table", "--family", "cycle", "--range", "2..4")
    rows = parse_csv(out)
    assert code == 0
    assert [r[0] for r in rows[1:]] == ["n=3", "n=4"]
    assert "skipping" in err


def test_table_with_no_valid_tuples_is_usage_error(capsys):
    code, _, _ = run(capsys, "table", "--family", "cycle", "--range", "1..2")
    assert code == 64


def test_table_empty_range_is_usage_error(capsys):
    code, _, _ = run(capsys, "table", "--family", "pah", "--range", "5..3")
    assert code == 64


def test_table_requires_a_range(capsys):
    code, _, _ = run(capsys, "table", "--family", "pah")
    assert code == 64


def test_table_rejects_conflicting_or_misplaced_pairs(capsys):
    code, _, _ = run(capsys, "table", "--family", "pah", "--pairs", "1,2")
    assert code == 64
    code, _, _ = run(capsys, "table", "--family", "vphx", "--range", "1..2", "--pairs", "1,2")
    assert code == 64


def test_full_table_sweeps_flag_exactly_the_known_errata(capsys):
    # across every family with reference rows, the match column must be false
    # exactly for the nanotube cells [2,2]..[10,10] and the whole zinc
    # porphyrin row, and true everywhere else
    flagged = {}
    for family in ["boron", "benzenoid", "vphx", "vphy", "pg", "tadpole",
                   "polyphenylene", "petim", "dnpn", "dpzn", "petaa", "pah"]:
        code, out, _ = run(capsys, "table", "--family", family, "--range", "1..10")
        assert code == 0
        for row in parse_csv(out)[1:]:
            params, match = row[0], row[4]
            assert match in ("true", "false"), (family, row)
            if match == "false":
                flagged.setdefault(family, []).append(params)
    assert flagged == {
        "vphx": [f"m={k};n={k}" for k in range(2, 11)],
        "dpzn": [f"n={k}" for k in range(1, 11)],
    }


# -- grid ---------------------------------------------------------------------------


def test_grid_pah_origin_is_zero(capsys):
    code, out, _ = run(
        capsys, "grid", "--family", "pah", "--params", "n=5",
        "--xrange", "0:1", "--yrange", "0:1", "--steps", "2",
    )
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["x", "y", "value"]
    assert rows[1] == ["0.0", "0.0", "0.0"]


def test_grid_vphy_unit_point(capsys):
    code, out, _ = run(
        capsys, "grid", "--family", "vphy", "--params", "m=5,n=5",
        "--xrange", "0:1", "--yrange", "0:1", "--steps", "2",
    )
    rows = parse_csv(out)
    assert rows[-1] == ["1.0", "1.0", "225.0"]


def test_grid_benzenoid_unit_point_is_edge_count(capsys):
    code, out, _ = run(
        capsys, "grid", "--family", "benzenoid", "--params", "m=5,n=5",
        "--xrange", "0:1", "--yrange", "0:1", "--steps", "2",
    )
    rows = parse_csv(out)
    assert rows[-1] == ["1.0", "1.0", "176.0"]


def test_grid_row_count(capsys):
    code, out, _ = run(
        capsys, "grid", "--family", "vphy", "--params", "m=1,n=1", "--steps", "5",
    )
    rows = parse_csv(out)
    assert len(rows) == 1 + 25


def test_grid_bad_steps_is_domain_error(capsys):
    code, _, _ = run(
        capsys, "grid", "--family", "vphy", "--params", "m=1,n=1", "--steps", "1",
    )
    assert code == 3


# -- families ------------------------------------------------------------------------


def test_families_lists_all(capsys):
    code, out, _ = run(capsys, "families")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 18
    assert any("catalog valid for m >= 2" in line for line in lines)


def test_families_json(capsys):
    code, out, _ = run(capsys, "families", "--format", "json")
    entries = json.loads(out)
    assert len(entries) == 18
    by_token = {e["family"]: e for e in entries}
    assert by_token["tadpole"]["params"] == ["n", "m"]
    assert by_token["tadpole"]["routes"] == ["construct", "catalog", "closed"]
    assert by_token["pah"]["routes"] == ["catalog", "closed"]
    assert "m >= 2" in by_token["tadpole"]["note"]


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--help"])
    assert exc.value.code == 0
