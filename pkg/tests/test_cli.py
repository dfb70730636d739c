import json
from pathlib import Path

import pytest

from matula.cli import EXIT_MISMATCH, EXIT_OK, main, parse_bfile
from matula.errors import ParseError
from matula.oracle import analyze, oracle_value
from matula.stats import StatName
from matula.tree import decode

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decode_paren(capsys):
    code, out, _ = run(capsys, "decode", "4")
    assert code == EXIT_OK
    assert out == "(()())\n"


def test_decode_json(capsys):
    code, out, _ = run(capsys, "decode", "4", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["matula"] == "4"


def test_decode_dot(capsys):
    code, out, _ = run(capsys, "decode", "4", "--format", "dot")
    assert code == EXIT_OK
    assert out.startswith("digraph")


def test_encode(capsys):
    code, out, _ = run(capsys, "encode", "(()())")
    assert code == EXIT_OK
    assert out == "4\n"


def test_stat_polynomial(capsys):
    code, out, _ = run(capsys, "stat", "EDP", "987654321")
    assert code == EXIT_OK
    assert out == "15 + 9*x + 5*x^2\n"


def test_stat_scalar(capsys):
    code, out, _ = run(capsys, "stat", "V", "1")
    assert code == EXIT_OK
    assert out == "1\n"


def test_stat_case_insensitive(capsys):
    code, out, _ = run(capsys, "stat", "dsp", "9")
    assert code == EXIT_OK
    assert out == "2*x + 3*x^2\n"


def test_stat_alpha_rational(capsys):
    code, out, _ = run(capsys, "stat", "R_ALPHA", "9", "--alpha=-1")
    assert code == EXIT_OK
    assert out == "3/2\n"


def test_stat_alpha_float(capsys):
    # negative fractions need the --alpha=VALUE spelling
    code, out, _ = run(capsys, "stat", "R_ALPHA", "9", "--alpha=-1/2")
    assert code == EXIT_OK
    assert abs(float(out) - 2.414213562373095) < 1e-9


def test_stat_level_count_k(capsys):
    code, out, _ = run(capsys, "stat", "LEVEL_COUNT", "12", "--k", "1")
    assert code == EXIT_OK
    assert out == "3\n"


def test_stat_invalid_n_is_computation_error(capsys):
    code, _, err = run(capsys, "stat", "V", "0")
    assert code == 1
    assert err.startswith("error:")


def test_unknown_stat_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stat", "NOPE", "9"])
    assert exc.value.code == 2


def test_bad_alpha_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stat", "R_ALPHA", "9", "--alpha", "zzz"])
    assert exc.value.code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "V", "1", "5")
    assert code == EXIT_OK
    assert out.splitlines() == ["1 1", "2 2", "3 3", "4 3", "5 4"]


def test_table_is_deterministic(capsys):
    _, first, _ = run(capsys, "table", "W", "1", "40")
    _, second, _ = run(capsys, "table", "W", "1", "40")
    assert first == second


def test_table_bfile_roundtrips_through_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "E", "1", "60", "--bfile")
    assert code == EXIT_OK
    bfile = parse_bfile(out)
    assert [i for i, _ in bfile.entries] == list(range(1, 61))
    path = tmp_path / "b.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", "E", str(path))
    assert code == EXIT_OK
    assert "0 mismatches" in out


def test_table_bfile_rejects_polynomials(capsys):
    code, _, err = run(capsys, "table", "EDP", "1", "3", "--bfile")
    assert code == 1
    assert "integer" in err


def test_verify_fixture_vertknown(capsys):
    code, out, _ = run(capsys, "verify", "V", str(FIXTURES / "b061775_oracle.txt"))
    assert code == EXIT_OK
    assert "verified 100 terms" in out


def test_verify_fixture_edges(capsys):
    code, out, _ = run(capsys, "verify", "E", str(FIXTURES / "b196050_oracle.txt"))
    assert code == EXIT_OK


def test_verify_limit(capsys):
    code, out, _ = run(
        capsys, "verify", "V", str(FIXTURES / "b061775_oracle.txt"), "--limit", "10"
    )
    assert code == EXIT_OK
    assert "verified 10 terms" in out


def test_verify_reports_mismatch(capsys, tmp_path):
    text = (FIXTURES / "b061775_oracle.txt").read_text()
    lines = text.splitlines()
    lines[10] = "7 999"  # line 10 holds n=7 (after the 4 comment lines)
    path = tmp_path / "bad.txt"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", "V", str(path))
    assert code == EXIT_MISMATCH
    assert "index 7" in out and "999" in out and "4" in out


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "V", "/no/such/file.txt")
    assert code == 1
    assert err.startswith("error:")


def test_verify_malformed_bfile(capsys, tmp_path):
    path = tmp_path / "junk.txt"
    path.write_text("1 1\nbogus line here\n")
    code, _, err = run(capsys, "verify", "V", str(path))
    assert code == 1
    assert "error:" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "60", "--seed", "11")
    assert code == EXIT_OK
    assert "selftest OK" in out


def test_bfile_fixtures_are_oracle_derived():
    # Regenerate both fixtures from the explicit-tree oracle and compare.
    for fname, stat in (
        ("b061775_oracle.txt", StatName.V),
        ("b196050_oracle.txt", StatName.E),
    ):
        text = (FIXTURES / fname).read_text()
        assert "oracle" in text.splitlines()[1]
        entries = parse_bfile(text).entries
        assert len(entries) == 100
        for n, value in entries:
            assert value == oracle_value(analyze(decode(n)), stat)


def test_parse_bfile_skips_comments_and_blanks():
    bfile = parse_bfile("# header\n\n1 5\n2 6\n\n# trailing\n3 7\n")
    assert bfile.entries == [(1, 5), (2, 6), (3, 7)]


def test_parse_bfile_rejects_bad_lines():
    with pytest.raises(ParseError):
        parse_bfile("1 2 3\n")
    with pytest.raises(ParseError):
        parse_bfile("1 x\n")
    with pytest.raises(ParseError) as exc:
        parse_bfile("1 5\n1 6\n")
    assert exc.value.offset == 4  # second line starts at byte 4


def test_parse_bfile_offsets_in_bytes():
    with pytest.raises(ParseError) as exc:
        parse_bfile("# ok\n1 1\nbroken\n")
    assert exc.value.offset == 9
