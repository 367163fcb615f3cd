import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from ellrange.cli import (
    MatrixInput,
    MatrixParseError,
    fmt_number,
    main,
    parse_matrix,
)
from ellrange.core import IDENTITY, Matrix2C
from ellrange.numrange import numerical_range

CANON_FLAT = "1,0,4,0,0,0,-1,0"
NILPOTENT_FLAT = "0,0,1,0,0,0,0,0"
ZERO_FLAT = "0,0,0,0,0,0,0,0"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def flat(A: Matrix2C) -> str:
    return ",".join(fmt_number(v) for z in A.entries() for v in (z.real, z.imag))


class TestParseMatrix:
    def test_flat(self):
        assert parse_matrix(MatrixInput("inline-flag", CANON_FLAT)) == Matrix2C(1, 4, 0, -1)

    def test_json_identity(self):
        text = json.dumps([[{"re": 1, "im": 0}, {"re": 0, "im": 0}],
                           [{"re": 0, "im": 0}, {"re": 1, "im": 0}]])
        assert parse_matrix(MatrixInput("standard-input", text)) == IDENTITY

    def test_complex_entries_in_reading_order(self):
        assert parse_matrix("1,2,3,4,5,6,7,8") == Matrix2C(1 + 2j, 3 + 4j, 5 + 6j, 7 + 8j)

    @pytest.mark.parametrize("text, reason, token", [
        ("1,0,4,0", "arity", "got 4"),
        ("1,0,4,0,0,0,-1,abc", "number", "'abc'"),
        ("1,0,4,0,0,0,-1,inf", "non-finite", "'inf'"),
        ("[[1,2]", "json", "malformed JSON"),
        ('[[{"re":1,"im":0}]]', "arity", "expected"),
        ('[[{"re":1,"im":0},{"re":0,"im":0}],[{"re":0,"im":0},{"re":NaN,"im":0}]]',
         "non-finite", "NaN"),
        ('[[{"re":1,"im":0},{"re":0,"im":0}],[{"re":0,"im":0},{"re":"x","im":0}]]',
         "number", "'x'"),
        ('[[{"re":1},{"re":0,"im":0}],[{"re":0,"im":0},{"re":1,"im":0}]]', "json", "keys"),
    ])
    def test_errors_are_distinct(self, text, reason, token):
        with pytest.raises(MatrixParseError) as info:
            parse_matrix(text)
        assert info.value.reason == reason
        assert token in str(info.value)


class TestFormatting:
    @pytest.mark.parametrize("x, s", [(0.0, "0"), (-0.0, "0"), (2.0, "2"),
                                      (math.sqrt(5), "2.2360679774997898"),
                                      (1e-5, "1.0000000000000001e-05")])
    def test_fmt(self, x, s):
        assert fmt_number(x) == s

    def test_round_trip(self, rng):
        for x in rng.normal(size=1000) * 10.0 ** rng.integers(-30, 30, 1000):
            assert float(fmt_number(x)) == x


class TestRange:
    def test_canonical_json(self, capsys):
        code, out, _ = run(capsys, "range", "--matrix", CANON_FLAT)
        d = json.loads(out)
        assert code == 0 and d["schema"] == 1 and d["kind"] == "ellipse"
        assert d["semi_major"] == math.sqrt(5) and d["semi_minor"] == 2
        assert {f["re"] for f in d["foci"]} == {1, -1}

    def test_scalar_point(self, capsys):
        _, out, _ = run(capsys, "range", "--matrix", "3,0,0,0,0,0,3,0")
        d = json.loads(out)
        assert d["kind"] == "point" and d["center"] == {"re": 3, "im": 0}

    def test_segment(self, capsys):
        _, out, _ = run(capsys, "range", "--matrix", "1,0,0,0,0,0,-1,0")
        d = json.loads(out)
        assert d["kind"] == "segment"
        assert sorted(f["re"] for f in d["foci"]) == [-1, 1]

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "range", "--format", "csv", "--matrix", CANON_FLAT)
        header, row = out.strip().split("\n")
        assert header.split(",")[0] == "kind"
        assert row.split(",")[7] == "2.2360679774997898"

    def test_global_flags_before_command(self, capsys):
        code, out, _ = run(capsys, "--matrix", CANON_FLAT, "--format", "csv", "range")
        assert code == 0 and out.startswith("kind,")

    def test_file_input(self, capsys, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps([[{"re": 0, "im": 0}, {"re": 1, "im": 0}],
                                 [{"re": 0, "im": 0}, {"re": 0, "im": 0}]]))
        _, out, _ = run(capsys, "range", "--file", str(p))
        assert json.loads(out)["kind"] == "disk"

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "range", "--file", str(tmp_path / "nope"))
        assert code == 2 and "cannot read" in err

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(CANON_FLAT))
        code, out, _ = run(capsys, "range", "--stdin")
        assert code == 0 and json.loads(out)["semi_minor"] == 2

    def test_arity_error(self, capsys):
        code, out, err = run(capsys, "range", "--matrix", "1,0,4,0")
        assert code == 2 and out == "" and "8" in err

    def test_needs_exactly_one_source(self, capsys):
        assert run(capsys, "range")[0] == 2


class TestContains:
    def test_inside(self, capsys):
        code, out, _ = run(capsys, "contains", "--matrix", NILPOTENT_FLAT, "--point", "0,0")
        assert (code, out.strip()) == (0, "inside")

    def test_outside(self, capsys):
        code, out, _ = run(capsys, "contains", "--matrix", NILPOTENT_FLAT, "--point", "0.51,0")
        assert (code, out.strip()) == (1, "outside")

    def test_garbage(self, capsys):
        assert run(capsys, "contains", "--matrix", "garbage", "--point", "0,0")[0] == 2

    def test_bad_point(self, capsys):
        assert run(capsys, "contains", "--matrix", NILPOTENT_FLAT, "--point", "1")[0] == 2

    def test_round_trip_interior_grid(self, capsys):
        A = Matrix2C(0.3 - 1j, 2, 1j, -1)
        _, out, _ = run(capsys, "range", "--matrix", flat(A))
        d = json.loads(out)
        c = complex(d["center"]["re"], d["center"]["im"])
        rot = complex(math.cos(d["orientation"]), math.sin(d["orientation"]))
        for r in np.linspace(0, 0.99, 10):
            for t in np.linspace(0, 2 * math.pi, 10, endpoint=False):
                z = c + rot * r * complex(d["semi_major"] * math.cos(t),
                                          d["semi_minor"] * math.sin(t))
                code, verdict, _ = run(capsys, "contains", "--matrix", flat(A),
                                       "--point", f"{fmt_number(z.real)},{fmt_number(z.imag)}")
                assert (code, verdict.strip()) == (0, "inside")


class TestBoundary:
    def test_scalar(self, capsys):
        _, out, _ = run(capsys, "boundary", "--matrix", "2,1,0,0,0,0,2,1",
                        "--points", "4", "--format", "csv")
        rows = out.strip().split("\n")
        assert rows[0] == "t,re,im"
        assert [r.split(",")[1:] for r in rows[1:]] == [["2", "1"]] * 4

    def test_quarter_turns(self, capsys):
        _, out, _ = run(capsys, "boundary", "--matrix", CANON_FLAT, "--points", "4")
        pts = [complex(p["re"], p["im"]) for p in json.loads(out)["points"]]
        s5 = math.sqrt(5)
        assert np.allclose(pts, [s5, 2j, -s5, -2j], atol=1e-15)

    def test_zero_points(self, capsys):
        assert run(capsys, "boundary", "--matrix", CANON_FLAT, "--points", "0")[0] == 2


class TestSample:
    def test_zero_matrix_rows(self, capsys):
        _, out, _ = run(capsys, "sample", "--matrix", ZERO_FLAT, "--n", "3", "--format", "csv")
        lines = out.strip().split("\n")
        assert "seed=1" in lines[0] and lines[1] == "re,im"
        assert lines[2:] == ["0,0"] * 3

    def test_header_only(self, capsys):
        _, out, _ = run(capsys, "sample", "--matrix", CANON_FLAT, "--n", "0", "--format", "csv")
        assert len(out.strip().split("\n")) == 2

    def test_byte_identical(self, capsys):
        args = ("sample", "--matrix", CANON_FLAT, "--n", "200", "--seed", "9")
        assert run(capsys, *args)[1] == run(capsys, *args)[1]

    def test_json(self, capsys):
        _, out, _ = run(capsys, "sample", "--matrix", CANON_FLAT, "--n", "5", "--seed", "2")
        d = json.loads(out)
        assert d["seed"] == 2 and len(d["points"]) == 5


class TestVerify:
    def test_canonical_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--matrix", CANON_FLAT, "--n", "100000", "--seed", "1")
        d = json.loads(out)
        assert code == 0 and d["passed"] and d["n_samples"] == 100000

    def test_zero_matrix(self, capsys):
        code, out, _ = run(capsys, "verify", "--matrix", ZERO_FLAT, "--n", "100", "--seed", "1")
        assert code == 0 and json.loads(out)["max_violation"] == 0

    def test_zero_samples(self, capsys):
        assert run(capsys, "verify", "--matrix", CANON_FLAT, "--n", "0")[0] == 2

    def test_failure_names_quantity(self, capsys, monkeypatch):
        import ellrange.cli as cli
        monkeypatch.setattr(cli, "two_path_deltas", lambda A: {"semi_minor_delta": 1.0})
        code, out, err = run(capsys, "verify", "--matrix", CANON_FLAT, "--n", "10")
        assert code == 1 and "semi_minor_delta" in err
        assert json.loads(out)["failed"] == ["semi_minor_delta"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ellrange", "range", "--matrix", CANON_FLAT],
                          capture_output=True, text=True, env={"NO_COLOR": "1", "PATH": ""})
    assert proc.returncode == 0
    shape = numerical_range(Matrix2C(1, 4, 0, -1))
    assert json.loads(proc.stdout)["semi_major"] == shape.semi_major


def test_negative_leading_values(capsys):
    code, out, _ = run(capsys, "contains", "--matrix", "-1,0,4,0,0,0,1,0", "--point", "-0.5,0")
    assert (code, out.strip()) == (0, "inside")
