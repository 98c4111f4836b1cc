import io
import json
import subprocess
import sys

import pytest

from gf2coprime.cli import run
from gf2coprime.enumerator import count_pairs


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_count():
    assert call("count", "3") == (0, "10\n")


def test_count_per_k():
    code, text = call("count", "4", "--per-k")
    assert code == 0
    assert text == "2\t24\n3\t12\n4\t6\ntotal\t42\n"


def test_trace_bin():
    code, text = call("trace", "1111", "1001")
    assert code == 0
    assert text.splitlines() == [
        "(1111, 1001) --q=1--> (1001, 110)",
        "(1001, 110) --q=11--> (110, 11)",
        "(110, 11) --q=10--> (11, 0)",
    ]


def test_bijection_round_trip():
    code, text = call("bijection", "x^3+x^2+x+1", "x^3+1", "--format", "human")
    assert code == 0
    f, g = text.strip().split("\t")
    assert (f, g) == ("x^3+x^2+1", "x^3+x")
    assert call("bijection", f, g, "--format", "human")[1] == "x^3+x^2+x+1\tx^3+1\n"


def test_enumerate_human():
    code, text = call("enumerate", "2", "--format", "human")
    assert code == 0
    assert text == "x^2+x+1\tx^2+1\nx^2+1\tx^2+x+1\n"


def test_enumerate_hex():
    _, text = call("enumerate", "3", "--format", "hex", "--limit", "2")
    assert text == "b\t9\n9\tb\n"


@pytest.mark.parametrize("n", range(1, 11))
def test_count_equals_enumerate_lines(n):
    _, count = call("count", str(n))
    _, text = call("enumerate", str(n))
    assert int(count) == len(text.splitlines())


@pytest.mark.parametrize("m", [0, 3, 10, 1000])
def test_limit(m):
    code, text = call("enumerate", "4", "--limit", str(m))
    assert code == 0
    assert len(text.splitlines()) == min(m, count_pairs(4))


def test_enumerate_unordered_and_k():
    _, text = call("enumerate", "5", "--unordered")
    assert len(text.splitlines()) == count_pairs(5) // 2
    _, text = call("enumerate", "5", "--k", "3")
    assert len(text.splitlines()) == 2**2 * 6 * 2


def test_deterministic():
    assert call("enumerate", "6") == call("enumerate", "6")


def test_verify():
    assert call("verify", "5")[0] == 0
    code, text = call("verify", "4", "--json")
    report = json.loads(text)
    assert code == 0 and report["ok"] and report["formula_count"] == 42
    assert report["missing"] == [] and report["extra"] == []


def test_verify_bound_is_usage_error():
    assert call("verify", "11")[0] == 2


def test_lang():
    assert call("lang", "count", "4") == (0, "6\n")
    assert call("lang", "words", "3") == (0, "110\n111\n")
    assert call("lang", "words", "1") == (0, "")


def test_compositions():
    assert call("compositions", "4", "2") == (0, "1+3\n2+2\n3+1\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["count"],
        ["count", "x"],
        ["bogus"],
        ["trace", "10a", "11"],
        ["trace", "11", "1011"],
        ["bijection", "111", "11"],
        ["enumerate", "3", "--format", "oct"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_module_entry_point_streams_prefix():
    proc = subprocess.run(
        [sys.executable, "-m", "gf2coprime", "enumerate", "20", "--limit", "5"],
        capture_output=True, text=True, timeout=30,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 5
