import io
import json
import subprocess
import sys

import pytest

from fano3lab.cli import argv_from_output, run

IDENT6 = ";".join(",".join(str(int(i == j)) for j in range(6)) for i in range(6))
DIAG6 = ";".join(",".join(str((i + 2) * int(i == j)) for j in range(6)) for i in range(6))


def skew(pairs):
    rows = [[0] * 6 for _ in range(6)]
    for (i, j), v in pairs.items():
        rows[i][j], rows[j][i] = v, -v
    return ";".join(",".join(map(str, r)) for r in rows)


A1 = skew({(0, 4): 1, (1, 5): 1})
A2 = skew({(2, 4): 1, (3, 5): 1})
REST = [skew({(0, 1): 1}), skew({(2, 3): 1}), skew({(0, 2): 1, (1, 3): 1})]
PF_SPACE = [flag for m in [A1, A2] + REST for flag in ("--a", m)]

# one successful invocation per verb
INVOCATIONS = [
    ["classify-point", "--form", "x*y*(x^4-y^4)"],
    ["lines-through", "--point", "x^5*y"],
    ["line-intersect", "--sigma1", "x^2", "--sigma2", "x*y"],
    ["sigma-z", "--case", "a"],
    ["sigma-x", "--case", "m", "--u", "2"],
    ["incidence", "--case", "a", "--sigma", "x^2"],
    ["bisecant", "--case", "mu"],
    ["imult", "--c1", "c2", "--c2", "c1^2-4*c0*c2", "--at", "1:0:0"],
    ["closure", "--preset", "oct"],
    ["stabilizer-check", "--matrix", "0,1;1,0", "--form", "x*y*(x^4-y^4)"],
    ["aut", "--case", "a"],
    ["fano", "lookup", "--index", "1", "--genus", "12"],
    ["fano", "partner", "--genus", "10"],
    ["fano", "genus", "--K3", "-22"],
    ["fano", "hilbert", "--index", "2", "--degree", "3"],
    ["fano", "aut", "--index", "2", "--degree", "5"],
    ["fano", "double-covers"],
    ["chi-normal", "--index", "1", "--kind", "reducible-conic"],
    ["mukai", "--genus", "10"],
    ["fermat-cones"],
    ["pfaffian", "--matrix", skew({(0, 1): 1, (2, 3): 1, (4, 5): 1})],
    ["pf-line-check", "--a2", A1, "--a2", A2] + PF_SPACE,
    ["pf-recover-w4", "--a2", A1, "--a2", A2],
    ["pf-conic", "--a2", A1, "--a2", A2] + PF_SPACE,
    ["pencil-disc", "--q1", IDENT6, "--q2", DIAG6],
]


def invoke(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def test_lines_through_example():
    code, text = invoke(["lines-through", "--point", "x*y*(x^4-y^4)"])
    assert code == 0
    doc = json.loads(text)
    assert doc["verb"] == "lines-through"
    assert {ln["sigma_point"] for ln in doc["result"]["lines"]} == {"x*y", "x^2 - y^2", "x^2 + y^2"}


def test_degenerate_parameter_exit_code():
    code, text = invoke(["sigma-x", "--case", "m", "--u", "1"])
    assert code == 1
    err = json.loads(text)["error"]
    assert err["kind"] == "DegenerateParameter" and err["details"]["factor"] == "u^4-1"


def test_no_such_family_exit_code():
    code, text = invoke(["fano", "lookup", "--index", "1", "--genus", "13"])
    assert code == 1 and json.loads(text)["error"]["kind"] == "NoSuchFamily"


@pytest.mark.parametrize("argv", [["frobnicate"], ["classify-point"], ["classify-point", "--form", "x^^2"],
                                  ["closure", "--preset", "oct", "--cap", "0"]])
def test_usage_and_parse_errors_exit_two(argv):
    code, text = invoke(argv)
    assert code == 2
    assert "error" in json.loads(text)


@pytest.mark.parametrize("argv", INVOCATIONS, ids=lambda a: " ".join(a[:2])[:30])
def test_every_verb_succeeds_and_round_trips(argv):
    code, first = invoke(argv)
    assert code == 0, first
    doc = json.loads(first)
    assert set(doc) == {"verb", "inputs", "result"}
    code2, second = invoke(argv_from_output(doc))
    assert code2 == 0 and second == first


def test_output_is_deterministic():
    argv = ["sigma-x", "--case", "a"]
    assert invoke(argv)[1] == invoke(argv)[1]


def test_scalar_serialization():
    doc = json.loads(invoke(["pfaffian", "--matrix", skew({(0, 1): 2, (2, 3): 1, (4, 5): 3})])[1])
    pf = doc["result"]["pfaffian"]
    # scalars are reported in the power basis of the working field, as [num, den] pairs
    assert pf["conductor"] == 40 and len(pf["coords"]) == 16
    assert pf["coords"][0] == [6, 1] and all(c == [0, 1] for c in pf["coords"][1:])


def test_conductor_from_environment(monkeypatch):
    monkeypatch.setenv("FANO3LAB_CONDUCTOR", "4")
    doc = json.loads(invoke(["lines-through", "--point", "x^6"])[1])
    assert doc["inputs"]["conductor"] == 4
    monkeypatch.setenv("FANO3LAB_CONDUCTOR", "zero")
    assert invoke(["lines-through", "--point", "x^6"])[0] == 2


def test_explicit_conductor_wins(monkeypatch):
    monkeypatch.setenv("FANO3LAB_CONDUCTOR", "4")
    doc = json.loads(invoke(["lines-through", "--point", "x^6", "--conductor", "8"])[1])
    assert doc["inputs"]["conductor"] == 8


def test_text_format():
    code, text = invoke(["mukai", "--genus", "10", "--format", "text"])
    assert code == 0
    assert "grassmannian: Gr(2,7)" in text
    with pytest.raises(json.JSONDecodeError):
        json.loads(text)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fano3lab", "fano", "genus", "--K3", "-4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["genus"] == 3
