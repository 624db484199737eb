import io
import json

import pytest

from relaxkit import cardinal, cb, coherent, domain, hf, mostowski, order, ordinal
from relaxkit.cli import DISPATCH, run


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


@pytest.mark.parametrize(
    "argv, out",
    [
        (["hf", "encode", "{{},{{}}}"], "3\n"),
        (["hf", "decode", "3"], "{{},{{}}}\n"),
        (["hf", "rank", "5", "--base", "1"], "3\n"),
        (["hf", "rankfn", "4"], "2\n"),
        (["hf", "beth", "3", "--base", "2"], "65536\n"),
        (["hf", "mem", "0", "1"], "true\n"),
        (["hf", "union", "4", "--set"], "{{{}}}\n"),
        (["hf", "powerset", "1"], "3\n"),
        (["hf", "choice", "3"], "2\n"),
        (["hf", "tc", "4"], "7\n"),
        (["hf", "sep", "7", "--keep", "5"], "5\n"),
        (["hf", "repl", "3", "--map", "singleton"], "6\n"),
        (["ord", "cmp", "w*2+3", "w^2"], "lt\n"),
        (["ord", "add", "1", "w"], "w\n"),
        (["ord", "mul", "w+1", "w+1"], "w^2+w+1\n"),
        (["ord", "sup", "3", "w", "2"], "w\n"),
        (["ord", "classify", "w^2+1"], "successor\n"),
        (["ord", "wpow", "w"], "w^w\n"),
        (["pairidx", "2", "1"], "7\n"),
        (["unpair", "7"], "a=2 b=1\n"),
        (["domain", "empty", "000"], "empty=true\n"),
    ],
)
def test_golden(argv, out):
    assert call(*argv) == (0, out, "")


def test_collapse(write):
    good = write("g.json", {"nodes": ["p", "q", "r"], "edges": [["p", "q"], ["p", "r"], ["q", "r"]]})
    assert call("collapse", good) == (0, "p=0 q=1 r=3\n", "")
    cyc = write("c.json", {"nodes": ["p", "q"], "edges": [["p", "q"], ["q", "p"]]})
    assert call("collapse", cyc) == (1, "not well-founded: cycle p,q\n", "")
    assert call("wf", "check", cyc)[0] == 1
    assert call("wf", "check", good)[1] == "well-founded\nextensional=true\n"
    assert call("wf", "height", good)[1] == "p=0 q=1 r=2\n"
    flat = write("f.json", {"nodes": ["p", "q", "r"], "edges": [["p", "q"], ["p", "r"]]})
    assert call("collapse", flat)[1] == "p=0 q=1 r=1\nnon-injective: q,r\n"


def test_coherent(write):
    code, out, _ = call("coherent", "demo", "--family", "step", "--lambda", "eventually-zero")
    assert code == 0 and out.splitlines()[-1] == "verdict=counterexample"
    assert "limit=(1)" in out
    ok = write("ok.json", {"order": {"labels": ["a", "b"], "position": [0, 1]}, "funcs": [[1], [1, 0]]})
    assert call("coherent", "limit", ok) == (0, "limit=1,0\n", "")
    assert call("coherent", "check", ok)[1] == "coherent\n"
    bad = write("bad.json", {"funcs": [[1], [0, 0]]})
    assert call("coherent", "check", bad) == (1, "not coherent: a=1 b=0 position=0\n", "")
    code, out, _ = call("coherent", "demo", "--family", "explicit", "--stages", "10(0)")
    assert "limit=1(0)" in out and "verdict=no counterexample" in out


def test_cb_and_domain(write):
    doc = {"A": {"labels": ["1", "2"]}, "B": {"labels": ["x", "y"]},
           "f": {"1": "x", "2": "y"}, "g": {"x": "1", "y": "2"}}
    code, out, _ = call("cb", write("cb.json", doc))
    assert code == 0
    assert json.loads(out) == {"bijection": {"1": "x", "2": "y"}, "cases": {"1": "shifted", "2": "shifted"}}
    doc["f"] = {"1": "x", "2": "x"}
    code, out, _ = call("cb", write("bad.json", doc))
    assert code == 1 and "not injective" in out

    eqv = write("e.json", {"labels": ["a", "b", "c"],
                           "pairs": [[True, True, False], [True, True, False], [False, False, True]]})
    assert call("domain", "quotient", eqv)[1] == "classes=a,c\na=a\nb=a\nc=c\n"
    lab = write("l.json", {"labels": ["a", "b"]})
    assert call("domain", "powerset", lab)[1] == "00\n10\n01\n11\n"
    assert call("domain", "powerset", lab, "--bound", "1")[0] == 1
    fib = write("u.json", {"B": {"labels": ["0"]}, "fibers": {"0": {"labels": ["x"]}}})
    assert call("domain", "union", fib)[1] == "(0,x)=0 x\n"


def test_worder(write):
    t = write("t.json", {"labels": ["a", "b"], "leq": [[True, False], [True, True]]})
    assert call("worder", "check", t)[1] == "ok\norder=b,a\n"
    bad = write("b.json", {"labels": ["a", "b"], "leq": [[True, False], [False, True]]})
    code, out, _ = call("worder", "check", bad)
    assert code == 1 and "totality" in out
    wo = {"labels": ["a", "b", "c"], "position": [0, 1, 2]}
    iso = write("i.json", {"A": wo, "B": {"labels": ["x"], "position": [0]}})
    assert call("worder", "iso", iso)[1] == "a=x\nfull=image\n"
    w = write("w.json", wo)
    assert call("worder", "type", w)[1] == "type=3\n"
    assert call("worder", "product", w, "--d", "1")[1] == "(a,a)\n(b,a)\n(c,a)\n"
    assert call("worder", "choice", w)[1] == "order=a,b,c\n"
    assert call("worder", "recurse", w, "--rule", "sum")[1] == "a=1\nb=2\nc=4\n"
    assert call("worder", "recurse", w, "--stop", "2")[1] == "a=0\nb=1\n"
    assert call("worder", "recurse", w, "--seed-values", "5")[1] == "a=5\nb=1\nc=2\n"


def test_cardinal(write):
    d = write("d.json", {"labels": ["a", "b"], "p": {"a": [True, False], "b": [True, True]}})
    assert call("cardinal", "diag", d) == (0, "00\n", "")
    two = write("two.json", {"A": {"labels": ["a", "b"]}, "B": {"labels": ["x"]}})
    assert call("cardinal", "inj", two)[1] == "exists=false\n"
    assert call("cardinal", "card", write("c.json", {"labels": ["a", "b"]}))[1] == "card=2\n"


def test_zfc_check():
    code, out, _ = call("hf", "zfc-check", "--bound", "256")
    assert code == 0
    assert out.splitlines()[0] == "bound=256" and out.splitlines()[-1] == "infinity=skipped (no finite model)"


@pytest.mark.parametrize(
    "argv",
    [
        ["ord", "cmp", "w^", "1"],
        ["hf", "encode", "{"],
        ["hf", "decode", "-3"],
        ["nosuch"],
        ["hf"],
        ["collapse", "/nonexistent/file.json"],
        ["hf", "rank", "1", "--budget", "0"],
        ["hf", "zfc-check", "--bound", "1"],
        ["coherent", "demo", "--family", "explicit", "--stages", "2(0)"],
    ],
)
def test_malformed_exit_2(argv, capsys):
    assert call(*argv)[0] == 2


def test_bad_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, out, err = call("collapse", str(p))
    assert code == 2 and "malformed" in err


def test_budget_and_beth():
    code, out, _ = call("hf", "beth", "6")
    assert code == 1 and "B[6]" in out


def test_deterministic(write):
    a = call("hf", "zfc-check", "--bound", "128", "--seed", "4")
    assert a == call("hf", "zfc-check", "--bound", "128", "--seed", "4")


MODULE_OPS = {
    domain: ["make_domain", "quotient", "powerset", "is_empty", "union_of_fibers"],
    cb: ["cantor_bernstein"],
    order: ["check_well_order", "recursion", "recursive_extension", "order_isomorphism",
            "order_type", "well_order_via_choice", "canonical_product"],
    ordinal: ["ord_cmp", "ord_add", "ord_mul", "omega_pow", "ord_sup", "classify", "pair_index", "unpair"],
    cardinal: ["inj_exists", "card", "cantor_diagonal"],
    hf: ["mem", "decode", "encode", "hf_union", "hf_powerset", "hf_separation", "hf_replacement",
         "hf_choice", "transitive_closure", "beth_mini", "rank", "rank_fn", "zfc_check"],
    mostowski: ["check_well_founded", "check_extensional", "wf_recursion", "collapse"],
    coherent: ["check_coherent", "limit", "omega_limit", "lambda_check"],
}


def test_dispatch_covers_every_operation():
    reached = {op for _, ops in DISPATCH.values() for op in ops}
    missing = [f"{m.__name__}.{name}" for m, names in MODULE_OPS.items()
               for name in names if getattr(m, name) not in reached]
    assert missing == []


def test_dispatch_keys_are_commands():
    for key in DISPATCH:
        argv = key.split() + ["--help"]
        assert call(*argv)[0] == 0
