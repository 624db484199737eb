import pytest
from hypothesis import given, strategies as st

from relaxkit.coherent import (
    BUILTIN_LAMBDAS,
    EvConstSeq,
    FiniteCoherentFamily,
    OmegaFamily,
    check_coherent,
    lambda_check,
    limit,
    omega_limit,
    parse_evconst,
)
from relaxkit.errors import NotCoherent, ParseError, ShapeMismatch, Unclassifiable


def fam(funcs):
    return FiniteCoherentFamily.from_funcs(funcs)


def test_check_examples():
    assert check_coherent(fam([[1], [1, 0], [1, 0, 1]])) is None
    assert check_coherent(fam([[1], [0, 0]])) == (1, 0, 0)
    assert check_coherent(fam([[0]])) is None
    assert limit(fam([[1], [1, 0], [1, 0, 1]])) == [1, 0, 1]
    with pytest.raises(NotCoherent):
        limit(fam([[1], [0, 0]]))


def test_shapes_and_json():
    with pytest.raises(ShapeMismatch):
        fam([[1], [1]])
    doc = {"order": {"labels": ["x", "y"], "position": [0, 1]}, "funcs": [[0], [0, 1]]}
    assert limit(FiniteCoherentFamily.from_json(doc)) == [0, 1]
    with pytest.raises(ParseError):
        FiniteCoherentFamily.from_json({"order": {}})


@given(st.lists(st.integers(0, 3), min_size=1, max_size=10))
def test_finite_triviality(top):
    f = fam([top[: a + 1] for a in range(len(top))])
    assert check_coherent(f) is None and limit(f) == top


@given(st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), min_size=4, max_size=4))
def test_check_matches_definition(rows):
    funcs = [row[: a + 1] for a, row in enumerate(rows)]
    ok = all(funcs[a][: b + 1] == funcs[b] for a in range(4) for b in range(a))
    assert (check_coherent(fam(funcs)) is None) == ok


def test_evconst():
    assert EvConstSeq.normalized([1, 0, 0], 0) == EvConstSeq((1,), 0)
    with pytest.raises(ShapeMismatch):
        EvConstSeq((1, 0), 0)
    s = parse_evconst("10(1)")
    assert [s[i] for i in range(4)] == [1, 0, 1, 1] and str(s) == "10(1)"
    with pytest.raises(ParseError):
        parse_evconst("12(0)")


def test_omega_limits():
    assert omega_limit(OmegaFamily.constant(0)) == EvConstSeq((), 0)
    assert omega_limit(OmegaFamily.step()) == EvConstSeq((), 1)
    explicit = OmegaFamily.explicit([parse_evconst("10(0)")])
    assert omega_limit(explicit) == EvConstSeq((1,), 0)
    step = OmegaFamily.step()
    assert all(step.diagonal(n) == 1 for n in range(10**4))


def test_explicit_family_diagonal():
    stages = [parse_evconst(s) for s in ("0(1)", "01(0)", "011(0)")]
    F = OmegaFamily.explicit(stages)
    lim = omega_limit(F)
    assert [lim[n] for n in range(6)] == [F.diagonal(n) for n in range(6)] == [0, 1, 1, 0, 0, 0]
    with pytest.raises(NotCoherent):
        OmegaFamily.explicit([parse_evconst("0(0)"), parse_evconst("1(0)")])
    with pytest.raises(Unclassifiable):
        omega_limit(OmegaFamily.explicit([parse_evconst("0" * 20 + "1(0)")]), probe_bound=10)


def test_lambda_verdicts():
    ez = BUILTIN_LAMBDAS["eventually-zero"]
    v = lambda_check(OmegaFamily.step(), ez)
    assert v.verdict == "counterexample" and v.stages_admissible and not v.limit_admissible
    assert v.limit == EvConstSeq((), 1)
    assert lambda_check(OmegaFamily.constant(0), ez).verdict == "no counterexample"
    for fam_ in (OmegaFamily.step(), OmegaFamily.constant(1)):
        assert lambda_check(fam_, BUILTIN_LAMBDAS["all"]).verdict == "no counterexample"


def test_rejected_stage_reported():
    v = lambda_check(OmegaFamily.step(), lambda s: True, restriction_pred=lambda bits: len(bits) < 3)
    assert v.first_rejected_stage == 2 and v.verdict == "no counterexample"
