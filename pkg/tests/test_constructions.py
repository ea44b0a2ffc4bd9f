from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from constacyclic.codes import CodeError, LinearCode, cc_code, dual, min_distance
from constacyclic.constructions import (
    BklcError,
    BklcTable,
    DerivationStep,
    DistanceChooser,
    LabelledChooser,
    best_puncture,
    best_shorten,
    construction_x,
    extend,
    puncture,
    recursively_modify,
    shorten,
)
from constacyclic.cosets import cc_params
from constacyclic.fixtures import bklc_gf7, construction_x_inputs, recursive_labels, recursive_root
from constacyclic.gf import GF
from constacyclic.polyring import Poly, generator_from_check
from oracles import NaiveField, min_weight, span
from test_codes import codes, parity, repetition

SETTINGS = dict(deadline=None, suppress_health_check=[HealthCheck.too_slow])


def test_extend_parity():
    E = extend(parity(3))
    assert (E.n, E.k, min_distance(E).d) == (4, 2, 2)
    assert not E.G[:, -1].any()  # already zero-sum: appended column is zero


@settings(max_examples=50, **SETTINGS)
@given(codes(max_n=7, max_k=3))
def test_extend_against_oracle(C):
    K = NaiveField(C.F.q)
    expect = set()
    for w in span(K, C.G.tolist()):
        s = 0
        for x in w:
            s = K.add(s, x)
        expect.add(w + (K.neg(s),))
    E = extend(C)
    assert span(K, E.G.tolist()) == expect
    assert puncture(E, C.n) == C


def test_puncture_repetition():
    P = puncture(repetition(2, 3), 0)
    assert (P.n, P.k, min_distance(P).d) == (2, 1, 2)


@settings(max_examples=50, **SETTINGS)
@given(codes(max_n=7, max_k=3), st.data())
def test_puncture_and_shorten_against_oracle(C, data):
    K = NaiveField(C.F.q)
    pos = data.draw(st.integers(0, C.n - 1))
    words = span(K, C.G.tolist())
    P = puncture(C, pos)
    assert span(K, P.G.tolist(), C.n - 1) == {w[:pos] + w[pos + 1 :] for w in words}
    S = shorten(C, pos)
    assert span(K, S.G.tolist(), C.n - 1) == {w[:pos] + w[pos + 1 :] for w in words if w[pos] == 0}


@settings(max_examples=40, **SETTINGS)
@given(codes(max_n=7, max_k=4, qs=[2, 3, 5]), st.data())
def test_shorten_puncture_duality(C, data):
    pos = data.draw(st.integers(0, C.n - 1))
    S = shorten(C, pos)
    Pd = puncture(dual(C), pos)
    assert dual(S) == Pd


def test_shorten_parity_and_degenerate():
    S = shorten(parity(3), 0)
    assert (S.n, S.k, min_distance(S).d) == (2, 1, 2)
    F = GF(3)
    C = LinearCode(F, np.array([[1, 0, 2], [0, 0, 1]]))
    S = shorten(C, 1)
    assert (S.n, S.k) == (2, 2)


def test_position_errors():
    with pytest.raises(IndexError):
        puncture(parity(3), 3)
    with pytest.raises(IndexError):
        shorten(parity(3), -1)


def test_best_positions_tie_break_lowest_index():
    C, pos = best_puncture(repetition(3, 4))
    assert pos == 0 and C.n == 3
    F = GF(2)
    C = LinearCode(F, np.array([[1, 1, 0, 0], [0, 0, 1, 1]]))
    S, pos = best_shorten(C)
    assert pos == 0 and (S.n, S.k) == (3, 1)


def test_construction_x_identity():
    F = GF(3)
    C = LinearCode(F, np.array([[1, 0, 1, 2], [0, 1, 1, 1]]))
    empty = LinearCode(F, np.zeros((0, 0), dtype=np.int64))
    X = construction_x(C, C, empty, d_parent=3, d_sub=3)
    assert X == C and X.lower == 3


def test_construction_x_random_ternary():
    rng = np.random.default_rng(7)
    F = GF(3)
    K = NaiveField(3)
    aux = LinearCode(F, np.ones((1, 3), dtype=np.int64))
    for _ in range(10):
        C = LinearCode.from_rows(F, rng.integers(0, 3, size=(4, 8)))
        if C.k != 4:
            continue
        pos = int(rng.integers(0, 8))
        S_short = shorten(C, pos)  # words of C vanishing at pos, without that coordinate
        sub_rows = np.insert(S_short.G, pos, 0, axis=1)
        sub = LinearCode(F, sub_rows)
        if sub.k != 3:
            continue
        dp, ds = min_distance(C).d, min_distance(sub).d
        X = construction_x(C, sub, aux, d_parent=dp, d_sub=ds, d_aux=3)
        assert (X.n, X.k) == (11, 4)
        assert X.lower == min(ds, dp + 3)
        d = min_weight(span(K, X.G.tolist()))
        assert d >= X.lower
        padded = LinearCode(F, np.hstack([sub.G, np.zeros((3, 3), dtype=np.int64)]))
        assert X.contains_code(padded)


def test_construction_x_errors():
    F = GF(2)
    A = LinearCode(F, np.array([[1, 1, 0]]))
    B = LinearCode(F, np.array([[0, 1, 1]]))
    aux = LinearCode(F, np.array([[1, 1]]))
    with pytest.raises(CodeError, match="not contained"):
        construction_x(A, B, aux)
    with pytest.raises(CodeError, match="dim"):
        construction_x(A, A, aux)


def test_construction_x_reference_chain():
    parent, sub, aux, data = construction_x_inputs()
    assert (parent.k, sub.k) == (51, 50)
    assert parent.contains_code(sub)
    X = construction_x(parent, sub, aux, d_parent=6, d_sub=8, d_aux=2)
    assert (X.n, X.k, X.lower) == (65, 51, 8)


# ---------------------------------------------------------------------------


def test_bklc_load(tmp_path):
    p = tmp_path / "t.csv"
    p.write_text("q,n,k,d\n7,93,15,55\n2,7,4,3\n")
    T = BklcTable.load(p)
    assert T[(7, 93, 15)] == 55 and len(T) == 2
    with pytest.raises(BklcError):
        T.get(7, 1, 1)


@pytest.mark.parametrize(
    "text,match",
    [
        ("q,n,k,d\n5,10,4,8\n", "Singleton"),
        ("q,n,k,d\n2,7,4,3\n2,7,4,2\n", "line 3: duplicate"),
        ("q,n,k,d\n2,7,x,3\n", "line 2"),
        ("q,n,k,d\n2,7,4\n", "line 2"),
        ("a,b,c,d\n", "header"),
    ],
)
def test_bklc_load_errors(tmp_path, text, match):
    p = tmp_path / "t.csv"
    p.write_text(text)
    with pytest.raises(BklcError, match=match):
        BklcTable.load(p)


def test_bklc_empty_file(tmp_path):
    p = tmp_path / "t.csv"
    p.write_text("")
    T = BklcTable.load(p)
    assert len(T) == 0
    with pytest.raises(BklcError):
        T[(2, 3, 1)]


def test_bklc_round_trip(tmp_path):
    T = BklcTable.from_rows([(2, 7, 4, 3), (3, 12, 4, 6)])
    T.dump(tmp_path / "x.csv")
    assert BklcTable.load(tmp_path / "x.csv").entries == T.entries
    with pytest.raises(BklcError):
        BklcTable.from_rows([(2, 7, 4, 3), (2, 7, 4, 3)])


def test_bundled_table_flags_three_unit_improvement():
    T = bklc_gf7()
    assert 58 - T[(7, 93, 15)] == 3


def test_derivation_step_validation():
    with pytest.raises(ValueError):
        DerivationStep("twist", None, (1, 1, 1))


def _singleton_table(q: int, max_n: int, overrides: dict) -> BklcTable:
    entries = {(q, n, k): n - k + 1 for n in range(1, max_n + 1) for k in range(1, n + 1)}
    entries.update(overrides)
    return BklcTable(entries)


def test_modify_nothing_better():
    F = GF(3)
    C = LinearCode(F, np.array([[1, 1, 1]]))
    assert recursively_modify(C, _singleton_table(3, 6, {})) == []


def test_modify_small_ternary_against_exhaustive():
    F = GF(3)
    P = cc_params(3, 12, 2)
    C = cc_code(P, generator_from_check(F, 12, 2, Poly(F, [1, 1, 2, 2, 1])))
    assert (C.n, C.k, min_distance(C).d) == (12, 4, 6)
    table = _singleton_table(3, 14, {(3, 13, 4): 6})
    found = recursively_modify(C, table)
    d_ext = min_weight(span(NaiveField(3), extend(C).G.tolist()))
    expect = ["Ce"] if d_ext >= 7 else []
    assert [f.name for f in found] == expect
    for f in found:
        assert f.d == d_ext and f.exact and f.steps[-1].op == "extend"


def test_modify_reports_children_that_beat_table():
    C = repetition(2, 5)
    table = _singleton_table(2, 7, {(2, 6, 1): 5, (2, 4, 1): 3, (2, 3, 1): 2})
    found = recursively_modify(C, table, max_depth=2, chooser=DistanceChooser())
    names = [f.name for f in found]
    assert names == ["Ce", "Cp", "Cpp"]
    assert [f.params for f in found] == [(6, 1, 6), (4, 1, 4), (3, 1, 3)]
    assert [s.op for s in found[2].steps] == ["puncture", "puncture"]


def test_modify_reference_lineage_replay():
    C1, data = recursive_root()
    found = recursively_modify(C1, bklc_gf7(), name="C1", d=58, chooser=LabelledChooser(recursive_labels(data)))
    got = [(f.name, f.code.n, f.code.k, f.d) for f in found]
    listed = [tuple(x) for x in data["listed"]]
    implied = {x[0] for x in data["implied"]}
    assert [g for g in got if g[0] not in implied] == listed
    assert {g[0] for g in got} - {x[0] for x in listed} == implied
    for f in found:
        suffix = f.name[len("C1") :]
        assert "".join({"extend": "e", "puncture": "p", "shorten": "s"}[s.op] for s in f.steps) == suffix
