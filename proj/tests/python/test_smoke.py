import json

import pytest

import sclab


def test_witness_is_minimal():
    for n in range(3, 7):
        assert sclab.quotient_complexity(sclab.universal_witness(n)) == n


def test_union_over_different_alphabets():
    left = sclab.witness(4, "a,b,-,c")
    right = sclab.witness(5, "b,a,-,d")
    r = sclab.boolean_op(left, right, "union")
    assert r.size == 4 * 5 + 4 + 5 + 1
    assert r.size == sclab.formula("union", 4, 5)


def test_two_state_fixture():
    left = sclab.Dfa(2, "ab", [0, 0, 1, 1], 0, [1])
    right = sclab.Dfa(2, "ac", [0, 0, 1, 1], 0, [1])
    assert sclab.boolean_op(left, right, "union").size == 6
    inter = sclab.boolean_op(left, right, "intersection")
    assert inter.size == 1 and inter.alphabet == ""
    assert left.accepts("aab") and not left.accepts("abc")


def test_json_round_trip():
    d = sclab.witness(3, "b,a")
    doc = json.loads(d.to_json())
    assert doc["alphabet"] == ["a", "b"]
    assert sclab.Dfa.from_json(d.to_json()) == d
    assert d.to_dot().startswith("digraph")


def test_unary_operations():
    assert sclab.star(sclab.witness(5, "a,b")).size == 2**4 + 2**3
    assert sclab.reverse(sclab.witness(5, "a,b,c")).size == 2**5
    assert sclab.syntactic_semigroup_size(sclab.witness(4, "a,b,c")) == 4**4


def test_atoms():
    rows = sclab.atoms(sclab.witness(3, "a,b,c"))
    assert [r["kappa"] for r in rows] == [7, 10, 10, 10, 10, 10, 10, 7]
    assert all(r["kappa"] == sclab.atom_formula(3, len(r["S"])) for r in rows)


def test_verify():
    records = sclab.verify(["union", "product"], m="3..4", n="3..4")
    assert len(records) == 8
    assert all(r["match"] for r in records)


def test_errors():
    with pytest.raises(ValueError):
        sclab.universal_witness(2)
    with pytest.raises(ValueError):
        sclab.witness(4, "a,a")
    with pytest.raises(ValueError):
        sclab.Dfa.from_json("{")
    with pytest.raises(sclab.BudgetError):
        sclab.concat(sclab.witness(4, "a,b,-,c"), sclab.witness(4, "b,a,-,d"), budget=5)
