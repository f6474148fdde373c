import csv
import io
import json
import subprocess

import pytest


def run(sclab, *args, env=None, stdin=None):
    return subprocess.run([sclab, *args], capture_output=True, text=True, env=env, input=stdin)


TWO_STATE_LEFT = {"alphabet": ["a", "b"], "states": 2, "initial": 0, "finals": [1],
                  "transitions": {"a": [0, 0], "b": [1, 1]}}
TWO_STATE_RIGHT = {"alphabet": ["a", "c"], "states": 2, "initial": 0, "finals": [1],
                   "transitions": {"a": [0, 0], "c": [1, 1]}}


@pytest.fixture
def dfa_files(tmp_path):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(json.dumps(TWO_STATE_LEFT))
    right.write_text(json.dumps(TWO_STATE_RIGHT))
    return str(left), str(right)


def test_witness_json(sclab):
    r = run(sclab, "witness", "--n", "3", "--dialect", "a,b,c,d", "--format", "json")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    assert d == {"alphabet": ["a", "b", "c", "d"], "states": 3, "initial": 0, "finals": [2],
                 "transitions": {"a": [1, 2, 0], "b": [1, 0, 2], "c": [0, 1, 0], "d": [0, 1, 2]}}


def test_witness_dot(sclab):
    r = run(sclab, "witness", "--n", "4", "--dialect", "b,a,-,d", "--format", "dot")
    assert r.returncode == 0
    assert r.stdout.startswith("digraph")
    assert "3 [label=\"3\", shape=doublecircle];" in r.stdout
    assert "0 -> 1 [label=\"a,b\"];" in r.stdout
    assert "label=\"c\"" not in r.stdout


@pytest.mark.parametrize("args", [
    ["witness", "--n", "2"],
    ["witness", "--n", "4", "--dialect", "a,a"],
    ["witness", "--n", "4", "--dialect", "x"],
    ["witness"],
    ["verify", "--ops", "nonsense"],
    ["verify", "--ops", "union", "--m", "6..3"],
    ["bogus"],
    [],
])
def test_usage_errors(sclab, args):
    assert run(sclab, *args).returncode == 2


def test_verify_union(sclab):
    r = run(sclab, "verify", "--ops", "union", "--m", "3..6", "--n", "3..6", "--format", "json", "--no-timing")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["all_match"] is True
    cells = {(e["m"], e["n"]): e["measured"] for e in report["records"]}
    assert len(cells) == 16
    assert cells[(3, 3)] == 16 and cells[(6, 6)] == 49


def test_verify_product(sclab):
    r = run(sclab, "verify", "--ops", "product", "--m", "3..5", "--n", "3..5", "--format", "csv", "--no-timing")
    assert r.returncode == 0
    rows = {(int(x["m"]), int(x["n"])): int(x["measured"]) for x in csv.DictReader(io.StringIO(r.stdout))}
    assert rows[(3, 4)] == 56 and rows[(5, 5)] == 176


def test_verify_same_alphabet_union(sclab):
    r = run(sclab, "verify", "--ops", "same-alphabet-union", "--m", "3..5", "--n", "3..5", "--format", "json",
            "--no-timing")
    assert r.returncode == 0
    for e in json.loads(r.stdout)["records"]:
        assert e["measured"] == e["m"] * e["n"]


def test_verify_all_is_deterministic(sclab):
    a = run(sclab, "verify", "--all", "--format", "json", "--no-timing")
    b = run(sclab, "verify", "--all", "--format", "json", "--no-timing")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    cells = {(e["op"], e["m"], e["n"]) for e in json.loads(a.stdout)["records"]}
    for op in ("union", "symdiff", "difference", "intersection"):
        for cell in ((3, 4), (4, 3), (4, 4)):
            assert (op, *cell) in cells


def test_verify_markdown_table(sclab):
    r = run(sclab, "verify", "--ops", "star", "--n", "3..4")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0].startswith("| op | m | n | measured | formula | match |")
    assert len(lines) == 4


def test_atoms(sclab):
    r = run(sclab, "atoms", "--n", "3", "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert [a["kappa"] for a in report["atoms"]] == [7, 10, 10, 10, 10, 10, 10, 7]
    assert all(a["match"] for a in report["atoms"])

    r = run(sclab, "atoms", "--n", "4", "--format", "json")
    atoms = json.loads(r.stdout)["atoms"]
    assert len(atoms) == 16
    assert atoms[0]["S"] == [] and atoms[0]["kappa"] == 15


def test_atoms_budget(sclab):
    assert run(sclab, "atoms", "--n", "9").returncode == 3


def test_semigroup(sclab):
    r = run(sclab, "semigroup", "--n", "3..5", "--format", "json", "--no-timing")
    assert r.returncode == 0
    assert [e["measured"] for e in json.loads(r.stdout)["records"]] == [27, 256, 3125]


def test_subset_budget(sclab, monkeypatch):
    import os
    env = dict(os.environ, SCLAB_BUDGET="10")
    assert run(sclab, "verify", "--ops", "product", "--m", "3", "--n", "3", env=env).returncode == 3
    assert run(sclab, "verify", "--ops", "product", "--m", "3", "--n", "3", "--budget", "10").returncode == 3
    # an explicit flag wins over the environment
    assert run(sclab, "verify", "--ops", "product", "--m", "3", "--n", "3", "--budget", "1000",
               env=env).returncode == 0


def test_apply_union(sclab, dfa_files):
    r = run(sclab, "apply", "--ops", "union", *dfa_files)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["kappa"] == 6
    assert out["dfa"]["alphabet"] == ["a", "b", "c"]


def test_apply_intersection_is_empty(sclab, dfa_files):
    out = json.loads(run(sclab, "apply", "--ops", "intersection", *dfa_files).stdout)
    assert out["kappa"] == 1
    assert out["empty_alphabet"] is True
    assert out["dfa"]["finals"] == []


def test_apply_star_of_sigma_star(sclab, tmp_path):
    p = tmp_path / "all.json"
    p.write_text(json.dumps({"alphabet": ["a", "b"], "states": 1, "initial": 0, "finals": [0],
                             "transitions": {"a": [0], "b": [0]}}))
    out = json.loads(run(sclab, "apply", "--ops", "star", str(p)).stdout)
    assert out["kappa"] == 1


def test_apply_from_stdin_and_dot(sclab, dfa_files):
    r = run(sclab, "apply", "--ops", "reverse", "-", "--format", "dot", stdin=json.dumps(TWO_STATE_LEFT))
    assert r.returncode == 0
    assert r.stdout.startswith("// kappa = ")


def test_apply_concat_matches_residual_count(sclab, dfa_files):
    # {a,b}*b {a,c}*c: distinct residuals counted by brute force over short words
    out = json.loads(run(sclab, "apply", "--ops", "product", *dfa_files).stdout)

    def in_left(w):
        return all(x in "ab" for x in w) and w.endswith("b")

    def in_right(w):
        return all(x in "ac" for x in w) and w.endswith("c")

    def member(w):
        return any(in_left(w[:i]) and in_right(w[i:]) for i in range(len(w) + 1))

    from itertools import product
    words = ["".join(p) for k in range(5) for p in product("abc", repeat=k)]
    suffixes = [w for w in words if len(w) <= 4]
    residuals = {tuple(member(u + v) for v in suffixes) for u in words if len(u) <= 4}
    assert out["kappa"] == len(residuals)


@pytest.mark.parametrize("text", ["", "{", "[1,2]", '{"alphabet":["a"],"states":1}'])
def test_apply_malformed(sclab, tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    assert run(sclab, "apply", "--ops", "star", str(p)).returncode == 2


def test_apply_wrong_arity(sclab, dfa_files):
    assert run(sclab, "apply", "--ops", "union", dfa_files[0]).returncode == 2
