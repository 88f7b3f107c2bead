import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taux.algebra import PresentationError, Quiver, build_algebra, idempotent_quotient
from taux.fileio import AlgebraFileError, bundled, load_algebra, loads_algebra, parse_relation


@pytest.mark.parametrize("name,dim", [
    ("gamma", 5), ("kronecker", 4), ("a1", 1), ("a2", 3), ("a3", 6), ("nakayama3", 6),
])
def test_bundled_dimensions(alg, name, dim):
    assert alg[name].dim == dim


def test_gamma_basis_kills_the_relation(alg):
    labels = [p.label() for p in alg["gamma"].basis]
    assert "b*a" not in labels and "a*b" in labels


@pytest.mark.parametrize("name", ["gamma", "a3", "nakayama3", "kronecker"])
def test_associativity(alg, name):
    a = alg[name]
    n = a.dim

    @given(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, n - 1))
    def check(i, j, k):
        x, y, z = {i: 1}, {j: 1}, {k: 1}
        assert a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z))

    check()


def test_idempotents_sum_to_one(alg):
    a = alg["a3"]
    one = {}
    for v in a.vertices:
        one[a.trivial(v)] = 1
    for i in range(a.dim):
        assert a.multiply(one, {i: 1}) == {i: 1} == a.multiply({i: 1}, one)


def test_commutativity_relation_gives_a_square():
    q = Quiver.build(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
    a = build_algebra(q, [parse_relation("b*a - d*c")])
    assert a.dim == 4 + 4 + 1


def test_loop_needs_a_relation():
    with pytest.raises(AlgebraFileError, match="finite-dimensional"):
        loads_algebra(json.dumps({"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1"}]}))
    _, a = loads_algebra(json.dumps({"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1"}],
                                     "relations": ["x*x*x"]}))
    assert a.dim == 3


def test_idempotent_quotient(alg):
    q = idempotent_quotient(alg["gamma"], ["2"])
    assert q.vertices == ("1",) and q.dim == 1


def test_bad_relations():
    with pytest.raises(ValueError):
        parse_relation("")
    q = Quiver.build(["1", "2"], [("a", "1", "2")])
    with pytest.raises(PresentationError, match="length"):
        build_algebra(q, [parse_relation("a")])
    with pytest.raises(PresentationError, match="composable"):
        build_algebra(q, [parse_relation("a*a")])


def test_parse_relation_coefficients():
    r = parse_relation("b*a - 2 b*c + 3/2*d*e")
    assert [c for c, _ in r.terms] == [1, -2, 1.5]


def test_file_errors_carry_line_numbers(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "vertices": ["1", "2"],\n  "arrows": [,]\n}\n')
    with pytest.raises(AlgebraFileError, match=r"bad\.json:3"):
        load_algebra(bad)
    rel = tmp_path / "rel.json"
    rel.write_text('{\n  "vertices": ["1", "2"],\n  "arrows": [{"name": "a", "from": "1", "to": "2"}],\n'
                   '  "relations": ["a*a"]\n}\n')
    with pytest.raises(AlgebraFileError, match=r"rel\.json:4"):
        load_algebra(rel)
    with pytest.raises(AlgebraFileError):
        load_algebra(tmp_path / "missing.json")


def test_unknown_endpoint():
    with pytest.raises(AlgebraFileError, match="unknown endpoint"):
        loads_algebra(json.dumps({"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "9"}]}))


def test_unknown_bundled():
    with pytest.raises(KeyError):
        bundled("nope")
