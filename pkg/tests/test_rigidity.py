import pytest

from taux.rigidity import (
    RigidityError,
    SignedObject,
    WindowError,
    candidates,
    canonical,
    exchange_graph,
    is_support_tau_rigid,
    is_support_tau_tilting,
    labels,
    mutate,
    ordered_sttilt,
    parse_object,
    sttilt_enumerate,
    transpose_ordered,
)
from taux.verify import catalog


def obj(cat, *names):
    return tuple(parse_object(cat, n) for n in names)


@pytest.mark.parametrize("name,count", [("gamma", 6), ("a1", 2), ("a2", 5), ("a3", 14), ("nakayama3", 14)])
def test_sttilt_counts(name, count):
    res = sttilt_enumerate(catalog(name))
    assert len(res) == count and not res.partial


def test_a3_count_is_catalan():
    # support tau-tilting = clusters of type A3: Catalan(4) = 14
    assert len(sttilt_enumerate(catalog("a3"))) == 14


@pytest.mark.parametrize("name,v,e", [("gamma", 12, 18), ("a1", 2, 1), ("a2", 10, 15), ("a3", 84, 210)])
def test_exchange_graph_size(name, v, e):
    g = exchange_graph(catalog(name))
    assert len(g.vertices) == v and len(g.edges) == e and not g.partial


def test_exchange_graph_regular(finite):
    g = exchange_graph(finite)
    deg = [0] * len(g.vertices)
    for u, v, _ in g.edges:
        deg[u] += 1
        deg[v] += 1
    n = finite.n
    # n mutations and n - 1 transpositions from each ordered object
    assert set(deg) == {2 * n - 1}


def test_gamma_rigidity(gamma):
    assert is_support_tau_rigid(gamma, obj(gamma, "P1", "P2"))
    assert not is_support_tau_rigid(gamma, obj(gamma, "P1[1]", "P2"))
    assert not gamma.is_tau_rigid(gamma.lookup("I1"))
    assert not is_support_tau_rigid(gamma, obj(gamma, "S2", "P1"))
    with pytest.raises(RigidityError):
        is_support_tau_rigid(gamma, obj(gamma, "S1[1]"))


def test_mutation_is_involution(finite):
    for t in ordered_sttilt(finite):
        for i in range(1, finite.n + 1):
            u = mutate(finite, t, i)
            assert is_support_tau_tilting(finite, u)
            assert mutate(finite, u, i) == t


def test_kronecker_window_edges(kron3):
    t = obj(kron3, "tau^-1P1", "tau^-1P2")
    with pytest.raises(WindowError):
        mutate(kron3, t, 2)


def test_transpose_ordered():
    a, b, c = SignedObject(0), SignedObject(1), SignedObject(2, True)
    assert transpose_ordered((a, b, c), 2) == (a, c, b)
    with pytest.raises(RigidityError):
        transpose_ordered((a, b), 2)


def test_candidates_and_labels(gamma):
    assert labels(gamma, candidates(gamma)) == ["P1", "P1[1]", "P2", "P2[1]", "S1", "S2"]
    assert canonical(gamma, obj(gamma, "S2", "P1[1]")) == obj(gamma, "P1[1]", "S2")


def test_dot_export(gamma):
    dot = exchange_graph(gamma).to_dot()
    assert dot.startswith("graph exchange {") and dot.count("--") == 18
