import pytest

from taux.catalog import CatalogError, knit
from taux.reps import hom_dim, iso, tau
from taux.verify import catalog


@pytest.mark.parametrize("name,size,flag", [
    ("gamma", 5, "closed"), ("a1", 1, "closed"), ("a2", 3, "closed"), ("a3", 6, "closed"),
    ("nakayama3", 6, "closed"), ("kronecker", 10, "windowed(4)"),
])
def test_sizes_and_flags(name, size, flag):
    cat = catalog(name)
    assert len(cat) == size and cat.flag == flag


def test_kronecker_depth3(kron3):
    assert len(kron3) == 8 and kron3.flag == "windowed(3)"


def test_gamma_names(gamma):
    assert [e.name for e in gamma] == ["P1", "P2", "I1", "S2", "S1"]
    assert gamma.lookup("I2") == gamma.lookup("P2")
    with pytest.raises(CatalogError):
        gamma.lookup("X9")


def test_kronecker_dimension_vectors(kron4):
    dims = {e.name: e.dims for e in kron4}
    assert dims["tau^-1P2"] == (2, 3) and dims["tau^-1P1"] == (3, 4)
    assert dims["tau^1I1"] == (3, 2) and dims["tau^1I2"] == (4, 3)
    assert dims["tau^-2P2"] == (4, 5) and dims["tau^2I1"] == (5, 4)


def test_entries_pairwise_distinct_and_bricks(finite):
    for e in finite:
        assert hom_dim(e.rep, e.rep) >= 1
        for f in finite:
            if f.id < e.id and f.dims == e.dims:
                assert not iso(e.rep, f.rep)


def test_tau_links(finite):
    for e in finite:
        if e.tau is not None:
            assert iso(tau(e.rep), finite.rep(e.tau))
            assert finite.entries[e.tau].tau_inv == e.id
        else:
            assert e.projective


def test_catalog_lists_every_indecomposable_of_a3():
    # A3 linear has exactly the interval modules [i, j]
    cat = catalog("a3")
    shapes = sorted(e.dims for e in cat)
    want = sorted(tuple(1 if i <= k <= j else 0 for k in range(3)) for i in range(3) for j in range(i, 3))
    assert shapes == want


def test_bad_depth(alg):
    with pytest.raises(ValueError):
        knit(alg["a2"], 0)


def test_identify_and_decompose(gamma):
    from taux.reps import direct_sum

    x = direct_sum([gamma.rep(0), gamma.rep(3), gamma.rep(3)])
    c = gamma.decompose(x)
    assert c == {0: 1, 3: 2}
    assert gamma.identify(gamma.rep(2)) == 2


def test_json_export(gamma):
    data = gamma.to_json()
    assert data["flag"] == "closed" and len(data["entries"]) == 5


def test_kronecker_window_is_rigid(kron4):
    # only preprojectives and preinjectives are knitted, and all are tau-rigid
    assert all(kron4.is_tau_rigid(e.id) for e in kron4)
    assert all(kron4.hom(e.id, e.id) == 1 for e in kron4)
