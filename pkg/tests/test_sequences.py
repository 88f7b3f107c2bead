import pytest
from hypothesis import given
from hypothesis import strategies as st

from taux.perp import j_of, rigid_candidates, whole
from taux.rigidity import WindowError, is_support_tau_rigid, labels, mutate, ordered_sttilt, parse_object
from taux.sequences import (
    ConstructionError,
    E,
    E_compound,
    F,
    act_word,
    act_word_ordered,
    all_sequences,
    inject_fault,
    is_signed_sequence,
    mutate_seq,
    parse_word,
    phi,
    psi,
    transpose,
    uniqueness_probe,
)
from taux.verify import catalog, sequence_table


def objs(cat, *names):
    return tuple(parse_object(cat, n) for n in names)


# -- golden values over Gamma --------------------------------------------------

@pytest.mark.parametrize("t,s", [
    (("P1", "P2"), ("S1", "P2")),
    (("P2", "P1"), ("S2", "P1")),
    (("P2", "S2"), ("I1", "S2")),
    (("P1", "S1"), ("P1", "S1")),
])
def test_gamma_psi(gamma, t, s):
    assert psi(gamma, objs(gamma, *t)) == objs(gamma, *s)
    assert phi(gamma, objs(gamma, *s)) == objs(gamma, *t)


def test_gamma_reductions(gamma):
    assert E(gamma, *objs(gamma, "P2", "P1")) == objs(gamma, "S1")[0]
    assert E(gamma, *objs(gamma, "S2", "P1[1]")) == objs(gamma, "I1[1]")[0]
    assert F(gamma, *objs(gamma, "S2", "I1")) == objs(gamma, "P2")[0]


def test_gamma_actions(gamma):
    s = objs(gamma, "S1", "P2")
    assert transpose(gamma, s, 1) == objs(gamma, "S2", "P1")
    assert mutate_seq(gamma, s, 2) == objs(gamma, "P1", "S1")
    assert act_word(gamma, s, "p1 p1") == s


def test_gamma_counts():
    tab = sequence_table("gamma")
    assert len(tab.pairs) == 12 and len(set(tab.signed)) == 12 and len(tab.unsigned()) == 4


@pytest.mark.parametrize("name,count", [("a1", 1), ("a2", 3), ("a3", 16), ("nakayama3", 15)])
def test_unsigned_counts(name, count):
    assert len(sequence_table(name).unsigned()) == count


def test_a1_sequences():
    cat = catalog("a1")
    assert sorted(labels(cat, s) for s in sequence_table("a1").signed) == [["P1"], ["P1[1]"]]


# -- properties over the battery -----------------------------------------------

@pytest.mark.parametrize("name", ["gamma", "a2", "a3", "nakayama3"])
def test_actions_commute_with_psi(name):
    cat = catalog(name)
    pairs = sequence_table(name).pairs
    n = cat.n

    @given(st.sampled_from(pairs), st.lists(st.sampled_from(
        [f"pi{i}" for i in range(1, n)] + [f"mu{i}" for i in range(1, n + 1)]), max_size=6))
    def check(pair, word):
        t, s = pair
        assert psi(cat, act_word_ordered(cat, t, word)) == act_word(cat, s, word)

    check()


@pytest.mark.parametrize("name", ["gamma", "a2", "a3", "nakayama3"])
def test_sequences_are_valid_and_bijective(name):
    cat = catalog(name)
    tab = sequence_table(name)
    for t, s in tab.pairs:
        assert is_signed_sequence(cat, s)
        assert phi(cat, s) == t
    assert len(set(tab.signed)) == len(tab.pairs) == len(ordered_sttilt(cat))


def test_reduction_is_a_bijection(finite):
    w = whole(finite)
    for u in rigid_candidates(finite, w):
        comp = [x for x in rigid_candidates(finite, w)
                if x.id != u.id and is_support_tau_rigid(finite, [u, x])]
        image = [E(finite, u, x) for x in comp]
        target = rigid_candidates(finite, j_of(finite, [u]))
        assert sorted(image) == sorted(target)


def test_compound_order_independent(finite):
    w = whole(finite)
    for t in ordered_sttilt(finite):
        if finite.n < 3:
            break
        assert E_compound(finite, list(t[1:]), t[0], w) is not None


def test_uniqueness_probe_zero(finite):
    assert uniqueness_probe(finite).ok


def test_kronecker_window_sequences(kron3):
    tab = all_sequences(kron3)
    assert tab.skipped >= 1
    for t, s in tab.pairs:
        assert phi(kron3, s) == t


def test_kronecker_psi(kron4):
    assert psi(kron4, objs(kron4, "P1", "P2")) == objs(kron4, "I1", "P2")
    t = mutate(kron4, objs(kron4, "P1", "P2"), 2)
    assert labels(kron4, t) == ["P1", "tau^-1P2"]


def test_parse_word():
    assert parse_word("m1 p1 mu_2, s3") == [("mu", 1), ("pi", 1), ("mu", 2), ("mu", 3)]
    with pytest.raises(ValueError):
        parse_word("x1")


@pytest.mark.parametrize("case", ["1", "2", "3", "4"])
def test_fault_injection_is_detected(case):
    from taux import verify

    verify.clear()
    try:
        with inject_fault(case):
            res = verify.run_check(9)
    finally:
        verify.clear()
    assert not res.passed and res.failures


def test_postcondition_message(gamma, monkeypatch):
    from taux import sequences

    monkeypatch.setattr(sequences, "_e_raw", lambda cat, u, x, w: (x, "1"))
    gamma.__dict__.pop("_E_cache", None)
    with pytest.raises(ConstructionError, match=r"case 1"):
        E(gamma, *objs(gamma, "P2", "P1"))
    gamma.__dict__.pop("_E_cache", None)


def test_inject_fault_rejects_bad_case():
    with pytest.raises(ValueError):
        with inject_fault("7"):
            pass


def test_window_error_type():
    assert issubclass(WindowError, Exception)
