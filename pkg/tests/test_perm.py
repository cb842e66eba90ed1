import pytest
from hypothesis import given, settings, strategies as st

from mnrules import perm
from mnrules.perm import (
    ChainCapExceeded,
    LabeledCover,
    canonical,
    chain_endpoints,
    compose,
    cycle_type_check,
    default_max_support,
    descents,
    from_lehmer_code,
    het,
    inverse,
    is_cover_transposition,
    k_bruhat_covers,
    lehmer_code,
    length,
    peakless_endpoints,
    right_transposed,
    saturated_chains,
    transposition,
    up_set,
)

random_perms = st.permutations(range(1, 7)).map(lambda p: canonical(tuple(p)))

W_EXAMPLE = canonical((3, 4, 1, 6, 5, 2, 7, 8))


def test_canonical_trims_fixed_tail():
    assert canonical((3, 4, 1, 6, 5, 2, 7, 8)) == (3, 4, 1, 6, 5, 2)
    assert canonical((1, 2, 3)) == ()
    assert canonical((2, 1)) == (2, 1)
    with pytest.raises(ValueError):
        canonical((1, 1, 2))
    with pytest.raises(ValueError):
        canonical((2, 3))


def test_length_examples():
    assert length(()) == 0
    assert length(transposition(3, 4)) == 1
    assert length(W_EXAMPLE) == 7
    assert length((3, 5, 6, 7, 1, 2, 4)) == 11  # 7 + 4, as in the p_4 product


@given(random_perms)
@settings(max_examples=60, deadline=None)
def test_length_is_inversion_count(w):
    padded = w + tuple(range(len(w) + 1, len(w) + 1))
    brute = sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )
    assert length(w) == brute


def test_compose_convention():
    u, v = (2, 3, 1), (1, 3, 2)
    w = compose(u, v)
    assert all(
        perm.apply(w, i) == perm.apply(u, perm.apply(v, i)) for i in range(1, 5)
    )
    assert w == (2, 1, 3)[:2]  # u(v(1))=2, u(v(2))=1, u(v(3))=3 trims away


@given(random_perms)
@settings(max_examples=60, deadline=None)
def test_inverse_and_compose(w):
    assert compose(w, inverse(w)) == ()
    assert compose(inverse(w), w) == ()
    assert inverse(inverse(w)) == w


@given(random_perms)
@settings(max_examples=60, deadline=None)
def test_lehmer_code_round_trip(w):
    assert from_lehmer_code(lehmer_code(w)) == w
    assert sum(lehmer_code(w)) == length(w)


def test_from_lehmer_code_examples():
    assert from_lehmer_code((1, 2)) == (2, 4, 1, 3)
    assert from_lehmer_code(()) == ()
    assert from_lehmer_code((2, 0, 1)) == (3, 1, 4, 2)


def test_descents():
    assert descents(()) == ()
    assert descents(W_EXAMPLE) == (2, 4, 5)
    assert descents((2, 4, 1, 3)) == (2,)


def test_transpositions():
    assert transposition(1, 3) == (3, 2, 1)
    assert right_transposed((3, 4, 1, 6, 5, 2), 4, 7) == (3, 4, 1, 7, 5, 2, 6)
    assert is_cover_transposition((3, 4, 1, 6, 5, 2), 4, 7)
    assert not is_cover_transposition((2, 1), 1, 2)  # w(1) > w(2)
    assert not is_cover_transposition((), 1, 3)  # the value 2 lies in between


@given(random_perms, st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_covers_raise_length_by_one(w, k):
    bound = default_max_support(w, k, 1)
    for cover in k_bruhat_covers(w, k, bound):
        assert length(cover.end) == length(w) + 1
        assert isinstance(cover, LabeledCover)
        eta = compose(inverse(w), cover.end)
        moved = [i for i in range(1, len(eta) + 1) if eta[i - 1] != i]
        assert len(moved) == 2 and min(moved) <= k < max(moved)
        assert cover.label == perm.apply(w, min(moved))


def test_covers_small_frozen():
    assert k_bruhat_covers((), 1, 3) == [LabeledCover((), (2, 1), 1)]
    got = k_bruhat_covers((2, 1), 1, 3)
    assert got == [LabeledCover((2, 1), (3, 1, 2), 2)]
    got2 = k_bruhat_covers((2, 1), 2, 4)
    assert {c.end for c in got2} == {(3, 1, 2), (2, 3, 1)}


def test_chain_endpoints_and_saturated_chains_agree():
    w = canonical((2, 1))
    for k in (1, 2):
        for r in (1, 2, 3):
            bound = default_max_support(w, k, r)
            ends = chain_endpoints(w, k, r, bound)
            chains = saturated_chains(w, k, r, bound)
            assert ends == {chain[-1].end for chain in chains}
            for chain in chains:
                assert len(chain) == r
                assert chain[0].start == w
                for a, b in zip(chain, chain[1:]):
                    assert a.end == b.start


def test_cycle_type_check():
    assert cycle_type_check((2, 3, 1), 3)
    assert cycle_type_check(transposition(2, 5), 2)
    assert not cycle_type_check((), 2)
    assert not cycle_type_check((2, 1, 4, 3), 2)  # two 2-cycles
    assert not cycle_type_check((2, 3, 1), 2)
    assert not cycle_type_check((2, 1), 1)


def test_het_and_up_set():
    eta = (2, 4, 1, 7, 3, 6, 5)  # cycle (1,2,4,7,5,3)
    assert up_set(eta) == frozenset({1, 2, 4})
    assert het(eta, 4) == 4
    assert het(transposition(2, 6), 4) == 1
    assert het((), 3) == 0
    # cycle taken from the worked p_4 product: up-set size equals het there
    zeta = compose(inverse(W_EXAMPLE), (3, 5, 6, 7, 1, 2, 4))
    assert len(up_set(zeta)) == het(zeta, 4) == 3


def test_het_values_from_worked_product():
    w = W_EXAMPLE
    cases = [
        ((3, 5, 6, 7, 1, 2, 4), 3),
        ((3, 6, 4, 7, 1, 2, 5), 3),
        ((4, 5, 3, 6, 2, 1), 3),
        ((4, 6, 1, 7, 3, 2, 5), 3),
        ((3, 4, 6, 7, 2, 1, 5), 2),
        ((3, 4, 6, 8, 1, 2, 5, 7), 2),
        ((3, 6, 1, 8, 4, 2, 5, 7), 2),
        ((3, 4, 1, 10, 5, 2, 6, 7, 8, 9), 1),
    ]
    for u, expected_het in cases:
        eta = compose(inverse(w), canonical(u))
        assert cycle_type_check(eta, 5)
        assert het(eta, 4) == expected_het


def test_default_max_support_covers_identity_case():
    # growing from the identity with k=3 needs support beyond len(w)+r
    assert default_max_support((), 3, 1) == 4
    ends = chain_endpoints((), 3, 1, default_max_support((), 3, 1))
    assert ends == {(1, 2, 4, 3)}  # covers need i <= 3 < j, so only t_3


def test_saturated_chain_cap():
    with pytest.raises(ChainCapExceeded):
        saturated_chains((), 3, 4, 12, max_chains=2)


def test_peakless_endpoints_validation():
    with pytest.raises(ValueError):
        peakless_endpoints((), 2, 3, 1, 6)
    with pytest.raises(ValueError):
        peakless_endpoints((), 2, 0, 1, 6)


def test_peakless_endpoints_match_single_variable_schur_products():
    # h_2(x1,x2) * S_id = S_(1,4,2,3) and e_2(x1,x2) * S_id = S_(2,3,1)
    assert dict(peakless_endpoints((), 2, 1, 2, 5)) == {(1, 4, 2, 3): 1}
    assert dict(peakless_endpoints((), 2, 2, 1, 5)) == {(2, 3, 1): 1}


def test_peakless_uniqueness_on_worked_product():
    w = W_EXAMPLE
    r = 4
    endpoints = [
        (3, 5, 6, 7, 1, 2, 4),
        (3, 6, 4, 7, 1, 2, 5),
        (4, 5, 3, 6, 2, 1),
        (4, 6, 1, 7, 3, 2, 5),
        (3, 4, 6, 7, 2, 1, 5),
        (3, 4, 6, 8, 1, 2, 5, 7),
        (3, 6, 1, 8, 4, 2, 5, 7),
        (3, 4, 1, 10, 5, 2, 6, 7, 8, 9),
    ]
    bound = default_max_support(w, 4, r)
    for u in map(canonical, endpoints):
        eta = compose(inverse(w), u)
        a = het(eta, 4)
        b = r + 1 - a
        counts = dict(peakless_endpoints(w, 4, a, b, bound))
        assert counts.get(u) == 1
        # a minimal cycle shows up for its own hook shape only
        for other_a in range(1, min(4, r) + 1):
            if other_a == a:
                continue
            other = dict(peakless_endpoints(w, 4, other_a, r + 1 - other_a, bound))
            assert u not in other
