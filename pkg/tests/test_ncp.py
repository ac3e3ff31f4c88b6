"""Lattice structure of NCP: axioms, Brady-Watt flats, rank function."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpforge.catalog import GroupSpec
from ncpforge.errors import ElementNotInGroup
from ncpforge.group import build_group
from ncpforge.ncp import build_ncp, fuss_catalan


def test_fuss_catalan_values():
    assert fuss_catalan((2, 3, 4), 1) == 14      # Catalan of rank 3, h=4
    assert fuss_catalan((2, 6, 10), 1) == 32
    assert fuss_catalan((2, 6, 8, 12), 1) == 105
    assert fuss_catalan((2, 3), 2) == 12


def test_bottom_and_top(a3_ncp, a3):
    assert a3_ncp.members[a3_ncp.bottom] == a3.identity
    assert a3_ncp.members[a3_ncp.top] == a3.coxeter
    assert a3_ncp.rank[a3_ncp.bottom] == 0
    assert a3_ncp.rank[a3_ncp.top] == a3.n


def test_rank_is_codimension(b3_ncp, b3):
    for i, w in enumerate(b3_ncp.members):
        assert b3_ncp.rank[i] == b3.n - b3.fixed_dim[w]


def test_non_member_rejected(a3_ncp, a3):
    outside = next(w for w in range(a3.size) if w not in a3_ncp.pos)
    with pytest.raises(ElementNotInGroup):
        a3_ncp.member_index(outside)


@pytest.mark.parametrize("fixture", ["a3_ncp", "g333_ncp"])
def test_meet_join_axioms_exhaustive(fixture, request):
    ncp = request.getfixturevalue(fixture)
    ms = ncp.members
    for u in ms:
        assert ncp.meet(u, u) == u and ncp.join(u, u) == u
        for v in ms:
            m, j = ncp.meet(u, v), ncp.join(u, v)
            assert m == ncp.meet(v, u)
            assert j == ncp.join(v, u)
            assert ncp.leq_elements(m, u) and ncp.leq_elements(m, v)
            assert ncp.leq_elements(u, j) and ncp.leq_elements(v, j)
            # absorption
            assert ncp.meet(u, j) == u
            assert ncp.join(u, m) == u


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_meet_join_associative(b3_ncp, data):
    ms = b3_ncp.members
    u = ms[data.draw(st.integers(0, len(ms) - 1))]
    v = ms[data.draw(st.integers(0, len(ms) - 1))]
    w = ms[data.draw(st.integers(0, len(ms) - 1))]
    assert b3_ncp.meet(b3_ncp.meet(u, v), w) == b3_ncp.meet(u, b3_ncp.meet(v, w))
    assert b3_ncp.join(b3_ncp.join(u, v), w) == b3_ncp.join(u, b3_ncp.join(v, w))


@pytest.mark.parametrize("spec", [GroupSpec("A", 3), GroupSpec("B", 3),
                                  GroupSpec("G", 3, 3), GroupSpec("I2", 2, 5),
                                  GroupSpec("H3", 3)],
                         ids=lambda s: s.label)
def test_brady_watt_flats(spec):
    """w -> Ker(w-1) is injective and turns <= into reverse inclusion."""
    ncp = build_ncp(build_group(spec))
    flats = [ncp.flat(w) for w in ncp.members]
    assert len(set(flats)) == ncp.size
    for i in range(ncp.size):
        for j in range(ncp.size):
            assert bool(ncp.leq[i, j]) == flats[i].contains_subspace(flats[j])


@pytest.mark.parametrize("fixture", ["a3_ncp", "b3_ncp", "g333_ncp"])
def test_kernel_decomposition_when_lengths_add(fixture, request):
    """u <= v  =>  Ker(v-1) = Ker(u-1) /\\ Ker((u^{-1}v)-1)."""
    ncp = request.getfixturevalue(fixture)
    group = ncp.group
    for i, u in enumerate(ncp.members):
        for j, v in enumerate(ncp.members):
            if not ncp.leq[i, j]:
                continue
            quotient = group.product(group.inverse(u), v)
            assert ncp.flat(u).intersect(group.fixed_space(quotient)) \
                == ncp.flat(v)


def test_multichain_count_matches_fuss_catalan(a3_ncp, a3):
    for chain_length in range(1, 5):
        assert a3_ncp.multichain_count(chain_length) == \
            fuss_catalan(a3.degrees, chain_length)
    with pytest.raises(ValueError):
        a3_ncp.multichain_count(0)


def test_divisors_and_reflections_below(b3_ncp, b3):
    c = b3.coxeter
    assert set(b3_ncp.divisors_of(c)) == set(b3_ncp.members)
    below = b3_ncp.reflections_below(c)
    assert len(below) == len(b3.reflections)
    r = below[0]
    assert b3_ncp.reflections_below(r) == [r]


def test_self_duality_of_rank_counts(a3_ncp, a3):
    # complement w -> w^{-1} c is a rank-reversing bijection of NCP
    counts = {}
    for i in range(a3_ncp.size):
        counts[int(a3_ncp.rank[i])] = counts.get(int(a3_ncp.rank[i]), 0) + 1
    assert all(counts[k] == counts[a3.n - k] for k in counts)
