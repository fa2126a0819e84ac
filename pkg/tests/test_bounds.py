"""Power factorizations, direction decomposition, upper-bound membership."""

from __future__ import annotations

import pytest

from qlaurent.bounds import (
    coprime_check_rank2,
    decompose_by_direction,
    power_factorization_check,
    ub_local_member,
    ub_member,
    v_power,
    w_power,
)
from qlaurent.expr import parse_element
from qlaurent.seed import apply_word, mutate_seed
from qlaurent.torus import ContextMismatch

from conftest import golden_text


# -- V and W powers ------------------------------------------------------------


def test_v_power_strings(g2):
    assert str(v_power(g2, 2, 1)) == "1 + q^(1/2)*X(1,0)"
    assert (
        str(v_power(g2, 1, 1))
        == "q^(3/2)*X(0,-3) + h[1,1]*q*X(0,-2) + h[1,1]*q^(1/2)*X(0,-1) + 1"
    )


def test_w_power_strings(g2):
    assert str(w_power(g2, 2, 1)) == "q^(-1/2)*X(-1,0) + 1"
    assert (
        str(w_power(g2, 1, 1))
        == "1 + h[1,1]*q^(-1/2)*X(0,1) + h[1,1]*q^(-1)*X(0,2) + q^(-3/2)*X(0,3)"
    )


def test_vw_power_edges(g2):
    assert v_power(g2, 1, 0) == g2.initial_ctx.one()
    assert w_power(g2, 2, 0) == g2.initial_ctx.one()
    with pytest.raises(ValueError):
        v_power(g2, 1, -1)


def test_vw_power_reroots_mutated_seeds(g2):
    s = apply_word(g2, (1, 2))
    r = s.reroot()
    assert v_power(s, 1, 2) == v_power(r, 1, 2)


def test_power_factorizations(g2, a2, m3):
    for seed in (g2, a2, m3):
        for i in range(1, seed.pair.n + 1):
            for s in (1, 2):
                assert power_factorization_check(seed, i, s)


# -- decomposition -----------------------------------------------------------------


def test_decompose_x3(g2):
    x3 = parse_element(golden_text("g2_x3.txt"), g2.initial_ctx)
    dec = decompose_by_direction(g2, x3, 1)
    assert set(dec.buckets) == {-1}
    assert dec.reassemble() == x3


def test_decompose_x5_buckets(g2):
    x5 = parse_element(golden_text("g2_x5.txt"), g2.initial_ctx)
    dec = decompose_by_direction(g2, x5, 1)
    assert set(dec.buckets) == {-2, -1, 0, 1}
    assert dec.reassemble() == x5
    idx = dec.direction - 1
    for part in dec.buckets.values():
        assert all(c[idx] == 0 for c in part.terms)


def test_decompose_rejects_foreign_context(g2, m3):
    y = m3.initial_ctx.basis((1, 0, 0))
    with pytest.raises(ContextMismatch):
        decompose_by_direction(g2, y, 1)


# -- membership -----------------------------------------------------------------------


def test_initial_and_mutated_variables_are_members(g2):
    for v in g2.vars:
        assert ub_member(g2, v)
    for word in [(1,), (2,), (1, 2), (2, 1)]:
        s = apply_word(g2, word)
        assert ub_member(g2, s.vars[word[-1] - 1])


def test_golden_variables_are_members(g2):
    for name in ["g2_x3.txt", "g2_x5.txt", "g2_x8.txt"]:
        y = parse_element(golden_text(name), g2.initial_ctx)
        assert ub_member(g2, y)


def test_inverse_variable_is_not_member(g2, a2, m3):
    for seed in (g2, a2, m3):
        m = seed.pair.m
        for i in range(1, seed.pair.n + 1):
            y = seed.initial_ctx.basis(
                tuple(-1 if l == i - 1 else 0 for l in range(m))
            )
            assert not ub_member(seed, y)


def test_local_membership_is_per_direction(g2):
    y = g2.initial_ctx.basis((-1, 0))
    assert not ub_local_member(g2, y, 1)
    assert ub_local_member(g2, y, 2)


def test_frozen_monomials_are_members(m3):
    for c in [(0, 0, 1), (0, 0, -1), (0, 0, -3)]:
        assert ub_member(m3, m3.initial_ctx.basis(c))


def test_member_sum_with_product(g2):
    x3 = parse_element(golden_text("g2_x3.txt"), g2.initial_ctx)
    x4 = parse_element(golden_text("g2_x4.txt"), g2.initial_ctx)
    assert ub_member(g2, x3 * x4 + x3 + g2.initial_ctx.one())


def test_ub_member_accepts_unrooted_seed(g2):
    s = apply_word(g2, (1,))
    # operations against a mutated seed re-root it internally
    assert ub_member(s, s.reroot().vars[0])
    assert not ub_member(s, s.reroot().initial_ctx.basis((-1, 0)))


# -- coprimality ------------------------------------------------------------------------


def test_coprime_verdicts(g2, a2, m3):
    assert coprime_check_rank2(g2) is True
    assert coprime_check_rank2(a2) is True
    assert coprime_check_rank2(m3) is None


def test_coprime_requires_rank_two(g2):
    one_dir = {
        "m": 2,
        "n": 1,
        "lambda": [[0, 1], [-1, 0]],
        "btilde": [[0], [-1]],
    }
    from qlaurent.seed import seed_from_json

    assert coprime_check_rank2(seed_from_json(one_dir)) is None
