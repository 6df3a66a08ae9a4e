import pytest

from ffhg.characters import MulChar, char_from_ideal, jacobi_sum, quadratic, trivial
from ffhg.cyclotomic import CycInt
from ffhg.errors import OddOrder
from ffhg.field import admissible_orders, make_prime_context, quadratic_character
from ffhg.hgvalue import HGValue, render
from ffhg.hypergeometric import (
    f_eta,
    f_eta_table,
    hg2f1,
    hg2f1_float_oracle,
    hg2f1_table,
    hg_float_oracle,
    hg_n1fn,
    hg_n1fn_table,
    s_eta,
    s_eta_table,
)

import oracles


def ctx_for(p):
    return make_prime_context(p, admissible_orders(p))


def test_hgvalue_normalizes_powers_of_p():
    v = HGValue(CycInt(4, (26, 13)), 13, 2)
    assert v.pexp == 1 and v.num == CycInt(4, (2, 1))
    assert HGValue(CycInt.from_int(0), 13, 3).pexp == 0
    assert render(HGValue(CycInt(4, (-3, -2)), 13, 1)) == "(-3 - 2*z4)/13"
    assert render(HGValue(CycInt.from_int(5), 13, 2)) == "5/13^2"


@pytest.mark.parametrize("p", [13, 29, 37])
def test_f_eta_against_naive(p):
    ctx = ctx_for(p)
    eta = char_from_ideal(ctx, 4)
    ref = oracles.ideal_char(p, 4, ctx.roots[4])
    table = f_eta_table(ctx, eta)
    for z in range(p):
        assert oracles.close(table[z].to_complex(), oracles.f_eta(p, ref, z), 1e-7)
    assert table[4] == f_eta(ctx, eta, 4)


def test_f_eta_at_one_and_quadratic_case():
    ctx = ctx_for(13)
    eta = char_from_ideal(ctx, 4)
    assert f_eta(ctx, eta, 1) == jacobi_sum(eta, eta.conj() ** 2)
    phi = quadratic(ctx)
    for z in range(2, 13):
        assert f_eta(ctx, phi, z) == CycInt.from_int(-1 - quadratic_character(ctx, z))


@pytest.mark.parametrize("p", [13, 37, 73])
def test_s_eta_against_naive(p):
    ctx = ctx_for(p)
    for N in (4, 6, 12):
        if N not in ctx.roots:
            continue
        eta = char_from_ideal(ctx, N)
        ref = oracles.ideal_char(p, N, ctx.roots[N])
        table = s_eta_table(ctx, eta)
        for z in range(p):
            assert oracles.close(table[z].to_complex(), oracles.s_eta(p, ref, z, N // 2 - 1), 1e-7)


def test_s_eta_needs_even_order_or_power():
    ctx = ctx_for(13)
    with pytest.raises(OddOrder):
        s_eta(ctx, char_from_ideal(ctx, 3), 4)
    # x^0 = 1 at x = 0 as well
    eta = char_from_ideal(ctx, 3)
    ref = oracles.ideal_char(13, 3, ctx.roots[3])
    assert oracles.close(s_eta(ctx, eta, 4, x_power=0).to_complex(), oracles.s_eta(13, ref, 4, 0))


def test_f_and_s_relation():
    ctx = ctx_for(37)
    for N in (4, 6, 12):
        eta = char_from_ideal(ctx, N)
        F, S = f_eta_table(ctx, eta), s_eta_table(ctx, eta)
        eb2 = eta.conj() ** 2
        for z in range(37):
            if z != 1:
                assert F[z] == eb2(1 - z) * S[z]


def test_hello_identity():
    p = 13
    ctx = ctx_for(p)
    phi = quadratic(ctx)
    eta = char_from_ideal(ctx, 4)
    for b in range(2, p - 1):
        if quadratic_character(ctx, 1 - b * b) == 1:
            rhs = jacobi_sum(phi, eta) * eta(-1) * (2 * quadratic_character(ctx, 1 + b))
            assert s_eta(ctx, eta, b * b) == rhs


@pytest.mark.parametrize("p", [13, 17, 29, 37])
def test_hg2f1_against_naive_definition(p):
    ctx = ctx_for(p)
    psi = char_from_ideal(ctx, 4)
    ref = oracles.ideal_char(p, 4, ctx.roots[4])
    leg = oracles.legendre(p)
    exact = hg2f1_table(ctx, psi.conj(), psi, quadratic(ctx))
    for z in range(p):
        naive = oracles.greene_2f1(p, oracles.conj(ref), ref, leg, z)
        assert oracles.close(exact[z].to_complex(), naive)


@pytest.mark.parametrize("p", [13, 37])
def test_exact_vs_all_characters_oracle(p):
    ctx = ctx_for(p)
    phi = quadratic(ctx)
    psi = char_from_ideal(ctx, 12)
    shapes = [(psi.conj() ** 3, psi**3, phi), (phi * psi, psi, phi), (psi**2, psi**5, psi**7),
              (trivial(ctx), trivial(ctx), trivial(ctx))]
    for A, B, C in shapes:
        table = hg2f1_table(ctx, A, B, C)
        for z in range(p):
            assert abs(table[z].to_complex() - hg2f1_float_oracle(ctx, A, B, C, z)) < 1e-9


def test_vanishing_cases():
    ctx = ctx_for(13)
    phi, eta = quadratic(ctx), char_from_ideal(ctx, 4)
    for z in range(1, 13):
        if quadratic_character(ctx, z) == -1:
            assert hg2f1(ctx, phi * eta, eta, phi, z).is_zero()
    assert hg2f1(ctx, eta, eta, phi, 0).is_zero()


def test_theorem_one_value_at_13():
    ctx = ctx_for(13)
    phi, psi = quadratic(ctx), char_from_ideal(ctx, 4)
    chi = CycInt(4, (3, 2))  # primary generator of (13, i - 5)
    for b in range(2, 12):
        a = b * b % 13
        if quadratic_character(ctx, 1 - a) == 1:
            expected = HGValue(chi * (-2 * quadratic_character(ctx, 1 + b)), 13, 1)
            assert hg2f1(ctx, psi.conj(), psi, phi, a) == expected


def test_higher_hypergeometric():
    ctx = ctx_for(13)
    phi, eps = quadratic(ctx), trivial(ctx)
    psi = char_from_ideal(ctx, 12)
    for z in range(13):
        assert hg_n1fn(ctx, [phi, psi], [psi**5], z) == hg2f1(ctx, phi, psi, psi**5, z)
    table = hg_n1fn_table(ctx, [phi, phi, phi], [eps, eps])
    assert abs(table[1].to_complex() - hg_float_oracle(ctx, [phi, phi, phi], [eps, eps], 1)) < 1e-6
    assert table[0].is_zero()
    mixed = hg_n1fn_table(ctx, [psi, psi**3, psi**7], [phi, psi**2])
    for z in range(13):
        ref = hg_float_oracle(ctx, [psi, psi**3, psi**7], [phi, psi**2], z)
        assert abs(mixed[z].to_complex() - ref) < 1e-9


def test_float_oracle_trivial_cases():
    ctx = ctx_for(13)
    eps = trivial(ctx)
    assert abs(hg2f1_float_oracle(ctx, eps, eps, eps, 0)) < 1e-12
    assert abs(hg2f1(ctx, eps, eps, eps, 1).to_complex() - hg2f1_float_oracle(ctx, eps, eps, eps, 1)) < 1e-9


def test_mixed_conductors_compare_equal():
    ctx = ctx_for(73)
    psi = MulChar(ctx, 24, 1)
    v = hg2f1(ctx, psi**6, psi**18, quadratic(ctx), 5)
    assert v == v.embed(24)
