import random

import pytest

from coinv.errors import NoSolutionError, WindowOverflowError
from coinv.glaction import (
    KeySituation,
    WeightFamily,
    apply_D,
    apply_E_oracle,
    apply_E_poly,
    apply_F_oracle,
    apply_F_poly,
    apply_operator_family,
    decompose_over,
    hilbert_identity_check,
    ideal_invariance_check,
    parse_op_word,
    push_p,
    push_p_poly,
    push_p_prime,
    push_p_prime_poly,
    relation_report,
    weight_dim_report,
)
from coinv.polynomials import (
    Poly,
    Q,
    antisymmetrize,
    e_block,
    eps_nu,
    eps_pair,
    exact_divide,
)
from coinv.quotients import presentation
from coinv.shapes import (
    Composition,
    coinvariant_top_degree,
    compositions_of,
    partitions_of,
    transpose,
)


def comp(*parts):
    return Composition(1, list(parts))


def window_weights(n, window):
    seen = set()
    out = []
    for nu in compositions_of(n, window):
        if nu.key() not in seen:
            seen.add(nu.key())
            out.append(nu)
    return out


def key_situations(n):
    for nu in window_weights(n, (1, n)):
        for i in range(1, n):
            if nu[i] > 0:
                yield KeySituation(i, nu)


def graded_vectors(pres):
    for d in range(0, (pres.top_degree or 0) + 1, 2):
        yield from pres.graded_basis(d)


# ----------------------------------------------------------------------
# key situations


def test_key_situation_fields():
    ks = KeySituation(1, comp(2))
    assert ks.nu_prime == comp(1, 1)
    assert (ks.a, ks.b, ks.k) == (1, 0, 2)
    assert ks.rho == comp(1, 1)

    ks = KeySituation(2, comp(1, 2, 1))
    assert ks.nu_prime == comp(1, 1, 2)
    assert (ks.a, ks.b, ks.k) == (1, 1, 3)
    assert ks.rho == comp(1, 1, 1, 1)


def test_key_situation_rejects_empty_part():
    with pytest.raises(ValueError):
        KeySituation(2, comp(2))


def test_kernels():
    ks = KeySituation(1, comp(3))
    x1, x2, x3 = (Poly.var(3, i) for i in (1, 2, 3))
    assert ks.f_kernel() == (x2 - x3) * (x1 - x3)
    assert ks.e_kernel() == Poly.one(3)
    ks = KeySituation(1, comp(1, 2))
    assert ks.f_kernel() == Poly.one(3)
    assert ks.e_kernel() == (x1 - x2) * (x1 - x3)


# ----------------------------------------------------------------------
# polynomial-level operators, frozen values


def test_lowering_of_one_is_root_difference():
    ks = KeySituation(1, comp(2))
    assert apply_F_poly(ks, Poly.one(2)) == Poly.var(2, 1) - Poly.var(2, 2)


def test_lowering_single_variable():
    ks = KeySituation(1, comp(1))
    assert apply_F_poly(ks, Poly.one(1)) == Poly.one(1)


def test_raising_of_one_vanishes_when_no_room():
    # b = 0 forces the antisymmetrization of a constant kernel to zero
    ks = KeySituation(1, comp(2))
    assert apply_E_poly(ks, Poly.one(2)).is_zero


def test_raising_of_one_nontrivial():
    ks = KeySituation(1, comp(1, 1))
    assert apply_E_poly(ks, Poly.one(2)) == Poly.var(2, 1) - Poly.var(2, 2)


# ----------------------------------------------------------------------
# free-module decomposition


def test_decompose_matches_worked_example():
    ks = KeySituation(1, comp(2))
    x1 = Poly.var(2, 1)
    z0, z1 = decompose_over(ks, x1, "nu")
    assert z0 == Poly.var(2, 1) + Poly.var(2, 2)
    assert z1 == -Poly.one(2)


def test_decompose_reconstructs_both_sides():
    rng = random.Random(7)
    for ks in key_situations(3):
        xk = Poly.var(3, ks.k)
        rho_pres = presentation(ks.rho)
        for z in graded_vectors(rho_pres):
            f = z.rep * Q(rng.randint(1, 5))
            for side, r_max in (("nu", ks.a), ("nu_prime", ks.b)):
                coeffs = decompose_over(ks, f, side)
                assert len(coeffs) == r_max + 1
                rebuilt = Poly.zero(3)
                for r, zr in enumerate(coeffs):
                    rebuilt = rebuilt + zr * xk**r
                assert rebuilt == f


def test_decompose_rejects_non_invariant():
    ks = KeySituation(1, comp(3))  # refined blocks still glue x1, x2
    with pytest.raises(NoSolutionError):
        decompose_over(ks, Poly.var(3, 1), "nu")


def test_decompose_rejects_bad_side_and_size():
    ks = KeySituation(1, comp(2))
    with pytest.raises(ValueError):
        decompose_over(ks, Poly.one(2), "left")
    with pytest.raises(ValueError):
        decompose_over(ks, Poly.one(3), "nu")


# ----------------------------------------------------------------------
# oracle route against the polynomial route


def test_oracle_lowering_worked_example():
    ks = KeySituation(1, comp(2))
    image = apply_F_oracle(ks, presentation(comp(2)).one())
    assert image.rep == Poly.var(2, 1) * 2


def test_routes_agree_everywhere_small():
    for n in (2, 3):
        for ks in key_situations(n):
            src = presentation(ks.nu)
            dst = presentation(ks.nu_prime)
            for z in graded_vectors(src):
                assert dst.normal_form(apply_F_poly(ks, z.rep)) == (
                    apply_F_oracle(ks, z)
                )
            for z in graded_vectors(dst):
                assert src.normal_form(apply_E_poly(ks, z.rep)) == (
                    apply_E_oracle(ks, z)
                )


def test_routes_agree_with_shape_cut():
    for mu in partitions_of(3):
        mu_c = Composition(1, list(mu.parts))
        for ks in key_situations(3):
            src = presentation(ks.nu, mu_c)
            dst = presentation(ks.nu_prime, mu_c)
            if src.is_zero_algebra:
                continue
            for z in graded_vectors(src):
                assert dst.normal_form(apply_F_poly(ks, z.rep)) == (
                    apply_F_oracle(ks, z)
                )
            if dst.is_zero_algebra:
                continue
            for z in graded_vectors(dst):
                assert src.normal_form(apply_E_poly(ks, z.rep)) == (
                    apply_E_oracle(ks, z)
                )


def test_degree_shift_is_block_size_difference():
    for ks in key_situations(3):
        src = presentation(ks.nu)
        dst = presentation(ks.nu_prime)
        shift = 2 * (ks.a - ks.b)
        for z in graded_vectors(src):
            image = apply_F_oracle(ks, z)
            if not image.is_zero:
                assert image.degree() == z.degree() + shift
        for z in graded_vectors(dst):
            image = apply_E_oracle(ks, z)
            if not image.is_zero:
                assert image.degree() == z.degree() - shift


def test_degree_endpoints_correspond():
    # top degrees differ by exactly the operator's degree shift
    for ks in key_situations(4):
        d_src = coinvariant_top_degree(ks.nu)
        d_dst = coinvariant_top_degree(ks.nu_prime)
        assert d_dst - d_src == 2 * (ks.a - ks.b)


def test_lowering_intertwines_shape_cut_reduction():
    mu = comp(2, 1)
    for ks in key_situations(3):
        plain = presentation(ks.nu)
        cut_src = presentation(ks.nu, mu)
        cut_dst = presentation(ks.nu_prime, mu)
        for z in graded_vectors(plain):
            direct = cut_dst.normal_form(apply_F_poly(ks, z.rep))
            reduced_first = cut_dst.normal_form(
                apply_F_poly(ks, cut_src.normal_form(z.rep).rep)
            )
            assert direct == reduced_first


def test_result_independent_of_representative():
    mu = comp(2, 1)
    ks = KeySituation(1, comp(1, 1, 1))
    cut_src = presentation(ks.nu, mu)
    cut_dst = presentation(ks.nu_prime, mu)
    z = cut_src.one()
    g = cut_src.generators[0]
    shifted = z.rep + g  # same class, different representative
    assert cut_dst.normal_form(apply_F_poly(ks, shifted)) == (
        cut_dst.normal_form(apply_F_poly(ks, z.rep))
    )


# ----------------------------------------------------------------------
# pushforwards


def test_push_worked_example():
    ks = KeySituation(1, comp(2))
    f = exact_divide(eps_nu(ks.nu), eps_pair(ks.nu, ks.nu_prime))
    assert push_p(ks, f).rep == Poly.one(2)
    assert push_p_prime(ks, Poly.one(2)).rep == Poly.one(2)


def test_push_agrees_with_antisymmetrization():
    for n in (2, 3):
        for ks in key_situations(n):
            xk = Poly.var(n, ks.k)
            pair = eps_pair(ks.nu, ks.nu_prime)
            for t in range(ks.a + ks.b + 2):
                f = xk**t
                assert push_p_poly(ks, f) == exact_divide(
                    antisymmetrize(pair * f, ks.nu), eps_nu(ks.nu)
                )
                assert push_p_prime_poly(ks, f) == exact_divide(
                    antisymmetrize(pair * f, ks.nu_prime),
                    eps_nu(ks.nu_prime),
                )


def test_push_kills_low_powers():
    ks = KeySituation(1, comp(3))  # a = 2
    xk = Poly.var(3, ks.k)
    assert push_p_poly(ks, Poly.one(3)).is_zero
    assert push_p_poly(ks, xk).is_zero
    assert push_p_poly(ks, xk**2) == Poly.one(3)


# ----------------------------------------------------------------------
# diagonal operator and weight families


def test_apply_D_scales_by_part():
    nu = comp(1, 2)
    z = presentation(nu).one()
    assert apply_D(2, nu, z) == z * Q(2)
    assert apply_D(5, nu, z).is_zero


def test_family_construction_drops_zeros():
    nu = comp(2)
    pres = presentation(nu)
    wf = WeightFamily(2, (1, 2), None, {nu: pres.zero()})
    assert wf.is_zero
    assert wf.components == {}


def test_family_rejects_weight_outside_window():
    with pytest.raises(WindowOverflowError):
        WeightFamily.unit(Composition(3, [2]), (1, 2))


def test_family_linear_algebra():
    wf = WeightFamily.unit(comp(2), (1, 2))
    two = wf + wf
    assert two == wf * Q(2)
    assert (two - wf) == wf
    assert (wf - wf).is_zero
    assert wf != WeightFamily.unit(comp(1, 1), (1, 2))


def test_family_apply_moves_weight():
    w1 = WeightFamily.unit(comp(2), (1, 2))
    out = w1.apply("F", 1)
    assert list(out.components) == [comp(1, 1)]
    assert out.components[comp(1, 1)].rep == Poly.var(2, 1) * 2


def test_family_addition_merges_components():
    a = WeightFamily.unit(comp(2), (1, 2))
    b = WeightFamily.unit(comp(1, 1), (1, 2))
    both = a + b
    assert set(both.components) == {comp(2), comp(1, 1)}
    cancel = both - a - b
    assert cancel.is_zero


def test_window_overflow_on_nonzero_images_only():
    wf = WeightFamily.unit(comp(1), (1, 1))
    with pytest.raises(WindowOverflowError):
        wf.apply("F", 1)
    # raising out of an empty part is the zero map, not an overflow
    assert wf.apply("E", 1).is_zero


def test_operator_word_parsing():
    assert parse_op_word("F_2 F_1 E_2") == [("F", 2), ("F", 1), ("E", 2)]
    assert parse_op_word([("D", 3)]) == [("D", 3)]
    with pytest.raises(ValueError):
        parse_op_word("G_1")
    with pytest.raises(ValueError):
        parse_op_word("F_x")


def test_operator_word_applies_rightmost_first():
    wf = WeightFamily.unit(comp(2), (1, 2))
    via_word = apply_operator_family("E_1 F_1", wf)
    by_hand = wf.apply("F", 1).apply("E", 1)
    assert via_word == by_hand
    assert not via_word.is_zero
    # the other order acts on an empty part first and dies
    assert apply_operator_family("F_1 E_1", wf).is_zero


def test_commutator_reproduces_weight_on_singleton():
    # [E_1, F_1] acts as multiplication by nu_1 - nu_2 on weight (2)
    wf = WeightFamily.unit(comp(2), (1, 2))
    ef = apply_operator_family("E_1 F_1", wf)
    fe = apply_operator_family("F_1 E_1", wf)
    assert ef - fe == wf * Q(2)


# ----------------------------------------------------------------------
# reports


def test_relation_report_small():
    for n in (2, 3):
        rep = relation_report(n, (1, n))
        assert rep.passed
    names = [c.name for c in relation_report(2, (1, 2)).checks]
    assert names == [
        "commutator_EF_is_weight_difference",
        "commutator_DE_scales_E",
        "commutator_DF_scales_F",
        "distant_EE_FF_commute",
        "serre_relations",
    ]


def test_relation_report_shape_cut():
    for mu in partitions_of(3):
        rep = relation_report(3, (1, 3), Composition(1, list(mu.parts)))
        assert rep.passed


def test_ideal_invariance_small():
    for mu in partitions_of(3):
        rep = ideal_invariance_check(Composition(1, list(mu.parts)), (1, 3))
        assert rep.passed


def test_weight_dim_report_small():
    for mu in partitions_of(3):
        rep = weight_dim_report(Composition(1, list(mu.parts)), (1, 3))
        assert rep.passed


def test_hilbert_identity_worked_example():
    assert hilbert_identity_check(comp(1, 2, 1), comp(1, 2, 1))


def test_hilbert_identity_small_sweep():
    for n in (1, 2, 3):
        for mu in partitions_of(n):
            mu_c = Composition(1, list(mu.parts))
            for nu in window_weights(n, (1, 3)):
                if not presentation(nu, mu_c).is_zero_algebra:
                    assert hilbert_identity_check(mu_c, nu)


def test_hilbert_identity_rejects_zero_algebra():
    with pytest.raises(ValueError):
        hilbert_identity_check(comp(3), comp(3))


def test_extreme_weight_spaces_are_lines():
    # arrangements of the transpose shape carry one-dimensional spaces
    for mu in partitions_of(3):
        mu_c = Composition(1, list(mu.parts))
        lam = transpose(mu_c)
        for nu in window_weights(3, (1, 3)):
            if nu.sorted_partition() != lam:
                continue
            pres = presentation(nu, mu_c)
            assert pres.dim() == 1
            wf = WeightFamily.unit(nu, (1, 3), mu_c)
            for i in range(1, 3):
                if nu[i + 1] == 0:
                    assert wf.apply("E", i).is_zero


def test_block_e_requires_valid_indices():
    with pytest.raises(ValueError):
        e_block(comp(2, 1), [1, 1], 1)
