import pytest

from coinv.glaction import (
    KeySituation,
    apply_E_oracle,
    apply_F_oracle,
    push_p,
)
from coinv.polynomials import Poly, Q
from coinv.quotients import presentation
from coinv.shapes import Composition, compositions_of
from coinv.traces import (
    ModuleHom,
    PowerBasisTensor,
    adjunction_report,
    trace_map_report,
    counit_eps,
    counit_eps_prime,
    delta,
    delta_inv,
    delta_matrix_json,
    trace_E,
    trace_F,
    triangle_identity_check,
    unit_iota,
    unit_iota_prime,
)


def comp(*parts):
    return Composition(1, list(parts))


def key_situations(n):
    seen = set()
    for nu in compositions_of(n, (1, n)):
        if nu.key() in seen:
            continue
        seen.add(nu.key())
        for i in range(1, n):
            if nu[i] > 0:
                yield KeySituation(i, nu)


def graded_vectors(pres):
    for d in range(0, (pres.top_degree or 0) + 1, 2):
        yield from pres.graded_basis(d)


# ----------------------------------------------------------------------
# duality map


def test_delta_trivial_rank_one():
    ks = KeySituation(1, comp(1))
    hom = delta(ks, Poly.one(1))
    assert [v.rep for v in hom.values] == [Poly.one(1)]


def test_delta_worked_values():
    ks = KeySituation(1, comp(2))
    hom = delta(ks, Poly.one(2))
    assert hom.values[0].is_zero
    assert hom.values[1].rep == Poly.const(2, -1)


def test_delta_inverse_both_ways():
    for n in (2, 3):
        for ks in key_situations(n):
            rho = presentation(ks.rho)
            base = presentation(ks.nu)
            for g in graded_vectors(rho):
                assert delta_inv(ks, delta(ks, g)) == g
            for s in range(ks.a + 1):
                for w in graded_vectors(base):
                    values = [
                        w if t == s else base.zero() for t in range(ks.a + 1)
                    ]
                    hom = ModuleHom(ks, "nu", values)
                    assert delta(ks, delta_inv(ks, hom)) == hom


def test_delta_inv_requires_nu_side():
    ks = KeySituation(1, comp(1, 1))
    hom = ModuleHom(ks, "nu_prime", [presentation(ks.nu_prime).one()] * 2)
    with pytest.raises(ValueError):
        delta_inv(ks, hom)


def test_module_hom_validates_rank():
    ks = KeySituation(1, comp(2))
    with pytest.raises(ValueError):
        ModuleHom(ks, "nu", [presentation(ks.nu).one()])
    with pytest.raises(ValueError):
        ModuleHom(ks, "sideways", [])


def test_hom_evaluation_extends_by_linearity():
    for ks in key_situations(3):
        rho = presentation(ks.rho)
        xk = Poly.var(3, ks.k)
        for g in graded_vectors(rho):
            hom = delta(ks, g)
            for t in range(ks.a + 2):
                assert hom.evaluate(xk**t) == push_p(ks, g.rep * xk**t)


def test_delta_matrix_json_shape():
    ks = KeySituation(1, comp(2))
    data = delta_matrix_json(ks)
    assert data["a"] == 1 and data["b"] == 0
    assert len(data["rows"]) == 2
    assert all(len(row) == 2 for row in data["rows"])


# ----------------------------------------------------------------------
# units, counits, canonical tensors


def test_unit_canonical_form_worked_example():
    ks = KeySituation(1, comp(2))
    t = unit_iota_prime(ks)
    assert set(t.coeffs) == {(0, 1)}
    assert t.coeffs[(0, 1)].rep == Poly.const(2, -2)


def test_unit_other_side_worked_example():
    ks = KeySituation(1, comp(1, 1))
    t = unit_iota(ks)
    assert set(t.coeffs) == {(0, 1)}
    assert t.coeffs[(0, 1)].rep == Poly.const(2, 2)


def test_rank_one_units_are_one_tensor_one():
    ks = KeySituation(1, comp(1))
    assert unit_iota_prime(ks).coeffs[(0, 0)].rep == Poly.one(1)
    assert unit_iota(ks).coeffs[(0, 0)].rep == Poly.one(1)


def test_counit_values_on_extreme_powers():
    for ks in key_situations(3):
        xk = Poly.var(3, ks.k)
        sign = Q(-1 if ks.a % 2 else 1)
        assert counit_eps(ks, xk**ks.a, Poly.one(3)).rep == Poly.const(
            3, sign
        )
        assert counit_eps_prime(ks, xk**ks.b, Poly.one(3)).rep == Poly.one(3)


def test_tensor_canonicalization_ignores_representatives():
    ks = KeySituation(1, comp(1, 1, 1))
    rho = presentation(ks.rho)
    xk = Poly.var(3, ks.k)
    g = rho.generators[0]
    base = PowerBasisTensor.from_pairs(ks, "nu", [(Poly.one(3), xk)])
    shifted = PowerBasisTensor.from_pairs(
        ks, "nu", [(Poly.one(3), xk + g), (g, Poly.one(3))]
    )
    assert base == shifted


def test_tensor_pairs_roundtrip():
    for ks in key_situations(3):
        t = unit_iota_prime(ks)
        again = PowerBasisTensor.from_pairs(ks, "nu", t.pairs())
        assert again == t
        t = unit_iota(ks)
        again = PowerBasisTensor.from_pairs(ks, "nu_prime", t.pairs())
        assert again == t


def test_middle_multiplication_side_independent():
    for ks in key_situations(3):
        unit = unit_iota_prime(ks)
        for z in graded_vectors(presentation(ks.nu)):
            left = counit_eps_prime(
                ks, unit.multiply_middle(z.rep, factor="left")
            )
            right = counit_eps_prime(
                ks, unit.multiply_middle(z.rep, factor="right")
            )
            assert left == right


# ----------------------------------------------------------------------
# traces and triangles


def test_trace_values_single_variable():
    ks = KeySituation(1, comp(1))
    assert trace_F(ks, Poly.one(1)).rep == Poly.one(1)


def test_trace_worked_example():
    ks = KeySituation(1, comp(2))
    assert trace_F(ks, Poly.one(2)).rep == Poly.var(2, 1) * 2
    assert trace_E(ks, Poly.one(2)).is_zero


def test_traces_match_operators_small():
    situations = [KeySituation(1, comp(1))]
    for n in (2, 3):
        situations.extend(key_situations(n))
    for ks in situations:
        src = presentation(ks.nu)
        for z in graded_vectors(src):
            assert trace_F(ks, z.rep) == apply_F_oracle(ks, z)
        dst = presentation(ks.nu_prime)
        for z in graded_vectors(dst):
            assert trace_E(ks, z.rep) == apply_E_oracle(ks, z)


def test_traces_are_linear_and_graded():
    ks = KeySituation(2, comp(1, 2))
    src = presentation(ks.nu)
    vecs = list(graded_vectors(src))
    shift = 2 * (ks.a - ks.b)
    for z in vecs:
        image = trace_F(ks, z.rep)
        if not image.is_zero:
            assert image.degree() == z.degree() + shift
        assert trace_F(ks, z.rep * 3) == image * Q(3)
    total = trace_F(ks, sum((z.rep for z in vecs), Poly.zero(3)))
    acc = trace_F(ks, vecs[0].rep)
    for z in vecs[1:]:
        acc = acc + trace_F(ks, z.rep)
    assert total == acc


def test_triangle_identities_small():
    for n in (2, 3):
        for ks in key_situations(n):
            assert triangle_identity_check(ks)


def test_trace_map_report_small():
    rep = trace_map_report(3, (1, 3))
    assert rep.passed
    assert [c.name for c in rep.checks] == [
        "trace_F_matches_lowering_oracle",
        "trace_E_matches_raising_oracle",
    ]


def test_adjunction_report_small():
    rep = adjunction_report(3, (1, 3))
    assert rep.passed
    assert [c.name for c in rep.checks] == [
        "duality_map_is_isomorphism",
        "triangle_identities",
        "middle_multiplication_side_independent",
        "duality_map_base_linear",
    ]
