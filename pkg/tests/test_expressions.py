"""Tabulated expansions: anchors, structure, bounds, reconstruction."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powergeom.errors import DenominatorZero
from powergeom.expressions import (
    QUANTITIES,
    PaperQuantity,
    Prefactor,
    TrigPolynomial,
    quantities_for,
    quantity,
    reconstruct_quantity,
    trig_poly_eval,
)
from powergeom.models import FlowKind, PowerModel, eval_power_jet

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


class TestAnchors:
    def test_real_numerators_at_origin(self):
        for qid in ("METRIC_R_11", "METRIC_R_12", "METRIC_R_22"):
            assert trig_poly_eval(quantity(qid).numerators[0], 0.0, 0.0) == 1.0

    def test_real_denominators_at_origin(self):
        for qid in ("METRIC_R_11", "METRIC_R_12", "METRIC_R_22"):
            assert trig_poly_eval(quantity(qid).denominators[0], 0.0, 0.0) == -1.0

    def test_imaginary_numerators_vanish_at_origin(self):
        for qid in ("METRIC_I_11", "METRIC_I_12", "METRIC_I_22"):
            assert trig_poly_eval(quantity(qid).numerators[0], 0.0, 0.0) == 0.0

    def test_imaginary_denominator_at_origin(self):
        assert trig_poly_eval(quantity("METRIC_I_11").denominators[0],
                              0.0, 0.0) == -1.0

    def test_reconstructed_real_metric_matches_jet_at_origin(self):
        jet = eval_power_jet(PowerModel(FlowKind.REAL), 0.0, 0.0)
        for qid, slot in (("METRIC_R_11", jet.f11), ("METRIC_R_12", jet.f12),
                          ("METRIC_R_22", jet.f22)):
            recon = reconstruct_quantity(quantity(qid), 0.0, 0.0)
            assert abs(recon - slot) <= 1e-12

    def test_real_origin_values_explicitly(self):
        assert reconstruct_quantity(quantity("METRIC_R_11"), 0.0, 0.0) == -2.0
        assert reconstruct_quantity(quantity("METRIC_R_12"), 0.0, 0.0) == 2.0
        assert reconstruct_quantity(quantity("METRIC_R_22"), 0.0, 0.0) == -2.0

    def test_imaginary_metric_origin_is_zero(self):
        assert reconstruct_quantity(quantity("METRIC_I_11"), 0.0, 0.0) == 0.0


class TestStructure:
    def test_registry_covers_three_flows_times_five(self):
        assert len(QUANTITIES) == 15
        for kind in FlowKind:
            qs = quantities_for(kind)
            assert [q.target for q in qs] == ["g11", "g12", "g22", "det",
                                              "curvature"]

    def test_denominator_families_term_for_term(self):
        for fam in ("R", "I", "C"):
            d11 = quantity(f"METRIC_{fam}_11").denominators[0].terms
            d12 = quantity(f"METRIC_{fam}_12").denominators[0].terms
            d22 = quantity(f"METRIC_{fam}_22").denominators[0].terms
            assert d11 == d12 == d22

    def test_integer_coefficients_and_exponents(self):
        for q in QUANTITIES:
            for poly in q.numerators + q.denominators:
                for coeff, ec1, es1, ec2, es2 in poly.terms:
                    assert isinstance(coeff, int)
                    assert all(isinstance(e, int) and e >= 0
                               for e in (ec1, es1, ec2, es2))

    def test_exponent_repairs_are_annotated(self):
        repaired = {poly.name: poly.repairs
                    for q in QUANTITIES
                    for poly in q.numerators + q.denominators
                    if poly.repairs}
        assert set(repaired) == {"DET_R.den", "CURV_R.num", "CURV_I.num1",
                                 "CURV_I.den", "CURV_C.num3"}
        # every repaired exponent is multi-digit
        for fixes in repaired.values():
            for _, original, exponent in fixes:
                assert exponent >= 10
                assert str(exponent) in original

    def test_known_discrepant_quantities_carry_notes(self):
        assert quantity("METRIC_I_12").notes
        assert quantity("DET_I").notes

    def test_unknown_quantity_id(self):
        with pytest.raises(KeyError):
            quantity("METRIC_X_11")


@settings(max_examples=80, deadline=None, derandomize=True)
@given(angles, angles)
def test_coefficient_mass_bounds_every_table(a1, a2):
    for q in QUANTITIES[:5] + QUANTITIES[9:10]:
        for poly in q.numerators + q.denominators:
            assert abs(trig_poly_eval(poly, a1, a2)) <= poly.coefficient_mass


def test_pole_structure_kills_cosine_terms():
    # at a1 = pi/2 only terms free of c1 survive
    poly = quantity("METRIC_R_11").numerators[0]
    survivors = [t for t in poly.terms if t[1] == 0]
    expected = sum(c * math.cos(math.pi / 2) ** 0 * math.sin(math.pi / 2) ** es1
                   * math.cos(0.3) ** ec2 * math.sin(0.3) ** es2
                   for c, _, es1, ec2, es2 in survivors)
    got = trig_poly_eval(poly, math.pi / 2, 0.3)
    assert got == pytest.approx(expected, rel=1e-12, abs=1e-12)


class TestReconstruction:
    def test_matches_jet_metric_away_from_origin(self):
        rng = random.Random(5)
        model = PowerModel(FlowKind.REAL)
        for _ in range(25):
            a1, a2 = rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)
            jet = eval_power_jet(model, a1, a2)
            for qid, slot in (("METRIC_R_11", jet.f11),
                              ("METRIC_R_12", jet.f12),
                              ("METRIC_R_22", jet.f22)):
                recon = reconstruct_quantity(quantity(qid), a1, a2)
                assert recon == pytest.approx(slot, rel=1e-9, abs=1e-9)

    def test_scale_constants_enter_the_prefactor(self):
        q = quantity("METRIC_R_11")
        base = reconstruct_quantity(q, 0.4, -0.2, v=1.0, r0=1.0)
        scaled = reconstruct_quantity(q, 0.4, -0.2, v=3.0, r0=2.0)
        assert scaled == pytest.approx(base * 9.0 / 2.0, rel=1e-14)

    def test_denominator_zero_raises_with_location(self):
        poly = TrigPolynomial(name="vanishing", terms=((1, 0, 1, 0, 0),))
        q = PaperQuantity(
            id="SYNTH", kind=FlowKind.REAL, target="g11",
            prefactor=Prefactor(+1),
            numerators=(TrigPolynomial(name="one", terms=((1, 0, 0, 0, 0),)),),
            denominators=(poly,))
        with pytest.raises(DenominatorZero):
            reconstruct_quantity(q, 0.0, 0.5)  # sin(a1) = 0

    def test_prefactor_monomial(self):
        pf = Prefactor(-1, pow2=3, e_c1=2, e_c2=-1, e_v=4, e_r0=-2)
        assert pf.value(0.5, 2.0, 1.0, 1.0) == -8.0 * 0.25 / 2.0
