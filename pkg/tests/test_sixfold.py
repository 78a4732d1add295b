import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlef import model, sixfold
from hyperlef.braid import mcg
from hyperlef.errors import UndecidedLift
from hyperlef.model import CurveClass, FibrationSpec, TwistLetter


class TestIntersectionForm:
    def test_table(self):
        A = sixfold.H4Class(1, 0)
        B = sixfold.H4Class(0, 1)
        alpha = sixfold.H2Class(1, 0)
        beta = sixfold.H2Class(0, 1)
        assert sixfold.intersect(A, alpha) == 0
        assert sixfold.intersect(A, beta) == 1
        assert sixfold.intersect(B, alpha) == 1
        assert sixfold.intersect(B, beta) == 0

    @given(st.integers(-9, 9), st.integers(-9, 9),
           st.integers(-9, 9), st.integers(-9, 9))
    def test_bilinearity_in_h4(self, a1, b1, a2, b2):
        u = sixfold.H4Class(a1, b1)
        v = sixfold.H4Class(a2, b2)
        gamma = sixfold.H2Class(3, -2)
        assert (sixfold.intersect(u + v, gamma)
                == sixfold.intersect(u, gamma) + sixfold.intersect(v, gamma))


class TestClassOfY:
    def test_genus_2_family(self):
        for m in range(-3, 4):
            Y = sixfold.class_of_y(2, m)
            assert (Y.a, Y.b) == (m, 6)

    @given(st.integers(1, 6), st.integers(-10, 10))
    def test_solved_by_intersections(self, g, m):
        """The two intersection numbers determine the class uniquely."""
        Y = sixfold.class_of_y(g, m)
        alpha = sixfold.H2Class(1, 0)
        beta = sixfold.H2Class(0, 1)
        # Y . alpha = fiber degree 2g+2, Y . beta = m
        assert sixfold.intersect(Y, alpha) == 2 * g + 2
        assert sixfold.intersect(Y, beta) == m
        # uniqueness: any class with those intersections equals Y
        for a in range(-10, 11):
            for b in range(0, 15):
                cand = sixfold.H4Class(a, b)
                if (sixfold.intersect(cand, alpha) == 2 * g + 2
                        and sixfold.intersect(cand, beta) == m):
                    assert cand == Y


class TestBundleType:
    def test_trivial_lift_gives_product(self):
        d = sixfold.bundle_type(mcg.TRIVIAL, 2)
        assert d.bundle == sixfold.TRIVIAL_PRODUCT

    def test_full_twist_gives_twisted(self):
        d = sixfold.bundle_type(mcg.FULL_TWIST, 2)
        assert d.bundle == sixfold.TWISTED
        assert d.twisted_is_trivial_bundle is False

    def test_twisted_bundle_triviality_mod_3(self):
        for g in range(1, 10):
            d = sixfold.bundle_type(mcg.FULL_TWIST, g)
            assert d.twisted_is_trivial_bundle == (g % 3 == 1)

    def test_undecided_raises(self):
        with pytest.raises(UndecidedLift):
            sixfold.bundle_type(mcg.UNDECIDED, 2)


SEP1 = CurveClass(id="s", genus=2, kind=model.SEP, vector=(0, 0, 0, 0), h=1)
A1 = CurveClass(id="a1", genus=2, kind=model.NONSEP, vector=(1, 0, 0, 0))


class TestBlowUpLedger:
    def test_no_reducible_fibers(self):
        spec = FibrationSpec(genus=1, letters=(), has_section=True)
        ledger, chi = sixfold.blow_up_ledger(spec)
        assert ledger == sixfold.BlowUpLedger(2, 0, ())
        assert chi == 6 + 2 * 2

    def test_family_ledger(self, family3):
        ledger, chi = sixfold.blow_up_ledger(family3)
        assert ledger.fiberwise_line_blowups == 3
        assert ledger.point_blowups == 16
        assert ledger.curve_blowups == (1,) * 8
        assert chi == 60

    def test_one_separating_letter(self):
        spec = FibrationSpec(genus=2, letters=(TwistLetter(curve=SEP1),),
                             has_section=True)
        ledger, chi = sixfold.blow_up_ledger(spec)
        assert ledger == sixfold.BlowUpLedger(3, 2, (1,))
        assert chi == 6 + 2 * 3 + (4 + 2 * 1)

    @given(st.integers(0, 6))
    def test_chi_matches_ledger_arithmetic(self, reps):
        spec = FibrationSpec(genus=2,
                             letters=(TwistLetter(curve=SEP1),) * reps,
                             has_section=True)
        ledger, chi = sixfold.blow_up_ledger(spec)
        assert chi == (6 + 2 * ledger.fiberwise_line_blowups
                       + 2 * ledger.point_blowups
                       + 2 * sum(ledger.curve_blowups))
        assert ledger.point_blowups == 2 * len(ledger.curve_blowups)


class TestYDescriptor:
    def test_counts_reducible_fibers(self, family3):
        n0, desc = sixfold.y_diffeo_descriptor(family3)
        assert n0 == 8
        assert desc == "M # 8*CP2bar"

    def test_irreducible_case(self):
        spec = FibrationSpec(genus=2, letters=(), has_section=True)
        assert sixfold.y_diffeo_descriptor(spec) == (0, "M # 0*CP2bar")

    def test_custom_name(self):
        spec = FibrationSpec(genus=2, letters=(TwistLetter(curve=SEP1),),
                             has_section=True)
        assert sixfold.y_diffeo_descriptor(spec, "Z")[1] == "Z # 1*CP2bar"
