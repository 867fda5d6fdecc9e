"""Brieskorn Seifert data, torsion invariants, components, formality."""

import random
from fractions import Fraction
from itertools import permutations
from math import gcd

import pytest

from jumploci import (
    BrieskornInput,
    IntegralityError,
    Orbit,
    SeifertData,
    brieskorn_seifert,
    integer_obstruction,
    is_one_formal_link,
    tangent_cone_report,
    torsion_data,
    v1_components,
)
from jumploci.seifert import sweep


def orbit_multiset(s):
    return sorted((o.alpha, o.beta, o.multiplicity) for o in s.orbits)


class TestBrieskornGolden:
    def test_336(self):
        s = brieskorn_seifert((3, 3, 6))
        assert orbit_multiset(s) == [(2, 1, 3)]
        assert s.genus == 1
        assert s.euler == Fraction(-3, 2)

    def test_nilmanifold_bundles(self):
        for exps, e in (((2, 3, 6), -1), ((2, 4, 4), -2), ((3, 3, 3), -3)):
            s = brieskorn_seifert(exps)
            assert s.orbits == ()
            assert s.genus == 1
            assert s.euler == e

    def test_poincare_sphere(self):
        s = brieskorn_seifert((2, 3, 5))
        assert orbit_multiset(s) == [(2, 1, 1), (3, 1, 1), (5, 1, 1)]
        assert s.genus == 0
        assert s.euler == Fraction(-1, 30)
        assert torsion_data(s).torsion_order == 1

    def test_237(self):
        s = brieskorn_seifert((2, 3, 7))
        assert orbit_multiset(s) == [(2, 1, 1), (3, 2, 1), (7, 6, 1)]
        assert s.euler == Fraction(-1, 42)
        assert integer_obstruction(s) == -2
        assert torsion_data(s).torsion_order == 1

    def test_234_e6_link(self):
        # the E6 singularity link: H1 torsion has order 3
        s = brieskorn_seifert((2, 3, 4))
        assert orbit_multiset(s) == [(2, 1, 1), (3, 1, 2)]
        assert s.genus == 0
        assert s.euler == Fraction(-1, 6)
        assert torsion_data(s).torsion_order == 3

    def test_233_d4_link(self):
        s = brieskorn_seifert((2, 3, 3))
        assert torsion_data(s).torsion_order == 4

    def test_456(self):
        s = brieskorn_seifert((4, 5, 6))
        assert orbit_multiset(s) == [(2, 1, 1), (3, 1, 1), (5, 3, 2)]
        assert s.genus == 0
        assert s.euler == Fraction(-1, 30)
        t = torsion_data(s)
        assert (t.torsion_order, t.fiber_class_order, t.alpha) == (5, 1, 5)
        assert integer_obstruction(s) == -2

    def test_four_exponents(self):
        s = brieskorn_seifert((2, 2, 2, 3))
        assert orbit_multiset(s) == [(3, 2, 4)]
        assert s.genus == 0
        assert s.euler == Fraction(-2, 3)
        t = torsion_data(s)
        assert (t.torsion_order, t.fiber_class_order, t.alpha) == (54, 2, 27)


class TestValidation:
    def test_exponent_bounds(self):
        with pytest.raises(ValueError):
            BrieskornInput((2, 3))
        with pytest.raises(ValueError):
            BrieskornInput((1, 2, 3))

    def test_orbit_validation(self):
        with pytest.raises(ValueError):
            Orbit(alpha=4, beta=2, multiplicity=1)  # not coprime
        with pytest.raises(ValueError):
            Orbit(alpha=3, beta=3, multiplicity=1)  # out of range
        with pytest.raises(ValueError):
            Orbit(alpha=1, beta=0, multiplicity=1)

    def test_euler_sign_enforced(self):
        with pytest.raises(ValueError):
            SeifertData(orbits=(), genus=1, euler=Fraction(1, 2))

    def test_accepts_input_object(self):
        assert brieskorn_seifert(BrieskornInput((2, 3, 5))) == brieskorn_seifert((2, 3, 5))


class TestTorsion:
    def test_336_torsion(self):
        t = torsion_data(brieskorn_seifert((3, 3, 6)))
        assert t.torsion_order == 12
        assert t.fiber_class_order == 3
        assert t.alpha == 4

    def test_236_trivial(self):
        t = torsion_data(brieskorn_seifert((2, 3, 6)))
        assert (t.torsion_order, t.fiber_class_order, t.alpha) == (1, 1, 1)

    def test_circle_bundle_rule(self):
        # no exceptional orbits: |T| = ord(h) = |e| and alpha = 1
        for k in (1, 2, 3, 5):
            s = SeifertData(orbits=(), genus=2, euler=Fraction(-k))
            t = torsion_data(s)
            assert (t.torsion_order, t.fiber_class_order, t.alpha) == (k, k, 1)

    def test_group_order_identity(self):
        for exps in ((3, 3, 6), (2, 3, 4), (4, 5, 6), (2, 2, 3), (6, 10, 15)):
            t = torsion_data(brieskorn_seifert(exps))
            assert t.torsion_order == t.fiber_class_order * t.alpha

    def test_non_integral_rejected(self):
        s = SeifertData(orbits=(), genus=0, euler=Fraction(-3, 2))
        with pytest.raises(IntegralityError):
            torsion_data(s)


class TestComponents:
    def test_336_three_translated(self):
        c = v1_components(brieskorn_seifert((3, 3, 6)))
        assert c.positive_dim_count == 3
        assert c.component_dim == 2
        assert not c.includes_identity_component
        assert c.translated_count == 3

    def test_236_none(self):
        c = v1_components(brieskorn_seifert((2, 3, 6)))
        assert c.positive_dim_count == 0
        assert c.translated_count == 0

    def test_higher_genus_circle_bundle(self):
        s = SeifertData(orbits=(), genus=2, euler=Fraction(-1))
        c = v1_components(s)
        assert c.positive_dim_count == 1
        assert c.component_dim == 4
        assert c.includes_identity_component
        assert c.translated_count == 0

    def test_genus_zero_never_has_components(self):
        c = v1_components(brieskorn_seifert((2, 3, 5)))
        assert c.positive_dim_count == 0

    def test_counting_invariant(self):
        for exps in ((3, 3, 6), (2, 3, 6), (4, 4, 4), (2, 2, 2, 2)):
            c = v1_components(brieskorn_seifert(exps))
            expected = c.positive_dim_count - (1 if c.includes_identity_component else 0)
            assert c.translated_count == expected


class TestFormality:
    def test_rational_homology_sphere_formal(self):
        assert is_one_formal_link(brieskorn_seifert((2, 3, 5)))

    def test_heisenberg_not_formal(self):
        assert not is_one_formal_link(brieskorn_seifert((2, 3, 6)))

    def test_336_not_formal(self):
        assert not is_one_formal_link(brieskorn_seifert((3, 3, 6)))


class TestTangentCone:
    def test_holds_iff_genus_not_one(self):
        for g in range(6):
            s = SeifertData(orbits=(), genus=g, euler=Fraction(-1))
            rep = tangent_cone_report(s)
            assert rep.formula_holds == (g != 1)
            assert rep.r1_dim == 2 * g
            if g <= 1:
                assert rep.germ_is_identity_only
                assert rep.germ_torus_dim == 0
            else:
                assert rep.germ_torus_dim == 2 * g

    def test_236_fails(self):
        rep = tangent_cone_report(brieskorn_seifert((2, 3, 6)))
        assert not rep.formula_holds
        assert rep.r1_dim == 2


class TestBetaConvention:
    def test_downstream_inert_under_beta_change(self):
        rng = random.Random(61)
        for exps in ((3, 3, 6), (2, 3, 7), (4, 5, 6), (2, 2, 3)):
            s = brieskorn_seifert(exps)
            if not s.orbits:
                continue
            for _ in range(5):
                betas = []
                for o in s.orbits:
                    choices = [b for b in range(1, o.alpha) if gcd(b, o.alpha) == 1]
                    betas.append(rng.choice(choices))
                perturbed = s.with_betas(betas)
                assert torsion_data(perturbed) == torsion_data(s)
                assert v1_components(perturbed) == v1_components(s)
                assert is_one_formal_link(perturbed) == is_one_formal_link(s)
                assert tangent_cone_report(perturbed) == tangent_cone_report(s)

    def test_permutation_invariance(self):
        for exps in ((2, 3, 4), (3, 3, 6), (2, 4, 6)):
            base = brieskorn_seifert(exps)
            for perm in permutations(exps):
                s = brieskorn_seifert(perm)
                assert orbit_multiset(s) == orbit_multiset(base)
                assert s.genus == base.genus
                assert s.euler == base.euler


class TestSweep:
    def test_small_sweep_consistency(self):
        rows = sweep(6, 3)
        assert len(rows) == 5 ** 3
        for row in rows:
            s = row["seifert"]
            t = row["torsion"]
            assert t.torsion_order == t.fiber_class_order * t.alpha
            # the normalization obstruction must be an integer
            integer_obstruction(s)

    def test_sweep_requires_three(self):
        with pytest.raises(ValueError):
            sweep(4, 2)
