"""Holonomy Lie algebra ranks against Witt-formula and bracket-closure oracles."""

import random
from fractions import Fraction

import pytest

from jumploci import (
    QuadraticData,
    ThreeForm,
    holonomy_from_threeform,
    lie_ranks,
    lyndon_words,
    wedge_basis,
)
from jumploci._linalg import rank

from _corpus import random_threeform


# -- independent oracles -------------------------------------------------------

def _mobius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(n, d):
    """Number of degree-d basis elements of the free Lie algebra on n letters."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(d // e) * n ** e
    return total // d


def _tensor_bracket(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            for w, c in ((wa + wb, ca * cb), (wb + wa, -ca * cb)):
                s = out.get(w, 0) + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return out


def _closure_ideal_dimension(n, relation_vecs, d):
    """Brute force: span of all bracketings of a relation with generators.

    Enumerates every binary bracket tree of total degree d having exactly one
    relation leaf, in every position, rather than only left-normed towers.
    """
    pairs = wedge_basis(n)
    gens = [{(i,): 1} for i in range(n)]
    rel_tensors = []
    for vec in relation_vecs:
        t = {}
        for (i, j), c in zip(pairs, vec):
            if c:
                for w, v in (((i, j), c), ((j, i), -c)):
                    t[w] = t.get(w, 0) + v
        rel_tensors.append({k: v for k, v in t.items() if v})

    def lie_elements(e):
        if e == 1:
            return gens
        out = []
        for a in range(1, e):
            for x in lie_elements(a):
                for y in lie_elements(e - a):
                    b = _tensor_bracket(x, y)
                    if b:
                        out.append(b)
        return out

    def ideal_elements(e):
        if e == 2:
            return list(rel_tensors)
        out = []
        for a in range(1, e - 1):
            for x in lie_elements(a):
                for y in ideal_elements(e - a):
                    b = _tensor_bracket(x, y)
                    if b:
                        out.append(b)
        return out

    vectors = ideal_elements(d)
    if not vectors:
        return 0
    keys = sorted({w for v in vectors for w in v})
    rows = [[Fraction(v.get(k, 0)) for k in keys] for v in vectors]
    return rank(rows)


# -- tests ----------------------------------------------------------------------

class TestLyndon:
    def test_counts_match_witt(self):
        for n in (2, 3, 4):
            for d in range(1, 7):
                assert len(lyndon_words(n, d)) == witt_dimension(n, d)

    def test_explicit_words(self):
        assert lyndon_words(2, 1) == [(0,), (1,)]
        assert lyndon_words(2, 2) == [(0, 1)]
        assert lyndon_words(2, 3) == [(0, 0, 1), (0, 1, 1)]


class TestFreeRanks:
    def test_free_n2_through_degree_5(self):
        q = QuadraticData(2, ())
        assert lie_ranks(q, 5).ranks == (2, 1, 2, 3, 6)

    def test_free_matches_witt(self):
        for n in (2, 3, 4):
            q = QuadraticData(n, ())
            ranks = lie_ranks(q, 6).ranks
            assert ranks == tuple(witt_dimension(n, d) for d in range(1, 7))


class TestQuotients:
    def test_z2_ranks(self):
        q = QuadraticData(2, ((Fraction(1),),))
        assert lie_ranks(q, 4).ranks == (2, 0, 0, 0)

    def test_z2_matches_closure_oracle(self):
        rel = (Fraction(1),)
        q = QuadraticData(2, (rel,))
        ranks = lie_ranks(q, 4).ranks
        for d in range(2, 5):
            ideal_dim = _closure_ideal_dimension(2, [rel], d)
            assert ranks[d - 1] == witt_dimension(2, d) - ideal_dim

    def test_surface_genus_2_degree_2(self):
        sym = [Fraction(0)] * 6
        pairs = wedge_basis(4)
        sym[pairs.index((0, 1))] = Fraction(1)
        sym[pairs.index((2, 3))] = Fraction(1)
        q = QuadraticData(4, (tuple(sym),))
        assert lie_ranks(q, 2).of_degree(2) == 5

    def test_random_quotients_match_closure_oracle(self):
        rng = random.Random(71)
        for _ in range(10):
            n = rng.choice((2, 3))
            m = n * (n - 1) // 2
            rels = []
            for _ in range(rng.randint(1, 2)):
                vec = tuple(Fraction(rng.randint(-2, 2)) for _ in range(m))
                if any(vec):
                    rels.append(vec)
            if not rels:
                continue
            q = QuadraticData(n, tuple(rels))
            ranks = lie_ranks(q, 4).ranks
            for d in range(2, 5):
                ideal_dim = _closure_ideal_dimension(n, rels, d)
                assert ranks[d - 1] == witt_dimension(n, d) - ideal_dim

    def test_monotone_under_extra_relations(self):
        rng = random.Random(72)
        for _ in range(10):
            n = rng.choice((2, 3))
            m = n * (n - 1) // 2
            base_rels = [tuple(Fraction(rng.randint(-2, 2)) for _ in range(m))]
            extra = tuple(Fraction(rng.randint(-2, 2)) for _ in range(m))
            smaller = lie_ranks(QuadraticData(n, tuple(base_rels)), 5).ranks
            larger = lie_ranks(QuadraticData(n, tuple(base_rels + [extra])), 5).ranks
            assert all(b <= a for a, b in zip(smaller, larger))

    def test_respanning_invariance(self):
        rng = random.Random(73)
        pairs = wedge_basis(3)
        rels = [
            tuple(Fraction(rng.randint(-2, 2)) for _ in pairs) for _ in range(2)
        ]
        q1 = QuadraticData(3, tuple(rels))
        # replace the relations by an invertible combination of themselves
        a, b, c, d = Fraction(1), Fraction(2), Fraction(1), Fraction(3)  # det = 1
        mixed = [
            tuple(a * x + b * y for x, y in zip(rels[0], rels[1])),
            tuple(c * x + d * y for x, y in zip(rels[0], rels[1])),
        ]
        q2 = QuadraticData(3, tuple(mixed))
        assert lie_ranks(q1, 5).ranks == lie_ranks(q2, 5).ranks


class TestDegreeCap:
    def test_cap_enforced(self):
        q = QuadraticData(2, ())
        with pytest.raises(ValueError):
            lie_ranks(q, 7)
        assert lie_ranks(q, 7, degree_cap=7).of_degree(7) == witt_dimension(2, 7)

    def test_degree_must_be_positive(self):
        with pytest.raises(ValueError):
            lie_ranks(QuadraticData(2, ()), 0)


class TestFromThreeForm:
    def test_zero_form_gives_free(self):
        q = holonomy_from_threeform(ThreeForm.zero(2))
        assert q.relations == ()
        assert lie_ranks(q, 4).ranks == (2, 1, 2, 3)

    def test_torus_form_kills_degree_two(self):
        q = holonomy_from_threeform(ThreeForm.volume())
        assert len(q.relations) == 3
        assert lie_ranks(q, 4).ranks == (3, 0, 0, 0)

    def test_surface_direction_relation(self):
        for g in (1, 2, 3):
            eta = ThreeForm.product_form(g)
            n = eta.n
            q = holonomy_from_threeform(eta)
            pairs = wedge_basis(n)
            surface_pairs = [idx for idx, (i, j) in enumerate(pairs) if j < 2 * g]
            sym = [Fraction(0)] * len(pairs)
            for i in range(g):
                sym[pairs.index((2 * i, 2 * i + 1))] = Fraction(1)
            rows = [list(r) for r in q.relations]
            # the symplectic class lies in the relation span
            assert rank(rows) == rank(rows + [sym])
            # and spans exactly the part supported in the surface directions
            supported = [
                r for r in rows if all(r[idx] == 0 for idx in range(len(pairs))
                                       if idx not in surface_pairs)
            ]
            assert len(supported) == 1
            scaled = supported[0]
            ratio = next(c for c in scaled if c)
            assert [c / ratio for c in scaled] == sym

    def test_relation_count_for_product_forms(self):
        # contractions of the product form span a space of dimension 2g + 1
        for g in (1, 2, 3):
            q = holonomy_from_threeform(ThreeForm.product_form(g))
            assert len(q.relations) == 2 * g + 1

    def test_random_forms_round_trip_span(self):
        rng = random.Random(74)
        for _ in range(10):
            n = rng.choice((3, 4, 5))
            eta = random_threeform(rng, n)
            q = holonomy_from_threeform(eta)
            pairs = wedge_basis(n)
            raw = []
            for k in range(n):
                row = [eta.value(i, j, k) for i, j in pairs]
                if any(row):
                    raw.append(row)
            rows = [list(r) for r in q.relations]
            assert rank(rows) == len(rows)
            assert rank(rows + raw) == len(rows)


class TestValidation:
    def test_relation_length_checked(self):
        with pytest.raises(ValueError):
            QuadraticData(3, ((Fraction(1),),))
