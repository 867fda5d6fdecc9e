"""Shared test corpus: named presentations, model forms, random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from jumploci import LaurentPoly, ThreeForm, Word, parse_presentation

# -- named presentations -----------------------------------------------------

FREE_1 = parse_presentation("<x | >")
FREE_2 = parse_presentation("<x, y | >")
FREE_3 = parse_presentation("<x, y, z | >")
Z2 = parse_presentation("<x, y | [x,y]>")
TREFOIL = parse_presentation("<x, y | x y x y^-1 x^-1 y^-1>")
FIGURE_EIGHT = parse_presentation("<x, y | x y^-1 x^-1 y x y^-1 x y x^-1 y^-1>")
SURFACE_2 = parse_presentation("<x1, y1, x2, y2 | [x1,y1] [x2,y2]>")
TORUS_2_5 = parse_presentation("<x, y | x y x y x y^-1 x^-1 y^-1 x^-1 y^-1>")
HEISENBERG = parse_presentation("<x, y, z | [x,y] z^-1, [x,z], [y,z]>")
COMM_SQUARED = parse_presentation("<x, y | [x,y]^2>")
DOUBLE_COMM = parse_presentation("<x, y, z | [x, [y, z]], [x, y]>")


def cross_validation_corpus():
    """At least ten presentations spanning free, surface, knot and random types."""
    named = [
        FREE_2,
        FREE_3,
        Z2,
        TREFOIL,
        FIGURE_EIGHT,
        SURFACE_2,
        TORUS_2_5,
        HEISENBERG,
        COMM_SQUARED,
        DOUBLE_COMM,
    ]
    rng = random.Random(20240)
    named.extend(random_commutator_presentation(rng, gens=3) for _ in range(2))
    return named


# -- random generators ---------------------------------------------------------

def random_word(rng, num_gens, length):
    letters = [
        (rng.randrange(num_gens), rng.choice((1, -1))) for _ in range(length)
    ]
    return Word(letters)


def random_commutator_presentation(rng, gens=3):
    """Presentation whose relators are products of commutators of short words."""
    names = tuple(f"g{i}" for i in range(gens))
    relators = []
    for _ in range(rng.randint(1, 2)):
        w = Word()
        for _ in range(rng.randint(1, 2)):
            u = random_word(rng, gens, rng.randint(1, 3))
            v = random_word(rng, gens, rng.randint(1, 3))
            w = w * (u * v * u.inverse() * v.inverse())
        relators.append(w)
    from jumploci import Presentation

    return Presentation(names, tuple(relators))


def random_poly(rng, num_vars, max_terms=4, exp_bound=3, coeff_bound=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(num_vars))
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            terms[exps] = terms.get(exps, 0) + c
    return LaurentPoly(num_vars, terms)


def random_unit_monomial(rng, num_vars, exp_bound=3):
    exps = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(num_vars))
    return LaurentPoly.monomial(num_vars, exps, rng.choice((1, -1)))


def random_threeform(rng, n, density=0.5, bound=3):
    from itertools import combinations

    coeffs = {}
    for triple in combinations(range(n), 3):
        if rng.random() < density:
            c = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
            if c:
                coeffs[triple] = c
    return ThreeForm(n, coeffs)


def random_vector(rng, n, bound=4):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def random_nonzero_vector(rng, n, bound=4):
    while True:
        v = random_vector(rng, n, bound)
        if any(v):
            return v


def random_invertible_matrix(rng, n, bound=2):
    from jumploci._linalg import int_det

    while True:
        t = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if int_det(t) != 0:
            return t


def random_unimodular_matrix(rng, n, steps=8):
    """Product of elementary integer operations; determinant +/-1."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and n > 1:
            c = rng.randint(-2, 2)
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif kind == 1 and n > 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m
