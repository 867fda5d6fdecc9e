"""Seifert invariants of Brieskorn singularity links and their jump loci.

For exponents (a_1, ..., a_n), all >= 2, the link of the corresponding
complete-intersection surface singularity is Seifert fibered over a curve of
computable genus, with exceptional orbit data and negative rational Euler
number given by closed formulas in lcms of the exponents.  The orbit list is
stored grouped with multiplicity.

The finite data |T| (torsion of H_1), ord(h) (order of the class of a generic
fiber) and alpha = |T| / ord(h) control the translated positive-dimensional
components of the first characteristic variety: alpha - 1 translated copies
of the identity torus for genus >= 1, plus the identity component itself when
the genus exceeds 1.

beta convention: the published sources pin (alpha_j, beta_j) only up to a
congruence that degenerates in print; this module uses the unique
0 < beta_j < alpha_j with beta_j * (l / a_j) = 1 mod alpha_j, where l is the
lcm of all exponents.  l / a_j is always invertible mod alpha_j, the worked
examples are reproduced, and the resulting data admits an integer
normalization obstruction (`integer_obstruction`), which would fail for the
other candidate conventions.  Everything downstream of the orbit data is
independent of the beta choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import gcd, lcm, prod

__all__ = [
    "BrieskornInput",
    "Orbit",
    "SeifertData",
    "TorsionData",
    "ComponentReport",
    "TangentConeReport",
    "IntegralityError",
    "brieskorn_seifert",
    "torsion_data",
    "v1_components",
    "is_one_formal_link",
    "tangent_cone_report",
    "integer_obstruction",
    "sweep",
]


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer failed to be one."""


@dataclass(frozen=True)
class BrieskornInput:
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if len(exps) < 3:
            raise ValueError("need at least three exponents")
        if any(a < 2 for a in exps):
            raise ValueError("all exponents must be at least 2")
        object.__setattr__(self, "exponents", exps)


@dataclass(frozen=True)
class Orbit:
    """Exceptional orbit class (alpha, beta), repeated `multiplicity` times."""

    alpha: int
    beta: int
    multiplicity: int

    def __post_init__(self):
        if self.alpha <= 1:
            raise ValueError("orbit alpha must exceed 1")
        if not 0 < self.beta < self.alpha:
            raise ValueError("orbit beta must satisfy 0 < beta < alpha")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError("orbit (alpha, beta) must be coprime")
        if self.multiplicity < 1:
            raise ValueError("orbit multiplicity must be positive")


@dataclass(frozen=True)
class SeifertData:
    orbits: tuple
    genus: int
    euler: Fraction

    def __post_init__(self):
        orbits = tuple(self.orbits)
        for o in orbits:
            if not isinstance(o, Orbit):
                raise TypeError("orbits must be Orbit instances")
        e = Fraction(self.euler)
        if e >= 0:
            raise ValueError("Euler number must be negative")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        object.__setattr__(self, "orbits", orbits)
        object.__setattr__(self, "euler", e)

    def with_betas(self, betas):
        """The same data with replaced beta residues (used to check inertness)."""
        orbits = tuple(
            Orbit(o.alpha, b, o.multiplicity) for o, b in zip(self.orbits, betas)
        )
        return SeifertData(orbits=orbits, genus=self.genus, euler=self.euler)


@dataclass(frozen=True)
class TorsionData:
    torsion_order: int
    fiber_class_order: int
    alpha: int


@dataclass(frozen=True)
class ComponentReport:
    positive_dim_count: int
    component_dim: int
    includes_identity_component: bool
    translated_count: int


@dataclass(frozen=True)
class TangentConeReport:
    genus: int
    germ_is_identity_only: bool
    germ_torus_dim: int
    r1_dim: int
    formula_holds: bool


def _as_fraction_int(x, what):
    f = Fraction(x)
    if f.denominator != 1:
        raise IntegralityError(f"{what} = {f} is not an integer")
    return f.numerator


def brieskorn_seifert(data):
    """Seifert invariants of the singularity link for the given exponents.

    With l = lcm(a_1..a_n) and l_j the lcm omitting a_j: orbit classes have
    alpha_j = l / l_j (dropped when alpha_j = 1) with multiplicity
    s_j = (a_1...a_n) / (a_j l_j); the base genus is
    (2 + (n-2) a/l - sum s_j) / 2 and the Euler number -a / l^2.
    """
    if not isinstance(data, BrieskornInput):
        data = BrieskornInput(tuple(data))
    exps = data.exponents
    n = len(exps)
    a = prod(exps)
    ell = lcm(*exps)
    orbits = []
    s_total = 0
    for j, aj in enumerate(exps):
        others = exps[:j] + exps[j + 1:]
        ell_j = lcm(*others)
        alpha_j = ell // ell_j
        s_j = _as_fraction_int(Fraction(a, aj * ell_j), f"multiplicity s_{j + 1}")
        s_total += s_j
        if alpha_j == 1:
            continue
        w_j = ell // aj
        if gcd(w_j, alpha_j) != 1:
            raise IntegralityError(
                f"l/a_{j + 1} = {w_j} is not invertible mod alpha_{j + 1} = {alpha_j}"
            )
        beta_j = pow(w_j, -1, alpha_j)
        orbits.append(Orbit(alpha=alpha_j, beta=beta_j, multiplicity=s_j))
    genus = _as_fraction_int(
        Fraction(2 + (n - 2) * Fraction(a, ell) - s_total, 2), "genus"
    )
    if genus < 0:
        raise IntegralityError(f"genus formula produced {genus} < 0")
    euler = -Fraction(a, ell * ell)
    orbits.sort(key=lambda o: (o.alpha, o.beta))
    return SeifertData(orbits=tuple(orbits), genus=genus, euler=euler)


def torsion_data(s):
    """|T|, ord(h) and alpha = |T|/ord(h) from the Seifert data.

    Products and lcms run over the orbit list expanded with multiplicity; the
    empty list contributes 1 to both.  All three values are asserted integral.
    """
    alpha_product = prod(o.alpha ** o.multiplicity for o in s.orbits)
    alpha_lcm = lcm(*(o.alpha for o in s.orbits)) if s.orbits else 1
    abs_e = -s.euler
    t_order = _as_fraction_int(alpha_product * abs_e, "|T|")
    h_order = _as_fraction_int(alpha_lcm * abs_e, "ord(h)")
    alpha = _as_fraction_int(Fraction(alpha_product, alpha_lcm), "alpha")
    if t_order != h_order * alpha:
        raise IntegralityError("|T| != ord(h) * alpha")
    return TorsionData(torsion_order=t_order, fiber_class_order=h_order, alpha=alpha)


def v1_components(s):
    """Positive-dimensional components of the first characteristic variety.

    Genus 0: none.  Genus 1: alpha - 1 translated copies of the identity
    torus, none through the identity.  Genus > 1: those translates plus the
    identity component itself.  `component_dim` is the dimension 2g of the
    identity torus, whether or not any component exists.
    """
    alpha = torsion_data(s).alpha
    g = s.genus
    if g == 0:
        return ComponentReport(0, 0, False, 0)
    if g == 1:
        count = alpha - 1
        return ComponentReport(count, 2, False, count)
    return ComponentReport(alpha, 2 * g, True, alpha - 1)


def is_one_formal_link(s):
    """Formality of the link's group: true exactly when the base genus is 0.

    The first Betti number of the link is twice the base genus; a positive
    Betti number obstructs 1-formality for these links, while a rational
    homology sphere link is formal outright.
    """
    return s.genus == 0


def tangent_cone_report(s):
    """Germ of the jump locus at the identity versus the resonance variety.

    The tangent-cone identity holds for genus 0 and for every genus > 1, and
    fails exactly at genus 1, where the germ is the single point but the
    resonance variety is a 2-plane.
    """
    g = s.genus
    if g <= 1:
        return TangentConeReport(
            genus=g,
            germ_is_identity_only=True,
            germ_torus_dim=0,
            r1_dim=2 * g,
            formula_holds=(g == 0),
        )
    return TangentConeReport(
        genus=g,
        germ_is_identity_only=False,
        germ_torus_dim=2 * g,
        r1_dim=2 * g,
        formula_holds=True,
    )


def integer_obstruction(s):
    """The integer b with e = -(b + sum s_j beta_j / alpha_j).

    Existence of an integer solution is a consistency requirement on
    normalized Seifert data; failure means the beta residues are not a valid
    normalization for this Euler number.
    """
    frac = sum(
        (Fraction(o.beta * o.multiplicity, o.alpha) for o in s.orbits), Fraction(0)
    )
    return _as_fraction_int(-s.euler - frac, "normalization obstruction b")


def sweep(max_exponent, n):
    """All Seifert/torsion/component data for exponent tuples in [2, max]^n.

    Tuples are enumerated in lexicographic order; output order is canonical.
    """
    if n < 3:
        raise ValueError("sweep needs n >= 3")
    out = []
    for exps in iter_product(range(2, max_exponent + 1), repeat=n):
        s = brieskorn_seifert(exps)
        t = torsion_data(s)
        out.append(
            {
                "exponents": exps,
                "seifert": s,
                "torsion": t,
                "components": v1_components(s),
                "one_formal": is_one_formal_link(s),
                "tangent_cone": tangent_cone_report(s),
            }
        )
    return out
