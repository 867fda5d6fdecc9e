"""Seifert invariants and jump loci of Brieskorn singularity links.

For exponents (a_1, ..., a_n) the link of the associated complete-intersection
singularity is Seifert fibered; closed formulas give its orbit data, base
genus, and Euler number, and from those the torsion of H_1, the number of
translated positive-dimensional components of the first characteristic
variety, the formality of the group, and the tangent-cone verdict.
"""

from jumploci import (
    brieskorn_seifert,
    integer_obstruction,
    is_one_formal_link,
    tangent_cone_report,
    torsion_data,
    v1_components,
)

EXAMPLES = [
    (2, 3, 5),    # Poincare sphere
    (2, 3, 6),    # Heisenberg nilmanifold
    (2, 4, 4),
    (3, 3, 3),
    (3, 3, 6),    # three translated components
    (2, 3, 4),    # E6 singularity link
    (2, 3, 7),
    (4, 5, 6),
    (6, 10, 15),  # circle bundle over a genus-11 curve
    (2, 2, 2, 3),
]

for exps in EXAMPLES:
    s = brieskorn_seifert(exps)
    t = torsion_data(s)
    c = v1_components(s)
    tc = tangent_cone_report(s)
    orbit_str = ", ".join(
        f"({o.alpha},{o.beta})x{o.multiplicity}" for o in s.orbits
    ) or "none"
    print(f"Sigma{exps}:")
    print(f"  orbits {orbit_str}; genus {s.genus}; Euler number {s.euler}"
          f" (normalization obstruction b = {integer_obstruction(s)})")
    print(f"  |T| = {t.torsion_order}, ord(h) = {t.fiber_class_order}, "
          f"alpha = {t.alpha}")
    if c.positive_dim_count:
        through = "including" if c.includes_identity_component else "none through"
        print(f"  V_1 has {c.positive_dim_count} positive-dimensional components "
              f"of dim {c.component_dim} ({through} the identity)")
    else:
        print("  V_1 has no positive-dimensional components")
    print(f"  1-formal: {is_one_formal_link(s)}; "
          f"tangent-cone formula holds: {tc.formula_holds}")
    print()

print("The tangent-cone formula fails exactly at base genus 1, where the germ")
print("at the identity is a point but the resonance variety is a 2-plane.")
