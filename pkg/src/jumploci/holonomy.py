"""Graded ranks of holonomy Lie algebras presented by quadratic relations.

The input is the number of degree-1 generators together with relation vectors
in wedge-square coordinates (basis e_i ^ e_j, i < j, ordered lexicographically).
For the cup form of a closed oriented 3-manifold the relation space is spanned
by the contractions of the form against the coordinate functionals; this
convention is pinned by the surface case, where the single relation restricted
to the surface directions is the symplectic class sum [x_1,y_1]+...+[x_g,y_g].

Ranks are computed per degree inside the tensor algebra: Lyndon words give a
basis of the free Lie algebra (a Hall family), the relation ideal in degree d
is spanned by (d-2)-fold left brackets of generators against the relations,
and the quotient dimension is an exact rank computation over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

__all__ = [
    "QuadraticData",
    "GradedRanks",
    "wedge_basis",
    "holonomy_from_threeform",
    "lie_ranks",
    "lyndon_words",
    "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 6


def wedge_basis(n):
    """Index pairs (i, j), i < j, in the fixed lexicographic order."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class QuadraticData:
    """Degree-1 generator count plus relation vectors in wedge coordinates."""

    n: int
    relations: tuple

    def __post_init__(self):
        m = self.n * (self.n - 1) // 2
        rels = tuple(tuple(Fraction(c) for c in r) for r in self.relations)
        for r in rels:
            if len(r) != m:
                raise ValueError(f"relation vector must have length {m}")
        object.__setattr__(self, "relations", rels)


@dataclass(frozen=True)
class GradedRanks:
    """ranks[i] is the dimension in degree i + 1; degree-1 rank is n."""

    ranks: tuple

    def of_degree(self, d):
        return self.ranks[d - 1]


def holonomy_from_threeform(eta):
    """Quadratic relation data of the holonomy Lie algebra of a 3-manifold form.

    The relation span is the image of the duality pairing inside the wedge
    square: for each coordinate index k, the contraction with coefficients
    eta(e_i, e_j, e_k) on the pair (i, j).  A reduced echelon basis is
    returned, so equal spans give equal data.
    """
    n = eta.n
    pairs = wedge_basis(n)
    rows = []
    for k in range(n):
        row = [eta.value(i, j, k) for i, j in pairs]
        if any(row):
            rows.append(row)
    reduced = _echelon(rows)
    return QuadraticData(n=n, relations=tuple(tuple(r) for r in reduced))


def _echelon(rows):
    """Reduced echelon form over Q, dropping zero rows (dense lists)."""
    work = [list(map(Fraction, r)) for r in rows]
    out = []
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pivot = next((i for i, r in enumerate(work) if r[col]), None)
        if pivot is None:
            col += 1
            continue
        row = work.pop(pivot)
        inv = row[col]
        row = [x / inv for x in row]
        for other in out + work:
            if other[col]:
                c = other[col]
                for j in range(col, ncols):
                    other[j] -= c * row[j]
        out.append(row)
        col += 1
    return out


# ---------------------------------------------------------------------------
# Lyndon (Hall) basis of the free Lie algebra
# ---------------------------------------------------------------------------

def lyndon_words(n, d):
    """All Lyndon words of length d over the alphabet 0..n-1 (Duval's algorithm)."""
    if d < 1 or n < 1:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            out.append(tuple(w))
        while len(w) < d:
            w.append(w[-m])
        while w and w[-1] == n - 1:
            w.pop()
    return sorted(out)


def _standard_factorization(word):
    """Split a Lyndon word uv with v its longest proper Lyndon suffix."""
    best = None
    for i in range(1, len(word)):
        suffix = word[i:]
        if _is_lyndon(suffix) and (best is None or i < best):
            best = i
    return word[:best], word[best:]


def _is_lyndon(word):
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def _bracket_tensor(word, cache):
    """Expansion of the standard bracketing of a Lyndon word in the tensor algebra."""
    if word in cache:
        return cache[word]
    if len(word) == 1:
        val = {word: 1}
    else:
        u, v = _standard_factorization(word)
        val = _tensor_bracket(_bracket_tensor(u, cache), _bracket_tensor(v, cache))
    cache[word] = val
    return val


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


def _ad_generator(i, vec):
    """[e_i, v] in tensor coordinates."""
    out = {}
    for w, c in vec.items():
        for key, val in (((i,) + w, c), (w + (i,), -c)):
            s = out.get(key, 0) + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _sparse_echelon_insert(basis, vec):
    """Reduce vec against a reduced sparse basis; insert and return its pivot.

    The basis maps pivot key -> row dict, kept fully reduced (no row contains
    another row's pivot), so a single pass decides dependence.
    """
    vec = dict(vec)
    for pivot, row in basis.items():
        c = vec.get(pivot)
        if c:
            factor = c / row[pivot]
            for k, v in row.items():
                s = vec.get(k, 0) - factor * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
    if not vec:
        return None
    pivot = min(vec)
    inv = vec[pivot]
    norm = {k: v / inv for k, v in vec.items()}
    for p2, row in list(basis.items()):
        c = row.get(pivot)
        if c:
            updated = dict(row)
            for k, v in norm.items():
                s = updated.get(k, 0) - c * v
                if s:
                    updated[k] = s
                else:
                    updated.pop(k, None)
            basis[p2] = updated
    basis[pivot] = norm
    return pivot


def lie_ranks(q, up_to, degree_cap=DEFAULT_DEGREE_CAP):
    """Graded dimensions of Lie(n)/ideal(relations) for degrees 1..up_to.

    The per-degree ideal is built iteratively: degree 2 is the relation span,
    and each next degree is spanned by brackets of the generators against a
    basis of the previous ideal piece.  Exact arithmetic throughout; degrees
    beyond `degree_cap` are refused because free Lie dimensions grow quickly.
    """
    if up_to < 1:
        raise ValueError("up_to must be at least 1")
    if up_to > degree_cap:
        raise ValueError(f"degree {up_to} exceeds the cap {degree_cap}")
    n = q.n
    ranks = [n]
    pairs = wedge_basis(n)
    ideal_basis = {}
    ideal_rows = []
    for r in q.relations:
        vec = {}
        for (i, j), c in zip(pairs, r):
            if c:
                vec[(i, j)] = vec.get((i, j), 0) + c
                vec[(j, i)] = vec.get((j, i), 0) - c
        vec = {k: v for k, v in vec.items() if v}
        if vec and _sparse_echelon_insert(ideal_basis, vec) is not None:
            ideal_rows.append(vec)
    for d in range(2, up_to + 1):
        lie_dim = len(lyndon_words(n, d))
        if d > 2:
            new_basis = {}
            new_rows = []
            for vec in ideal_rows:
                for i in range(n):
                    cand = _ad_generator(i, vec)
                    if cand and _sparse_echelon_insert(new_basis, cand) is not None:
                        new_rows.append(cand)
            ideal_basis, ideal_rows = new_basis, new_rows
        ranks.append(lie_dim - len(ideal_basis))
    return GradedRanks(ranks=tuple(ranks))
