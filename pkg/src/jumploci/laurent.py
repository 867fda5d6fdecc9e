"""Exact arithmetic in the Laurent polynomial ring Z[t1^{±1}, ..., tn^{±1}].

`LaurentPoly` stores a canonical term map (exponent tuple -> nonzero integer
coefficient), so two values are equal exactly when their term maps agree.
The module supplies the project-wide unit normalization, gcds up to units,
and exact evaluation at finite-order characters with values in cyclotomic
fields (`CyclotomicElement`, reduced modulo the m-th cyclotomic polynomial
so zero-testing is honest field arithmetic).

Unit-normalization convention, fixed once for the whole project: the
canonical associate of p is u*p, where u is the unique +/- monomial making
the minimal exponent of every variable equal to 0 and the lexicographically
leading coefficient positive.  The theory only ever determines these
elements up to units, so all comparisons go through `normalize_unit`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

__all__ = [
    "LaurentPoly",
    "Character",
    "CyclotomicElement",
    "normalize_unit",
    "gcd_all",
    "evaluate",
    "try_divide",
    "divides",
    "parse_poly",
    "poly_to_string",
    "cyclotomic_polynomial",
    "euler_phi",
]


# ---------------------------------------------------------------------------
# raw term-dict helpers (exponent tuple -> int coefficient, no zero values)
# ---------------------------------------------------------------------------

def _dict_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _dict_neg(a):
    return {e: -c for e, c in a.items()}


def _dict_sub(a, b):
    return _dict_add(a, _dict_neg(b))


def _dict_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


class LaurentPoly:
    """Immutable multivariate Laurent polynomial with integer coefficients."""

    __slots__ = ("_num_vars", "_terms", "_hash")

    def __init__(self, num_vars, terms=None):
        num_vars = int(num_vars)
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clean = {}
        for exps, coeff in (terms or {}).items():
            e = tuple(int(x) for x in exps)
            if len(e) != num_vars:
                raise ValueError(
                    f"exponent vector {e} has length {len(e)}, expected {num_vars}"
                )
            value = int(coeff)
            if value != coeff:
                raise ValueError(f"coefficient {coeff!r} is not an integer")
            c = clean.get(e, 0) + value
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        object.__setattr__(self, "_num_vars", num_vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, num_vars):
        return cls(num_vars, {})

    @classmethod
    def one(cls, num_vars):
        return cls.constant(num_vars, 1)

    @classmethod
    def constant(cls, num_vars, c):
        return cls(num_vars, {(0,) * num_vars: int(c)})

    @classmethod
    def variable(cls, num_vars, i):
        """The generator t_{i+1} (0-based index i)."""
        if not 0 <= i < num_vars:
            raise ValueError(f"variable index {i} out of range for {num_vars} variables")
        e = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls(num_vars, {e: 1})

    @classmethod
    def monomial(cls, num_vars, exps, coeff=1):
        return cls(num_vars, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------------

    @property
    def num_vars(self):
        return self._num_vars

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_one(self):
        return self._terms == {(0,) * self._num_vars: 1}

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (zero poly -> zeros)."""
        if not self._terms:
            return (0,) * self._num_vars
        return tuple(min(e[i] for e in self._terms) for i in range(self._num_vars))

    def constant_value(self):
        """The value of a constant polynomial, as an int."""
        if self.is_zero:
            return 0
        if set(self._terms) == {(0,) * self._num_vars}:
            return self._terms[(0,) * self._num_vars]
        raise ValueError("polynomial is not constant")

    # -- ring structure ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other._num_vars != self._num_vars:
                raise ValueError(
                    f"variable-count mismatch: {self._num_vars} vs {other._num_vars}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self._num_vars, other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return LaurentPoly(self._num_vars, _dict_add(self._terms, q._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self._num_vars, _dict_neg(self._terms))

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return LaurentPoly(self._num_vars, _dict_sub(self._terms, q._terms))

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return LaurentPoly(self._num_vars, _dict_sub(q._terms, self._terms))

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return LaurentPoly(self._num_vars, _dict_mul(self._terms, q._terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative powers are only defined for unit monomials")
        result = LaurentPoly.one(self._num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps):
        """Multiply by the monomial with the given exponent vector."""
        e0 = tuple(exps)
        if len(e0) != self._num_vars:
            raise ValueError("exponent vector length mismatch")
        return LaurentPoly(
            self._num_vars,
            {tuple(a + b for a, b in zip(e, e0)): c for e, c in self._terms.items()},
        )

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self._num_vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._num_vars == other._num_vars and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self._num_vars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return poly_to_string(self)

    def __repr__(self):
        return f"LaurentPoly({self._num_vars}, {poly_to_string(self)!r})"


# ---------------------------------------------------------------------------
# unit normalization
# ---------------------------------------------------------------------------

def normalize_unit(p):
    """Canonical associate of p: minimal exponents 0, lex-leading coefficient > 0.

    Idempotent, and constant on classes p ~ (+/- monomial) * p.  Maps 0 to 0.
    """
    if p.is_zero:
        return p
    mins = p.min_exponents()
    shifted = {
        tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()
    }
    lead = max(shifted)
    if shifted[lead] < 0:
        shifted = {e: -c for e, c in shifted.items()}
    return LaurentPoly(p.num_vars, shifted)


# ---------------------------------------------------------------------------
# exact division and gcd
# ---------------------------------------------------------------------------

def _dict_divexact(a, b):
    """Exact division of term dicts (raises ArithmeticError if b does not divide a)."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = {}
    r = dict(a)
    blead = max(b)
    bc = b[blead]
    while r:
        rlead = max(r)
        rc = r[rlead]
        e = tuple(x - y for x, y in zip(rlead, blead))
        if any(x < 0 for x in e) or rc % bc:
            raise ArithmeticError("not exactly divisible")
        m = {e: rc // bc}
        q = _dict_add(q, m)
        r = _dict_sub(r, _dict_mul(m, b))
    return q


def _split_main(a):
    """Group an n-variable term dict by the exponent of the last variable."""
    out = {}
    for e, c in a.items():
        out.setdefault(e[-1], {})[e[:-1]] = c
    return out


def _main_deg(a):
    return max(e[-1] for e in a)


def _main_lc(a):
    """Leading coefficient w.r.t. the last variable, as a full-width dict."""
    d = _main_deg(a)
    return {e[:-1] + (0,): c for e, c in a.items() if e[-1] == d}


def _shift_main(a, k):
    return {e[:-1] + (e[-1] + k,): c for e, c in a.items()}


def _prem(f, g):
    """Pseudo-remainder of f by g w.r.t. the last variable."""
    dg = _main_deg(g)
    glc = _main_lc(g)
    while f and _main_deg(f) >= dg:
        df = _main_deg(f)
        flc = _main_lc(f)
        f = _dict_sub(_dict_mul(glc, f), _dict_mul(_shift_main(flc, df - dg), g))
    return f


def _content_and_pp(a, n):
    """Content (w.r.t. the last variable) and primitive part of a term dict."""
    parts = _split_main(a)
    cont = {}
    for coeff in parts.values():
        cont = _poly_gcd(cont, coeff, n - 1)
    cont_full = {e + (0,): c for e, c in cont.items()}
    return cont_full, _dict_divexact(a, cont_full)


def _poly_gcd(a, b, n):
    """Gcd of term dicts with non-negative exponents over Z, up to sign.

    Primitive pseudo-remainder sequences with content/primitive-part recursion
    on the variable count; the integer base case keeps integer content.
    """
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    if n == 0:
        return {(): math.gcd(a[()], b[()])}
    ca, pa = _content_and_pp(a, n)
    cb, pb = _content_and_pp(b, n)
    cg_low = _poly_gcd(
        {e[:-1]: c for e, c in ca.items()},
        {e[:-1]: c for e, c in cb.items()},
        n - 1,
    )
    cg = {e + (0,): c for e, c in cg_low.items()}
    f, g = (pa, pb) if _main_deg(pa) >= _main_deg(pb) else (pb, pa)
    while g:
        r = _prem(f, g)
        if r:
            _, r = _content_and_pp(r, n)
        f, g = g, r
    return _dict_mul(cg, f)


def gcd_all(ps):
    """Greatest common divisor in Z[t1^{±1},...,tn^{±1}], unit-normalized.

    The integer content is retained (gcd(2(t-1), 4(t-1)^2) = 2(t-1)); the
    gcd of a list of zeros is 0.
    """
    ps = list(ps)
    if not ps:
        raise ValueError("gcd_all needs at least one polynomial")
    n = ps[0].num_vars
    g = {}
    for p in ps:
        if p.num_vars != n:
            raise ValueError("variable-count mismatch in gcd_all")
        if p.is_zero:
            continue
        mins = p.min_exponents()
        shifted = {
            tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()
        }
        g = _poly_gcd(g, shifted, n)
    return normalize_unit(LaurentPoly(n, g))


def try_divide(p, d):
    """Exact quotient p/d in the Laurent ring, or None when d does not divide p."""
    if d.num_vars != p.num_vars:
        raise ValueError("variable-count mismatch")
    if d.is_zero:
        return None if not p.is_zero else LaurentPoly.zero(p.num_vars)
    if p.is_zero:
        return p
    mp, md = p.min_exponents(), d.min_exponents()
    sp = {tuple(a - b for a, b in zip(e, mp)): c for e, c in p.terms.items()}
    sd = {tuple(a - b for a, b in zip(e, md)): c for e, c in d.terms.items()}
    try:
        q = _dict_divexact(sp, sd)
    except ArithmeticError:
        return None
    quotient = LaurentPoly(p.num_vars, q).shift(
        tuple(a - b for a, b in zip(mp, md))
    )
    return quotient


def divides(d, p):
    """True when d divides p in the Laurent ring."""
    return try_divide(p, d) is not None


# ---------------------------------------------------------------------------
# cyclotomic fields and characters
# ---------------------------------------------------------------------------

def _int_poly_divexact(a, b):
    """Exact division of integer coefficient lists (ascending powers)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c % b[-1]:
            raise ArithmeticError("not exactly divisible")
        q[i] = c // b[-1]
        for j, bc in enumerate(b):
            a[i + j] -= q[i] * bc
    if any(a):
        raise ArithmeticError("not exactly divisible")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of the m-th cyclotomic polynomial, ascending, monic."""
    if m < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(m):
    return len(cyclotomic_polynomial(m)) - 1


@dataclass(frozen=True)
class Character:
    """Finite-order character on the torus (C*)^n: t_i -> zeta_m^{exponents[i]}."""

    order: int
    exponents: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("character order must be a positive integer")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @property
    def is_identity(self):
        return all(e % self.order == 0 for e in self.exponents)

    def __str__(self):
        return f"{self.order}:{','.join(str(e) for e in self.exponents)}"


class CyclotomicElement:
    """Element of Q(zeta_m), represented modulo the m-th cyclotomic polynomial."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = _reduce_mod_cyclotomic(order, cs)
        cs += [Fraction(0)] * (phi - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def zero(cls, order):
        return cls(order, [])

    @classmethod
    def one(cls, order):
        return cls(order, [1])

    @classmethod
    def from_int(cls, order, a):
        return cls(order, [a])

    @classmethod
    def root_power(cls, order, k):
        """zeta_m^k as a field element."""
        k %= order
        coeffs = [Fraction(0)] * k + [Fraction(1)]
        return cls(order, coeffs)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def _check(self, other):
        if isinstance(other, int):
            other = CyclotomicElement.from_int(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return None
        if other.order != self.order:
            raise ValueError("cyclotomic orders differ")
        return other

    def __add__(self, other):
        q = self._check(other)
        if q is None:
            return NotImplemented
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, q.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        q = self._check(other)
        if q is None:
            return NotImplemented
        return CyclotomicElement(self.order, [a - b for a, b in zip(self.coeffs, q.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        q = self._check(other)
        if q is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(q.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero:
            raise ZeroDivisionError("cyclotomic element is zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 is a nonzero constant multiple of gcd = 1
        c = next(c for c in reversed(r0) if c != 0)
        inv = [x / c for x in s0]
        return CyclotomicElement(self.order, inv)

    def __truediv__(self, other):
        q = self._check(other)
        if q is None:
            return NotImplemented
        return self * q.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicElement.from_int(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CyclotomicElement(order={self.order}, coeffs={list(self.coeffs)})"


def _frac_poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _frac_poly_trim(out)


def _frac_poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _frac_poly_trim(out)


def _frac_poly_divmod(a, b):
    a = _frac_poly_trim(list(a))
    b = _frac_poly_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for j, bc in enumerate(b):
            a[d + j] -= c * bc
        _frac_poly_trim(a)
        if not a:
            break
    return q, a


def _reduce_mod_cyclotomic(order, coeffs):
    phi = [Fraction(c) for c in cyclotomic_polynomial(order)]
    _, r = _frac_poly_divmod(coeffs, phi)
    return r


def evaluate(p, chi):
    """Exact image of p under t_i -> zeta_m^{chi.exponents[i]}.

    The result lives in Q(zeta_m) with m = chi.order, reduced modulo the m-th
    cyclotomic polynomial, so `result.is_zero` is an exact vanishing test.
    """
    m = chi.order
    if m < 1:
        raise ValueError("character order must be positive")
    if len(chi.exponents) != p.num_vars:
        raise ValueError(
            f"character has {len(chi.exponents)} exponents, polynomial has "
            f"{p.num_vars} variables"
        )
    acc = [0] * m
    for exps, c in p.terms.items():
        k = sum(e * x for e, x in zip(exps, chi.exponents)) % m
        acc[k] += c
    return CyclotomicElement(m, acc)


# ---------------------------------------------------------------------------
# textual form: sum of c*t1^a1*...*tn^an terms (exact round-trip)
# ---------------------------------------------------------------------------

def _var_name(num_vars, i):
    return "t" if num_vars == 1 else f"t{i + 1}"


def poly_to_string(p):
    if p.is_zero:
        return "0"
    pieces = []
    for exps in sorted(p.terms, reverse=True):
        c = p.terms[exps]
        factors = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            name = _var_name(p.num_vars, i)
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


class PolyParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_poly(text, num_vars):
    """Parse the textual polynomial form; inverse of `poly_to_string`."""
    pos = 0
    n = len(text)
    terms = {}

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_int():
        nonlocal pos
        start = pos
        if pos < n and text[pos] == "-":
            pos += 1
        if pos >= n or not text[pos].isdigit():
            raise PolyParseError("expected integer", start)
        while pos < n and text[pos].isdigit():
            pos += 1
        return int(text[start:pos])

    def parse_var():
        nonlocal pos
        start = pos
        pos += 1  # consumes 't'
        digits = ""
        while pos < n and text[pos].isdigit():
            digits += text[pos]
            pos += 1
        if digits:
            idx = int(digits) - 1
        else:
            if num_vars != 1:
                raise PolyParseError("bare variable 't' needs a subscript", start)
            idx = 0
        if not 0 <= idx < num_vars:
            raise PolyParseError(f"variable index out of range for {num_vars} variables", start)
        return idx

    first = True
    while True:
        skip_ws()
        if pos >= n:
            if first:
                raise PolyParseError("empty polynomial", pos)
            break
        sign = 1
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = -1
            pos += 1
            skip_ws()
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", pos)
        first = False
        coeff = 1
        exps = [0] * num_vars
        saw_factor = False
        while True:
            skip_ws()
            if pos < n and text[pos].isdigit():
                num_start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                coeff *= int(text[num_start:pos])
                saw_factor = True
            elif pos < n and text[pos] == "t":
                idx = parse_var()
                e = 1
                skip_ws()
                if pos < n and text[pos] == "^":
                    pos += 1
                    skip_ws()
                    e = parse_int()
                exps[idx] += e
                saw_factor = True
            else:
                raise PolyParseError("expected coefficient or variable", pos)
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                continue
            break
        if not saw_factor:
            raise PolyParseError("empty term", pos)
        key = tuple(exps)
        c = terms.get(key, 0) + sign * coeff
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    return LaurentPoly(num_vars, terms)
