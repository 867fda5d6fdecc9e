"""Finite group presentations, free differential calculus, and abelianization.

A `Word` is a freely reduced word in the free group on the presentation's
generators; a `Presentation` is a list of generator names plus relator words.
The module parses the textual grammar

    < g1, g2, ... | w1, w2, ... >

where words juxtapose ``g``, ``g^-1``, ``g^k`` and nestable commutator sugar
``[u, v]`` = u v u^-1 v^-1.  It also computes Smith normal forms of integer
matrices, the abelianization data (Betti number, invariant factors, generator
images), and free derivatives pushed through the maximal torsion-free abelian
quotient, landing in the Laurent ring on b1 variables.

Relators are not cyclically reduced automatically; derivatives of cyclic
permutations of a relator differ by unit monomials, which the project-wide
unit normalization absorbs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly

__all__ = [
    "Word",
    "Presentation",
    "Abelianization",
    "GeneratorImage",
    "SmithNormalForm",
    "PresentationParseError",
    "free_reduce",
    "parse_presentation",
    "parse_word",
    "format_word",
    "format_presentation",
    "presentation_from_json",
    "smith_normal_form",
    "abelianization",
    "fox_derivative",
    "word_image",
]


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

class Word:
    """Freely reduced word: a sequence of (generator index, sign) letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        object.__setattr__(self, "letters", _reduce_letters(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def generator(cls, i, sign=1):
        return cls(((i, sign),))

    @property
    def is_empty(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, k):
        k = int(k)
        base = self if k >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def cyclic_permutation(self, k):
        """The word rotated left by k letters (same conjugacy class)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({self.letters!r})"


def _reduce_letters(letters):
    stack = []
    for g, s in letters:
        g = int(g)
        s = int(s)
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


def free_reduce(word):
    """Freely reduce a Word (idempotent; Word construction already reduces)."""
    return Word(word.letters)


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()


# ---------------------------------------------------------------------------
# presentations and parsing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    generator_names: tuple
    relators: tuple

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        rels = tuple(self.relators)
        for r in rels:
            for g, _ in r.letters:
                if not 0 <= g < len(names):
                    raise ValueError(f"generator index {g} out of range")
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", rels)

    @property
    def num_generators(self):
        return len(self.generator_names)

    @property
    def num_relators(self):
        return len(self.relators)


class PresentationParseError(ValueError):
    """Parse failure, carrying the byte offset of the offending token."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch, what=None):
        self.skip_ws()
        if self.peek() != ch:
            raise PresentationParseError(what or f"expected '{ch}'", self.pos)
        self.pos += 1

    def fail(self, message, offset=None):
        raise PresentationParseError(message, self.pos if offset is None else offset)


def _is_ident_start(ch):
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch):
    return ch.isalnum() or ch == "_"


def _parse_ident(cur):
    cur.skip_ws()
    start = cur.pos
    if not cur.peek() or not _is_ident_start(cur.peek()):
        cur.fail("expected identifier")
    while cur.pos < len(cur.text) and _is_ident_char(cur.text[cur.pos]):
        cur.pos += 1
    return cur.text[start:cur.pos], start


def _parse_exponent(cur):
    # called with '^' already consumed; cur.pos sits after it
    cur.skip_ws()
    start = cur.pos
    sign = 1
    if cur.peek() == "-":
        sign = -1
        cur.pos += 1
    if not cur.peek().isdigit():
        cur.fail("malformed exponent", start)
    digits = ""
    while cur.pos < len(cur.text) and cur.text[cur.pos].isdigit():
        digits += cur.text[cur.pos]
        cur.pos += 1
    return sign * int(digits)


def _parse_word(cur, gen_index, stop_chars):
    word = Word()
    while True:
        cur.skip_ws()
        ch = cur.peek()
        if ch == "" or ch in stop_chars:
            return word
        if ch == "1":
            cur.pos += 1
            atom = Word()
        elif ch == "[":
            open_pos = cur.pos
            cur.pos += 1
            u = _parse_word(cur, gen_index, ",]>")
            cur.skip_ws()
            if cur.peek() != ",":
                cur.fail("unbalanced brackets: expected ',' in commutator", open_pos)
            cur.pos += 1
            v = _parse_word(cur, gen_index, ",]>")
            cur.skip_ws()
            if cur.peek() != "]":
                cur.fail("unbalanced brackets: expected ']'", open_pos)
            cur.pos += 1
            atom = commutator(u, v)
        elif _is_ident_start(ch):
            name, start = _parse_ident(cur)
            if name not in gen_index:
                cur.fail(f"unknown generator name '{name}'", start)
            atom = Word.generator(gen_index[name])
        elif ch == "]":
            cur.fail("unbalanced brackets: unexpected ']'")
        else:
            cur.fail(f"unexpected character {ch!r} in word")
        cur.skip_ws()
        if cur.peek() == "^":
            cur.pos += 1
            k = _parse_exponent(cur)
            atom = atom ** k
        word = word * atom


def parse_word(text, generator_names):
    """Parse a single word over the given generator names."""
    gen_index = {name: i for i, name in enumerate(generator_names)}
    cur = _Cursor(text)
    w = _parse_word(cur, gen_index, "")
    cur.skip_ws()
    if cur.pos != len(cur.text):
        cur.fail("trailing input after word")
    return w


def parse_presentation(text):
    """Parse `< g1, g2, ... | w1, w2, ... >` into a Presentation."""
    cur = _Cursor(text)
    cur.expect("<", "expected '<' to open presentation")
    names = []
    cur.skip_ws()
    if cur.peek() != "|":
        while True:
            name, start = _parse_ident(cur)
            if name in names:
                cur.fail(f"duplicate generator name '{name}'", start)
            names.append(name)
            cur.skip_ws()
            if cur.peek() == ",":
                cur.pos += 1
                continue
            break
    cur.expect("|", "expected '|' between generators and relators")
    gen_index = {name: i for i, name in enumerate(names)}
    relators = []
    while True:
        cur.skip_ws()
        if cur.peek() == ">":
            cur.pos += 1
            break
        if cur.peek() == "":
            cur.fail("expected '>' to close presentation")
        w = _parse_word(cur, gen_index, ",>")
        relators.append(w)
        cur.skip_ws()
        if cur.peek() == ",":
            cur.pos += 1
    cur.skip_ws()
    if cur.pos != len(cur.text):
        cur.fail("trailing input after '>'")
    return Presentation(tuple(names), tuple(relators))


def format_word(word, generator_names):
    if word.is_empty:
        return "1"
    parts = []
    for g, s in word.letters:
        name = generator_names[g]
        parts.append(name if s == 1 else f"{name}^-1")
    return " ".join(parts)


def format_presentation(p):
    gens = ", ".join(p.generator_names)
    rels = ", ".join(format_word(r, p.generator_names) for r in p.relators)
    return f"<{gens} | {rels}>"


def presentation_from_json(obj):
    """Build a Presentation from {"generators": [...], "relators": [...]}."""
    try:
        names = tuple(obj["generators"])
        rel_texts = list(obj["relators"])
    except (KeyError, TypeError) as exc:
        raise ValueError("presentation JSON needs 'generators' and 'relators'") from exc
    relators = tuple(parse_word(text, names) for text in rel_texts)
    return Presentation(names, relators)


# ---------------------------------------------------------------------------
# Smith normal form over Z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithNormalForm:
    """U*M*V = D with U, V unimodular and D = diag(d1 | d2 | ...)."""

    diagonal: tuple
    left: tuple
    right: tuple
    shape: tuple

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(matrix):
    rows = [list(map(int, r)) for r in matrix]
    r = len(rows)
    g = len(rows[0]) if r else 0
    if any(len(row) != g for row in rows):
        raise ValueError("ragged matrix")
    a = [row[:] for row in rows]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(g)] for i in range(g)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(r, g):
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, g):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, g):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # force the pivot to divide every remaining entry
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, g):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    diag = tuple(a[i][i] for i in range(min(r, g)))
    return SmithNormalForm(
        diagonal=diag,
        left=tuple(tuple(row) for row in u),
        right=tuple(tuple(row) for row in v),
        shape=(r, g),
    )


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorImage:
    free: tuple
    torsion: tuple


@dataclass(frozen=True)
class Abelianization:
    """H1 data: Betti number, invariant factors, and generator images.

    `gen_images[j].free` is the image of generator j in the maximal
    torsion-free abelian quotient Z^{b1}; torsion coordinates are recorded
    but the Laurent-ring machinery only uses the free part.
    """

    b1: int
    torsion: tuple
    gen_images: tuple

    @property
    def num_generators(self):
        return len(self.gen_images)


def exponent_matrix(p):
    rows = []
    for rel in p.relators:
        row = [0] * p.num_generators
        for g, s in rel.letters:
            row[g] += s
        rows.append(row)
    return rows


def abelianization(p):
    g = p.num_generators
    rows = exponent_matrix(p)
    if not rows:
        rows = []
    snf = smith_normal_form(rows) if rows else SmithNormalForm((), (), tuple(
        tuple(int(i == j) for j in range(g)) for i in range(g)
    ), (0, g))
    diag = snf.diagonal
    rank = sum(1 for d in diag if d != 0)
    torsion_info = [(i, diag[i]) for i in range(rank) if diag[i] > 1]
    free_indices = list(range(rank, g))
    b1 = g - rank
    images = []
    v = snf.right
    for j in range(g):
        row = v[j]
        free = tuple(row[i] for i in free_indices)
        tors = tuple(row[i] % d for i, d in torsion_info)
        images.append(GeneratorImage(free=free, torsion=tors))
    return Abelianization(
        b1=b1,
        torsion=tuple(d for _, d in torsion_info),
        gen_images=tuple(images),
    )


def word_image(word, ab):
    """Image of a word in Z^{b1} (the torsion-free abelian quotient)."""
    out = [0] * ab.b1
    for g, s in word.letters:
        img = ab.gen_images[g].free
        for i, x in enumerate(img):
            out[i] += s * x
    return tuple(out)


# ---------------------------------------------------------------------------
# Fox derivatives, fused with the abelianization
# ---------------------------------------------------------------------------

def fox_derivative(word, i, ab):
    """Free derivative d(word)/d(x_i), pushed into the Laurent ring on b1 variables.

    Product rule d(uv) = du + u dv with d(x_i) = 1 and d(x_i^-1) = -x_i^-1;
    group-ring elements are abelianized on the fly (torsion discarded), which
    avoids materializing exponentially long free group-ring elements.
    """
    if not 0 <= i < ab.num_generators:
        raise IndexError(f"generator index {i} out of range")
    b1 = ab.b1
    prefix = [0] * b1
    terms = {}

    def bump(sign):
        key = tuple(prefix)
        c = terms.get(key, 0) + sign
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)

    for g, s in word.letters:
        img = ab.gen_images[g].free
        if s == 1:
            if g == i:
                bump(1)
            for k, x in enumerate(img):
                prefix[k] += x
        else:
            for k, x in enumerate(img):
                prefix[k] -= x
            if g == i:
                bump(-1)
    return LaurentPoly(b1, terms)
