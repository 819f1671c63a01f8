"""Exact polynomial arithmetic in k[x, y, z].

Monomials are exponent triples; a polynomial is a dict mapping monomials to
nonzero field elements (the zero polynomial is the empty dict).  Three
monomial orders with x > y > z are supported: grevlex (default), grlex, lex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonHomogeneousError

VARS = ("x", "y", "z")
ORDER_NAMES = ("grevlex", "grlex", "lex")

Monomial = tuple  # (a, b, c) exponents of x, y, z


def mono_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """The quotient a / b; b must divide a."""
    if not mono_divides(b, a):
        raise ValueError(f"{b} does not divide {a}")
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def _key_grevlex(m: Monomial):
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def _key_grlex(m: Monomial):
    return (m[0] + m[1] + m[2], m)


def _key_lex(m: Monomial):
    return m


_KEYS = {"grevlex": _key_grevlex, "grlex": _key_grlex, "lex": _key_lex}


def mono_key(order: str = "grevlex"):
    """Sort key under which larger monomials compare larger."""
    try:
        return _KEYS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDER_NAMES}")


def mono_cmp(a: Monomial, b: Monomial, order: str = "grevlex") -> int:
    """-1, 0 or 1 as a <, =, > b in the given order."""
    ka, kb = mono_key(order)(a), mono_key(order)(b)
    return (ka > kb) - (ka < kb)


def monomials_of_degree(d: int) -> list:
    """All degree-d monomials, grevlex descending (deterministic basis order)."""
    out = [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]
    out.sort(key=_key_grevlex, reverse=True)
    return out


def mono_str(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable-by-convention polynomial over a fixed coefficient field."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not field.is_zero(coeff):
                    clean[mono] = coeff
        self.field = field
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field)

    @classmethod
    def constant(cls, field, value) -> "Polynomial":
        return cls(field, {(0, 0, 0): field.of(value)})

    @classmethod
    def monomial(cls, field, mono: Monomial, coeff=1) -> "Polynomial":
        if len(mono) != 3 or any(e < 0 for e in mono):
            raise ValueError(f"bad monomial {mono}")
        return cls(field, {tuple(mono): field.of(coeff)})

    @classmethod
    def variable(cls, field, name: str) -> "Polynomial":
        if name not in VARS:
            raise ValueError(f"unknown variable {name!r}; variables are {VARS}")
        mono = tuple(1 if v == name else 0 for v in VARS)
        return cls(field, {mono: field.one})

    # ---- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {mono_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict:
        """Map degree -> homogeneous part."""
        parts = {}
        for mono, coeff in self.terms.items():
            parts.setdefault(mono_degree(mono), {})[mono] = coeff
        return {d: Polynomial(self.field, t) for d, t in sorted(parts.items())}

    def sorted_terms(self, order: str = "grevlex") -> list:
        """(monomial, coefficient) pairs, strictly descending in the order."""
        key = mono_key(order)
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key, reverse=True)]

    def leading_monomial(self, order: str = "grevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=mono_key(order))

    def leading_coeff(self, order: str = "grevlex"):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "grevlex") -> "Polynomial":
        if not self.terms:
            return self
        inv = self.field.inv(self.leading_coeff(order))
        f = self.field
        return Polynomial(f, {m: f.mul(c, inv) for m, c in self.terms.items()})

    # ---- arithmetic ----------------------------------------------------

    def _check_field(self, other: "Polynomial"):
        if self.field != other.field:
            raise ValueError("mismatched coefficient fields")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_field(other)
        f = self.field
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = f.add(out.get(mono, f.zero), coeff)
            if f.is_zero(s):
                out.pop(mono, None)
            else:
                out[mono] = s
        p = Polynomial.__new__(Polynomial)
        p.field, p.terms = f, out
        return p

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        f = self.field
        p = Polynomial.__new__(Polynomial)
        p.field = f
        p.terms = {m: f.neg(c) for m, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_field(other)
        f = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                s = f.add(out.get(mono, f.zero), f.mul(c1, c2))
                if f.is_zero(s):
                    out.pop(mono, None)
                else:
                    out[mono] = s
        p = Polynomial.__new__(Polynomial)
        p.field, p.terms = f, out
        return p

    __rmul__ = __mul__

    def scale(self, value) -> "Polynomial":
        f = self.field
        c = f.of(value)
        if f.is_zero(c):
            return Polynomial(f)
        p = Polynomial.__new__(Polynomial)
        p.field = f
        p.terms = {m: f.mul(cc, c) for m, cc in self.terms.items()}
        return p

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(self.field, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # ---- text ------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: grevlex-descending terms, symmetric coefficients."""
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms("grevlex"):
            cs = self.field.coeff_str(coeff)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            ms = mono_str(mono)
            if not ms:
                body = mag
            elif mag == "1":
                body = ms
            else:
                body = f"{mag}*{ms}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def variables(field):
    """The generator triple (x, y, z) as polynomials."""
    return tuple(Polynomial.variable(field, v) for v in VARS)


def require_homogeneous(f: Polynomial) -> Polynomial:
    if not f.is_homogeneous():
        raise NonHomogeneousError(f"non-homogeneous polynomial: {f}")
    return f


# ---- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*([+\-]|[xyz](?:\^\d+)?|\d+(?:/\d+)?|\*)")


def parse_polynomial(text: str, field) -> Polynomial:
    """Parse the canonical text format, e.g. ``2*x*y*z - z^3``.

    Terms are joined with + or -, factors within a term with ``*``; powers use
    ``^``; coefficients are integers (or rationals ``a/b``).  Whitespace is
    insignificant.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"bad character in polynomial at {s[pos:pos + 10]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    result = Polynomial.zero(field)
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        expo = [0, 0, 0]
        expect_factor = True
        while True:
            if expect_factor:
                tok = tokens[i] if i < n else None
                if tok is None or tok in "+-*":
                    raise ValueError(f"missing factor in {text!r}")
                if tok[0] in "xyz":
                    v = VARS.index(tok[0])
                    expo[v] += int(tok[2:]) if len(tok) > 1 else 1
                else:
                    coeff *= Fraction(tok)
                i += 1
                expect_factor = False
            elif i < n and tokens[i] == "*":
                i += 1
                expect_factor = True
            else:
                break
        result = result + Polynomial.monomial(field, tuple(expo), coeff)
    return result


# ---- exact division ---------------------------------------------------------

def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient f / g when g divides f exactly; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    field = f.field
    if field != g.field:
        raise ValueError("mismatched coefficient fields")
    lm_g = g.leading_monomial()
    lc_g = g.leading_coeff()
    rem = f
    quot = Polynomial.zero(field)
    while not rem.is_zero():
        lm = rem.leading_monomial()
        if not mono_divides(lm_g, lm):
            raise ValueError("inexact polynomial division")
        t = Polynomial.monomial(field, mono_div(lm, lm_g),
                                field.div(rem.leading_coeff(), lc_g))
        quot = quot + t
        rem = rem - t * g
    return quot


# ---- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular matrix of polynomials (row-major tuples)."""

    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        tup = tuple(tuple(row) for row in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise ValueError("ragged matrix rows")
        return cls(tup)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.entries)))

    def is_skew_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.cols):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def delete_row_col(self, i: int) -> "PolyMatrix":
        """Remove 0-based row i and column i."""
        keep = [r for r in range(self.rows) if r != i]
        return PolyMatrix(tuple(tuple(self.entries[r][c] for c in keep) for r in keep))

    def to_strings(self) -> list:
        return [[p.to_text() for p in row] for row in self.entries]


def matrix_det(M: PolyMatrix, field=None) -> Polynomial:
    """Determinant by cofactor expansion along the sparsest row."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if M.rows == 0:
        if field is None:
            raise ValueError("empty matrix needs an explicit field")
        return Polynomial.constant(field, 1)
    field = M.entries[0][0].field
    one = Polynomial.constant(field, 1)

    def det(rows, cols):
        n = len(rows)
        if n == 0:
            return one
        if n == 1:
            return M.entries[rows[0]][cols[0]]
        best = min(range(n),
                   key=lambda k: sum(bool(M.entries[rows[k]][c]) for c in cols))
        r = rows[best]
        sub_rows = rows[:best] + rows[best + 1:]
        total = Polynomial.zero(field)
        for pos, c in enumerate(cols):
            e = M.entries[r][c]
            if e.is_zero():
                continue
            minor = det(sub_rows, cols[:pos] + cols[pos + 1:])
            term = e * minor
            if (best + pos) % 2:
                term = -term
            total = total + term
        return total

    idx = tuple(range(M.rows))
    return det(idx, idx)


def det_bareiss(M: PolyMatrix) -> Polynomial:
    """Determinant by fraction-free (Bareiss) elimination with exact division."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        raise ValueError("empty matrix needs an explicit field")
    field = M.entries[0][0].field
    a = [list(row) for row in M.entries]
    sign = 1
    prev = Polynomial.constant(field, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return Polynomial.zero(field)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = Polynomial.zero(field)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result
