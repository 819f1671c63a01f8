"""The skew-symmetric matrix family V_m and its trimmed Gorenstein ideals.

U_m is the m x m symmetric band matrix with x, z, y along the three central
anti-diagonals, d_m = det(U_m), and V_m is the (2m+1) x (2m+1) skew-symmetric
matrix whose maximal sub-Pfaffians generate a height-3 Gorenstein ideal with
2m+1 minimal generators of degree m.  Trimming replaces one generator g by
(x, y, z)*g.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .fields import default_field
from .ideals import Ideal, scale_by_maximal, trim
from .poly import Polynomial, PolyMatrix, matrix_det, variables

_SELECTOR = re.compile(r"^(x|y)(\d+)$|^d$")


def build_u(m: int, field=None) -> PolyMatrix:
    """The m x m band matrix: row i has x, z, y in columns m-i, m-i+1, m-i+2."""
    if m < 1:
        raise ValueError(f"matrix size must be positive, got {m}")
    field = field or default_field()
    x, y, z = variables(field)
    zero = Polynomial.zero(field)

    def entry(i: int, j: int) -> Polynomial:
        if j == m - i:
            return x
        if j == m - i + 1:
            return z
        if j == m - i + 2:
            return y
        return zero

    return PolyMatrix.from_rows(
        [[entry(i, j) for j in range(1, m + 1)] for i in range(1, m + 1)])


def build_v(m: int, field=None) -> PolyMatrix:
    """The (2m+1) x (2m+1) skew-symmetric matrix built from U_m.

    Block form with row/column blocks of sizes m, 1, m: zero block, a column
    with x in its last entry, U_m on the first block row; the middle row has
    y in its first entry past the center; the lower-left block is -U_m.
    """
    if m < 1:
        raise ValueError(f"matrix size must be positive, got {m}")
    field = field or default_field()
    x, y, z = variables(field)
    zero = Polynomial.zero(field)
    u = build_u(m, field)
    n = 2 * m + 1
    rows = [[zero] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            rows[i][m + 1 + j] = u.entry(i, j)
            rows[m + 1 + i][j] = -u.entry(i, j)
    rows[m - 1][m] = x
    rows[m][m - 1] = -x
    rows[m][m + 1] = y
    rows[m + 1][m] = -y
    return PolyMatrix.from_rows(rows)


def d_poly(m: int, field=None, method: str = "closed_form") -> Polynomial:
    """The degree-m polynomial d_m = det(U_m), by one of three routes.

    methods: "determinant" (cofactor expansion of U_m), "recurrence"
    (d_m = (-1)^(m-1) z d_{m-1} + x y d_{m-2}), "closed_form" (binomial sum).
    d_0 = 1 and d_{-1} = 0.
    """
    if m < -1:
        raise ValueError(f"d_poly index must be >= -1, got {m}")
    field = field or default_field()
    if method == "determinant":
        if m == -1:
            return Polynomial.zero(field)
        if m == 0:
            return Polynomial.constant(field, 1)
        return matrix_det(build_u(m, field))
    if method == "recurrence":
        if m == -1:
            return Polynomial.zero(field)
        x, y, z = variables(field)
        prev = Polynomial.zero(field)       # d_{-1}
        cur = Polynomial.constant(field, 1)  # d_0
        for k in range(1, m + 1):
            sign_z = z if k % 2 else -z
            cur, prev = sign_z * cur + x * y * prev, cur
        return cur
    if method == "closed_form":
        if m == -1:
            return Polynomial.zero(field)
        terms = {}
        for j in range(m // 2 + 1):
            sign = -1 if ((m - 2 * j) // 2) % 2 else 1
            terms[(j, j, m - 2 * j)] = field.of(sign * math.comb(m - j, j))
        return Polynomial(field, terms)
    raise ValueError(f"unknown d_poly method {method!r}")


def pfaffian(M: PolyMatrix) -> Polynomial:
    """Pfaffian of an even skew-symmetric matrix by first-row expansion."""
    if M.rows != M.cols:
        raise ValueError("Pfaffian of a non-square matrix")
    if M.rows % 2:
        raise ValueError("Pfaffian needs an even-sized matrix")
    if not M.is_skew_symmetric():
        raise ValueError("Pfaffian of a non-skew-symmetric matrix")
    if M.rows == 0:
        raise ValueError("empty matrix has no coefficient field; use size >= 2")
    field = M.entry(0, 1).field if M.rows else None
    one = Polynomial.constant(field, 1)

    def pf(active):
        if not active:
            return one
        first = active[0]
        rest = active[1:]
        total = Polynomial.zero(field)
        for pos, j in enumerate(rest):
            e = M.entry(first, j)
            if e.is_zero():
                continue
            term = e * pf(rest[:pos] + rest[pos + 1:])
            # expansion signs alternate +, -, +, ... along the first row
            if pos % 2:
                term = -term
            total = total + term
        return total

    return pf(tuple(range(M.rows)))


def sub_pfaffian(V: PolyMatrix, i: int) -> Polynomial:
    """Pfaffian of V with 1-based row and column i removed."""
    if V.rows != V.cols:
        raise ValueError("sub-Pfaffian of a non-square matrix")
    if not V.is_skew_symmetric():
        raise ValueError("sub-Pfaffian of a non-skew-symmetric matrix")
    if not 1 <= i <= V.rows:
        raise ValueError(f"index {i} out of range 1..{V.rows}")
    minor = V.delete_row_col(i - 1)
    if minor.rows % 2:
        raise ValueError("deleting one row/column must leave an even size")
    return pfaffian(minor)


def all_sub_pfaffians(V: PolyMatrix) -> list:
    return [sub_pfaffian(V, i) for i in range(1, V.rows + 1)]


def canonical_generators(m: int, field=None) -> list:
    """[x^m, x^(m-1) d_1, ..., x d_(m-1), d_m, y d_(m-1), ..., y^m] for m >= 2."""
    if m < 2:
        raise ValueError(f"canonical generators need m >= 2, got {m}")
    return _generator_ladder(m, field or default_field())


def _generator_ladder(m: int, field) -> list:
    x, y, z = variables(field)
    d = [d_poly(k, field, "recurrence") for k in range(m + 1)]
    left = [x ** (m - i) * d[i] for i in range(m)]
    right = [y ** (m - i) * d[i] for i in range(m - 1, -1, -1)]
    return left + [d[m]] + right


def gorenstein_ideal(m: int, field=None, order: str = "grevlex") -> Ideal:
    """The height-3 Gorenstein ideal of sub-Pfaffians of V_m (m = 1 gives (x, y, z))."""
    if m < 1:
        raise ValueError(f"family index must be >= 1, got {m}")
    field = field or default_field()
    return Ideal(_generator_ladder(m, field), order, field)


def family_hilbert(m: int) -> list:
    """Closed-form Hilbert function of Q/g_m: binomials mirrored around degree m-1."""
    if m < 1:
        raise ValueError(f"family index must be >= 1, got {m}")
    coeffs = [0] * (2 * m - 1)
    for i in range(m - 1):
        value = math.comb(i + 2, 2)
        coeffs[i] += value
        coeffs[2 * m - 2 - i] += value
    coeffs[m - 1] += math.comb(m + 1, 2)
    return coeffs


def selector_labels(m: int) -> list:
    """All 2m+1 trim selectors in canonical generator order."""
    if m < 2:
        raise ValueError(f"trim selectors need m >= 2, got {m}")
    left = ["x0"] + [f"x{i}" for i in range(1, m)]
    right = [f"y{i}" for i in range(m - 1, 0, -1)] + ["y0"]
    return left + ["d"] + right


@dataclass(frozen=True)
class TrimChoice:
    """A generator choice for trimming: selectors x0 (x^m), y0 (y^m), d (d_m),
    xi (x^(m-i) d_i) and yi (y^(m-i) d_i) for 1 <= i <= m-1."""

    m: int
    selector: str

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"trimming is defined for m >= 2, got m={self.m}")
        match = _SELECTOR.match(self.selector)
        if not match:
            raise ValueError(f"bad trim selector {self.selector!r}; "
                             "expected x0, y0, d, xI or yI")
        if self.selector != "d":
            i = int(match.group(2))
            if i > self.m - 1:
                raise ValueError(
                    f"selector {self.selector!r} needs 0 <= I <= {self.m - 1} for m={self.m}")

    @property
    def index(self) -> int:
        """Position of the chosen generator in the canonical ordering."""
        if self.selector == "d":
            return self.m
        side, i = self.selector[0], int(self.selector[1:])
        if side == "x":
            return i
        return 2 * self.m - i if i else 2 * self.m

    @property
    def is_interior(self) -> bool:
        """True for xi/yi with 1 <= i <= m-1 (neither a pure power nor d_m)."""
        return self.selector != "d" and int(self.selector[1:]) > 0

    def generator(self, field=None) -> Polynomial:
        field = field or default_field()
        return _generator_ladder(self.m, field)[self.index]


def trimmed_ideal(choice: TrimChoice, field=None, order: str = "grevlex") -> Ideal:
    """Trim of the m-th Gorenstein ideal at the chosen generator."""
    field = field or default_field()
    return trim(_generator_ladder(choice.m, field), choice.index, order)


@dataclass(frozen=True)
class PfaffianFamily:
    """The m-th instance: matrices, sub-Pfaffians and canonical generators."""

    m: int
    U: PolyMatrix
    V: PolyMatrix
    d: Polynomial
    pfaffians: tuple
    generators: tuple

    @classmethod
    def build(cls, m: int, field=None) -> "PfaffianFamily":
        if m < 1:
            raise ValueError(f"family index must be >= 1, got {m}")
        field = field or default_field()
        V = build_v(m, field)
        gens = _generator_ladder(m, field)
        return cls(m=m, U=build_u(m, field), V=V,
                   d=d_poly(m, field, "recurrence"),
                   pfaffians=tuple(all_sub_pfaffians(V)),
                   generators=tuple(gens))

    def ideal(self, order: str = "grevlex") -> Ideal:
        return Ideal(list(self.generators), order)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "U": self.U.to_strings(),
            "V": self.V.to_strings(),
            "d": self.d.to_text(),
            "pfaffians": [p.to_text() for p in self.pfaffians],
            "generators": [g.to_text() for g in self.generators],
        }


__all__ = [
    "build_u", "build_v", "d_poly", "pfaffian", "sub_pfaffian",
    "all_sub_pfaffians", "canonical_generators", "gorenstein_ideal",
    "family_hilbert", "selector_labels", "TrimChoice", "trimmed_ideal",
    "PfaffianFamily", "scale_by_maximal",
]
