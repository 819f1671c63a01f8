"""Homogeneous ideals in k[x, y, z]: Groebner bases and graded invariants.

The engine is a plain Buchberger loop with the coprime-leading-term criterion
and degree-by-degree S-pair selection, followed by interreduction to the
unique reduced Groebner basis.  Quotient-ring invariants (Hilbert function,
socle, minimal generator counts, colon by the maximal ideal) are computed by
dense linear algebra on standard-monomial bases, one degree at a time.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass

from .errors import NonHomogeneousError, NotNPrimaryError
from .fields import default_field, field_of_characteristic
from .linalg import Subspace, kernel_basis
from .poly import (
    Polynomial,
    mono_degree,
    mono_div,
    mono_divides,
    mono_key,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    parse_polynomial,
    variables,
)

_VAR_MONOS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _normal_form_terms(terms, reducers, field, key):
    """Full normal form of a term dict against monic reducers [(lm, terms)]."""
    work = dict(terms)
    out = {}
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        hit = None
        for lm, rterms in reducers:
            if mono_divides(lm, mono):
                hit = (lm, rterms)
                break
        if hit is None:
            out[mono] = coeff
            continue
        lm, rterms = hit
        shift = mono_div(mono, lm)
        for rm, rc in rterms.items():
            if rm == lm:
                continue
            t = mono_mul(rm, shift)
            s = field.sub(work.get(t, field.zero), field.mul(coeff, rc))
            if field.is_zero(s):
                work.pop(t, None)
            else:
                work[t] = s
    return out


def _s_poly(f: Polynomial, g: Polynomial, order: str) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lmf, lmg)
    mf = Polynomial.monomial(f.field, mono_div(lcm, lmf))
    mg = Polynomial.monomial(f.field, mono_div(lcm, lmg))
    return mf * f - mg * g


def buchberger(generators, order: str = "grevlex") -> list:
    """The reduced Groebner basis of the given polynomials."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    field = gens[0].field
    key = mono_key(order)
    basis = []
    for g in gens:
        h = g.monic(order)
        if all(h != b for b in basis):
            basis.append(h)

    def reducers():
        return [(b.leading_monomial(order), b.terms) for b in basis]

    pairs = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            lcm = mono_lcm(basis[i].leading_monomial(order), basis[j].leading_monomial(order))
            heapq.heappush(pairs, (mono_degree(lcm), i, j, lcm))
    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        if lcm == mono_mul(basis[i].leading_monomial(order), basis[j].leading_monomial(order)):
            continue  # coprime leading terms reduce to zero
        s = _s_poly(basis[i], basis[j], order)
        rem = Polynomial(field, _normal_form_terms(s.terms, reducers(), field, key))
        if rem.is_zero():
            continue
        rem = rem.monic(order)
        basis.append(rem)
        k = len(basis) - 1
        lmk = rem.leading_monomial(order)
        for i in range(k):
            lcm = mono_lcm(basis[i].leading_monomial(order), lmk)
            heapq.heappush(pairs, (mono_degree(lcm), i, k, lcm))

    # interreduce to the unique reduced basis
    basis.sort(key=lambda b: key(b.leading_monomial(order)))
    minimal = []
    for b in basis:
        lm = b.leading_monomial(order)
        if any(mono_divides(m.leading_monomial(order), lm) for m in minimal):
            continue
        minimal.append(b)
    reduced = []
    for idx, b in enumerate(minimal):
        others = [(m.leading_monomial(order), m.terms)
                  for k, m in enumerate(minimal) if k != idx]
        r = Polynomial(field, _normal_form_terms(b.terms, others, field, key))
        reduced.append(r.monic(order))
    reduced.sort(key=lambda b: key(b.leading_monomial(order)))
    return reduced


class Ideal:
    """Homogeneous ideal with a cached reduced Groebner basis.

    Construction rejects non-homogeneous generators; zero generators are
    dropped.  The Groebner basis is computed once under a lock, so concurrent
    readers only ever observe the finished tuple.
    """

    __slots__ = ("field", "order", "generators", "_gb", "_ring", "_lock")

    def __init__(self, generators, order: str = "grevlex", field=None):
        gens = list(generators)
        if field is None:
            if not gens:
                raise ValueError("an empty ideal needs an explicit field")
            field = gens[0].field
        mono_key(order)  # validate the order name
        kept = []
        for g in gens:
            if g.field != field:
                raise ValueError("mismatched coefficient fields among generators")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"non-homogeneous generator: {g}")
            kept.append(g)
        self.field = field
        self.order = order
        self.generators = tuple(kept)
        self._gb = None
        self._ring = None
        self._lock = threading.RLock()

    # ---- Groebner machinery ---------------------------------------------

    def groebner_basis(self) -> tuple:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(buchberger(self.generators, self.order))
        return self._gb

    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial(self.order) for g in self.groebner_basis())

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.field != self.field:
            raise ValueError("mismatched coefficient fields")
        reducers = [(g.leading_monomial(self.order), g.terms) for g in self.groebner_basis()]
        return Polynomial(self.field,
                          _normal_form_terms(f.terms, reducers, self.field, mono_key(self.order)))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __add__(self, other: "Ideal") -> "Ideal":
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.field != self.field or other.order != self.order:
            raise ValueError("ideal sum needs matching field and order")
        return Ideal(self.generators + other.generators, self.order, self.field)

    def equals(self, other: "Ideal") -> bool:
        if self.field != other.field:
            return False
        if self.order == other.order:
            return self.groebner_basis() == other.groebner_basis()
        return (all(self.contains(g) for g in other.generators)
                and all(other.contains(g) for g in self.generators))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"

    # ---- graded structure --------------------------------------------------

    def is_n_primary(self) -> bool:
        """True when Q/I is artinian: each variable has a pure-power leading term."""
        lms = self.leading_monomials()
        if (0, 0, 0) in lms:
            return True
        for v in range(3):
            if not any(m[v] > 0 and m[(v + 1) % 3] == 0 and m[(v + 2) % 3] == 0 for m in lms):
                return False
        return True

    def quotient_ring(self) -> "QuotientRing":
        if self._ring is None:
            with self._lock:
                if self._ring is None:
                    self._ring = QuotientRing(self)
        return self._ring

    def hilbert_function(self) -> "HilbertData":
        return self.quotient_ring().hilbert()

    def component_basis(self, d: int) -> list:
        """Vectors (over all degree-d monomials) spanning the degree-d slice of I."""
        monos = monomials_of_degree(d)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in self.groebner_basis():
            dg = g.degree()
            if dg > d:
                continue
            for shift in monomials_of_degree(d - dg):
                vec = [self.field.zero] * len(monos)
                for m, c in g.terms.items():
                    vec[index[mono_mul(m, shift)]] = c
                rows.append(vec)
        return rows

    def minimal_generators(self):
        """(subset of the input generators that generates minimally, count).

        Candidates are scanned by ascending degree, ties broken by input
        order; a candidate is kept exactly when it is independent in I/(nI).
        """
        if any(g.degree() == 0 for g in self.generators):
            raise ValueError("minimal generators are only defined for ideals inside (x, y, z)")
        ranked = sorted(enumerate(self.generators), key=lambda t: (t[1].degree(), t[0]))
        kept = []
        spans = {}
        for _, g in ranked:
            d = g.degree()
            if d not in spans:
                monos = monomials_of_degree(d)
                index = {m: i for i, m in enumerate(monos)}
                space = Subspace(self.field, len(monos))
                if d >= 1:
                    for row in self._scaled_component(d, index):
                        space.add(row)
                spans[d] = (space, index)
            space, index = spans[d]
            vec = [self.field.zero] * space.dim
            for m, c in g.terms.items():
                vec[index[m]] = c
            if space.add(vec):
                kept.append(g)
        return kept, len(kept)

    def _scaled_component(self, d: int, index) -> list:
        """Degree-d vectors spanning (nI)_d, i.e. multiples m*g with deg m >= 1."""
        rows = []
        for g in self.groebner_basis():
            dg = g.degree()
            if dg >= d:
                continue
            for shift in monomials_of_degree(d - dg):
                vec = [self.field.zero] * len(index)
                for m, c in g.terms.items():
                    vec[index[mono_mul(m, shift)]] = c
                rows.append(vec)
        return rows

    def socle_basis(self) -> "SocleData":
        """Basis of the annihilator of (x, y, z) in Q/I, as normal forms."""
        ring = self.quotient_ring()
        field = self.field
        reps = []
        for d in range(ring.top_degree + 1):
            basis = ring.basis(d)
            h_next = len(ring.basis(d + 1))
            rows = []
            for v in range(3):
                mat = ring.mult_matrix(v, d)
                for r in range(h_next):
                    rows.append([mat[r][c] for c in range(len(basis))])
            for vec in kernel_basis(rows, len(basis), field):
                reps.append(ring.from_vector(d, vec))
        return SocleData(basis=tuple(reps), type_rank=len(reps))

    def colon_by_maximal(self) -> "Ideal":
        """The ideal (I : (x, y, z)), computed as I plus socle lifts."""
        lifts = self.socle_basis().basis
        return Ideal(self.generators + tuple(lifts), self.order, self.field)

    # ---- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "field": {"char": self.field.char},
            "order": self.order,
            "generators": [g.to_text() for g in self.generators],
        }

    @classmethod
    def from_json_dict(cls, data: dict, field=None, order=None) -> "Ideal":
        if field is None:
            char = data.get("field", {}).get("char")
            field = field_of_characteristic(char) if char is not None else default_field()
        if order is None:
            order = data.get("order", "grevlex")
        gens = [parse_polynomial(s, field) for s in data.get("generators", [])]
        return cls(gens, order, field)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def scale_by_maximal(g: Polynomial, order: str = "grevlex") -> Ideal:
    """The ideal (x*g, y*g, z*g)."""
    x, y, z = variables(g.field)
    return Ideal([x * g, y * g, z * g], order, g.field)


def trim(generators, index: int, order: str = "grevlex") -> Ideal:
    """Replace the index-th generator g by (x, y, z)*g."""
    gens = list(generators)
    if not 0 <= index < len(gens):
        raise ValueError(f"trim index {index} out of range for {len(gens)} generators")
    g = gens.pop(index)
    if g.is_zero():
        raise ValueError("cannot trim a zero generator")
    return scale_by_maximal(g, order) + Ideal(gens, order, g.field)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function of an artinian quotient as a coefficient tuple."""

    coefficients: tuple

    def total(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0


@dataclass(frozen=True)
class SocleData:
    basis: tuple
    type_rank: int


class QuotientRing:
    """Artinian graded quotient Q/I with standard-monomial bases per degree."""

    __slots__ = ("ideal", "field", "std", "top_degree", "_mult", "_index")

    def __init__(self, ideal: Ideal):
        if not ideal.is_n_primary():
            raise NotNPrimaryError(
                "quotient is not artinian; some variable has no pure-power leading term")
        self.ideal = ideal
        self.field = ideal.field
        lms = ideal.leading_monomials()
        std = []
        d = 0
        while True:
            level = tuple(m for m in monomials_of_degree(d)
                          if not any(mono_divides(lm, m) for lm in lms))
            if not level:
                break
            std.append(level)
            d += 1
        self.std = tuple(std)
        self.top_degree = len(std) - 1
        self._mult = {}
        self._index = [
            {m: i for i, m in enumerate(level)} for level in std
        ]

    def dim(self) -> int:
        return sum(len(level) for level in self.std)

    def hilbert(self) -> HilbertData:
        return HilbertData(tuple(len(level) for level in self.std))

    def basis(self, d: int) -> tuple:
        if 0 <= d <= self.top_degree:
            return self.std[d]
        return ()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.ideal.normal_form(f)

    def coords(self, f: Polynomial, d: int) -> list:
        """Coordinates of a normal-form, degree-d polynomial over basis(d)."""
        vec = [self.field.zero] * len(self.basis(d))
        index = self._index[d] if d <= self.top_degree else {}
        for m, c in f.terms.items():
            if m not in index:
                raise ValueError(f"{f} is not a degree-{d} normal form")
            vec[index[m]] = c
        return vec

    def from_vector(self, d: int, vec) -> Polynomial:
        terms = {}
        for m, c in zip(self.basis(d), vec):
            if not self.field.is_zero(c):
                terms[m] = c
        return Polynomial(self.field, terms)

    def mult_matrix(self, var: int, d: int) -> list:
        """Matrix of multiplication by x_var from degree d to degree d+1."""
        key = (var, d)
        if key not in self._mult:
            source = self.basis(d)
            target_len = len(self.basis(d + 1))
            mat = [[self.field.zero] * len(source) for _ in range(target_len)]
            if target_len:
                for j, mono in enumerate(source):
                    image = self.ideal.normal_form(
                        Polynomial.monomial(self.field, mono_mul(mono, _VAR_MONOS[var])))
                    for m, c in image.terms.items():
                        mat[self._index[d + 1][m]][j] = c
            self._mult[key] = mat
        return self._mult[key]
