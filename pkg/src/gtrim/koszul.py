"""Koszul complex homology over an artinian graded quotient R = Q/a.

The complex is the exterior algebra on e_x, e_y, e_z over R with
differential e_x -> x (and so on), so H_i lives in internal degrees
(coefficient degree plus exterior degree) between 0 and top_degree(R) + 3.
Homology bases are produced degreewise with deterministic pivoting, and the
multiplication on classes yields the invariants (p, q, r) that drive the
Tor-algebra classification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClassificationScopeError
from .ideals import QuotientRing
from .linalg import Subspace, kernel_basis, solve_columns
from .pfaffians import TrimChoice, d_poly
from .poly import Polynomial, mono_degree, variables

WORDS = (((),), ((0,), (1,), (2,)), ((0, 1), (0, 2), (1, 2)), ((0, 1, 2),))
WORD_INDEX = tuple({w: k for k, w in enumerate(level)} for level in WORDS)
_WORD_STR = {(): "1", (0,): "e_x", (1,): "e_y", (2,): "e_z",
             (0, 1): "e_xy", (0, 2): "e_xz", (1, 2): "e_yz", (0, 1, 2): "e_xyz"}


def wedge_words(a: tuple, b: tuple):
    """(sign, merged word) for e_a ^ e_b, or None when a letter repeats."""
    if set(a) & set(b):
        return None
    inversions = sum(1 for p in a for q in b if p > q)
    return (-1 if inversions % 2 else 1, tuple(sorted(a + b)))


@dataclass
class KoszulElement:
    """Element of the Koszul complex: word -> polynomial coefficient."""

    exterior_degree: int
    components: dict

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components.values())

    def map_coefficients(self, fn) -> "KoszulElement":
        out = {}
        for w, p in self.components.items():
            q = fn(p)
            if not q.is_zero():
                out[w] = q
        return KoszulElement(self.exterior_degree, out)

    def __add__(self, other: "KoszulElement") -> "KoszulElement":
        if self.exterior_degree != other.exterior_degree:
            raise ValueError("cannot add elements of different exterior degrees")
        out = dict(self.components)
        for w, p in other.components.items():
            s = out.get(w, Polynomial.zero(p.field)) + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return KoszulElement(self.exterior_degree, out)

    def __neg__(self) -> "KoszulElement":
        return KoszulElement(self.exterior_degree,
                             {w: -p for w, p in self.components.items()})

    def __str__(self):
        if self.is_zero():
            return "0"
        bits = []
        for w in WORDS[self.exterior_degree]:
            p = self.components.get(w)
            if p is None or p.is_zero():
                continue
            bits.append(f"({p})*{_WORD_STR[w]}" if w else f"({p})")
        return " + ".join(bits)


def _coefficient_element(exterior_degree: int, word: tuple, coeff: Polynomial) -> KoszulElement:
    return KoszulElement(exterior_degree, {word: coeff})


@dataclass(frozen=True)
class TorInvariants:
    """Multiplication invariants of A = H(K^R) plus mu and the type."""

    p: int
    q: int
    r: int
    mu: int
    type_rank: int


@dataclass(frozen=True)
class TorClass:
    """Classification tag with its numeric parameters."""

    tag: str
    params: dict

    def display(self) -> str:
        if self.tag == "Gorenstein":
            return f"Gorenstein({self.params['r']})"
        if self.tag == "G":
            return f"G({self.params['r']})"
        if self.tag == "H":
            return f"H({self.params['p']},{self.params['q']})"
        if self.tag == "Unclassified":
            inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
            return f"Unclassified({inner})"
        return self.tag


def classify_from_invariants(inv: TorInvariants) -> TorClass:
    """Decision table on (p, q, r), type and mu; never coerces odd inputs."""
    p, q, r = inv.p, inv.q, inv.r
    if inv.type_rank == 1 and inv.mu == 3:
        return TorClass("CompleteIntersection", {})
    if inv.type_rank == 1:
        return TorClass("Gorenstein", {"r": r})
    if (p, q, r) == (1, 1, 2):
        return TorClass("B", {})
    if (p, q, r) == (3, 0, 0):
        return TorClass("T", {})
    if p == 0 and q == 1 and r >= 2:
        return TorClass("G", {"r": r})
    if r == q:
        return TorClass("H", {"p": p, "q": q})
    return TorClass("Unclassified",
                    {"p": p, "q": q, "r": r, "mu": inv.mu, "type": inv.type_rank})


class KoszulComplex:
    """Homology of the Koszul complex of a quotient ring, with multiplication."""

    def __init__(self, ring: QuotientRing):
        self.ring = ring
        self.field = ring.field
        self._vars = variables(self.field)
        self._diff = {}
        self._reps = {}
        self._solver = {}
        self._offsets = {}
        self._basis_elements = {}
        self._inv = None
        self._build_homology()

    # ---- chain-level structure -------------------------------------------

    def component_size(self, i: int, d: int) -> int:
        if not 0 <= i <= 3:
            return 0
        return len(WORDS[i]) * len(self.ring.basis(d - i))

    def _diff_matrix(self, i: int, d: int) -> list:
        """Rows of the internal-degree-d differential K_i -> K_{i-1}."""
        key = (i, d)
        if key in self._diff:
            return self._diff[key]
        f = self.field
        h_src = len(self.ring.basis(d - i))
        h_tgt = len(self.ring.basis(d - i + 1))
        rows = [[f.zero] * (len(WORDS[i]) * h_src)
                for _ in range(len(WORDS[i - 1]) * h_tgt)]
        for wi, w in enumerate(WORDS[i]):
            for t, letter in enumerate(w):
                target = WORD_INDEX[i - 1][w[:t] + w[t + 1:]]
                mat = self.ring.mult_matrix(letter, d - i)
                negate = t % 2 == 1
                for r in range(h_tgt):
                    row = rows[target * h_tgt + r]
                    for c in range(h_src):
                        val = mat[r][c]
                        if f.is_zero(val):
                            continue
                        if negate:
                            val = f.neg(val)
                        row[wi * h_src + c] = f.add(row[wi * h_src + c], val)
        self._diff[key] = rows
        return rows

    def _build_homology(self):
        f = self.field
        top = self.ring.top_degree
        for i in range(4):
            offset = 0
            for d in range(i, top + i + 1):
                size = self.component_size(i, d)
                if size == 0:
                    continue
                if i == 0:
                    cycles = [[f.one if k == j else f.zero for k in range(size)]
                              for j in range(size)]
                else:
                    cycles = kernel_basis(self._diff_matrix(i, d), size, f)
                boundary = []
                space = Subspace(f, size)
                if i < 3 and self.component_size(i + 1, d) > 0:
                    up = self._diff_matrix(i + 1, d)
                    for c in range(self.component_size(i + 1, d)):
                        col = [up[r][c] for r in range(size)]
                        if space.add(col):
                            boundary.append(col)
                reps = []
                for v in cycles:
                    if space.add(v):
                        reps.append(v)
                if reps or boundary:
                    self._reps[(i, d)] = reps
                    self._solver[(i, d)] = reps + boundary
                if reps:
                    self._offsets[(i, d)] = offset
                    offset += len(reps)
            self._offsets[("rank", i)] = offset

    def ranks(self) -> tuple:
        return tuple(self._offsets[("rank", i)] for i in range(4))

    # ---- elements ----------------------------------------------------------

    def reduce_element(self, el: KoszulElement) -> KoszulElement:
        return el.map_coefficients(self.ring.normal_form)

    def element_from_vector(self, i: int, d: int, vec) -> KoszulElement:
        h = len(self.ring.basis(d - i))
        comps = {}
        for wi, w in enumerate(WORDS[i]):
            part = self.ring.from_vector(d - i, vec[wi * h:(wi + 1) * h])
            if not part.is_zero():
                comps[w] = part
        return KoszulElement(i, comps)

    def _element_vectors(self, el: KoszulElement) -> dict:
        """Split a reduced element into {internal degree: coordinate vector}."""
        i = el.exterior_degree
        out = {}
        for w, p in el.components.items():
            wi = WORD_INDEX[i][w]
            for e, part in p.homogeneous_components().items():
                d = e + i
                h = len(self.ring.basis(e))
                vec = out.setdefault(d, [self.field.zero] * self.component_size(i, d))
                for c, val in enumerate(self.ring.coords(part, e)):
                    if not self.field.is_zero(val):
                        vec[wi * h + c] = val
        return out

    def homology_basis(self, i: int) -> list:
        """Deterministic cycle representatives of a basis of A_i."""
        if i not in self._basis_elements:
            top = self.ring.top_degree
            items = []
            for d in range(i, top + i + 1):
                for vec in self._reps.get((i, d), []):
                    items.append(self.element_from_vector(i, d, vec))
            self._basis_elements[i] = items
        return list(self._basis_elements[i])

    def differential(self, el: KoszulElement) -> KoszulElement:
        """The boundary of el, with coefficients reduced in R."""
        i = el.exterior_degree
        if i == 0:
            return KoszulElement(0, {})
        comps = {}
        for w, p in el.components.items():
            for t, letter in enumerate(w):
                piece = self._vars[letter] * p
                if t % 2:
                    piece = -piece
                w2 = w[:t] + w[t + 1:]
                cur = comps.get(w2)
                comps[w2] = piece if cur is None else cur + piece
        out = {}
        for w, p in comps.items():
            q = self.ring.normal_form(p)
            if not q.is_zero():
                out[w] = q
        return KoszulElement(i - 1, out)

    def is_cycle(self, el: KoszulElement) -> bool:
        return self.differential(el).is_zero()

    def wedge(self, u: KoszulElement, v: KoszulElement) -> KoszulElement:
        """Exterior product with coefficients reduced in R."""
        i = u.exterior_degree + v.exterior_degree
        if i > 3:
            raise ValueError("product lands beyond exterior degree 3")
        comps = {}
        for w1, p1 in u.components.items():
            for w2, p2 in v.components.items():
                hit = wedge_words(w1, w2)
                if hit is None:
                    continue
                sign, merged = hit
                piece = p1 * p2
                if sign < 0:
                    piece = -piece
                cur = comps.get(merged)
                comps[merged] = piece if cur is None else cur + piece
        out = {}
        for w, p in comps.items():
            q = self.ring.normal_form(p)
            if not q.is_zero():
                out[w] = q
        return KoszulElement(i, out)

    def class_coords(self, el: KoszulElement) -> list:
        """Coordinates of the homology class of a cycle over the A_i basis."""
        i = el.exterior_degree
        coords = [self.field.zero] * self._offsets[("rank", i)]
        for d, vec in sorted(self._element_vectors(self.reduce_element(el)).items()):
            if all(self.field.is_zero(c) for c in vec):
                continue
            cols = self._solver.get((i, d))
            sol = solve_columns(cols, vec, self.field) if cols else None
            if sol is None:
                raise ValueError(f"element is not a cycle (internal degree {d})")
            reps = self._reps.get((i, d), [])
            base = self._offsets.get((i, d), 0)
            for k in range(len(reps)):
                coords[base + k] = sol[k]
        return coords

    def is_boundary(self, el: KoszulElement) -> bool:
        return all(self.field.is_zero(c) for c in self.class_coords(el))

    def multiply(self, u: KoszulElement, v: KoszulElement) -> list:
        """Class coordinates of [u][v] over the A_{i+j} basis."""
        if u.exterior_degree + v.exterior_degree > 3:
            raise ValueError("product lands beyond exterior degree 3")
        if not self.is_cycle(u) or not self.is_cycle(v):
            raise ValueError("multiply is defined on cycles only")
        return self.class_coords(self.wedge(u, v))

    # ---- invariants and classification ------------------------------------

    def invariants(self) -> TorInvariants:
        if self._inv is None:
            f = self.field
            a1 = self.homology_basis(1)
            a2 = self.homology_basis(2)
            rank3 = self._offsets[("rank", 3)]
            p_span = Subspace(f, self._offsets[("rank", 2)])
            for s in range(len(a1)):
                for t in range(s + 1, len(a1)):
                    p_span.add(self.class_coords(self.wedge(a1[s], a1[t])))
            q_span = Subspace(f, rank3)
            delta_rows = []
            for g in a2:
                row = []
                for e in a1:
                    prod = self.class_coords(self.wedge(e, g))
                    q_span.add(prod)
                    row.extend(prod)
                delta_rows.append(row)
            delta_span = Subspace(f, len(a1) * rank3)
            for row in delta_rows:
                delta_span.add(row)
            self._inv = TorInvariants(p=p_span.rank, q=q_span.rank, r=delta_span.rank,
                                      mu=len(a1), type_rank=rank3)
            self._delta_rows = delta_rows
        return self._inv

    def delta_matrix(self) -> list:
        """Rows indexed by the A_2 basis; row = concatenated A_3 coords of
        the products with each A_1 basis class."""
        self.invariants()
        return [list(row) for row in self._delta_rows]

    def delta_rank(self) -> int:
        return self.invariants().r

    def classify(self) -> TorClass:
        mins, _ = self.ring.ideal.minimal_generators()
        if any(g.degree() < 2 for g in mins):
            raise ClassificationScopeError(
                "ideal has a degree-1 minimal generator; classification "
                "requires the ideal to sit inside the square of the maximal ideal")
        return classify_from_invariants(self.invariants())


def report_dict(kz: KoszulComplex) -> dict:
    """Classification report with a fixed key order."""
    inv = kz.invariants()
    cls = kz.classify()
    return {
        "mu": inv.mu,
        "type": inv.type_rank,
        "ranks": list(kz.ranks()),
        "p": inv.p,
        "q": inv.q,
        "r": inv.r,
        "class": cls.tag,
        "class_params": cls.params,
        "gorenstein": inv.type_rank == 1,
    }


# ---- hand-built cycles for the trimmed family ------------------------------

def _check_choice(choice: TrimChoice):
    if choice.m < 3:
        raise ValueError("hand-built cycle bases are provided for m >= 3")


def a1_cycle_basis(choice: TrimChoice, kz: KoszulComplex) -> list:
    """The explicit mu(a) cycles spanning A_1 for a trimmed family ideal.

    For the x-side generators: x^(m-j-1) d_j e_x for the surviving columns,
    their y-side mirrors, plus either the replaced pure power times e_x
    (x0/y0), d_m e_z (selector d), or the degree-(m-1) cycle whose boundary
    is d_m via the d-recurrence.  Every element is verified to be a cycle.
    """
    _check_choice(choice)
    m = choice.m
    field = kz.ring.field
    x, y, z = variables(field)
    d = [d_poly(k, field, "recurrence") for k in range(m + 1)]
    sel = choice.selector
    e_x, e_y, e_z = (0,), (1,), (2,)

    def on(word, coeff):
        return _coefficient_element(1, word, coeff)

    def x_side(skip=None):
        return [on(e_x, x ** (m - j - 1) * d[j]) for j in range(m) if j != skip]

    def y_side(skip=None):
        return [on(e_y, y ** (m - j - 1) * d[j]) for j in range(m) if j != skip]

    sign = 1 if (m - 1) % 2 == 0 else -1
    bridge_x = KoszulElement(1, {e_z: d[m - 1] * sign, e_y: x * d[m - 2]})
    bridge_y = KoszulElement(1, {e_z: d[m - 1] * sign, e_x: y * d[m - 2]})

    if sel == "x0":
        cycles = [on(e_x, x ** m)] + x_side(skip=0) + y_side() + [bridge_x]
    elif sel == "y0":
        cycles = [on(e_y, y ** m)] + y_side(skip=0) + x_side() + [bridge_y]
    elif sel == "d":
        cycles = x_side() + y_side() + [on(e_z, d[m])]
    elif sel[0] == "x":
        cycles = x_side(skip=int(sel[1:])) + y_side() + [bridge_x]
    else:
        cycles = y_side(skip=int(sel[1:])) + x_side() + [bridge_y]

    out = []
    for c in cycles:
        c = kz.reduce_element(c)
        if not kz.is_cycle(c):
            raise ValueError(f"constructed element is not a cycle: {c}")
        out.append(c)
    return out


def a1_annihilator_cycle(choice: TrimChoice, kz: KoszulComplex) -> KoszulElement:
    """A degree-2 cycle whose homology class multiplies A_1 to zero.

    Selector x0: y^(m-1) e_yz; selector d: d_(m-1) e_xy; interior xi:
    y^(m-i) d_(i-1) e_xy + (-1)^(i-1) y^(m-i-1) d_i e_yz; y-side selectors by
    the x <-> y swap.  The element is verified to be a cycle.
    """
    _check_choice(choice)
    m = choice.m
    field = kz.ring.field
    x, y, z = variables(field)
    d = [d_poly(k, field, "recurrence") for k in range(m + 1)]
    sel = choice.selector
    e_xy, e_xz, e_yz = (0, 1), (0, 2), (1, 2)

    if sel == "x0":
        el = _coefficient_element(2, e_yz, y ** (m - 1))
    elif sel == "y0":
        el = _coefficient_element(2, e_xz, x ** (m - 1))
    elif sel == "d":
        el = _coefficient_element(2, e_xy, d[m - 1])
    elif sel[0] == "x":
        i = int(sel[1:])
        sign = 1 if (i - 1) % 2 == 0 else -1
        el = KoszulElement(2, {e_xy: y ** (m - i) * d[i - 1],
                               e_yz: y ** (m - i - 1) * d[i] * sign})
    else:
        i = int(sel[1:])
        sign = 1 if i % 2 == 0 else -1
        el = KoszulElement(2, {e_xy: x ** (m - i) * d[i - 1],
                               e_xz: x ** (m - i - 1) * d[i] * sign})

    el = kz.reduce_element(el)
    if not kz.is_cycle(el):
        raise ValueError(f"constructed element is not a cycle: {el}")
    return el


def annihilates_a1(kz: KoszulComplex, f: KoszulElement) -> bool:
    """True when [f] multiplies every A_1 basis class to zero."""
    field = kz.field
    for e in kz.homology_basis(1):
        if any(not field.is_zero(c) for c in kz.multiply(e, f)):
            return False
    return True
