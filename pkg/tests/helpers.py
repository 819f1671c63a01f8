"""Shared builders and brute-force oracles for the test suite.

Expensive objects (Groebner bases, quotient rings, Koszul homology) are
cached per (m, selector, characteristic) so every test module works on the
same instances without recomputing them.  The oracles here are deliberately
naive re-derivations: they share no code path with the routines they check.
"""

from functools import lru_cache

from gtrim import (
    Ideal,
    KoszulComplex,
    Polynomial,
    TrimChoice,
    field_of_characteristic,
    gorenstein_ideal,
    selector_labels,
    trim,
    trimmed_ideal,
    variables,
)
from gtrim.linalg import kernel_basis
from gtrim.poly import monomials_of_degree

SEED = 20260825


@lru_cache(maxsize=None)
def field(char=32003):
    return field_of_characteristic(char)


@lru_cache(maxsize=None)
def family_ideal(m, char=32003):
    return gorenstein_ideal(m, field(char))


@lru_cache(maxsize=None)
def trim_ideal(m, selector, char=32003):
    return trimmed_ideal(TrimChoice(m, selector), field(char))


@lru_cache(maxsize=None)
def koszul(m, selector=None, char=32003):
    ideal = family_ideal(m, char) if selector is None else trim_ideal(m, selector, char)
    return KoszulComplex(ideal.quotient_ring())


@lru_cache(maxsize=None)
def trimmed_power_ci(char=32003):
    """The quotient obtained by trimming x^2 out of (x^2, y^2, z^2)."""
    x, y, z = variables(field(char))
    return trim([x * x, y * y, z * z], 0)


def small_instances(char=32003):
    """Every ideal the suite classifies whose quotient has dimension <= 100."""
    fld = field(char)
    x, y, z = variables(fld)
    out = [("maximal", Ideal([x, y, z])),
           ("ci-222", Ideal([x * x, y * y, z * z])),
           ("trim-m1-x0", trimmed_power_ci(char))]
    for m in range(2, 7):
        out.append((f"family-m{m}", family_ideal(m, char)))
    for m in range(2, 6):
        for label in selector_labels(m):
            out.append((f"trim-m{m}-{label}", trim_ideal(m, label, char)))
    return out


def random_form(rng, fld, degree, max_terms=3):
    """Random nonzero homogeneous polynomial of the given degree."""
    monos = monomials_of_degree(degree)
    out = Polynomial.zero(fld)
    while out.is_zero():
        for _ in range(rng.randint(1, max_terms)):
            mono = monos[rng.randrange(len(monos))]
            out = out + Polynomial.monomial(fld, mono, rng.randint(-9, 9))
    return out


def random_poly(rng, fld, max_degree=3, max_terms=4):
    """Random polynomial with small support; may be zero or inhomogeneous."""
    out = Polynomial.zero(fld)
    for _ in range(rng.randrange(max_terms + 1)):
        d = rng.randrange(max_degree + 1)
        monos = monomials_of_degree(d)
        mono = monos[rng.randrange(len(monos))]
        out = out + Polynomial.monomial(fld, mono, rng.randint(-9, 9))
    return out


def random_element(rng, kz, i, max_degree=2, density=0.7):
    """Random reduced element of exterior degree i (not necessarily a cycle)."""
    from gtrim import KoszulElement
    from gtrim.koszul import WORDS

    comps = {}
    for w in WORDS[i]:
        if rng.random() < density:
            p = random_poly(rng, kz.ring.field, max_degree=max_degree, max_terms=3)
            if not p.is_zero():
                comps[w] = p
    return kz.reduce_element(KoszulElement(i, comps))


def random_cycle(rng, kz, i):
    """Random cycle: a combination of basis classes plus a random boundary."""
    from gtrim import KoszulElement

    el = KoszulElement(i, {})
    for b in kz.homology_basis(i):
        c = rng.randint(-5, 5)
        if c:
            el = el + b.map_coefficients(lambda p, c=c: p * c)
    if i < 3:
        el = el + kz.differential(random_element(rng, kz, i + 1))
    return kz.reduce_element(el)


def colon_oracle(ideal):
    """(I : (x, y, z)) recomputed degreewise from first principles.

    A degree-d form f lies in the colon exactly when x*f, y*f and z*f all
    reduce to zero mod I.  That is a linear condition over the full space of
    degree-d forms, so the kernel of the stacked multiplication-then-reduce
    matrix gives the degree-d slice; beyond the top degree of Q/I the colon
    agrees with I and contributes nothing new.
    """
    fld = ideal.field
    ring = ideal.quotient_ring()
    xyz = variables(fld)
    gens = list(ideal.generators)
    for d in range(ring.top_degree + 1):
        monos = monomials_of_degree(d)
        target = monomials_of_degree(d + 1)
        col = {mm: k for k, mm in enumerate(target)}
        nrows = 3 * len(target)
        columns = []
        for mono in monos:
            f = Polynomial.monomial(fld, mono)
            column = [fld.zero] * nrows
            for v, var in enumerate(xyz):
                nf = ideal.normal_form(var * f)
                for mm, c in nf.terms.items():
                    column[v * len(target) + col[mm]] = c
            columns.append(column)
        rows = [[columns[j][i] for j in range(len(monos))] for i in range(nrows)]
        for vec in kernel_basis(rows, len(monos), fld):
            terms = {mono: c for mono, c in zip(monos, vec) if not fld.is_zero(c)}
            gens.append(Polynomial(fld, terms))
    return Ideal(gens, ideal.order, fld)
