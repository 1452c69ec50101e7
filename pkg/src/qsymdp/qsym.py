"""Quasisymmetric functions in monomial coordinates with exact rational coefficients."""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .compositions import (
    Composition,
    DescentSet,
    comp_of_subset,
    conjugate,
    descent_set,
    format_composition,
    parse_composition,
    reverse,
    sort_key,
)


class QSymElem:
    """A finite linear combination of monomial basis elements M_alpha.

    Coefficients are exact rationals; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Composition, Fraction] | None = None):
        cleaned: Dict[Composition, Fraction] = {}
        for alpha, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                cleaned[Composition(alpha)] = c
        self.terms = cleaned

    def coeff(self, alpha: Composition) -> Fraction:
        return self.terms.get(Composition(alpha), Fraction(0))

    def degree(self) -> int:
        """Max degree of the support; 0 for the zero element."""
        return max((sum(a) for a in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(a) for a in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, n: int) -> "QSymElem":
        return QSymElem({a: c for a, c in self.terms.items() if sum(a) == n})

    def degrees(self) -> List[int]:
        return sorted({sum(a) for a in self.terms})

    def sorted_terms(self) -> List[Tuple[Composition, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: sort_key(t[0]))

    def __add__(self, other: "QSymElem") -> "QSymElem":
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return QSymElem(out)

    def __sub__(self, other: "QSymElem") -> "QSymElem":
        return self + (-other)

    def __neg__(self) -> "QSymElem":
        return QSymElem({a: -c for a, c in self.terms.items()})

    def scale(self, c) -> "QSymElem":
        c = Fraction(c)
        return QSymElem({a: c * v for a, v in self.terms.items()})

    def __rmul__(self, c) -> "QSymElem":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSymElem):
            return product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, QSymElem) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"QSymElem({format_qsym(self)})"


def monomial(alpha: Composition) -> QSymElem:
    return QSymElem({Composition(alpha): Fraction(1)})


ZERO = QSymElem()
ONE = monomial(Composition())


def _expand(f: QSymElem, m: int) -> Dict[Tuple[int, ...], Fraction]:
    """Expand f as a polynomial in x_1..x_m; keys are exponent vectors."""
    poly: Dict[Tuple[int, ...], Fraction] = {}
    for alpha, c in f.terms.items():
        ell = len(alpha)
        if ell > m:
            continue
        for positions in itertools.combinations(range(m), ell):
            exps = [0] * m
            for pos, part in zip(positions, alpha):
                exps[pos] = part
            key = tuple(exps)
            poly[key] = poly.get(key, Fraction(0)) + c
    return poly


def product(f: QSymElem, g: QSymElem) -> QSymElem:
    """QSym product, computed by truncated-polynomial multiplication.

    An element of degree <= m is determined by its polynomial in m variables,
    so we expand both factors in deg(f) + deg(g) variables, multiply, and read
    the monomial-basis coefficients back off the exponents at x_1..x_ell.
    """
    if not f.terms or not g.terms:
        return ZERO
    m = f.degree() + g.degree()
    if m == 0:
        return ONE.scale(f.coeff(Composition()) * g.coeff(Composition()))
    pf = _expand(f, m)
    pg = _expand(g, m)
    prod: Dict[Tuple[int, ...], Fraction] = {}
    for ea, ca in pf.items():
        for eb, cb in pg.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            prod[key] = prod.get(key, Fraction(0)) + ca * cb
    # coefficient of M_alpha is the coefficient of x_1^a1 ... x_ell^a_ell
    out: Dict[Composition, Fraction] = {}
    for exps, c in prod.items():
        support = [i for i, e in enumerate(exps) if e > 0]
        if support != list(range(len(support))):
            continue
        out[Composition(exps[: len(support)])] = c
    return QSymElem(out)


def coproduct(f: QSymElem) -> List[Tuple[QSymElem, QSymElem]]:
    """Deconcatenation coproduct, as a list of tensor terms.

    Normalized: left factors are distinct basis elements M_beta, sorted.
    """
    by_left: Dict[Composition, QSymElem] = {}
    for alpha, c in f.terms.items():
        for k in range(len(alpha) + 1):
            left = Composition(alpha[:k])
            right = monomial(Composition(alpha[k:])).scale(c)
            by_left[left] = by_left.get(left, ZERO) + right
    return [
        (monomial(beta), by_left[beta])
        for beta in sorted(by_left, key=sort_key)
        if by_left[beta]
    ]


def counit(f: QSymElem) -> Fraction:
    return f.coeff(Composition())


@lru_cache(maxsize=None)
def _antipode_closed_basis(alpha: Composition) -> QSymElem:
    n = sum(alpha)
    rev_d = descent_set(reverse(alpha)).members
    sign = Fraction(-1) ** len(alpha)
    terms: Dict[Composition, Fraction] = {}
    for k in range(len(rev_d) + 1):
        for sub in itertools.combinations(sorted(rev_d), k):
            gamma = comp_of_subset(DescentSet(n=n, members=frozenset(sub)))
            terms[gamma] = terms.get(gamma, Fraction(0)) + sign
    return QSymElem(terms)


def antipode_closed(f: QSymElem) -> QSymElem:
    """Antipode via the closed form: S(M_alpha) = (-1)^l sum_{D(gamma) subseteq D(rev alpha)} M_gamma."""
    out = ZERO
    for alpha, c in f.terms.items():
        out = out + _antipode_closed_basis(alpha).scale(c)
    return out


@lru_cache(maxsize=None)
def _antipode_recursive_basis(alpha: Composition) -> QSymElem:
    if len(alpha) == 0:
        return ONE
    acc = ZERO
    for k in range(len(alpha)):
        acc = acc + product(
            _antipode_recursive_basis(Composition(alpha[:k])),
            monomial(Composition(alpha[k:])),
        )
    return -acc


def antipode_recursive(f: QSymElem) -> QSymElem:
    """Antipode computed degree-by-degree from m(S x id)Delta = u eps."""
    out = ZERO
    for alpha, c in f.terms.items():
        out = out + _antipode_recursive_basis(alpha).scale(c)
    return out


def fundamental(alpha: Composition) -> QSymElem:
    """The fundamental function F_alpha = sum over beta with D(beta) >= D(alpha) of M_beta."""
    n = sum(alpha)
    d = descent_set(Composition(alpha)).members
    rest = sorted(frozenset(range(1, n)) - d)
    terms: Dict[Composition, Fraction] = {}
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            beta = comp_of_subset(DescentSet(n=n, members=d | frozenset(extra)))
            terms[beta] = Fraction(1)
    return QSymElem(terms)


def antipode_fundamental_identity_check(alpha: Composition) -> bool:
    """True iff S(F_alpha) = (-1)^|alpha| F_{conjugate(alpha)}."""
    alpha = Composition(alpha)
    lhs = antipode_closed(fundamental(alpha))
    rhs = fundamental(conjugate(alpha)).scale(Fraction(-1) ** sum(alpha))
    return lhs == rhs


def binomial(q, k: int) -> Fraction:
    """Generalized binomial C(q, k) = q(q-1)...(q-k+1)/k!, valid for negative q."""
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(q) - i
    den = 1
    for i in range(1, k + 1):
        den *= i
    return num / den


def ps1(f: QSymElem, q: int) -> Fraction:
    """Principal specialization: substitute 1 for x_1..x_q and 0 for the rest."""
    return sum(
        (c * binomial(q, len(alpha)) for alpha, c in f.terms.items()),
        Fraction(0),
    )


def format_qsym(f: QSymElem) -> str:
    """Render as e.g. ``M(2) + 2*M(1,1) - 1/2*M(3)``; zero prints as ``0``."""
    items = f.sorted_terms()
    if not items:
        return "0"
    pieces = []
    for i, (alpha, c) in enumerate(items):
        mag = abs(c)
        body = format_composition(alpha)
        text = f"M{body}" if mag == 1 else f"{mag}*M{body}"
        if i == 0:
            pieces.append(("-" if c < 0 else "") + text)
        else:
            pieces.append((" - " if c < 0 else " + ") + text)
    return "".join(pieces)


_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?M\(([\d,\s]*)\)$")


def parse_qsym(text: str) -> QSymElem:
    """Parse the output grammar of :func:`format_qsym`."""
    text = text.strip()
    if text == "0":
        return ZERO
    chunks = re.split(r"\s+(?=[+-]\s)", " " + text)
    # normalize: leading sign may be glued to the first term
    terms: Dict[Composition, Fraction] = {}
    for chunk in chunks:
        chunk = chunk.strip()
        sign = Fraction(1)
        if chunk.startswith("+"):
            chunk = chunk[1:].strip()
        elif chunk.startswith("-"):
            sign = Fraction(-1)
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse QSym term {chunk!r}")
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        parts = m.group(2).strip()
        alpha = (
            Composition(int(p) for p in parts.split(",")) if parts else Composition()
        )
        terms[alpha] = terms.get(alpha, Fraction(0)) + sign * coeff
    return QSymElem(terms)
