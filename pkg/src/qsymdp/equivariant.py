"""Finite group actions on double posets and orbit generating functions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .gamma import NotTertispecialError, WeightedDoublePoset, gamma
from .poset import DoublePoset, build, is_tertispecial, opposite1
from .qsym import QSymElem, ZERO, antipode_closed

Permutation = Tuple[int, ...]  # image indices over declaration order

DEFAULT_GROUP_CAP = 5040


class NotPreservingError(ValueError):
    """A generator fails to preserve an order relation or the weight."""

    def __init__(self, perm: Mapping[str, str], witness):
        self.perm = dict(perm)
        self.witness = witness
        super().__init__(f"permutation {self.perm} does not preserve {witness}")


class ClosureTooLargeError(RuntimeError):
    """Group closure exceeded the configured cap."""


@dataclass(frozen=True)
class GroupAction:
    """A full finite permutation group acting on a weighted double poset."""

    base: WeightedDoublePoset
    elements: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def apply(self, perm: Permutation, label: str) -> str:
        labels = self.base.poset.elements
        return labels[perm[labels.index(label)]]


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_from_mapping(base: WeightedDoublePoset, mapping: Mapping[str, str]) -> Permutation:
    labels = base.poset.elements
    idx = {e: i for i, e in enumerate(labels)}
    if set(mapping) != set(labels) or set(mapping.values()) != set(labels):
        raise ValueError(f"generator {dict(mapping)} is not a bijection of the ground set")
    return tuple(idx[mapping[e]] for e in labels)


def _validate_preserving(base: WeightedDoublePoset, perm: Permutation, mapping) -> None:
    labels = base.poset.elements
    img = {labels[i]: labels[perm[i]] for i in range(len(labels))}
    for rel_name, rel in (("lt1", base.poset.lt1), ("lt2", base.poset.lt2)):
        for a, b in rel:
            if (img[a], img[b]) not in rel:
                raise NotPreservingError(img, (rel_name, (a, b)))
    for e in labels:
        if base.w[img[e]] != base.w[e]:
            raise NotPreservingError(img, ("w", e))


def build_action(
    base: WeightedDoublePoset,
    generators: List[Mapping[str, str]],
    cap: int = DEFAULT_GROUP_CAP,
) -> GroupAction:
    """Materialize the group generated by the given permutations.

    Validates that every generator preserves <1, <2 and w; closure is bounded
    by ``cap``.
    """
    n = base.poset.size
    identity = tuple(range(n))
    gens = []
    for mapping in generators:
        perm = _perm_from_mapping(base, mapping)
        _validate_preserving(base, perm, mapping)
        gens.append(perm)
    group = {identity}
    frontier = [identity]
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = _compose(g, current)
            if nxt not in group:
                if len(group) >= cap:
                    raise ClosureTooLargeError(f"group closure exceeds cap {cap}")
                group.add(nxt)
                frontier.append(nxt)
    return GroupAction(base=base, elements=tuple(sorted(group)))


def orbits_of(perm: Permutation) -> List[Tuple[int, ...]]:
    """Cycles of a permutation, each sorted, ordered by minimum."""
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = perm[j]
        out.append(tuple(sorted(cycle)))
    return sorted(out)


@dataclass(frozen=True)
class QuotientPoset:
    """The double poset on g-orbits, with orbit weights summed."""

    orbits: Tuple[Tuple[str, ...], ...]
    quotient: DoublePoset
    wq: Mapping[str, int]


def _orbit_label(labels: Tuple[str, ...]) -> str:
    return "{" + ",".join(labels) + "}"


def quotient_by(g: Permutation, base: WeightedDoublePoset) -> QuotientPoset:
    """Quotient double poset E^g: u <i v iff some a in u, b in v have a <i b."""
    labels = base.poset.elements
    orbit_idx = orbits_of(g)
    orbits = tuple(tuple(labels[i] for i in cyc) for cyc in orbit_idx)
    names = tuple(_orbit_label(o) for o in orbits)
    of = {}  # element -> orbit name
    for name, orbit in zip(names, orbits):
        for e in orbit:
            of[e] = name
    lt1 = {(of[a], of[b]) for a, b in base.poset.lt1 if of[a] != of[b]}
    lt2 = {(of[a], of[b]) for a, b in base.poset.lt2 if of[a] != of[b]}
    # Closure is a no-op for a preserved action, but build() also re-checks
    # the order axioms (a CycleError here would mean g does not preserve <i).
    quotient = build(names, lt1, lt2)
    wq = {
        name: sum(base.w[e] for e in orbit) for name, orbit in zip(names, orbits)
    }
    return QuotientPoset(orbits=orbits, quotient=quotient, wq=wq)


def sign_of(g: Permutation) -> int:
    """Permutation sign, as (-1)^(|E| - number of cycles)."""
    return -1 if (len(g) - len(orbits_of(g))) % 2 else 1


def gamma_equivariant(a: GroupAction) -> QSymElem:
    """Gamma(E, w, G) = (1/|G|) sum over g of Gamma(E^g, w^g)."""
    acc = ZERO
    for g in a.elements:
        q = quotient_by(g, a.base)
        acc = acc + gamma(WeightedDoublePoset(poset=q.quotient, w=dict(q.wq)))
    return acc.scale(Fraction(1, a.order))


def gamma_plus(a: GroupAction) -> QSymElem:
    """Gamma+(E, w, G) = (1/|G|) sum over g of sign(g) Gamma(E^g, w^g)."""
    acc = ZERO
    for g in a.elements:
        q = quotient_by(g, a.base)
        term = gamma(WeightedDoublePoset(poset=q.quotient, w=dict(q.wq)))
        acc = acc + term.scale(sign_of(g))
    return acc.scale(Fraction(1, a.order))


def opposite1_action(a: GroupAction) -> GroupAction:
    """The same group acting on (E, >1, <2); permutations preserve >1 too."""
    flipped = WeightedDoublePoset(poset=opposite1(a.base.poset), w=dict(a.base.w))
    return GroupAction(base=flipped, elements=a.elements)


def equivariant_theorem_check(a: GroupAction) -> bool:
    """True iff S(Gamma(E,w,G)) = (-1)^|E| Gamma+((E,>1,<2),w,G)."""
    if not is_tertispecial(a.base.poset):
        raise NotTertispecialError("equivariant antipode theorem requires tertispecial base")
    lhs = antipode_closed(gamma_equivariant(a))
    rhs = gamma_plus(opposite1_action(a)).scale(Fraction(-1) ** a.base.poset.size)
    return lhs == rhs


def action_from_dict(base: WeightedDoublePoset, doc: Dict, cap: int = DEFAULT_GROUP_CAP) -> GroupAction:
    """Group JSON: {"generators": [{"a": "b", "b": "a"}]}."""
    try:
        gens = doc["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed group document: {exc}") from exc
    return build_action(base, [dict(g) for g in gens], cap=cap)


def action_from_json(base: WeightedDoublePoset, text: str, cap: int = DEFAULT_GROUP_CAP) -> GroupAction:
    return action_from_dict(base, json.loads(text), cap=cap)
