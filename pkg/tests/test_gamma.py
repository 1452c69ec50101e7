import itertools
import json
import random

import pytest

from qsymdp.compositions import Composition, compositions_of
from qsymdp.gamma import (
    NotTertispecialError,
    WeightedDoublePoset,
    antipode_theorem_check,
    ev_w,
    gamma,
    gamma_coproduct_check,
    gamma_product_check,
    is_epartition,
    is_epartition_covers,
    packed_epartitions,
    weighted_from_json,
)
from qsymdp.oracles import epartitions_into, gamma_truncation_matches
from qsymdp.poset import build, is_tertispecial
from qsymdp.qsym import monomial

from conftest import all_double_posets, random_tertispecial_posets


def chain(n, strict=False):
    labs = [chr(ord("a") + i) for i in range(n)]
    gens = list(zip(labs, labs[1:]))
    lt2 = [(b, a) for a, b in gens] if strict else gens
    return WeightedDoublePoset(poset=build(labs, gens, lt2), w={})


def test_weight_defaults_to_all_ones():
    d = WeightedDoublePoset(poset=build("ab", [], []), w={})
    assert d.w == {"a": 1, "b": 1}
    assert d.degree == 2


def test_weight_validation():
    p = build("ab", [], [])
    with pytest.raises(ValueError):
        WeightedDoublePoset(poset=p, w={"a": 1})
    with pytest.raises(ValueError):
        WeightedDoublePoset(poset=p, w={"a": 1, "b": 0})


def test_is_epartition_chain():
    d = chain(2)  # a <1 b, a <2 b: weak increase suffices
    assert is_epartition(d, {"a": 1, "b": 1})
    assert not is_epartition(d, {"a": 2, "b": 1})
    s = chain(2, strict=True)  # <2 reversed: strict increase required
    assert not is_epartition(s, {"a": 1, "b": 1})
    assert is_epartition(s, {"a": 1, "b": 2})


def test_covers_test_matches_full_test_on_tertispecial():
    for d in all_double_posets(3):
        if not is_tertispecial(d):
            continue
        wd = WeightedDoublePoset(poset=d, w={})
        for values in itertools.product((1, 2, 3), repeat=3):
            pi = dict(zip(d.elements, values))
            assert is_epartition(wd, pi) == is_epartition_covers(wd, pi)


def test_covers_test_rejects_non_tertispecial():
    d = WeightedDoublePoset(poset=build("ab", [("a", "b")], []), w={})
    with pytest.raises(NotTertispecialError):
        is_epartition_covers(d, {"a": 1, "b": 1})


def test_packed_epartitions_antichain():
    d = WeightedDoublePoset(poset=build("ab", [], []), w={})
    packed = packed_epartitions(d)
    assert len(packed) == 3  # {a:1,b:1}, {a:1,b:2}, {a:2,b:1}
    assert all(sorted(set(p.as_dict().values())) == list(range(1, p.k + 1)) for p in packed)


def test_packed_epartitions_empty():
    d = WeightedDoublePoset(poset=build([], [], []), w={})
    assert gamma(d) == monomial(Composition())


def test_ev_w():
    d = WeightedDoublePoset(poset=build("ab", [], []), w={"a": 2, "b": 3})
    for phi in packed_epartitions(d):
        alpha = ev_w(d, phi)
        assert sum(alpha) == 5


def test_gamma_chain_is_single_monomial():
    # Example: a <1-chain with strict <2-reversal carrying weights (a1,...,ak)
    # has exactly one packed partition, so Gamma = M_alpha.
    for alpha in [a for n in range(6) for a in compositions_of(n)]:
        labs = [f"e{i}" for i in range(len(alpha))]
        gens = list(zip(labs, labs[1:]))
        lt2 = [(b, a) for a, b in gens]
        d = WeightedDoublePoset(
            poset=build(labs, gens, lt2), w=dict(zip(labs, alpha))
        )
        assert gamma(d) == monomial(Composition(alpha))


def test_gamma_matches_bruteforce_truncation():
    rng = random.Random(20240817)
    for n in range(4):
        for d in all_double_posets(n):
            for w in ({}, {e: rng.randint(1, 2) for e in d.elements}):
                wd = WeightedDoublePoset(poset=d, w=w)
                assert gamma_truncation_matches(wd, gamma(wd), n + 1)


def test_packed_count_matches_bruteforce_packed_filter():
    for d in all_double_posets(3):
        wd = WeightedDoublePoset(poset=d, w={})
        packed = {tuple(sorted(p.as_dict().items())) for p in packed_epartitions(wd)}
        brute = set()
        for pi in epartitions_into(wd, 3):
            image = sorted(set(pi.values()))
            if image == list(range(1, len(image) + 1)):
                brute.add(tuple(sorted(pi.items())))
        assert packed == brute


def test_antipode_theorem_true_on_tertispecial():
    for d in all_double_posets(3):
        if is_tertispecial(d):
            assert antipode_theorem_check(WeightedDoublePoset(poset=d, w={}))
    rng = random.Random(7)
    for d in random_tertispecial_posets(4, 25):
        w = {e: rng.randint(1, 2) for e in d.elements}
        assert antipode_theorem_check(WeightedDoublePoset(poset=d, w=w))


def test_antipode_theorem_fails_on_designated_example():
    # a <1 b with empty <2 is not tertispecial and the identity fails
    d = WeightedDoublePoset(poset=build("ab", [("a", "b")], []), w={})
    assert not antipode_theorem_check(d)


def test_gamma_coproduct_rule():
    for n in range(4):
        for d in all_double_posets(n):
            assert gamma_coproduct_check(WeightedDoublePoset(poset=d, w={}))


def test_gamma_product_rule_sampled():
    rng = random.Random(3)
    pool2 = all_double_posets(2)
    pool3 = all_double_posets(3)
    samples = [(rng.choice(pool2), rng.choice(pool3)) for _ in range(10)]
    samples += [(rng.choice(pool2), rng.choice(pool2)) for _ in range(10)]
    for d1, d2 in samples:
        w1 = {e: rng.randint(1, 2) for e in d1.elements}
        w2 = {e: rng.randint(1, 2) for e in d2.elements}
        assert gamma_product_check(
            WeightedDoublePoset(poset=d1, w=w1),
            WeightedDoublePoset(poset=d2, w=w2),
        )


def test_weighted_from_json():
    doc = {
        "elements": ["a", "b"],
        "lt1": [["a", "b"]],
        "lt2": [["b", "a"]],
        "w": {"a": 2, "b": 1},
    }
    d = weighted_from_json(json.dumps(doc))
    assert d.w == {"a": 2, "b": 1}
    assert gamma(d) == monomial(Composition([2, 1]))
    doc.pop("w")
    assert weighted_from_json(json.dumps(doc)).w == {"a": 1, "b": 1}
