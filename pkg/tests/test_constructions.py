import dataclasses
import json
from collections import Counter

import pytest

from valuesets.carlitz import chain_table, decompose
from valuesets.constructions import (
    ConstructionReport,
    construct,
    cor3_i,
    cor3_ii,
    cor5_i,
    cor5_ii,
    cor5_iii,
    cor_small_n3,
    sweep,
    thm7_i,
    thm7_ii,
    thm7_iii,
    thm7_iv,
    thm8_coset,
    verify,
    _is_quarter,
    _pick_root,
)
from valuesets.errors import (
    BadCosetRep,
    BadParameter,
    CharacteristicTooSmall,
    CongruenceViolation,
    NoSuchRoot,
    NotAGenerator,
    OrderMismatch,
    ZeroParameter,
)
from valuesets.gf import order

from conftest import field


def observed(con):
    """Brute-force multiplicities of F = f + x, straight from the chain or table."""
    ctx = con.ctx
    tab = chain_table(con.chain if con.chain is not None else decompose(con.g, con.poles))
    return Counter(v + x for v, x in zip(tab, ctx.elements()))


def counts_of(mult, q):
    c = Counter(mult.values())
    c[0] = q - len(mult)
    return {i: v for i, v in c.items() if v}


def test_cor3_i_examples():
    F = field(13)
    m = observed(cor3_i(F, 1))
    assert set(m) == {F(0), F(12), F(11)}
    assert counts_of(m, 13) == {0: 10, 1: 2, 11: 1}
    F5 = field(5)
    assert set(observed(cor3_i(F5, 2))) == {F5(0), F5(3), F5(1)}


def test_cor3_ii_example():
    F = field(13)
    m = observed(cor3_ii(F, 3))
    assert set(F.elements()) - set(m) == {F(3), F(10)}
    assert set(observed(cor3_ii(F, 10))) == set(m)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25])
def test_cor3_all_c(q):
    F = field(q)
    for c in F.nonzero():
        m = observed(cor3_i(F, c))
        assert set(m) == {F.zero, -c, -2 * c}
        assert counts_of(m, q) == {0: q - 3, 1: 2, q - 2: 1}
        m = observed(cor3_ii(F, c))
        assert set(F.elements()) - set(m) == {c, -c}
        assert counts_of(m, q) == {0: 2, 1: q - 3, 3: 1}


def test_cor5_i_complete_mapping_f13():
    F = field(13)
    for c in F.nonzero():
        r = verify(cor5_i(F, c, 3))
        assert r.match and r.observed.size == 13
        assert sorted(v.value for v in chain_table(r.chain)) == list(range(13))


def test_cor5_ii_f17():
    F = field(17)
    for d in (F(3), F(12)):  # d + 1 in {4, 13}
        assert (d + 1) ** 2 == -1
        for c in F.nonzero():
            m = observed(cor5_ii(F, c, d))
            assert set(F.elements()) - set(m) == {d / c, (-d - 2) / c}
            assert max(m.values()) == 3 and m[-1 / c] == 3


def test_cor5_iii_f11():
    F = field(11)
    m = observed(cor5_iii(F, 1, 2))
    assert counts_of(m, 11) == {0: 3, 1: 6, 2: 1, 3: 1}
    d = F(2)
    assert set(F.elements()) - set(m) == {d * (d + 1), -(d + 1) ** 2, -d * d}


def test_cor6_example_and_range():
    F = field(13)
    m = observed(cor_small_n3(F, 1, 2))
    assert set(m) == {F(0), F(3), F(6), F(2)}
    assert counts_of(m, 13) == {0: 9, 1: 3, 10: 1}
    for q in (7, 11, 13):
        for r in sweep("cor6", field(q)):
            assert r.family == "cor6"
            assert len(observed(r)) == 4


def test_thm7_i_examples():
    F = field(13)
    con = thm7_i(F, 3)
    assert con.g.a == -1 and con.g.b == 3
    assert [x.value for x in con.poles.x] == [0, 1, 3]
    m = observed(con)
    assert set(m) == {F(0), F(3), F(4), F(5)}
    assert counts_of(m, 13) == {0: 9, 1: 3, 10: 1}
    assert len(observed(thm7_i(field(29), 4))) == 5
    with pytest.raises(CharacteristicTooSmall):
        thm7_i(F, 4)


def test_thm7_ii_examples():
    F = field(13)
    m = observed(thm7_ii(F, 4, 8, 1))
    assert len(m) == 9 and counts_of(m, 13) == {0: 4, 1: 8, 5: 1}
    m = observed(thm7_ii(F, 3, -3, 2))
    assert m[F(0)] == 4 and all(v == 1 for k, v in m.items() if k != 0)
    with pytest.raises(OrderMismatch):
        thm7_ii(F, 4, 1, 1)
    with pytest.raises(CongruenceViolation):
        thm7_ii(F, 5, 1, 1)


def test_thm7_iii_examples():
    F = field(13)
    for a in (4, 10):
        m = observed(thm7_iii(F, 3, a, 1))
        assert max(m.values()) <= 2 and len(m) >= 10
    F25 = field(25)
    for a in F25.nonzero():
        if order(a) == 8:
            assert max(observed(thm7_iii(F25, 4, a, 1)).values()) <= 2
    with pytest.raises(OrderMismatch):
        thm7_iii(F, 3, 3, 1)  # order 3, not 6


def test_thm7_iv_examples():
    F = field(13)
    m = observed(thm7_iv(F, 4, 2))
    assert m == {F(0): 3, F(2): 9, F(8): 1}
    F25 = field(25)
    for b in F25.nonzero():
        assert len(observed(thm7_iv(F25, 5, b))) == 2
    F7 = field(7)
    assert set(observed(thm7_iv(F7, 3, 1))) == {F7(0), F7(1), F7(3)}


def test_coset_examples():
    F = field(13)
    con = thm8_coset(F, 3, 2)
    m = observed(con)
    assert set(F.elements()) - set(m) == {F(2), F(6), F(5)}
    a, b = con.g.a, con.g.b
    assert {(-b / a) * (-1 / a) ** (3 - i) for i in range(1, 4)} == {F(2), F(6), F(5)}
    with pytest.raises(BadCosetRep):
        thm8_coset(F, 3, 1)
    with pytest.raises(BadCosetRep):
        thm8_coset(F, 3, 0)
    with pytest.raises(NotAGenerator):
        thm8_coset(F, 1, 2)


def test_generator_errors():
    F = field(13)
    with pytest.raises(ZeroParameter):
        cor3_i(F, 0)
    with pytest.raises(CongruenceViolation):
        cor5_i(field(11), 1)
    with pytest.raises(BadParameter):
        cor5_i(F, 1, 2)  # 2 is not a cube root of unity mod 13
    # -1 is a non-square mod 7, so (d+1)^2 = -1 has no solution
    with pytest.raises(NoSuchRoot):
        _pick_root(field(7), None, _is_quarter, "root")
    with pytest.raises(CongruenceViolation):
        cor5_iii(F, 1, 2)
    with pytest.raises(BadParameter):
        cor5_iii(field(11), 1, -1)
    with pytest.raises(BadParameter):
        cor_small_n3(F, 1, 1)
    with pytest.raises(BadParameter):
        construct("cor3i", F, c=1, d=2)


@pytest.mark.parametrize("family, qs", [
    ("cor3i", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]),
    ("cor3ii", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]),
    ("cor5i", [7, 13, 19, 25]),
    ("cor5ii", [5, 17, 29]),
    ("cor5iii", [11, 23]),
    ("cor6", [7, 9, 11, 13, 17, 19, 23, 25, 27, 29]),
    ("thm7i", [7, 11, 13, 17, 19, 23, 29]),
    ("thm7ii", [5, 7, 9, 11, 13, 17, 19, 25, 29]),
    ("thm7iii", [5, 7, 9, 13, 17, 25, 29]),
    ("thm7iv", [5, 7, 9, 11, 13, 25, 27]),
    ("coset", [5, 7, 9, 11, 13, 25]),
])
def test_every_generator_matches_over_its_range(family, qs):
    total = 0
    for q in qs:
        for con in sweep(family, field(q)):
            r = verify(con)
            assert r.match, (family, q, con.params, r.mismatches)
            total += 1
    assert total > 0


def test_thm7_ii_multiplicity_remark():
    for q in (13, 25):
        for con in sweep("thm7ii", field(q)):
            n = con.params["n"]
            m = observed(con)
            assert m[con.ctx.zero] == n + 1
            assert sum(1 for v in m.values() if v > 1) == 1


def test_corrupted_prediction_single_mismatch():
    con = thm7_iv(field(13), 4, 2)
    F = con.ctx
    bad = dataclasses.replace(con.predicted, mult={**con.predicted.mult, F(8): 2})
    r = verify(dataclasses.replace(con, predicted=bad))
    assert not r.match and len(r.mismatches) == 1
    assert r.mismatches[0].startswith("m(8)")


def test_report_round_trip():
    for con in (cor3_ii(field(25), [1, 2]), thm7_iii(field(13), 3, 4, 1), thm8_coset(field(13), 3, 2)):
        r = verify(con)
        blob = json.dumps(r.to_json(), sort_keys=True)
        back = ConstructionReport.from_json(json.loads(blob))
        assert json.dumps(back.to_json(), sort_keys=True) == blob
        assert back.match == r.match
