import itertools
import math
from fractions import Fraction

import pytest

from oracles import as_fraction, solve_expansion
from petersonschubert import peterson
from petersonschubert.billey import TMonomial, billey_specialized
from petersonschubert.row_words import row_longest_word
from petersonschubert.peterson import (
    PetersonContext, VerificationError, basis_table, context, dumps, fixed_points,
    giambelli, localization, monk, peterson_class, scan_nonintegral, v_of, v_word,
)
from petersonschubert.roots import all_subsets, build_root_system, cartan_matrix, classify_subset
from petersonschubert.weyl import canonical_word, element_of, length, longest_element

THROUGH_RANK_5 = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5",
                  "C2", "C3", "C4", "C5", "D4", "D5", "F4", "G2"]
EVERY_TYPE = THROUGH_RANK_5 + ["A6", "B6", "C6", "D6", "E6", "E7", "E8"]


def t(c, d):
    return TMonomial(Fraction(c), d)


def test_fixed_points_examples():
    a1 = build_root_system("A1")
    assert fixed_points(a1) == [(frozenset(), ()), (frozenset({1}), (1,))]
    assert len(fixed_points(build_root_system("C3"))) == 8
    g2 = build_root_system("G2")
    fps = fixed_points(g2)
    assert [K for K, _ in fps] == all_subsets(2)
    assert [element_of(g2, w) for _, w in fps] == [
        element_of(g2, w) for w in [(), (1,), (2,), (1, 2, 1, 2, 1, 2)]]


def test_v_of_examples():
    e6 = build_root_system("E6")
    K = {1, 2, 3, 4, 5}
    assert v_word(e6, K) == (1, 3, 4, 2, 5)
    assert v_of(e6, K) == element_of(e6, (1, 3, 4, 5, 2))
    assert v_of(e6, set()) == element_of(e6, ())
    assert v_word(build_root_system("A5"), {1, 2, 4, 5}) == (1, 2, 4, 5)


@pytest.mark.parametrize("name", EVERY_TYPE)
def test_v_is_a_coxeter_element_of_the_parabolic(name):
    rs = build_root_system(name)
    for K in all_subsets(rs.rank):
        word = v_word(rs, K)
        assert sorted(word) == sorted(K)
        assert length(rs, v_of(rs, K)) == len(K)
        if name[0] in "ABC":
            assert list(word) == sorted(K)


def test_localization_examples():
    c3 = build_root_system("C3")
    assert localization(c3, {2, 3}, {1, 2, 3}) == t(36, 2)
    assert localization(c3, {1, 3}, {1, 3}) == t(1, 2)
    assert localization(c3, {1, 2}, {2, 3}).is_zero
    assert str(localization(c3, {1, 2, 3}, {1, 2, 3})) == "60 t^3"


@pytest.mark.parametrize("name", THROUGH_RANK_5)
def test_basis_table_is_triangular(name):
    rs = build_root_system(name)
    table = basis_table(rs)
    subs = table.fixed_points
    for r, K in enumerate(subs):
        for c, J in enumerate(table.classes):
            m = table.matrix[r][c]
            word = canonical_word(rs, longest_element(rs, K))
            # the J-not-in-K shortcut agrees with the dynamic program
            assert m == billey_specialized(rs, v_of(rs, J), word)
            if not J <= K:
                assert m.is_zero
            elif J == K:
                assert m.degree == len(K)
                assert m.coeff > 0 and m.coeff.denominator == 1
            if not m.is_zero:
                assert m.degree == len(J)


def test_basis_table_small():
    a1 = basis_table(build_root_system("A1"))
    assert a1.matrix == ((t(1, 0), t(0, 1)), (t(1, 0), t(1, 1)))
    g2 = basis_table(build_root_system("G2"))
    cols = [[g2.matrix[r][c] for r in range(4)] for c in range(4)]
    assert cols == [[t(1, 0)] * 4, [t(0, 1), t(1, 1), t(0, 1), t(6, 1)],
                    [t(0, 1), t(0, 1), t(1, 1), t(10, 1)],
                    [t(0, 2), t(0, 2), t(0, 2), t(30, 2)]]


def test_peterson_class():
    c3 = build_root_system("C3")
    pc = peterson_class(c3, {2, 3})
    assert pc.subset.type_label == "C2"
    assert pc.localizations[frozenset({1, 2, 3})] == t(36, 2)
    assert sum(1 for m in pc.localizations.values() if m) == 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4"])
def test_monk_matches_independent_solve(name):
    rs = build_root_system(name)
    subs = all_subsets(rs.rank)
    basis = {J: {L: localization(rs, J, L) for L in subs} for J in subs}
    for K in subs:
        for i in range(1, rs.rank + 1):
            exp = monk(rs, i, K)
            values = {L: localization(rs, {i}, L) * localization(rs, K, L) for L in subs}
            solved = solve_expansion(values, basis, subs)
            assert set(solved) <= {K} | set(exp.terms)
            assert solved.get(K, TMonomial.zero()) == exp.diagonal
            assert exp.diagonal == localization(rs, {i}, K)
            for J, c in exp.terms.items():
                assert as_fraction(solved.get(J, Fraction(0))) == c
                assert c >= 0
                if i not in J:
                    assert c == 0
            assert sorted(map(sorted, exp.terms)) == sorted(
                sorted(K | {a}) for a in range(1, rs.rank + 1) if a not in K)


def test_monk_examples():
    d5 = build_root_system("D5")
    assert monk(d5, 5, {1, 2, 3, 4}).terms[frozenset(range(1, 6))] == Fraction(5, 2)
    a1 = monk(build_root_system("A1"), 1, {1})
    assert a1.diagonal == t(1, 1) and a1.terms == {}
    c3 = monk(build_root_system("C3"), 1, {2})
    assert c3.diagonal.is_zero
    # (2t - 0) * 2t / 2t^2 from the C3 table
    assert c3.terms == {frozenset({1, 2}): Fraction(2), frozenset({2, 3}): Fraction(0)}


@pytest.mark.parametrize("name", ["A4", "D4"])
def test_disconnected_product(name):
    rs = build_root_system(name)
    subs = all_subsets(rs.rank)
    checked = 0
    for J, K in itertools.product(subs, repeat=2):
        if J & K or any(rs.cartan[a - 1][b - 1] for a in J for b in K):
            continue
        checked += 1
        for L in subs:
            assert localization(rs, J | K, L) == localization(rs, J, L) * localization(rs, K, L)
    assert checked > 20


def family_constant(comp_type, k):
    if comp_type.family == "D":
        return Fraction(math.factorial(k), 2)
    if comp_type.family == "E":
        return Fraction(math.factorial(k), 3)
    return Fraction(math.factorial(k))


@pytest.mark.parametrize("name", EVERY_TYPE)
def test_giambelli_family_constants(name):
    rs = build_root_system(name)
    for K in all_subsets(rs.rank):
        cert = giambelli(rs, K)
        expected = Fraction(1)
        for comp in cert.K.components:
            expected *= family_constant(comp.lie_type, len(comp.indices))
        assert cert.constant == expected


@pytest.mark.parametrize("name, K, constant", [
    ("G2", {1, 2}, 2), ("F4", {1, 2, 3, 4}, 24), ("E6", range(1, 7), 240),
    ("A3", {1}, 1), ("D4", {1, 2, 3, 4}, 12), ("A4", {1, 2, 4}, 2)])
def test_giambelli_examples(name, K, constant):
    cert = giambelli(build_root_system(name), K)
    assert cert.constant == constant


def test_f4_subset_with_nonascending_word():
    f4 = build_root_system("F4")
    K = {2, 3, 4}
    assert v_word(f4, K) == (4, 3, 2)
    ascending = element_of(f4, (2, 3, 4))
    for L in all_subsets(4):
        word = canonical_word(f4, longest_element(f4, L))
        assert localization(f4, K, L) == billey_specialized(f4, ascending, word)
    assert giambelli(f4, K).constant == 6


def automorphisms(lie_type):
    std = cartan_matrix(lie_type)
    k = lie_type.rank
    for perm in itertools.permutations(range(k)):
        if all(std[perm[a]][perm[b]] == std[a][b] for a in range(k) for b in range(k)):
            yield perm


@pytest.mark.parametrize("name", ["D4", "D5", "D6", "E6"])
def test_localizations_ignore_fork_relabeling(name):
    rs = build_root_system(name)
    subs = all_subsets(rs.rank)
    seen = 0
    for K in subs:
        comps = classify_subset(rs, K).components
        for n, comp in enumerate(comps):
            if comp.lie_type.family != "D":
                continue
            for perm in automorphisms(comp.lie_type):
                alt = [comp.ordered[perm[a]] for a in range(len(comp.ordered))]
                word = [i for m, c in enumerate(comps)
                        for i in (alt if m == n else c.ordered)]
                v = element_of(rs, word)
                seen += 1
                for L in subs:
                    w_word = canonical_word(rs, longest_element(rs, L))
                    assert billey_specialized(rs, v, w_word) == localization(rs, K, L)
    assert seen > 0


def test_d4_triality_changes_the_word_not_the_values():
    d4 = build_root_system("D4")
    perms = list(automorphisms(classify_subset(d4, range(1, 5)).components[0].lie_type))
    assert len(perms) == 6
    words = {tuple(1 + p[a] for a in range(4)) for p in perms}
    assert len({element_of(d4, w) for w in words}) > 1


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "A5", "B2", "C2", "C3", "C4", "C5",
                                  "D4", "G2"])
def test_scan_empty(name):
    assert scan_nonintegral(build_root_system(name)) == []


@pytest.mark.parametrize("name, expected", [
    ("B3", [(3, {2, 3}, {1, 2, 3}, Fraction(3, 2))]),
    ("B4", [(4, {3, 4}, {2, 3, 4}, Fraction(3, 2))]),
    ("B5", [(5, {4, 5}, {3, 4, 5}, Fraction(3, 2)),
            (5, {1, 4, 5}, {1, 3, 4, 5}, Fraction(3, 2)),
            (5, {2, 3, 4, 5}, {1, 2, 3, 4, 5}, Fraction(5, 2))]),
    ("F4", [(3, {2, 3}, {1, 2, 3}, Fraction(3, 2))]),
])
def test_scan_finds_half_integers_in_type_b(name, expected):
    found = scan_nonintegral(build_root_system(name))
    assert found == [(i, frozenset(K), frozenset(J), c) for i, K, J, c in expected]


def test_b3_half_integer_by_hand():
    # (p_s3(w_123) - p_s3(w_23)) * p_v23(w_123) / p_v123(w_123) = (6 - 3) * 30 / 60
    b3 = build_root_system("B3")
    full = {1, 2, 3}
    assert localization(b3, {3}, full) == t(6, 1)
    assert localization(b3, {3}, {2, 3}) == t(3, 1)
    assert localization(b3, {2, 3}, full) == t(30, 2)
    assert localization(b3, full, full) == t(60, 3)
    assert monk(b3, 3, {2, 3}).terms[frozenset(full)] == Fraction(3, 2)


def test_scan_d5():
    found = scan_nonintegral(build_root_system("D5"))
    assert (5, frozenset({1, 2, 3, 4}), frozenset(range(1, 6)), Fraction(5, 2)) in found
    assert all(c.denominator != 1 for *_, c in found)


def test_row_words_give_the_same_table():
    for name in ["C3", "D5", "F4", "G2", "E6"]:
        rs = build_root_system(name)
        assert basis_table(rs, paper_words=True).matrix == basis_table(rs).matrix
        for K in all_subsets(rs.rank):
            assert element_of(rs, row_longest_word(rs, K)) == longest_element(rs, K)


def test_verification_failure_is_raised(monkeypatch):
    a2 = build_root_system("A2")
    bad = PetersonContext(a2)
    full = frozenset({1, 2})
    bad._loc[(full, full)] = TMonomial(7, 2)
    monkeypatch.setattr(peterson, "context", lambda rs, paper_words=False: bad)
    with pytest.raises(VerificationError):
        giambelli(a2, full)

    a3 = build_root_system("A3")
    bad = PetersonContext(a3)
    # only read when checking the expansion at w_{1,2}
    bad._loc[(frozenset({1}), frozenset({1, 2}))] = TMonomial(97, 1)
    monkeypatch.setattr(peterson, "context", lambda rs, paper_words=False: bad)
    with pytest.raises(VerificationError):
        monk(a3, 2, {1})


def test_context_is_order_independent():
    rs = build_root_system("B3")
    fresh = PetersonContext(rs)
    subs = all_subsets(3)
    for J, K in reversed(list(itertools.product(subs, repeat=2))):
        assert fresh.loc(J, K) == context(rs).loc(J, K)


def test_json_shapes():
    rs = build_root_system("D5")
    exp = monk(rs, 5, {1, 2, 3, 4}).to_dict()
    assert exp["terms"] == [{"J": [1, 2, 3, 4, 5], "coeff": {"num": "5", "den": "2"}}]
    assert exp["diagonal"] == {"num": "0", "den": "1", "deg": 1}
    cert = giambelli(build_root_system("E6"), {1, 2, 3, 4, 5}).to_dict()
    assert cert["constant"] == {"num": "60", "den": "1"}
    assert cert["components"] == [{"indices": [1, 2, 3, 4, 5], "type": "D5"}]
    table = basis_table(build_root_system("A1")).to_dict()
    assert dumps(table) == (
        '{"classes":[[],[1]],"fixed_points":[[],[1]],"matrix":[[{"deg":0,"den":"1","num":"1"},'
        '{"deg":1,"den":"1","num":"0"}],[{"deg":0,"den":"1","num":"1"},'
        '{"deg":1,"den":"1","num":"1"}]],"type":"A1"}')
