"""Group engine: classification, finite-group cross-checks, and frozen examples.

Three classical finite quotients pin the whole stack down: bonds (3,3) give
the symmetric group on four letters (order 24, longest element of length 6),
(4,3) the hyperoctahedral group of rank 3 (order 48, length 9), and (5,3) the
full icosahedral reflection group (order 120, length 15).  An engine that gets
all three orders, diameters, and stratum shapes right has no room left for a
word-problem bug at these scales.
"""

import itertools

import pytest

from heckebound import (
    CoxeterGroup,
    GroupParams,
    InfiniteParabolicError,
    TheoremCase,
    WordLengthCapError,
)
from heckebound.coxeter import R, S, T
from heckebound.words import CacheParametersError, NotReducedError, word_from_text
from oracles import oracle_bruhat_leq, oracle_moves, oracle_reduced_words


# ----- parameters and case classification -----------------------------------------

@pytest.mark.parametrize("m_sr,m_st,case,bound", [
    (7, 3, TheoremCase.CASE_A, 7),
    (8, 3, TheoremCase.CASE_A, 8),
    (12, 3, TheoremCase.CASE_A, 12),
    (5, 4, TheoremCase.CASE_B, 5),
    (5, 5, TheoremCase.CASE_B, 5),
    (6, 4, TheoremCase.CASE_B, 6),
    (5, 9, TheoremCase.CASE_B, 9),
    (3, 3, TheoremCase.OUT_OF_SCOPE, None),
    (4, 3, TheoremCase.OUT_OF_SCOPE, None),
    (5, 3, TheoremCase.OUT_OF_SCOPE, None),
    (6, 3, TheoremCase.OUT_OF_SCOPE, None),
    (4, 4, TheoremCase.OUT_OF_SCOPE, None),
    (3, 7, TheoremCase.OUT_OF_SCOPE, None),
])
def test_case_classification(m_sr, m_st, case, bound):
    params = GroupParams(m_sr, m_st)
    assert params.case is case
    assert params.degree_bound() == bound
    assert params.M_TR == 2


@pytest.mark.parametrize("bad", [(2, 3), (3, 2), (True, 3), (3, "4"), (3.0, 3)])
def test_params_reject_bad_bonds(bad):
    with pytest.raises(ValueError):
        GroupParams(*bad)


def test_group_accepts_keyword_bonds():
    g = CoxeterGroup(m_sr=7, m_st=3)
    assert g.params == GroupParams(7, 3)


# ----- finite quotients as ground truth -------------------------------------------

@pytest.mark.parametrize("m_sr,order,diameter", [(3, 24, 6), (4, 48, 9), (5, 120, 15)])
def test_finite_group_orders_and_diameters(m_sr, order, diameter, request):
    group = request.getfixturevalue(f"group{m_sr}3")
    elems = group.enumerate_up_to(diameter + 2)
    assert len(elems) == order
    assert max(e.length for e in elems) == diameter
    assert group.stratum(diameter + 1) == []
    # the top stratum is the single longest element: full descents, self-inverse
    (w0,) = group.stratum(diameter)
    assert w0.right_descents == {S, T, R}
    assert group.inverse(w0) is w0


def test_strata_counts_7_3(group73):
    assert [len(group73.stratum(n)) for n in range(9)] == [1, 3, 5, 7, 9, 12, 16, 20, 24]


def test_stratum_2_count_7_3(group73):
    # exactly st, ts, sr, rs, tr survive at length 2 (tt/ss/rr collapse, rt = tr)
    texts = [e.text for e in group73.stratum(2)]
    assert texts == ["st", "sr", "ts", "tr", "rs"]


# ----- frozen operation examples ---------------------------------------------------

def test_neutral(group73):
    e = group73.neutral()
    assert e.length == 0
    assert e.text == ""
    assert e.left_descents == frozenset()
    assert e.right_descents == frozenset()
    assert group73.multiply(e, e) is e


def test_multiply_gen_examples(group73):
    e = group73.neutral()
    s = group73.element("s")
    assert group73.multiply_gen(e, S) is s
    assert group73.multiply_gen(s, S) is e
    assert group73.multiply_gen(group73.element("t"), R).text == "tr"
    assert group73.multiply_gen(s, T, side="left").text == "ts"
    with pytest.raises(ValueError):
        group73.multiply_gen(s, S, side="sideways")


def test_multiply_examples(group73):
    e = group73.neutral()
    st = group73.element("st")
    ts = group73.element("ts")
    assert group73.multiply(st, e) is st
    assert group73.multiply(group73.element("s"), group73.element("s")) is e
    # st * ts = s(tt)s = ss = e, and symmetrically ts * st = e
    assert group73.multiply(st, ts) is e
    assert group73.multiply(ts, st) is e
    # stst = (sts)t = (tst)t = ts
    assert group73.multiply(st, st).text == "ts"


def test_inverse_examples(group73):
    e = group73.neutral()
    assert group73.inverse(e) is e
    assert group73.inverse(group73.element("st")).text == "ts"
    sts = group73.element("sts")
    assert group73.inverse(sts) is sts   # sts = tst is self-inverse


def test_descent_examples(group73):
    sts = group73.element("sts")
    assert group73.descents(sts, side="right") == {S, T}
    assert group73.descents(sts, side="left") == {S, T}
    assert group73.has_descent(sts, S) and not group73.has_descent(sts, R)
    st = group73.element("st")
    assert st.right_descents == {T}
    assert st.left_descents == {S}


def test_descent_sets_small_in_infinite_groups(group73):
    for w in group73.enumerate_up_to(7):
        if w.length:
            assert 1 <= len(w.right_descents) <= 2
            assert 1 <= len(w.left_descents) <= 2


def test_longest_parabolic(group73):
    assert group73.longest_parabolic((T, R)).text == "tr"
    assert group73.longest_parabolic((S, T)).text == "sts"
    w_sr = group73.longest_parabolic((S, R))
    assert w_sr.length == 7
    assert w_sr.right_descents == {S, R}
    assert group73.longest_parabolic(()).length == 0
    assert group73.longest_parabolic((T,)).text == "t"
    with pytest.raises(InfiniteParabolicError):
        group73.longest_parabolic((S, T, R))
    with pytest.raises(ValueError):
        group73.longest_parabolic((0, 7))


def test_parabolic_elements(group73):
    tr_part = group73.parabolic_elements((T, R))
    assert [e.text for e in tr_part] == ["", "t", "r", "tr"]
    sr_part = group73.parabolic_elements((S, R))
    assert len(sr_part) == 14    # dihedral of order 2 * m_sr
    assert group73.parabolic_elements((S,)) == [group73.neutral(), group73.element("s")]
    assert group73.parabolic_elements(()) == [group73.neutral()]
    with pytest.raises(InfiniteParabolicError):
        group73.parabolic_elements((S, T, R))


def test_parabolic_decompose_examples(group73):
    e = group73.neutral()
    assert group73.parabolic_decompose(e, (S, R)) == (e, e)
    st = group73.element("st")
    assert group73.parabolic_decompose(st, (S, R), side="right") == (st, e)
    x1, u = group73.parabolic_decompose(group73.element("ts"), (S, R), side="right")
    assert (x1.text, u.text) == ("t", "s")
    u, x1 = group73.parabolic_decompose(group73.element("ts"), (T, R), side="left")
    assert (u.text, x1.text) == ("t", "s")
    with pytest.raises(ValueError):
        group73.parabolic_decompose(st, (S, R), side="down")


def test_parabolic_decompose_is_length_additive(group73):
    pairs = [(S, R), (S, T), (T, R)]
    for w in group73.enumerate_up_to(6):
        for gens in pairs:
            gset = frozenset(gens)
            x1, u = group73.parabolic_decompose(w, gens, side="right")
            assert group73.multiply(x1, u) is w
            assert x1.length + u.length == w.length
            assert not (x1.right_descents & gset)
            assert set(u.word) <= gset
            u2, y1 = group73.parabolic_decompose(w, gens, side="left")
            assert group73.multiply(u2, y1) is w
            assert u2.length + y1.length == w.length
            assert not (y1.left_descents & gset)
            assert set(u2.word) <= gset


# ----- suffixes ---------------------------------------------------------------------

def test_ends_with_reduced_examples(group73):
    sts = group73.element("sts")
    st = group73.element("st")
    assert group73.ends_with_reduced(sts, b"")
    assert group73.ends_with_reduced(st, "st")
    assert group73.ends_with_reduced(sts, "ts")   # sts = s * ts
    assert group73.ends_with_reduced(sts, "st")   # sts = tst = t * st
    assert group73.ends_with_reduced(st, "t")
    assert not group73.ends_with_reduced(st, "s")
    assert not group73.ends_with_reduced(st, "sts")
    with pytest.raises(NotReducedError):
        group73.ends_with_reduced(sts, "ss")


def test_starts_with_reduced(group73):
    sts = group73.element("sts")
    assert group73.starts_with_reduced(sts, "st")
    assert group73.starts_with_reduced(sts, "ts")   # via tst
    assert not group73.starts_with_reduced(group73.element("ts"), "s")


def test_ends_with_reduced_agrees_with_length_arithmetic(group73):
    window = group73.enumerate_up_to(5)
    suffixes = [w for w in group73.enumerate_up_to(3) if w.length]
    for w in window:
        for sfx in suffixes:
            direct = group73.ends_with_reduced(w, sfx.word)
            shorter = group73.multiply(w, group73.inverse(sfx))
            assert direct == (shorter.length + sfx.length == w.length)


# ----- reduction, equality, closure -------------------------------------------------

def test_reduce_examples(group73):
    assert group73.reduce("trt").text == "r"
    assert group73.reduce([1, 0, 1]).text == "sts"
    assert group73.element("").length == 0
    assert group73.equal("st", "st")
    assert group73.equal("tr", "rt")
    assert not group73.equal("st", "ts")
    assert group73.is_reduced("srs")
    assert not group73.is_reduced("trt")


def test_braid_closure_requires_reduced(group73):
    assert group73.braid_closure("sts") == {word_from_text("sts"), word_from_text("tst")}
    with pytest.raises(NotReducedError):
        group73.braid_closure("ss")


def test_word_length_cap():
    group = CoxeterGroup(GroupParams(7, 3), max_word_length=5)
    assert group.reduce("s" * 5).length in (0, 1)
    with pytest.raises(WordLengthCapError):
        group.reduce("st" * 3)
    with pytest.raises(WordLengthCapError):
        group.is_reduced("s" * 6)


# ----- enumeration invariants --------------------------------------------------------

def test_enumerate_up_to_small(group73):
    assert [e.text for e in group73.enumerate_up_to(0)] == [""]
    assert [e.text for e in group73.enumerate_up_to(1)] == ["", "s", "t", "r"]


def test_enumeration_sorted_unique_and_closed(group73):
    elems = group73.enumerate_up_to(5)
    keys = [e.sort_key for e in elems]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    bigger = set(group73.enumerate_up_to(6))
    for w in elems:
        for g in (S, T, R):
            assert group73.multiply_gen(w, g) in bigger


def test_exactly_one_length_change(group73):
    for w in group73.enumerate_up_to(6):
        for g in (S, T, R):
            assert abs(group73.multiply_gen(w, g).length - w.length) == 1
            assert abs(group73.multiply_gen(w, g, side="left").length - w.length) == 1


def test_inverse_is_an_involution_preserving_length(group73):
    for w in group73.enumerate_up_to(6):
        wi = group73.inverse(w)
        assert wi.length == w.length
        assert group73.inverse(wi) is w
        assert w.left_descents == wi.right_descents


def test_descent_parabolic_factorization(group73):
    # removing the longest element of any descent subset costs exactly its length
    for w in group73.enumerate_up_to(6):
        rd = sorted(w.right_descents)
        for k in (1, 2):
            for gens in itertools.combinations(rd, k):
                w_i = group73.longest_parabolic(gens)
                prod = group73.multiply(w, w_i)
                assert prod.length == w.length - w_i.length


# ----- Bruhat order -------------------------------------------------------------------

def test_bruhat_examples(group73):
    e = group73.neutral()
    sts = group73.element("sts")
    assert group73.bruhat_leq(e, sts)
    assert group73.bruhat_leq(group73.element("s"), group73.element("st"))
    assert not group73.bruhat_leq(group73.element("r"), sts)
    assert group73.bruhat_leq(sts, sts)
    assert not group73.bruhat_leq(sts, group73.element("s"))


def test_bruhat_interval_below(group73):
    texts = [y.text for y in group73.bruhat_interval_below(group73.element("sts"))]
    assert texts == ["", "s", "t", "st", "ts", "sts"]


def test_bruhat_matches_subword_oracle_small(group73):
    moves = oracle_moves(7, 3)
    elems = group73.enumerate_up_to(5)
    for y in elems:
        for w in elems:
            expect = (y.word == w.word) if y.length == w.length else (
                y.length < w.length and oracle_bruhat_leq(moves, y.word, w.word))
            assert group73.bruhat_leq(y, w) == expect


def test_reduced_word_sets_match_oracle(group54):
    moves = oracle_moves(5, 4)
    for w in group54.enumerate_up_to(5):
        assert group54.braid_closure(w.word) == oracle_reduced_words(moves, w.word)


# ----- cache plumbing ------------------------------------------------------------------

def test_group_cache_round_trip(tmp_path):
    group = CoxeterGroup(GroupParams(7, 3))
    group.reduce("tst")
    group.reduce("ss")
    path = tmp_path / "cache.tsv"
    group.save_reduction_cache(path)
    fresh = CoxeterGroup(GroupParams(7, 3))
    fresh.load_reduction_cache(path)
    assert fresh.reduction_cache.entries == group.reduction_cache.entries
    assert fresh.reduce("tst").text == "sts"
    assert fresh.reduction_cache.hits >= 1
    other = CoxeterGroup(GroupParams(5, 4))
    with pytest.raises(CacheParametersError):
        other.load_reduction_cache(path)
