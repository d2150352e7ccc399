"""Acceptance suite: ten go/no-go criteria, one verdict line printed per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines;
without ``-s`` the per-test PASSED/FAILED markers carry the same information.
Every criterion is exhaustive over its stated window -- no sampling except the
explicitly seeded random triples of criterion 7.
"""

import itertools
import json
import random

from heckebound.cli import main as cli_main
from heckebound.hecke import HeckeAlgebra, mul_gen_right
from heckebound.laurent import HalfLaurent, Q_ONE, XI_ONE
from heckebound.verifier import check_parabolic, run_check

from oracles import (
    is_subsequence,
    kl_by_bar,
    oracle_moves,
    oracle_normal_form,
    oracle_reduced_words,
)


def _verdict(num: int, ok: bool, detail: str) -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] criterion-{num}: {detail}")
    assert ok, f"criterion-{num}: {detail}"


# -------------------------------------------------------------------------------------

def test_criterion_01_degree_bound_m_st_3(group73):
    report = run_check(group73, "theorem", n_cap=8, jobs=2, memo=True)
    ok = (report.status == "pass" and report.hypothesis_met
          and report.violations_total == 0 and report.max_degree_seen <= 7)
    _verdict(1, ok,
             f"(7,3) all pairs of lengths <= 8: max degree {report.max_degree_seen}"
             f" <= 7, violations {report.violations_total},"
             f" {report.scanned} products scanned")


def test_criterion_02_degree_bound_m_st_4(group54, group55, group64):
    parts = []
    ok = True
    for group in (group54, group55, group64):
        p = group.params
        report = run_check(group, "theorem", n_cap=8, jobs=2, memo=True)
        bound = max(p.m_sr, p.m_st)
        good = (report.status == "pass" and report.bound == bound
                and report.violations_total == 0
                and report.max_degree_seen <= bound)
        ok = ok and good
        parts.append(f"({p.m_sr},{p.m_st}): max {report.max_degree_seen} <= {bound}")
    _verdict(2, ok, "all pairs of lengths <= 8 -- " + "; ".join(parts))


def test_criterion_03_suffix_exclusions(group73, group54):
    runs = ([(group73, cid) for cid in
             ("lemma-3.1", "cor-3.2", "cor-3.3", "lemma-3.4")]
            + [(group54, cid) for cid in
               ("lemma-4.1", "cor-4.2", "lemma-4.3a", "lemma-4.3b",
                "lemma-4.3c", "lemma-4.3d", "lemma-4.4")])
    ok = True
    scanned = 0
    for group, cid in runs:
        report = run_check(group, cid, n_cap=12)
        good = (report.status == "pass" and report.hypothesis_met
                and report.violations_total == 0 and report.scanned > 0)
        ok = ok and good
        scanned += report.scanned
    _verdict(3, ok,
             f"{len(runs)} suffix exclusions at window 12, zero witnesses"
             f" ({scanned} element scans)")


def test_criterion_04_sandwich_transfer(group73, group54):
    runs = [(group73, "lemma-3.5"), (group54, "lemma-4.5[a=t]"),
            (group54, "lemma-4.5[a=r]")]
    ok = True
    scanned = 0
    for group, cid in runs:
        report = run_check(group, cid, n_cap=6)
        good = (report.status == "pass" and report.hypothesis_met
                and report.violations_total == 0 and report.scanned > 0)
        ok = ok and good
        scanned += report.scanned
    _verdict(4, ok,
             f"sandwich transfer through all qualifying parabolic middles at"
             f" window 6, zero witnesses ({scanned} triples)")


def test_criterion_05_descent_pattern_ladder(group73, group54):
    runs = [(group73, "lemma-3.6", 1), (group73, "lemma-3.7", 2),
            (group73, "cor-3.8", 2), (group73, "lemma-3.9", 3),
            (group73, "lemma-3.10", 4), (group54, "lemma-4.6", 1),
            (group54, "lemma-4.7[a=t]", 2), (group54, "lemma-4.7[a=r]", 2)]
    ok = True
    parts = []
    for group, cid, bound in runs:
        report = run_check(group, cid, n_cap=6)
        good = (report.status == "pass" and report.hypothesis_met
                and report.bound == bound and report.violations_total == 0)
        ok = ok and good
        seen = "-" if report.max_degree_seen is None else report.max_degree_seen
        parts.append(f"{cid}: {seen}<={bound}")
    _verdict(5, ok, "descent-pattern ladder at window 6 -- " + ", ".join(parts))


def test_criterion_06_dihedral_exactness(group53, group73):
    ok = True
    parts = []
    for group in (group53, group73):
        m = group.params.m_sr
        report = check_parabolic(group)
        good = (report.status == "pass"
                and report.extras["parabolic_order"] == 2 * m
                and report.extras["top_triple_degree"] == m
                and report.extras["bound_attained_at_top"]
                and report.max_degree_seen == m)
        ok = ok and good
        parts.append(f"m_sr={m}: top triple degree {report.extras['top_triple_degree']}")
    _verdict(6, ok,
             "dihedral parabolic exact, bound attained at the longest element -- "
             + "; ".join(parts))


def test_criterion_07_ring_identities(group73, hecke73):
    group = group73
    elems = group.enumerate_up_to(6)
    inv = group.inverse
    bad = []

    coeff_checks = cyclic_checks = collapse_checks = 0
    for w in elems:
        for u in elems:
            vec = hecke73.product(w, u)
            cap = min(w.length, u.length)
            wu = group.multiply(w, u)
            for v, f in vec.items():
                coeff_checks += 1
                if f.degree > cap or not f.is_nonnegative:
                    bad.append(("coeff", w.text, u.text, v.text))
                cyclic_checks += 1
                if (hecke73.f_coeff(u, inv(v), inv(w)) != f
                        or hecke73.f_coeff(inv(u), inv(w), inv(v)) != f):
                    bad.append(("symmetry", w.text, u.text, v.text))
            if w.length + u.length == wu.length:
                collapse_checks += 1
                if vec != {wu: XI_ONE}:
                    bad.append(("collapse", w.text, u.text, wu.text))

    rng = random.Random(20260819)
    for _ in range(1000):
        w = rng.choice(elems)
        u = rng.choice(elems)
        v = rng.choice(elems)
        left = dict(hecke73.product(w, u))
        for g in v.word:
            left = mul_gen_right(group, left, g)
        right: dict = {}
        for z, c in hecke73.product(u, v).items():
            for x, f in hecke73.product(w, z).items():
                inc = c * f
                cur = right.get(x)
                right[x] = inc if cur is None else cur + inc
        right = {x: f for x, f in right.items() if not f.is_zero}
        if left != right:
            bad.append(("assoc", w.text, u.text, v.text))
    for _ in range(300):     # symmetry must also preserve vanishing
        w = rng.choice(elems)
        u = rng.choice(elems)
        v = rng.choice(elems)
        if hecke73.f_coeff(w, u, v) != hecke73.f_coeff(u, inv(v), inv(w)):
            bad.append(("zero-symmetry", w.text, u.text, v.text))

    ok = not bad
    _verdict(7, ok,
             f"(7,3) window 6: {coeff_checks} coefficients nonnegative with degree"
             f" <= min length, {cyclic_checks} cyclic+inverse symmetries,"
             f" {collapse_checks} additive collapses, 1000 seeded associativity"
             f" triples; failures: {bad[:3] if bad else 'none'}")


def test_criterion_08_canonical_basis_data(group73, kl73):
    group = group73
    elems = group.enumerate_up_to(6)
    bad = []

    pair_checks = 0
    for w in elems:
        if kl73.kl_poly(w, w) != Q_ONE:
            bad.append(("self", w.text))
        cw = kl73.c_basis(w)
        if cw.get(w) != HalfLaurent({0: 1}):
            bad.append(("top", w.text))
        for y, coeff in cw.items():
            if y is not w and not (coeff.degree is not None and coeff.degree < 0):
                bad.append(("unitriangular", y.text, w.text))
        for y in elems:
            if y is w or y.length >= w.length or not group.bruhat_leq(y, w):
                continue
            p = kl73.kl_poly(y, w)
            pair_checks += 1
            if p.is_zero or p.coeff(0) != 1:
                bad.append(("support", y.text, w.text))
            elif 2 * p.degree > w.length - y.length - 1:
                bad.append(("degree", y.text, w.text))

    s = group.element("s")
    if kl73.h_coeff(s, s, s) != HalfLaurent({1: 1, -1: 1}):
        bad.append(("h-sss",))

    window = kl73.a_window(6)
    window_max = max(window.table.values())
    if window_max > 7:
        bad.append(("window", window_max))
    if kl73.a_windowed(group.neutral(), 6) != 0:
        bad.append(("window-neutral",))

    bar_memo: dict = {}
    bar_checks = 0
    for w in elems:
        got = kl_by_bar(group, w, bar_memo)
        want = {}
        for y in group.enumerate_up_to(w.length):
            p = kl73.kl_poly(y, w)
            if not p.is_zero:
                want[y] = HalfLaurent.from_qpoly(p, shift=y.length - w.length)
        bar_checks += 1
        if got != want:
            bad.append(("bar-oracle", w.text))

    ok = not bad
    _verdict(8, ok,
             f"(7,3) window 6: {pair_checks} polynomial degree caps, canonical"
             f" basis unitriangular, h(s,s,s) = q^(1/2)+q^(-1/2), windowed"
             f" degree max {window_max} <= 7, bar-involution oracle agrees on"
             f" {bar_checks} elements; failures: {bad[:3] if bad else 'none'}")


def test_criterion_09_word_and_order_oracles(group73, group54):
    bad = []
    words_checked = 0
    for group in (group73, group54):
        moves = oracle_moves(group.params.m_sr, group.params.m_st)
        for length in range(9):
            for letters in itertools.product((0, 1, 2), repeat=length):
                word = bytes(letters)
                words_checked += 1
                reduced_set = oracle_reduced_words(moves, word)
                nf = min(reduced_set)
                el = group.reduce(word)
                if el.word != nf:
                    bad.append(("nf", group.params.m_sr, word))
                    continue
                if group.is_reduced(word) != (len(word) == len(nf)):
                    bad.append(("reduced", group.params.m_sr, word))
                if len(word) == len(nf) and group.braid_closure(word) != reduced_set:
                    bad.append(("closure", group.params.m_sr, word))

    moves73 = oracle_moves(7, 3)
    elems = group73.enumerate_up_to(7)
    reduced = {w: oracle_reduced_words(moves73, w.word) for w in elems}
    order_checked = 0
    for y in elems:
        for w in elems:
            order_checked += 1
            expected = any(is_subsequence(r, w.word) for r in reduced[y])
            if group73.bruhat_leq(y, w) != expected:
                bad.append(("bruhat", y.text, w.text))

    ok = not bad
    _verdict(9, ok,
             f"{words_checked} words of length <= 8 re-reduced from scratch on"
             f" (7,3) and (5,4); Bruhat order vs subword characterization on"
             f" {order_checked} pairs of lengths <= 7;"
             f" failures: {bad[:3] if bad else 'none'}")


def test_criterion_10_parallel_determinism(tmp_path):
    rendered = []
    for jobs, name in (("1", "one.json"), ("8", "eight.json")):
        out_path = tmp_path / name
        code = cli_main(["--m-sr", "7", "--m-st", "3", "--check", "all",
                         "--max-length", "6", "--jobs", jobs, "--memo",
                         "--emit", "json", "--out", str(out_path)])
        assert code == 0
        doc = json.loads(out_path.read_text())
        for check in doc["checks"]:
            del check["seconds"]
        rendered.append(json.dumps(doc, indent=2, sort_keys=False))
    ok = rendered[0] == rendered[1]
    _verdict(10, ok,
             "full catalog at window 6 over the whole check list:"
             " --jobs 1 and --jobs 8 reports are byte-identical after"
             " stripping per-check timing")
