"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Every criterion is exact (integer tables, no tolerance).  The only pinned
number is the wall-clock budget of criterion 1.  Lines are collected and
repeated in the terminal summary; run this file directly to print them
without pytest.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from tenseki.algebra import find_isomorphism
from tenseki.congruence import (congruence_transport, ds_filter_bijection,
                                enumerate_congruences, enumerate_filters,
                                one_class_filter, theta_of_filter,
                                theta_S_direct, transport_composite)
from tenseki.corpus import CorpusLimits, build_corpus, fixtures, strict_chain_fixture
from tenseki.kalman import alpha_map, beta_map, center_C, kalman_K
from tenseki.kleene import check_CK, check_kleene_ki_profile, verify_ki_derived
from tenseki.nelson import (check_centered_nelson, check_nelson_itkic1,
                            check_tense_heyting, fv_kalman)
from tenseki.oracles import congruences_by_partitions, naive_tense_structures
from tenseki.profiles import check_profile
from tenseki.specfile import emit_spec, from_instance, parse_spec
from tenseki.tense import TENSE_SYMBOLS, derived_report, enumerate_tense_structures, tense_report

TIME_BUDGET_S = 60.0


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def _itkic1(corpus):
    return [u for u in corpus.ki if check_kleene_ki_profile(u, "itkic1").holds]


def _base(alg):
    return alg.replace(profile="dli+", drop=TENSE_SYMBOLS)


def criterion_1(corpus=None):
    start = time.perf_counter()
    corpus = corpus or build_corpus()
    members = corpus.dli_where("tdli0")
    bad = [m.alg.name for m in members
           if not check_kleene_ki_profile(kalman_K(m.alg), "tkic").holds]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < TIME_BUDGET_S
    return report(1, "Kalman soundness", ok,
                  f"{len(members)} tdli0 members, {len(bad)} violations, "
                  f"{elapsed:.1f}s (budget {TIME_BUDGET_S:.0f}s, corpus build included)")


def criterion_2(corpus):
    members = corpus.dli_where("tdli0")
    bad = []
    for m in members:
        iso = find_isomorphism(m.alg, center_C(kalman_K(m.alg)))
        if iso is None or iso.map != alpha_map(m.alg).map:
            bad.append(m.alg.name)
    return report(2, "alpha isomorphism", not bad, f"{len(members)} members, {len(bad)} mismatches")


def criterion_3(corpus):
    tkic = [u for u in corpus.ki if check_kleene_ki_profile(u, "tkic").holds]
    not_injective, disagree, non_ck = [], [], 0
    for u in tkic:
        b = beta_map(u)
        ck, _ = check_CK(u)
        non_ck += not ck
        if not b.injective:
            not_injective.append(u.name)
        if b.surjective != ck:
            disagree.append(u.name)
    k_images = [u for u in corpus.ki if "|" not in u.name]
    not_onto = [u.name for u in k_images if not beta_map(u).surjective]
    ok = not (not_injective or disagree or not_onto)
    return report(3, "beta monomorphism and (CK)", ok,
                  f"{len(tkic)} tkic members ({non_ck} without CK), {len(not_injective)} non-injective, "
                  f"{len(disagree)} CK/surjectivity disagreements, {len(not_onto)} of {len(k_images)} K-images not onto")


def criterion_4(corpus):
    members = corpus.dli_where("tdli01")
    bad = []
    for m in members:
        cons = enumerate_congruences(m.alg)
        filters = enumerate_filters(m.alg, "tense_one_filter")
        ok = len(cons) == len(filters)
        ok &= all(theta_of_filter(m.alg, one_class_filter(m.alg, th)) == th for th in cons)
        ok &= all(one_class_filter(m.alg, theta_of_filter(m.alg, s)) == s for s in filters)
        if not ok:
            bad.append(m.alg.name)
    return report(4, "congruence / tense 1-filter bijection", not bad,
                  f"{len(members)} tdli01 members, {len(bad)} failures")


def criterion_5(corpus, fx):
    members = corpus.dli_where("tdli0")
    bad = []
    for m in members:
        k = kalman_K(m.alg)
        con_l, con_k = enumerate_congruences(m.alg), enumerate_congruences(k)
        ok = len(con_l) == len(con_k)
        ok &= all(congruence_transport(m.alg, congruence_transport(m.alg, th, "to_K", k), "from_K", k) == th
                  for th in con_l)
        ok &= all(congruence_transport(m.alg, congruence_transport(m.alg, g, "from_K", k), "to_K", k) == g
                  for g in con_k)
        if not ok:
            bad.append(m.alg.name)
    c3 = fx["C3"]
    spot = (len(congruences_by_partitions(c3)), len(congruences_by_partitions(kalman_K(c3))))
    ok = not bad and spot == (3, 3)
    return report(5, "congruence transport", ok,
                  f"{len(members)} tdli0 members, {len(bad)} failures; 3-chain |Con(L)|, |Con(K(L))| = {spot[0]}, {spot[1]}")


def criterion_6(corpus):
    checked, bad = 0, []
    for u in _itkic1(corpus):
        for s in enumerate_filters(center_C(u), "tense_one_filter"):
            checked += 1
            if theta_S_direct(u, s) != transport_composite(u, s):
                bad.append(u.name)
    return report(6, "theta_S formula", not bad, f"{checked} (member, filter) pairs, {len(bad)} mismatches")


def criterion_7(corpus):
    members = _itkic1(corpus)
    bad = []
    for u in members:
        systems = enumerate_filters(u, "centered_tense_ds")
        filters = enumerate_filters(center_C(u), "tense_one_filter")
        ok = len(systems) == len(enumerate_congruences(u))
        ok &= all(ds_filter_bijection(u, ds_filter_bijection(u, d)) == d for d in systems)
        ok &= all(ds_filter_bijection(u, ds_filter_bijection(u, s)) == s for s in filters)
        if not ok:
            bad.append(u.name)
    return report(7, "deductive-system bijection", not bad, f"{len(members)} itkic1 members, {len(bad)} failures")


def criterion_8(corpus):
    dli_bad, checked = [], 0
    for m in corpus.dli:
        a = m.alg
        tables = [a.op(s) for s in TENSE_SYMBOLS]
        if tense_report(a.lattice, a.op("imp"), *tables).holds:
            checked += 1
            if not derived_report(a.lattice, *tables).holds:
                dli_bad.append(a.name)
    ki_bad, centered = [], 0
    for u in corpus.ki:
        rep = verify_ki_derived(u)
        centered += not rep.notes
        if not rep.holds:
            ki_bad.append(u.name)
    ok = not dli_bad and not ki_bad
    return report(8, "derived properties", ok,
                  f"T7-T18 on {checked} members ({len(dli_bad)} counterexamples); "
                  f"t7-t16 on {len(corpus.ki)} members, c1-c3 on {centered} ({len(ki_bad)} counterexamples)")


def criterion_9(corpus):
    heyting = [m for m in corpus.dli if m.heyting]
    small = [m for m in heyting if m.alg.size <= 5]
    fv_bad = [m.alg.name for m in small if not check_centered_nelson(fv_kalman(_base(m.alg))).holds]
    tense_heyting = [m for m in heyting if m.t0]
    nel_bad = [m.alg.name for m in tense_heyting if not check_nelson_itkic1(kalman_K(m.alg)).holds]
    implied, prop_bad = 0, []
    for m in heyting:
        if check_tense_heyting(m.alg).holds:
            implied += 1
            if not check_profile(m.alg, "tdli01").holds:
                prop_bad.append(m.alg.name)
    ok = not (fv_bad or nel_bad or prop_bad)
    return report(9, "Nelson / Heyting layer", ok,
                  f"FV on {len(small)} ({len(fv_bad)} failing), itKIc1+I6 on {len(tense_heyting)} "
                  f"({len(nel_bad)} failing), tense Heyting => tdli01 on {implied} ({len(prop_bad)} failing)")


def criterion_10(corpus):
    small = [m.alg for m in corpus.dli if m.alg.size <= 6] + [u for u in corpus.ki if u.size <= 6]
    con_bad = [a.name for a in small if enumerate_congruences(a) != congruences_by_partitions(a)]
    bases = {}
    for m in corpus.dli:
        if m.alg.size <= 4:
            b = _base(m.alg)
            bases.setdefault((b.lattice, b.op("imp").tobytes()), b)
    tense_bad = [b.name for b in bases.values() for t0 in (True, False)
                 if enumerate_tense_structures(b, with_T0=t0) != naive_tense_structures(b, with_T0=t0)]
    ok = not con_bad and not tense_bad
    return report(10, "oracle equivalence", ok,
                  f"Con on {len(small)} instances of size <= 6 ({len(con_bad)} mismatches); "
                  f"tense search on {len(bases)} algebras of size <= 4 ({len(tense_bad)} mismatches)")


def criterion_11():
    algs = list(fixtures()) + [strict_chain_fixture()]
    algs += [kalman_K(a) for a in algs]
    algs += [center_C(a) for a in algs if a.has("neg")]
    bad = []
    for a in algs:
        doc = from_instance(a)
        first, second = emit_spec(doc), emit_spec(from_instance(a))
        if parse_spec(first) != doc or first != second or emit_spec(parse_spec(first)) != first:
            bad.append(a.name)
    return report(11, "format round trip", not bad, f"{len(algs)} fixtures, {len(bad)} failures")


@pytest.mark.acceptance
def test_criterion_01_kalman_soundness():
    assert criterion_1()


@pytest.mark.acceptance
def test_criterion_02_alpha_isomorphism(corpus):
    assert criterion_2(corpus)


@pytest.mark.acceptance
def test_criterion_03_beta_and_ck(corpus):
    assert criterion_3(corpus)


@pytest.mark.acceptance
def test_criterion_04_filter_bijection(corpus):
    assert criterion_4(corpus)


@pytest.mark.acceptance
def test_criterion_05_transport(corpus, fx):
    assert criterion_5(corpus, fx)


@pytest.mark.acceptance
def test_criterion_06_theta_s(corpus):
    assert criterion_6(corpus)


@pytest.mark.acceptance
def test_criterion_07_deductive_systems(corpus):
    assert criterion_7(corpus)


@pytest.mark.acceptance
def test_criterion_08_derived(corpus):
    assert criterion_8(corpus)


@pytest.mark.acceptance
def test_criterion_09_nelson_heyting(corpus):
    assert criterion_9(corpus)


@pytest.mark.acceptance
def test_criterion_10_oracles(corpus):
    assert criterion_10(corpus)


@pytest.mark.acceptance
def test_criterion_11_format():
    assert criterion_11()


if __name__ == "__main__":
    c = build_corpus(CorpusLimits())
    named = dict(zip(("B2", "C3", "B2xB2"), fixtures()))
    results = [criterion_1(c), criterion_2(c), criterion_3(c), criterion_4(c), criterion_5(c, named),
               criterion_6(c), criterion_7(c), criterion_8(c), criterion_9(c), criterion_10(c), criterion_11()]
    raise SystemExit(0 if all(results) else 1)
