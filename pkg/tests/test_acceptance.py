"""Acceptance gate. Each criterion prints one PASS/FAIL line in the session summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from random import Random

from conftest import ACCEPTANCE_LINES
from indpoly.antiregular import (AntiregularSpec, antiregular,
                                 antiregular_poly_closed, check_root_claim, lemma1_iterate,
                                 roots_of_complement_match)
from indpoly.claims import count_matchings, zoo_rows
from indpoly.engine import alpha, independence_poly, independence_poly_bruteforce, matching_poly
from indpoly.graph import (complement, complete_bipartite, degree_sequence, is_antiregular,
                           is_isomorphic, is_konig_egervary, is_simplicial_graph, load_fixture,
                           max_matching_size, random_graph)
from indpoly.polynomial import Polynomial, is_log_concave
from indpoly.threshold import is_threshold, recognize_threshold, verify_uniqueness
from oracles import independent_set_counts


def report(number, title, failures):
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else "  -- " + "; ".join(map(str, failures[:4]))
    ACCEPTANCE_LINES.append(f"criterion {number}: {status}  {title}{detail}")
    assert not failures, f"criterion {number}: {failures}"


def closed(n, variant="connected"):
    return antiregular_poly_closed(AntiregularSpec(n, variant))


def test_criterion_1_closed_forms():
    bad = []
    for n in range(1, 25):
        if not closed(n) == independence_poly(antiregular(n)) == lemma1_iterate(n):
            bad.append(f"connected n={n}")
        # complement(A_1) = K_1; the disconnected formula covers it too
        want = independence_poly(complement(antiregular(n)))
        if closed(n, "disconnected") != want:
            bad.append(f"disconnected n={n}")
        if n >= 2 and want != Polynomial((1, 1)) * independence_poly(antiregular(n - 1)):
            bad.append(f"(1+x) I(A_n-1) n={n}")
    report(1, "closed forms = engine = recurrence, n=1..24, both variants", bad)


def test_criterion_2_listed_polynomials():
    listed = {
        1: (1, 1), 2: (1, 2), 3: (1, 3, 1), 4: (1, 4, 2), 5: (1, 5, 4, 1),
        6: (1, 6, 6, 2), 7: (1, 7, 9, 5, 1), 8: (1, 8, 12, 8, 2),
    }
    bad = [n for n, c in listed.items()
           if independence_poly(antiregular(n)).coeffs != c
           or tuple(independent_set_counts(antiregular(n))) != c]
    report(2, "listed polynomials I(A_1)..I(A_8)", bad)


def test_criterion_3_fibonacci_numbers():
    bad = []
    for k in range(1, 13):
        checks = [
            (antiregular(2 * k - 1), 3 * 2 ** (k - 1) - 1, f"A_{2 * k - 1}"),
            (antiregular(2 * k), 2 ** (k + 1) - 1, f"A_{2 * k}"),
            (complement(antiregular(2 * k - 1)), 2 ** (k + 1) - 2, f"co-A_{2 * k - 1}"),
            (complement(antiregular(2 * k)), 3 * 2 ** k - 2, f"co-A_{2 * k}"),
        ]
        bad += [name for g, want, name in checks if independence_poly(g)(1) != want]
    report(3, "Fibonacci numbers, k=1..12", bad)


def test_criterion_4_alternating_numbers():
    bad = [f"I(A_{n};-1)={independence_poly(antiregular(n))(-1)}" for n in range(1, 25)
           if independence_poly(antiregular(n))(-1) != -1]
    bad += [f"co-A_{n}" for n in range(2, 25)
            if independence_poly(complement(antiregular(n)))(-1) != 0]
    report(4, "alternating numbers -1 / 0, n<=24", bad)


def test_criterion_5_log_concave():
    bad = []
    for n in range(1, 25):
        for name, g in ((f"A_{n}", antiregular(n)), (f"co-A_{n}", complement(antiregular(n)))):
            if not is_log_concave(independence_poly(g)):
                bad.append(name)
    report(5, "log-concavity of the antiregular families, n<=24", bad)


def test_criterion_6_root_structure():
    bad = []
    for k in range(1, 9):
        for n in (2 * k, 2 * k - 1):
            row = check_root_claim(n)
            if not row.passed:
                bad.append(f"{row.claim}: {row.detail}")
    bad += [f"roots of co-A_{n}" for n in range(2, 17) if not roots_of_complement_match(n)]
    report(6, "Sturm root counts and isolating intervals, k=1..8", bad)


def test_criterion_7_counterexample_zoo():
    bad = [f"{r.claim} {r.detail}" for r in zoo_rows() if not r.passed]
    report(7, "K_m+3K_7 and threshold examples with flags", bad)


def test_criterion_8_oracle_equivalence():
    r = Random(8)
    bad = []
    for i in range(500):
        g = random_graph(r.randint(1, 14), r.random(), r)
        if independence_poly(g) != independence_poly_bruteforce(g):
            bad.append(i)
    report(8, "engine = brute force on 500 random graphs, n<=14", bad)


def test_criterion_9_structure():
    bad = []
    for n in range(1, 17):
        g = antiregular(n)
        ok = (is_antiregular(g) and recognize_threshold(g) is not None
              and is_simplicial_graph(g) and is_konig_egervary(g)
              and alpha(g) == (n + 1) // 2 and max_matching_size(g) == n // 2)
        if not ok:
            bad.append(n)
    report(9, "antiregular, threshold, simplicial, Konig-Egervary, n=1..16", bad)


def test_criterion_10_uniqueness():
    bad = []
    for n in range(1, 11):
        rep = verify_uniqueness(n)
        bad += [f"n={n} {row.claim}" for row in rep.violations]
    report(10, "threshold uniqueness sweep, n<=10", bad)


def test_criterion_11_complete_bipartite():
    bad = []
    for k in range(1, 11):
        if independence_poly(antiregular(2 * k)) != independence_poly(complete_bipartite(k, k)):
            bad.append(f"A_{2 * k}")
        if independence_poly(antiregular(2 * k - 1)) \
                != independence_poly(complete_bipartite(k, k - 1)):
            bad.append(f"A_{2 * k - 1}")
        if k >= 3 and is_threshold(complete_bipartite(k, k)):
            bad.append(f"K_{k},{k} threshold")
    report(11, "I(A_2k)=I(K_k,k), I(A_2k-1)=I(K_k,k-1), k<=10", bad)


def test_criterion_12_line_graph():
    bad = []
    g1 = load_fixture("g1")
    if (g1.n, g1.num_edges) != (6, 6) or matching_poly(g1).coeffs != (1, 6, 7, 1):
        bad.append("G_1")
    r = Random(12)
    for i in range(100):
        g = random_graph(r.randint(1, 10), r.random(), r)
        if list(matching_poly(g).coeffs) != count_matchings(g):
            bad.append(i)
    report(12, "matching polynomial via line graph", bad)


def test_criterion_13a_twin_trees():
    t1, t2 = load_fixture("t1"), load_fixture("t2")
    stated = (1, 10, 36, 58, 42, 12, 1)
    bad = []
    if is_isomorphic(t1, t2):
        bad.append("isomorphic")
    if not independence_poly(t1).coeffs == independence_poly(t2).coeffs == stated:
        bad.append("polynomials differ")
    report("13a", "T_1, T_2 non-isomorphic with the stated common polynomial", bad)


def test_criterion_13b_twin_tree_degree_sequences():
    # the criterion's parenthetical; the drawn trees share (3,3,2,2,2,2,1,1,1,1)
    d1, d2 = degree_sequence(load_fixture("t1")), degree_sequence(load_fixture("t2"))
    report("13b", "T_1, T_2 have different degree sequences",
           [] if d1 != d2 else [f"both {d1}"])
