import pytest

import qwalk.certify as cz
from qwalk.certify import (
    Contradiction,
    Verdict,
    certify_family,
    certify_p2_family,
    certify_rooted,
    certify_tower,
    family_exponent,
    lifted_null_vectors,
    p2_analysis,
    predicted_tower_exponent,
    prime_conditions,
    probe_tower,
    tower_constant_term,
    tower_valuation_recurrence,
)
from qwalk.factor import factor_integer, two_adic_valuation
from qwalk.graphs import complete_graph, enumerate_graphs, parse_graph6
from qwalk.poly import IntPolynomial, roots_mod_p
from qwalk.rooted import rooted_product_path, rooted_tower
from qwalk.walk import det_walk, modified_q_walk_matrix, q_char_poly, q_constant_term

FAMILY_6 = ["EGUw", "EOSw", "EPtw", "EQLw"]


def test_family_exponent():
    assert [family_exponent(n) for n in range(1, 9)] == [0, 2, 3, 5, 6, 8, 9, 11]


def test_family_single_vertex():
    c = certify_family(parse_graph6("@"))
    assert c.verdict is Verdict.CERTIFIED and c.evidence["quotient"] == "1"


@pytest.mark.parametrize("word", FAMILY_6)
def test_family_six_vertex_members(word):
    c = certify_family(parse_graph6(word))
    assert c.certified and abs(int(c.evidence["quotient"])) == 1


def test_family_only_four_members_on_six_vertices():
    certified = sorted(str(g) for g in enumerate_graphs(6) if certify_family(g).certified)
    assert len(certified) == 4


@pytest.mark.parametrize("word,q,verdict", [("GHCIh[", 105, Verdict.CERTIFIED), ("GTOi~{", 105, Verdict.CERTIFIED),
                                            ("FBO\\W", 9, Verdict.NOT_APPLICABLE), ("FCDhw", 21, Verdict.CERTIFIED)])
def test_family_quotients(word, q, verdict):
    c = certify_family(parse_graph6(word))
    assert abs(int(c.evidence["quotient"])) == q
    assert c.verdict is verdict


def test_family_singular_and_even_quotient():
    assert certify_family(complete_graph(3)).reason == "walk matrix is singular"
    # a graph whose determinant is divisible by the bound but with an even quotient
    for g in enumerate_graphs(7):
        d = det_walk(g)
        if d and d % (1 << 10) == 0:
            assert certify_family(g).reason == "quotient is even"
            break
    else:
        pytest.fail("no even quotient at n = 7")


def test_family_unknown_on_budget(monkeypatch):
    monkeypatch.setattr(cz, "det_walk", lambda g: (1 << family_exponent(g.n)) * 1000000007 * 998244353)
    c = certify_family(parse_graph6("EGUw"), budget=1)
    assert c.verdict is Verdict.UNKNOWN


def test_a0_premise_never_holds():
    # every rooted/tower/p2 criterion needs |a0| = 2, which the signless Laplacian cannot produce
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            assert certify_rooted(g, 2).verdict is Verdict.NOT_APPLICABLE
            assert certify_tower(g, 3, 1).verdict is Verdict.NOT_APPLICABLE
            assert not certify_p2_family(g).certified


def test_rooted_certified_branch(monkeypatch):
    # force the a0 premise; with the direct check skipped the certificate is premise-only
    monkeypatch.setattr(cz, "q_constant_term", lambda g: 2)
    g = parse_graph6("EGUw")
    c = certify_rooted(g, 2, verify_cap=0)
    assert c.certified and c.certified_graph == rooted_product_path(g, 2)
    assert c.evidence["target_exponent"] == family_exponent(12)
    t = certify_tower(g, 3, 2, verify_cap=0)
    assert t.certified and t.evidence["premise_only"]


def test_rooted_contradiction_branch(monkeypatch):
    # a faked premise disagrees with the directly computed determinant
    monkeypatch.setattr(cz, "q_constant_term", lambda g: 2)
    with pytest.raises(Contradiction):
        certify_rooted(parse_graph6("EGUw"), 2)
    with pytest.raises(Contradiction):
        certify_tower(parse_graph6("EGUw"), 2, 1)


def test_rooted_rejects_k():
    with pytest.raises(ValueError):
        certify_rooted(parse_graph6("EGUw"), 4)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_tower_exponents_match_family_bound(n):
    for k in (2, 3):
        for t in (1, 2, 3):
            assert predicted_tower_exponent(n, k, t) == family_exponent(n * k**t)


def test_recurrence_reproduces_exponent_formula():
    # with v2(det) = (3n-2)/2 and v2(a0) = 1 the recurrence gives the closed forms
    for n in (2, 4, 6, 8):
        for k in (2, 3):
            for t in (1, 2, 3):
                assert tower_valuation_recurrence(family_exponent(n), 1, k, t) == predicted_tower_exponent(n, k, t)


def test_constant_term_preserved_up_to_sign():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            a0 = q_constant_term(g)
            for k, t in ((2, 1), (2, 2), (3, 1), (3, 2)):
                if n * k**t <= 54:
                    assert abs(tower_constant_term(g, k, t)) == abs(a0)


def test_tower_valuation_recurrence_direct():
    for n in range(2, 7):
        for g in enumerate_graphs(n):
            d, a0 = det_walk(g), q_constant_term(g)
            if not d or not a0:
                continue
            for k, t in ((2, 1), (2, 2), (3, 1)):
                if n * k**t > 36:
                    continue
                got = two_adic_valuation(det_walk(rooted_tower(g, k, t)))
                assert got == tower_valuation_recurrence(two_adic_valuation(d), two_adic_valuation(a0), k, t)


def test_tower_constant_term_cap():
    with pytest.raises(ValueError):
        tower_constant_term(parse_graph6("EGUw"), 3, 3)


def test_probe_tower():
    r = probe_tower(parse_graph6("EGUw"), 4, 1)
    assert r["tower_n"] == 24 and r["check"] == "tower-probe"
    assert r["v2"] == two_adic_valuation(int(r["det_WQ"]))


# --- G o P_2 criterion evidence ---------------------------------------------------

def _brute_cond_ii(g, p):
    p_q = q_char_poly(g)
    return not any((x * x + 1) % p == 0 and p_q(2 * x + 1) % p == 0 for x in range(p))


@pytest.mark.parametrize("word,p", [("G?GKj{", 5), ("G?OPW{", 5), ("G?Om`{", 61), ("G?Sq\\{", 17), ("G?ZPz{", 13)])
def test_cond_ii_witnesses(word, p):
    g = parse_graph6(word)
    r = prime_conditions(g, p)
    assert r["cond_ii"] is False
    assert p % 4 == 1
    assert _brute_cond_ii(g, p) is False
    common = [x for x in roots_mod_p(IntPolynomial((1, 0, 1)), p) if q_char_poly(g)(2 * x + 1) % p == 0]
    assert common


def test_cond_ii_agrees_with_brute_force():
    for word in ["G?GKj{", "G?OPW{", "GHCIh[", "GTOi~{", "G?J\\r{"]:
        g = parse_graph6(word)
        a = p2_analysis(g, use_fast_path=False)
        for r in a["per_prime"]:
            assert r["cond_ii"] == _brute_cond_ii(g, int(r["p"]))


def test_cond_i_alpha_is_null_vector():
    g = parse_graph6("G?J\\r{")
    r = prime_conditions(g, 3)
    alpha = [int(x) for x in r["alpha"]]
    wt = modified_q_walk_matrix(g).T.tolist()
    assert all(sum(a * b for a, b in zip(row, alpha)) % 3 == 0 for row in wt)
    assert int(r["alpha_norm_mod_p"]) == sum(a * a for a in alpha) % 3 == 0
    assert r["cond_i"] is False


def test_fast_path_disagrees_with_per_prime_evidence():
    # odd part square-free with every prime = 3 mod 4, yet alpha.alpha = 0 mod 3
    g = parse_graph6("G?J\\r{")
    fast = p2_analysis(g, use_fast_path=True)
    full = p2_analysis(g, use_fast_path=False)
    assert fast["method"] == "fast-path-3-mod-4" and fast["conditions_hold"] is True
    assert full["conditions_hold"] is False
    assert all(int(r["p"]) % 4 == 3 for r in full["per_prime"])


def test_p2_evidence_attached_when_premise_fails():
    c = certify_p2_family(parse_graph6("G?GKj{"))
    assert c.verdict is Verdict.NOT_APPLICABLE and c.reason == "|a0| != 2"
    assert [r["p"] for r in c.evidence["per_prime"]] == ["5", "11"]


def test_p2_certified_branch(monkeypatch):
    monkeypatch.setattr(cz, "q_constant_term", lambda g: 2)
    g = parse_graph6("GHCIh[")
    c = certify_p2_family(g)
    assert c.evidence["method"] == "per-prime"  # 5 = 1 mod 4 rules out the fast path
    assert c.certified is p2_analysis(g)["conditions_hold"]
    if c.certified:
        assert c.certified_graph == rooted_product_path(g, 2)


def test_lifted_null_vectors_on_instances():
    seen = 0
    for n in (6, 7):
        for g in enumerate_graphs(n):
            d = det_walk(g)
            if not d:
                continue
            dt = d >> (n - 1) if d > 0 else -((-d) >> (n - 1))
            for p in factor_integer(dt).primes():
                if p == 2:
                    continue
                r = lifted_null_vectors(g, p)
                if r is None:
                    continue
                seen += 1
                assert r["upper"] and r["lower"], (str(g), p)
    assert seen >= 50
