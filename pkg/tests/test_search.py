import json
import random
from fractions import Fraction
from math import comb

import pytest

import oracles
from xfam.search import (
    HypothesisError,
    SplitMix64,
    VerificationReport,
    count_upsets,
    cross_measure_extremum,
    enumerate_upsets,
    has_principal_witness,
    reports_to_csv,
    upset_indicators,
    verify_af,
    verify_daykin,
    verify_katona_single,
    verify_le3_reduction,
    verify_tm1,
    verify_tm2,
    verify_tm3,
    verify_tm4,
    verify_uniform_cross,
)
from xfam.search.verify import _m_regime
from xfam.seqfam import SeqFamily, cylinder, is_cross_t_intersecting_seq, is_cross_tvec_intersecting, seq_dual
from xfam.setfam import SetFamily, is_cross_t_intersecting, katona_family, measure, principal_family

# -- PRNG ----------------------------------------------------------------------


def test_splitmix_reference_vectors():
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF
    g = SplitMix64(1234567)
    assert [g.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_splitmix_helpers():
    g = SplitMix64(9)
    xs = [g.below(7) for _ in range(500)]
    assert set(xs) == set(range(7))
    assert SplitMix64(3).bits(100) < 1 << 100
    s = SplitMix64(5).sample(range(10), 4)
    assert len(set(s)) == 4 and SplitMix64(5).sample(range(10), 4) == s
    with pytest.raises(ValueError):
        g.below(0)


# -- up-set enumeration --------------------------------------------------------


@pytest.mark.parametrize("n, count", [(1, 3), (2, 6), (3, 20), (4, 168)])
def test_upsets_match_full_scan(n, count):
    got = upset_indicators(n)
    assert len(got) == len(set(got)) == count
    assert set(got) == oracles.scan_upsets(n)


def split_on_first(n):
    """Up-sets built by splitting on element 1 instead of element n."""
    if n == 0:
        return [frozenset(), frozenset([0])]
    prev = split_on_first(n - 1)
    out = []
    for u1 in prev:
        for u0 in prev:
            if u0 <= u1:
                # masks of [2..n] shifted up one place; element 1 is bit 0
                out.append(frozenset({s << 1 for s in u0} | {(s << 1) | 1 for s in u1}))
    return out


def test_n5_count_two_independent_constructions():
    forward = {F.members for F in enumerate_upsets(5)}
    assert len(forward) == 7581 == count_upsets(5)
    other = {tuple(sorted(u)) for u in split_on_first(5)}
    assert other == forward


def test_upsets_closed_under_relabelling():
    fams = {F.members for F in enumerate_upsets(4)}
    for perm in [(1, 0, 3, 2), (3, 2, 1, 0), (2, 0, 1, 3)]:
        moved = {
            tuple(sorted(sum(1 << perm[i] for i in range(4) if s >> i & 1) for s in ms)) for ms in fams
        }
        assert moved == fams


def test_enumerated_families_are_upsets():
    for F in enumerate_upsets(3):
        assert oracles.is_upset(oracles.to_oracle(F), 3)


def test_count_n6():
    assert count_upsets(6) == 7828354


@pytest.mark.parametrize("n", [0, 7])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        list(enumerate_upsets(n))
    with pytest.raises(ValueError):
        count_upsets(n)


# -- set-family verifiers ------------------------------------------------------


def test_product_measure_examples():
    r = verify_tm1(3, 1, Fraction(1, 4), Fraction(1, 4))
    assert r.computed_extremum == r.paper_bound == Fraction(1, 16)
    assert r.passed and r.attained and r.regime == "proven"
    assert has_principal_witness(r)
    r = verify_tm1(4, 3, Fraction(1, 5), Fraction(1, 6))
    assert r.computed_extremum == r.paper_bound == Fraction(1, 30) ** 3
    r = verify_tm1(2, 2, Fraction(1, 4), Fraction(1, 4))
    assert r.computed_extremum == Fraction(1, 16) ** 2
    assert r.witness == {"F1": {"n": 2, "sets": [[1, 2]]}, "F2": {"n": 2, "sets": [[1, 2]]}}


def test_product_measure_regimes():
    assert verify_tm1(3, 2, Fraction(1, 4), Fraction(1, 5)).regime == "proven"
    assert verify_tm1(3, 2, Fraction(3, 10), Fraction(3, 10)).regime == "proven"
    assert verify_tm1(3, 2, Fraction(3, 10), Fraction(1, 4)).regime == "conjectural"
    assert verify_tm1(3, 2, Fraction(50, 169), Fraction(1, 4)).regime == "conjectural"
    assert verify_tm1(3, 2, Fraction(49, 169), Fraction(1, 4)).regime == "proven"


@pytest.mark.parametrize(
    "args",
    [(3, 1, Fraction(1, 2), Fraction(1, 4)), (3, 3, Fraction(1, 4), Fraction(1, 8)), (2, 3, Fraction(1, 8), Fraction(1, 8)),
     (6, 1, Fraction(1, 4), Fraction(1, 4)), (3, 1, Fraction(0), Fraction(1, 4))],
)
def test_product_measure_hypotheses(args):
    with pytest.raises(HypothesisError):
        verify_tm1(*args)


def brute_cross_max(n, t, score):
    """Max ``score(F1, F2)`` over cross t pairs, where the best F2 for a given
    F1 is its full partner family (``score`` is monotone in F2)."""
    best = None
    for F1 in oracles.all_families(n):
        F2 = oracles.dual(F1, n, t)
        s = score(F1, F2)
        best = s if best is None else max(best, s)
    return best


def test_full_pair_brute_force_n2():
    # every one of the 16 x 16 family pairs, no partner shortcut
    fams = list(oracles.all_families(2))
    for t in (1, 2):
        for p1, p2 in [(Fraction(1, 4), Fraction(1, 5)), (Fraction(1, 3), Fraction(1, 4))]:
            best = max(
                oracles.measure(A, 2, p1) * oracles.measure(B, 2, p2)
                for A in fams
                for B in fams
                if oracles.is_cross(A, B, t)
            )
            assert cross_measure_extremum(2, t, p1, p2)[0] == best


@pytest.mark.parametrize("t", [1, 2, 3])
def test_product_measure_against_brute_force_n3(t):
    for p1, p2 in [(Fraction(1, 8), Fraction(1, 5)), (Fraction(1, 6), Fraction(1, 6))]:
        if max(p1, p2) >= Fraction(1, t + 1):
            continue
        expected = brute_cross_max(3, t, lambda A, B: oracles.measure(A, 3, p1) * oracles.measure(B, 3, p2))
        assert verify_tm1(3, t, p1, p2).computed_extremum == expected


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("p", [Fraction(1, 2), Fraction(2, 3)])
def test_min_measure_against_brute_force_n3(t, p):
    expected = brute_cross_max(3, t, lambda A, B: min(oracles.measure(A, 3, p), oracles.measure(B, 3, p)))
    assert verify_tm3(3, t, p).computed_extremum == expected


def test_min_measure_examples():
    r = verify_tm3(3, 1, Fraction(1, 2))
    assert r.computed_extremum == r.paper_bound == Fraction(1, 2)
    r = verify_tm3(4, 2, Fraction(1, 2))
    assert r.computed_extremum == r.paper_bound == Fraction(5, 16)
    for n in range(1, 6):
        r = verify_tm3(n, n, Fraction(3, 4))
        assert r.computed_extremum == r.paper_bound == Fraction(3, 4) ** n
    with pytest.raises(HypothesisError):
        verify_tm3(3, 1, Fraction(1, 3))


def test_katona_single_examples():
    assert verify_katona_single(4, 2).computed_extremum == 5
    assert verify_katona_single(5, 1).computed_extremum == 16
    for n in range(1, 6):
        assert verify_katona_single(n, n).computed_extremum == 1
    r = verify_katona_single(4, 1)
    W = SetFamily.from_sets(4, r.witness["sets"])
    assert len(W) == r.computed_extremum == r.paper_bound == 8
    assert oracles.is_cross(oracles.to_oracle(W), oracles.to_oracle(W), 1)


def test_set_search_not_below_structured_witnesses():
    for n in range(1, 6):
        for t in range(1, n + 1):
            p = Fraction(1, t + 2)
            P = principal_family(n, range(1, t + 1))
            assert verify_tm1(n, t, p, p).computed_extremum >= measure(P, p) ** 2
            q = Fraction(2, 3)
            assert verify_tm3(n, t, q).computed_extremum >= measure(katona_family(n, t), q)


def test_witnesses_are_genuine_pairs():
    for n, t in [(3, 1), (4, 2), (5, 3)]:
        r = verify_tm1(n, t, Fraction(1, 5), Fraction(1, 8))
        for pair in [r.witness] + r.ties:
            F1 = SetFamily.from_sets(n, pair["F1"]["sets"])
            F2 = SetFamily.from_sets(n, pair["F2"]["sets"])
            assert is_cross_t_intersecting(F1, F2, t)
            assert measure(F1, Fraction(1, 5)) * measure(F2, Fraction(1, 8)) == r.computed_extremum
        assert r.witness == r.ties[0]


def relabel(F, perm):
    return SetFamily.from_sets(F.n, [[perm[e - 1] for e in s] for s in F.sets()])


def test_relabelled_witness_keeps_value():
    rng = random.Random(2)
    for n, t in [(4, 1), (5, 2)]:
        p1, p2 = Fraction(1, 6), Fraction(1, 8)
        r = verify_tm1(n, t, p1, p2)
        F1 = SetFamily.from_sets(n, r.witness["F1"]["sets"])
        F2 = SetFamily.from_sets(n, r.witness["F2"]["sets"])
        for _ in range(5):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            G1, G2 = relabel(F1, perm), relabel(F2, perm)
            assert is_cross_t_intersecting(G1, G2, t)
            assert measure(G1, p1) * measure(G2, p2) == r.computed_extremum


def test_workers_do_not_change_reports():
    for args in [(5, 1, Fraction(1, 5), Fraction(1, 8)), (4, 3, Fraction(1, 6), Fraction(1, 5))]:
        assert verify_tm1(*args, workers=1).to_dict() == verify_tm1(*args, workers=3).to_dict()
    assert verify_tm3(5, 2, Fraction(2, 3), workers=2).to_dict() == verify_tm3(5, 2, Fraction(2, 3)).to_dict()
    assert verify_katona_single(5, 2, workers=2).to_dict() == verify_katona_single(5, 2).to_dict()


# -- sequence verifiers --------------------------------------------------------


@pytest.mark.parametrize("m, n, t, expected", [(3, 2, 1, 9), (4, 2, 1, 16), (4, 2, 2, 1), (3, 2, 2, 1)])
def test_sequence_product_against_oracle(m, n, t, expected):
    assert oracles.seq_product_max(m, n, t) == expected
    r = verify_tm2(m, n, t)
    assert r.computed_extremum == expected == r.paper_bound
    H1 = SeqFamily.from_seqs(m, n, r.witness["H1"]["seqs"])
    H2 = SeqFamily.from_seqs(m, n, r.witness["H2"]["seqs"])
    assert len(H1) * len(H2) == expected
    assert is_cross_t_intersecting_seq(H1, H2, t)


@pytest.mark.parametrize(
    "m, n, tv, expected", [(3, 2, (1, 1, 0), 1), (2, 3, (1, 1), 4), (2, 4, (1, 1), 16), (3, 2, (0, 0, 0), 81)]
)
def test_symbol_threshold_product_against_oracle(m, n, tv, expected):
    assert oracles.seq_product_max(m, n, tv) == expected
    r = verify_tm4(m, n, tv)
    assert r.computed_extremum == r.paper_bound == expected
    H1 = SeqFamily.from_seqs(m, n, r.witness["H1"]["seqs"])
    H2 = SeqFamily.from_seqs(m, n, r.witness["H2"]["seqs"])
    assert is_cross_tvec_intersecting(H1, H2, tv)


def test_intersection_union_note():
    r = verify_tm4(2, 4, (1, 1))
    assert any("2^(2n-4) = 16" in s for s in r.notes)


@pytest.mark.parametrize("m, n, t, expected", [(3, 2, 1, 3), (2, 1, 1, 1), (4, 2, 2, 1), (2, 3, 1, 4)])
def test_largest_sequence_family_against_oracle(m, n, t, expected):
    assert oracles.seq_self_max(m, n, t) == expected
    r = verify_af(m, n, t)
    assert r.computed_extremum == expected
    assert r.passed


def test_sequence_search_not_below_cylinders():
    for m, n, t in [(3, 2, 1), (4, 2, 1), (2, 4, 1), (4, 2, 2)]:
        W = cylinder(m, n, {j: 1 for j in range(1, t + 1)})
        assert verify_tm2(m, n, t).computed_extremum >= len(W) * len(seq_dual(W, t))


def test_sequence_regimes():
    assert _m_regime(3, (2,)) == "proven"
    assert _m_regime(4, (3,)) == "conjectural"
    assert _m_regime(14, (13,)) == "conjectural"
    assert _m_regime(15, (14,)) == "proven"
    assert _m_regime(5, (3,)) == "proven"
    with pytest.raises(HypothesisError):
        _m_regime(3, (3,))
    r = verify_tm2(2, 2, 1)
    assert r.regime == "proven" and r.notes


def test_sequence_errors():
    with pytest.raises(HypothesisError):
        verify_tm2(2, 2, 2)
    with pytest.raises(HypothesisError):
        verify_tm2(3, 3, 1)
    with pytest.raises(HypothesisError):
        verify_tm2(3, 3, 1, "sampled", trials=5)
    with pytest.raises(HypothesisError):
        verify_tm2(4, 3, 1, "sampled", trials=5, seed=1)
    with pytest.raises(HypothesisError):
        verify_tm4(3, 2, (1, 1))
    with pytest.raises(HypothesisError):
        verify_tm4(2, 2, (2, 1))
    with pytest.raises(HypothesisError):
        verify_af(2, 2, 2)


def test_sampled_mode_reproducible():
    a = verify_tm2(3, 3, 1, "sampled", trials=40, seed=17)
    b = verify_tm2(3, 3, 1, "sampled", trials=40, seed=17)
    assert a.to_dict() == b.to_dict()
    assert a.trials == 40 and a.seed == 17
    assert a.computed_extremum == a.paper_bound == 81
    c = verify_tm4(3, 3, (1, 1, 0), "sampled", trials=30, seed=4)
    assert c.passed and c.computed_extremum >= 9
    H1 = SeqFamily.from_seqs(3, 3, c.witness["H1"]["seqs"])
    H2 = SeqFamily.from_seqs(3, 3, c.witness["H2"]["seqs"])
    assert is_cross_tvec_intersecting(H1, H2, (1, 1, 0))


# -- uniform-layer verifiers ---------------------------------------------------


def test_uniform_cross_examples():
    for n in (4, 5):
        r = verify_uniform_cross(n, 3, 3, 3)
        assert r.computed_extremum == r.paper_bound == 1
    s = verify_uniform_cross(6, 3, 3, 3, "sampled", trials=20, seed=3)
    assert s.computed_extremum == 1 and s.seed == 3
    assert verify_uniform_cross(6, 3, 3, 3, "sampled", trials=20, seed=3).to_dict() == s.to_dict()
    with pytest.raises(HypothesisError):
        verify_uniform_cross(6, 3, 3, 2)
    with pytest.raises(HypothesisError):
        verify_uniform_cross(3, 3, 3, 3)
    with pytest.raises(HypothesisError):
        verify_uniform_cross(6, 3, 3, 3)


def brute_daykin(n, a, b):
    A_layer = [S for S in oracles.subsets(n) if len(S) == a]
    B_layer = [S for S in oracles.subsets(n) if len(S) == b]
    best = -1
    for bitsA in range(1 << len(A_layer)):
        A = [S for i, S in enumerate(A_layer) if bitsA >> i & 1]
        if len(A) >= comb(n - 1, a - 1):
            best = max(best, sum(1 for B in B_layer if all(B & S for S in A)))
    return best


@pytest.mark.parametrize("n, a, b", [(4, 2, 2), (5, 2, 3), (2, 1, 1)])
def test_daykin_against_oracle(n, a, b):
    r = verify_daykin(n, a, b)
    assert r.computed_extremum == brute_daykin(n, a, b)
    assert r.passed and r.paper_bound == comb(n - 1, b - 1)


def test_daykin_errors():
    with pytest.raises(HypothesisError):
        verify_daykin(3, 2, 2)
    with pytest.raises(HypothesisError):
        verify_daykin(7, 2, 2)


# -- reduction -----------------------------------------------------------------


def test_sequence_to_set_reduction_examples():
    r = verify_le3_reduction(3, 2, 1)
    assert r.computed_extremum == r.paper_bound == 9
    r = verify_le3_reduction(4, 2, 2)
    assert r.computed_extremum == r.paper_bound == 1
    r = verify_le3_reduction(3, 2, 2)
    assert r.computed_extremum == 1 and r.passed
    with pytest.raises(HypothesisError):
        verify_le3_reduction(2, 2, 2)


# -- reports -------------------------------------------------------------------


def test_report_invariants():
    r = verify_tm3(3, 1, Fraction(2, 3))
    d = json.loads(r.to_json())
    assert d["pass"] is True and d["computed_extremum"] == "20/27"
    assert "trials" not in d and "seed" not in d
    with pytest.raises(ValueError):
        VerificationReport("TM1", {}, "exhaustive", 1, 1, {}, trials=3)
    with pytest.raises(ValueError):
        VerificationReport("XX", {}, "exhaustive", 1, 1, {})
    bad = VerificationReport("TM2", {"m": 3}, "exhaustive", 10, 9, {})
    assert not bad.passed and bad.failing
    conj = VerificationReport("TM1", {}, "exhaustive", 2, 1, {}, regime="conjectural")
    assert not conj.passed and not conj.failing


def test_reports_csv():
    rs = [verify_tm2(3, 2, 1), verify_tm2(3, 3, 1, "sampled", trials=3, seed=99)]
    lines = reports_to_csv(rs).splitlines()
    assert lines[0] == "theorem_id,params,mode,extremum,bound,pass,witness,seed"
    assert lines[1].startswith("TM2,m=3;n=2;t=1,exhaustive,9,9,true,")
    assert lines[2].endswith(",99")
