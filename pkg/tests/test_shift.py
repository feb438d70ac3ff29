import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from xfam.setfam import (
    SetFamily,
    is_cross_t_intersecting,
    katona_family,
    measure,
    power_set,
    principal_family,
    t_dual,
)
from xfam.shift import (
    ShiftSpec,
    check_layer_sandwich,
    is_fully_stable,
    is_stable,
    level_pairs,
    min_member_size,
    potential,
    shift_AB,
    stabilize_pair,
)

F = SetFamily.from_sets
S = ShiftSpec.from_sets


def test_shift_examples():
    assert shift_AB(F(3, [{3}]), S([], [1])).sets() == [[1, 3]]
    # the image {1,2} is already present, so {2,3} stays put
    fam = F(3, [{1, 2}, {2, 3}])
    assert shift_AB(fam, S([3], [1])) == fam
    assert shift_AB(F(3, [{1}]), S([1], [2, 3])).sets() == [[2, 3]]


def test_shift_spec_rejects_overlap():
    with pytest.raises(ValueError):
        S([1, 2], [2, 3])


def test_shift_outside_ground_set():
    with pytest.raises(ValueError):
        shift_AB(F(2, [{1}]), S([], [3]))


def random_family(rng, n):
    return SetFamily(n, [m for m in range(1 << n) if rng.random() < 0.4])


def random_shift(rng, n, strict_growth=True):
    ground = list(range(1, n + 1))
    rng.shuffle(ground)
    a = rng.randint(0, (n - 1) // 2)
    b = rng.randint(a + 1, n - a) if strict_growth else rng.randint(0, n - a)
    return ground[:a], ground[a : a + b]


def test_shift_matches_oracle():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randint(1, 6)
        fam = random_family(rng, n)
        A, B = random_shift(rng, n, strict_growth=False)
        got = shift_AB(fam, S(A, B))
        assert oracles.to_oracle(got) == oracles.shift(oracles.to_oracle(fam), A, B)
        assert len(got) == len(fam)


def test_level_pairs_order_and_count():
    for n in range(1, 7):
        for k in range(n):
            pairs = level_pairs(n, k)
            assert list(pairs) == sorted(pairs)
            assert len(pairs) == sum(1 for _ in oracles.disjoint_pairs(n, k))
            assert all(a & b == 0 and a.bit_count() == k and b.bit_count() == k + 1 for a, b in pairs)


def test_is_stable_examples():
    for n in range(1, 5):
        for k in range(n):
            assert is_stable(power_set(n), k)
    assert not is_stable(F(2, [{1}]), 0)
    K = katona_family(4, 1)
    Ko = oracles.to_oracle(K)
    for k in range(4):
        assert is_stable(K, k)
        assert oracles.stable(Ko, 4, k)


def test_is_stable_matches_oracle():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(1, 5)
        fam = random_family(rng, n)
        k = rng.randint(0, n - 1)
        assert is_stable(fam, k) == oracles.stable(oracles.to_oracle(fam), n, k)


def test_is_stable_level_range():
    with pytest.raises(ValueError):
        is_stable(power_set(3), 3)


def test_stabilize_single_step():
    A = F(2, [{1}])
    G1, G2, trace = stabilize_pair(A, A, 1)
    assert G1.sets() == G2.sets() == [[1, 2]]
    assert len(trace.steps) == 1 and trace.steps[0].level == 0


def test_stabilize_katona_is_fixed():
    K = katona_family(4, 1)
    G1, G2, trace = stabilize_pair(K, K, 1)
    assert G1 == G2 == K
    assert trace.steps == []


def test_stabilize_principal_3_1():
    P = principal_family(3, {1})
    G1, G2, trace = stabilize_pair(P, P, 1)
    assert G1 == G2 == katona_family(3, 1)
    assert [(s.level, s.A, s.B) for s in trace.steps] == [(1, 0b001, 0b110)]


def test_stabilize_rejects_non_cross_pair():
    with pytest.raises(ValueError):
        stabilize_pair(F(3, [{1}]), F(3, [{2}]), 1)


def test_trace_serialisation():
    P = principal_family(3, {1})
    _, _, trace = stabilize_pair(P, P, 1)
    assert json.loads(trace.to_json()) == [{"level": 1, "A": [1], "B": [2, 3], "potential": trace.final_potential}]
    lines = trace.to_csv().splitlines()
    assert lines[0] == "step,level,A,B,potential"
    assert lines[1] == f"1,1,1,2 3,{trace.final_potential}"
    assert trace.initial_potential == potential(P, P) == 16
    assert trace.final_potential == 18


def test_min_member_size_and_sandwich():
    assert min_member_size(F(3, [{1, 2}, {1, 2, 3}])) == 2
    assert min_member_size(F(5, [range(1, 6)])) == 5
    assert min_member_size(katona_family(4, 1)) == 2
    assert check_layer_sandwich(katona_family(4, 2))
    # u = 1 and {1,2} is the only larger set; {2} sits on layer u so may be absent
    assert check_layer_sandwich(F(2, [{1}, {1, 2}]))
    assert not check_layer_sandwich(F(3, [{1}, {1, 2}, {1, 2, 3}]))
    assert check_layer_sandwich(F(4, [range(1, 5)]))
    with pytest.raises(ValueError):
        min_member_size(SetFamily(3))
    with pytest.raises(ValueError):
        check_layer_sandwich(SetFamily(3))


PS = [Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)]


@given(st.integers(0, 2**32 - 1))
def test_shift_never_lowers_measure(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    fam = random_family(rng, n)
    A, B = random_shift(rng, n)
    out = shift_AB(fam, S(A, B))
    for p in PS:
        before, after = measure(fam, p), measure(out, p)
        if p == Fraction(1, 2):
            assert after == before
        elif out != fam:
            assert after > before
        else:
            assert after == before


def random_cross_pair(rng, n, t):
    while True:
        seed = SetFamily(n, rng.sample(range(1 << n), rng.randint(1, 3)))
        D = t_dual(seed, t)
        if not D.members:
            continue
        F2 = SetFamily(n, [m for m in D.members if rng.random() < 0.5] or [D.members[-1]])
        F1 = t_dual(F2, t)
        F1 = SetFamily(n, [m for m in F1.members if rng.random() < 0.6] or [F1.members[-1]])
        return F1, F2


def test_stabilize_properties_sample():
    rng = random.Random(21)
    for _ in range(60):
        t = rng.randint(1, 3)
        n = rng.randint(max(t, 2), 5)
        F1, F2 = random_cross_pair(rng, n, t)
        G1, G2, trace = stabilize_pair(F1, F2, t)
        assert is_cross_t_intersecting(G1, G2, t)
        assert is_fully_stable(G1) and is_fully_stable(G2)
        assert check_layer_sandwich(G1) and check_layer_sandwich(G2)
        assert trace.is_monotone() and trace.final_potential <= trace.potential_bound
        assert trace.final_potential == potential(G1, G2)
        assert min_member_size(G1) + min_member_size(G2) >= n + t - 1
        for p in PS:
            assert measure(G1, p) >= measure(F1, p)
            assert measure(G2, p) >= measure(F2, p)
