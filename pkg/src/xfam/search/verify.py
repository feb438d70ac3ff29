"""Desk-scale verification of the intersection bounds.

Set-family searches run over up-sets only.  Taking supersets keeps a pair
cross t-intersecting and never lowers a p-biased measure (nor a count), and
for a fixed first family the best partner is its t-dual, which is itself an
up-set.  So the maximum over all cross pairs equals the maximum over up-sets
``F1`` paired with ``t_dual(F1)``: 7581 candidates at ``n = 5`` instead of
``2**64`` pairs.

Sequence searches have no such reduction.  They run over all ``2**(m**n)``
first families with a subset DP on dual indicators (``m**n <= 16``) or on
seeded random samples.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .. import bits
from ..rational import as_rational
from ..seqfam import SeqFamily, cylinder, decode, seq_dual, threshold_table
from ..setfam import elems_of, katona_family, k_subsets, measure, principal_family
from .report import HypothesisError, VerificationReport
from .rng import SplitMix64
from .upsets import upset_indicators

DESK_N = 5
MAX_TIES = 64
SEARCH_NOTE = (
    "search-space justification: up-closing both families preserves cross "
    "t-intersection and never lowers the objective; the best partner of F1 is t_dual(F1)"
)
# below this both p's put t = 2 in the proven range
T2_PROVEN_P = Fraction(50, 169)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise HypothesisError(msg)


# -- set-family helpers ---------------------------------------------------


@lru_cache(maxsize=None)
def upset_profiles(n: int, t: int):
    """``(F1, dual, counts(F1), counts(dual))`` for every up-set ``F1`` on ``[n]``."""
    out = []
    for ind in upset_indicators(n):
        d = bits.dual(n, ind, t)
        out.append((ind, d, bits.layer_counts(n, ind), bits.layer_counts(n, d)))
    return tuple(out)


def _members(ind: int) -> tuple[int, ...]:
    return tuple(bits.iter_bits(ind))


def _set_pair(n: int, a: int, b: int) -> dict:
    return {
        "F1": {"n": n, "sets": [elems_of(s) for s in _members(a)]},
        "F2": {"n": n, "sets": [elems_of(s) for s in _members(b)]},
    }


def _score_chunk(args):
    kind, n, chunk, pa, pb = args
    best, ties = None, []
    for ind, d, c1, c2 in chunk:
        if kind == "product":
            s = bits.mask_size_weights(n, c1, *pa) * bits.mask_size_weights(n, c2, *pb)
        elif kind == "min":
            s = min(bits.mask_size_weights(n, c1, *pa), bits.mask_size_weights(n, c2, *pa))
        else:  # "self": size of a t-intersecting up-set
            if ind & ~d:
                continue
            s = sum(c1)
        if best is None or s > best:
            best, ties = s, [(ind, d)]
        elif s == best:
            ties.append((ind, d))
    return best, ties


def _best(kind: str, n: int, profiles, pa=None, pb=None, workers: int = 1):
    """Max score over profiles, with every tied ``(F1, dual)`` pair.

    Chunks are combined by max and tie union, so the answer is the same
    for any worker count.
    """
    if workers <= 1 or len(profiles) < 2 * workers:
        parts = [_score_chunk((kind, n, profiles, pa, pb))]
    else:
        step = -(-len(profiles) // workers)
        jobs = [(kind, n, profiles[i : i + step], pa, pb) for i in range(0, len(profiles), step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_score_chunk, jobs))
    parts = [p for p in parts if p[0] is not None]
    best = max(p[0] for p in parts)
    ties = [pair for s, ts in parts if s == best for pair in ts]
    ties.sort(key=lambda pr: (_members(pr[0]), _members(pr[1])))
    return best, ties


def _tie_fields(n: int, ties) -> dict:
    return {
        "witness": _set_pair(n, *ties[0]),
        "ties": [_set_pair(n, *pr) for pr in ties[:MAX_TIES]],
        "tie_count": len(ties),
    }


def cross_measure_extremum(n: int, t: int, p1, p2, workers: int = 1):
    """Max of ``mu_p1(F1) * mu_p2(F2)`` over cross t-intersecting pairs on ``[n]``.

    Returns the exact value and the sorted list of tied ``(F1, F2)``
    indicator pairs.
    """
    p1, p2 = as_rational(p1), as_rational(p2)
    pa, pb = (p1.numerator, p1.denominator), (p2.numerator, p2.denominator)
    best, ties = _best("product", n, upset_profiles(n, t), pa, pb, workers)
    return Fraction(best, (p1.denominator * p2.denominator) ** n), ties


def verify_tm1(n: int, t: int, p1, p2, workers: int = 1) -> VerificationReport:
    """Product-measure bound ``mu_p1(F1) mu_p2(F2) <= (p1 p2)^t`` for ``p1, p2 < 1/(t+1)``."""
    p1, p2 = as_rational(p1), as_rational(p2)
    _require(n >= t >= 1, f"need n >= t >= 1, got n={n}, t={t}")
    _require(n <= DESK_N, f"exhaustive search needs n <= {DESK_N}, got {n}")
    for name, p in (("p1", p1), ("p2", p2)):
        _require(0 < p < Fraction(1, t + 1), f"{name}={p} must lie in (0, 1/{t + 1})")
    value, ties = cross_measure_extremum(n, t, p1, p2, workers)
    regime = "proven"
    notes = [SEARCH_NOTE]
    if t == 2 and p1 != p2 and max(p1, p2) >= T2_PROVEN_P:
        regime = "conjectural"
        notes.append("t = 2 with p1 != p2 above 1/3.38 is an open case")
    if any(a == b and a in _principal_set(n, t) for a, b in ties):
        notes.append("a principal pair attains the extremum")
    return VerificationReport(
        "TM1",
        {"n": n, "t": t, "p1": p1, "p2": p2},
        "exhaustive",
        value,
        (p1 * p2) ** t,
        regime=regime,
        notes=notes,
        **_tie_fields(n, ties),
    )


@lru_cache(maxsize=None)
def _principal_set(n: int, t: int) -> frozenset[int]:
    """Indicators of all principal families with a t-element kernel."""
    return frozenset(principal_family(n, elems_of(T)).indicator for T in k_subsets(n, t))


def has_principal_witness(report: VerificationReport) -> bool:
    n, t = report.params["n"], report.params["t"]
    kernels = {tuple(map(tuple, principal_family(n, elems_of(T)).sets())) for T in k_subsets(n, t)}
    for pair in report.ties:
        f1 = tuple(map(tuple, pair["F1"]["sets"]))
        f2 = tuple(map(tuple, pair["F2"]["sets"]))
        if f1 == f2 and f1 in kernels:
            return True
    return False


def verify_tm3(n: int, t: int, p, workers: int = 1) -> VerificationReport:
    """``min(mu_p(F1), mu_p(F2)) <= mu_p(K(n, t))`` for ``p >= 1/2``."""
    p = as_rational(p)
    _require(n >= t >= 1, f"need n >= t >= 1, got n={n}, t={t}")
    _require(n <= DESK_N, f"exhaustive search needs n <= {DESK_N}, got {n}")
    _require(Fraction(1, 2) <= p < 1, f"p={p} must lie in [1/2, 1)")
    pa = (p.numerator, p.denominator)
    best, ties = _best("min", n, upset_profiles(n, t), pa, None, workers)
    notes = [SEARCH_NOTE]
    if p == Fraction(1, 2):
        notes.append("p = 1/2: also the counting bound min(|F1|, |F2|) <= |K(n,t)|")
    return VerificationReport(
        "TM3",
        {"n": n, "t": t, "p": p},
        "exhaustive",
        Fraction(best, p.denominator**n),
        measure(katona_family(n, t), p),
        notes=notes,
        **_tie_fields(n, ties),
    )


def verify_katona_single(n: int, t: int, workers: int = 1) -> VerificationReport:
    """Largest t-intersecting family against ``|K(n, t)|``."""
    _require(1 <= t <= n, f"need 1 <= t <= n, got n={n}, t={t}")
    _require(n <= DESK_N, f"exhaustive search needs n <= {DESK_N}, got {n}")
    best, ties = _best("self", n, upset_profiles(n, t), workers=workers)
    fields = _tie_fields(n, ties)
    fields["witness"] = fields["witness"]["F1"]
    fields["ties"] = [pr["F1"] for pr in fields["ties"]]
    return VerificationReport(
        "KATONA", {"n": n, "t": t}, "exhaustive", best, len(katona_family(n, t)), notes=[SEARCH_NOTE], **fields
    )


# -- subset DP over small candidate pools -----------------------------------


def subset_duals(table) -> np.ndarray:
    """``out[S]`` = AND of ``table[i]`` over bits ``i`` of ``S`` (all ones for S = 0).

    ``table[i]`` is an indicator over a partner pool of at most 64 items.
    """
    k = len(table)
    _require(k <= 16, f"subset DP over 2^{k} families is beyond desk scale")
    out = np.empty(1 << k, dtype=np.uint64)
    out[0] = np.uint64((1 << 64) - 1)
    for i, row in enumerate(table):
        out[1 << i : 2 << i] = out[: 1 << i] & np.uint64(row)
    return out


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def _ties_from(score: np.ndarray, best, dual: np.ndarray, key):
    idx = np.flatnonzero(score == best).tolist()
    ties = sorted(((s, int(dual[s])) for s in idx), key=key)
    return ties


def _bit_members(x: int, pool) -> list:
    return [pool[i] for i in bits.iter_bits(x)]


@lru_cache(maxsize=None)
def seq_search(m: int, n: int, t):
    """Per-family sizes and dual indicators for all families in ``[m]^n``."""
    N = m**n
    _require(N <= 16, f"exhaustive mode needs m^n <= 16, got {m}^{n} = {N}")
    table = threshold_table(m, n, t)
    dual = subset_duals(table) & np.uint64((1 << N) - 1)
    return _popcount(np.arange(1 << N, dtype=np.uint64)), dual


def _seq_obj(m: int, n: int, x: int) -> dict:
    return {"m": m, "n": n, "seqs": [list(decode(m, n, i)) for i in bits.iter_bits(x)]}


def _seq_key(pr):
    return (_members(pr[0]), _members(pr[1]))


def seq_product_extremum(m: int, n: int, t):
    size, dual = seq_search(m, n, t)
    score = size * _popcount(dual)
    best = int(score.max())
    return best, _ties_from(score, best, dual, _seq_key)


def _m_regime(m: int, ts) -> str:
    """Regime for per-symbol thresholds ``ts``; ``m < t+1`` is rejected."""
    regime = "proven"
    for ti in ts:
        if ti == 0:
            continue
        _require(m >= ti + 1, f"need m > t+1 (m = t+1 at the boundary), got m={m}, t={ti}")
        if m == ti + 1 and 3 <= ti <= 13:
            regime = "conjectural"
    return regime


def _seq_pair(m, n, a, b) -> dict:
    return {"H1": _seq_obj(m, n, a), "H2": _seq_obj(m, n, b)}


def _sample_seq_pairs(m: int, n: int, t, trials: int, seed: int):
    """Seeded random maximal pairs: ``H2 = dual(R)``, ``H1 = dual(H2)`` for a random small ``R``."""
    rng = SplitMix64(seed)
    N = m**n
    for _ in range(trials):
        k = 1 + rng.below(3)
        R = SeqFamily(m, n, rng.sample(range(N), min(k, N)))
        H2 = seq_dual(R, t)
        H1 = seq_dual(H2, t)
        yield H1, H2


def _seq_verify(thm, m, n, t, ts, mode, trials, seed, witness_pins, params, notes):
    bound = (m ** (n - sum(ts))) ** 2
    regime = _m_regime(m, ts)
    if mode == "exhaustive":
        best, ties = seq_product_extremum(m, n, t)
        return VerificationReport(
            thm,
            params,
            "exhaustive",
            best,
            bound,
            witness=_seq_pair(m, n, *ties[0]),
            ties=[_seq_pair(m, n, *pr) for pr in ties[:MAX_TIES]],
            tie_count=len(ties),
            regime=regime,
            notes=notes,
        )
    _require(mode == "sampled", f"unknown mode {mode!r}")
    _require(m**n <= 27, f"sampled mode needs m^n <= 27, got {m**n}")
    _require(trials is not None and trials >= 1, "sampled mode needs trials >= 1")
    _require(seed is not None, "sampled mode needs an explicit seed")
    W = cylinder(m, n, witness_pins)
    cands = [(W, seq_dual(W, t))]
    cands += list(_sample_seq_pairs(m, n, t, trials, seed))
    scored = [(len(a) * len(b), a.members, b.members, a, b) for a, b in cands]
    best = max(s[0] for s in scored)
    tied = sorted((s for s in scored if s[0] == best), key=lambda s: (s[1], s[2]))
    _, _, _, a, b = tied[0]
    wit = {"H1": {"m": m, "n": n, "seqs": [list(x) for x in a.seqs()]},
           "H2": {"m": m, "n": n, "seqs": [list(x) for x in b.seqs()]}}
    return VerificationReport(
        thm, params, "sampled", best, bound, witness=wit, tie_count=len(tied),
        regime=regime, trials=trials, seed=seed, notes=notes,
    )


def verify_tm2(m: int, n: int, t: int, mode: str = "exhaustive", trials=None, seed=None) -> VerificationReport:
    """``|H1| |H2| <= (m^(n-t))^2`` for cross t-intersecting sequence families."""
    _require(n >= t >= 1, f"need n >= t >= 1, got n={n}, t={t}")
    notes = []
    if m == t + 1:
        notes.append("m = t+1 boundary: proven only for t <= 2 or t >= 14")
    return _seq_verify(
        "TM2", m, n, t, (t,), mode, trials, seed, {j: 1 for j in range(1, t + 1)},
        {"m": m, "n": n, "t": t}, notes,
    )


def tvec_pins(tvec) -> dict[int, int]:
    """Pin the first ``t_1`` coordinates to 1, the next ``t_2`` to 2, and so on."""
    pins, j = {}, 1
    for sym, ti in enumerate(tvec, 1):
        for _ in range(ti):
            pins[j] = sym
            j += 1
    return pins


def verify_tm4(m: int, n: int, tvec, mode: str = "exhaustive", trials=None, seed=None) -> VerificationReport:
    """``|H1| |H2| <= (m^(n - sum t_i))^2`` for cross (t_1..t_m)-intersecting families."""
    tvec = tuple(int(v) for v in tvec)
    _require(m >= 2, f"need m >= 2, got {m}")
    _require(len(tvec) == m, f"threshold vector needs {m} entries, got {len(tvec)}")
    _require(min(tvec) >= 0, "threshold entries must be non-negative")
    _require(n >= sum(tvec), f"need n >= sum(t) = {sum(tvec)}, got n={n}")
    notes = []
    if any(ti and m == ti + 1 for ti in tvec):
        notes.append("m = t_i+1 boundary: proven only for t_i <= 2 or t_i >= 14")
    if m == 2 and tvec == (1, 1):
        notes.append(f"cross intersection-union bound |F1||F2| <= 2^(2n-4) = {2 ** (2 * n - 4)}")
    return _seq_verify(
        "TM4", m, n, tvec, tvec, mode, trials, seed, tvec_pins(tvec),
        {"m": m, "n": n, "t": tvec}, notes,
    )


def verify_af(m: int, n: int, t: int) -> VerificationReport:
    """Largest t-intersecting family in ``[m]^n`` against ``m^(n-t)``."""
    _require(n >= t >= 1, f"need n >= t >= 1, got n={n}, t={t}")
    _require(m >= t + 1, f"need m >= t+1, got m={m}, t={t}")
    size, dual = seq_search(m, n, t)
    fam = np.arange(len(dual), dtype=np.uint64)
    ok = (fam & ~dual) == 0
    score = np.where(ok, size, -1)
    best = int(score.max())
    ties = sorted(np.flatnonzero(score == best).tolist(), key=_members)
    return VerificationReport(
        "AF",
        {"m": m, "n": n, "t": t},
        "exhaustive",
        best,
        m ** (n - t),
        witness=_seq_obj(m, n, ties[0]),
        ties=[_seq_obj(m, n, s) for s in ties[:MAX_TIES]],
        tie_count=len(ties),
    )


# -- uniform families --------------------------------------------------------


def _layer_table(n: int, rows, cols, t: int) -> list[int]:
    """``table[i]`` = indicator over ``cols`` of sets meeting ``rows[i]`` in ``>= t``."""
    return [sum(1 << j for j, c in enumerate(cols) if (r & c).bit_count() >= t) for r in rows]


def _layer_obj(n: int, pool, x: int) -> dict:
    return {"n": n, "sets": [elems_of(s) for s in _bit_members(x, pool)]}


def verify_uniform_cross(n: int, k: int, l: int, t: int, mode: str = "exhaustive", trials=None, seed=None):
    """``|A| |B| <= C(n-t, k-t) C(n-t, l-t)`` for cross t-intersecting k- and l-uniform families."""
    _require(k >= l >= t >= 3, f"need k >= l >= t >= 3, got k={k}, l={l}, t={t}")
    _require(n >= (t + 1) * (k - t + 1), f"need n >= (t+1)(k-t+1) = {(t + 1) * (k - t + 1)}, got n={n}")
    bits.check_n(n)
    K, L = k_subsets(n, k), k_subsets(n, l)
    _require(len(L) <= 64, f"the l-layer has {len(L)} sets; at most 64 supported")
    bound = comb(n - t, k - t) * comb(n - t, l - t)
    params = {"n": n, "k": k, "l": l, "t": t}
    table = _layer_table(n, K, L, t)
    if mode == "exhaustive":
        _require(len(K) <= 16, f"exhaustive mode needs C(n,k) <= 16, got {len(K)}")
        dual = subset_duals(table) & np.uint64((1 << len(L)) - 1)
        score = _popcount(np.arange(1 << len(K), dtype=np.uint64)) * _popcount(dual)
        best = int(score.max())
        ties = _ties_from(score, best, dual, lambda pr: (tuple(_bit_members(pr[0], K)), tuple(_bit_members(pr[1], L))))
        pair = lambda a, b: {"A": _layer_obj(n, K, a), "B": _layer_obj(n, L, b)}  # noqa: E731
        return VerificationReport(
            "LE1", params, "exhaustive", best, bound,
            witness=pair(*ties[0]), ties=[pair(*pr) for pr in ties[:MAX_TIES]], tie_count=len(ties),
        )
    _require(mode == "sampled", f"unknown mode {mode!r}")
    _require(trials is not None and trials >= 1, "sampled mode needs trials >= 1")
    _require(seed is not None, "sampled mode needs an explicit seed")
    back = _layer_table(n, L, K, t)
    kernel = (1 << t) - 1
    star = sum(1 << i for i, s in enumerate(K) if s & kernel == kernel)
    full_k, full_l = (1 << len(K)) - 1, (1 << len(L)) - 1

    def partner(x, rows, everything):
        out = everything
        for i in bits.iter_bits(x):
            out &= rows[i]
        return out

    rng = SplitMix64(seed)
    best, best_pair = -1, None
    for a in [star] + [rng.bits(len(K)) for _ in range(trials)]:
        b = partner(a, table, full_l)
        # also try the largest A' that still fits against b
        a2 = partner(b, back, full_k) if b else a
        for x in (a, a2):
            y = partner(x, table, full_l)
            s = x.bit_count() * y.bit_count()
            if s > best:
                best, best_pair = s, (x, y)
    return VerificationReport(
        "LE1", params, "sampled", best, bound,
        witness={"A": _layer_obj(n, K, best_pair[0]), "B": _layer_obj(n, L, best_pair[1])},
        trials=trials, seed=seed,
    )


def verify_daykin(n: int, a: int, b: int) -> VerificationReport:
    """Cross-intersecting a- and b-uniform families: ``|A| >= C(n-1, a-1)`` forces ``|B| <= C(n-1, b-1)``."""
    _require(a >= 1 and b >= 1, f"need a, b >= 1, got a={a}, b={b}")
    _require(n >= a + b, f"need n >= a+b = {a + b}, got n={n}")
    bits.check_n(n)
    A, B = k_subsets(n, a), k_subsets(n, b)
    _require(len(A) <= 16, f"exhaustive mode needs C(n,a) <= 16, got {len(A)}")
    _require(len(B) <= 64, f"the b-layer has {len(B)} sets; at most 64 supported")
    dual = subset_duals(_layer_table(n, A, B, 1)) & np.uint64((1 << len(B)) - 1)
    size = _popcount(np.arange(1 << len(A), dtype=np.uint64))
    score = np.where(size >= comb(n - 1, a - 1), _popcount(dual), -1)
    best = int(score.max())
    ties = _ties_from(score, best, dual, lambda pr: (tuple(_bit_members(pr[0], A)), tuple(_bit_members(pr[1], B))))
    pair = lambda x, y: {"A": _layer_obj(n, A, x), "B": _layer_obj(n, B, y)}  # noqa: E731
    return VerificationReport(
        "LE8",
        {"n": n, "a": a, "b": b},
        "exhaustive",
        best,
        comb(n - 1, b - 1),
        witness=pair(*ties[0]),
        ties=[pair(*pr) for pr in ties[:MAX_TIES]],
        tie_count=len(ties),
        notes=[f"maximum |B| over all A with |A| >= {comb(n - 1, a - 1)}"],
    )


def verify_le3_reduction(m: int, n: int, t: int) -> VerificationReport:
    """Sequence extremum against ``m^(2n)`` times the set extremum at ``p = 1/m``."""
    _require(n >= t >= 1, f"need n >= t >= 1, got n={n}, t={t}")
    _require(m >= t + 1, f"need m >= t+1, got m={m}, t={t}")
    _require(n <= DESK_N, f"need n <= {DESK_N}, got {n}")
    lhs, ties = seq_product_extremum(m, n, t)
    p = Fraction(1, m)
    sets_best, set_ties = cross_measure_extremum(n, t, p, p)
    rhs = m ** (2 * n) * sets_best
    return VerificationReport(
        "LE3",
        {"m": m, "n": n, "t": t},
        "exhaustive",
        lhs,
        rhs,
        witness={"sequences": _seq_pair(m, n, *ties[0]), "sets": _set_pair(n, *set_ties[0])},
        tie_count=len(ties),
        notes=["extremum: sequence product; bound: m^(2n) times the best 1/m-measure product"],
    )
