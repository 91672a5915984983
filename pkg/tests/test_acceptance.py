"""Acceptance criteria 1-10, each timed against its budget.

Run ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end) or ``python3 tests/test_acceptance.py``.
"""

import random
import time

import pytest

from affine_c.coproduct import phi0_delta_closed, verify_t_phip
from affine_c.golden import load_tables
from affine_c.nilcoxeter import (
    even_relation_check, expand_in_pp_basis, grassmannian_layer, pieri, pp_generator, pp_schubert,
)
from affine_c.nilhecke import delta_recursive, phi0_tensor
from affine_c.schubert import affine_stanley, dual_kschur, pair_dual, stanley_symmetry_check
from affine_c.symfunc import parse_partition
from affine_c.weyl import from_word, group_table
from affine_c.zee import build_zee, check_prop_p2

RESULTS: dict[int, str] = {}


def _golden_rows(kind, compute):
    bad = []
    seen = set()
    for t in load_tables(kind):
        cols = [parse_partition(c) for c in t.columns]
        rows = {from_word(t.n, w) for w in t.rows}
        if rows != set(grassmannian_layer(t.n, t.degree)):
            bad.append((t.n, t.degree, "row set"))
        for word, vals in t.rows.items():
            want = {lam: v for lam, v in zip(cols, vals) if v}
            if compute(t.n, from_word(t.n, word)) != want:
                bad.append((t.n, word))
        seen.add((t.n, t.degree))
    return bad, seen


def crit_1():
    expected = {(2, i) for i in range(1, 5)} | {(3, i) for i in range(1, 7)} | {(4, i) for i in range(1, 5)}
    seen, bad = set(), []
    for t in load_tables("pp"):
        for idx, terms in t.rows.items():
            seen.add((t.n, int(idx)))
            if dict(pp_generator(t.n, int(idx))) != {from_word(t.n, w): c for w, c in terms.items()}:
                bad.append((t.n, idx))
    return not bad and seen == expected, bad


def crit_2():
    bad, seen = _golden_rows("qfun", lambda n, w: affine_stanley(n, w).coeffs)
    want = {(n, d) for n in (2, 3) for d in range(1, 8)}
    return not bad and seen == want, bad


def crit_3():
    bad, seen = _golden_rows("pfun", dual_kschur)
    want = {(2, d) for d in range(1, 8)} | {(3, d) for d in range(0, 8)}
    return not bad and seen == want, bad


def crit_4():
    bad = []
    for n in (2, 3, 4):
        for v in build_zee(n):
            if v.length < 2 * n and not check_prop_p2(n, v):
                bad.append((n, v.word_str()))
    return not bad, bad


def crit_5():
    bad = [(n, r) for n in (2, 3) for r in range(1, 2 * n + 1) if not verify_t_phip(n, r)]
    return not bad, bad


def crit_6():
    bad = []
    for r in range(6):
        for w in group_table(2).layer(r):
            if phi0_delta_closed(2, w) != phi0_tensor(delta_recursive(w)):
                bad.append((2, w.word_str()))
    pool = [w for r in range(6) for w in group_table(3).layer(r)]
    for w in random.Random(2024).sample(pool, 50):
        if phi0_delta_closed(3, w) != phi0_tensor(delta_recursive(w)):
            bad.append((3, w.word_str()))
    return not bad, bad


def crit_7():
    bad = []
    for r in range(6):
        for w in grassmannian_layer(2, r):
            for i in range(1, 5):
                if pieri(2, i, w) != expand_in_pp_basis(2, pp_generator(2, i) * pp_schubert(2, w)):
                    bad.append((i, w.word_str()))
    return not bad, bad


def crit_8():
    bad = []
    for n in (2, 3):
        for d in range(8):
            layer = grassmannian_layer(n, d)
            for v in layer:
                for w in layer:
                    if pair_dual(n, v, w) != int(v == w):
                        bad.append((n, v.word_str(), w.word_str()))
    return not bad, bad


def crit_9():
    bad = [(n, w.word_str()) for n in (2, 3) for r in range(7) for w in group_table(n).layer(r)
           if not stanley_symmetry_check(n, w)]
    return not bad, bad


def crit_10():
    bad = [(n, m) for n in (2, 3) for m in range(1, n + 1) if not even_relation_check(n, m)]
    return not bad, bad


CRITERIA = [
    (1, "golden special generators", 10, crit_1),
    (2, "golden affine Stanley tables", 60, crit_2),
    (3, "golden dual tables", 60, crit_3),
    (4, "coroot sums over Z covers", 30, crit_4),
    (5, "coproduct of special generators", 300, crit_5),
    (6, "closed vs recursive coproduct", None, crit_6),
    (7, "Pieri rule vs products", None, crit_7),
    (8, "duality pairing", None, crit_8),
    (9, "symmetry of affine Stanley functions", None, crit_9),
    (10, "even generator relation", None, crit_10),
]


def _run(num, title, budget, fn):
    start = time.perf_counter()
    ok, bad = fn()
    elapsed = time.perf_counter() - start
    in_budget = budget is None or elapsed <= budget
    status = "PASS" if ok and in_budget else "FAIL"
    limit = f"budget {budget}s" if budget is not None else "no budget"
    line = f"criterion {num:>2}: {status}  {title}  ({elapsed:.2f}s, {limit})"
    if not ok:
        line += f"  mismatches: {bad[:5]}"
    elif not in_budget:
        line += "  over budget"
    RESULTS[num] = line
    return ok, in_budget, bad


@pytest.mark.parametrize("num,title,budget,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, budget, fn):
    ok, in_budget, bad = _run(num, title, budget, fn)
    print(RESULTS[num])
    assert ok, f"mismatches: {bad[:10]}"
    assert in_budget, RESULTS[num]


if __name__ == "__main__":
    for c in CRITERIA:
        _run(*c)
        print(RESULTS[c[0]])
