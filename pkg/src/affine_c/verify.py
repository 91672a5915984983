"""Regression checks against the reference tables plus the property suite.

Checks are granular (one per table row) so that a single bad entry shows up
as a single failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .coproduct import phi0_delta_closed, verify_t_phip
from .golden import GoldenTable, checksum_drift, load_tables
from .nilcoxeter import (
    even_relation_check, expand_in_pp_basis, grassmannian_layer, pieri, pp_generator,
    pp_schubert,
)
from .nilhecke import delta_recursive, phi0_tensor
from .schubert import affine_stanley, dual_kschur, pair_dual, stanley_symmetry_check
from .symfunc import format_partition, partitions, strict_partitions, parse_partition
from .weyl import from_word, group_table, is_grassmannian
from .zee import build_zee, check_prop_p2

__all__ = ["Check", "Report", "SUITES", "run_suite"]

SUITES = ("appendix-a", "appendix-b", "appendix-c", "properties", "all")


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "passed": sum(c.ok for c in self.checks),
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
            "warnings": self.warnings,
            "checks": [asdict(c) for c in self.checks],
        }


def _guard(suite: str, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        res = fn()
    except (ValueError, ArithmeticError, KeyError, IndexError) as exc:
        return Check(suite, name, False, f"{type(exc).__name__}: {exc}")
    ok, detail = res if isinstance(res, tuple) else (res, "")
    return Check(suite, name, bool(ok), detail)


def _appendix_a(directory) -> Iterator[Check]:
    for t in load_tables("pp", directory):
        for idx, terms in sorted(t.rows.items()):
            def fn(t=t, idx=idx, terms=terms):
                want = {from_word(t.n, w): c for w, c in terms.items()}
                got = dict(pp_generator(t.n, int(idx)))
                return want == got, "" if want == got else f"computed {pp_generator(t.n, int(idx))}"
            yield _guard("appendix-a", f"n={t.n} P{idx}", fn)


def _table_checks(suite: str, t: GoldenTable, compute, columns_expected) -> Iterator[Check]:
    cols = [parse_partition(c) for c in t.columns]

    def layout():
        rows = {from_word(t.n, w) for w in t.rows}
        grass = set(grassmannian_layer(t.n, t.degree))
        if rows != grass:
            return False, f"rows cover {len(rows)} of {len(grass)} Grassmannian elements"
        if set(cols) != set(columns_expected):
            return False, "columns differ from the expected partitions"
        return True
    yield _guard(suite, f"n={t.n} degree {t.degree} layout", layout)
    for word, vals in t.rows.items():
        def fn(word=word, vals=vals):
            want = {lam: v for lam, v in zip(cols, vals) if v}
            got = compute(t.n, from_word(t.n, word))
            if got == want:
                return True
            shown = {format_partition(k): v for k, v in got.items()}
            return False, f"computed {shown}"
        yield _guard(suite, f"n={t.n} {word or 'e'}", fn)


def _appendix_b(directory) -> Iterator[Check]:
    for t in load_tables("qfun", directory):
        yield from _table_checks("appendix-b", t, lambda n, w: affine_stanley(n, w).coeffs,
                                 partitions(t.degree, 2 * t.n))


def _appendix_c(directory) -> Iterator[Check]:
    for t in load_tables("pfun", directory):
        yield from _table_checks("appendix-c", t, dual_kschur, strict_partitions(t.degree))


def _properties(directory) -> Iterator[Check]:
    s = "properties"
    for n in (2, 3, 4):
        z = build_zee(n)
        vs = [v for v in z if v.length < 2 * n]
        yield _guard(s, f"coroot sums n={n}", lambda n=n, vs=vs: all(check_prop_p2(n, v) for v in vs))
    for n in (2, 3):
        for r in range(1, 2 * n + 1):
            yield _guard(s, f"coproduct of P{r} n={n}", lambda n=n, r=r: verify_t_phip(n, r))
    yield _guard(s, "closed coproduct n=2", lambda: all(
        phi0_delta_closed(2, w) == phi0_tensor(delta_recursive(w))
        for r in range(6) for w in group_table(2).layer(r)))
    pool = [w for r in range(6) for w in group_table(3).layer(r)]
    sample = random.Random(0).sample(pool, 50)
    yield _guard(s, "closed coproduct n=3 sample", lambda: all(
        phi0_delta_closed(3, w) == phi0_tensor(delta_recursive(w)) for w in sample))
    yield _guard(s, "pieri n=2", lambda: all(
        pieri(2, i, w) == expand_in_pp_basis(2, pp_generator(2, i) * pp_schubert(2, w))
        for r in range(6) for w in grassmannian_layer(2, r) for i in range(1, 5)))
    for n in (2, 3):
        def duality(n=n):
            for d in range(8):
                layer = grassmannian_layer(n, d)
                for v in layer:
                    for w in layer:
                        if pair_dual(n, v, w) != int(v == w):
                            return False, f"pairing of {v.word_str()} with {w.word_str()}"
            return True
        yield _guard(s, f"duality n={n}", duality)
        yield _guard(s, f"symmetry n={n}", lambda n=n: all(
            stanley_symmetry_check(n, w) for r in range(7) for w in group_table(n).layer(r)))
        yield _guard(s, f"even relation n={n}", lambda n=n: all(
            even_relation_check(n, m) for m in range(1, n + 1)))


_RUNNERS = {
    "appendix-a": _appendix_a,
    "appendix-b": _appendix_b,
    "appendix-c": _appendix_c,
    "properties": _properties,
}


def run_suite(name: str, directory=None) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    names = list(_RUNNERS) if name == "all" else [name]
    report = Report()
    start = time.perf_counter()
    if any(x.startswith("appendix") for x in names):
        drift = checksum_drift(directory)
        if drift:
            report.warnings.append("golden files differ from the recorded checksums: " + ", ".join(drift))
    for x in names:
        report.checks.extend(_RUNNERS[x](directory))
    report.seconds = time.perf_counter() - start
    return report
