"""Machine verification suites: every statement the package implements is
re-checked here by exhaustive enumeration at desk scale.

Each suite returns per-check pass/fail results with a counterexample on
failure. Suites accept an optional size ceiling (nmax) that lowers, never
raises, their built-in exhaustive ranges, and a jobs count forwarded to the
table enumeration; results are independent of jobs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations as _perms

from . import counting, kernels, paths, permbij, permstats, polyomino
from .counting import catalan, distribution, fine, motzkin, narayana
from .permstats import BI_INCREASING_METHODS, Permutation, inversions, restriction_words, stats

__all__ = ["CheckResult", "SuiteResult", "SUITES", "run_suite", "run_many", "suite_names"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    description: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def ok(self, name: str, detail: str = "") -> None:
        self.checks.append(CheckResult(name, True, detail))

    def fail(self, name: str, detail: str) -> None:
        self.checks.append(CheckResult(name, False, detail))

    def expect(self, name: str, passed: bool, counterexample: str = "") -> None:
        if passed:
            self.ok(name)
        else:
            self.fail(name, counterexample)


def _cap(default: int, nmax: int | None) -> int:
    return default if nmax is None else max(1, min(default, nmax))


def _s_range(default: int, nmax: int | None):
    return range(1, _cap(default, nmax) + 1)


def _iter_s(n: int):
    for word in _perms(range(1, n + 1)):
        yield Permutation(word)


def _iter_b(n: int):
    yield from counting.bi_increasing_permutations(n)


RUNNING_EXAMPLE = Permutation((2, 6, 1, 3, 7, 4, 5, 8, 10, 9))


def suite_thm_1_2(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "thm-1.2",
        "inv equals dexc plus the inversions of the excedance and non-excedance subwords",
    )
    top = _cap(7, nmax)
    bad = None
    for n in _s_range(7, nmax):
        for p in _iter_s(n):
            b = stats(p)
            r = restriction_words(p)
            if b.inv != b.dexc + inversions(r.pi_e) + inversions(r.pi_ne):
                bad = p
                break
        if bad:
            break
    res.expect(
        f"decomposition-exhaustive-S1..S{top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    return res


def suite_prop_1_1(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "prop-1.1",
        "(exc, dexc) and (des, ddes) are equidistributed over the symmetric group",
    )
    top = _cap(7, nmax)
    for n in range(1, top + 1):
        t1 = distribution("S", n, ("exc", "dexc"), jobs=jobs)
        t2 = distribution("S", n, ("des", "ddes"), jobs=jobs)
        res.expect(f"joint-tables-equal-n{n}", t1.counts == t2.counts, f"n={n}")
    bad = None
    images = True
    for n in range(1, top + 1):
        seen = set()
        for p in _iter_s(n):
            q = permbij.foata_phi(p)
            seen.add(q)
            bp, bq = stats(p), stats(q)
            if (bp.exc, bp.dexc) != (bq.des, bq.ddes):
                bad = p
                break
        if bad:
            break
        if len(seen) != math.factorial(n):
            images = False
            break
    res.expect(
        f"per-element-transport-n<={top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    res.expect(f"bijectivity-n<={top}", images, "image not all of S_n")
    return res


def suite_cor_1_4(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "cor-1.4",
        "dexc <= inv <= 2 dexc - max(exc, n - exc - fix), with the greedy extremal sequence tight",
    )
    top = _cap(7, nmax)
    bad = None
    for n in range(1, top + 1):
        for p in _iter_s(n):
            b = stats(p)
            hi = 2 * b.dexc - max(b.exc, n - b.exc - b.fix)
            if not b.dexc <= b.inv <= hi:
                bad = p
                break
        if bad:
            break
    res.expect(
        f"bounds-exhaustive-S1..S{top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    seq_top = _cap(8, nmax)
    ok = True
    detail = ""
    for n in range(1, seq_top + 1):
        seq = permbij.extremal_sequence(n)
        if len(seq) != n * n // 4 + 1:
            ok, detail = False, f"n={n}: length {len(seq)}"
            break
        for k, p in enumerate(seq):
            b = stats(p)
            if b.dexc != k or b.inv != 2 * k - b.exc:
                ok, detail = False, f"n={n} step {k}: {p.to_text()}"
                break
        if not ok:
            break
    res.expect(f"extremal-sequence-n<={seq_top}", ok, detail)
    if _cap(6, nmax) >= 6:
        expected = [
            ("1 2 3 4 5 6", 0, 0, 0),
            ("2 1 3 4 5 6", 1, 1, 1),
            ("3 2 1 4 5 6", 1, 2, 3),
            ("4 2 3 1 5 6", 1, 3, 5),
            ("5 2 3 4 1 6", 1, 4, 7),
            ("6 2 3 4 5 1", 1, 5, 9),
            ("6 3 2 4 5 1", 2, 6, 10),
            ("6 4 3 2 5 1", 2, 7, 12),
            ("6 5 3 4 2 1", 2, 8, 14),
            ("6 5 4 3 2 1", 3, 9, 15),
        ]
        got = [
            (p.to_text(), stats(p).exc, stats(p).dexc, stats(p).inv)
            for p in permbij.extremal_sequence(6)
        ]
        res.expect("n6-table-golden", got == expected, f"got {got}")
    return res


def suite_sec_2(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "sec-2",
        "the four bi-increasing characterizations agree; the family is Catalan-counted",
    )
    top = _cap(8, nmax)
    bad = None
    for n in range(1, top + 1):
        for p in _iter_s(n):
            answers = {permstats.is_bi_increasing(p, m) for m in BI_INCREASING_METHODS}
            if len(answers) != 1:
                bad = p
                break
        if bad:
            break
    res.expect(
        f"four-methods-agree-S1..S{top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    count_top = _cap(11, nmax)
    mismatch = next(
        (n for n in range(1, count_top + 1) if len(kernels.b_n_array(n)) != catalan(n)),
        None,
    )
    res.expect(f"catalan-count-n<={count_top}", mismatch is None, f"n={mismatch}")
    return res


def suite_cor_3_8(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "cor-3.8",
        "exc is Narayana-distributed; exc = des is Motzkin-counted with binomial-Catalan "
        "refinement; derangements are Fine-counted; fixed-point sets factor into Fine products",
    )
    top = _cap(10, nmax)
    for n in range(1, top + 1):
        table = distribution("B", n, "exc", jobs=jobs).single()
        want = {e: narayana(n, e + 1) for e in range(n) if narayana(n, e + 1)}
        res.expect(f"narayana-n{n}", table == want, f"got {table}")
    for n in range(1, top + 1):
        joint = distribution("B", n, ("exc", "des"), jobs=jobs)
        eq = {}
        for (e, d), c in joint.counts.items():
            if e == d:
                eq[d] = eq.get(d, 0) + c
        ok_total = sum(eq.values()) == motzkin(n)
        ok_refined = all(
            eq.get(k, 0) == math.comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1)
        )
        res.expect(f"motzkin-n{n}", ok_total and ok_refined, f"got {eq}")
    for n in range(1, top + 1):
        fixes = distribution("B", n, "fix", jobs=jobs).single()
        res.expect(f"fine-derangements-n{n}", fixes.get(0, 0) == fine(n), f"got {fixes.get(0, 0)}")
    set_top = _cap(8, nmax)
    ok = True
    detail = ""
    for n in range(1, set_top + 1):
        observed: dict[tuple[int, ...], int] = {}
        for p in _iter_b(n):
            key = stats(p).fixed_point_set
            observed[key] = observed.get(key, 0) + 1
        for mask in range(1 << n):
            fset = tuple(i + 1 for i in range(n) if mask >> i & 1)
            if observed.get(fset, 0) != counting.fixed_point_set_count(n, fset):
                ok, detail = False, f"n={n} set {fset}"
                break
        if not ok:
            break
    res.expect(f"fixed-point-products-n<={set_top}", ok, detail)
    return res


def suite_prop_3_14(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "prop-3.14",
        "the permutation-to-Dyck map factors through the parallelogram polyomino",
    )
    top = _cap(8, nmax)
    bad = None
    for n in range(1, top + 1):
        for p in _iter_b(n):
            direct = paths.bjs(p).word
            via = paths.delest_viennot(polyomino.perm_to_parallelogram(p)).word
            if direct != via:
                bad = p
                break
        if bad:
            break
    res.expect(
        f"factorization-B1..B{top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    res.expect(
        "dyck-golden",
        paths.bjs(RUNNING_EXAMPLE).word == "UDUUUUDUDDDUUUDDDDUD",
        paths.bjs(RUNNING_EXAMPLE).word,
    )
    return res


def suite_thm_4_7(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "thm-4.7",
        "the extended value-indexed path map is a bijection onto paths with no "
        "broken step at height 0, carrying (des, ddes) to (up-steps, height sum)",
    )
    top = _cap(9, nmax)
    ok = True
    detail = ""
    for n in range(1, top + 1):
        seen = set()
        for p in _iter_b(n):
            c = paths.fv_extended(p)
            st = paths.path_stats(c)
            b = stats(p)
            if not c.in_m_star or st.ups != b.des or st.height_sum != b.ddes:
                ok, detail = False, f"n={n}: {p.to_text()} -> {c.word}"
                break
            if paths.fv_extended_inverse(c) != p:
                ok, detail = False, f"n={n}: inverse fails on {p.to_text()}"
                break
            seen.add(c.word)
        if not ok:
            break
        if len(seen) != catalan(n):
            ok, detail = False, f"n={n}: image size {len(seen)} != {catalan(n)}"
            break
    res.expect(f"bijection-B1..B{top}", ok, detail)
    plain_top = _cap(9, nmax)
    ok = True
    detail = ""
    for n in range(1, plain_top + 1):
        for p in _iter_b(n):
            if not permstats.exc_equals_des(p):
                continue
            c = paths.francon_viennot(p)
            if "b" in c.word or paths.francon_viennot_inverse(c) != p:
                ok, detail = False, f"n={n}: {p.to_text()}"
                break
        if not ok:
            break
    res.expect(f"plain-round-trips-n<={plain_top}", ok, detail)
    res.expect(
        "plain-golden",
        paths.francon_viennot(Permutation((3, 1, 7, 2, 4, 5, 6, 8, 10, 9))).word == "uudsssdsud",
        "",
    )
    res.expect(
        "extended-golden",
        paths.fv_extended(RUNNING_EXAMPLE).word == "ubsusddsud",
        paths.fv_extended(RUNNING_EXAMPLE).word,
    )
    return res


def suite_sec_4(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "sec-4",
        "the position-indexed path carries (exc, dexc) to (rises, height sum) on all "
        "permutations and restricts to a bijection on the bi-increasing family",
    )
    top = _cap(7, nmax)
    bad = None
    for n in range(1, top + 1):
        for p in _iter_s(n):
            c = paths.foata_zeilberger(p)
            st = paths.path_stats(c)
            b = stats(p)
            if not c.in_m_star or st.ups + st.brokens != b.exc or st.height_sum != b.dexc:
                bad = p
                break
        if bad:
            break
    res.expect(
        f"statistics-S1..S{top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    bij_top = _cap(9, nmax)
    ok = True
    detail = ""
    for n in range(1, bij_top + 1):
        seen = set()
        for p in _iter_b(n):
            c = paths.foata_zeilberger(p)
            if paths.fz_inverse_bi(c) != p:
                ok, detail = False, f"n={n}: inverse fails on {p.to_text()}"
                break
            seen.add(c.word)
        if not ok:
            break
        if len(seen) != catalan(n):
            ok, detail = False, f"n={n}: image size {len(seen)}"
            break
    res.expect(f"bijectivity-B1..B{bij_top}", ok, detail)
    comp_top = _cap(8, nmax)
    bad = None
    for n in range(1, comp_top + 1):
        for p in _iter_b(n):
            if paths.foata_zeilberger(permbij.psi(p)).word != paths.fv_extended(p).word:
                bad = p
                break
        if bad:
            break
    res.expect(
        f"composition-with-psi-B1..B{comp_top}",
        bad is None,
        f"counterexample {bad.to_text() if bad else ''}",
    )
    return res


def suite_thm_5_1(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "thm-5.1",
        "dexc and ddes are equidistributed over the bi-increasing family via the "
        "letter-preserving bijection",
    )
    top = _cap(10, nmax)
    for n in range(1, top + 1):
        t1 = distribution("B", n, "dexc", jobs=jobs)
        t2 = distribution("B", n, "ddes", jobs=jobs)
        res.expect(f"tables-equal-n{n}", t1.counts == t2.counts, f"n={n}")
    psi_top = _cap(8, nmax)
    ok = True
    detail = ""
    for n in range(1, psi_top + 1):
        seen = set()
        for p in _iter_b(n):
            q = permbij.psi(p)
            bp, bq = stats(p), stats(q)
            if bp.ddes != bq.dexc or bp.exc != bq.exc or bp.fix != bq.fix:
                ok, detail = False, f"n={n}: {p.to_text()} -> {q.to_text()}"
                break
            seen.add(q)
        if not ok:
            break
        if len(seen) != catalan(n):
            ok, detail = False, f"n={n}: image size {len(seen)}"
            break
    res.expect(f"psi-preserving-bijection-B1..B{psi_top}", ok, detail)
    return res


def suite_thm_3_12(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "thm-3.12",
        "the coefficients of the alternating q-series quotient count the "
        "bi-increasing permutations by length and excedance difference",
    )
    top = _cap(8, nmax)
    max_q = 16
    quotient = counting.j_series(1, top, max_q) / counting.j_series(0, top, max_q)
    for n in range(1, top + 1):
        got = {k: c for k, c in enumerate(quotient.x_slice(n)) if c}
        want = distribution("B", n, "dexc", jobs=jobs).single()
        res.expect(f"coefficients-n{n}", got == want, f"got {got} want {want}")
        res.expect(f"column-sum-n{n}", sum(got.values()) == catalan(n), f"sum {sum(got.values())}")
    return res


def _all_polyominoes(n: int):
    for p in _iter_b(n):
        yield polyomino.perm_to_parallelogram(p)


def _partitions_with_perimeter(n: int):
    """All partitions with largest part + number of parts == n + 1."""

    def rec(first_max: int, rows_left: int, prefix: list[int]):
        if rows_left == 0:
            yield tuple(prefix)
            return
        for v in range(min(first_max, prefix[-1] if prefix else first_max), 0, -1):
            yield from rec(first_max, rows_left - 1, prefix + [v])

    for w in range(1, n + 1):
        h = n + 1 - w
        # first row exactly w, exactly h rows
        for rest in rec(w, h - 1, [w]):
            yield rest


def suite_prop_5_5(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "prop-5.5",
        "skew-diagram rank agrees with the path pair count, and the closed-form "
        "rank counts match exhaustive generation",
    )
    top = _cap(10, nmax)
    ok = True
    detail = ""
    for n in range(1, top + 1):
        for pp in _all_polyominoes(n):
            sd = polyomino.polyomino_to_skew(pp)
            r1 = polyomino.rank(sd)
            r2 = paths.path_stats(paths.polyomino_to_2motzkin(pp)).rank_from_path
            if r1 != r2:
                ok, detail = False, f"n={n}: {pp.gamma} {pp.delta}: {r1} vs {r2}"
                break
        if not ok:
            break
    res.expect(f"rank-two-ways-perimeter<={2 * top + 2}", ok, detail)
    closed_top = _cap(9, nmax)
    ok = True
    detail = ""
    for n in range(1, closed_top + 1):
        hist: dict[int, int] = {}
        for parts in _partitions_with_perimeter(n):
            r = polyomino.rank(polyomino.SkewDiagram(parts, ()))
            hist[r] = hist.get(r, 0) + 1
        want = {
            r: counting.partitions_by_rank(n, r)
            for r in range(1, n + 2)
            if counting.partitions_by_rank(n, r)
        }
        if hist != want:
            ok, detail = False, f"partitions n={n}: {hist} vs {want}"
            break
    res.expect(f"partition-rank-closed-form-n<={closed_top}", ok, detail)
    ok = True
    detail = ""
    for n in range(1, closed_top + 1):
        hist = {}
        for pp in _all_polyominoes(n):
            r = polyomino.rank(polyomino.polyomino_to_skew(pp))
            hist[r] = hist.get(r, 0) + 1
        want = {
            r: counting.skew_by_rank(n, r)
            for r in range(1, n + 2)
            if counting.skew_by_rank(n, r)
        }
        if hist != want:
            ok, detail = False, f"skews n={n}: {hist} vs {want}"
            break
    res.expect(f"skew-rank-closed-form-n<={closed_top}", ok, detail)
    example = polyomino.SkewDiagram((5, 4, 4, 4, 3, 3), (3, 3, 1, 1, 1))
    a, b = polyomino.reduced_code(example)
    res.expect("rank-golden", polyomino.rank(example) == 2, str(polyomino.rank(example)))
    res.expect(
        "reduced-code-golden",
        a == (1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0) and b == (0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1),
        f"a={a} b={b}",
    )
    return res


CLASS_EXAMPLE_MEMBERS = {
    "2 6 1 3 7 4 5 8 10 9", "2 6 1 3 7 5 4 8 10 9", "2 6 3 4 7 1 5 8 10 9",
    "2 7 3 1 6 5 4 8 10 9", "2 7 1 3 6 4 5 8 10 9", "2 7 3 1 6 4 5 8 10 9",
    "2 6 3 1 7 5 4 8 10 9", "2 7 1 4 6 5 3 8 10 9", "2 6 3 1 7 4 5 8 10 9",
    "2 7 1 4 6 3 5 8 10 9", "2 6 1 4 7 5 3 8 10 9", "2 6 3 4 7 5 1 8 10 9",
    "2 6 1 4 7 3 5 8 10 9", "2 7 1 3 6 5 4 8 10 9", "2 7 3 4 6 1 5 8 10 9",
    "2 7 3 4 6 5 1 8 10 9",
}


def suite_thm_6_1(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "thm-6.1",
        "equivalence-class sizes agree four ways and partition the symmetric group",
    )
    top = _cap(7, nmax)
    ok = True
    detail = ""
    for n in range(1, top + 1):
        total = 0
        for p in _iter_b(n):
            size = permbij.class_size(p)
            overlaps = polyomino.row_overlaps(polyomino.perm_to_step(p))
            diags = polyomino.polyomino_metrics(
                polyomino.perm_to_parallelogram(p)
            ).diagonal_lengths
            generated = len(permbij.equivalence_class(p))
            if not size == math.prod(overlaps) == math.prod(diags) == generated:
                ok, detail = False, f"n={n}: {p.to_text()}"
                break
            total += size
        if not ok:
            break
        if total != math.factorial(n):
            ok, detail = False, f"n={n}: class sizes sum to {total}"
            break
    res.expect(f"four-ways-B1..B{top}", ok, detail)
    cls = {q.to_text() for q in permbij.equivalence_class(RUNNING_EXAMPLE)}
    res.expect(
        "sixteen-member-golden",
        cls == CLASS_EXAMPLE_MEMBERS and permbij.class_size(RUNNING_EXAMPLE) == 16,
        f"got {len(cls)} members",
    )
    return res


def _reflect(p: Permutation) -> Permutation:
    return polyomino.step_to_perm(
        polyomino.parallelogram_to_step(
            polyomino.rotate180(polyomino.perm_to_parallelogram(p))
        )
    )


def suite_cor_3_13(nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    res = SuiteResult(
        "cor-3.13",
        "the joint (exc, dexc) and (exc, inv) distributions are symmetric under "
        "(e, k) -> (n - 1 - e, n - 1 - 2e + k), over both families",
    )
    b_top = _cap(10, nmax)
    for n in range(1, b_top + 1):
        t = distribution("B", n, ("exc", "dexc"), jobs=jobs).counts
        sym = all(
            c == t.get((n - 1 - e, n - 1 - 2 * e + k), 0) for (e, k), c in t.items()
        )
        res.expect(f"family-B-n{n}", sym, f"n={n}")
    s_top = _cap(8, nmax)
    for n in range(1, s_top + 1):
        for pair in (("exc", "dexc"), ("exc", "inv")):
            t = distribution("S", n, pair, jobs=jobs).counts
            sym = all(
                c == t.get((n - 1 - e, n - 1 - 2 * e + k), 0) for (e, k), c in t.items()
            )
            res.expect(f"family-S-{pair[1]}-n{n}", sym, f"n={n}")
    ok = True
    detail = ""
    transport_top = _cap(8, nmax)
    for n in range(1, transport_top + 1):
        for p in _iter_b(n):
            q = _reflect(p)
            a_p = polyomino.row_overlaps(polyomino.perm_to_step(p))
            a_q = polyomino.row_overlaps(polyomino.perm_to_step(q))
            if tuple(reversed(a_p)) != a_q:
                ok, detail = False, f"n={n}: overlaps differ for {p.to_text()}"
                break
            inv_p = stats(p).inv
            inv_q = stats(q).inv
            off_p = sorted(stats(t).inv - inv_p for t in permbij.equivalence_class(p))
            off_q = sorted(stats(t).inv - inv_q for t in permbij.equivalence_class(q))
            if off_p != off_q:
                ok, detail = False, f"n={n}: offsets differ for {p.to_text()}"
                break
        if not ok:
            break
    res.expect(f"class-transport-B1..B{transport_top}", ok, detail)
    return res


SUITES = {
    "thm-1.2": suite_thm_1_2,
    "prop-1.1": suite_prop_1_1,
    "cor-1.4": suite_cor_1_4,
    "sec-2": suite_sec_2,
    "cor-3.8": suite_cor_3_8,
    "prop-3.14": suite_prop_3_14,
    "thm-4.7": suite_thm_4_7,
    "sec-4": suite_sec_4,
    "thm-5.1": suite_thm_5_1,
    "thm-3.12": suite_thm_3_12,
    "prop-5.5": suite_prop_5_5,
    "thm-6.1": suite_thm_6_1,
    "cor-3.13": suite_cor_3_13,
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES)


def run_suite(name: str, nmax: int | None = None, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known suites: {', '.join(SUITES)}")
    return SUITES[name](nmax=nmax, jobs=jobs)


def run_many(names: list[str], nmax: int | None = None, jobs: int = 1) -> list[SuiteResult]:
    return [run_suite(name, nmax=nmax, jobs=jobs) for name in names]
