"""Cross-module property sweeps at the sizes the module contracts promise,
amortized into single passes where several claims share an enumeration."""

from conftest import iter_s, iter_two_motzkin

from biinc.counting import bi_increasing_permutations, catalan, distribution
from biinc.permbij import equivalence_class, evaluate_word, extremal_sequence, factorize, hat, transposition_set
from biinc.permstats import inversions, restriction_words, stats
from biinc.polyomino import perm_to_step


def test_s8_sweep_decomposition_hat_and_bounds():
    n = 8
    for p in iter_s(n):
        b = stats(p)
        r = restriction_words(p)
        assert b.inv == b.dexc + inversions(r.pi_e) + inversions(r.pi_ne)
        h = hat(p)
        bh = stats(h)
        assert hat(h) == h
        assert bh.inv == b.dexc  # minimal within the class
        assert b.dexc <= b.inv <= 2 * b.dexc - max(b.exc, n - b.exc - b.fix)


def test_hat_minimal_over_explicit_class():
    for n in range(1, 7):
        for p in bi_increasing_permutations(n):
            members = equivalence_class(p)
            assert min(stats(q).inv for q in members) == stats(p).inv == stats(p).dexc


def test_factorization_round_trip_b8():
    for p in bi_increasing_permutations(8):
        word = factorize(p)
        assert len(word) == stats(p).inv
        assert evaluate_word(word, 8) == p


def test_transposition_closure_b8():
    for p in bi_increasing_permutations(8):
        pairs = transposition_set(p).pairs
        first = {}
        for i, j in pairs:
            first.setdefault(i, []).append(j)
        for i, js in first.items():
            js.sort()
            for a in range(len(js)):
                for b in range(a + 1, len(js)):
                    assert (js[a], js[b]) in pairs


def test_excedance_difference_reach():
    # every value 0..floor(n^2/4) occurs as a dexc, and none beyond;
    # the bi-sorting map preserves dexc, so the value set over the full
    # symmetric group equals the value set over the bi-increasing family
    for n in range(1, 11):
        values = {k for (k,) in distribution("B", n, "dexc").counts}
        assert values == set(range(n * n // 4 + 1))
        seq = extremal_sequence(n)
        assert [stats(p).dexc for p in seq] == list(range(n * n // 4 + 1))


def test_step_polyomino_bijection_totality():
    for n in range(1, 11):
        images = {perm_to_step(p) for p in bi_increasing_permutations(n)}
        assert len(images) == catalan(n)
        assert all(sp.height == n + 1 for sp in images)


def _pair_occurrences(word: str) -> int:
    return sum(
        1 for x, y in zip(word, word[1:]) if x in ("d", "s") and y in ("d", "b")
    )


def test_down_steps_match_double_step_occurrences():
    # paths of length n - 1 by down-steps vs height-0-broken-free paths of
    # length n by occurrences of dd, db, sd, sb
    for n in range(1, 11):
        left: dict[int, int] = {}
        for word in iter_two_motzkin(n - 1):
            k = word.count("d")
            left[k] = left.get(k, 0) + 1
        right: dict[int, int] = {}
        for word in iter_two_motzkin(n):
            h = 0
            ok = True
            for ch in word:
                if ch == "u":
                    h += 1
                elif ch == "d":
                    h -= 1
                elif ch == "b" and h == 0:
                    ok = False
                    break
            if ok:
                k = _pair_occurrences(word)
                right[k] = right.get(k, 0) + 1
        assert left == right
