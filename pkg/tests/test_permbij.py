import math

import pytest
from conftest import iter_s

from biinc.counting import bi_increasing_permutations, catalan
from biinc.errors import DomainError
from biinc.paths import francon_viennot, path_stats
from biinc.permbij import (
    GeneratorWord,
    active_sites,
    class_size,
    deutsch_insert,
    equivalence_class,
    evaluate_word,
    extremal_sequence,
    factorize,
    foata_phi,
    from_excedances,
    hat,
    insert_at_site,
    max_inv_permutation,
    psi,
    transposition_set,
)
from biinc.permstats import Permutation, exc_equals_des, is_bi_increasing, stats

RUN = Permutation.from_text("2 6 1 3 7 4 5 8 10 9")


def test_foata_examples():
    assert foata_phi(Permutation.identity(3)) == Permutation.identity(3)
    q = foata_phi(Permutation((2, 1)))
    assert q == Permutation((2, 1))
    b = stats(q)
    assert (b.exc, b.des, b.dexc, b.ddes) == (1, 1, 1, 1)


def test_foata_transport_and_bijectivity():
    for n in range(1, 7):
        image = set()
        for p in iter_s(n):
            q = foata_phi(p)
            image.add(q)
            bp, bq = stats(p), stats(q)
            assert (bp.exc, bp.dexc) == (bq.des, bq.ddes)
        assert len(image) == math.factorial(n)


def test_hat_examples():
    assert hat(Permutation.from_text("4 2 8 3 6 9 7 5 1 10")).to_text() == "4 1 6 2 8 9 3 5 7 10"
    big = Permutation.from_text("9 2 4 3 6 8 7 5 1 10")
    assert stats(big).inv == 20
    h = hat(big)
    assert h.to_text() == "4 1 6 2 8 9 3 5 7 10"
    assert stats(h).inv == 12
    assert hat(RUN) == RUN


def test_hat_properties():
    for n in range(1, 7):
        for p in iter_s(n):
            h = hat(p)
            bp, bh = stats(p), stats(h)
            assert hat(h) == h
            assert is_bi_increasing(h)
            assert bh.excedance_set == bp.excedance_set
            assert bh.excedance_letters == bp.excedance_letters
            assert bh.dexc == bp.dexc
            # minimal inversion count within the class
            assert bh.inv == bp.dexc <= bp.inv


def test_transposition_set_example():
    assert sorted(transposition_set(RUN).pairs) == [(2, 5), (3, 4), (4, 6), (6, 7)]
    assert transposition_set(Permutation.identity(5)).pairs == frozenset()
    with pytest.raises(DomainError):
        transposition_set(Permutation((3, 2, 1)))


def test_transposition_set_size_and_closure():
    for n in range(1, 8):
        for p in bi_increasing_permutations(n):
            b = stats(p)
            pairs = transposition_set(p).pairs
            assert len(pairs) == b.dexc - b.exc
            for i, j in pairs:
                for i2, k in pairs:
                    if i2 == i and j < k:
                        assert (j, k) in pairs


def test_single_exchange_preserves_excedance_data():
    for n in range(1, 7):
        for p in bi_increasing_permutations(n):
            b = stats(p)
            for i, j in transposition_set(p).pairs:
                w = list(p.word)
                w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
                q = Permutation(tuple(w))
                bq = stats(q)
                assert bq.excedance_set == b.excedance_set
                assert bq.dexc == b.dexc


def test_equivalence_class_golden():
    cls = equivalence_class(RUN)
    assert len(cls) == class_size(RUN) == 16
    assert equivalence_class(Permutation.identity(4)) == {Permutation.identity(4)}
    assert class_size(Permutation.identity(4)) == 1


def test_equivalence_class_is_hat_preimage():
    for n in range(1, 7):
        classes = {}
        for p in iter_s(n):
            classes.setdefault(hat(p), set()).add(p)
        for rep, members in classes.items():
            assert equivalence_class(rep) == members
            assert class_size(rep) == len(members)


def test_class_sizes_partition_the_group():
    for n in range(1, 8):
        assert sum(class_size(p) for p in bi_increasing_permutations(n)) == math.factorial(n)


def test_factorize_example_and_shape():
    f = factorize(RUN)
    assert f.to_text() == "s1 s5 s4 s3 s2 s6 s5 s9"
    assert factorize(Permutation.identity(5)).indices == ()
    for n in range(1, 7):
        for p in bi_increasing_permutations(n):
            word = factorize(p)
            assert len(word) == stats(p).inv
            assert evaluate_word(word, n) == p
            # staircase shape: maximal descending-by-one runs whose bottoms
            # are the excedances and whose tops increase strictly
            runs = []
            for a in word.indices:
                if runs and runs[-1][-1] == a + 1:
                    runs[-1].append(a)
                else:
                    runs.append([a])
            bottoms = [r[-1] for r in runs]
            tops = [r[0] for r in runs]
            assert bottoms == list(stats(p).excedance_set)
            assert all(x < y for x, y in zip(tops, tops[1:]))


def test_evaluate_word():
    assert evaluate_word(GeneratorWord.from_text("s1 s5 s4 s3 s2 s6 s5 s9"), 10) == RUN
    assert evaluate_word(GeneratorWord(()), 4) == Permutation.identity(4)
    assert evaluate_word(GeneratorWord((1,)), 2) == Permutation((2, 1))
    with pytest.raises(ValueError):
        evaluate_word(GeneratorWord((5,)), 3)


def test_psi_examples():
    assert psi(RUN).to_text() == "2 6 1 7 3 4 5 8 10 9"
    assert psi(Permutation.identity(5)) == Permutation.identity(5)
    with pytest.raises(DomainError):
        psi(Permutation((3, 2, 1)))


def test_psi_transport_bijection():
    for n in range(1, 8):
        image = set()
        for p in bi_increasing_permutations(n):
            q = psi(p)
            image.add(q)
            bp, bq = stats(p), stats(q)
            assert bp.ddes == bq.dexc
            assert bp.exc == bq.exc
            assert bp.fix == bq.fix
            assert bp.excedance_letters == bq.excedance_letters
        assert len(image) == catalan(n)


def test_from_excedances_roundtrip():
    for n in range(1, 8):
        for p in bi_increasing_permutations(n):
            b = stats(p)
            assert from_excedances(b.excedance_set, b.excedance_letters, n) == p
    with pytest.raises(DomainError):
        from_excedances([2], [2], 4)
    with pytest.raises(DomainError):
        from_excedances([1, 2], [5], 5)


def test_max_inv_example():
    p = max_inv_permutation([1, 3, 5, 6], [4, 6, 8, 9], 10)
    assert p.to_text() == "9 2 4 3 6 8 7 5 1 10"
    assert stats(p).inv == 20
    assert max_inv_permutation([], [], 3) == Permutation.identity(3)
    with pytest.raises(DomainError):
        max_inv_permutation([3], [2], 4)


def test_max_inv_reaches_upper_bound_on_extremal_states():
    for p in extremal_sequence(6):
        b = stats(p)
        q = max_inv_permutation(b.excedance_set, b.excedance_letters, 6)
        bq = stats(q)
        assert bq.excedance_set == b.excedance_set
        assert bq.inv == 2 * b.dexc - b.exc


def test_extremal_sequence():
    assert [p.to_text() for p in extremal_sequence(1)] == ["1"]
    seq = extremal_sequence(6)
    assert len(seq) == 10
    assert seq[-1].to_text() == "6 5 4 3 2 1"
    assert stats(seq[-1]).inv == 15
    b7 = stats(seq[7])
    assert (seq[7].to_text(), b7.exc, b7.inv) == ("6 4 3 2 5 1", 2, 12)
    for n in range(1, 9):
        steps = extremal_sequence(n)
        assert len(steps) == n * n // 4 + 1
        for k, p in enumerate(steps):
            b = stats(p)
            assert b.dexc == k
            assert b.inv == 2 * k - b.exc


def test_active_sites():
    assert active_sites(Permutation.from_text("4 1 2 5 3 6")) == (5, 6, 7)
    assert active_sites(Permutation.identity(4)) == (1, 2, 3, 4, 5)
    with pytest.raises(DomainError):
        active_sites(Permutation((3, 2, 1)))


def test_insert_at_site():
    w = Permutation.from_text("4 1 2 5 3 6")
    assert insert_at_site(w, 5).to_text() == "4 1 2 5 7 3 6"
    assert insert_at_site(w, 7).to_text() == "4 1 2 5 3 6 7"
    assert insert_at_site(Permutation.identity(2), 3) == Permutation.identity(3)
    with pytest.raises(DomainError):
        insert_at_site(w, 4)
    for n in range(1, 7):
        for p in bi_increasing_permutations(n):
            for i in active_sites(p):
                assert is_bi_increasing(insert_at_site(p, i))


def test_deutsch_insert_examples():
    assert deutsch_insert(Permutation.from_text("2 1 3 6 4 5 7")).to_text() == "2 1 6 3 8 4 5 7"
    assert deutsch_insert(Permutation((1,))) == Permutation((2, 1))
    with pytest.raises(DomainError):
        deutsch_insert(Permutation((2, 3, 1)))  # exc != des
    with pytest.raises(DomainError):
        deutsch_insert(Permutation((2, 1)))  # no fixed point


def test_deutsch_insert_bijection():
    for n in range(2, 10):
        sources = [
            p
            for p in bi_increasing_permutations(n - 1)
            if exc_equals_des(p) and stats(p).fix >= 1
        ]
        targets = {
            p
            for p in bi_increasing_permutations(n)
            if exc_equals_des(p) and stats(p).fix == 0
        }
        image = set()
        for p in sources:
            q = deutsch_insert(p)
            assert stats(q).exc == stats(p).exc + 1
            assert path_stats(francon_viennot(q)).level0_solids == 0
            image.add(q)
        assert len(image) == len(sources)
        assert image == targets
