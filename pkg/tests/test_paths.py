import pytest
from conftest import iter_plain_motzkin, iter_s, iter_two_motzkin

from biinc.counting import bi_increasing_permutations, catalan
from biinc.errors import DomainError
from biinc.paths import (
    DyckPath,
    TwoMotzkinPath,
    bjs,
    bjs_inverse,
    delest_viennot,
    delest_viennot_inverse,
    deutsch_shapiro,
    deutsch_shapiro_inverse,
    foata_zeilberger,
    francon_viennot,
    francon_viennot_inverse,
    fv_extended,
    fv_extended_inverse,
    fz_inverse_bi,
    is_partition_path,
    path_stats,
    polyomino_to_2motzkin,
    two_motzkin_to_dyck,
    two_motzkin_to_parallelogram,
)
from biinc.permbij import psi
from biinc.permstats import Permutation, exc_equals_des, stats
from biinc.polyomino import ParallelogramPolyomino, perm_to_parallelogram

RUN = Permutation.from_text("2 6 1 3 7 4 5 8 10 9")
RUN_PARA = ParallelogramPolyomino((1, 3, 0, 2, 0), (0, 0, 2, 3, 1))
FIG7 = "UDUUUUDUDDDUUUDDDDUD"


def test_path_validation():
    with pytest.raises(ValueError):
        DyckPath("DU")
    with pytest.raises(ValueError):
        DyckPath("UUD")
    with pytest.raises(ValueError):
        DyckPath("UX")
    with pytest.raises(ValueError):
        TwoMotzkinPath("du")
    with pytest.raises(ValueError):
        TwoMotzkinPath("ub")
    with pytest.raises(ValueError):
        TwoMotzkinPath("q")
    assert TwoMotzkinPath("").heights() == ()
    assert not TwoMotzkinPath("sbs").in_m_star
    assert TwoMotzkinPath("ubd").in_m_star


def test_bjs_golden():
    assert bjs(RUN).word == FIG7
    assert bjs(Permutation.identity(5)).word == "UUUUUDDDDD"
    with pytest.raises(DomainError):
        bjs(Permutation((3, 2, 1)))


def test_bjs_valley_statistics():
    for n in range(1, 8):
        for p in bi_increasing_permutations(n):
            d = bjs(p)
            b = stats(p)
            assert len(d) == 2 * n
            valleys = d.valley_heights()
            assert len(valleys) == b.exc
            assert sum(v + 1 for v in valleys) == b.dexc
            assert bjs_inverse(d) == p


def test_delest_viennot_matches_bjs():
    assert delest_viennot(RUN_PARA).word == FIG7
    n = 6
    single = ParallelogramPolyomino((n,), (n,))
    assert delest_viennot(single).word == "U" * n + "D" * n
    for m in range(1, 9):
        for p in bi_increasing_permutations(m):
            pp = perm_to_parallelogram(p)
            d = delest_viennot(pp)
            assert d.word == bjs(p).word
            assert delest_viennot_inverse(d) == pp
            assert d.peak_heights() == list(pp.column_heights)


def test_francon_viennot_goldens():
    assert francon_viennot(Permutation.from_text("3 1 7 2 4 5 6 8 10 9")).word == "uudsssdsud"
    assert francon_viennot(Permutation.from_text("2 7 4 3 1 6 5 8 10 9")).word == "usbbuddsud"
    assert francon_viennot(Permutation.identity(6)).word == "ssssss"


def test_francon_viennot_height_sum_is_ddes():
    for n in range(1, 8):
        for p in iter_s(n):
            c = francon_viennot(p)
            assert sum(c.heights()) == stats(p).ddes


def test_francon_viennot_inverse_round_trips():
    assert (
        francon_viennot_inverse(TwoMotzkinPath("uudsssdsud")).to_text()
        == "3 1 7 2 4 5 6 8 10 9"
    )
    assert francon_viennot_inverse(TwoMotzkinPath("sss")) == Permutation.identity(3)
    with pytest.raises(DomainError):
        francon_viennot_inverse(TwoMotzkinPath("ubd"))
    for n in range(1, 8):
        for word in iter_plain_motzkin(n):
            p = francon_viennot_inverse(TwoMotzkinPath(word))
            assert exc_equals_des(p)
            assert francon_viennot(p).word == word
        for p in bi_increasing_permutations(n):
            if exc_equals_des(p):
                c = francon_viennot(p)
                assert "b" not in c.word
                assert path_stats(c).ups == stats(p).des
                assert francon_viennot_inverse(c) == p


def test_fv_extended_golden():
    assert fv_extended(RUN).word == "ubsusddsud"
    c = fv_extended(RUN)
    st = path_stats(c)
    assert st.ups == 3 and st.height_sum == 9
    assert fv_extended(Permutation.identity(4)).word == "ssss"
    with pytest.raises(DomainError):
        fv_extended(Permutation((3, 2, 1)))


def test_fv_extended_bijection():
    assert fv_extended_inverse(TwoMotzkinPath("ubsusddsud")) == RUN
    assert fv_extended_inverse(TwoMotzkinPath("ssss")) == Permutation.identity(4)
    with pytest.raises(DomainError):
        fv_extended_inverse(TwoMotzkinPath("sbs"))
    for n in range(1, 9):
        image = set()
        for p in bi_increasing_permutations(n):
            c = fv_extended(p)
            b = stats(p)
            st = path_stats(c)
            assert c.in_m_star
            assert st.ups == b.des
            assert st.height_sum == b.ddes
            assert st.brokens == b.exc - b.des
            assert st.level0_solids == b.fix
            assert fv_extended_inverse(c) == p
            image.add(c.word)
        assert len(image) == catalan(n)
        # the image is exactly the height-0-broken-free family
        m_star = {w for w in iter_two_motzkin(n) if TwoMotzkinPath(w).in_m_star}
        assert image == m_star


def test_foata_zeilberger_golden():
    assert foata_zeilberger(RUN).word == "ubssuddsud"
    assert foata_zeilberger(Permutation.identity(5)).word == "sssss"
    c = foata_zeilberger(RUN)
    st = path_stats(c)
    assert st.height_sum == 8
    assert st.ups + st.brokens == 4


def test_foata_zeilberger_statistics_on_all_permutations():
    for n in range(1, 7):
        for p in iter_s(n):
            c = foata_zeilberger(p)
            b = stats(p)
            st = path_stats(c)
            assert c.in_m_star
            assert st.ups + st.brokens == b.exc
            assert st.height_sum == b.dexc


def test_fz_inverse_round_trips():
    assert fz_inverse_bi(TwoMotzkinPath("ubssuddsud")) == RUN
    assert fz_inverse_bi(TwoMotzkinPath("ss")) == Permutation.identity(2)
    with pytest.raises(DomainError):
        fz_inverse_bi(TwoMotzkinPath("sbs"))
    for n in range(1, 8):
        image = set()
        for p in bi_increasing_permutations(n):
            c = foata_zeilberger(p)
            assert fz_inverse_bi(c) == p
            image.add(c.word)
        assert len(image) == catalan(n)


def test_fz_of_psi_equals_extended_fv():
    for n in range(1, 8):
        for p in bi_increasing_permutations(n):
            assert foata_zeilberger(psi(p)).word == fv_extended(p).word


def test_polyomino_to_2motzkin_golden():
    pp = ParallelogramPolyomino((1, 3, 0, 2, 0), (0, 0, 1, 4, 1))
    assert polyomino_to_2motzkin(pp).word == "ubsusddsud"
    assert polyomino_to_2motzkin(ParallelogramPolyomino((4,), (4,))).word == "ssss"


def test_polyomino_to_2motzkin_properties():
    for n in range(1, 9):
        for p in bi_increasing_permutations(n):
            pp = perm_to_parallelogram(p)
            c = polyomino_to_2motzkin(pp)
            st = path_stats(c)
            m = pp.area - pp.height
            assert c.in_m_star
            assert pp.width == 1 + st.ups + st.brokens
            assert st.height_sum == m
            assert st.level0_solids == sum(
                1
                for r in range(1, pp.height + 1)
                if sum(1 for bot, top in pp.column_spans() if bot < r <= top) == 1
            )
            # the encoding agrees with the position-indexed permutation path
            assert c.word == foata_zeilberger(p).word
            assert two_motzkin_to_parallelogram(c) == pp


def test_deutsch_shapiro_golden():
    ds = deutsch_shapiro(RUN_PARA)
    assert ds.raw.word == "ubussbdssbd"
    assert ds.trimmed.word == "bussbdssb"
    single = deutsch_shapiro(ParallelogramPolyomino((1,), (1,)))
    assert single.raw.word == "ud"
    assert single.trimmed.word == ""


def test_deutsch_shapiro_bijection():
    for n in range(1, 10):
        words = set()
        for p in bi_increasing_permutations(n):
            pp = perm_to_parallelogram(p)
            ds = deutsch_shapiro(pp)
            raw = ds.raw.word
            assert raw[0] == "u" and raw[-1] == "d"
            assert all(h >= 1 for h in ds.raw.heights()[1:])
            assert deutsch_shapiro_inverse(ds.trimmed) == pp
            words.add(ds.trimmed.word)
        assert len(words) == catalan(n)
    # image counting: every 2-Motzkin word of length n - 1 appears
    for n in range(1, 7):
        words = {
            deutsch_shapiro(perm_to_parallelogram(p)).trimmed.word
            for p in bi_increasing_permutations(n)
        }
        assert words == set(iter_two_motzkin(n - 1))


def test_two_motzkin_to_dyck():
    assert two_motzkin_to_dyck(TwoMotzkinPath("")).word == "UD"
    assert two_motzkin_to_dyck(TwoMotzkinPath("s")).word == "UUDD"
    for n in range(0, 8):
        image = set()
        for word in iter_two_motzkin(n):
            d = two_motzkin_to_dyck(TwoMotzkinPath(word))
            assert len(d) == 2 * n + 2
            image.add(d.word)
        assert len(image) == catalan(n + 1)


def test_path_stats():
    st = path_stats(TwoMotzkinPath("ubssuddsud"))
    assert st.rank_from_path == 2
    assert (st.dd, st.db, st.sd, st.sb) == (1, 0, 0, 0)
    st2 = path_stats(TwoMotzkinPath("ssss"))
    assert st2.height_sum == 0 and st2.rank_from_path == 1 and st2.level0_solids == 4


def test_rank_from_path_matches_skew_rank():
    from biinc.polyomino import polyomino_to_skew, rank

    for n in range(1, 10):
        for p in bi_increasing_permutations(n):
            pp = perm_to_parallelogram(p)
            r1 = path_stats(polyomino_to_2motzkin(pp)).rank_from_path
            assert r1 == rank(polyomino_to_skew(pp))


def test_is_partition_path():
    assert is_partition_path(TwoMotzkinPath("uudbd"))
    assert not is_partition_path(TwoMotzkinPath("ubsusddsud"))
    assert is_partition_path(TwoMotzkinPath("sss"))
    for n in range(1, 9):
        for p in bi_increasing_permutations(n):
            pp = perm_to_parallelogram(p)
            is_partition = all(g == 0 for g in pp.gamma[1:])
            assert is_partition_path(polyomino_to_2motzkin(pp)) == is_partition
            # the same split-form reading holds for the border-pair encoding
            assert is_partition_path(deutsch_shapiro(pp).trimmed) == is_partition
