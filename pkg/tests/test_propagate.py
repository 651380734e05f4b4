import random
from fractions import Fraction
from math import ceil, comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cwcodes import _kernels
from cwcodes.codebook import linear_from_generator, make_explicit, min_weight_linear
from cwcodes.propagate import (
    InfeasibleSweep,
    avg_bound,
    avg_bound_extended,
    ceil_div,
    coset_histogram,
    extract_extended,
    extract_fixed,
    sweep,
    sweep_modes,
    target_distance,
    write_bound_csv,
    write_sweep_csv,
)
from cwcodes.words import Word, weight

from oracles import all_translate_maxima, qary_translate_maxima, span

W = Word.parse


def repetition(n):
    return linear_from_generator([Word.binary(n, (1 << n) - 1)])


def random_code(rng, n, k):
    return linear_from_generator([rng.getrandbits(n) for _ in range(k)], n, design_distance=1)


@pytest.mark.parametrize("d,expect", [(7, 8), (8, 8), (5, 6), (1, 2), (2, 2), (11, 12), (15, 16)])
def test_target_distance(d, expect):
    assert target_distance(d) == expect


def test_target_distance_rejects_zero():
    with pytest.raises(ValueError):
        target_distance(0)


def test_histogram_examples(bch):
    even = linear_from_generator([W("011"), W("101")])
    h = coset_histogram(even, W("100"))
    assert h.counts == (0, 3, 0, 1)
    zero = coset_histogram(bch, Word.zero(31)).counts
    assert {w: c for w, c in enumerate(zero) if c} == {0: 1, 11: 186, 12: 310, 15: 527,
                                                        16: 527, 19: 310, 20: 186, 31: 1}


def test_histogram_qary_embedding():
    c = make_explicit([Word.from_symbols([0, 0], 4), Word.from_symbols([2, 2], 4)], 2, 4, 2)
    h = coset_histogram(c, Word.from_symbols([0, 1], 4))
    assert h.counts == (0, 1, 0)
    with pytest.raises(ValueError):
        coset_histogram(c, W("01"))


def test_histogram_conservation():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(2, 40)
        c = random_code(rng, n, rng.randint(1, 8))
        u = Word.binary(n, rng.getrandbits(n))
        assert sum(coset_histogram(c, u).counts) == c.size


def test_sweep_repetition():
    rep = sweep(repetition(4), [2])
    e = rep.entries[2]
    assert (e.count, str(e.representative), e.exhaustive, e.cosets_examined) == (2, "0011", True, 8)
    fixed, _ = all_translate_maxima([0, 15], 4)
    assert fixed[2] == 2


def test_sweep_rm_punctured(rm_punctured):
    assert sweep(rm_punctured, [15]).entries[15].count == 31


def test_sweep_bch_table(bch_reports):
    assert bch_reports["fixed"].counts() == {9: 40, 10: 87, 11: 186, 12: 310, 13: 400, 14: 510}
    assert bch_reports["extend"].counts() == {9: 40, 10: 122, 11: 186, 12: 496, 13: 400, 14: 900}


def test_representatives_reproduce_counts(bch, bch_reports):
    for mode, report in bch_reports.items():
        for w, e in report.entries.items():
            h = coset_histogram(bch, e.representative)
            assert h.score(w, mode) == e.count
            # representatives come from the transversal: zero on every pivot column
            assert all(e.representative.symbols[p] == 0 for p in bch.pivots)


def test_oracle_equivalence_small_codes():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(2, 10)
        c = random_code(rng, n, rng.randint(1, min(n, 5)))
        reports = sweep_modes(c, range(1, n))
        fixed, ext = all_translate_maxima(span(c.rows, n), n)
        for w in range(1, n):
            assert reports["fixed"].entries[w].count == fixed[w]
            assert reports["extend"].entries[w].count == ext[w]


def test_partition_identity():
    rng = random.Random(99)
    for _ in range(20):
        n = rng.randint(2, 14)
        c = random_code(rng, n, rng.randint(1, min(n, 6)))
        free = np.array([1 << (n - 1 - p) for p in reversed(c.free_positions)], dtype=np.uint64)
        total = _kernels.histogram_sum_range(c.codeword_array, free, 0, 1 << len(free), n)
        assert list(total) == [comb(n, w) for w in range(n + 1)]


def test_sweep_explicit_codes_match_brute_force():
    rng = random.Random(8)
    for _ in range(15):
        n = rng.randint(3, 9)
        words = sorted(set(rng.getrandbits(n) for _ in range(rng.randint(1, 12))))
        c = make_explicit([Word.binary(n, x) for x in words], n, 2, 1)
        reports = sweep_modes(c, range(1, n))
        assert reports["fixed"].entries[1].cosets_examined == 2**n
        fixed, ext = all_translate_maxima(words, n)
        for w in range(1, n):
            assert reports["fixed"].entries[w].count == fixed[w]
            assert reports["extend"].entries[w].count == ext[w]


def test_sweep_qary_code_matches_brute_force():
    rng = random.Random(5)
    for q in (3, 4, 5):
        n = 4
        words = sorted({tuple(rng.randrange(q) for _ in range(n)) for _ in range(6)})
        c = make_explicit([Word.from_symbols(s, q) for s in words], n, q, 1)
        reports = sweep_modes(c, range(1, n))
        fixed, ext = qary_translate_maxima(words, n, q)
        for w in range(1, n):
            assert reports["fixed"].entries[w].count == fixed[w]
            assert reports["extend"].entries[w].count == ext[w]
            u = reports["fixed"].entries[w].representative
            assert coset_histogram(c, u).counts[w] == fixed[w]


def test_sweep_long_code_python_path():
    # n > 64 takes the pure-Python route
    n = 70
    c = linear_from_generator([(1 << n) - 1, ((1 << 35) - 1) << 35], n, design_distance=35)
    c = linear_from_generator(list(c.rows) + [((1 << 68) - 1) << 2], n, design_distance=2)
    rng = random.Random(1)
    rep = sweep(c, [35], strategy="sample", budget=50, seed=3)
    assert not rep.exhaustive
    e = rep.entries[35]
    assert coset_histogram(c, e.representative).counts[35] == e.count


def test_weight_range_enforced():
    c = repetition(4)
    for w in (0, 4, 5):
        with pytest.raises(ValueError, match="0 < w < n"):
            sweep(c, [w])


def test_infeasible_exhaustive_sweep(bch):
    with pytest.raises(InfeasibleSweep, match="sampling"):
        sweep(bch, [12], work_budget=1 << 20)


def test_sampled_sweep_is_deterministic(bch):
    a = sweep(bch, [11, 12], strategy="sample", budget=500, seed=7)
    b = sweep(bch, [11, 12], strategy="sample", budget=500, seed=7, threads=3)
    assert a.csv_rows() == b.csv_rows()
    assert not a.exhaustive
    assert a.entries[12].cosets_examined == 500
    assert a.entries[12].count <= 310
    for w, e in a.entries.items():
        assert coset_histogram(bch, e.representative).counts[w] == e.count


def test_thread_count_independence():
    rng = random.Random(17)
    c = random_code(rng, 22, 6)
    base = sweep_modes(c, range(1, 22))
    for threads in (2, 5):
        other = sweep_modes(c, range(1, 22), threads=threads)
        for mode in base:
            assert base[mode].csv_rows() == other[mode].csv_rows()


@pytest.mark.parametrize("args,expect", [
    ((63, 2, 2**47, 7), 8443),
    ((62, 2, 2**46, 7), 7505),
    ((10, 2, 2**10, 4), comb(10, 4)),
    ((6, 3, 3**6, 2), comb(6, 2)),
])
def test_avg_bound(args, expect):
    assert avg_bound(*args).value == expect


@pytest.mark.parametrize("args,expect", [
    ((63, 2, 2**47, 7), 9480),
    ((63, 2, 2**52, 5), 3723),
    ((10, 2, 2**10, 4), comb(11, 4)),
])
def test_avg_bound_extended(args, expect):
    assert avg_bound_extended(*args).value == expect


@given(st.integers(2, 130).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n - 1), st.integers(0, n))))
@settings(max_examples=200)
def test_avg_bound_is_exact_ceiling(params):
    n, w, log2m = params
    size = 2**log2m
    expect = Fraction(size * comb(n, w), 2**n)
    got = avg_bound(n, 2, size, w).value
    assert got == -(-expect.numerator // expect.denominator)
    assert got - 1 < expect <= got


def test_bound_metadata_and_errors():
    r = avg_bound_extended(63, 2, 2**47, 7, d=7)
    assert (r.theorem, r.length, r.d_prime) == ("thm3ii", 64, 8)
    with pytest.raises(ValueError):
        avg_bound(10, 2, 2**10, 0)
    with pytest.raises(ValueError):
        avg_bound(10, 2, 2**11, 3)
    with pytest.raises(ValueError):
        avg_bound_extended(10, 2, 4, 11)
    assert ceil_div(7, 7) == 1 and ceil_div(8, 7) == 2 and ceil_div(0, 3) == 0


def test_average_never_exceeds_best():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(3, 16)
        c = random_code(rng, n, rng.randint(1, min(n, 6)))
        reports = sweep_modes(c, range(1, n))
        for w in range(1, n):
            assert reports["fixed"].entries[w].count >= avg_bound(n, 2, c.size, w).value
            assert reports["extend"].entries[w].count >= avg_bound_extended(n, 2, c.size, w).value


def test_extract_fixed_repetition():
    code = extract_fixed(repetition(4), W("0011"), 2)
    assert [str(w) for w in code.words] == ["0011", "1100"]
    assert (code.n, code.spec.design_distance, code.size) == (4, 4, 2)


def test_extract_fixed_zero_translate(bch):
    code = extract_fixed(bch, Word.zero(31), 11)
    assert code.size == 186
    assert all(bch.contains(w) for w in code.words)


def test_extract_extended_example():
    rep3 = repetition(3)
    code = extract_extended(rep3, W("100"), 2)
    assert {str(w) for w in code.words} == {"1001", "0110"}
    assert (code.n, code.spec.design_distance, code.size) == (4, 4, 2)
    empty = extract_extended(rep3, W("000"), 2)
    assert empty.size == 0


def test_extractions_are_constant_weight(bch, bch_reports):
    for w, e in bch_reports["fixed"].entries.items():
        code = extract_fixed(bch, e.representative, w)
        assert code.size == e.count
        assert {weight(x) for x in code.words} == {w}
    for w, e in bch_reports["extend"].entries.items():
        code = extract_extended(bch, e.representative, w)
        assert code.size == e.count and code.n == 32
        assert {weight(x) for x in code.words} == {w}


def test_csv_output(bch_reports):
    import io

    buf = io.StringIO()
    write_sweep_csv([bch_reports["fixed"]], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "code_id,mode,w,count,representative,exhaustive,cosets_examined"
    assert lines[4].startswith("bch_5_11,fixed,12,310,")
    assert lines[4].endswith(",true,1048576")
    buf = io.StringIO()
    write_bound_csv([avg_bound(63, 2, 2**47, 7, d=7), avg_bound_extended(63, 2, 2**47, 7, d=7)], buf)
    assert buf.getvalue().splitlines() == ["theorem,n,q,w,d_prime,value",
                                           "thm2,63,2,7,8,8443", "thm3ii,64,2,7,8,9480"]
