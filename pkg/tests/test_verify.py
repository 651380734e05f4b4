import random

import pytest

from cwcodes.codebook import ExplicitCode, CodeSpec, enumerate_codewords, linear_from_generator, make_explicit, min_weight_linear
from cwcodes.propagate import extract_fixed
from cwcodes.verify import (
    OddDistanceError,
    PairBudgetExceeded,
    check_constant_weight,
    min_distance_pairwise,
    verify_claim,
)
from cwcodes.words import Word

W = Word.parse


def code_of(*texts, d=1):
    words = [W(t) for t in texts]
    n = words[0].n if words else 4
    return make_explicit(words, n, 2, d, allow_empty=True, check=False)


def test_check_constant_weight():
    assert check_constant_weight(code_of("0011", "1100"), 2) == (True, None)
    assert check_constant_weight(code_of("0011", "1110"), 2) == (False, W("1110"))
    assert check_constant_weight(code_of(), 3) == (True, None)


def test_min_distance_pairwise():
    assert min_distance_pairwise(code_of("1100", "0011")) == 4
    assert min_distance_pairwise(code_of("1100")) is None
    with pytest.raises(PairBudgetExceeded):
        min_distance_pairwise(code_of("1100", "0011", "1010"), budget=2)
    with pytest.raises(OddDistanceError):
        min_distance_pairwise(code_of("1100", "0111"), require_even=True)


def test_min_distance_qary_and_long():
    q3 = make_explicit([Word.from_symbols(s, 3) for s in ([0, 1, 2], [0, 2, 2], [1, 1, 1])], 3, 3, 1)
    assert min_distance_pairwise(q3) == 1
    long = make_explicit([Word.binary(100, 0), Word.binary(100, (1 << 100) - 1)], 100, 2, 100)
    assert min_distance_pairwise(long) == 100


def test_pairwise_matches_min_weight_on_linear_codes():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randint(4, 40)
        c = linear_from_generator([rng.getrandbits(n) for _ in range(rng.randint(1, 11))], n,
                                  design_distance=1)
        listed = make_explicit(list(enumerate_codewords(c)), n, 2, 1, check=False)
        assert min_distance_pairwise(listed) == min_weight_linear(c)


def test_verify_claim_verdicts():
    c = code_of("0011", "1100")
    assert verify_claim(c, 4, 4, 2, 2).verdict == "verified"
    bad = verify_claim(c, 4, 6, 2, 2)
    assert bad.verdict == "refuted" and bad.reason == "distance"
    assert verify_claim(c, 4, 4, 2, 3).reason == "size"
    assert verify_claim(c, 5, 4, 2, 2).reason == "length"
    assert verify_claim(code_of("0011", "1110"), 4, 2, 2, 2).reason.startswith("weight")
    empty = verify_claim(code_of(), 4, 4, 2, 0)
    assert empty.verdict == "vacuous-empty" and empty.ok


def test_verify_claim_catches_odd_distance():
    # two weight-2 words can never be at odd distance; a hand-built bad list must be flagged
    spec = CodeSpec(4, 2, 2, 1, "explicit")
    weird = ExplicitCode(spec, (W("0011"), W("0111")))
    check = verify_claim(weird, 4, 2, 2, 2)
    assert check.verdict == "refuted"


def test_verify_claim_non_binary():
    c = make_explicit([Word.from_symbols([0, 2, 1], 4)], 3, 4, 1)
    assert "non-binary" in verify_claim(c, 3, 1, 2, 1).reason


def test_bch_extraction_verifies(bch, bch_reports):
    e = bch_reports["fixed"].entries[12]
    code = extract_fixed(bch, e.representative, 12)
    check = verify_claim(code, 31, 12, 12, 310)
    assert check.verdict == "verified"
    assert check.measured_distance >= 12
    assert verify_claim(code, 31, 14, 12, 310).verdict == "refuted"
