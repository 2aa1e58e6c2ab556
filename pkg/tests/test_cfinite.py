"""Recurrence descriptions, exact fitting, equality proofs, growth estimates."""

import random
from fractions import Fraction

import pytest

from modgf.cfinite import (
    LinearRecurrence,
    fibonacci,
    fit_recurrence,
    growth_rate_estimate,
    recurrence_from_gf,
    verify_equal,
)
from modgf.errors import DomainError, InsufficientDataError, ParseError
from modgf.ratfun import Poly

from _oracles import central_coefficients


def test_fibonacci_convention():
    assert fibonacci(-1) == 1
    assert fibonacci(0) == 0
    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fibonacci(40) == 102334155
    with pytest.raises(DomainError):
        fibonacci(-2)


def test_recurrence_validation():
    with pytest.raises(DomainError):
        LinearRecurrence(0, (), ())
    with pytest.raises(DomainError):
        LinearRecurrence(2, (1,), (0, 1))
    with pytest.raises(DomainError):
        LinearRecurrence(2, (1, 1), (0,))
    rec = LinearRecurrence(2, (1, 1), (0, 1))
    assert rec.rec_coeffs == (Fraction(1), Fraction(1))


def test_extend_fibonacci():
    fib = LinearRecurrence(2, (1, 1), (0, 1))
    assert fib.extend(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fib.extend(0) == [0]
    assert fib.extend(1) == [0, 1]
    with pytest.raises(DomainError):
        fib.extend(-1)


def test_extend_geometric():
    geo = LinearRecurrence(1, (3,), (1,))
    assert geo.extend(5) == [1, 3, 9, 27, 81, 243]


def test_extend_zero_padded_transient():
    # order 2 with trailing zero coefficient reproduces a transient start
    rec = LinearRecurrence(2, (2, 0), (1, 1))
    assert rec.extend(5) == [1, 1, 2, 4, 8, 16]


def test_recurrence_json_round_trip():
    rec = LinearRecurrence(3, (1, Fraction(-1, 2), 5), (0, 1, Fraction(2, 3)))
    assert LinearRecurrence.from_json_dict(rec.to_json_dict()) == rec
    d = rec.to_json_dict()
    assert d["order"] == 3
    assert d["rec_coeffs"] == ["1", "-1/2", "5"]
    assert d["initials"] == ["0", "1", "2/3"]
    with pytest.raises(ParseError):
        LinearRecurrence.from_json_dict({"order": 1, "rec_coeffs": ["1"]})


def test_fit_fibonacci_from_twelve_terms():
    terms = [fibonacci(n) for n in range(12)]
    rec = fit_recurrence(terms, 4)
    assert rec is not None
    assert rec.order == 2
    assert rec.rec_coeffs == (1, 1)
    assert rec.initials == (0, 1)


def test_fit_finds_minimal_order():
    # geometric data also satisfies higher orders; the fit must pick 1
    rec = fit_recurrence([2**n for n in range(12)], 5)
    assert rec.order == 1
    assert rec.rec_coeffs == (2,)


def test_fit_rejects_trailing_zero_descriptions():
    # 1, 1, 3, 9, 27, ... : every exact fit at order <= 3 needs a zero
    # trailing coefficient (the transient at n=0 forces a root at 0)
    terms = [1] + [3 ** (n - 1) for n in range(1, 12)]
    assert fit_recurrence(terms, 3) is None


def test_fit_insufficient_data():
    with pytest.raises(InsufficientDataError):
        fit_recurrence([1, 2, 3, 4], 2)
    with pytest.raises(DomainError):
        fit_recurrence([1, 2, 3, 4], 0)


def test_fit_constant_and_zero_sequences():
    rec = fit_recurrence([7] * 10, 3)
    assert rec.order == 1
    assert rec.rec_coeffs == (1,)
    rec = fit_recurrence([0] * 10, 2)
    assert rec is not None
    assert rec.extend(20) == [0] * 21


def test_fit_central_trinomial_is_not_cfinite():
    terms = central_coefficients(19)
    assert len(terms) == 20
    assert fit_recurrence(terms, 6) is None


def test_fit_needs_all_terms_to_agree():
    # last term breaks the pattern: no fit rather than a least-squares-ish one
    terms = [2**n for n in range(11)] + [9999]
    assert fit_recurrence(terms, 4) is None


def test_fit_extend_round_trip():
    rng = random.Random(601)
    for _ in range(40):
        order = rng.randint(1, 5)
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(order - 1)]
        coeffs.append(Fraction(rng.choice([-2, -1, 1, 2])))
        initials = [Fraction(rng.randint(-4, 4)) for _ in range(order)]
        rec = LinearRecurrence(order, tuple(coeffs), tuple(initials))
        # minimum data for this order: exactly 2*order + 2 terms
        fitted = fit_recurrence(rec.extend(2 * order + 1), order)
        assert fitted is not None
        assert fitted.order <= order
        assert fitted.extend(4 * order + 5) == rec.extend(4 * order + 5)
        # generous window, higher allowed order: same sequence comes back
        fitted5 = fit_recurrence(rec.extend(13), 5)
        assert fitted5 is not None
        assert fitted5.extend(30) == rec.extend(30)


def test_recurrence_from_gf_basic():
    rec = recurrence_from_gf(Poly([1, -1]), Poly([1, -2, -3]))
    assert rec.order == 2
    assert rec.rec_coeffs == (2, 3)
    assert rec.initials == (1, 1)
    assert rec.extend(4) == [1, 1, 5, 13, 41]


def test_recurrence_from_gf_pads_past_numerator():
    # (1+t^3)/(1-t): the order must clear the numerator degree
    rec = recurrence_from_gf(Poly([1, 0, 0, 1]), Poly([1, -1]))
    assert rec.order == 4
    assert rec.rec_coeffs == (1, 0, 0, 0)
    assert rec.extend(7) == [1, 1, 1, 2, 2, 2, 2, 2]


def test_recurrence_from_gf_min_order():
    rec = recurrence_from_gf(Poly([1]), Poly([1, -3]), min_order=4)
    assert rec.order == 4
    assert rec.rec_coeffs == (3, 0, 0, 0)
    assert rec.extend(6) == [1, 3, 9, 27, 81, 243, 729]
    with pytest.raises(DomainError):
        recurrence_from_gf(Poly([1]), Poly([0, 1]))


def test_recurrence_from_gf_unnormalized_den():
    rec = recurrence_from_gf(Poly([2]), Poly([2, -6]))
    assert rec.rec_coeffs == (3,)
    assert rec.initials == (1,)


def test_verify_equal_identical():
    fib = LinearRecurrence(2, (1, 1), (0, 1))
    verdict = verify_equal(fib, fib)
    assert verdict.equal
    assert verdict.window == 4
    assert verdict.first_difference_n is None


def test_verify_equal_padded_same_sequence():
    three = LinearRecurrence(1, (3,), (1,))
    padded = LinearRecurrence(2, (2, 3), (1, 3))
    verdict = verify_equal(three, padded)
    assert verdict.equal
    assert verdict.window == 3


def test_verify_equal_detects_difference():
    fib = LinearRecurrence(2, (1, 1), (0, 1))
    lucas = LinearRecurrence(2, (1, 1), (2, 1))
    verdict = verify_equal(fib, lucas)
    assert not verdict.equal
    assert verdict.first_difference_n == 0
    assert verdict.left_value == 0
    assert verdict.right_value == 2


def test_verify_equal_difference_past_initials():
    a = LinearRecurrence(2, (1, 1), (0, 1))
    b = LinearRecurrence(3, (1, 1, 0), (0, 1, 1))
    # b follows fibonacci for a while by construction; same values, so equal
    verdict = verify_equal(a, b)
    assert verdict.equal
    assert verdict.window == 5


def test_verify_equal_min_window():
    a = LinearRecurrence(1, (2,), (1,))
    verdict = verify_equal(a, a, min_window=50)
    assert verdict.window == 50
    assert verdict.equal


def test_verify_equal_agreement_is_a_proof():
    # when the verdict says equal, long extensions really do agree
    rng = random.Random(602)
    for _ in range(20):
        order = rng.randint(1, 4)
        coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(order - 1)]
        coeffs.append(Fraction(rng.choice([-1, 1, 2])))
        initials = [Fraction(rng.randint(-3, 3)) for _ in range(order)]
        rec = LinearRecurrence(order, tuple(coeffs), tuple(initials))
        # same sequence, re-described one order higher with zero padding
        padded = LinearRecurrence(
            order + 1, tuple(coeffs + [Fraction(0)]), tuple(rec.extend(order))
        )
        verdict = verify_equal(rec, padded)
        assert verdict.equal
        assert rec.extend(10 * order) == padded.extend(10 * order)


def test_verify_equal_json():
    fib = LinearRecurrence(2, (1, 1), (0, 1))
    lucas = LinearRecurrence(2, (1, 1), (2, 1))
    ok = verify_equal(fib, fib).to_json_dict()
    assert ok == {"equal": True, "window": 4}
    bad = verify_equal(fib, lucas).to_json_dict()
    assert bad["equal"] is False
    assert bad["first_difference_n"] == 0
    assert bad["left_value"] == "0"
    assert bad["right_value"] == "2"


def test_growth_rate_estimate():
    assert growth_rate_estimate([1, 3, 9, 27]) == 3
    assert growth_rate_estimate([5, 10]) == 2
    assert growth_rate_estimate([Fraction(1, 2), Fraction(1, 3)]) == Fraction(2, 3)
    with pytest.raises(DomainError):
        growth_rate_estimate([1])
    with pytest.raises(DomainError):
        growth_rate_estimate([1, 0, 5])


def test_growth_rate_converges_to_dominant_root():
    fib = LinearRecurrence(2, (1, 1), (0, 1))
    ratio = growth_rate_estimate(fib.extend(60))
    phi = (1 + 5**0.5) / 2
    assert abs(float(ratio) - phi) < 1e-10
