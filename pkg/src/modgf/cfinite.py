"""C-finite sequences: recurrence descriptions, fitting, and exact identity checks.

A sequence is C-finite when it satisfies a homogeneous linear recurrence with
constant coefficients; equivalently its generating function is rational. Two
C-finite sequences of orders r and s that agree on r + s consecutive leading
terms agree everywhere, because their difference is C-finite of order at most
r + s and vanishes on a full window of initial conditions. verify_equal turns
that into a finite, rigorous proof procedure.

Fibonacci here follows the convention F(-1) = 1, F(0) = 0, F(n) = F(n-1) + F(n-2).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InsufficientDataError, ParseError
from .rationals import rat_from_str, rat_to_str
from .ratfun import Poly, poly_series

RationalLike = Fraction | int


def fibonacci(n: int) -> int:
    """Fibonacci number under the convention F(-1) = 1, F(0) = 0.

    >>> [fibonacci(n) for n in range(-1, 9)]
    [1, 0, 1, 1, 2, 3, 5, 8, 13, 21]
    """
    if n < -1:
        raise DomainError(f"fibonacci is defined for n >= -1, got {n}")
    prev, cur = 1, 0
    for _ in range(n + 1):
        prev, cur = cur, prev + cur
    return prev


@dataclasses.dataclass(frozen=True)
class LinearRecurrence:
    """s(n) = rec_coeffs[0]*s(n-1) + ... + rec_coeffs[order-1]*s(n-order) for n >= order.

    initials are s(0) .. s(order-1). Fitted recurrences always have a nonzero
    trailing coefficient (true order); descriptions derived from generating
    functions may carry zero padding at the tail, which is what lets them
    reproduce sequences with a transient start (no trailing-nonzero
    description can, since its characteristic polynomial has no root 0).
    """

    order: int
    rec_coeffs: tuple[Fraction, ...]
    initials: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise DomainError(f"recurrence order must be positive, got {self.order}")
        object.__setattr__(
            self, "rec_coeffs", tuple(Fraction(c) for c in self.rec_coeffs)
        )
        object.__setattr__(
            self, "initials", tuple(Fraction(c) for c in self.initials)
        )
        if len(self.rec_coeffs) != self.order:
            raise DomainError(
                f"expected {self.order} recurrence coefficients, got {len(self.rec_coeffs)}"
            )
        if len(self.initials) != self.order:
            raise DomainError(
                f"expected {self.order} initial values, got {len(self.initials)}"
            )

    def extend(self, n_last: int) -> list[Fraction]:
        """Terms s(0) .. s(n_last) by direct recursion.

        >>> LinearRecurrence(2, (1, 1), (0, 1)).extend(8)[-1]
        Fraction(21, 1)
        """
        if n_last < 0:
            raise DomainError(f"extend needs a nonnegative index, got {n_last}")
        vals = list(self.initials[: n_last + 1])
        for n in range(self.order, n_last + 1):
            vals.append(
                sum(
                    (self.rec_coeffs[j] * vals[n - 1 - j] for j in range(self.order)),
                    Fraction(0),
                )
            )
        return vals

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "rec_coeffs": [rat_to_str(c) for c in self.rec_coeffs],
            "initials": [rat_to_str(c) for c in self.initials],
        }

    @staticmethod
    def from_json_dict(data: dict) -> LinearRecurrence:
        for key in ("order", "rec_coeffs", "initials"):
            if not isinstance(data, dict) or key not in data:
                raise ParseError(f"recurrence JSON needs the key {key!r}", 0)
        return LinearRecurrence(
            order=data["order"],
            rec_coeffs=tuple(rat_from_str(c) for c in data["rec_coeffs"]),
            initials=tuple(rat_from_str(c) for c in data["initials"]),
        )


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form over the first ncols columns.

    Returns the reduced rows and the pivot column indices. Rows may have one
    extra augmented column beyond ncols; it is carried along.
    """
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, pivots


def _fit_exact_order(terms: list[Fraction], order: int) -> list[Fraction] | None:
    """Coefficients d_1..d_order fitting every term, with d_order != 0, or None."""
    rows = [
        [terms[n - j] for j in range(1, order + 1)] + [terms[n]]
        for n in range(order, len(terms))
    ]
    rows, pivots = _rref(rows, order)
    rank = len(pivots)
    for r in range(rank, len(rows)):
        if rows[r][order] != 0:
            return None
    solution = [Fraction(0)] * order
    for idx, col in enumerate(pivots):
        solution[col] = rows[idx][order]
    if solution[order - 1] != 0:
        return solution
    # The particular solution has a vanishing trailing coefficient; a free
    # column may still allow one. Each free column f yields the null-space
    # vector with 1 at f and -rref[idx][f] at each pivot column.
    free_cols = [c for c in range(order) if c not in pivots]
    for f in free_cols:
        null_vec = [Fraction(0)] * order
        null_vec[f] = Fraction(1)
        for idx, col in enumerate(pivots):
            null_vec[col] = -rows[idx][f]
        if null_vec[order - 1] != 0:
            return [s + v for s, v in zip(solution, null_vec)]
    return None


def fit_recurrence(
    terms: Sequence[RationalLike], max_order: int
) -> LinearRecurrence | None:
    """Minimal-order recurrence (order <= max_order) satisfied by ALL terms.

    Orders are tried from 1 upward; the first exact fit wins, so minimality
    is structural. The trailing coefficient of the result is nonzero. Returns
    None when no order fits, which is distinct from having too little data:
    fitting order r and cross-validating needs at least 2r + 2 terms, and
    shorter input raises InsufficientDataError.

    >>> fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    >>> fit_recurrence(fib, 4).rec_coeffs
    (Fraction(1, 1), Fraction(1, 1))
    """
    if max_order < 1:
        raise DomainError(f"max_order must be positive, got {max_order}")
    ts = [Fraction(t) for t in terms]
    needed = 2 * max_order + 2
    if len(ts) < needed:
        raise InsufficientDataError(
            f"fitting up to order {max_order} needs at least {needed} terms, got {len(ts)}"
        )
    for order in range(1, max_order + 1):
        coeffs = _fit_exact_order(ts, order)
        if coeffs is not None:
            return LinearRecurrence(
                order=order, rec_coeffs=tuple(coeffs), initials=tuple(ts[:order])
            )
    return None


def recurrence_from_gf(num: Poly, den: Poly, min_order: int = 0) -> LinearRecurrence:
    """C-finite description of the sequence generated by num/den.

    Writing den = den(0)*(1 - d_1 t - ... - d_r t^r), the coefficients of
    num/den satisfy s(n) = sum d_j s(n-j) once n exceeds deg num, so the
    returned order is max(r, deg num + 1, min_order, 1) with zero padding
    past r; num and den need not be coprime.

    >>> recurrence_from_gf(Poly([1, -1]), Poly([1, -2, -3])).rec_coeffs
    (Fraction(2, 1), Fraction(3, 1))
    """
    c0 = den.constant()
    if c0 == 0:
        raise DomainError("not a power series: denominator vanishes at t = 0")
    order = max(den.deg(), num.deg() + 1, min_order, 1)
    rec = [
        -den.coeffs[i] / c0 if i <= den.deg() else Fraction(0)
        for i in range(1, order + 1)
    ]
    initials = poly_series(num, den, order - 1)
    return LinearRecurrence(
        order=order, rec_coeffs=tuple(rec), initials=tuple(initials)
    )


@dataclasses.dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of comparing two C-finite descriptions on a proof window."""

    equal: bool
    window: int
    first_difference_n: int | None = None
    left_value: Fraction | None = None
    right_value: Fraction | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"equal": self.equal, "window": self.window}
        if not self.equal:
            out["first_difference_n"] = self.first_difference_n
            out["left_value"] = rat_to_str(self.left_value)
            out["right_value"] = rat_to_str(self.right_value)
        return out


def verify_equal(
    left: LinearRecurrence, right: LinearRecurrence, min_window: int = 0
) -> EqualityVerdict:
    """Prove or refute equality of two C-finite sequences by a finite check.

    Agreement on left.order + right.order leading terms is a proof: the
    difference is C-finite of order at most the sum and vanishes on a full
    initial window, hence everywhere. min_window widens the check (never
    narrows it) for reassurance windows larger than the proof bound.

    >>> three_n = LinearRecurrence(1, (3,), (1,))
    >>> padded = LinearRecurrence(2, (2, 3), (1, 3))
    >>> verify_equal(three_n, padded).equal
    True
    """
    window = max(left.order + right.order, min_window)
    lv = left.extend(window - 1)
    rv = right.extend(window - 1)
    for n, (x, y) in enumerate(zip(lv, rv)):
        if x != y:
            return EqualityVerdict(
                equal=False,
                window=window,
                first_difference_n=n,
                left_value=x,
                right_value=y,
            )
    return EqualityVerdict(equal=True, window=window)


def growth_rate_estimate(terms: Sequence[RationalLike]) -> Fraction:
    """Ratio of the last two supplied terms, exactly.

    The caller picks a window long enough for the ratio to have converged to
    the dominant characteristic root.

    >>> growth_rate_estimate([1, 3, 9, 27])
    Fraction(3, 1)
    """
    if len(terms) < 2:
        raise DomainError("growth rate needs at least two terms")
    prev = Fraction(terms[-2])
    if prev == 0:
        raise DomainError("growth rate undefined: next-to-last term is zero")
    return Fraction(terms[-1]) / prev
