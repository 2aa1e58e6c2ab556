"""Residue-class coefficient sums of powers of a Laurent polynomial.

For P and a modulus k, the quantity of interest is

    A(n, k, a) = sum of coeff(P**n, j) over all j with j = a (mod k).

residue_sum computes single values by brute-force expansion (the oracle
path). residue_gfs computes, for all classes at once, the generating
functions f_a(t) = sum_n A(n, k, a) t^n, which are rational: the shift
identity A(n, k, a) = sum_i c_i A(n-1, k, (a-i) mod k) turns the family into
the linear system (I - t M) f = e_0 with the circulant fold
M[a][b] = sum of c_i over i = a-b (mod k). Cramer's rule bounds both the
shared denominator degree and the numerator degrees by k.

Residues are always floored into [0, k): (-3) mod 5 is 2 regardless of sign.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .cfinite import LinearRecurrence, recurrence_from_gf
from .errors import (
    DomainError,
    InternalConsistencyError,
    NotSymmetricError,
    ParseError,
)
from .laurent import LaurentPoly
from .ratfun import Poly, RationalFunction, solve_linear_system


def fold_residues(p: LaurentPoly, k: int) -> list[Fraction]:
    """Sums of the coefficients of p grouped by exponent residue mod k."""
    if k < 1:
        raise DomainError(f"modulus k must be positive, got {k}")
    out = [Fraction(0)] * k
    for e in p.support():
        out[e % k] += p.coeff(e)
    return out


def residue_sum(p: LaurentPoly, k: int, a: int, n: int) -> Fraction:
    """A(n, k, a) by direct expansion of p**n; reference implementation.

    >>> from .laurent import TRINOMIAL
    >>> residue_sum(TRINOMIAL, 2, 0, 3)
    Fraction(13, 1)
    """
    _check_class(k, a)
    if n < 0:
        raise DomainError(f"power n must be nonnegative, got {n}")
    return fold_residues(p**n, k)[a]


def _check_class(k: int, a: int) -> None:
    if k < 1:
        raise DomainError(f"modulus k must be positive, got {k}")
    if not 0 <= a < k:
        raise DomainError(f"residue class a must lie in [0, {k}), got {a}")


@dataclasses.dataclass
class ResidueSolution:
    """The family of generating functions f_a for fixed P and k.

    common_den is det(I - t M) normalized to constant term 1, kept
    unreduced; the per-class gfs are fully reduced, and every reduced
    denominator divides common_den. deg(common_den) can drop below k when
    P vanishes at a k-th root of unity, so the degree is reported alongside.
    """

    p: LaurentPoly
    k: int
    symmetric: bool
    common_den: Poly
    gfs: list[RationalFunction]

    def to_json_dict(self) -> dict:
        return {
            "P": self.p.to_json_dict(),
            "k": self.k,
            "common_den": self.common_den.to_json_list(),
            "common_den_degree": self.common_den.deg(),
            "gfs": [f.to_json_dict() for f in self.gfs],
            "symmetric": self.symmetric,
        }

    @staticmethod
    def from_json_dict(data: dict) -> ResidueSolution:
        for key in ("P", "k", "common_den", "gfs", "symmetric"):
            if not isinstance(data, dict) or key not in data:
                raise ParseError(f"residue solution JSON needs the key {key!r}", 0)
        return ResidueSolution(
            p=LaurentPoly.from_json_dict(data["P"]),
            k=data["k"],
            symmetric=bool(data["symmetric"]),
            common_den=Poly.from_json_list(data["common_den"]),
            gfs=[RationalFunction.from_json_dict(d) for d in data["gfs"]],
        )


def _transfer_system(p: LaurentPoly, k: int) -> tuple[list[list[Poly]], list[Poly]]:
    folded = fold_residues(p, k)
    matrix = []
    for a in range(k):
        row = []
        for b in range(k):
            w = folded[(a - b) % k]
            if a == b:
                row.append(Poly([Fraction(1), -w]))
            else:
                row.append(Poly([Fraction(0), -w]))
        matrix.append(row)
    rhs = [Poly.one()] + [Poly.zero()] * (k - 1)
    return matrix, rhs


def _solved_family(
    p: LaurentPoly, k: int, reduce_mask: list[bool] | None
) -> tuple[list[RationalFunction | None], Poly]:
    if p.is_zero():
        raise DomainError("residue generating functions need a nonzero polynomial")
    if k < 1:
        raise DomainError(f"modulus k must be positive, got {k}")
    matrix, rhs = _transfer_system(p, k)
    solved = solve_linear_system(matrix, rhs, max_degree=k, reduce_mask=reduce_mask)
    if solved.det.constant() != 1:
        raise InternalConsistencyError("det(I - tM) lost its constant term 1")
    return solved.solutions, solved.det


def residue_gfs(p: LaurentPoly, k: int) -> ResidueSolution:
    """Generating functions of A(n, k, a) for every class a at once.

    >>> from .laurent import TRINOMIAL
    >>> residue_gfs(TRINOMIAL, 2).gfs
    [RationalFunction('(1-t)/(1-2*t-3*t^2)'), RationalFunction('2*t/(1-2*t-3*t^2)')]
    """
    solutions, det = _solved_family(p, k, None)
    gfs = [f for f in solutions if f is not None]
    if len(gfs) != k:
        raise InternalConsistencyError("solver dropped a residue class")
    return ResidueSolution(
        p=p, k=k, symmetric=p.is_symmetric(), common_den=det, gfs=gfs
    )


def residue_gfs_symmetric(p: LaurentPoly, k: int) -> ResidueSolution:
    """Same result as residue_gfs, for symmetric P (P(x) = P(1/x)).

    Symmetry forces f_a = f_{k-a}, so only classes a <= k//2 are reduced and
    the rest are mirrored, sharing the reduced objects. Output is identical
    to residue_gfs entry by entry.
    """
    if not p.is_symmetric():
        raise NotSymmetricError(
            "polynomial is not symmetric; use the general residue_gfs path"
        )
    if k < 1:
        raise DomainError(f"modulus k must be positive, got {k}")
    mask = [a <= k // 2 for a in range(k)]
    solutions, det = _solved_family(p, k, mask)
    gfs: list[RationalFunction] = []
    for a in range(k):
        f = solutions[a] if mask[a] else solutions[k - a]
        if f is None:
            raise InternalConsistencyError("masked solver entry was requested")
        gfs.append(f)
    return ResidueSolution(p=p, k=k, symmetric=True, common_den=det, gfs=gfs)


def recurrence_of(sol: ResidueSolution, a: int = 0) -> LinearRecurrence:
    """The constant-coefficient recurrence shared by all residue classes.

    If common_den = 1 - d_1 t - ... - d_r t^r then every class satisfies
    A(n) = d_1 A(n-1) + ... + d_r A(n-r) once n clears the numerator degrees.
    The order is padded with zero coefficients up to
    max(r, 1 + max unreduced numerator degree), which by Cramer's bound never
    exceeds k; the padding makes the returned description reproduce the
    sequence from its initial values even when a class has a transient start
    (possible exactly when deg(common_den) < k). rec_coeffs are identical for
    every a; only the initial values differ.

    >>> from .laurent import TRINOMIAL
    >>> rec = recurrence_of(residue_gfs(TRINOMIAL, 2))
    >>> rec.order, rec.rec_coeffs
    (2, (Fraction(2, 1), Fraction(3, 1)))
    """
    _check_class(sol.k, a)
    r = sol.common_den.deg()
    m = max(r, 1)
    for f in sol.gfs:
        if f.is_zero():
            continue
        unreduced_num_deg = f.num.deg() + (r - f.den.deg())
        m = max(m, unreduced_num_deg + 1)
    f = sol.gfs[a]
    unreduced_num = f.num * sol.common_den.exact_div(f.den)
    return recurrence_from_gf(unreduced_num, sol.common_den, min_order=m)
