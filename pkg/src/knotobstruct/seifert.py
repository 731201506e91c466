"""Seifert-matrix calculus and the genus-one spine model.

A Seifert matrix V of a knot satisfies det(V - V^T) = 1; the Alexander
polynomial is det(V - t V^T) normalized symmetric with value 1 at t = 1.
The genus-one spine carries the framings (n, m), the linking number ell
of the two spine strands, and the explicit sign eps of the off-diagonal
ell +- 1 entry; d = n*m - ell^2 - ell.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product

from .diagram import PretzelParams
from .errors import SingularForm, ValidationError
from .laurent import LaurentPoly


class SeifertMatrix:
    """Square integer matrix with det(V - V^T) = 1, checked on construction."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValidationError("Seifert matrix must be square")
        self.rows = rows
        if self._det_v_minus_vt() != 1:
            raise ValidationError(
                f"det(V - V^T) = {self._det_v_minus_vt()} != 1: "
                "not a Seifert matrix of a knot"
            )

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows)) if self.rows else ()

    def _det_v_minus_vt(self) -> int:
        vt = self.transpose()
        m = [
            [self.rows[i][j] - vt[i][j] for j in range(self.size)]
            for i in range(self.size)
        ]
        return _int_det(m)

    def __eq__(self, other):
        return isinstance(other, SeifertMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"SeifertMatrix({list(map(list, self.rows))})"


def _int_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    det = Fraction(1)
    for i in range(n):
        piv = next((j for j in range(i, n) if m[j][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        inv = Fraction(1, m[i][i])
        for j in range(i + 1, n):
            f = m[j][i] * inv
            m[j] = [m[j][k] - f * m[i][k] for k in range(n)]
    assert det.denominator == 1
    return int(det)


@dataclass(frozen=True)
class GenusOneSpine:
    """Framing/linking data (n, m, ell) of a genus-one spine tangle."""

    n: int
    m: int
    ell: int
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValidationError("eps must be +1 or -1")

    @property
    def d(self) -> int:
        """d = n*m - ell*(ell + eps), recomputed on every access.

        With the standard eps = +1 this is n*m - ell^2 - ell; the eps = -1
        spine is the transpose convention, where the same determinant
        calculation gives n*m - ell^2 + ell.
        """
        return self.n * self.m - self.ell * (self.ell + self.eps)


def seifert_from_spine(s: GenusOneSpine) -> SeifertMatrix:
    """The 2x2 Seifert matrix [[n, ell], [ell + eps, m]]."""
    return SeifertMatrix([[s.n, s.ell], [s.ell + s.eps, s.m]])


def crossing_change(s: GenusOneSpine, sign: int) -> GenusOneSpine:
    """Replace the framing n by n + sign (the cosmetic crossing move)."""
    if sign not in (1, -1):
        raise ValidationError("sign must be +1 or -1")
    return replace(s, n=s.n + sign)


def alexander_from_seifert(V: SeifertMatrix) -> LaurentPoly:
    """Normalized Alexander polynomial det(V - t V^T)."""
    n = V.size
    if n == 0:
        return LaurentPoly.one()
    vt = V.transpose()
    if n == 2:
        # det = (ad - bc)(1 + t^2) + (b^2 + c^2 - 2ad) t
        (a, b), (c, d) = V.rows
        raw = LaurentPoly(
            {0: a * d - b * c, 1: b * b + c * c - 2 * a * d, 2: a * d - b * c}
        )
    else:
        entries = [
            [
                LaurentPoly({0: V.rows[i][j], 1: -vt[i][j]})
                for j in range(n)
            ]
            for i in range(n)
        ]
        raw = _poly_det(entries)
    return raw.alexander_normalize()


def _poly_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Cofactor-expansion determinant for small polynomial matrices."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
        term = m[0][j] * _poly_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def alexander_genus_one(s: GenusOneSpine) -> LaurentPoly:
    """d t + (1 - 2d) + d t^-1 with d = s.d."""
    d = s.d
    return LaurentPoly({1: d, 0: 1 - 2 * d, -1: d})


def signature(V: SeifertMatrix) -> int:
    """Signature of V + V^T by exact symmetric congruence diagonalization.

    Rational pivots throughout; a zero diagonal pivot with a nonzero
    off-diagonal partner is cured by adding the partner row and column,
    which keeps the congruence class and never leaves the rationals.
    """
    n = V.size
    vt = V.transpose()
    m = [
        [Fraction(V.rows[i][j] + vt[i][j]) for j in range(n)]
        for i in range(n)
    ]
    pos = neg = 0
    for i in range(n):
        if m[i][i] == 0:
            j = next((k for k in range(i + 1, n) if m[k][k] != 0), None)
            if j is not None:
                m[i], m[j] = m[j], m[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((k for k in range(i + 1, n) if m[i][k] != 0), None)
                if j is None:
                    raise SingularForm("V + V^T is singular")
                for k in range(n):
                    m[i][k] += m[j][k]
                for k in range(n):
                    m[k][i] += m[k][j]
        piv = m[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            f = m[j][i] / piv
            if f:
                for k in range(i, n):
                    m[j][k] -= f * m[i][k]
                for k in range(i, n):
                    m[k][j] -= f * m[k][i]
    return pos - neg


def knot_determinant(V: SeifertMatrix) -> int:
    """|Delta(-1)|, the order of H_1 of the double branched cover."""
    val = abs(alexander_from_seifert(V).evaluate(-1))
    assert val.denominator == 1
    return int(val)


def pretzel_seifert(params: PretzelParams) -> SeifertMatrix:
    """Genus-one Seifert matrix of P(p,q,r) for odd p, q, r.

    The convention [[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]] is pinned by
    matching the Alexander polynomial d t + (1-2d) + d t^-1 with
    d = (pq + qr + rp + 1)/4.
    """
    p, q, r = params.as_tuple()
    return SeifertMatrix(
        [[(p + q) // 2, (q + 1) // 2], [(q - 1) // 2, (q + r) // 2]]
    )


def pretzel_alexander_coeff(params: PretzelParams) -> int:
    """The leading coefficient d = (pq+qr+rp+1)/4 of Delta(P(p,q,r))."""
    p, q, r = params.as_tuple()
    num = p * q + q * r + r * p + 1
    assert num % 4 == 0
    return num // 4


def m_forcing_check(bound: int) -> bool:
    """Exhaustively verify that Alexander invariance under a crossing
    change forces m = 0 on spines with n, m, ell in [-bound, bound].

    Both eps signs and both crossing-change directions are swept; the
    Alexander polynomials are recomputed from the Seifert matrices.
    """
    rng = range(-bound, bound + 1)
    for n, m, ell in product(rng, rng, rng):
        for eps in (1, -1):
            s = GenusOneSpine(n, m, ell, eps)
            alex = alexander_from_seifert(seifert_from_spine(s))
            for sign in (1, -1):
                s2 = crossing_change(s, sign)
                alex2 = alexander_from_seifert(seifert_from_spine(s2))
                if (alex == alex2) != (m == 0):
                    return False
    return True
