"""Presentations for H1 of cyclic branched covers.

Two independent routes reach the double branched cover: the Goeritz matrix of
a checkerboard-shaded diagram, and ``V + V^T`` for a Seifert matrix ``V``.
Higher covers come from the Seifert matrix alone, and Fox's formula (via a
resultant against the Alexander polynomial) checks the group order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactalg import (
    AbelianGroup,
    IntMatrix,
    IntPolynomial,
    det,
    group_from_presentation,
    resultant,
)
from .knotcodes import BraidWord, Diagram

#: covers beyond this index are allowed but produce large presentations
MAX_ROUTINE_P = 12


class InvalidMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    v: IntMatrix

    def __post_init__(self):
        v = self.v
        if not v.is_square or v.rows % 2:
            raise InvalidMatrixError(f"Seifert matrix must be square of even size, got {v.rows}x{v.cols}")
        d = det(v - v.T)
        if d != 1:
            raise InvalidMatrixError(f"det(V - V^T) = {d}, expected 1")

    @property
    def genus(self) -> int:
        return self.v.rows // 2


@dataclass(frozen=True)
class GoeritzMatrix:
    g: IntMatrix

    def __post_init__(self):
        g = self.g
        if not g.is_square or g != g.T:
            raise InvalidMatrixError("Goeritz matrix must be square and symmetric")
        if det(g) % 2 == 0:
            raise InvalidMatrixError(f"knot determinant must be odd, got |det| = {abs(det(g))}")


# -- Goeritz ----------------------------------------------------------------

def crossing_type(diagram: Diagram, c: int) -> int:
    """+1 when the white corners lie counterclockwise of the under-strand slots, else -1."""
    white = [diagram.white[diagram.corner_face(c, k)] for k in range(4)]
    if white[0] != white[2] or white[1] != white[3] or white[0] == white[1]:
        raise InvalidMatrixError(f"crossing {c} is not checkerboard shaded")
    return 1 if white[0] else -1


def goeritz_matrix(diagram: Diagram) -> GoeritzMatrix:
    """Reduced Goeritz matrix over the white regions, unbounded region deleted."""
    regions = [f for f, w in enumerate(diagram.white) if w]
    index = {f: i for i, f in enumerate(regions)}
    n = len(regions)
    g = [[0] * n for _ in range(n)]
    for c in range(len(diagram.crossings)):
        eta = crossing_type(diagram, c)
        k = 0 if eta == 1 else 1
        a = index[diagram.corner_face(c, k)]
        b = index[diagram.corner_face(c, k + 2)]
        if a != b:
            g[a][b] -= eta
            g[b][a] -= eta
    for i in range(n):
        g[i][i] = -sum(g[i][j] for j in range(n) if j != i)
    drop = index.get(diagram.unbounded, 0)
    keep = [i for i in range(n) if i != drop]
    return GoeritzMatrix(IntMatrix.from_rows([[g[i][j] for j in keep] for i in keep], len(keep)))


# -- Seifert matrices from braids --------------------------------------------

def seifert_matrix_from_braid(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the surface built from a closed braid.

    Seifert circles are the strands, each letter adds a twisted band, and the
    basis loops run through consecutive bands of the same generator.  Linking
    numbers:

    * a loop through bands of signs e1, e2 links its push-off -(e1 + e2) / 2;
    * consecutive loops sharing a band of sign e: +1 above the diagonal when
      e > 0, -1 below it when e < 0;
    * loops on generators i and i + 1 with interleaved band positions
      p1 < q1 < p2 < q2 give +1, and q1 < p1 < q2 < p2 give -1, in the
      (generator i, generator i + 1) entry.
    """
    loops = []
    for gen in range(1, b.strands):
        bands = [(k, 1 if e > 0 else -1) for k, e in enumerate(b.letters) if abs(e) == gen]
        for (p1, e1), (p2, e2) in zip(bands, bands[1:]):
            loops.append((gen, p1, p2, e1, e2))
    n = len(loops)
    v = [[0] * n for _ in range(n)]
    for x, (gen, p1, p2, e1, e2) in enumerate(loops):
        v[x][x] = -(e1 + e2) // 2
        for y, (gen2, q1, q2, _, _) in enumerate(loops):
            if gen2 == gen and q1 == p2:
                if e2 > 0:
                    v[x][y] = 1
                else:
                    v[y][x] = -1
            elif gen2 == gen + 1:
                if p1 < q1 < p2 < q2:
                    v[x][y] = 1
                elif q1 < p1 < q2 < p2:
                    v[x][y] = -1
    return SeifertMatrix(IntMatrix.from_rows(v, n))


# -- Alexander polynomial and Fox's formula --------------------------------

def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    coeffs = [Fraction(0)] * len(xs)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = [(basis[k - 1] if k else 0) - xj * (basis[k] if k < len(basis) else 0)
                         for k in range(len(basis) + 1)]
                denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += Fraction(ys[i], denom) * c
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def normalize_laurent(coefficients) -> IntPolynomial:
    """Strip powers of t and make the lowest coefficient positive."""
    c = list(coefficients)
    while c and c[-1] == 0:
        c.pop()
    while c and c[0] == 0:
        c.pop(0)
    if c and c[0] < 0:
        c = [-x for x in c]
    return IntPolynomial(tuple(c))


def alexander_polynomial(s: SeifertMatrix) -> IntPolynomial:
    """det(V - t V^T), normalized; the unknot gives 1."""
    v = s.v
    xs = list(range(v.rows + 1))
    ys = [det(v - v.T.scale(t)) for t in xs]
    return normalize_laurent(_interpolate(xs, ys))


def cyclotomic_sum(p: int) -> IntPolynomial:
    """1 + t + ... + t^(p-1)."""
    return IntPolynomial((1,) * p)


def fox_order(delta: IntPolynomial, p: int) -> int | None:
    """|prod_j delta(zeta_p^j)| as an exact resultant; None when it vanishes (infinite H1)."""
    if p < 2:
        raise ValueError("cover index p must be >= 2")
    r = abs(resultant(delta, cyclotomic_sum(p)))
    return r or None


# -- cover presentations ---------------------------------------------------

def cover_presentation(s: SeifertMatrix, p: int) -> IntMatrix:
    """Square presentation of H1 of the p-fold branched cover.

    Block tridiagonal with (p-1) x (p-1) blocks: V + V^T on the diagonal, -V
    above and -V^T below.  For p = 2 this is V + V^T.
    """
    if p < 2:
        raise ValueError("cover index p must be >= 2")
    v = s.v
    zero = IntMatrix.zeros(v.rows, v.cols)
    sym = v + v.T

    def block(i, j):
        if i == j:
            return sym
        if j == i + 1:
            return -v
        if j == i - 1:
            return -v.T
        return zero

    if v.rows == 0:
        return IntMatrix(0, 0, ())
    return IntMatrix.block([[block(i, j) for j in range(p - 1)] for i in range(p - 1)])


def cover_homology(source: Union[SeifertMatrix, GoeritzMatrix], p: int) -> AbelianGroup:
    if isinstance(source, GoeritzMatrix):
        if p != 2:
            raise ValueError(f"a Goeritz matrix only presents the double cover, not p = {p}")
        return group_from_presentation(source.g)
    return group_from_presentation(cover_presentation(source, p))


# -- table notation --------------------------------------------------------

def format_homology(p: int, g: AbelianGroup) -> str:
    """``{p,{d1,...,dk,0,...,0}}``: invariant factors then one 0 per Z summand.

    The trivial group prints as ``{p,{1}}``.
    """
    items = [str(d) for d in g.torsion] + ["0"] * g.free_rank
    return "{%d,{%s}}" % (p, ",".join(items or ["1"]))


_NOTATION = re.compile(r"^\{\s*(\d+)\s*,\s*\{([\d,\s]*)\}\s*\}$")


def parse_homology(text: str) -> tuple[int, AbelianGroup]:
    m = _NOTATION.match(text.strip())
    if not m:
        raise ValueError(f"not in {{p,{{d1,...}}}} notation: {text!r}")
    orders = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
    return int(m.group(1)), AbelianGroup.from_orders(orders)

