"""Exact integer linear algebra.

Everything here works on Python ints, so entries never overflow and results
are exact: Smith normal form with unimodular certificates, fraction-free
determinants, Sylvester resultants, and the cokernel of a relation matrix as
a finitely generated abelian group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix.  Immutable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls.from_rows(out, cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """Assemble a matrix from a grid of equally sized blocks."""
        out: list[list[int]] = []
        for brow in blocks:
            height = brow[0].rows
            for i in range(height):
                line: list[int] = []
                for b in brow:
                    line.extend(b.entries[i * b.cols:(i + 1) * b.cols])
                out.append(line)
        cols = sum(b.cols for b in blocks[0]) if blocks else 0
        return cls.from_rows(out, cols)

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(col) for col in zip(*self.to_rows())] if self.rows else
                                   [[] for _ in range(self.cols)], self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a = self.to_rows()
        bt = other.T.to_rows()
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a], other.cols
        )

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix.block([[other.scale(self[i, j]) for j in range(self.cols)]
                                for i in range(self.rows)])

    def _same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")

    def format(self) -> str:
        """Render in the ``a b; c d`` text format."""
        return "; ".join(" ".join(str(x) for x in r) for r in self.to_rows())

    def __str__(self) -> str:
        return self.format()


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"-2 1; 1 -2"`` or the bracketed ``"[[-2, 1], [1, -2]]"`` form.

    An empty string, ``"[]"`` or ``"[[]]"`` is the 0x0 matrix.
    """
    s = text.strip()
    if s.startswith("["):
        inner = s[1:-1].strip() if s.endswith("]") else None
        if inner is None:
            raise MatrixFormatError(f"unbalanced brackets in {text!r}")
        if inner in ("", "[]"):
            return IntMatrix(0, 0, ())
        rows_txt = re.findall(r"\[([^\[\]]*)\]", inner)
        leftover = re.sub(r"\[[^\[\]]*\]", "", inner).replace(",", "").strip()
        if leftover or not rows_txt:
            raise MatrixFormatError(f"bad bracketed matrix {text!r}")
    else:
        if not s:
            return IntMatrix(0, 0, ())
        rows_txt = s.split(";")
    rows = []
    for k, r in enumerate(rows_txt):
        toks = [t for t in re.split(r"[\s,]+", r.strip()) if t]
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise MatrixFormatError(f"row {k + 1} of {text!r} has a non-integer entry") from None
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise MatrixFormatError(f"rows of {text!r} have differing lengths {sorted(widths)}")
    return IntMatrix.from_rows(rows)


# -- determinants -----------------------------------------------------------

def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


# -- Smith normal form ------------------------------------------------------

@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == d`` with ``d`` diagonal and ``u``, ``v`` unimodular."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]


def _diagonalize(a: list[list[int]], nrows: int, ncols: int, track: bool):
    """In-place Smith reduction of ``a``; returns (U, V) row lists when tracking."""
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if track else None
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if track else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if track:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        rd, rs = a[dst], a[src]
        for k in range(ncols):
            if rs[k]:
                rd[k] -= q * rs[k]
        if track:
            ud, us = U[dst], U[src]
            for k in range(nrows):
                if us[k]:
                    ud[k] -= q * us[k]

    def add_col(dst, src, q):  # col dst -= q * col src
        for r in a:
            if r[src]:
                r[dst] -= q * r[src]
        if track:
            for r in V:
                if r[src]:
                    r[dst] -= q * r[src]

    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, _nearest_quotient(a[i][t], p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, _nearest_quotient(a[t][j], p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared; move it to the pivot slot
                best = None
                for i in range(t, nrows):
                    if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                        best = (abs(a[i][t]), i, t)
                for j in range(t, ncols):
                    if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                        best = (abs(a[t][j]), t, j)
                _, i, j = best
                if i != t:
                    swap_rows(i, t)
                if j != t:
                    swap_cols(j, t)
                continue
            bad = next((i for i in range(t + 1, nrows)
                        if any(a[i][j] % p for j in range(t + 1, ncols))), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                U[t] = [-x for x in U[t]]
        t += 1
    return U, V


def _nearest_quotient(x: int, p: int) -> int:
    q, r = divmod(x, p)
    if abs(r - p) < abs(r):
        q += 1
    return q


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with transform certificates.

    Diagonal entries are nonnegative and form a divisibility chain with zeros
    trailing.  The certificates satisfy ``u @ m @ v == d`` exactly.
    """
    a = m.to_rows()
    U, V = _diagonalize(a, m.rows, m.cols, track=True)
    return SnfResult(
        d=IntMatrix.from_rows(a, m.cols),
        u=IntMatrix.from_rows(U, m.rows),
        v=IntMatrix.from_rows(V, m.cols),
    )


def invariant_factors(m: IntMatrix) -> list[int]:
    """SNF diagonal of ``m`` without building certificates."""
    a = m.to_rows()
    _diagonalize(a, m.rows, m.cols, track=False)
    return [a[i][i] for i in range(min(m.rows, m.cols))]


# -- abelian groups ---------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti >= 2."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for x in self.torsion:
            if x < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {x}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "AbelianGroup":
        """Normalize an arbitrary direct sum of cyclic groups (0 means Z)."""
        orders = [abs(x) for x in orders]
        free = free_rank + sum(1 for x in orders if x == 0)
        finite = [x for x in orders if x not in (0, 1)]
        if not finite:
            return cls((), free)
        return group_from_presentation(IntMatrix.diagonal(finite)).direct_sum(cls((), free))

    @property
    def rank(self) -> int:
        """Minimal number of generators."""
        return len(self.torsion) + self.free_rank

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return None if self.free_rank else prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0

    @property
    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        free = self.free_rank + other.free_rank
        orders = list(self.torsion) + list(other.torsion)
        if not orders:
            return AbelianGroup((), free)
        g = group_from_presentation(IntMatrix.diagonal(orders))
        return AbelianGroup(g.torsion, free)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def group_from_presentation(m: IntMatrix) -> AbelianGroup:
    """Cokernel of the relation matrix ``m`` (rows = relations, columns = generators)."""
    diag = invariant_factors(m)
    nonzero = [d for d in diag if d]
    return AbelianGroup(tuple(d for d in nonzero if d > 1), m.cols - len(nonzero))


# -- polynomials ------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t" if k == 1 else f"{c}*t^{k}")
        return " + ".join(terms).replace("+ -", "- ")


def sylvester_matrix(p: IntPolynomial, q: IntPolynomial) -> IntMatrix:
    m, n = p.degree, q.degree
    size = m + n
    pc = list(reversed(p.coefficients))
    qc = list(reversed(q.coefficients))
    rows = []
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return IntMatrix.from_rows(rows, size)


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Res(p, q) as the determinant of the Sylvester matrix."""
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if p.degree == 0 and q.degree == 0:
        return 1
    if p.degree == 0:
        return p.coefficients[0] ** q.degree
    if q.degree == 0:
        return q.coefficients[0] ** p.degree
    return det(sylvester_matrix(p, q))


def content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
