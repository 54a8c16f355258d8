"""Knot notations: PD codes, braid words, and planar face reconstruction.

PD convention: each crossing ``X(a,b,c,d)`` lists its four edge labels
counterclockwise starting from the incoming under-strand, so ``a -> c`` is the
under-strand and ``b``/``d`` the over-strand.  Accepted syntax::

    PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]
    [[1,4,2,5],[3,6,4,1],[5,2,6,3]]          (KnotInfo list form)

Braid syntax is ``n: e1 e2 ... ek`` with ``0 < |ei| < n``; ``sign(ei)`` is the
crossing sign and ``|ei|`` the generator index.  ``[e1, ..., ek]`` is also
accepted, with ``n = max|ei| + 1``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence


class KnotCodeError(ValueError):
    """Base class for malformed knot presentations."""


class PdSyntaxError(KnotCodeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DanglingEdgeError(KnotCodeError):
    pass


class LinkNotKnotError(KnotCodeError):
    pass


class NonPlanarError(KnotCodeError):
    pass


class BraidSyntaxError(KnotCodeError):
    pass


class GeneratorRangeError(KnotCodeError):
    pass


# -- PD codes ---------------------------------------------------------------

@dataclass(frozen=True)
class PdCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        _validate_pd(self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def __str__(self) -> str:
        return format_pd(self)


def format_pd(pd: PdCode) -> str:
    return "PD[" + ",".join("X(%d,%d,%d,%d)" % x for x in pd.crossings) + "]"


def _validate_pd(crossings) -> None:
    counts = Counter(label for x in crossings for label in x)
    for label in counts:
        if label <= 0:
            raise KnotCodeError(f"edge label {label} is not a positive integer")
    odd = sorted(k for k, v in counts.items() if v == 1)
    if odd:
        raise DanglingEdgeError(f"edge labels {odd} occur once; every label must occur exactly twice")
    many = sorted(k for k, v in counts.items() if v > 2)
    if many:
        raise KnotCodeError(f"edge labels {many} occur more than twice")
    # strands join a-c (under) and b-d (over); one class means one component
    parent = {k: k for k in counts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    components = len({find(k) for k in counts})
    if components > 1:
        raise LinkNotKnotError(f"PD code describes a {components}-component link, not a knot")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            raise PdSyntaxError(f"expected {token!r}, found {found!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"[+-]?\d+").match(self.text, self.pos)
        if not m:
            raise PdSyntaxError("expected an integer edge label", self.pos)
        value = int(m.group())
        if value <= 0:
            raise PdSyntaxError(f"edge label {value} is not positive", self.pos)
        self.pos = m.end()
        return value

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def parse_pd(text: str) -> PdCode:
    """Parse a PD code; raises PdSyntaxError with the offending character offset."""
    s = _Scanner(text)
    bracket_form = s.peek() == "["
    if bracket_form:
        s.expect("[")
        opener, closer = "[", "]"
    else:
        s.expect("PD")
        s.expect("[")
        opener, closer = "X(", ")"
    crossings = []
    if s.peek() != "]":
        while True:
            s.expect(opener)
            quad = [s.integer()]
            for _ in range(3):
                s.expect(",")
                quad.append(s.integer())
            s.expect(closer)
            crossings.append(tuple(quad))
            if s.peek() == ",":
                s.expect(",")
                continue
            break
    s.expect("]")
    if not s.at_end():
        raise PdSyntaxError("trailing characters", s.pos)
    return PdCode(tuple(crossings))


# -- braids -----------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise GeneratorRangeError("a braid needs at least one strand")
        for e in self.letters:
            if e == 0 or abs(e) >= self.strands:
                raise GeneratorRangeError(
                    f"generator {e} out of range for a {self.strands}-strand braid")
        n = closure_components(self.strands, self.letters)
        if n != 1:
            raise LinkNotKnotError(f"braid closure has {n} components")

    def __str__(self) -> str:
        return format_braid(self)


def closure_components(strands: int, letters: Sequence[int]) -> int:
    """Number of link components of the braid closure (orbits of the permutation)."""
    perm = list(range(strands))
    for e in letters:
        i = abs(e) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * strands
    orbits = 0
    for start in range(strands):
        if not seen[start]:
            orbits += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return orbits


def format_braid(b: BraidWord) -> str:
    return f"{b.strands}:" + "".join(f" {e}" for e in b.letters)


def parse_braid(text: str) -> BraidWord:
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise BraidSyntaxError(f"unbalanced brackets in {text!r}")
        body = s[1:-1].strip()
        try:
            letters = [int(t) for t in re.split(r"[\s,]+", body) if t]
        except ValueError:
            raise BraidSyntaxError(f"non-integer letter in {text!r}") from None
        if any(e == 0 for e in letters):
            raise BraidSyntaxError("braid letters must be nonzero")
        return BraidWord(max((abs(e) for e in letters), default=0) + 1, tuple(letters))
    head, sep, body = s.partition(":")
    if not sep:
        raise BraidSyntaxError(f"expected 'n: e1 e2 ...', got {text!r}")
    try:
        strands = int(head)
        letters = [int(t) for t in body.replace(",", " ").split()]
    except ValueError:
        raise BraidSyntaxError(f"non-integer token in {text!r}") from None
    if strands < 1:
        raise BraidSyntaxError(f"strand count must be >= 1, got {strands}")
    if any(e == 0 for e in letters):
        raise BraidSyntaxError("braid letters must be nonzero")
    return BraidWord(strands, tuple(letters))


# -- planar diagrams --------------------------------------------------------

Dart = tuple[int, int]  # (crossing index, slot) leaving the crossing through that slot


@dataclass(frozen=True)
class Diagram:
    """A PD code with its faces and checkerboard shading.

    ``faces[f]`` is the cyclic list of darts bounding face ``f``; the dart
    ``(c, s)`` sits in the corner of crossing ``c`` between slots ``s - 1`` and
    ``s``.  ``white[f]`` is the shading; the unbounded face is white.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    edges: tuple[int, ...]
    faces: tuple[tuple[Dart, ...], ...]
    white: tuple[bool, ...]
    unbounded: int

    @property
    def euler_characteristic(self) -> int:
        return len(self.crossings) - len(self.edges) + len(self.faces)

    def face_edges(self, f: int) -> list[int]:
        return [self.crossings[c][s] for c, s in self.faces[f]]

    def corner_face(self, crossing: int, corner: int) -> int:
        """Face containing the corner between slots ``corner`` and ``corner + 1``."""
        return self._corner_index[(crossing, corner)]

    @cached_property
    def _corner_index(self) -> dict:
        idx = {}
        for f, face in enumerate(self.faces):
            for c, s in face:
                idx[(c, (s - 1) % 4)] = f
        return idx


def reconstruct_diagram(pd: PdCode) -> Diagram:
    """Trace faces from the cyclic slot order at each crossing and shade them."""
    crossings = pd.crossings
    where: dict[int, list[Dart]] = {}
    for c, x in enumerate(crossings):
        for s, label in enumerate(x):
            where.setdefault(label, []).append((c, s))

    def other(d: Dart) -> Dart:
        a, b = where[crossings[d[0]][d[1]]]
        return b if a == d else a

    face_of: dict[Dart, int] = {}
    faces: list[tuple[Dart, ...]] = []
    for c in range(len(crossings)):
        for s in range(4):
            if (c, s) in face_of:
                continue
            cycle = []
            d = (c, s)
            while d not in face_of:
                face_of[d] = len(faces)
                cycle.append(d)
                c2, s2 = other(d)
                d = (c2, (s2 + 1) % 4)
            faces.append(tuple(cycle))

    edges = tuple(sorted(where))
    chi = len(crossings) - len(edges) + len(faces)
    if crossings and chi != 2:
        raise NonPlanarError(f"face tracing gives Euler characteristic {chi}, not 2")

    unbounded = max(range(len(faces)), key=lambda f: (len(faces[f]), -f)) if faces else 0
    # a dart and its reverse lie on opposite sides of the same edge
    adjacent: dict[int, set[int]] = {f: set() for f in range(len(faces))}
    for label, (d1, d2) in where.items():
        f1, f2 = face_of[d1], face_of[d2]
        if f1 == f2:
            raise NonPlanarError(f"edge {label} has the same face on both sides")
        adjacent[f1].add(f2)
        adjacent[f2].add(f1)
    color: dict[int, bool] = {}
    if faces:
        color[unbounded] = True
        stack = [unbounded]
        while stack:
            f = stack.pop()
            for g in adjacent[f]:
                if g not in color:
                    color[g] = not color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise NonPlanarError("faces admit no checkerboard coloring")
    return Diagram(
        crossings=crossings,
        edges=edges,
        faces=tuple(faces),
        white=tuple(color[f] for f in range(len(faces))),
        unbounded=unbounded,
    )
