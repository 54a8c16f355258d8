"""Transient-number bounds from branched-cover homology.

Lower bounds (tr <= u and tr <= t give the upper side):

* ``thm1.2/p=N``: H1 of the N-fold cover needs at most N*tr + 1 generators,
  so tr >= ceil((rank - 1) / N).  For N = 2 the tag reads ``thm1.1/p=2``.
* ``thm1.3/p=2``: tr = 1 forces a cyclic H1 of the double cover, so a
  non-cyclic group gives tr >= 2.
* ``nontrivial``: a nontrivial cover group means a nontrivial knot, tr >= 1.

The classical bounds on u and t use the double cover only: ``wendt``
(rank <= u), ``heegaard/p=2`` (rank <= 2t + 1) and ``thm2.6/p=2`` (t = 1 forces
a cyclic group).  Upper bounds carry ``upper:min(u,t)``, ``thm5.1`` for
connected sums, or ``upper:u-subadditive``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .exactalg import AbelianGroup, IntMatrix, det, group_from_presentation


class BoundsError(ValueError):
    pass


class LemmaHypothesisError(BoundsError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class HomologyProfile:
    """H1 of the p-fold branched covers of one knot, keyed by p."""

    by_cover: Mapping[int, AbelianGroup] = field(default_factory=dict)

    def __post_init__(self):
        covers = dict(sorted(self.by_cover.items()))
        for p in covers:
            if p < 2:
                raise BoundsError(f"cover index must be >= 2, got {p}")
        g2 = covers.get(2)
        if g2 is not None and (g2.free_rank or g2.order % 2 == 0):
            raise BoundsError(f"double cover group {g2} must be finite of odd order")
        object.__setattr__(self, "by_cover", covers)

    def __getitem__(self, p: int) -> AbelianGroup:
        return self.by_cover[p]

    def __contains__(self, p: int) -> bool:
        return p in self.by_cover

    def __len__(self) -> int:
        return len(self.by_cover)

    def with_cover(self, p: int, g: AbelianGroup) -> "HomologyProfile":
        return HomologyProfile({**self.by_cover, p: g})


def rank(g: AbelianGroup) -> int:
    return g.rank


def tr_lower_bound(h: HomologyProfile) -> tuple[int, tuple[str, ...]]:
    """Best lower bound on tr and the tags of every rule reaching it."""
    if not len(h):
        raise BoundsError("empty homology profile")
    candidates: list[tuple[int, str]] = [(0, "trivial")]
    if any(not g.is_trivial for g in h.by_cover.values()):
        candidates.append((1, "nontrivial"))
    for p, g in h.by_cover.items():
        if g.rank >= 1:
            tag = "thm1.1/p=2" if p == 2 else f"thm1.2/p={p}"
            candidates.append((_ceil_div(g.rank - 1, p), tag))
    if 2 in h and h[2].rank >= 2:
        candidates.append((2, "thm1.3/p=2"))
    best = max(v for v, _ in candidates)
    return best, tuple(tag for v, tag in candidates if v == best)


def u_lower_bound(g2: AbelianGroup) -> int:
    return g2.rank


def t_lower_bound(g2: AbelianGroup) -> int:
    return max(_t_candidates(g2))[0]


def _t_candidates(g2: AbelianGroup) -> list[tuple[int, str]]:
    out = [(0, "trivial")]
    if not g2.is_trivial:
        out.append((1, "nontrivial"))
        out.append((_ceil_div(g2.rank - 1, 2), "heegaard/p=2"))
    if g2.rank >= 2:
        out.append((2, "thm2.6/p=2"))
    return out


@dataclass(frozen=True)
class BoundReport:
    tr_lower: int
    tr_lower_provenance: tuple[str, ...]
    tr_upper: int | None
    tr_upper_provenance: tuple[str, ...]
    u_lower: int
    u_lower_provenance: tuple[str, ...]
    t_lower: int
    t_lower_provenance: tuple[str, ...]
    exact: int | None = None
    inconsistent: bool = False
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "tr_lower": self.tr_lower,
            "tr_lower_provenance": list(self.tr_lower_provenance),
            "tr_upper": "unknown" if self.tr_upper is None else self.tr_upper,
            "tr_upper_provenance": list(self.tr_upper_provenance),
            "u_lower": self.u_lower,
            "u_lower_provenance": list(self.u_lower_provenance),
            "t_lower": self.t_lower,
            "t_lower_provenance": list(self.t_lower_provenance),
            "exact": self.exact,
            "inconsistent": self.inconsistent,
            "notes": list(self.notes),
        }

    def text(self) -> str:
        upper = "unknown" if self.tr_upper is None else str(self.tr_upper)
        lines = [
            f"tr_lower {self.tr_lower} [{', '.join(self.tr_lower_provenance)}]",
            f"tr_upper {upper} [{', '.join(self.tr_upper_provenance)}]",
            f"u_lower {self.u_lower} [{', '.join(self.u_lower_provenance)}]",
            f"t_lower {self.t_lower} [{', '.join(self.t_lower_provenance)}]",
            f"exact {'-' if self.exact is None else self.exact}",
        ]
        if self.inconsistent:
            lines.append("inconsistent yes")
        lines.extend(f"note {n}" for n in self.notes)
        return "\n".join(lines)


def classify(
    h: HomologyProfile,
    u_known: int | None = None,
    t_known: int | None = None,
    extra_upper: Iterable[tuple[int, str]] = (),
) -> BoundReport:
    """Combine homology lower bounds with known u, t (and any extra upper bounds).

    Contradictory data sets ``inconsistent`` instead of raising.
    """
    lower, lower_tags = tr_lower_bound(h)
    uppers = [(x, "upper:min(u,t)") for x in (u_known, t_known) if x is not None]
    uppers.extend(extra_upper)
    upper = min((v for v, _ in uppers), default=None)
    upper_tags = tuple(dict.fromkeys(tag for v, tag in uppers if v == upper))

    notes = []
    if 2 in h:
        g2 = h[2]
        u_lo, u_tags = g2.rank, ("wendt",)
        t_cands = _t_candidates(g2)
        t_lo = max(v for v, _ in t_cands)
        t_tags = tuple(tag for v, tag in t_cands if v == t_lo)
    else:
        u_lo, u_tags = lower, ("tr<=u",)
        t_lo, t_tags = lower, ("tr<=t",)
        notes.append("no double cover data; u and t bounded through tr")

    inconsistent = False
    if upper is not None and lower > upper:
        inconsistent = True
        notes.append(f"lower bound {lower} exceeds upper bound {upper}")
    if u_known is not None and u_known < u_lo:
        inconsistent = True
        notes.append(f"u = {u_known} contradicts u >= {u_lo}")
    if t_known is not None and t_known < t_lo:
        inconsistent = True
        notes.append(f"t = {t_known} contradicts t >= {t_lo}")

    exact = lower if (upper is not None and upper == lower and not inconsistent) else None
    return BoundReport(
        tr_lower=lower,
        tr_lower_provenance=lower_tags,
        tr_upper=upper,
        tr_upper_provenance=upper_tags or ("unknown",),
        u_lower=u_lo,
        u_lower_provenance=u_tags,
        t_lower=t_lo,
        t_lower_provenance=t_tags,
        exact=exact,
        inconsistent=inconsistent,
        notes=tuple(notes),
    )


# -- connected sums -------------------------------------------------------

def connected_sum_homology(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """H1 of the cover of K1 # K2: the direct sum, in invariant-factor form."""
    return a.direct_sum(b)


def repeated_sum(g: AbelianGroup, n: int) -> AbelianGroup:
    if n < 1:
        raise BoundsError("need at least one summand")
    out = g
    for _ in range(n - 1):
        out = out.direct_sum(g)
    return out


def repeated_sum_lower_bound(g2: AbelianGroup, n: int) -> int:
    """ceil((rank - 1) / 2) for H1 of the double cover of the n-fold sum K # ... # K.

    For Z_3 this is ceil((n - 1) / 2).  The sharper value 2 at n = 2 (non-cyclic
    group) comes from tr_lower_bound on the summed profile.
    """
    if g2.is_trivial:
        raise BoundsError("the summand must have nontrivial double cover homology")
    if n < 1:
        raise BoundsError("need at least one summand")
    return max(0, _ceil_div(n * g2.rank - 1, 2))


def connected_sum_upper_bound(tr1: int, tr2: int) -> int:
    if tr1 < 0 or tr2 < 0:
        raise BoundsError("transient numbers are nonnegative")
    return tr1 + tr2 + 1


# -- the abelian group lemma ---------------------------------------------

def lemma_matrices(a1: int, a2: int, a3: int, a4: int, a5: int) -> tuple[IntMatrix, IntMatrix]:
    """(A, A~): presentations of the quotient group and of the cover group."""
    a = IntMatrix.from_rows([[a1 + a2, 2 * a3], [a4, a5]])
    a_tilde = IntMatrix.from_rows([
        [a1, a2, a3],
        [a1 + a2, a1 + a2, 2 * a3],
        [a4, a4, a5],
    ])
    return a, a_tilde


def lemma_grupos_group(a1: int, a2: int, a3: int, a4: int, a5: int) -> AbelianGroup:
    """Group presented by A~; cyclic of order |a1 - a2| whenever det A = +-1.

    det A = (a1 + a2) a5 - 2 a3 a4, so the hypothesis forces a1 + a2 odd and
    the case a1 = a2 (an infinite cyclic group) never arises.
    """
    a, a_tilde = lemma_matrices(a1, a2, a3, a4, a5)
    d = det(a)
    if abs(d) != 1:
        raise LemmaHypothesisError(f"det A = {d}; the lemma needs det A = +-1")
    return group_from_presentation(a_tilde)
