"""Exact data model for colored plat-form tangles and tri-plane diagrams.

Conventions used throughout the package:

* Colors are the plain integers 1, 2, 3.  Color ``i`` is identified with the
  transposition of the symmetric group on {1,2,3} that fixes ``i``:
  1 -> (2 3), 2 -> (1 3), 3 -> (1 2).
* A tangle with ``b`` bridges lives on ``2b`` strands.  Its diagram is a plat:
  standard caps joining positions (1,2), (3,4), ..., (2b-1,2b) at the bottom,
  a braid above them, and the ``2b`` boundary points at the top, numbered
  left to right.  ``word[0]`` is the crossing closest to the caps.
* A braid letter ``e`` acts at positions (|e|, |e|+1).  Positive sign means
  the strand at position |e| passes over the strand at position |e|+1.
* Everything here is an immutable value; no interior mutation anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

COLORS = (1, 2, 3)


def _check_color(c) -> int:
    if c not in (1, 2, 3):
        raise ValueError(f"color must be 1, 2 or 3, got {c!r}")
    return c


@dataclass(frozen=True)
class Perm3:
    """A bijection of {1,2,3}, stored as the image tuple (p(1), p(2), p(3))."""

    image: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.image) != [1, 2, 3]:
            raise ValueError(f"not a bijection of {{1,2,3}}: {self.image!r}")

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: Perm3) -> Perm3:
        return compose(self, other)

    def inverse(self) -> Perm3:
        img = [0, 0, 0]
        for x in (1, 2, 3):
            img[self(x) - 1] = x
        return Perm3(tuple(img))

    def is_transposition(self) -> bool:
        return sum(1 for x in (1, 2, 3) if self(x) == x) == 1


IDENTITY_PERM = Perm3((1, 2, 3))

# Color i is the transposition fixing letter i.
_TRANSPOSITIONS = {
    1: Perm3((1, 3, 2)),
    2: Perm3((3, 2, 1)),
    3: Perm3((2, 1, 3)),
}


def as_transposition(color: int) -> Perm3:
    """The reflection associated to a color: 1->(2 3), 2->(1 3), 3->(1 2)."""
    return _TRANSPOSITIONS[_check_color(color)]


def compose(p: Perm3, q: Perm3) -> Perm3:
    """Composition ``p after q``: (compose(p, q))(x) = p(q(x))."""
    return Perm3(tuple(p(q(x)) for x in (1, 2, 3)))


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands.

    Letters are nonzero integers ``e`` with 1 <= |e| <= strands - 1; the sign
    is the crossing sign and |e| the generator index.
    """

    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "word", tuple(self.word))
        for e in self.word:
            if e == 0 or abs(e) > self.strands - 1:
                raise ValueError(
                    f"letter {e} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.word)

    def concat(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.word + other.word)

    def reverse_inverse(self) -> BraidWord:
        """The inverse braid: letters reversed and signs flipped."""
        return BraidWord(self.strands, tuple(-e for e in reversed(self.word)))

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation: entry p-1 is the top position reached by
        the strand starting at bottom position p (positions are 1-based)."""
        occupant = list(range(1, self.strands + 1))
        for e in self.word:
            i = abs(e) - 1
            occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
        final = [0] * self.strands
        for pos0, start in enumerate(occupant):
            final[start - 1] = pos0 + 1
        return tuple(final)


@dataclass(frozen=True)
class Matching:
    """A perfect matching on the points {1, ..., points}; pairs are unordered
    and stored canonically (sorted within pairs, pairs sorted)."""

    points: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.points < 2 or self.points % 2:
            raise ValueError(f"point count must be even and positive, got {self.points}")
        norm = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", norm)
        seen = [x for pair in norm for x in pair]
        if sorted(seen) != list(range(1, self.points + 1)):
            raise ValueError(f"not a perfect matching on 1..{self.points}: {norm!r}")

    @property
    def bridges(self) -> int:
        return self.points // 2

    def partner(self, x: int) -> int:
        for a, b in self.pairs:
            if a == x:
                return b
            if b == x:
                return a
        raise ValueError(f"point {x} not in matching")


def standard_matching(bridges: int) -> Matching:
    """The matching induced by standard caps: (1,2), (3,4), ..."""
    return Matching(2 * bridges, tuple((2 * k - 1, 2 * k) for k in range(1, bridges + 1)))


@dataclass(frozen=True)
class Tangle:
    """A trivial tangle in plat form: standard caps plus a braid on 2b strands."""

    bridges: int
    braid: BraidWord

    def __post_init__(self):
        if self.bridges < 1:
            raise ValueError(f"bridge count must be positive, got {self.bridges}")
        if self.braid.strands != 2 * self.bridges:
            raise ValueError(
                f"braid on {self.braid.strands} strands does not match "
                f"{self.bridges} bridges"
            )

    @classmethod
    def identity(cls, bridges: int) -> Tangle:
        return cls(bridges, BraidWord(2 * bridges))

    @classmethod
    def from_word(cls, bridges: int, word) -> Tangle:
        return cls(bridges, BraidWord(2 * bridges, tuple(word)))


def induced_matching(t: Tangle) -> Matching:
    """Boundary pairing of a plat tangle: point i is matched to j when the
    arc entering the boundary at i exits at j (standard caps traced through
    the braid's permutation)."""
    perm = t.braid.permutation()
    pairs = tuple(
        (perm[2 * k - 2], perm[2 * k - 1]) for k in range(1, t.bridges + 1)
    )
    return Matching(2 * t.bridges, pairs)


class PatchKind(Enum):
    """What a sector of a tri-plane diagram contributes to the surface:
    a trivial disk system (one disk per sector-link component) or the cone
    on the sector link (a single patch, singular unless the link is trivial).
    """

    DISKS = "disks"
    CONE = "cone"


@dataclass(frozen=True)
class TriPlaneDiagram:
    """Three plat tangles on a shared set of 2b boundary points, plus a patch
    declaration per sector.  Sector i is governed by the link built from
    tangles i and i+1 (indices mod 3)."""

    bridges: int
    tangles: tuple[Tangle, Tangle, Tangle]
    sectors: tuple[PatchKind, PatchKind, PatchKind]

    def __post_init__(self):
        if len(self.tangles) != 3 or len(self.sectors) != 3:
            raise ValueError("a tri-plane diagram has exactly three tangles and sectors")
        for t in self.tangles:
            if t.bridges != self.bridges:
                raise ValueError(
                    f"tangle with {t.bridges} bridges in a {self.bridges}-bridge diagram"
                )

    def tangle(self, i: int) -> Tangle:
        return self.tangles[i - 1]

    def sector(self, i: int) -> PatchKind:
        return self.sectors[i - 1]


@dataclass(frozen=True)
class Coloring:
    """A Fox 3-coloring of a diagram, anchored at the bottom caps of tangle 1.

    ``bottom`` has one color per bridge; ``endpoint_colors`` is its
    propagation through tangle 1's braid to the 2b shared boundary points.
    Construct with :func:`triplanekit.coloring.coloring_from_bottom`.
    """

    bottom: tuple[int, ...]
    endpoint_colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(self.bottom))
        object.__setattr__(self, "endpoint_colors", tuple(self.endpoint_colors))
        for c in self.bottom + self.endpoint_colors:
            _check_color(c)
        if len(self.endpoint_colors) != 2 * len(self.bottom):
            raise ValueError("endpoint colors must number twice the bridges")


@dataclass(frozen=True)
class TrisectionParams:
    """The tuple (g; k1, k2, k3): core genus plus sector handle counts."""

    g: int
    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        for name in ("g", "k1", "k2", "k3"):
            v = getattr(self, name)
            if v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")

    @property
    def ks(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)


class TriState(Enum):
    """Outcome of unlink certification."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
