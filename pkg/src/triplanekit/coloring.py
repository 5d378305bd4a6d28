"""Fox 3-colorings: propagation through braids, validation and enumeration.

A coloring of a plat tangle is freely determined by the colors of its bottom
caps (a trivial tangle imposes no internal constraint); propagating through
the braid yields the colors on the 2b boundary points.  A coloring of a link
or of a tri-plane diagram is a cap assignment whose endpoint colors also pull
back to cap-constant vectors through the other tangle(s).

At a crossing the dihedral Wirtinger rule applies: with (a, b) the colors at
positions (|e|, |e|+1) below the crossing,

    sign +1:  (a, b) -> (a.b.a, a)     in transposition arithmetic,
    sign -1:  (a, b) -> (b, b.a.b)

equivalently new-under = 2*(over) - (old-under) mod 3.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional, Sequence

from . import _kernel
from .model import BraidWord, COLORS, Coloring, Tangle, TriPlaneDiagram


def propagate_crossing(pair: tuple[int, int], sign: int) -> tuple[int, int]:
    """Apply one crossing of the given sign to a color pair."""
    a, b = pair
    if sign > 0:
        return ((2 * a - b - 1) % 3 + 1, a)
    return (b, (2 * b - a - 1) % 3 + 1)


def propagate_braid(w: BraidWord, bottom: Sequence[int]) -> tuple[int, ...]:
    """Left-fold of :func:`propagate_crossing` over the word."""
    if len(bottom) != w.strands:
        raise ValueError(
            f"color vector of length {len(bottom)} on {w.strands} strands"
        )
    for c in bottom:
        if c not in COLORS:
            raise ValueError(f"color must be 1, 2 or 3, got {c!r}")
    out = _kernel.propagate(w.word, [c - 1 for c in bottom])
    return tuple(c + 1 for c in out)


def cap_vector(caps: Sequence[int]) -> tuple[int, ...]:
    """Duplicate each cap color onto its two strand positions."""
    out = []
    for c in caps:
        out.append(c)
        out.append(c)
    return tuple(out)


def cap_colors(w: BraidWord, endpoint_colors: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Pull endpoint colors back through a tangle's braid and read the cap
    colors; None when some cap would be bicolored (no valid extension)."""
    vec = propagate_braid(w.reverse_inverse(), endpoint_colors)
    caps = []
    for k in range(w.strands // 2):
        if vec[2 * k] != vec[2 * k + 1]:
            return None
        caps.append(vec[2 * k])
    return tuple(caps)


def coloring_from_bottom(t: Tangle, bottom: Sequence[int]) -> Coloring:
    """Build a Coloring anchored at the given tangle's bottom caps."""
    bottom = tuple(bottom)
    if len(bottom) != t.bridges:
        raise ValueError(f"{len(bottom)} cap colors for {t.bridges} bridges")
    return Coloring(bottom, propagate_braid(t.braid, cap_vector(bottom)))


def tangle_colorings(t: Tangle) -> list[Coloring]:
    """All 3^b colorings of a plat tangle, in lexicographic bottom order."""
    return [coloring_from_bottom(t, bottom) for bottom in product(COLORS, repeat=t.bridges)]


def _pullback_word(t1: Tangle, t2: Tangle) -> tuple[int, ...]:
    return t1.braid.concat(t2.braid.reverse_inverse()).word


def link_colorings(t1: Tangle, t2: Tangle) -> list[Coloring]:
    """Colorings of the link formed by gluing t1 and t2 along their boundary,
    anchored at t1's caps.  The count includes non-transitive colorings."""
    if t1.bridges != t2.bridges:
        raise ValueError(
            f"bridge mismatch: {t1.bridges} vs {t2.bridges}"
        )
    word = _pullback_word(t1, t2)
    bottoms = _kernel.enum_plat_colorings(word, t1.bridges)
    return [
        coloring_from_bottom(t1, tuple(c + 1 for c in trits)) for trits in bottoms
    ]


def count_link_colorings(t1: Tangle, t2: Tangle) -> int:
    """Coloring count of the two-tangle link, without materializing the set."""
    if t1.bridges != t2.bridges:
        raise ValueError(f"bridge mismatch: {t1.bridges} vs {t2.bridges}")
    return _kernel.count_plat_colorings(_pullback_word(t1, t2), t1.bridges)


def triplane_colorings(d: TriPlaneDiagram) -> list[Coloring]:
    """Colorings of the shared boundary that extend over all three tangles."""
    t1, t2, t3 = d.tangles
    bottoms = _kernel.enum_triplane_colorings(
        d.bridges, _pullback_word(t1, t2), _pullback_word(t1, t3)
    )
    return [
        coloring_from_bottom(t1, tuple(c + 1 for c in trits)) for trits in bottoms
    ]


def count_triplane_colorings(d: TriPlaneDiagram) -> int:
    t1, t2, t3 = d.tangles
    return _kernel.count_triplane_colorings(
        d.bridges, _pullback_word(t1, t2), _pullback_word(t1, t3)
    )


def coloring_valid_on(d: TriPlaneDiagram, c: Coloring) -> tuple[bool, bool, bool]:
    """Whether the coloring extends over each of the three tangles.

    The first entry is True by construction whenever the coloring was built
    from tangle 1's caps; partial validity is reported as a diagnostic rather
    than an error.
    """
    return tuple(
        cap_colors(t.braid, c.endpoint_colors) is not None for t in d.tangles
    )


def is_transitive(c: Coloring) -> bool:
    """A coloring is transitive exactly when it uses at least two distinct
    colors (two distinct transpositions already generate the dihedral group)."""
    return len(set(c.bottom)) >= 2


def propagation_map(w: BraidWord, strands_colors: Iterable[Sequence[int]] | None = None):
    """The full map {vectors} -> {vectors} induced by a word, as a dict.

    Exhaustive over all 3^strands inputs by default; used by property tests
    for the braid-relation and 3-move invariance checks.
    """
    inputs = strands_colors
    if inputs is None:
        inputs = product(COLORS, repeat=w.strands)
    return {tuple(v): propagate_braid(w, tuple(v)) for v in inputs}
