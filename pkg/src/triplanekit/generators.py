"""Generators for the parametric diagram families used throughout the tests
and the CLI: unlinks in excess bridge position, boundary pairings with
connected unions, and the tri-plane families built from them.

The workhorse is the zigzag: the cyclic-shift braid word on an even block of
strands turns a run of standard caps into a single snaking component, which
is how a crossingless unlink acquires extra (trivially perturbed) bridges
while keeping standard caps in the plat encoding.
"""

from __future__ import annotations

from typing import Optional

from .coloring import coloring_from_bottom
from .model import (
    Coloring,
    Matching,
    PatchKind,
    Tangle,
    TriPlaneDiagram,
    induced_matching,
    standard_matching,
)


def _zigzag_word(lo_cap: int, caps: int) -> tuple[int, ...]:
    """Cyclic-shift word merging ``caps`` consecutive caps starting at
    ``lo_cap`` into one component: descending generators from the block's top
    index down to its lowest strand."""
    if caps < 2:
        return ()
    lo = 2 * lo_cap - 1  # first strand of the block
    hi = lo + 2 * caps - 1  # last strand of the block
    return tuple(range(hi - 1, lo - 1, -1))


def zigzag_tangle(n: int, b: int) -> Tangle:
    """The b-bridge plat tangle whose union with the identity tangle is the
    standard n-component unlink: component 1 keeps cap 1, component 2 snakes
    through the b - n extra bridges, the rest use one cap each.  With n = 1
    the single component snakes through everything."""
    if n < 1:
        raise ValueError(f"need at least one component, got {n}")
    if b < n:
        raise ValueError(f"{n} components do not fit in {b} bridges")
    if n == 1:
        word = _zigzag_word(1, b)
    else:
        word = _zigzag_word(2, b - n + 1)
    return Tangle.from_word(b, word)


def generate_unlink_plat(
    n: int, b: int, colored: bool = True
) -> tuple[Tangle, Tangle, Optional[Coloring]]:
    """The standard crossingless n-component unlink in b-bridge plat position,
    with the coloring "one component colored 1, the rest colored 2" when
    requested (with a single component the coloring is constant)."""
    t1 = Tangle.identity(b)
    t2 = zigzag_tangle(n, b)
    coloring = None
    if colored:
        bottom = (1,) * b if n == 1 else (1,) + (2,) * (b - 1)
        coloring = coloring_from_bottom(t1, bottom)
    return t1, t2, coloring


def generate_pairing(b: int, variant: str = "odd") -> Matching:
    """A pairing of the 2b boundary points whose union with the standard cap
    matching is a single cycle.  The two variants are the two box endings of
    the zigzag pattern (used according to the parity of the maxima count of
    the component being paired through)."""
    if b < 2:
        raise ValueError(f"pairings need at least 2 bridges, got {b}")
    if variant == "odd":
        pairs = [(2 * k, 2 * k + 1) for k in range(1, b)] + [(2 * b, 1)]
    elif variant == "even":
        pairs = [(2 * k, 2 * k + 1) for k in range(1, b - 1)]
        pairs += [(2 * b - 2, 2 * b), (2 * b - 1, 1)]
    else:
        raise ValueError(f"variant must be 'odd' or 'even', got {variant!r}")
    return Matching(2 * b, tuple(pairs))


def connected_pairing(*matchings: Matching) -> Matching:
    """The lexicographically least perfect matching whose union with every
    given matching is a single cycle; deterministic backtracking search."""
    if not matchings:
        raise ValueError("need at least one matching to thread")
    points = matchings[0].points
    if any(m.points != points for m in matchings):
        raise ValueError("matchings live on different point sets")

    def premature(pairs: list[tuple[int, int]], m: Matching) -> bool:
        # In the union of m with the partial pairing, components are
        # alternating paths whose ends lack a pairing edge.  The freshly
        # added pair (last in the list) closes a cycle exactly when it joins
        # the two ends of one path; that disconnects the final union unless
        # the cycle already covers every point.
        partner = {}
        for x, y in pairs[:-1]:
            partner[x] = y
            partner[y] = x
        a, b = pairs[-1]
        x = m.partner(a)
        visited = 2
        while True:
            if x == b:
                return visited < points
            if x not in partner:
                return False
            x = m.partner(partner[x])
            visited += 2

    def search(pairs: list[tuple[int, int]], free: list[int]):
        if not free:
            return list(pairs)
        a = free[0]
        for b in free[1:]:
            pairs.append((a, b))
            if not any(premature(pairs, m) for m in matchings):
                rest = [x for x in free if x != a and x != b]
                found = search(pairs, rest)
                if found is not None:
                    return found
            pairs.pop()
        return None

    found = search([], list(range(1, points + 1)))
    if found is None:
        raise ValueError("no pairing with connected unions exists")
    return Matching(points, tuple(found))


def tangle_from_matching(m: Matching) -> Tangle:
    """A plat tangle (all-positive braid) inducing the given boundary pairing.

    The braid realizes any permutation carrying the standard caps onto the
    pairing; it is built by recording the adjacent swaps of a bubble sort.
    """
    b = m.bridges
    target = sorted(m.pairs)
    perm = [0] * (2 * b + 1)  # perm[bottom point] = top point
    for k, (x, y) in enumerate(target, start=1):
        perm[2 * k - 1] = x
        perm[2 * k] = y
    seq = [perm[p] for p in range(1, 2 * b + 1)]
    word = []
    while True:
        for p in range(2 * b - 1):
            if seq[p] > seq[p + 1]:
                seq[p], seq[p + 1] = seq[p + 1], seq[p]
                word.append(p + 1)
                break
        else:
            break
    t = Tangle.from_word(b, tuple(word))
    assert induced_matching(t) == m
    return t


def unlink_diagram(
    n: int, b: int, colored: bool = True
) -> tuple[TriPlaneDiagram, Optional[Coloring]]:
    """Tri-plane diagram of the doubled unlink: tangles (identity, zigzag,
    identity), every sector a trivial disk system."""
    t1, t2, coloring = generate_unlink_plat(n, b, colored)
    d = TriPlaneDiagram(b, (t1, t2, t1), (PatchKind.DISKS,) * 3)
    return d, coloring


def lemma_family_diagram(k: int, g: int) -> tuple[TriPlaneDiagram, Coloring]:
    """The colored (k+2)-component unlink in (g+2)-bridge position, doubled
    into a tri-plane diagram: sector 1 and 2 links are that unlink, sector 3
    is the full (g+2)-component unlink, all sectors trivial disks.  Its cover
    data: core genus g, sector labels #^k, #^k, #^g."""
    if k < 0 or g < k:
        raise ValueError(f"family needs 0 <= k <= g, got k={k}, g={g}")
    d, coloring = unlink_diagram(k + 2, g + 2, colored=True)
    return d, coloring


def singular_family_diagram(k1: int, k3: int, g: int) -> tuple[TriPlaneDiagram, Coloring]:
    """The one-cone family: unlink sectors with k1+2 and k3+2 components,
    the uncontrolled middle sector coned off.  Parameters (g; k1, 0, k3)."""
    if min(k1, k3) < 0 or g < max(k1, k3):
        raise ValueError(f"family needs 0 <= k1, k3 <= g, got {k1}, {k3}, {g}")
    b = g + 2
    t1 = Tangle.identity(b)
    t2 = zigzag_tangle(k1 + 2, b)
    t3 = zigzag_tangle(k3 + 2, b)
    d = TriPlaneDiagram(
        b, (t1, t2, t3), (PatchKind.DISKS, PatchKind.CONE, PatchKind.DISKS)
    )
    return d, coloring_from_bottom(t1, (1,) + (2,) * (b - 1))


def embedded_family_diagram(k: int, g: int) -> TriPlaneDiagram:
    """The two-cone family: sector 1 an unlink with k+2 components, sectors 2
    and 3 cones on knots (the third tangle realizes a boundary pairing whose
    union with either neighbor is connected).  Generated uncolored: a coloring
    extending over the pairing tangle requires the covering-extension
    machinery this package does not model."""
    if k < 0 or g < k:
        raise ValueError(f"family needs 0 <= k <= g, got k={k}, g={g}")
    b = g + 2
    t1 = Tangle.identity(b)
    t2 = zigzag_tangle(k + 2, b)
    pairing = connected_pairing(standard_matching(b), induced_matching(t2))
    t3 = tangle_from_matching(pairing)
    return TriPlaneDiagram(
        b, (t1, t2, t3), (PatchKind.DISKS, PatchKind.CONE, PatchKind.CONE)
    )
