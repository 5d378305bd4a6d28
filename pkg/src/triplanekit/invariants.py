"""Invariants of the 3-fold dihedral cover encoded by a colored tri-plane diagram.

The sector link L_i of a diagram is the plat closure of
``braid_i . reverse_inverse(braid_{i+1})`` (indices mod 3); its components are
the cycles of the union of the two induced boundary matchings.  From these the
module computes:

* the core-surface genus, via the branched Euler-characteristic count
  chi = 3*2 - 2b for a 3-fold cover of the 2-sphere with 2b simple branch
  points, i.e. genus b - 2;
* trisection parameters (g; k1, k2, k3): g = b - 2, k_i = components(L_i) - 2
  for certified-unlink trivial-disk sectors, k_i = 0 for cone sectors;
* Euler characteristics: chi(X) = 2 + g - k1 - k2 - k3 for the cover, and
  chi(S) = sum(patches) - b for the branch surface (2b vertices, 3b arcs,
  one disk per unlink component or one cone patch per cone sector);
* connectivity and the singularity list of the branch surface.

Certification of unlink sectors is delegated to :mod:`triplanekit.rewrite`;
parameters are only reported when every trivial-disk sector is certified and
carries the coloring pattern "one component colored 1, the rest colored 2".
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .coloring import cap_colors, count_link_colorings, is_transitive
from .errors import ColoringPatternError, UnlinkCertificationError
from .model import (
    BraidWord,
    Coloring,
    Matching,
    PatchKind,
    Tangle,
    TriPlaneDiagram,
    TriState,
    TrisectionParams,
    induced_matching,
)


def matching_union_components(m1: Matching, m2: Matching) -> int:
    """Number of cycles in the multigraph on {1..2b} with both edge sets."""
    return len(component_cycles(m1, m2))


def component_cycles(m1: Matching, m2: Matching) -> tuple[tuple[int, ...], ...]:
    """The cycles of the union of two perfect matchings, each reported as the
    tuple of points visited starting from its least point along its m1-edge;
    cycles are ordered by least point."""
    if m1.points != m2.points:
        raise ValueError(f"point count mismatch: {m1.points} vs {m2.points}")
    seen = set()
    cycles = []
    for start in range(1, m1.points + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = m1.partner(start)
        use_m2 = True
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = (m2 if use_m2 else m1).partner(x)
            use_m2 = not use_m2
        cycles.append(tuple(cycle))
    return tuple(cycles)


@dataclass(frozen=True)
class SectorLink:
    """The link governing one sector: composite plat braid, component count,
    coloring count, and (once computed) the unlink certification state."""

    index: int
    bridges: int
    tangle_bottom: Tangle
    tangle_top: Tangle
    braid: BraidWord
    components: int
    colorings: int
    certified_unlink: TriState = TriState.UNKNOWN

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return component_cycles(
            induced_matching(self.tangle_bottom), induced_matching(self.tangle_top)
        )


def sector_link(d: TriPlaneDiagram, i: int) -> SectorLink:
    """Build sector i's link from tangles i and i+1 (1-based, mod 3)."""
    if i not in (1, 2, 3):
        raise ValueError(f"sector index must be 1, 2 or 3, got {i}")
    bot = d.tangle(i)
    top = d.tangle(i % 3 + 1)
    comps = matching_union_components(induced_matching(bot), induced_matching(top))
    return SectorLink(
        index=i,
        bridges=d.bridges,
        tangle_bottom=bot,
        tangle_top=top,
        braid=bot.braid.concat(top.braid.reverse_inverse()),
        components=comps,
        colorings=count_link_colorings(bot, top),
    )


def core_genus(b: int) -> int:
    """Genus of the lift of the bridge sphere: 3-fold dihedral covers branched
    at 2b points have chi = 6 - 2b, hence genus b - 2.  Needs b >= 2."""
    if b < 2:
        raise ValueError(
            f"no connected 3-fold dihedral cover for bridge count {b} < 2"
        )
    return b - 2


def euler_X(p: TrisectionParams) -> int:
    """Euler characteristic of a 4-manifold with these trisection parameters."""
    return 2 + p.g - p.k1 - p.k2 - p.k3


def sector_patches(d: TriPlaneDiagram, links: tuple[SectorLink, ...] | None = None) -> tuple[int, int, int]:
    """Patches contributed per sector: one disk per link component for a
    trivial disk system, a single cone patch otherwise."""
    if links is None:
        links = tuple(sector_link(d, i) for i in (1, 2, 3))
    return tuple(
        1 if d.sector(i) is PatchKind.CONE else links[i - 1].components
        for i in (1, 2, 3)
    )


def branch_surface_euler(d: TriPlaneDiagram) -> int:
    """chi of the branch surface: 2b vertices, 3b arcs, plus the patches."""
    return sum(sector_patches(d)) - d.bridges


def branch_surface_components(d: TriPlaneDiagram) -> int:
    """Connected components of the branch surface.

    Arcs glue along shared boundary points; a disk caps a single already
    connected sector-link component, so only cone patches (which join every
    component of their sector link, hence every boundary point) can merge
    pieces further.
    """
    if any(kind is PatchKind.CONE for kind in d.sectors):
        return 1
    parent = list(range(2 * d.bridges + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in d.tangles:
        for a, b in induced_matching(t).pairs:
            parent[find(a)] = find(b)
    return len({find(x) for x in range(1, 2 * d.bridges + 1)})


@dataclass(frozen=True)
class Singularity:
    sector: int
    components: int
    kind: str  # "cone on a knot" | "cone on a link"


def singularity_report(d: TriPlaneDiagram) -> tuple[Singularity, ...]:
    """One entry per cone sector; the surface is embedded iff every cone is a
    cone on a knot (single component)."""
    out = []
    for i in (1, 2, 3):
        if d.sector(i) is PatchKind.CONE:
            comps = sector_link(d, i).components
            kind = "cone on a knot" if comps == 1 else "cone on a link"
            out.append(Singularity(i, comps, kind))
    return tuple(out)


def sector_cap_colors(d: TriPlaneDiagram, c: Coloring, i: int) -> Optional[tuple[int, ...]]:
    """Cap colors of tangle i under a diagram coloring, or None if the
    coloring does not extend over that tangle."""
    return cap_colors(d.tangle(i).braid, c.endpoint_colors)


def component_color_pattern(l: SectorLink, c: Coloring) -> Optional[tuple[int, ...]]:
    """Per-component colors of a sector link read off the endpoint colors,
    ordered by each cycle's least boundary point; None when some component is
    not endpoint-monochromatic."""
    pattern = []
    for cycle in l.cycles():
        colors = {c.endpoint_colors[x - 1] for x in cycle}
        if len(colors) != 1:
            return None
        pattern.append(colors.pop())
    return tuple(pattern)


def sector_restriction_transitive(d: TriPlaneDiagram, c: Coloring, i: int) -> bool:
    """Whether the coloring restricted to sector i's link is transitive; the
    link's bridge arcs are exactly the caps of its two tangles."""
    bot = sector_cap_colors(d, c, i)
    top = sector_cap_colors(d, c, i % 3 + 1)
    if bot is None or top is None:
        return False
    return len(set(bot) | set(top)) >= 2


def _require_unlink_pattern(l: SectorLink, c: Coloring) -> None:
    pattern = component_color_pattern(l, c)
    if pattern is None:
        raise ColoringPatternError(
            f"sector {l.index}: some unlink component is not monochromatic "
            "under this coloring",
            sector=l.index,
        )
    if len(pattern) < 2 or sorted(pattern) != [1] + [2] * (len(pattern) - 1):
        raise ColoringPatternError(
            f"sector {l.index}: unlink coloring pattern {pattern} is not "
            "one component colored 1 with the rest colored 2; handle counts "
            "are not defined for this pattern",
            sector=l.index,
        )


def trisection_params(
    d: TriPlaneDiagram,
    c: Coloring,
    budget=None,
    links: tuple[SectorLink, ...] | None = None,
) -> TrisectionParams:
    """Trisection parameters of the cover determined by a colored diagram.

    Requires a transitive coloring valid on all three tangles; every trivial
    disk sector must certify as an unlink carrying the pattern "one component
    colored 1, the rest colored 2", and every cone sector must restrict to a
    transitive coloring (its cover is taken to be a cone on the 3-sphere and
    contributes no handles).
    """
    from .rewrite import certify_unlink  # local import; rewrite builds on this module

    g = core_genus(d.bridges)
    for i in (2, 3):
        if sector_cap_colors(d, c, i) is None:
            raise ColoringPatternError(
                f"coloring does not extend over tangle {i}", sector=i
            )
    if not is_transitive(c):
        raise ColoringPatternError("coloring is not transitive (cover disconnected)")

    if links is None:
        links = tuple(sector_link(d, i) for i in (1, 2, 3))
    ks = []
    for i in (1, 2, 3):
        l = links[i - 1]
        if d.sector(i) is PatchKind.CONE:
            if not sector_restriction_transitive(d, c, i):
                raise ColoringPatternError(
                    f"sector {i}: cone sector restriction is not transitive; "
                    "its cover cannot be a ball",
                    sector=i,
                )
            ks.append(0)
            continue
        if l.certified_unlink is TriState.UNKNOWN:
            l = replace(l, certified_unlink=certify_unlink(l, budget).state)
        if l.certified_unlink is not TriState.YES:
            raise UnlinkCertificationError(
                f"sector {i}: link not certified as an unlink "
                f"(state {l.certified_unlink.value}); parameters unknown",
                sector=i,
                state=l.certified_unlink,
            )
        _require_unlink_pattern(l, c)
        ks.append(l.components - 2)
    return TrisectionParams(g, *ks)


def manifold_label(k: int) -> str:
    """Symbolic name of the sector boundary 3-manifold for handle count k."""
    return f"#^{k}(S^1 x S^2)"


@dataclass(frozen=True)
class SectorSummary:
    index: int
    kind: PatchKind
    components: int
    colorings: int
    certified_unlink: TriState
    label: Optional[str]


@dataclass(frozen=True)
class CoverReport:
    """Everything the invariant layer can say about one colored diagram."""

    bridges: int
    genus: Optional[int]
    params: Optional[TrisectionParams]
    euler_x: Optional[int]
    branch_euler: int
    branch_components: int
    sectors: tuple[SectorSummary, ...]
    singularities: tuple[Singularity, ...]
    coloring_transitive: Optional[bool]
    diagnostics: tuple[str, ...]


def cover_report(
    d: TriPlaneDiagram, c: Optional[Coloring], budget=None
) -> CoverReport:
    """Assemble the full invariant report; parameter failures become
    diagnostics instead of exceptions."""
    from .rewrite import certify_unlink

    links = []
    for i in (1, 2, 3):
        l = sector_link(d, i)
        links.append(replace(l, certified_unlink=certify_unlink(l, budget).state))
    links = tuple(links)

    diagnostics = []
    params = None
    transitive = None
    if c is None:
        diagnostics.append("no coloring given; trisection parameters not computed")
    else:
        transitive = is_transitive(c)
        valid = [sector_cap_colors(d, c, i) is not None for i in (1, 2, 3)]
        for i, ok in enumerate(valid, start=1):
            if not ok:
                diagnostics.append(f"coloring does not extend over tangle {i}")
        if all(valid):
            try:
                params = trisection_params(d, c, budget, links=links)
            except (ColoringPatternError, UnlinkCertificationError, ValueError) as exc:
                diagnostics.append(str(exc))

    summaries = []
    for i in (1, 2, 3):
        l = links[i - 1]
        if params is not None:
            label = manifold_label(params.ks[i - 1])
        elif (
            d.sector(i) is PatchKind.DISKS
            and l.certified_unlink is TriState.YES
            and l.components >= 2
        ):
            label = manifold_label(l.components - 2)
        else:
            label = None
        summaries.append(
            SectorSummary(
                index=i,
                kind=d.sector(i),
                components=l.components,
                colorings=l.colorings,
                certified_unlink=l.certified_unlink,
                label=label,
            )
        )

    return CoverReport(
        bridges=d.bridges,
        genus=core_genus(d.bridges) if d.bridges >= 2 else None,
        params=params,
        euler_x=euler_X(params) if params is not None else None,
        branch_euler=branch_surface_euler(d),
        branch_components=branch_surface_components(d),
        sectors=tuple(summaries),
        singularities=singularity_report(d),
        coloring_transitive=transitive,
        diagnostics=tuple(diagnostics),
    )
