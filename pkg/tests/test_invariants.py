"""Cover invariants: components, genus, parameters, Euler characteristics."""

from __future__ import annotations

import networkx as nx
import pytest

from triplanekit.coloring import coloring_from_bottom
from triplanekit.errors import ColoringPatternError, UnlinkCertificationError
from triplanekit.generators import (
    embedded_family_diagram,
    generate_unlink_plat,
    lemma_family_diagram,
    singular_family_diagram,
    unlink_diagram,
    zigzag_tangle,
)
from triplanekit.invariants import (
    CoverReport,
    branch_surface_components,
    branch_surface_euler,
    component_cycles,
    core_genus,
    cover_report,
    euler_X,
    manifold_label,
    matching_union_components,
    sector_link,
    sector_patches,
    singularity_report,
    trisection_params,
)
from triplanekit.model import (
    Matching,
    PatchKind,
    Tangle,
    TriPlaneDiagram,
    TriState,
    TrisectionParams,
    induced_matching,
    standard_matching,
)
from triplanekit.rewrite import SearchBudget

from conftest import random_diagram, random_matching, random_tangle


def _nx_components(m1: Matching, m2: Matching) -> int:
    g = nx.MultiGraph()
    g.add_nodes_from(range(1, m1.points + 1))
    g.add_edges_from(m1.pairs)
    g.add_edges_from(m2.pairs)
    return nx.number_connected_components(g)


def test_matching_union_components_examples():
    m = standard_matching(2)
    assert matching_union_components(m, m) == 2
    zig = Matching(4, ((2, 3), (4, 1)))
    assert matching_union_components(m, zig) == 1
    with pytest.raises(ValueError):
        matching_union_components(m, standard_matching(3))


def test_matching_union_against_networkx_oracle(rng):
    for _ in range(150):
        b = rng.randrange(1, 7)
        m1, m2 = random_matching(rng, b), random_matching(rng, b)
        got = matching_union_components(m1, m2)
        assert got == _nx_components(m1, m2)
        assert got == matching_union_components(m2, m1)
        assert 1 <= got <= b


def test_component_cycles_partition():
    m1 = standard_matching(3)
    m2 = Matching(6, ((2, 3), (4, 5), (6, 1)))
    cycles = component_cycles(m1, m2)
    assert len(cycles) == 1
    assert sorted(cycles[0]) == [1, 2, 3, 4, 5, 6]


def test_sector_link_basics(rng):
    d = TriPlaneDiagram(2, (Tangle.identity(2),) * 3, (PatchKind.DISKS,) * 3)
    assert sector_link(d, 1).components == 2
    for _ in range(20):
        b = rng.randrange(1, 5)
        t = random_tangle(rng, b, 6)
        d = TriPlaneDiagram(b, (t, t, t), (PatchKind.DISKS,) * 3)
        l = sector_link(d, rng.randrange(1, 4))
        assert l.components == b  # doubled tangle
    with pytest.raises(ValueError):
        sector_link(d, 4)


def test_sector_link_unlink_family():
    for k in range(4):
        for g in range(k, k + 3):
            t1, t2, _ = generate_unlink_plat(k + 2, g + 2)
            d = TriPlaneDiagram(g + 2, (t1, t2, t1), (PatchKind.DISKS,) * 3)
            assert sector_link(d, 1).components == k + 2


def test_core_genus_riemann_hurwitz():
    with pytest.raises(ValueError):
        core_genus(1)
    for b in range(2, 21):
        chi = 3 * 2 - 2 * b  # three sheets, one deficiency at each of 2b points
        assert core_genus(b) == (2 - chi) // 2 == b - 2


def test_euler_x_values():
    assert euler_X(TrisectionParams(0, 0, 0, 0)) == 2
    assert euler_X(TrisectionParams(1, 0, 0, 0)) == 3
    assert euler_X(TrisectionParams(2, 0, 0, 0)) == 4
    assert euler_X(TrisectionParams(22, 0, 0, 0)) == 24
    for n in range(5):
        assert euler_X(TrisectionParams(2 * n + 1, 0, 0, 0)) == 2 * n + 3


def _chi_by_cells(d) -> int:
    # independent cell count: 2b vertices, 3b arcs, disk/cone patches
    links = tuple(sector_link(d, i) for i in (1, 2, 3))
    faces = 0
    for i in (1, 2, 3):
        if d.sector(i) is PatchKind.CONE:
            faces += 1
        else:
            faces += _nx_components(
                induced_matching(links[i - 1].tangle_bottom),
                induced_matching(links[i - 1].tangle_top),
            )
    return 2 * d.bridges - 3 * d.bridges + faces


def test_branch_surface_euler_examples_and_oracle(rng):
    d = TriPlaneDiagram(2, (Tangle.identity(2),) * 3, (PatchKind.DISKS,) * 3)
    assert branch_surface_euler(d) == 4  # two disjoint 2-spheres
    for _ in range(40):
        dd = random_diagram(rng, max_b=5, max_word=8)
        assert branch_surface_euler(dd) == _chi_by_cells(dd)


def test_branch_surface_euler_cyclic_permutation_invariance(rng):
    for _ in range(20):
        d = random_diagram(rng, max_b=5, max_word=8)
        rolled = TriPlaneDiagram(
            d.bridges,
            (d.tangles[1], d.tangles[2], d.tangles[0]),
            (d.sectors[1], d.sectors[2], d.sectors[0]),
        )
        assert branch_surface_euler(rolled) == branch_surface_euler(d)


def test_branch_surface_components():
    d = TriPlaneDiagram(2, (Tangle.identity(2),) * 3, (PatchKind.DISKS,) * 3)
    assert branch_surface_components(d) == 2
    coned = TriPlaneDiagram(
        2, d.tangles, (PatchKind.DISKS, PatchKind.CONE, PatchKind.DISKS)
    )
    assert branch_surface_components(coned) == 1
    for k, g in ((0, 0), (1, 2), (2, 3)):
        dd, _ = singular_family_diagram(k, k, g)
        assert branch_surface_components(dd) == 1


def test_singularity_report():
    d = TriPlaneDiagram(2, (Tangle.identity(2),) * 3, (PatchKind.DISKS,) * 3)
    assert sector_link(d, 1).components == 2
    assert not singularity_report(d)
    dd = embedded_family_diagram(1, 2)
    report = singularity_report(dd)
    assert [s.sector for s in report] == [2, 3]
    assert all(s.components == 1 and s.kind == "cone on a knot" for s in report)
    coned, _ = singular_family_diagram(1, 1, 3)
    (sing,) = singularity_report(coned)
    assert sing.sector == 2 and sing.kind == "cone on a link"


def test_trisection_params_families():
    d, c = unlink_diagram(2, 2)
    assert trisection_params(d, c) == TrisectionParams(0, 0, 0, 0)
    for k, g in ((0, 0), (0, 2), (1, 1), (1, 3), (2, 4)):
        d, c = lemma_family_diagram(k, g)
        assert trisection_params(d, c) == TrisectionParams(g, k, k, g)
    for k1, k3, g in ((0, 0, 0), (1, 0, 2), (2, 1, 3)):
        d, c = singular_family_diagram(k1, k3, g)
        p = trisection_params(d, c)
        assert p == TrisectionParams(g, k1, 0, k3)
        assert branch_surface_euler(d) == k1 + k3 - g + 3 == 5 - euler_X(p)


def test_trisection_params_failures():
    d, c = lemma_family_diagram(0, 1)
    flat = coloring_from_bottom(d.tangle(1), (2,) * d.bridges)
    with pytest.raises(ColoringPatternError):
        trisection_params(d, flat)  # not transitive
    # exhausted budget leaves the unlink status unknown
    with pytest.raises(UnlinkCertificationError):
        trisection_params(d, c, SearchBudget(max_depth=0, max_states=1))
    # trefoil sector refutes certification outright
    tre = TriPlaneDiagram(
        2,
        (Tangle.identity(2), Tangle.from_word(2, [2, 2, 2]), Tangle.identity(2)),
        (PatchKind.DISKS,) * 3,
    )
    c2 = coloring_from_bottom(tre.tangle(1), (1, 2))
    with pytest.raises(UnlinkCertificationError):
        trisection_params(tre, c2)


def test_trisection_params_pattern_mismatch():
    d, _ = unlink_diagram(2, 2)
    both_one = coloring_from_bottom(d.tangle(1), (1, 3))
    with pytest.raises(ColoringPatternError):
        trisection_params(d, both_one)  # pattern (1, 3) is not one-1-rest-2
    d3, _ = unlink_diagram(3, 3)
    with pytest.raises(ColoringPatternError):
        trisection_params(d3, coloring_from_bottom(d3.tangle(1), (1, 1, 2)))


def test_cone_sector_restriction_transitivity():
    # Every sector link runs through all caps of its two tangles, and a
    # monochromatic cap vector forces a monochromatic global coloring, so a
    # transitive diagram coloring restricts transitively to every cone
    # sector; the rejection branch is purely defensive.
    b = 3
    t1 = Tangle.identity(b)
    t2 = zigzag_tangle(2, b)
    d = TriPlaneDiagram(b, (t1, t2, t1), (PatchKind.CONE, PatchKind.DISKS, PatchKind.DISKS))
    c = coloring_from_bottom(t1, (1, 2, 2))
    p = trisection_params(d, c)
    assert p.k1 == 0


def test_cover_report_structure():
    d, c = singular_family_diagram(1, 1, 2)
    rep = cover_report(d, c)
    assert isinstance(rep, CoverReport)
    assert rep.genus == 2
    assert rep.params == TrisectionParams(2, 1, 0, 1)
    assert rep.euler_x == 2 + 2 - 2
    assert rep.branch_euler + rep.euler_x == 5
    assert [s.label for s in rep.sectors] == [
        manifold_label(1),
        manifold_label(0),
        manifold_label(1),
    ]
    assert rep.singularities[0].sector == 2
    assert not rep.diagnostics


def test_cover_report_without_coloring(rng):
    d = random_diagram(rng, max_b=4, max_word=6)
    rep = cover_report(d, None)
    assert rep.params is None and rep.euler_x is None
    assert rep.coloring_transitive is None
    assert rep.diagnostics
    assert rep.branch_euler == _chi_by_cells(d)


def test_sector_patches_and_consistency(rng):
    for _ in range(15):
        d = random_diagram(rng, max_b=5, max_word=6)
        patches = sector_patches(d)
        assert branch_surface_euler(d) == sum(patches) - d.bridges


def test_params_euler_consistency_on_families():
    for k, g in ((0, 0), (1, 2), (2, 3)):
        d, c = lemma_family_diagram(k, g)
        p = trisection_params(d, c)
        assert euler_X(p) == 2 + core_genus(d.bridges) - sum(p.ks)
