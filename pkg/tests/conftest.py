"""Shared test helpers: random-but-seeded diagrams, documents and matchings."""

from __future__ import annotations

import random

import pytest

from triplanekit.coloring import triplane_colorings
from triplanekit.generators import (
    lemma_family_diagram,
    singular_family_diagram,
    unlink_diagram,
    zigzag_tangle,
)
from triplanekit.model import (
    BraidWord,
    Matching,
    PatchKind,
    Tangle,
    TriPlaneDiagram,
)
from triplanekit.tpdio import TpdDocument, document_for


def random_word(rng: random.Random, strands: int, max_len: int) -> tuple[int, ...]:
    length = rng.randrange(0, max_len + 1)
    word = []
    for _ in range(length):
        e = rng.randrange(1, strands)
        word.append(e if rng.random() < 0.5 else -e)
    return tuple(word)


def random_tangle(rng: random.Random, bridges: int, max_len: int) -> Tangle:
    return Tangle(bridges, BraidWord(2 * bridges, random_word(rng, 2 * bridges, max_len)))


def random_diagram(
    rng: random.Random,
    max_b: int = 6,
    max_word: int = 12,
    cones: int | None = None,
) -> TriPlaneDiagram:
    b = rng.randrange(2, max_b + 1)
    tangles = tuple(random_tangle(rng, b, max_word) for _ in range(3))
    if cones is None:
        cones = rng.randrange(0, 3)
    kinds = [PatchKind.DISKS] * 3
    for i in rng.sample(range(3), cones):
        kinds[i] = PatchKind.CONE
    return TriPlaneDiagram(b, tangles, tuple(kinds))


def random_document(
    rng: random.Random, max_b: int = 6, max_word: int = 12
) -> TpdDocument:
    d = random_diagram(rng, max_b, max_word)
    coloring = None
    if rng.random() < 0.7:
        candidates = triplane_colorings(d)
        coloring = rng.choice(candidates)
    metadata = []
    for _ in range(rng.randrange(0, 3)):
        key = "k" + str(rng.randrange(100))
        if key not in {k for k, _ in metadata}:
            metadata.append((key, f"v{rng.randrange(1000)} extra{rng.randrange(10)}"))
    return document_for(d, coloring, metadata)


def random_matching(rng: random.Random, bridges: int) -> Matching:
    points = list(range(1, 2 * bridges + 1))
    rng.shuffle(points)
    pairs = tuple((points[2 * i], points[2 * i + 1]) for i in range(bridges))
    return Matching(2 * bridges, pairs)


def structured_diagram(rng: random.Random, cones: int):
    """A diagram with defined trisection parameters and the requested cone
    count, drawn from the generated families (optionally perturbed)."""
    from triplanekit.rewrite import perturb_diagram

    g = rng.randrange(0, 4)
    k = rng.randrange(0, g + 1)
    if cones == 0:
        d, c = lemma_family_diagram(k, g)
    elif cones == 1:
        k3 = rng.randrange(0, g + 1)
        d, c = singular_family_diagram(k, k3, g)
    else:
        b = g + 2
        t1 = Tangle.identity(b)
        t2 = zigzag_tangle(k + 2, b)
        d = TriPlaneDiagram(
            b, (t1, t2, t1), (PatchKind.DISKS, PatchKind.CONE, PatchKind.CONE)
        )
        _, c = unlink_diagram(k + 2, b)
    for _ in range(rng.randrange(0, 2)):
        slot = rng.randrange(2, d.bridges + 1)  # keep the color-1 component single
        tangle_index = rng.randrange(1, 4)
        try:
            d, c = perturb_diagram(d, c, tangle_index, slot, rng.choice((1, -1)))
        except Exception:
            pass  # slot collision with an existing generator; skip
    return d, c


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
