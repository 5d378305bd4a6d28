"""Coloring-preserving rewriting of plat words, and unlink certification.

Moves operate on a plat word together with its bridge count.  A ``Plat`` with
``closed=True`` has standard caps at both ends (a link diagram); with
``closed=False`` only the bottom caps are present (a tangle, whose top is the
fixed boundary).  ``word[0]`` is adjacent to the bottom caps.

Move kinds and their soundness classes:

* CANCEL      - delete/insert an adjacent inverse pair; the ``cap`` variants
                delete/insert a single odd-index letter at a capped end of the
                word (twisting a cap).  Isotopy.
* FAR_COMMUTE - swap adjacent letters with generator distance >= 2.  Isotopy.
* BRAID_RELATION - rewrite a three-letter window by the Artin relation (the
                same-sign form s_i s_j s_i = s_j s_i s_j and its conjugated
                forms).  Isotopy.
* THREE_MOVE  - delete/insert a block of three identical letters.  Preserves
                Fox 3-colorings but NOT the link type.
* PERTURB     - add a bridge: insert two straight strands after position 2k
                and one crossing between the new left leg and strand 2k.
* DEPERTURB   - remove such a bridge.  Perturbation moves preserve the link
                and raise/lower the bridge count by one.

Unlink certification searches with the link-type-preserving kinds only
(CANCEL, FAR_COMMUTE, BRAID_RELATION, DEPERTURB); a plat word reduced to the
empty word is a crossingless plat, i.e. an unlink.  THREE_MOVE must never
enter that search: it changes the link while fixing its colorings.

Certificates serialize one move per line as ``KIND pos gen dir`` with dir in
{del, ins, capdel, capins}; replaying the lines with ``apply_move`` in order
reproduces the rewrite.
"""

from __future__ import annotations

import heapq
import itertools
import os
import time as _time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .coloring import cap_colors, tangle_colorings
from .errors import MoveError
from .model import Coloring, Tangle, TriPlaneDiagram, TriState


class MoveKind(Enum):
    # Definition order is the tie-breaking order used by the search.
    CANCEL = "CANCEL"
    FAR_COMMUTE = "FAR_COMMUTE"
    BRAID_RELATION = "BRAID_RELATION"
    THREE_MOVE = "THREE_MOVE"
    PERTURB = "PERTURB"
    DEPERTURB = "DEPERTURB"


_DIRS = ("del", "ins", "capdel", "capins")


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    pos: int
    gen: int
    dir: str = "del"

    def __post_init__(self):
        if self.dir not in _DIRS:
            raise ValueError(f"unknown move direction {self.dir!r}")
        if self.dir in ("capdel", "capins") and self.kind is not MoveKind.CANCEL:
            raise ValueError("cap directions only apply to CANCEL moves")

    def format(self) -> str:
        return f"{self.kind.value} {self.pos} {self.gen} {self.dir}"


@dataclass(frozen=True)
class Plat:
    """A plat word: bridge count, braid word on 2*bridges strands, and whether
    the top is capped (closed link) or free (tangle boundary)."""

    bridges: int
    word: tuple[int, ...]
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        for e in self.word:
            if e == 0 or abs(e) > 2 * self.bridges - 1:
                raise ValueError(f"letter {e} out of range for {self.bridges} bridges")


@dataclass(frozen=True)
class SearchBudget:
    """Hard bounds on the certification search; all finite and enforced."""

    max_depth: int = 48
    max_states: int = 20000
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_depth < 0 or self.max_states < 1 or self.time_limit <= 0:
            raise ValueError("budget bounds must be positive and finite")

    @classmethod
    def default(cls) -> SearchBudget:
        depth = int(os.environ.get("TPK_BUDGET_DEPTH", cls.max_depth))
        return cls(max_depth=depth)


def inverse(m: Move) -> Move:
    """The move undoing ``m`` (same or paired kind).

    For BRAID_RELATION the window rewrite is involutive, so the inverse is the
    same move with flipped direction; its ``gen`` field keeps recording the
    first letter of the original (pre-move) window and is only validated when
    applying in the ``del`` direction.
    """
    flip = {"del": "ins", "ins": "del", "capdel": "capins", "capins": "capdel"}
    if m.kind is MoveKind.PERTURB:
        return Move(MoveKind.DEPERTURB, m.pos, m.gen)
    if m.kind is MoveKind.DEPERTURB:
        return Move(MoveKind.PERTURB, m.pos, m.gen)
    return Move(m.kind, m.pos, m.gen, flip[m.dir])


def _sgn(e: int) -> int:
    return 1 if e > 0 else -1


def _braid_relation_window(x: int, y: int, z: int) -> Optional[tuple[int, int, int]]:
    """The rewritten window, or None when the relation does not apply."""
    if abs(abs(x) - abs(y)) != 1:
        return None
    if z == x and _sgn(x) == _sgn(y):
        return (y, x, y)
    if z == -x:
        return (-_sgn(x) * abs(y), _sgn(y) * abs(x), _sgn(x) * abs(y))
    return None


def apply_plat_move(p: Plat, m: Move) -> Plat:
    """Apply one move; raises MoveError with a position diagnostic when the
    move's pattern does not match."""
    word = list(p.word)
    n = len(word)
    k2 = abs(m.gen)  # generator index for perturbation moves

    def fail(msg: str):
        raise MoveError(f"{m.kind.value} at pos {m.pos}: {msg}", pos=m.pos)

    if m.kind is MoveKind.CANCEL:
        if m.dir == "del":
            if not (0 <= m.pos <= n - 2):
                fail("needs two letters at this position")
            if word[m.pos] != m.gen or word[m.pos + 1] != -m.gen:
                fail(f"window is not [{m.gen}, {-m.gen}]")
            del word[m.pos : m.pos + 2]
        elif m.dir == "ins":
            if not (0 <= m.pos <= n):
                fail("insertion point outside word")
            word[m.pos : m.pos] = [m.gen, -m.gen]
        elif m.dir == "capdel":
            if not (0 <= m.pos <= n - 1) or word[m.pos] != m.gen:
                fail(f"letter at position is not {m.gen}")
            if abs(m.gen) % 2 == 0:
                fail("cap twist needs an odd generator index")
            at_bottom = m.pos == 0
            at_top = p.closed and m.pos == n - 1
            if not (at_bottom or at_top):
                fail("cap twist must sit next to a capped end")
            del word[m.pos]
        else:  # capins
            if abs(m.gen) % 2 == 0:
                fail("cap twist needs an odd generator index")
            if not (m.pos == 0 or (p.closed and m.pos == n)):
                fail("cap twist insertion must sit next to a capped end")
            word[m.pos : m.pos] = [m.gen]
        return Plat(p.bridges, tuple(word), p.closed)

    if m.kind is MoveKind.FAR_COMMUTE:
        if not (0 <= m.pos <= n - 2):
            fail("needs two letters at this position")
        a, b = word[m.pos], word[m.pos + 1]
        if abs(abs(a) - abs(b)) < 2:
            fail("letters are not far apart")
        expect = a if m.dir == "del" else b
        if expect != m.gen:
            fail(f"expected letter {m.gen}")
        word[m.pos], word[m.pos + 1] = b, a
        return Plat(p.bridges, tuple(word), p.closed)

    if m.kind is MoveKind.BRAID_RELATION:
        if not (0 <= m.pos <= n - 3):
            fail("needs three letters at this position")
        if m.dir == "del" and word[m.pos] != m.gen:
            fail(f"window does not start with {m.gen}")
        new = _braid_relation_window(*word[m.pos : m.pos + 3])
        if new is None:
            fail("window does not match the braid relation")
        word[m.pos : m.pos + 3] = list(new)
        return Plat(p.bridges, tuple(word), p.closed)

    if m.kind is MoveKind.THREE_MOVE:
        if m.dir == "del":
            if word[m.pos : m.pos + 3] != [m.gen] * 3:
                fail(f"window is not [{m.gen}]*3")
            del word[m.pos : m.pos + 3]
        else:
            if not (0 <= m.pos <= n):
                fail("insertion point outside word")
            word[m.pos : m.pos] = [m.gen] * 3
        return Plat(p.bridges, tuple(word), p.closed)

    if m.kind is MoveKind.PERTURB:
        if k2 % 2 or not 2 <= k2 <= 2 * p.bridges:
            fail("perturbation crossing must be an even index within range")
        if any(abs(e) == k2 for e in word):
            fail(f"word already uses generator {k2}; pick another slot")
        if not (0 <= m.pos <= n):
            fail("insertion point outside word")
        shifted = [e + 2 * _sgn(e) if abs(e) > k2 else e for e in word]
        shifted[m.pos : m.pos] = [m.gen]
        return Plat(p.bridges + 1, tuple(shifted), p.closed)

    if m.kind is MoveKind.DEPERTURB:
        if p.bridges < 2:
            fail("cannot remove the last bridge")
        if not (0 <= m.pos <= n - 1) or word[m.pos] != m.gen:
            fail(f"letter at position is not {m.gen}")
        if k2 % 2 or k2 > 2 * (p.bridges - 1):
            fail("deperturbation crossing must be an even index within range")
        for q, e in enumerate(word):
            if q != m.pos and abs(e) in (k2, k2 + 1, k2 + 2):
                fail(f"strands {k2 + 1},{k2 + 2} are not straight away from the crossing")
        del word[m.pos]
        unshifted = [e - 2 * _sgn(e) if abs(e) > k2 + 2 else e for e in word]
        return Plat(p.bridges - 1, tuple(unshifted), p.closed)

    raise MoveError(f"unknown move kind {m.kind}")


def apply_move(t: Tangle, m: Move) -> Tangle:
    """Apply a move to a tangle (plat with a free top boundary)."""
    p = apply_plat_move(Plat(t.bridges, t.braid.word, closed=False), m)
    return Tangle.from_word(p.bridges, p.word)


# Certification uses only the link-type-preserving kinds.
CERT_MOVE_KINDS = (
    MoveKind.CANCEL,
    MoveKind.FAR_COMMUTE,
    MoveKind.BRAID_RELATION,
    MoveKind.DEPERTURB,
)


def applicable_moves(p: Plat, kinds: Sequence[MoveKind] = CERT_MOVE_KINDS) -> list[Move]:
    """All applicable (deleting/rewriting) moves, ordered by (kind, position).

    Insertions are never enumerated; they are available to callers as the
    inverses of the listed moves.
    """
    word = p.word
    n = len(word)
    out: list[Move] = []
    for kind in kinds:
        if kind is MoveKind.CANCEL:
            for pos in range(n - 1):
                if word[pos + 1] == -word[pos]:
                    out.append(Move(kind, pos, word[pos], "del"))
            if n and abs(word[0]) % 2 == 1:
                out.append(Move(kind, 0, word[0], "capdel"))
            if p.closed and n > 1 and abs(word[-1]) % 2 == 1:
                out.append(Move(kind, n - 1, word[-1], "capdel"))
        elif kind is MoveKind.FAR_COMMUTE:
            for pos in range(n - 1):
                if abs(abs(word[pos]) - abs(word[pos + 1])) >= 2:
                    out.append(Move(kind, pos, word[pos], "del"))
        elif kind is MoveKind.BRAID_RELATION:
            for pos in range(n - 2):
                if _braid_relation_window(*word[pos : pos + 3]) is not None:
                    out.append(Move(kind, pos, word[pos], "del"))
        elif kind is MoveKind.THREE_MOVE:
            for pos in range(n - 2):
                if word[pos] == word[pos + 1] == word[pos + 2]:
                    out.append(Move(kind, pos, word[pos], "del"))
        elif kind is MoveKind.DEPERTURB:
            if p.bridges < 2:
                continue
            counts: dict[int, int] = {}
            for e in word:
                counts[abs(e)] = counts.get(abs(e), 0) + 1
            for pos in range(n):
                k2 = abs(word[pos])
                if k2 % 2 or k2 > 2 * (p.bridges - 1):
                    continue
                if counts[k2] == 1 and not counts.get(k2 + 1) and not counts.get(k2 + 2):
                    out.append(Move(kind, pos, word[pos], "del"))
        # PERTURB is intentionally never enumerated.
    return out


def _free_reduce(p: Plat) -> tuple[Plat, list[Move]]:
    """Eagerly cancel adjacent inverse pairs (leftmost first), recording the
    CANCEL moves so the reduction replays as part of a certificate."""
    word = list(p.word)
    moves = []
    pos = 0
    while pos < len(word) - 1:
        if word[pos + 1] == -word[pos]:
            moves.append(Move(MoveKind.CANCEL, pos, word[pos], "del"))
            del word[pos : pos + 2]
            pos = max(pos - 1, 0)
        else:
            pos += 1
    return Plat(p.bridges, tuple(word), p.closed), moves


@dataclass(frozen=True)
class CertificationResult:
    state: TriState
    certificate: Optional[tuple[Move, ...]]
    states_explored: int


def reduce_to_unlink(
    p: Plat, budget: Optional[SearchBudget] = None
) -> tuple[Optional[tuple[Move, ...]], int]:
    """Deterministic best-first search for a move sequence emptying the word.

    States are keyed by freely-reduced words; the frontier is ordered by
    (word length, path length, insertion order) and children are generated in
    (kind, position) order, so the returned certificate is reproducible.
    Returns (certificate, states_expanded); certificate is None on budget
    exhaustion.
    """
    budget = budget or SearchBudget.default()
    deadline = _time.monotonic() + budget.time_limit
    start, pre = _free_reduce(p)
    if not start.word:
        return tuple(pre), 0
    counter = itertools.count()
    heap = [(len(start.word), len(pre), next(counter), start, tuple(pre))]
    visited = {(start.bridges, start.word)}
    states = 0
    while heap:
        if states >= budget.max_states or _time.monotonic() > deadline:
            return None, states
        _, _, _, plat, path = heapq.heappop(heap)
        states += 1
        for m in applicable_moves(plat, CERT_MOVE_KINDS):
            child = apply_plat_move(plat, m)
            child, extra = _free_reduce(child)
            newpath = path + (m,) + tuple(extra)
            if len(newpath) > budget.max_depth:
                continue
            key = (child.bridges, child.word)
            if key in visited:
                continue
            visited.add(key)
            if not child.word:
                return newpath, states
            heapq.heappush(
                heap, (len(child.word), len(newpath), next(counter), child, newpath)
            )
    return None, states


def certify_unlink(link, budget: Optional[SearchBudget] = None) -> CertificationResult:
    """Tri-state unlink certification for a sector link.

    Yes: a move sequence within budget reduces the plat word to the empty
    word (a crossingless plat is an unlink).  No: the coloring count differs
    from 3^components, which refutes unlinkedness outright (an n-component
    unlink has exactly 3^n colorings).  Unknown: budget exhausted.
    """
    if link.colorings != 3**link.components:
        return CertificationResult(TriState.NO, None, 0)
    cert, states = reduce_to_unlink(
        Plat(link.bridges, link.braid.word, closed=True), budget
    )
    if cert is not None:
        return CertificationResult(TriState.YES, cert, states)
    return CertificationResult(TriState.UNKNOWN, None, states)


def moves_preserve_colorings(t: Tangle, m: Move) -> bool:
    """Verification hook: do the colorings of ``t`` and ``apply_move(t, m)``
    correspond canonically?

    For bridge-preserving moves the endpoint color sets must be identical.
    For PERTURB the colorings monochromatic on the two new boundary points
    must be in forced-color bijection with the old colorings; this is the
    package's perturbation convention (positive crossing next to the caps,
    new bridge color forced equal to its neighbor).  Other perturbation
    placements remain sound link moves but are not certified by this
    criterion.  DEPERTURB is checked via its inverse.
    """
    t2 = apply_move(t, m)
    if m.kind in (
        MoveKind.CANCEL,
        MoveKind.FAR_COMMUTE,
        MoveKind.BRAID_RELATION,
        MoveKind.THREE_MOVE,
    ):
        old = {c.endpoint_colors for c in tangle_colorings(t)}
        new = {c.endpoint_colors for c in tangle_colorings(t2)}
        return old == new
    if m.kind is MoveKind.PERTURB:
        return _perturbation_bijection(t, t2, m)
    if m.kind is MoveKind.DEPERTURB:
        return _perturbation_bijection(t2, t, inverse(m))
    raise MoveError(f"unknown move kind {m.kind}")


def _perturbation_bijection(old: Tangle, new: Tangle, m: Move) -> bool:
    """Check the forced-color extension property of a perturbation: exactly
    one extension per old coloring among those monochromatic on the new
    bridge's boundary points."""
    k = abs(m.gen) // 2  # new cap is cap k+1, strands 2k+1, 2k+2
    perm = new.braid.permutation()
    p1, p2 = perm[2 * k], perm[2 * k + 1]
    valid = [
        c
        for c in tangle_colorings(new)
        if c.endpoint_colors[p1 - 1] == c.endpoint_colors[p2 - 1]
    ]
    if len(valid) != 3**old.bridges:
        return False
    restrictions = {c.bottom[:k] + c.bottom[k + 1 :] for c in valid}
    return len(restrictions) == 3**old.bridges


def is_normalized(link, c: Coloring) -> bool:
    """Whether a sector link's plat diagram is normalized under a coloring:
    the leftmost bottom and top caps carry color 1 and every other cap color
    2.  Evaluated on caps, not on the strands the braid permutes them to."""
    bottom = cap_colors(link.tangle_bottom.braid, c.endpoint_colors)
    top = cap_colors(link.tangle_top.braid, c.endpoint_colors)
    if bottom is None or top is None:
        return False
    for caps in (bottom, top):
        if caps[0] != 1 or any(col != 2 for col in caps[1:]):
            return False
    return True


def format_certificate(moves: Iterable[Move]) -> str:
    """Line-oriented certificate: one ``KIND pos gen dir`` per line."""
    return "".join(m.format() + "\n" for m in moves)


def parse_certificate(text: str) -> tuple[Move, ...]:
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"certificate line {lineno}: expected 'KIND pos gen dir'")
        kind_s, pos_s, gen_s, dir_s = parts
        try:
            kind = MoveKind(kind_s)
        except ValueError:
            raise ValueError(f"certificate line {lineno}: unknown kind {kind_s!r}") from None
        try:
            pos, gen = int(pos_s), int(gen_s)
        except ValueError:
            raise ValueError(f"certificate line {lineno}: pos and gen must be integers") from None
        if dir_s not in _DIRS:
            raise ValueError(f"certificate line {lineno}: unknown direction {dir_s!r}")
        moves.append(Move(kind, pos, gen, dir_s))
    return tuple(moves)


def insert_bridge(t: Tangle, k: int) -> Tangle:
    """Insert a straight bridge (no crossing) after cap k; the companion of a
    perturbation in the two tangles that do not receive the finger."""
    if not 1 <= k <= t.bridges:
        raise ValueError(f"slot {k} outside 1..{t.bridges}")
    if any(abs(e) == 2 * k for e in t.braid.word):
        raise MoveError(f"tangle word uses generator {2 * k}; pick another slot")
    shifted = tuple(e + 2 * _sgn(e) if abs(e) > 2 * k else e for e in t.braid.word)
    return Tangle.from_word(t.bridges + 1, shifted)


def remove_bridge(t: Tangle, k: int) -> Tangle:
    """Remove a straight bridge at cap k+1 (inverse of :func:`insert_bridge`);
    the tangle word must not touch the bridge's strands."""
    if not 1 <= k <= t.bridges - 1:
        raise ValueError(f"slot {k} outside 1..{t.bridges - 1}")
    if any(abs(e) in (2 * k, 2 * k + 1, 2 * k + 2) for e in t.braid.word):
        raise MoveError(f"tangle word touches the bridge at slot {k}; not straight")
    unshifted = tuple(
        e - 2 * _sgn(e) if abs(e) > 2 * k + 2 else e for e in t.braid.word
    )
    return Tangle.from_word(t.bridges - 1, unshifted)


def deperturb_diagram(
    d: TriPlaneDiagram,
    c: Optional[Coloring],
    tangle_index: int,
    move: Move,
) -> tuple[TriPlaneDiagram, Optional[Coloring]]:
    """Diagram-level deperturbation: the chosen tangle loses its finger
    crossing via the DEPERTURB move, the other two lose a straight bridge."""
    from .coloring import coloring_from_bottom

    if move.kind is not MoveKind.DEPERTURB:
        raise MoveError("deperturb_diagram needs a DEPERTURB move")
    slot = abs(move.gen) // 2
    tangles = []
    for i in (1, 2, 3):
        t = d.tangle(i)
        tangles.append(apply_move(t, move) if i == tangle_index else remove_bridge(t, slot))
    d2 = TriPlaneDiagram(d.bridges - 1, tuple(tangles), d.sectors)
    if c is None:
        return d2, None
    bottom1 = cap_colors(d.tangle(1).braid, c.endpoint_colors)
    new_bottom = bottom1[:slot] + bottom1[slot + 1 :]
    return d2, coloring_from_bottom(d2.tangle(1), new_bottom)


def perturb_diagram(
    d: TriPlaneDiagram,
    c: Optional[Coloring],
    tangle_index: int,
    slot: int,
    sign: int = 1,
) -> tuple[TriPlaneDiagram, Optional[Coloring]]:
    """Diagram-level perturbation: the finger crossing goes into the chosen
    tangle next to its caps, the other two tangles receive a straight bridge.

    The sector link not involving the perturbed tangle gains one split unknot
    component; the other two sector links keep their link type.  A coloring
    is transported by giving the new bridge its forced color.
    """
    from .coloring import coloring_from_bottom  # cycle-free local import

    if tangle_index not in (1, 2, 3):
        raise ValueError("tangle index must be 1, 2 or 3")
    move = Move(MoveKind.PERTURB, 0, sign * 2 * slot)
    tangles = []
    for i in (1, 2, 3):
        t = d.tangle(i)
        tangles.append(apply_move(t, move) if i == tangle_index else insert_bridge(t, slot))
    d2 = TriPlaneDiagram(d.bridges + 1, tuple(tangles), d.sectors)
    if c is None:
        return d2, None
    caps = cap_colors(d.tangle(tangle_index).braid, c.endpoint_colors)
    if caps is None:
        raise MoveError(
            f"coloring does not extend over tangle {tangle_index}; cannot transport it"
        )
    forced = caps[slot - 1]
    bottom1 = cap_colors(d.tangle(1).braid, c.endpoint_colors)
    new_bottom = bottom1[:slot] + (forced,) + bottom1[slot:]
    return d2, coloring_from_bottom(d2.tangle(1), new_bottom)
