"""Pure-Python coloring kernel.

Colors here live in {0, 1, 2} (external colors minus one); the dihedral
crossing rule is affine over the three-element field, so the shift is
harmless.  For a letter ``e`` acting at 0-based index i = |e| - 1 on the
adjacent pair (a, b):

    sign +1:  (a, b) -> (2a - b mod 3, a)      left strand passes over
    sign -1:  (a, b) -> (b, 2b - a mod 3)      right strand passes over

The compiled twin ``_colorops_c`` implements the identical interface; both
must produce identical results and enumeration order (lexicographic in the
bottom-cap assignment, cap 1 most significant).
"""

from __future__ import annotations

MAX_COUNT_BRIDGES = 16
MAX_ENUM_BRIDGES = 12


def propagate(word, colors):
    """Push a color vector (values 0..2) through a braid word; returns a list."""
    c = list(colors)
    for e in word:
        i = abs(e) - 1
        a, b = c[i], c[i + 1]
        if e > 0:
            c[i] = (2 * a - b) % 3
            c[i + 1] = a
        else:
            c[i] = b
            c[i + 1] = (2 * b - a) % 3
    return c


def _plat_extends(word, trits, bridges):
    vec = []
    for t in trits:
        vec.append(t)
        vec.append(t)
    vec = propagate(word, vec)
    for k in range(bridges):
        if vec[2 * k] != vec[2 * k + 1]:
            return False
    return True


def _check_bridges(bridges, limit):
    if not 1 <= bridges <= limit:
        raise ValueError(f"bridge count {bridges} outside supported range 1..{limit}")


def _trit_assignments(bridges):
    trits = [0] * bridges
    total = 3**bridges
    for _ in range(total):
        yield trits
        j = bridges - 1
        while j >= 0:
            trits[j] += 1
            if trits[j] < 3:
                break
            trits[j] = 0
            j -= 1


def count_plat_colorings(word, bridges):
    """Number of bottom-cap color assignments of a closed plat word that are
    again cap-constant at the top (= Fox 3-colorings of the plat link)."""
    _check_bridges(bridges, MAX_COUNT_BRIDGES)
    n = 0
    for trits in _trit_assignments(bridges):
        if _plat_extends(word, trits, bridges):
            n += 1
    return n


def enum_plat_colorings(word, bridges):
    """The valid bottom-cap assignments, as tuples of trits, in lexicographic
    order (cap 1 most significant)."""
    _check_bridges(bridges, MAX_ENUM_BRIDGES)
    out = []
    for trits in _trit_assignments(bridges):
        if _plat_extends(word, trits, bridges):
            out.append(tuple(trits))
    return out


def count_triplane_colorings(bridges, word2, word3):
    """Count assignments valid for both pullback words simultaneously.

    ``word2``/``word3`` are the composite words w1 + reverse_inverse(wj); an
    assignment of tangle 1's caps is a diagram coloring exactly when both
    composites carry it to a cap-constant vector.
    """
    _check_bridges(bridges, MAX_COUNT_BRIDGES)
    n = 0
    for trits in _trit_assignments(bridges):
        if _plat_extends(word2, trits, bridges) and _plat_extends(word3, trits, bridges):
            n += 1
    return n


def enum_triplane_colorings(bridges, word2, word3):
    _check_bridges(bridges, MAX_ENUM_BRIDGES)
    out = []
    for trits in _trit_assignments(bridges):
        if _plat_extends(word2, trits, bridges) and _plat_extends(word3, trits, bridges):
            out.append(tuple(trits))
    return out
