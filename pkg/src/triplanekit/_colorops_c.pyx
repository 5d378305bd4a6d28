# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coloring kernel; exact twin of ``_colorops_py``.

Same contract, same enumeration order.  The hot loops are the odometer over
the 3^b bottom-cap assignments and the letter-by-letter propagation, both of
which run on C arrays here.
"""

from libc.stdlib cimport free, malloc

MAX_COUNT_BRIDGES = 16
MAX_ENUM_BRIDGES = 12

DEF MAX_STRANDS = 64


cdef inline void _prop(const int* word, Py_ssize_t wl, signed char* c) noexcept nogil:
    cdef Py_ssize_t j
    cdef int e, i
    cdef signed char a, b
    for j in range(wl):
        e = word[j]
        if e > 0:
            i = e - 1
            a = c[i]
            b = c[i + 1]
            c[i] = <signed char>((2 * a - b + 3) % 3)
            c[i + 1] = a
        else:
            i = -e - 1
            a = c[i]
            b = c[i + 1]
            c[i] = b
            c[i + 1] = <signed char>((2 * b - a + 3) % 3)


cdef inline bint _plat_extends(const int* word, Py_ssize_t wl, const signed char* trits,
                               int bridges) noexcept nogil:
    cdef signed char vec[MAX_STRANDS]
    cdef int k
    for k in range(bridges):
        vec[2 * k] = trits[k]
        vec[2 * k + 1] = trits[k]
    _prop(word, wl, vec)
    for k in range(bridges):
        if vec[2 * k] != vec[2 * k + 1]:
            return 0
    return 1


cdef inline bint _advance(signed char* trits, int bridges) noexcept nogil:
    # Odometer step, least significant trit last; returns 0 on wraparound.
    cdef int j = bridges - 1
    while j >= 0:
        trits[j] += 1
        if trits[j] < 3:
            return 1
        trits[j] = 0
        j -= 1
    return 0


cdef int* _as_word(object word, Py_ssize_t* wl) except NULL:
    cdef Py_ssize_t n = len(word)
    cdef int* w = <int*>malloc((n + 1) * sizeof(int))
    if w == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    for j in range(n):
        w[j] = word[j]
    wl[0] = n
    return w


def _check_bridges(bridges, limit):
    if not 1 <= bridges <= limit:
        raise ValueError(f"bridge count {bridges} outside supported range 1..{limit}")


def propagate(word, colors):
    """Push a color vector (values 0..2) through a braid word; returns a list."""
    cdef signed char vec[MAX_STRANDS]
    cdef Py_ssize_t n = len(colors)
    if n > MAX_STRANDS:
        raise ValueError(f"color vector longer than {MAX_STRANDS}")
    cdef Py_ssize_t j
    for j in range(n):
        vec[j] = colors[j]
    cdef Py_ssize_t wl
    cdef int* w = _as_word(word, &wl)
    try:
        _prop(w, wl, vec)
    finally:
        free(w)
    return [vec[j] for j in range(n)]


def count_plat_colorings(word, int bridges):
    """Number of bottom-cap color assignments of a closed plat word that are
    again cap-constant at the top (= Fox 3-colorings of the plat link)."""
    _check_bridges(bridges, MAX_COUNT_BRIDGES)
    cdef signed char trits[MAX_STRANDS]
    cdef int k
    for k in range(bridges):
        trits[k] = 0
    cdef Py_ssize_t wl
    cdef int* w = _as_word(word, &wl)
    cdef long long n = 0
    try:
        with nogil:
            while True:
                if _plat_extends(w, wl, trits, bridges):
                    n += 1
                if not _advance(trits, bridges):
                    break
    finally:
        free(w)
    return int(n)


def enum_plat_colorings(word, int bridges):
    """The valid bottom-cap assignments, as tuples of trits, in lexicographic
    order (cap 1 most significant)."""
    _check_bridges(bridges, MAX_ENUM_BRIDGES)
    cdef signed char trits[MAX_STRANDS]
    cdef int k
    for k in range(bridges):
        trits[k] = 0
    cdef Py_ssize_t wl
    cdef int* w = _as_word(word, &wl)
    out = []
    try:
        while True:
            if _plat_extends(w, wl, trits, bridges):
                out.append(tuple(trits[k] for k in range(bridges)))
            if not _advance(trits, bridges):
                break
    finally:
        free(w)
    return out


def count_triplane_colorings(int bridges, word2, word3):
    """Count assignments valid for both pullback words simultaneously."""
    _check_bridges(bridges, MAX_COUNT_BRIDGES)
    cdef signed char trits[MAX_STRANDS]
    cdef int k
    for k in range(bridges):
        trits[k] = 0
    cdef Py_ssize_t wl2, wl3
    cdef int* w2 = _as_word(word2, &wl2)
    cdef int* w3
    try:
        w3 = _as_word(word3, &wl3)
    except BaseException:
        free(w2)
        raise
    cdef long long n = 0
    try:
        with nogil:
            while True:
                if _plat_extends(w2, wl2, trits, bridges) and \
                        _plat_extends(w3, wl3, trits, bridges):
                    n += 1
                if not _advance(trits, bridges):
                    break
    finally:
        free(w2)
        free(w3)
    return int(n)


def enum_triplane_colorings(int bridges, word2, word3):
    _check_bridges(bridges, MAX_ENUM_BRIDGES)
    cdef signed char trits[MAX_STRANDS]
    cdef int k
    for k in range(bridges):
        trits[k] = 0
    cdef Py_ssize_t wl2, wl3
    cdef int* w2 = _as_word(word2, &wl2)
    cdef int* w3
    try:
        w3 = _as_word(word3, &wl3)
    except BaseException:
        free(w2)
        raise
    out = []
    try:
        while True:
            if _plat_extends(w2, wl2, trits, bridges) and \
                    _plat_extends(w3, wl3, trits, bridges):
                out.append(tuple(trits[k] for k in range(bridges)))
            if not _advance(trits, bridges):
                break
    finally:
        free(w2)
        free(w3)
    return out
