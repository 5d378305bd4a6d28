"""The tri-plane diagram text format: parsing and canonical serialization.

Grammar (line-oriented; ``#`` starts a comment, blank lines are ignored)::

    tpd 1
    bridges <b>
    tangle <i> braid <e1> <e2> ...    # word may be empty; e in +-[1, 2b-1]
    sector <i> (disks|cone)
    coloring <c1> ... <cb>            # optional; c in {1,2,3}
    meta <key> <value>                # optional, repeatable, unique keys

Exactly three ``tangle`` and three ``sector`` lines with i in {1,2,3}, each
exactly once; ``tpd`` must come first and ``bridges`` before any line that
depends on it.  Serialization is canonical: fixed line order, single spaces,
sorted metadata keys, every line newline-terminated, no trailing whitespace;
``parse`` and ``serialize`` are mutually inverse on the model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import coloring_from_bottom
from .errors import TpdSemanticError, TpdSyntaxError
from .model import (
    BraidWord,
    Coloring,
    PatchKind,
    Tangle,
    TriPlaneDiagram,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class TpdDocument:
    version: int
    diagram: TriPlaneDiagram
    coloring: Optional[Coloring]
    metadata: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "metadata", tuple(sorted(self.metadata)))


def document_for(
    diagram: TriPlaneDiagram,
    coloring: Optional[Coloring] = None,
    metadata: Sequence[tuple[str, str]] = (),
) -> TpdDocument:
    return TpdDocument(FORMAT_VERSION, diagram, coloring, tuple(metadata))


def _tokenize(line: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(line):
        ch = line[i]
        if ch == "#":
            break
        if ch.isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace() and line[j] != "#":
            j += 1
        tokens.append((line[i:j], i + 1))
        i = j
    return tokens


def _int_token(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TpdSyntaxError(f"{what} must be an integer, got {tok!r}", lineno, col) from None


def parse(text: str) -> TpdDocument:
    """Parse a document, reporting the first error with line and column."""
    version = None
    bridges = None
    tangle_words: dict[int, tuple[int, ...]] = {}
    sectors: dict[int, PatchKind] = {}
    coloring_bottom = None
    metadata: dict[str, str] = {}
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        (key, col0), rest = tokens[0], tokens[1:]

        if version is None and key != "tpd":
            raise TpdSyntaxError("document must start with a 'tpd <version>' line", lineno, col0)

        if key == "tpd":
            if version is not None:
                raise TpdSemanticError("duplicate 'tpd' line", lineno, col0)
            if len(rest) != 1:
                raise TpdSyntaxError("expected 'tpd <version>'", lineno, col0)
            version = _int_token(rest[0][0], lineno, rest[0][1], "version")
            if version != FORMAT_VERSION:
                raise TpdSemanticError(
                    f"unsupported format version {version}", lineno, rest[0][1]
                )
        elif key == "bridges":
            if bridges is not None:
                raise TpdSemanticError("duplicate 'bridges' line", lineno, col0)
            if len(rest) != 1:
                raise TpdSyntaxError("expected 'bridges <b>'", lineno, col0)
            bridges = _int_token(rest[0][0], lineno, rest[0][1], "bridge count")
            if bridges < 1:
                raise TpdSemanticError(
                    f"bridge count must be positive, got {bridges}", lineno, rest[0][1]
                )
        elif key == "tangle":
            if bridges is None:
                raise TpdSemanticError("'bridges' must come before tangle lines", lineno, col0)
            if len(rest) < 2 or rest[1][0] != "braid":
                raise TpdSyntaxError("expected 'tangle <i> braid <letters...>'", lineno, col0)
            idx = _int_token(rest[0][0], lineno, rest[0][1], "tangle index")
            if idx not in (1, 2, 3):
                raise TpdSemanticError(f"tangle index must be 1, 2 or 3, got {idx}", lineno, rest[0][1])
            if idx in tangle_words:
                raise TpdSemanticError(f"duplicate tangle {idx}", lineno, rest[0][1])
            word = []
            for tok, col in rest[2:]:
                e = _int_token(tok, lineno, col, "braid letter")
                if e == 0 or abs(e) > 2 * bridges - 1:
                    raise TpdSemanticError(
                        f"generator {e} out of range for {bridges} bridges", lineno, col
                    )
                word.append(e)
            tangle_words[idx] = tuple(word)
        elif key == "sector":
            if len(rest) != 2:
                raise TpdSyntaxError("expected 'sector <i> disks|cone'", lineno, col0)
            idx = _int_token(rest[0][0], lineno, rest[0][1], "sector index")
            if idx not in (1, 2, 3):
                raise TpdSemanticError(f"sector index must be 1, 2 or 3, got {idx}", lineno, rest[0][1])
            if idx in sectors:
                raise TpdSemanticError(f"duplicate sector {idx}", lineno, rest[0][1])
            kind_tok, kind_col = rest[1]
            try:
                sectors[idx] = PatchKind(kind_tok)
            except ValueError:
                raise TpdSemanticError(
                    f"sector kind must be 'disks' or 'cone', got {kind_tok!r}", lineno, kind_col
                ) from None
        elif key == "coloring":
            if bridges is None:
                raise TpdSemanticError("'bridges' must come before the coloring line", lineno, col0)
            if coloring_bottom is not None:
                raise TpdSemanticError("duplicate 'coloring' line", lineno, col0)
            if len(rest) != bridges:
                raise TpdSemanticError(
                    f"coloring needs {bridges} colors, got {len(rest)}", lineno, col0
                )
            bottom = []
            for tok, col in rest:
                c = _int_token(tok, lineno, col, "color")
                if c not in (1, 2, 3):
                    raise TpdSemanticError(f"color must be 1, 2 or 3, got {c}", lineno, col)
                bottom.append(c)
            coloring_bottom = tuple(bottom)
        elif key == "meta":
            if len(rest) < 2:
                raise TpdSyntaxError("expected 'meta <key> <value>'", lineno, col0)
            mkey = rest[0][0]
            if mkey in metadata:
                raise TpdSemanticError(f"duplicate meta key {mkey!r}", lineno, rest[0][1])
            metadata[mkey] = " ".join(tok for tok, _ in rest[1:])
        else:
            raise TpdSyntaxError(f"unknown directive {key!r}", lineno, col0)

    end = lineno + 1
    if version is None:
        raise TpdSemanticError("empty document: missing 'tpd' line", end, 1)
    if bridges is None:
        raise TpdSemanticError("missing 'bridges' line", end, 1)
    for idx in (1, 2, 3):
        if idx not in tangle_words:
            raise TpdSemanticError(f"missing tangle {idx}", end, 1)
        if idx not in sectors:
            raise TpdSemanticError(f"missing sector {idx}", end, 1)

    tangles = tuple(
        Tangle(bridges, BraidWord(2 * bridges, tangle_words[i])) for i in (1, 2, 3)
    )
    diagram = TriPlaneDiagram(bridges, tangles, tuple(sectors[i] for i in (1, 2, 3)))
    coloring = None
    if coloring_bottom is not None:
        coloring = coloring_from_bottom(tangles[0], coloring_bottom)
    return TpdDocument(version, diagram, coloring, tuple(sorted(metadata.items())))


def serialize(doc: TpdDocument) -> str:
    """Canonical text form; byte-stable across runs and platforms."""
    d = doc.diagram
    lines = [f"tpd {doc.version}", f"bridges {d.bridges}"]
    for i in (1, 2, 3):
        word = d.tangle(i).braid.word
        suffix = "".join(f" {e}" for e in word)
        lines.append(f"tangle {i} braid{suffix}")
    for i in (1, 2, 3):
        lines.append(f"sector {i} {d.sector(i).value}")
    if doc.coloring is not None:
        lines.append("coloring " + " ".join(str(c) for c in doc.coloring.bottom))
    for key, value in doc.metadata:
        lines.append(f"meta {key} {value}")
    return "".join(line + "\n" for line in lines)
