"""Ribbon diagrams, Young tableaux, RSK, jeu de taquin, Knuth classes,
dual immaculate tableaux, frozen tableau sets, and collapse counts.

Ribbon conventions: a composition alpha lists the row lengths of its ribbon
diagram from the bottom row up, and each row starts in the column where the
row below it ends. Walking the diagram cell by cell from the bottom-left
cell to the top-right one gives a step string over {R, U}: R moves right
within a row, U moves up to the next row. Tableaux are stored as tuples of
row tuples, top row first.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinat import Composition, Word, standardize

Rows = tuple[tuple[int, ...], ...]


# --------------------------------------------------------------------- ribbons

def ribbon_steps(alpha: Composition) -> str:
    """Step string of the ribbon walk, one char per pair of adjacent cells."""
    if not alpha:
        raise ValueError("empty composition has no ribbon walk")
    return "U".join("R" * (p - 1) for p in alpha)


def composition_from_steps(steps: str) -> Composition:
    """Composition of the ribbon with the given walk steps ('' gives (1,))."""
    return tuple(seg.count("R") + 1 for seg in steps.split("U"))


def ribbon_cells(alpha: Composition) -> list[tuple[int, int]]:
    """(row, col) coordinates of the cells in walk order; row 0 is the bottom."""
    if not alpha:
        return []
    row = col = 0
    cells = [(0, 0)]
    for step in ribbon_steps(alpha):
        if step == "R":
            col += 1
        else:
            row += 1
        cells.append((row, col))
    return cells


def transpose(alpha: Composition) -> Composition:
    """Composition of the reflected ribbon.

    Reverse the walk and exchange the two step directions, which reflects
    the diagram across its antidiagonal.  Equivalently, transpose(alpha)
    is the composition modeled by the reversal of ribbon_word(alpha).
    Single rows and single columns swap: transpose((n,)) == (1,)*n.
    """
    if not alpha:
        return ()
    swapped = ribbon_steps(alpha).translate(str.maketrans("RU", "UR"))
    return composition_from_steps(swapped[::-1])


def cut_edge_splits(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """All (beta, gamma) with alpha = beta|gamma, trivial splits included."""
    if not alpha:
        return [((), ())]
    steps = ribbon_steps(alpha)
    out: list[tuple[Composition, Composition]] = [((), alpha)]
    for t in range(1, sum(alpha)):
        out.append((composition_from_steps(steps[: t - 1]),
                    composition_from_steps(steps[t:])))
    out.append((alpha, ()))
    return out


def cut_cell_splits(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """All (beta, gamma) sharing one cell, |beta|+|gamma| = |alpha|+1.

    One pair per cell, ordered along the walk from southwest to northeast.
    """
    if not alpha:
        raise ValueError("no cells to cut")
    steps = ribbon_steps(alpha)
    return [
        (composition_from_steps(steps[: t - 1]), composition_from_steps(steps[t - 1:]))
        for t in range(1, sum(alpha) + 1)
    ]


def collapse_count(alpha: Composition, beta: Composition) -> int:
    """Ways to fuse edge-adjacent cell groups of alpha so the result is beta.

    Groups of fused cells are intervals of the walk, so this counts the
    embeddings of beta's step string into alpha's as a subsequence.
    """
    if not alpha or not beta:
        return int(alpha == beta)
    pattern = ribbon_steps(beta)
    text = ribbon_steps(alpha)
    # ways[j] = embeddings of pattern[:j] into the scanned prefix of text
    ways = [0] * (len(pattern) + 1)
    ways[0] = 1
    for ch in text:
        for j in range(len(pattern), 0, -1):
            if pattern[j - 1] == ch:
                ways[j] += ways[j - 1]
    return ways[len(pattern)]


# -------------------------------------------------------- superstandard labels

def superstandard_fill(shape) -> Rows:
    """Label cells 1,2,... left to right in each row, top row first.

    Accepts a ribbon composition or a Decomposition (labelling its expanded
    diagram, where every cell cut duplicates the shared cell).
    """
    if isinstance(shape, Decomposition):
        alpha = composition_from_steps(expanded_steps(shape)) if shape.pieces else ()
    else:
        alpha = shape
    rows: list[tuple[int, ...]] = []
    nxt = 1
    for part in reversed(alpha):
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return tuple(rows)


def row_word(rows: Rows) -> Word:
    """Concatenate the rows from the bottom row up."""
    out: list[int] = []
    for row in reversed(rows):
        out.extend(row)
    return tuple(out)


def ribbon_word(alpha: Composition) -> Word:
    """Row word of the superstandard ribbon labelling; models alpha."""
    return row_word(superstandard_fill(alpha))


# -------------------------------------------------------------- decompositions

@dataclass(frozen=True)
class Decomposition:
    """A way of writing a ribbon as pieces joined at edges or shared cells.

    seps[i] sits between pieces i and i+1: "|" joins at an edge of the
    source, "*" makes both pieces share one source cell.
    """

    source: Composition
    pieces: tuple[Composition, ...]
    seps: tuple[str, ...]

    def spans(self) -> list[tuple[int, int]]:
        """Start and end walk cells of each piece in the source (1-based)."""
        out = []
        start = 1
        for i, piece in enumerate(self.pieces):
            end = start + sum(piece) - 1
            out.append((start, end))
            if i < len(self.seps):
                start = end + 1 if self.seps[i] == "|" else end
        return out

    def components(self) -> tuple[tuple[Composition, ...], ...]:
        """Pieces grouped between edge cuts."""
        groups: list[list[Composition]] = [[]]
        for i, piece in enumerate(self.pieces):
            groups[-1].append(piece)
            if i < len(self.seps) and self.seps[i] == "|":
                groups.append([])
        return tuple(tuple(g) for g in groups)


def decompositions(alpha: Composition, max_pieces: int | None = None) -> list[Decomposition]:
    """All decompositions of alpha into at most max_pieces pieces.

    Cell cuts may be stacked on one cell, so the full family is infinite;
    the default bound of 2|alpha| pieces keeps enumeration finite.
    """
    if max_pieces is None:
        max_pieces = 2 * sum(alpha)
    if not alpha:
        return [Decomposition((), (), ())]
    n = sum(alpha)
    steps = ribbon_steps(alpha)
    out: list[Decomposition] = []

    def rec(start: int, pieces: tuple, seps: tuple) -> None:
        for end in range(start, n + 1):
            piece = composition_from_steps(steps[start - 1:end - 1])
            grown = pieces + (piece,)
            if end == n:
                out.append(Decomposition(alpha, grown, seps))
            if len(grown) < max_pieces:
                if end < n:
                    rec(end + 1, grown, seps + ("|",))
                rec(end, grown, seps + ("*",))

    rec(1, (), ())
    return out


def expanded_steps(d: Decomposition) -> str:
    """Walk steps of the decomposition diagram with cut cells duplicated."""
    steps = ribbon_steps(d.source)
    spans = d.spans()
    parts: list[str] = []
    for i, (start, end) in enumerate(spans):
        parts.append(steps[start - 1:end - 1])
        if i < len(d.seps):
            parts.append("R" if d.seps[i] == "*" else steps[end - 1])
    return "".join(parts)


def decomposition_words(d: Decomposition) -> tuple[Word, ...]:
    """Piece words under the superstandard labelling of the expanded diagram."""
    labels = row_word(superstandard_fill(d))
    out: list[Word] = []
    pos = 0
    for piece in d.pieces:
        size = sum(piece)
        out.append(labels[pos:pos + size])
        pos += size
    return tuple(out)


# ------------------------------------------------------- partitions and tableaux

def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, largest part first within each."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(n, n, ())
    return out


def partition_transpose(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def shape_of(rows: Rows) -> tuple[int, ...]:
    return tuple(len(row) for row in rows)


def tableau_content(rows: Rows) -> tuple[int, ...]:
    """Multiplicity vector of the entries, indexed 1..max entry."""
    entries = [x for row in rows for x in row]
    if not entries:
        return ()
    top = max(entries)
    counts = [0] * top
    for x in entries:
        counts[x - 1] += 1
    return tuple(counts)


def tableau_standardize(rows: Rows) -> Rows:
    """Replace the i-th smallest entry by i, keeping positions."""
    flat = standardize(tuple(x for row in rows for x in row))
    out: list[tuple[int, ...]] = []
    pos = 0
    for row in rows:
        out.append(flat[pos:pos + len(row)])
        pos += len(row)
    return tuple(out)


def column_superstandard(lam: tuple[int, ...]) -> Rows:
    """Fill column 1 with 1..k, column 2 with the next values, and so on."""
    heights = partition_transpose(lam)
    grid = [[0] * p for p in lam]
    nxt = 1
    for col, height in enumerate(heights):
        for r in range(height):
            grid[r][col] = nxt
            nxt += 1
    return tuple(tuple(row) for row in grid)


@lru_cache(maxsize=None)
def all_standard_tableaux(n: int) -> tuple[Rows, ...]:
    """Every standard Young tableau with n cells."""
    if n == 0:
        return ((),)
    out: list[Rows] = []
    for smaller in all_standard_tableaux(n - 1):
        widths = [len(row) for row in smaller]
        for i in range(len(widths)):
            if i == 0 or widths[i] < widths[i - 1]:
                out.append(smaller[:i] + (smaller[i] + (n,),) + smaller[i + 1:])
        out.append(smaller + ((n,),))
    return tuple(out)


def rsk_insert(w: Word) -> Rows:
    """Insertion tableau of a distinct-letter word via row insertion."""
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    rows: list[list[int]] = []
    for x in w:
        for row in rows:
            i = bisect_left(row, x)
            if i == len(row):
                row.append(x)
                x = None
                break
            row[i], x = x, row[i]
        if x is not None:
            rows.append([x])
    return tuple(tuple(row) for row in rows)


def is_row_word(w: Word) -> bool:
    """True when w reads off some tableau row by row from the bottom."""
    return row_word(rsk_insert(w)) == w


def knuth_class(P: Rows) -> list[Word]:
    """All words with insertion tableau P, found by closing under Knuth moves.

    Swapping adjacent letters is a Knuth move exactly when a letter directly
    before or after the pair lies strictly between the swapped values.
    """
    seed = row_word(P)
    seen = {seed}
    queue = [seed]
    while queue:
        w = queue.pop()
        for j in range(len(w) - 1):
            a, b = w[j], w[j + 1]
            lo, hi = min(a, b), max(a, b)
            witness = (j > 0 and lo < w[j - 1] < hi) or (
                j + 2 < len(w) and lo < w[j + 2] < hi
            )
            if witness:
                nxt = w[:j] + (b, a) + w[j + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return sorted(seen)


def jdt_rectify(rows: Rows, inner: tuple[int, ...] = ()) -> Rows:
    """Slide a skew tableau to straight shape by jeu de taquin.

    rows holds only the filled entries of each row; inner gives how many
    empty cells pad each row on the left.
    """
    pads = list(inner) + [0] * (len(rows) - len(inner))
    grid: list[list] = [[None] * pads[i] + list(row) for i, row in enumerate(rows)]
    while any(pads):
        r = max(i for i, p in enumerate(pads) if p)
        hr, hc = r, pads[r] - 1
        while True:
            right = grid[hr][hc + 1] if hc + 1 < len(grid[hr]) else None
            below = (
                grid[hr + 1][hc]
                if hr + 1 < len(grid) and hc < len(grid[hr + 1])
                else None
            )
            if right is None and below is None:
                del grid[hr][hc]
                break
            if below is None or (right is not None and right < below):
                grid[hr][hc], grid[hr][hc + 1] = right, None
                hc += 1
            else:
                grid[hr][hc], grid[hr + 1][hc] = below, None
                hr += 1
        pads[r] -= 1
    return tuple(tuple(row) for row in grid if row)


# ------------------------------------------------------ dual immaculate tableaux

def dual_immaculate_tableaux(content) -> list[Rows]:
    """All tableaux with the given content vector, any composition shape.

    Rows strictly increase and the first column weakly increases from the
    top down; content[i] is the required multiplicity of the value i+1.
    """
    counts = list(content)
    while counts and counts[-1] == 0:
        counts.pop()
    top = len(counts)
    out: list[Rows] = []

    def rec(min_head: int, acc: tuple) -> None:
        if not any(counts):
            out.append(acc)
            return
        avail = [v for v in range(min_head, top + 1) if counts[v - 1]]
        if not avail:
            return
        for size in range(1, len(avail) + 1):
            for row in combinations(avail, size):
                for v in row:
                    counts[v - 1] -= 1
                rec(row[0], acc + (row,))
                for v in row:
                    counts[v - 1] += 1

    rec(1, ())
    return out


@dataclass(frozen=True)
class FrozenSpec:
    """A family of dual immaculate tableaux pinned down by shared cells.

    Every tableau must start with the given rows (cell by cell, extensions
    to the right allowed), have content equal to the content vector, and,
    when max_rows is set, have no rows beyond that count.
    """

    rows: Rows
    content: tuple[int, ...]
    max_rows: int | None = None


def frozen_set(spec: FrozenSpec) -> list[Rows]:
    """All dual immaculate tableaux matching spec, enumerated then filtered."""
    if any(not row for row in spec.rows):
        raise ValueError("pinned rows must be nonempty")
    if spec.max_rows is not None and spec.max_rows < len(spec.rows):
        raise ValueError("row bound below the pinned rows")
    pinned = tableau_content(spec.rows)
    target = spec.content
    if len(pinned) > len(target):
        raise ValueError("pinned cells use values beyond the content vector")
    for i, limit in enumerate(target):
        count = pinned[i] if i < len(pinned) else 0
        if (i < len(target) - 1 and count != limit) or count > limit:
            raise ValueError("pinned cells must use up every value but the last")
    matches = []
    for T in dual_immaculate_tableaux(target):
        if len(T) < len(spec.rows):
            continue
        if spec.max_rows is not None and len(T) > spec.max_rows:
            continue
        if all(T[i][: len(row)] == row for i, row in enumerate(spec.rows)):
            matches.append(T)
    return matches


# ------------------------------------------------------------------ text forms

def render_tableau(rows: Rows) -> str:
    if not rows:
        return "-"
    return "/".join(",".join(str(x) for x in row) for row in rows)


def parse_tableau(text: str) -> Rows:
    if text == "-":
        return ()
    return tuple(
        tuple(int(x) for x in part.split(","))
        for part in text.split("/")
    )
