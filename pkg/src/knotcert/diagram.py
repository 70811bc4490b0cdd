"""Planar link diagrams as PD codes, with checkerboard and Goeritz machinery.

A crossing stores the four incident arc labels counterclockwise starting
from the incoming under-arc, plus the crossing sign.  With the strands
oriented, the under-strand occupies slots 0 (in) and 2 (out) and the
over-strand occupies slots 1 and 3; at a positive crossing slot 1 is the
incoming over-arc, at a negative crossing slot 3 is.

Faces are traced combinatorially from the counterclockwise slot order, so
a diagram built here carries its planar embedding with it.  The signature
comes from a checkerboard coloring: the Goeritz matrix of the white faces
corrected by the number and sign of crossings whose local orientation
matches their coloring type.  The sign conventions are pinned by the
anchor values sigma(right trefoil) = -2 and sigma(unknot) = 0.
"""

from __future__ import annotations

import dataclasses

from ._matrix import integer_determinant, symmetric_signature
from .braid import BraidWord

__all__ = [
    "Crossing",
    "LinkDiagram",
    "GoeritzData",
    "braid_closure",
    "pretzel_diagram",
    "seifert_circle_count",
    "writhe",
    "component_count",
    "is_positive",
    "mirror",
    "faces",
    "goeritz",
    "signature",
    "determinant",
    "to_pd_text",
    "from_pd_text",
]


@dataclasses.dataclass(frozen=True)
class Crossing:
    """Arc labels counterclockwise from the incoming under-arc, and the sign."""

    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")
        if len(self.arcs) != 4:
            raise ValueError("a crossing has exactly four incident arcs")


@dataclasses.dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram: crossings plus crossing-free circles."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for a in c.arcs:
                counts[a] = counts.get(a, 0) + 1
        bad = {a: k for a, k in counts.items() if k != 2}
        if bad:
            raise ValueError(f"every arc must occur exactly twice; offending arcs: {bad}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def _arc_slots(d: LinkDiagram) -> dict[int, list[tuple[int, int]]]:
    slots: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for k, a in enumerate(c.arcs):
            slots.setdefault(a, []).append((ci, k))
    return slots


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def classes(self) -> int:
        return len({self.find(x) for x in self.parent})


def braid_closure(w: BraidWord) -> LinkDiagram:
    """Trace the standard closure of a braid word, top to bottom.

    Strands are oriented downward; letter i gives a positive crossing where
    the strand entering from position i passes over the one from i+1.
    """
    n = w.strands
    current = list(range(n))
    next_arc = n
    raw: list[tuple[tuple[int, int, int, int], int]] = []
    for e in w.letters:
        i = abs(e) - 1
        a, b = current[i], current[i + 1]
        c, d = next_arc, next_arc + 1
        next_arc += 2
        if e > 0:
            raw.append(((b, a, c, d), 1))
        else:
            raw.append(((a, c, d, b), -1))
        current[i], current[i + 1] = c, d
    uf = _UnionFind()
    for arc in range(next_arc):
        uf.find(arc)
    for pos in range(n):
        uf.union(current[pos], pos)
    touched = {abs(e) - 1 for e in w.letters} | {abs(e) for e in w.letters}
    free_loops = sum(1 for pos in range(n) if pos not in touched)
    used_roots = sorted({uf.find(a) for arcs, _s in raw for a in arcs})
    relabel = {root: idx for idx, root in enumerate(used_roots)}
    crossings = tuple(
        Crossing(tuple(relabel[uf.find(a)] for a in arcs), s) for arcs, s in raw)
    return LinkDiagram(crossings, free_loops)


_CCW = ("TL", "BL", "BR", "TR")
_IN_DIR = {"TL": (1, -1), "TR": (-1, -1), "BL": (1, 1), "BR": (-1, 1)}
_PASS = {"TL": "BR", "BR": "TL", "TR": "BL", "BL": "TR"}


def pretzel_diagram(twists: list[int] | tuple[int, ...]) -> LinkDiagram:
    """Pretzel diagram: vertical twist regions of the given signed sizes,
    joined side by side and closed into a circle.

    In a region with positive count the strand running top-left to
    bottom-right passes over at each crossing; negative counts mirror that.
    """
    twists = tuple(twists)
    if not twists:
        raise ValueError("a pretzel needs at least one twist region")
    for a in twists:
        if not isinstance(a, int) or a == 0:
            raise ValueError(f"twist counts must be nonzero integers, got {a!r}")
    nodes = [(i, k) for i, a in enumerate(twists) for k in range(abs(a))]
    wires: list[frozenset] = []

    def port(i: int, which: str):
        last = abs(twists[i]) - 1
        return {"TL": ((i, 0), "TL"), "TR": ((i, 0), "TR"),
                "BL": ((i, last), "BL"), "BR": ((i, last), "BR")}[which]

    for i, a in enumerate(twists):
        for k in range(abs(a) - 1):
            wires.append(frozenset({((i, k), "BL"), ((i, k + 1), "TL")}))
            wires.append(frozenset({((i, k), "BR"), ((i, k + 1), "TR")}))
    l = len(twists)
    for i in range(l - 1):
        wires.append(frozenset({port(i, "TR"), port(i + 1, "TL")}))
        wires.append(frozenset({port(i, "BR"), port(i + 1, "BL")}))
    wires.append(frozenset({port(0, "TL"), port(l - 1, "TR")}))
    wires.append(frozenset({port(0, "BL"), port(l - 1, "BR")}))

    wire_of: dict[tuple, int] = {}
    other_end: dict[tuple, tuple] = {}
    for idx, wire in enumerate(wires):
        u, v = tuple(wire)
        wire_of[u] = wire_of[v] = idx
        other_end[u], other_end[v] = v, u

    incoming: dict[tuple, bool] = {}
    while len(incoming) < 4 * len(nodes):
        start = next(stub for node in nodes for corner in _CCW
                     if (stub := (node, corner)) not in incoming)
        stub = start
        while True:
            incoming[stub] = True
            node, corner = stub
            out = (node, _PASS[corner])
            incoming[out] = False
            stub = other_end[out]
            if stub == start:
                break

    crossings = []
    for i, a in enumerate(twists):
        for k in range(abs(a)):
            node = (i, k)
            over_pair = ("TL", "BR") if a > 0 else ("TR", "BL")
            under_pair = ("TR", "BL") if a > 0 else ("TL", "BR")
            under_in = next(c for c in under_pair if incoming[(node, c)])
            over_in = next(c for c in over_pair if incoming[(node, c)])
            u, o = _IN_DIR[under_in], _IN_DIR[over_in]
            sign = 1 if u[0] * o[1] - u[1] * o[0] > 0 else -1
            rot = _CCW.index(under_in)
            order = tuple(_CCW[(rot + t) % 4] for t in range(4))
            crossings.append(Crossing(tuple(wire_of[(node, c)] for c in order), sign))
    return LinkDiagram(tuple(crossings))


def writhe(d: LinkDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def is_positive(d: LinkDiagram) -> bool:
    return all(c.sign == 1 for c in d.crossings)


def component_count(d: LinkDiagram) -> int:
    """Number of link components (through-strand tracing)."""
    if not d.crossings:
        return d.free_loops
    uf = _UnionFind()
    for c in d.crossings:
        uf.union(c.arcs[0], c.arcs[2])
        uf.union(c.arcs[1], c.arcs[3])
    return uf.classes() + d.free_loops


def seifert_circle_count(d: LinkDiagram) -> int:
    """Circles left by the orientation-respecting smoothing of every crossing."""
    if not d.crossings:
        return d.free_loops
    uf = _UnionFind()
    for c in d.crossings:
        if c.sign == 1:
            uf.union(c.arcs[0], c.arcs[3])
            uf.union(c.arcs[1], c.arcs[2])
        else:
            uf.union(c.arcs[0], c.arcs[1])
            uf.union(c.arcs[2], c.arcs[3])
    return uf.classes() + d.free_loops


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under strands everywhere, keeping orientations."""
    out = []
    for c in d.crossings:
        a = c.arcs
        if c.sign == 1:
            out.append(Crossing((a[1], a[2], a[3], a[0]), -1))
        else:
            out.append(Crossing((a[3], a[0], a[1], a[2]), 1))
    return LinkDiagram(tuple(out), d.free_loops)


def _is_connected(d: LinkDiagram) -> bool:
    if d.free_loops:
        return not d.crossings and d.free_loops == 1
    if not d.crossings:
        return False
    uf = _UnionFind()
    for ci, c in enumerate(d.crossings):
        uf.find(("x", ci))
        for a in c.arcs:
            uf.union(("x", ci), ("a", a))
    return uf.classes() == 1


def faces(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Complementary regions of the diagram on the sphere.

    Each face is a cyclic list of corners (crossing, k), the quadrant
    between slots k and k+1.  Face tracing follows the arc leaving slot
    k+1 and continues at the landing slot's quadrant.
    """
    slots = _arc_slots(d)

    def across(ci: int, k: int) -> tuple[int, int]:
        a = d.crossings[ci].arcs[k]
        s1, s2 = slots[a]
        return s2 if s1 == (ci, k) else s1

    remaining = {(ci, k) for ci in range(len(d.crossings)) for k in range(4)}
    out: list[list[tuple[int, int]]] = []
    while remaining:
        corner = min(remaining)
        face = []
        while corner in remaining:
            remaining.remove(corner)
            face.append(corner)
            ci, k = corner
            corner = across(ci, (k + 1) % 4)
        out.append(face)
    return out


@dataclasses.dataclass(frozen=True)
class GoeritzData:
    """Checkerboard data: faces, their colors, the reduced white-face matrix
    (one white face deleted), and the orientation correction term."""

    faces: tuple[tuple[tuple[int, int], ...], ...]
    colors: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    correction: int
    deleted_face: int


def goeritz(d: LinkDiagram) -> GoeritzData:
    """Goeritz matrix of the white faces and the signature correction term.

    White is the larger color class of the checkerboard coloring.  At each
    crossing the incidence sign is +1 when the white quadrants are the two
    flanking the over-strand, -1 otherwise; the correction adds the signs
    of the crossings whose crossing sign equals their incidence sign.
    """
    if not _is_connected(d):
        raise ValueError("Goeritz data needs a connected diagram with a crossing")
    face_list = faces(d)
    if len(face_list) != len(d.crossings) + 2:
        raise AssertionError("face count disagrees with Euler's formula; embedding corrupt")
    face_of: dict[tuple[int, int], int] = {}
    for fi, face in enumerate(face_list):
        for corner in face:
            face_of[corner] = fi
    colors: list[int | None] = [None] * len(face_list)
    colors[0] = 0
    queue = [0]
    while queue:
        fi = queue.pop()
        for ci, k in face_list[fi]:
            for neighbor_corner in ((ci, (k + 1) % 4), (ci, (k + 3) % 4)):
                nf = face_of[neighbor_corner]
                if colors[nf] is None:
                    colors[nf] = 1 - colors[fi]
                    queue.append(nf)
                elif colors[nf] == colors[fi]:
                    raise AssertionError("checkerboard coloring failed; embedding corrupt")
    class0 = [fi for fi, col in enumerate(colors) if col == 0]
    class1 = [fi for fi, col in enumerate(colors) if col == 1]
    white_class = 0 if len(class0) >= len(class1) else 1
    white = class0 if white_class == 0 else class1
    white_index = {fi: wi for wi, fi in enumerate(white)}

    m = len(white)
    full = [[0] * m for _ in range(m)]
    correction = 0
    for ci, c in enumerate(d.crossings):
        corner_colors = [colors[face_of[(ci, k)]] for k in range(4)]
        if corner_colors[1] == white_class:
            eta = 1
            white_corners = (1, 3)
        else:
            eta = -1
            white_corners = (0, 2)
        if c.sign == eta:
            correction += c.sign
        f1 = face_of[(ci, white_corners[0])]
        f2 = face_of[(ci, white_corners[1])]
        if f1 != f2:
            i, j = white_index[f1], white_index[f2]
            full[i][j] -= eta
            full[j][i] -= eta
    for i in range(m):
        full[i][i] = -sum(full[i][j] for j in range(m) if j != i)
    reduced = tuple(tuple(full[i][j] for j in range(m) if j != 0) for i in range(m) if i != 0)
    return GoeritzData(
        faces=tuple(tuple(f) for f in face_list),
        colors=tuple("white" if col == white_class else "black" for col in colors),
        matrix=reduced,
        correction=correction,
        deleted_face=white[0],
    )


def signature(d: LinkDiagram) -> int:
    """Signature of the knot presented by the diagram."""
    if component_count(d) != 1:
        raise ValueError("signature is only computed for single-component diagrams")
    if not d.crossings:
        return 0
    data = goeritz(d)
    return symmetric_signature(data.matrix) - data.correction


def determinant(d: LinkDiagram) -> int:
    """Link determinant, the order (or 0) of the first homology of the
    double branched cover."""
    if not d.crossings:
        return 1 if d.free_loops == 1 else 0
    if not _is_connected(d):
        return 0
    data = goeritz(d)
    return abs(integer_determinant(data.matrix))


def to_pd_text(d: LinkDiagram) -> str:
    """One crossing per line: X a b c d s with s in {+, -}."""
    if d.free_loops:
        raise ValueError("crossing-free circles have no PD representation")
    lines = []
    for c in d.crossings:
        s = "+" if c.sign == 1 else "-"
        lines.append("X " + " ".join(str(a) for a in c.arcs) + f" {s}")
    return "\n".join(lines) + ("\n" if lines else "")


def from_pd_text(text: str) -> LinkDiagram:
    """Parse the X-line format produced by to_pd_text."""
    crossings = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "X" or len(parts) != 6:
            raise ValueError(f"line {lineno}: expected 'X a b c d s', got {line!r}")
        try:
            arcs = tuple(int(tok) for tok in parts[1:5])
        except ValueError:
            raise ValueError(f"line {lineno}: arc labels must be integers") from None
        if parts[5] not in ("+", "-"):
            raise ValueError(f"line {lineno}: sign must be '+' or '-', got {parts[5]!r}")
        crossings.append(Crossing(arcs, 1 if parts[5] == "+" else -1))
    return LinkDiagram(tuple(crossings))
