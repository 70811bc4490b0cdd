"""Independent cross-check oracles for the test suite.

Computation routes that share no code with the package:

* torus_sigma: torus knot signatures from the eigenvalue count of the
  Brieskorn form of x^p + y^q + z^2 (the double branched cover of the
  pushed-in fiber surface), each eigenvalue contributing the sign read
  off from i/p + j/q + 1/2 mod 2;
* goeritz_det: determinant recomputed from the PD text alone: faces
  traced on half-edges, checkerboard colored, Goeritz matrix of one
  color class eliminated over the rationals.
"""

from __future__ import annotations

from fractions import Fraction


def torus_sigma(p: int, q: int) -> int:
    """Signature of the (p, q) torus knot by the Brieskorn eigenvalue count.

    Cross-checks: reproduces -2 for the trefoil, -8 for (3,5) (the E8
    form), and -(q-1) along the (2, q) family.
    """
    s = 0
    for i in range(1, p):
        for j in range(1, q):
            x = (Fraction(i, p) + Fraction(j, q) + Fraction(1, 2)) % 2
            assert x != 0 and x != 1, (p, q, i, j)
            s += 1 if x < 1 else -1
    return s


# ---------------------------------------------------------------------------
# Brute-force Goeritz determinant from PD text.
#
# Lines "X a b c d s": four arc labels counterclockwise from the incoming
# under-arc, sign s.  Faces are traced on half-edges with the ccw slot
# order as the rotation system; coloring propagates across arcs.


def _parse_pd(text: str) -> list[tuple[list[int], int]]:
    crossings = []
    for line in text.strip().splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] != "X" or len(parts) != 6:
            raise ValueError(f"bad PD line: {line!r}")
        arcs = [int(p) for p in parts[1:5]]
        crossings.append((arcs, 1 if parts[5] == "+" else -1))
    return crossings


def _faces(crossings: list[tuple[list[int], int]]) -> list[list[tuple[int, int]]]:
    # Half-edge (ci, k): the corner of crossing ci between slots k, k+1.
    # Walking a face: from corner (ci, k), leave along the arc in slot
    # (k + 1), arrive at its other endpoint (cj, l), continue at corner
    # (cj, l).  Every corner lies on exactly one face.
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, (arcs, _) in enumerate(crossings):
        for k, a in enumerate(arcs):
            ends.setdefault(a, []).append((ci, k))
    unvisited = {(ci, k) for ci in range(len(crossings)) for k in range(4)}
    out = []
    while unvisited:
        corner = min(unvisited)
        face = []
        while corner in unvisited:
            unvisited.remove(corner)
            face.append(corner)
            ci, k = corner
            arc = crossings[ci][0][(k + 1) % 4]
            first, second = ends[arc]
            corner = second if first == (ci, (k + 1) % 4) else first
        out.append(face)
    return out


def goeritz_det(pd_text: str) -> int:
    crossings = _parse_pd(pd_text)
    if not crossings:
        return 1
    faces = _faces(crossings)
    corner_face = {c: fi for fi, f in enumerate(faces) for c in f}

    color = {0: 0}
    queue = [0]
    while queue:
        f = queue.pop()
        for ci, k in faces[f]:
            # corners k and k+1 of a crossing are across one strand
            other = corner_face[(ci, (k + 1) % 4)]
            if other not in color:
                color[other] = 1 - color[f]
                queue.append(other)
            elif color[other] == color[f]:
                raise AssertionError("diagram faces are not checkerboard colorable")
    white = sorted(f for f in color if color[f] == 0)
    pos = {f: i for i, f in enumerate(white)}

    g = [[Fraction(0)] * len(white) for _ in white]
    for ci, (arcs, _) in enumerate(crossings):
        # white corners sit on one diagonal; eta says which
        pair = (corner_face[(ci, 0)], corner_face[(ci, 2)])
        if color[pair[0]] == 0:
            eta = 1
        else:
            pair = (corner_face[(ci, 1)], corner_face[(ci, 3)])
            eta = -1
        u, w = pos[pair[0]], pos[pair[1]]
        if u == w:
            continue
        g[u][w] -= eta
        g[w][u] -= eta
        g[u][u] += eta
        g[w][w] += eta
    # delete the row and column of the last white face, take |det|
    m = len(white) - 1
    a = [row[:m] for row in g[:m]]
    det = Fraction(1)
    for k in range(m):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, m) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, m):
            f = a[i][k] / a[k][k]
            for j in range(k, m):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return abs(int(det))


def _braid_loops(letters: tuple[int, ...]) -> list[tuple[int, int, int]]:
    occurrences: dict[int, list[int]] = {}
    for pos, e in enumerate(letters):
        assert e > 0, "Seifert matrix route needs a positive braid word"
        occurrences.setdefault(e, []).append(pos)
    loops = []
    for i in sorted(occurrences):
        ps = occurrences[i]
        for a in range(len(ps) - 1):
            loops.append((i, ps[a], ps[a + 1]))
    return loops


def _symmetric_sig_det(rows: list[list[int]]) -> tuple[int, int]:
    """Signature and determinant of a symmetric integer matrix by exact
    congruence diagonalization (symmetric row+column elimination)."""
    m = len(rows)
    a = [[Fraction(rows[i][j]) for j in range(m)] for i in range(m)]
    signature = 0
    det = Fraction(1)

    def eliminate(mat: list[list[Fraction]]):
        nonlocal signature, det
        k = len(mat)
        if k == 0:
            return
        pivot = next((i for i in range(k) if mat[i][i] != 0), None)
        if pivot is None:
            spot = next(((i, j) for i in range(k) for j in range(i + 1, k)
                         if mat[i][j] != 0), None)
            if spot is None:
                det *= 0
                return
            i, j = spot
            for c in range(k):
                mat[i][c] += mat[j][c]
            for r in range(k):
                mat[r][i] += mat[r][j]
            eliminate(mat)
            return
        if pivot != 0:
            mat[0], mat[pivot] = mat[pivot], mat[0]
            for r in range(k):
                mat[r][0], mat[r][pivot] = mat[r][pivot], mat[r][0]
        d = mat[0][0]
        signature += 1 if d > 0 else -1
        det *= d
        eliminate([[mat[i][j] - mat[i][0] * mat[0][j] / d
                    for j in range(1, k)] for i in range(1, k)])

    eliminate(a)
    assert det.denominator == 1
    return signature, abs(int(det))


def braid_seifert_sigma(letters: tuple[int, ...]) -> tuple[int, int]:
    """Signature and determinant of a positive braid closure via the
    symmetrized Seifert form of the fiber surface.

    Basis loops run between consecutive occurrences of each generator.
    Self-pairing is -2 (positive Hopf band); loops sharing a band pair to
    +1; loops of adjacent generators pair to -1 or +1 when their position
    intervals interleave, the sign depending on which endpoint is inside.
    The convention is pinned by the torus grid: any consistent choice is
    congruent, and this one reproduces torus_sigma on all coprime (p, q)
    with p <= 5, q <= 8 and the determinants of the same closures.
    """
    loops = _braid_loops(tuple(letters))
    m = len(loops)
    s = [[0] * m for _ in range(m)]
    for x in range(m):
        s[x][x] = -2
    for x in range(m):
        i, lo_x, hi_x = loops[x]
        for y in range(x + 1, m):
            j, lo_y, hi_y = loops[y]
            value = 0
            if i == j and lo_y == hi_x:
                value = 1
            elif abs(i - j) == 1:
                inside_lo = lo_x < lo_y < hi_x
                inside_hi = lo_x < hi_y < hi_x
                if inside_lo != inside_hi:
                    value = 1 if inside_lo else -1
            s[x][y] = s[y][x] = value
    return _symmetric_sig_det(s)
