"""Knot signature from a checkerboard coloring.

The Goeritz form of the white regions, corrected by the Gordon-Litherland
term, gives ``sigma = sign(G) - mu``. White is the face to the left of the
edge labelled 1, walked along the diagram's orientation. Signs follow the
convention in which the positive (right-handed) trefoil has ``sigma = -2``.
"""

from __future__ import annotations

from fractions import Fraction

from .pd import LinkDiagram, faces, oriented_slots

__all__ = ["signature", "goeritz_matrix", "matrix_signature"]


def _coloring(d: LinkDiagram):
    """Face index of each dart and the set of white faces."""
    fs = faces(d)
    face_of = {h: k for k, f in enumerate(fs) for h in f}
    n = len(d.crossings)
    # corners p and p+1 at a crossing always have opposite colors
    color = {0: 0}
    stack = [0]
    adj: dict[int, set[int]] = {k: set() for k in range(len(fs))}
    for i in range(n):
        for p in range(4):
            a, b = face_of[(i, p)], face_of[(i, (p + 1) % 4)]
            adj[a].add(b)
            adj[b].add(a)
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
    inc = oriented_slots(d)
    first = min(d.labels)
    tail = next(
        (i, p) for i, c in enumerate(d.crossings) for p, lab in enumerate(c)
        if lab == first and not inc[(i, p)]
    )
    white_color = color[face_of[tail]]
    white = sorted(f for f, col in color.items() if col == white_color)
    return face_of, white, inc


def goeritz_matrix(d: LinkDiagram) -> tuple[list[list[int]], int]:
    """Reduced Goeritz matrix and the correction term ``mu``."""
    face_of, white, inc = _coloring(d)
    index = {f: k for k, f in enumerate(white)}
    m = len(white)
    g = [[0] * m for _ in range(m)]
    mu = 0
    for i in range(len(d.crossings)):
        w = 0 if face_of[(i, 0)] in index else 1
        a, b = index[face_of[(i, w)]], index[face_of[(i, w + 2)]]
        eta = 1 if w == 0 else -1
        if a != b:
            g[a][a] += eta
            g[b][b] += eta
            g[a][b] -= eta
            g[b][a] -= eta
        # the oriented smoothing cuts off the corner between incoming under
        # and outgoing over, and the opposite one; a crossing counts towards
        # mu when those are the white corners
        u_in = 0 if inc[(i, 0)] else 2
        o_out = 1 if not inc[(i, 1)] else 3
        cut = u_in if o_out == (u_in + 1) % 4 else o_out
        if cut % 2 == w:
            mu += eta
    reduced = [row[1:] for row in g[1:]]
    return reduced, mu


def matrix_signature(mat: list[list[int]]) -> int:
    """Signature of a symmetric integer matrix by exact congruence
    diagonalization (paired row and column operations)."""
    a = [[Fraction(x) for x in row] for row in mat]
    active = list(range(len(a)))
    sig = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for c in active:
                a[i][c] += a[j][c]
            for c in active:
                a[c][i] += a[c][j]
            piv = i
        p = a[piv][piv]
        sig += 1 if p > 0 else -1
        for r in active:
            if r == piv or a[r][piv] == 0:
                continue
            f = a[r][piv] / p
            for c in active:
                a[r][c] -= f * a[piv][c]
            for c in active:
                a[c][r] -= f * a[c][piv]
        active.remove(piv)
    return sig


def signature(d: LinkDiagram) -> int:
    """Signature of a knot diagram; links are rejected."""
    if d.components != 1:
        raise ValueError("signature is implemented for knots only")
    if not d.crossings:
        return 0
    g, mu = goeritz_matrix(d)
    return matrix_signature(g) - mu
