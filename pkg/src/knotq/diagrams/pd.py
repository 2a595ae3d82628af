"""Planar-diagram (PD) codes for knot and link diagrams.

A crossing is a 4-tuple of edge labels listed counterclockwise. The strand
through slots 0 and 2 passes *under*, the strand through slots 1 and 3 passes
over. Rotating a tuple by one slot therefore switches the crossing.

Crossingless unknotted components carry no labels; they are counted in
``LinkDiagram.loops``.
"""

from __future__ import annotations

import random
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "PDError",
    "LinkDiagram",
    "SignedGaussSequence",
    "parse_pd",
    "parse_pd_file",
    "render_pd",
    "gauss_sequence",
    "bridge_length",
    "bridges",
    "simplify",
    "split_pieces",
    "add_curl",
    "add_clasp",
    "perturb",
    "faces",
]

Crossing = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, position 0..3)


class PDError(ValueError):
    """Malformed or non-planar PD input."""


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    loops: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))

    @property
    def crossing_number(self) -> int:
        return len(self.crossings)

    @property
    def labels(self) -> set[int]:
        return {lab for c in self.crossings for lab in c}

    @property
    def components(self) -> int:
        return len(strand_cycles(self)) + self.loops

    def occurrences(self) -> dict[int, list[Slot]]:
        occ: dict[int, list[Slot]] = defaultdict(list)
        for i, c in enumerate(self.crossings):
            for p, lab in enumerate(c):
                occ[lab].append((i, p))
        return occ

    def switch(self, indices: Iterable[int]) -> LinkDiagram:
        idx = set(indices)
        cs = tuple(c[1:] + c[:1] if i in idx else c for i, c in enumerate(self.crossings))
        return LinkDiagram(cs, self.loops, self.name)

    def mirror(self) -> LinkDiagram:
        return self.switch(range(len(self.crossings)))

    def __str__(self) -> str:
        return render_pd(self)


@dataclass(frozen=True)
class SignedGaussSequence:
    """Per component, the cyclic list of ``(crossing index, is_over)`` visits."""

    components: tuple[tuple[tuple[int, bool], ...], ...]

    def flags(self) -> list[str]:
        return ["".join("O" if over else "U" for _, over in comp) for comp in self.components]

    def __len__(self) -> int:
        return sum(len(c) for c in self.components)


# -- parsing -----------------------------------------------------------------

_GROUP = re.compile(r"(-?)\s*X\s*[\(\[]\s*([^\)\]]*)[\)\]]")
_TOKEN = re.compile(r"-?\s*X\s*[\(\[][^\)\]]*[\)\]]|O\b|\S+")


def parse_pd(text: str) -> LinkDiagram:
    """Parse one diagram line ``name: X(a,b,c,d) X(...) ...``.

    A leading ``-`` on a group swaps which strand is over. A bare ``O``
    token adds a crossingless component; a line without any group is the
    0-crossing unknot.
    """
    line = text.strip()
    name = ""
    head, sep, rest = line.partition(":")
    if sep and "X" not in head and "(" not in head:
        name, line = head.strip(), rest.strip()
    crossings: list[Crossing] = []
    loops = 0
    for tok in _TOKEN.findall(line):
        tok = tok.strip()
        if tok == "O":
            loops += 1
            continue
        m = _GROUP.fullmatch(tok)
        if m is None:
            raise PDError(f"malformed crossing group {tok!r}")
        parts = [p.strip() for p in m.group(2).split(",")]
        if len(parts) != 4:
            raise PDError(f"crossing group {tok!r} does not have four edge labels")
        try:
            labs = tuple(int(p) for p in parts)
        except ValueError:
            raise PDError(f"non-integer edge label in {tok!r}") from None
        if m.group(1):
            labs = labs[1:] + labs[:1]
        crossings.append(labs)
    if not crossings and loops == 0:
        loops = 1
    d = LinkDiagram(tuple(crossings), loops, name)
    validate(d)
    return d


def parse_pd_file(text: str) -> list[LinkDiagram]:
    out = []
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            out.append(parse_pd(line))
    return out


def render_pd(d: LinkDiagram, name: str | None = None) -> str:
    groups = [f"X({a},{b},{c},{e})" for a, b, c, e in d.crossings]
    if d.crossings or d.loops > 1:
        groups += ["O"] * d.loops
    label = d.name if name is None else name
    body = " ".join(groups)
    return f"{label}: {body}".rstrip() if label else body


def validate(d: LinkDiagram) -> None:
    occ = d.occurrences()
    for lab, slots in occ.items():
        if len(slots) != 2:
            raise PDError(f"edge label {lab} occurs {len(slots)} time(s); expected exactly 2")
    for piece in split_pieces(d, keep_loops=False):
        n = len(piece.crossings)
        nfaces = len(faces(piece))
        if n - 2 * n + nfaces != 2:
            raise PDError(f"PD code is not planar (Euler characteristic {n - 2 * n + nfaces})")


# -- combinatorics -----------------------------------------------------------

def _partner(occ: dict[int, list[Slot]], lab: int, slot: Slot) -> Slot:
    a, b = occ[lab]
    return b if a == slot else a


def faces(d: LinkDiagram) -> list[list[Slot]]:
    """Faces as lists of darts; the face lies left of each dart's edge.

    A dart ``(i, p)`` leaves crossing ``i`` along the edge in slot ``p``.
    """
    occ = d.occurrences()
    seen: set[Slot] = set()
    out = []
    for i in range(len(d.crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            face = []
            h = (i, p)
            while h not in seen:
                seen.add(h)
                face.append(h)
                j, q = _partner(occ, d.crossings[h[0]][h[1]], h)
                h = (j, (q - 1) % 4)
            out.append(face)
    return out


def strand_cycles(d: LinkDiagram, starts: Sequence[Slot] | None = None) -> list[list[Slot]]:
    """Walk each component; returns the entry slots visited, in order.

    Each component starts by entering the crossing slot given in ``starts``
    (if any), otherwise at the lowest unvisited label, entering at an
    occurrence in slot 0 when there is one (the usual "incoming under"
    convention of PD tables).
    """
    occ = d.occurrences()
    visited: set[Slot] = set()
    cycles = []
    pending = list(starts or [])
    while True:
        if pending:
            start = pending.pop(0)
            if start in visited:
                continue
        else:
            free = sorted(lab for lab, sl in occ.items() if not (set(sl) & visited))
            if not free:
                break
            lab = free[0]
            a, b = sorted(occ[lab])
            if a[1] == 0 or b[1] == 0:
                start = a if a[1] == 0 else b
            elif a[1] == 2 or b[1] == 2:
                # the under strand leaves through slot 2, so enter at the other end
                start = b if a[1] == 2 else a
            else:
                start = a
        cyc = []
        h = start
        while h not in visited:
            visited.add(h)
            cyc.append(h)
            i, p = h
            out_slot = (i, (p + 2) % 4)
            visited.add(out_slot)
            h = _partner(occ, d.crossings[i][(p + 2) % 4], out_slot)
        cycles.append(cyc)
    return cycles


def gauss_sequence(d: LinkDiagram) -> SignedGaussSequence:
    comps = []
    for cyc in strand_cycles(d):
        comps.append(tuple((i, p % 2 == 1) for i, p in cyc))
    return SignedGaussSequence(tuple(comps))


def bridges(d: LinkDiagram) -> list[tuple[int, int, int]]:
    """Maximal runs of equal over/under flags as ``(component, start, length)``.

    A component whose flags never change (possible only in links) is one run
    covering the whole component.
    """
    out = []
    for ci, comp in enumerate(gauss_sequence(d).components):
        flags = [over for _, over in comp]
        m = len(flags)
        if m == 0:
            continue
        breaks = [t for t in range(m) if flags[t] != flags[t - 1]]
        if not breaks:
            out.append((ci, 0, m))
            continue
        for k, b in enumerate(breaks):
            nxt = breaks[(k + 1) % len(breaks)]
            out.append((ci, b, (nxt - b) % m or m))
    return out


def bridge_length(d: LinkDiagram) -> int:
    runs = bridges(d)
    return max((length for _, _, length in runs), default=0)


def _erase(d: LinkDiagram, removals: dict[int, Sequence[tuple[int, int]]]) -> LinkDiagram:
    """Delete crossings, joining the loose ends of each removed crossing as
    given by its slot pairs; closed-up strands become free loops."""
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for i, pairs in removals.items():
        c = d.crossings[i]
        for p, q in pairs:
            a, b = find(c[p]), find(c[q])
            touched.update((c[p], c[q]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    kept = [c for i, c in enumerate(d.crossings) if i not in removals]
    remaining = {lab for c in kept for lab in c}
    roots_alive = {find(lab) for lab in remaining if lab in parent}
    new_loops = len({find(lab) for lab in touched} - roots_alive)
    cs = tuple(tuple(find(lab) if lab in parent else lab for lab in c) for c in kept)
    return LinkDiagram(cs, d.loops + new_loops, d.name)


STRAIGHT = ((0, 2), (1, 3))
SMOOTH_A = ((0, 1), (2, 3))
SMOOTH_B = ((0, 3), (1, 2))


def smoothings(d: LinkDiagram, i: int) -> tuple[LinkDiagram, LinkDiagram]:
    return _erase(d, {i: SMOOTH_A}), _erase(d, {i: SMOOTH_B})


def _find_curl(d: LinkDiagram) -> int | None:
    for i, c in enumerate(d.crossings):
        for p in range(4):
            if c[p] == c[(p + 1) % 4]:
                return i
    return None


def _find_clasp(d: LinkDiagram) -> tuple[int, int] | None:
    occ = d.occurrences()
    for face in faces(d):
        if len(face) != 2:
            continue
        (i, p), (j, q) = face
        if i == j:
            continue
        e, f = d.crossings[i][p], d.crossings[j][q]
        if e == f:
            continue
        # e runs from i to j; removable when e is on the same level at both ends
        (a, pa), (b, pb) = occ[e]
        if pa % 2 == pb % 2:
            return i, j
    return None


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Remove curls (R1) and same-level bigons (R2) until none remain."""
    while True:
        i = _find_curl(d)
        if i is not None:
            d = _erase(d, {i: STRAIGHT})
            continue
        pair = _find_clasp(d)
        if pair is not None:
            d = _erase(d, {pair[0]: STRAIGHT, pair[1]: STRAIGHT})
            continue
        return d


def split_pieces(d: LinkDiagram, keep_loops: bool = True) -> list[LinkDiagram]:
    """Connected pieces of the diagram; each free loop is its own piece."""
    n = len(d.crossings)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for slots in d.occurrences().values():
        (a, _), (b, _) = slots[0], slots[-1]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[Crossing]] = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(d.crossings[i])
    pieces = [LinkDiagram(tuple(g), 0, d.name) for _, g in sorted(groups.items())]
    if keep_loops:
        pieces += [LinkDiagram((), 1, d.name) for _ in range(d.loops)]
    return pieces


def is_alternating(d: LinkDiagram) -> bool:
    return all(
        all(comp[t][1] != comp[t - 1][1] for t in range(len(comp)))
        for comp in gauss_sequence(d).components
    )


# -- orientation -------------------------------------------------------------

def oriented_slots(d: LinkDiagram) -> dict[Slot, bool]:
    """``True`` for slots whose edge points into the crossing, along the
    traversal of :func:`strand_cycles`."""
    incoming = {}
    for cyc in strand_cycles(d):
        for i, p in cyc:
            incoming[(i, p)] = True
            incoming[(i, (p + 2) % 4)] = False
    return incoming


def crossing_signs(d: LinkDiagram) -> list[int]:
    """Right-handed crossings are +1: the over strand leaves through the slot
    just counterclockwise of where the under strand enters."""
    inc = oriented_slots(d)
    signs = []
    for i in range(len(d.crossings)):
        u_in = 0 if inc[(i, 0)] else 2
        o_out = 1 if not inc[(i, 1)] else 3
        signs.append(1 if o_out == (u_in + 1) % 4 else -1)
    return signs


# -- Reidemeister insertions -------------------------------------------------

def _fresh(d: LinkDiagram, k: int) -> list[int]:
    top = max(d.labels, default=0)
    return list(range(top + 1, top + 1 + k))


def _relabel_slot(cs: list[list[int]], slot: Slot, lab: int) -> None:
    cs[slot[0]][slot[1]] = lab


def add_curl(d: LinkDiagram, edge: int | None, rotation: int = 0, side: int = 0) -> LinkDiagram:
    """Insert a one-crossing kink on ``edge`` (or on a free loop if ``None``)."""
    if edge is None:
        if d.loops == 0:
            raise ValueError("no free loop to put a curl on")
        a, b = _fresh(d, 2)
        base = [a, b, b, a] if side == 0 else [a, a, b, b]
        new = tuple(base[rotation:] + base[:rotation])
        return LinkDiagram(d.crossings + (new,), d.loops - 1, d.name)
    occ = d.occurrences()
    if edge not in occ:
        raise ValueError(f"no edge {edge}")
    loop, tail = _fresh(d, 2)
    cs = [list(c) for c in d.crossings]
    _relabel_slot(cs, occ[edge][1], tail)
    base = [edge, loop, loop, tail] if side == 0 else [edge, tail, loop, loop]
    new = base[rotation:] + base[:rotation]
    cs.append(new)
    return LinkDiagram(tuple(tuple(c) for c in cs), d.loops, d.name)


def add_clasp(d: LinkDiagram, dart_e: Slot, dart_f: Slot, e_over: bool) -> LinkDiagram:
    """Push the edge of ``dart_e`` across the edge of ``dart_f`` (R2).

    Both darts must bound the same face (face to their left), on distinct
    edges.
    """
    occ = d.occurrences()
    e = d.crossings[dart_e[0]][dart_e[1]]
    f = d.crossings[dart_f[0]][dart_f[1]]
    if e == f:
        raise ValueError("clasp needs two distinct edges")
    e2, f2, e_mid, f_mid = _fresh(d, 4)
    cs = [list(c) for c in d.crossings]
    _relabel_slot(cs, _partner(occ, e, dart_e), e2)
    _relabel_slot(cs, _partner(occ, f, dart_f), f2)
    # e runs A->B along the bottom of the face, f runs C->D along the top;
    # the finger of e crosses f first at x (near D) and then at y (near C)
    x = [e, f_mid, e_mid, f2]
    y = [e2, f, e_mid, f_mid]
    if e_over:
        x, y = x[1:] + x[:1], y[1:] + y[:1]
    cs += [x, y]
    return LinkDiagram(tuple(tuple(c) for c in cs), d.loops, d.name)


def perturb(d: LinkDiagram, rng: random.Random, moves: int = 3) -> LinkDiagram:
    """Apply ``moves`` random curl/clasp insertions."""
    for _ in range(moves):
        if not d.crossings:
            if d.loops == 0:
                return d
            d = add_curl(d, None, rng.randrange(4), rng.randrange(2))
            continue
        if rng.random() < 0.5:
            edge = rng.choice(sorted(d.labels))
            d = add_curl(d, edge, rng.randrange(4), rng.randrange(2))
            continue
        options = []
        for face in faces(d):
            for a in range(len(face)):
                for b in range(len(face)):
                    ea = d.crossings[face[a][0]][face[a][1]]
                    eb = d.crossings[face[b][0]][face[b][1]]
                    if a != b and ea != eb:
                        options.append((face[a], face[b]))
        if not options:
            edge = rng.choice(sorted(d.labels))
            d = add_curl(d, edge, rng.randrange(4), rng.randrange(2))
            continue
        da, db = rng.choice(options)
        d = add_clasp(d, da, db, rng.random() < 0.5)
    return d
