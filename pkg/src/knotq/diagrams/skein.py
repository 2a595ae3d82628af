"""The Q polynomial by skein recursion over descending diagrams.

At a crossing, ``Q(D) + Q(D') = z (Q(D_0) + Q(D_inf))`` where ``D'`` is the
switched diagram and ``D_0``, ``D_inf`` are the two smoothings. A diagram
in which every crossing is first reached on its over-strand (components
stacked in traversal order) is an unlink, worth ``mu**(k-1)`` with
``mu = 2/z - 1``.

For a diagram we switch its violating crossings one after the other, in
traversal order, so the chain ends in a descending diagram and every other
term has fewer crossings. Connected pieces are memoized on a canonical form
that is invariant under relabeling, reflection of the plane and switching
all crossings (``Q`` is insensitive to mirror images).
"""

from __future__ import annotations

import os
import sys
import threading
from dataclasses import dataclass
from typing import NamedTuple

from ..laurent import Z, LaurentPoly, eval_int
from .pd import LinkDiagram, SMOOTH_A, SMOOTH_B, _erase, simplify, split_pieces

__all__ = [
    "BudgetExceeded",
    "QResult",
    "SkeinEngine",
    "q_polynomial",
    "q_at_minus_one",
    "unlink_value",
    "canonical_form",
    "DEFAULT_BUDGET",
]

MU = LaurentPoly({-1: 2, 0: -1})
DEFAULT_BUDGET = int(os.environ.get("KNOTQ_BUDGET", 10**7))


class BudgetExceeded(RuntimeError):
    """The skein expansion needed more nodes than allowed."""


@dataclass(frozen=True)
class QResult:
    poly: LaurentPoly
    nodes_expanded: int
    cache_hits: int


class QAtMinusOne(NamedTuple):
    value: int
    exponent: int | None  # m with value == (-3)**m, None if no such m


def unlink_value(k: int) -> LaurentPoly:
    if k < 1:
        raise ValueError("an unlink has at least one component")
    return MU ** (k - 1)


# -- canonical form ----------------------------------------------------------

def _variants(cs):
    yield cs
    yield tuple((b, c, d, a) for a, b, c, d in cs)  # all crossings switched
    yield tuple((a, d, c, b) for a, b, c, d in cs)  # plane reflected
    yield tuple((b, a, d, c) for a, b, c, d in cs)  # both


def _walk(cs, occ, start):
    """Label edges in traversal order from the entry slot ``start``.

    Further components start at the earliest visited crossing that still has
    an untraversed strand, entering counterclockwise-next to the first entry.
    Returns the label map, the visits ``(crossing, entry slot)`` and the
    number of components.
    """
    labels: dict[int, int] = {}
    visits: list[tuple[int, int]] = []
    first_entry: dict[int, int] = {}
    done: set[tuple[int, int]] = set()
    nxt = 1
    order = []
    entry = start
    components = 0
    total = 4 * len(cs)
    while True:
        i, p = entry
        lab = cs[i][p]
        components += 1
        while (i, p) not in done:
            if lab not in labels:
                labels[lab] = nxt
                nxt += 1
            done.add((i, p))
            q = (p + 2) % 4
            done.add((i, q))
            visits.append((i, p))
            if i not in first_entry:
                first_entry[i] = p
                order.append(i)
            lab = cs[i][q]
            a, b = occ[lab]
            i, p = b if a == (i, q) else a
        if len(done) == total:
            return labels, visits, components
        for i in order:
            p = (first_entry[i] + 1) % 4
            if (i, p) not in done:
                entry = (i, p)
                break
        else:  # pragma: no cover - only for disconnected input
            raise ValueError("canonical form needs a connected diagram")


def _crossing_key(c):
    return min(c, (c[2], c[3], c[0], c[1]))


def canonical_form(cs: tuple) -> tuple[tuple, list[tuple[int, bool]], int]:
    """Canonical crossing tuple of a connected diagram, its traversal as
    ``(index into the canonical tuple, passes over)`` and its component
    count."""
    best = None
    for var in _variants(cs):
        occ: dict[int, list] = {}
        for i, c in enumerate(var):
            for p, lab in enumerate(c):
                occ.setdefault(lab, []).append((i, p))
        for i in range(len(var)):
            for p in range(4):
                labels, visits, ncomp = _walk(var, occ, (i, p))
                relab = [tuple(labels[x] for x in c) for c in var]
                key = tuple(sorted(_crossing_key(c) for c in relab))
                if best is None or key < best[0]:
                    best = (key, relab, visits, ncomp)
    key, relab, visits, ncomp = best
    index = {c: k for k, c in enumerate(key)}
    seq = []
    for i, p in visits:
        c = relab[i]
        k = index[_crossing_key(c)]
        # slot parity is unchanged by the 2-slot rotation in _crossing_key
        seq.append((k, p % 2 == 1))
    return key, seq, ncomp


# -- engine ------------------------------------------------------------------

class SkeinEngine:
    """Memoizing evaluator. The memo is shared by every call on this engine;
    inserts are guarded so concurrent callers see a consistent table."""

    def __init__(self, budget: int = DEFAULT_BUDGET, reduce: bool = True):
        self.budget = budget
        self.reduce = reduce
        self.memo: dict[tuple, LaurentPoly] = {}
        self._lock = threading.Lock()

    def evaluate(self, d: LinkDiagram, budget: int | None = None) -> QResult:
        budget = self.budget if budget is None else budget
        self._nodes = 0
        self._hits = 0
        self._limit = budget
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 20000))
        try:
            poly = self._q(d)
        finally:
            sys.setrecursionlimit(old)
        return QResult(poly, self._nodes, self._hits)

    def _q(self, d: LinkDiagram) -> LaurentPoly:
        if self.reduce:
            d = simplify(d)
        pieces = split_pieces(d)
        result = MU ** (len(pieces) - 1)
        for piece in pieces:
            if piece.crossings:
                result = result * self._q_connected(piece.crossings)
        return result

    def _q_connected(self, cs: tuple) -> LaurentPoly:
        key, seq, n_components = canonical_form(cs)
        cached = self.memo.get(key)
        if cached is not None:
            self._hits += 1
            return cached
        self._nodes += 1
        if self._nodes > self._limit:
            raise BudgetExceeded(f"skein expansion exceeded {self._limit} nodes")

        seen: set[int] = set()
        violating = []
        for k, over in seq:
            if k not in seen:
                seen.add(k)
                if not over:
                    violating.append(k)

        cur = list(key)
        total = LaurentPoly()
        sign = 1
        for x in violating:
            base = LinkDiagram(tuple(cur))
            s0 = _erase(base, {x: SMOOTH_A})
            s1 = _erase(base, {x: SMOOTH_B})
            term = Z * (self._q(s0) + self._q(s1))
            total = total + term if sign > 0 else total - term
            a, b, c, e = cur[x]
            cur[x] = (b, c, e, a)
            sign = -sign
        tail = MU ** (n_components - 1)
        total = total + tail if sign > 0 else total - tail

        with self._lock:
            self.memo.setdefault(key, total)
        return total


_default_engine: SkeinEngine | None = None


def default_engine() -> SkeinEngine:
    global _default_engine
    if _default_engine is None:
        _default_engine = SkeinEngine()
    return _default_engine


def q_polynomial(
    d: LinkDiagram, budget: int | None = None, engine: SkeinEngine | None = None
) -> QResult:
    """Q polynomial of ``d``; raises :class:`BudgetExceeded` past ``budget``
    expanded nodes."""
    engine = engine or default_engine()
    return engine.evaluate(d, budget)


def q_at_minus_one(q: LaurentPoly) -> QAtMinusOne:
    """Exact ``Q(-1)`` and the exponent ``m`` with ``Q(-1) == (-3)**m``."""
    value = eval_int(q, -1)
    if value.denominator != 1:
        raise ValueError(f"Q(-1) = {value} is not an integer")
    v = int(value)
    m = 0
    rest = v
    while rest not in (0, 1) and rest % 3 == 0:
        rest //= -3
        m += 1
    return QAtMinusOne(v, m if rest == 1 else None)
