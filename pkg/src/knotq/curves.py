"""Open plane curves as double-occurrence words.

A curve with ``n`` crossings is a word of length ``2n`` listing crossings
in the order the curve passes them. Cutting the curve at its crossings
gives ``2n + 1`` segments; segment ``k`` runs from visit ``k - 1`` to visit
``k`` (segment 0 starts at the first endpoint, segment ``2n`` ends at the
second). A dart ``(k, 0)`` is the tail end of segment ``k`` and ``(k, 1)``
its head end.

At a crossing with visits ``t1 < t2`` one bit fixes the counterclockwise
order of its four darts::

    +1: in1, in2, out1, out2
    -1: in1, out2, out1, in2

where ``in`` is the head of the segment arriving at a visit and ``out`` the
tail of the segment leaving it. A choice of bits is a realization when the
resulting map is planar, which for a connected curve means exactly
``n + 1`` faces.

The distance of a curve is the fewest segments an arc from one endpoint to
the other has to cross. It is a shortest path in the dual graph.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CurveError",
    "NotRealizable",
    "NotComposable",
    "OpenGaussCode",
    "PlanarCurveMap",
    "RegionGraph",
    "CurveDecomposition",
    "LemmaReport",
    "parse_open_gauss",
    "normalize",
    "realize",
    "realizations",
    "regions",
    "distance",
    "is_composite",
    "connected_sum",
    "connected_sum_map",
    "reverse_map",
    "reflect_map",
    "has_isolated_crossing",
    "reduce_isolated",
    "canonical_word",
    "enumerate_codes",
    "enumerate_curves",
    "verify_lemma_bounds",
    "curve2_chain",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 6

Dart = tuple[int, int]


class CurveError(ValueError):
    pass


class NotRealizable(CurveError):
    def __init__(self, code: OpenGaussCode):
        super().__init__(f"no planar realization of {code}")
        self.code = code


class NotComposable(CurveError):
    pass


def normalize(word: Iterable) -> tuple[int, ...]:
    """Relabel so that labels first appear in the order 1, 2, 3, ..."""
    names: dict = {}
    out = []
    for x in word:
        if x not in names:
            names[x] = len(names) + 1
        out.append(names[x])
    return tuple(out)


@dataclass(frozen=True, order=True)
class OpenGaussCode:
    word: tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(self.word)
        counts: dict = {}
        for x in word:
            counts[x] = counts.get(x, 0) + 1
        bad = [x for x, k in counts.items() if k != 2]
        if bad:
            raise CurveError(f"label {bad[0]} occurs {counts[bad[0]]} time(s), expected twice")
        object.__setattr__(self, "word", normalize(word))

    @property
    def crossing_number(self) -> int:
        return len(self.word) // 2

    @property
    def labels(self) -> range:
        return range(1, self.crossing_number + 1)

    def visits(self, label: int) -> tuple[int, int]:
        t1 = self.word.index(label)
        return t1, self.word.index(label, t1 + 1)

    def reversed(self) -> OpenGaussCode:
        return OpenGaussCode(self.word[::-1])

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


def parse_open_gauss(text: str) -> OpenGaussCode:
    """Parse a whitespace-separated word; any tokens may serve as labels.

    >>> parse_open_gauss("a b a b").word
    (1, 2, 1, 2)
    """
    return OpenGaussCode(tuple(text.split()))


# -- realizations ------------------------------------------------------------

def _rotations(code: OpenGaussCode, bits: Sequence[int]) -> dict[Dart, Dart]:
    """Counterclockwise successor of each dart around its vertex."""
    nxt: dict[Dart, Dart] = {}
    for label, s in zip(code.labels, bits):
        t1, t2 = code.visits(label)
        in1, out1, in2, out2 = (t1, 1), (t1 + 1, 0), (t2, 1), (t2 + 1, 0)
        order = [in1, in2, out1, out2] if s > 0 else [in1, out2, out1, in2]
        for j in range(4):
            nxt[order[j]] = order[(j + 1) % 4]
    last = len(code.word)
    nxt[(0, 0)] = (0, 0)
    nxt[(last, 1)] = (last, 1)
    return nxt


def _trace_faces(code: OpenGaussCode, bits: Sequence[int]) -> list[list[Dart]]:
    nxt = _rotations(code, bits)
    prev = {v: k for k, v in nxt.items()}
    seen: set[Dart] = set()
    out = []
    for h in sorted(nxt):
        if h in seen:
            continue
        face = []
        while h not in seen:
            seen.add(h)
            face.append(h)
            k, e = h
            h = prev[(k, 1 - e)]
        out.append(face)
    return out


@dataclass(frozen=True)
class PlanarCurveMap:
    code: OpenGaussCode
    bits: tuple[int, ...]  # one rotation bit per crossing label, in label order

    @property
    def crossing_number(self) -> int:
        return self.code.crossing_number

    @cached_property
    def faces(self) -> list[list[Dart]]:
        return _trace_faces(self.code, self.bits)

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {h: k for k, f in enumerate(self.faces) for h in f}

    def rotation(self, label: int) -> list[Dart]:
        """The four darts at a crossing, counterclockwise from ``in1``."""
        t1, t2 = self.code.visits(label)
        in1, out1, in2, out2 = (t1, 1), (t1 + 1, 0), (t2, 1), (t2 + 1, 0)
        if self.bits[label - 1] > 0:
            return [in1, in2, out1, out2]
        return [in1, out2, out1, in2]

    def is_planar(self) -> bool:
        return len(self.faces) == self.crossing_number + 1

    def __str__(self) -> str:
        signs = "".join("+" if s > 0 else "-" for s in self.bits)
        return f"{self.code} [{signs}]" if signs else str(self.code)


def realizations(code: OpenGaussCode) -> list[PlanarCurveMap]:
    """Every planar realization with the first bit fixed to +1.

    Flipping every bit reflects the plane, so nothing is lost.
    """
    n = code.crossing_number
    if n == 0:
        return [PlanarCurveMap(code, ())]
    out = []
    for rest in itertools.product((1, -1), repeat=n - 1):
        m = PlanarCurveMap(code, (1,) + rest)
        if m.is_planar():
            out.append(m)
    return out


def realize(code: OpenGaussCode) -> PlanarCurveMap:
    """First planar realization found; raises :class:`NotRealizable`."""
    n = code.crossing_number
    if n == 0:
        return PlanarCurveMap(code, ())
    for rest in itertools.product((1, -1), repeat=n - 1):
        m = PlanarCurveMap(code, (1,) + rest)
        if m.is_planar():
            return m
    raise NotRealizable(code)


def reflect_map(m: PlanarCurveMap) -> PlanarCurveMap:
    return PlanarCurveMap(m.code, tuple(-s for s in m.bits))


def reverse_map(m: PlanarCurveMap) -> PlanarCurveMap:
    """The same curve traversed backwards, in the same plane."""
    word = m.code.word[::-1]
    new = OpenGaussCode(word)
    # old label of each new label, read off the first appearances
    old_of = {}
    for x_new, x_old in zip(new.word, word):
        old_of.setdefault(x_new, x_old)
    bits = tuple(-m.bits[old_of[x] - 1] for x in new.labels)
    return PlanarCurveMap(new, bits)


# -- regions and distance ----------------------------------------------------

@dataclass(frozen=True)
class RegionGraph:
    regions: list[list[Dart]]
    adjacency: list[tuple[int, int, int]]  # (region, region, segment)
    start_region: int
    end_region: int

    def neighbors(self) -> dict[int, list[int]]:
        nb: dict[int, list[int]] = {r: [] for r in range(len(self.regions))}
        for a, b, _ in self.adjacency:
            nb[a].append(b)
            nb[b].append(a)
        return nb


def regions(m: PlanarCurveMap) -> RegionGraph:
    fs = m.faces
    if len(fs) != m.crossing_number + 1:
        raise AssertionError(f"{m} has {len(fs)} regions, expected {m.crossing_number + 1}")
    face_of = m.face_of
    segs = len(m.code.word) + 1
    adjacency = [(face_of[(k, 0)], face_of[(k, 1)], k) for k in range(segs)]
    return RegionGraph(fs, adjacency, face_of[(0, 0)], face_of[(segs - 1, 1)])


def distance(m: PlanarCurveMap) -> int:
    g = regions(m)
    nb = g.neighbors()
    dist = {g.start_region: 0}
    queue = deque([g.start_region])
    while queue:
        r = queue.popleft()
        if r == g.end_region:
            return dist[r]
        for s in nb[r]:
            if s not in dist:
                dist[s] = dist[r] + 1
                queue.append(s)
    raise AssertionError("region graph is disconnected")  # pragma: no cover


# -- connected sums ----------------------------------------------------------

@dataclass(frozen=True)
class CurveDecomposition:
    factors: tuple[OpenGaussCode, ...]

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1


def is_composite(code: OpenGaussCode) -> CurveDecomposition:
    """Split the word at every point where the labels before and after are
    disjoint. A single factor means the curve is prime."""
    word = code.word
    cuts = [0]
    open_labels: set[int] = set()
    for t, x in enumerate(word[:-1], start=1):
        open_labels ^= {x}
        if not open_labels:
            cuts.append(t)
    cuts.append(len(word))
    if len(cuts) <= 2:
        return CurveDecomposition((code,))
    factors = tuple(OpenGaussCode(word[a:b]) for a, b in zip(cuts, cuts[1:]))
    return CurveDecomposition(factors)


def connected_sum_map(a: PlanarCurveMap, b: PlanarCurveMap) -> PlanarCurveMap:
    """Glue the end of ``a`` to the start of ``b`` across the faces holding
    them; crossing rotations are untouched."""
    shift = a.crossing_number
    word = a.code.word + tuple(x + shift for x in b.code.word)
    return PlanarCurveMap(OpenGaussCode(word), a.bits + b.bits)


def _oriented(code: OpenGaussCode, forward: bool) -> PlanarCurveMap:
    m = realize(code)
    return m if forward else reverse_map(m)


def connected_sum(
    a: OpenGaussCode, b: OpenGaussCode, forward_a: bool = True, forward_b: bool = True
) -> OpenGaussCode:
    """Connected sum of plane curves drawn with the face holding their end
    point ``gamma(1)`` as the unbounded face.

    The sum needs the end of the first summand or the start of the second
    on the unbounded face. The end of ``a`` is there unless ``a`` is used
    reversed with its endpoints in different faces; likewise for ``b``.
    """
    ma, mb = _oriented(a, forward_a), _oriented(b, forward_b)
    a_end_outside = forward_a or distance(ma) == 0
    b_start_outside = not forward_b or distance(mb) == 0
    if not (a_end_outside or b_start_outside):
        raise NotComposable(f"both {ma.code} and {mb.code} hide the gluing endpoint")
    return connected_sum_map(ma, mb).code


def curve2_chain(m: int) -> PlanarCurveMap:
    """Connected sum of ``m`` copies of the two-crossing curve 1 2 1 2."""
    base = realize(OpenGaussCode((1, 2, 1, 2)))
    out = PlanarCurveMap(OpenGaussCode(()), ())
    for _ in range(m):
        out = connected_sum_map(out, base)
    return out


# -- isolated crossings ------------------------------------------------------

def has_isolated_crossing(m: PlanarCurveMap) -> list[int]:
    """Crossings at which two opposite corners lie in the same region."""
    face_of = m.face_of
    out = []
    for x in m.code.labels:
        # the corner between a dart and its counterclockwise successor
        # belongs to the face of that dart
        corner = [face_of[h] for h in m.rotation(x)]
        if corner[0] == corner[2] or corner[1] == corner[3]:
            out.append(x)
    return out


def reduce_isolated(m: PlanarCurveMap, p: int) -> PlanarCurveMap:
    """Drop the loop closed at the isolated crossing ``p`` and smooth."""
    if p not in has_isolated_crossing(m):
        raise CurveError(f"crossing {p} of {m.code} is not isolated")
    t1, t2 = m.code.visits(p)
    word = m.code.word
    kept = word[:t1] + word[t2 + 1:]
    order = list(dict.fromkeys(kept))
    bits = tuple(m.bits[x - 1] for x in order)
    return PlanarCurveMap(OpenGaussCode(kept), bits)


# -- enumeration -------------------------------------------------------------

def canonical_word(word: Sequence[int]) -> tuple[int, ...]:
    """Least of the word and its reversal after relabeling; reflection does
    not change the word."""
    return min(normalize(word), normalize(tuple(word)[::-1]))


def enumerate_codes(n: int) -> Iterator[tuple[int, ...]]:
    """All normalized double-occurrence words of length ``2n``."""
    word: list[int] = []
    count = [0] * (n + 2)

    def rec(opened: int):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        remaining = 2 * n - len(word)
        open_now = [x for x in range(1, opened + 1) if count[x] == 1]
        if opened < n and remaining > len(open_now):
            word.append(opened + 1)
            count[opened + 1] = 1
            yield from rec(opened + 1)
            count[opened + 1] = 0
            word.pop()
        for x in open_now:
            word.append(x)
            count[x] = 2
            yield from rec(opened)
            count[x] = 1
            word.pop()

    yield from rec(0)


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise CurveError("crossing number must be non-negative")
    if n > cap:
        raise CurveError(f"n = {n} exceeds the enumeration cap {cap}")


def _realize_or_none(word: tuple[int, ...]) -> PlanarCurveMap | None:
    try:
        return realize(OpenGaussCode(word))
    except NotRealizable:
        return None


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 64:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))
    return [fn(x) for x in items]


def enumerate_curves(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[PlanarCurveMap]:
    """One realized representative per realizable class of words with ``n``
    crossings, classes taken up to relabeling, reversal and reflection."""
    _check_cap(n, cap)
    words = [w for w in enumerate_codes(n) if canonical_word(w) == w]
    maps = _map(_realize_or_none, words, jobs)
    return [m for m in maps if m is not None]


@dataclass
class LemmaRow:
    c: int
    count: int  # realizable classes
    realizations: int
    max_d: int
    max_d_prime: int | None
    extremal: list[str]  # prime classes attaining max_d_prime
    d_varies: int  # classes whose realizations disagree on d

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class LemmaReport:
    rows: list[LemmaRow] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render_text(self) -> str:
        lines = ["c count realizations max_d max_d_prime d_varies extremal"]
        for r in self.rows:
            mdp = "-" if r.max_d_prime is None else str(r.max_d_prime)
            ext = "; ".join(r.extremal) if r.extremal else "-"
            lines.append(f"{r.c} {r.count} {r.realizations} {r.max_d} {mdp} {r.d_varies} {ext}")
        for v in self.violations:
            lines.append("VIOLATION " + json.dumps(v, sort_keys=True))
        lines.append(f"violations {len(self.violations)}")
        return "\n".join(lines) + "\n"

    def render_jsonl(self) -> str:
        out = [json.dumps({"type": "row", **r.as_dict()}, sort_keys=True) for r in self.rows]
        out += [json.dumps({"type": "violation", **v}, sort_keys=True) for v in self.violations]
        return "\n".join(out) + ("\n" if out else "")


def _examine(word: tuple[int, ...]):
    code = OpenGaussCode(word)
    maps = realizations(code)
    if not maps:
        return None
    return word, is_composite(code).is_prime, [distance(m) for m in maps]


def verify_lemma_bounds(n_max: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> LemmaReport:
    """Check ``d <= c`` on every curve and both prime-curve bounds, over all
    realizations of every class with at most ``n_max`` crossings."""
    _check_cap(n_max, cap)
    report = LemmaReport()
    for c in range(n_max + 1):
        words = [w for w in enumerate_codes(c) if canonical_word(w) == w]
        results = [r for r in _map(_examine, words, jobs) if r is not None]
        max_d = 0
        prime_ds: dict[str, int] = {}
        varies = 0
        n_real = 0
        for word, prime, ds in results:
            n_real += len(ds)
            text = " ".join(map(str, word))
            if len(set(ds)) > 1:
                varies += 1
            d = max(ds)
            max_d = max(max_d, d)
            checks = [("d<=c", c)]
            if prime:
                prime_ds[text] = d
                checks += [("d<=max(2,c-2)", max(2, c - 2)), ("d<=max(3,c-3)", max(3, c - 3))]
            for name, bound in checks:
                if d > bound:
                    report.violations.append({"word": text, "c": c, "d": d, "bound": name})
        top = max(prime_ds.values(), default=None)
        extremal = sorted(t for t, d in prime_ds.items() if d == top) if top is not None else []
        report.rows.append(LemmaRow(c, len(results), n_real, max_d, top, extremal, varies))
    return report
