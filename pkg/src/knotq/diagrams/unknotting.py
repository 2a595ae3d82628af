"""Upper bound on the unknotting number from a long bridge.

Walk the knot starting where a bridge of length ``l`` begins. The bridge
crossings are all met first as overpasses (or all as underpasses), and
every other crossing has both of its visits after the bridge. Making those
``c - l`` crossings all first-met-over gives a descending diagram; making
them all first-met-under, read from the end of the bridge, gives an
ascending one. The cheaper of the two switches at most ``(c - l) // 2``
crossings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pd import LinkDiagram, bridges, gauss_sequence

__all__ = ["UnknottingBound", "unknotting_bound_from_bridge"]


@dataclass(frozen=True)
class UnknottingBound:
    bound: int
    bridge_length: int
    switches: tuple[int, ...]  # crossings whose switch unknots the diagram


def unknotting_bound_from_bridge(d: LinkDiagram) -> UnknottingBound:
    if d.components != 1:
        raise ValueError("the bridge bound is stated for knots only")
    c = len(d.crossings)
    if c == 0:
        return UnknottingBound(0, 0, ())
    comp = gauss_sequence(d).components[0]
    _, start, length = max(bridges(d), key=lambda run: (run[2], -run[1]))
    in_bridge = {comp[(start + t) % len(comp)][0] for t in range(length)}
    first_over: list[int] = []
    first_under: list[int] = []
    seen: set[int] = set()
    for t in range(len(comp)):
        x, over = comp[(start + t) % len(comp)]
        if x in in_bridge or x in seen:
            continue
        seen.add(x)
        (first_over if over else first_under).append(x)
    switches = min(first_under, first_over, key=len)
    return UnknottingBound((c - length) // 2, length, tuple(sorted(switches)))
