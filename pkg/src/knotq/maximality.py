"""Obstructions to Q-maximality.

A knot is Q-maximal when ``maxdeg Q = min over diagrams of c(D) - d(D)``.
Each test below turns a computable quantity into a proof that no diagram
attains the bound. None of them can prove maximality, so the only outcomes
are NON_Q_MAXIMAL and INCONCLUSIVE.
"""

from __future__ import annotations

import enum
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .diagrams.pd import LinkDiagram, PDError, bridge_length
from .diagrams.signature import signature
from .diagrams.skein import BudgetExceeded, SkeinEngine, q_at_minus_one, q_polynomial
from .laurent import LaurentPoly
from .tables import KnotRecord

__all__ = [
    "Outcome",
    "TestResult",
    "MaximalityVerdict",
    "KidwellCheck",
    "kidwell_check",
    "crossing_bound_test",
    "unknotting_test",
    "signature_test",
    "q_self_test",
    "scan",
]


class Outcome(str, enum.Enum):
    NON_Q_MAXIMAL = "NON_Q_MAXIMAL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class TestResult:
    __test__ = False  # not a pytest class

    test: str
    inputs: dict
    outcome: Outcome
    detail: str  # the inequality with numbers filled in

    @property
    def fired(self) -> bool:
        return self.outcome is Outcome.NON_Q_MAXIMAL

    def as_dict(self) -> dict:
        return {"test": self.test, "inputs": self.inputs, "outcome": self.outcome.value,
                "detail": self.detail}


@dataclass
class MaximalityVerdict:
    knot: str
    qmax: int | None = None
    c: int | None = None
    sigma: int | None = None
    u: int | None = None
    tests: list[TestResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    error: str | None = None
    error_kind: str | None = None  # "input" or "budget"

    @property
    def fired(self) -> list[TestResult]:
        return [t for t in self.tests if t.fired]

    @property
    def overall(self) -> Outcome:
        return Outcome.NON_Q_MAXIMAL if self.fired else Outcome.INCONCLUSIVE

    @property
    def q_self_positive(self) -> bool:
        return any(t.test == "q_self" and t.fired for t in self.tests)

    def as_dict(self) -> dict:
        return {
            "knot": self.knot,
            "qmax": self.qmax,
            "c": self.c,
            "sigma": self.sigma,
            "u": self.u,
            "overall": None if self.error else self.overall.value,
            "tests": [t.as_dict() for t in self.tests],
            "notes": list(self.notes),
            "error": self.error,
        }


class KidwellCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def kidwell_check(d: LinkDiagram, q: LaurentPoly) -> KidwellCheck:
    """``maxdeg Q <= c(D) - d(D)`` on a given diagram."""
    lhs = q.max_degree()
    if lhs is None:
        raise ValueError("Q of a link is never zero")
    rhs = d.crossing_number - bridge_length(d)
    return KidwellCheck(lhs, rhs, lhs <= rhs)


def _fire(flag: bool) -> Outcome:
    return Outcome.NON_Q_MAXIMAL if flag else Outcome.INCONCLUSIVE


def crossing_bound_test(c_K: int, qmax: int, prime_hint: bool | None) -> TestResult:
    """A prime Q-maximal knot has a diagram with ``c - l = qmax`` and bridge
    length ``l <= max(3, qmax - 3)``, so ``c_K <= qmax + max(3, qmax - 3)``."""
    if qmax < 0:
        raise ValueError(f"qmax must be non-negative, got {qmax}")
    bound = qmax + max(3, qmax - 3)
    inputs = {"c": c_K, "qmax": qmax, "prime": prime_hint}
    holds = c_K > bound
    rel = ">" if holds else "<="
    detail = f"{c_K} {rel} {qmax} + max(3,{qmax - 3}) = {bound}"
    if prime_hint is not True:
        return TestResult("crossing_bound", inputs, Outcome.INCONCLUSIVE,
                          detail + " (needs a prime knot; primality not given)")
    return TestResult("crossing_bound", inputs, _fire(holds), detail)


def unknotting_test(u_K: int, qmax: int) -> TestResult:
    """A long bridge unknots in ``(c - l) // 2`` switches, so Q-maximal
    knots have ``u <= qmax // 2``."""
    bound = qmax // 2
    holds = u_K > bound
    detail = f"{u_K} {'>' if holds else '<='} floor({qmax}/2) = {bound}"
    return TestResult("unknotting", {"u": u_K, "qmax": qmax}, _fire(holds), detail)


def signature_test(sigma: int, qmax: int) -> TestResult:
    """Since ``|sigma| <= 2u``, Q-maximal knots have ``|sigma| <= qmax``."""
    holds = abs(sigma) > qmax
    detail = f"|{sigma}| {'>' if holds else '<='} {qmax}"
    return TestResult("signature", {"sigma": sigma, "qmax": qmax}, _fire(holds), detail)


def q_self_test(q: LaurentPoly) -> TestResult:
    """``Q(-1) = (-3)**m`` with ``m`` bounded by the unknotting number, so a
    Q-maximal knot has ``2m <= maxdeg Q``. A firing knot would be new."""
    value, m = q_at_minus_one(q)
    if m is None:
        raise ValueError(f"Q(-1) = {value} is not a power of -3; Q is wrong")
    top = q.max_degree()
    holds = 2 * m > top
    detail = f"2*{m} {'>' if holds else '<='} {top}"
    return TestResult("q_self", {"m": m, "qmax": top, "q_at_minus_one": value},
                      _fire(holds), detail)


# -- table scan --------------------------------------------------------------

def _verdict(rec: KnotRecord, budget: int | None, engine: SkeinEngine | None) -> MaximalityVerdict:
    v = MaximalityVerdict(rec.name, c=rec.crossing_number, u=rec.unknotting_number)
    try:
        d = rec.diagram()
        q = q_polynomial(d, budget=budget, engine=engine).poly
        v.qmax = q.max_degree()
        if rec.qmax_expected is not None and rec.qmax_expected != v.qmax:
            v.notes.append(f"qmax mismatch: table says {rec.qmax_expected}, computed {v.qmax}")
        kc = kidwell_check(d, q)
        if not kc.holds:
            v.notes.append(f"Kidwell inequality fails on the diagram: {kc.lhs} > {kc.rhs}")
        if d.components == 1:
            v.sigma = signature(d)
            if rec.signature is not None and abs(rec.signature) != abs(v.sigma):
                v.notes.append(f"signature mismatch: table says {rec.signature}, computed {v.sigma}")
        v.tests.append(crossing_bound_test(rec.crossing_number, v.qmax, rec.prime))
        if rec.unknotting_number is not None:
            v.tests.append(unknotting_test(rec.unknotting_number, v.qmax))
        if v.sigma is not None:
            v.tests.append(signature_test(v.sigma, v.qmax))
        v.tests.append(q_self_test(q))
    except BudgetExceeded as exc:
        v.error, v.error_kind = str(exc), "budget"
    except (PDError, ValueError) as exc:
        v.error, v.error_kind = str(exc), "input"
    return v


def _verdict_worker(args):
    rec, budget = args
    return _verdict(rec, budget, None)


def name_key(name: str) -> tuple:
    """Natural order: ``3_1 < 8_21 < 10_161``."""
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in re.split(r"(\d+)", name))


def scan(
    table: Sequence[KnotRecord],
    budget: int | None = None,
    jobs: int = 1,
    engine: SkeinEngine | None = None,
) -> list[MaximalityVerdict]:
    """Verdicts for every record, sorted by knot name. A failing record
    yields a verdict with ``error`` set; the scan carries on."""
    records = sorted(table, key=lambda r: (name_key(r.name), r.name))
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verdict_worker, [(r, budget) for r in records]))
    engine = engine or SkeinEngine()
    return [_verdict(r, budget, engine) for r in records]
