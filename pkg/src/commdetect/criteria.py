"""Dendrogram comparison: scalar criteria, lexicographic orders, and
epsilon-combined pairwise verdicts."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .quality import MetricsVector

DEFAULT_EPS = 0.04


class Verdict(enum.Enum):
    BETTER = "B"
    WORSE = "W"
    EQUIVALENT = "E"

    def flipped(self) -> "Verdict":
        if self is Verdict.BETTER:
            return Verdict.WORSE
        if self is Verdict.WORSE:
            return Verdict.BETTER
        return Verdict.EQUIVALENT


@dataclass
class CriterionReport:
    t_max: int  # 0-based step index of first maximum-modularity partition
    k_at_t_max: int
    cr1: float
    cr_avg: float
    cr3: float
    scr1: float
    scr3: float


def criterion_report(mv: MetricsVector) -> CriterionReport:
    if len(mv) == 0:
        raise ValueError("empty metrics vector")
    best = max(mv.q)
    t_max = mv.q.index(best)  # smallest index attaining the maximum
    head = mv.q[: t_max + 1]
    head_cv = mv.cv[: t_max + 1]
    return CriterionReport(
        t_max=t_max,
        k_at_t_max=mv.k_at_step[t_max],
        cr1=mv.q[t_max],
        cr_avg=sum(mv.q) / len(mv.q),
        cr3=sum(head) / len(head),
        scr1=mv.cv[t_max],
        scr3=sum(head_cv) / len(head_cv),
    )


def _eps_equivalent(x: float, y: float, eps: float) -> bool:
    """Relative gap over min(|x|, |y|); 0/0 is equivalent, 0 vs nonzero is not."""
    if x == y:
        return True
    denom = min(abs(x), abs(y))
    if denom == 0.0:
        return False
    return abs(x - y) / denom <= eps


def _significantly_higher(x: float, y: float, eps: float) -> bool:
    if x <= y:
        return False
    if y == 0.0:
        return True
    return (x - y) / abs(y) > eps


def lex_compare(a, b, eps: float, higher_is_better: bool = True) -> Verdict:
    """Scan both vectors in order; the first non-equivalent index decides."""
    if len(a) != len(b):
        raise ValueError("vectors have different lengths")
    for x, y in zip(a, b):
        if _eps_equivalent(x, y, eps):
            continue
        if (x > y) == higher_is_better:
            return Verdict.BETTER
        return Verdict.WORSE
    return Verdict.EQUIVALENT


def _scalar_pair_verdict(
    qa: float, qb: float, cva: float, cvb: float, eps: float
) -> Verdict:
    def better(q1, q2, cv1, cv2):
        if _significantly_higher(q1, q2, eps):
            return True
        # similar modularity: lower CV must win significantly
        return _eps_equivalent(q1, q2, eps) and _significantly_higher(cv2, cv1, eps)

    if better(qa, qb, cva, cvb):
        return Verdict.BETTER
    if better(qb, qa, cvb, cva):
        return Verdict.WORSE
    return Verdict.EQUIVALENT


def combined_compare(
    da: MetricsVector, db: MetricsVector, eps: float = DEFAULT_EPS, level: int = 1
) -> Verdict:
    """Pairwise verdict of dendrogram A against B at one criterion level.

    Level 1 compares (Cr1, SCr1), level 2 the lexicographic (Cr2, SCr2)
    order, level 3 (Cr3, SCr3).
    """
    if len(da) != len(db):
        raise ValueError("metric vectors have different lengths")
    if level not in (1, 2, 3):
        raise ValueError("level must be 1, 2 or 3")
    if level == 2:
        v = lex_compare(da.q, db.q, eps, higher_is_better=True)
        if v is not Verdict.EQUIVALENT:
            return v
        return lex_compare(da.cv, db.cv, eps, higher_is_better=False)
    ra = criterion_report(da)
    rb = criterion_report(db)
    if level == 1:
        return _scalar_pair_verdict(ra.cr1, rb.cr1, ra.scr1, rb.scr1, eps)
    return _scalar_pair_verdict(ra.cr3, rb.cr3, ra.scr3, rb.scr3, eps)
