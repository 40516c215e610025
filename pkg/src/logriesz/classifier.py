"""Existence / nonexistence classification for the fourth-order inequalities.

Both sides couple the drift operator with the nonlocal reaction
(K * u^p) u^q.  Side PMINUS is the damped inequality (reaction bounded
above by the drift with a minus sign), side PPLUS the driven one.  The
clause machine encodes the sharp exponent thresholds in terms of

    t1 = (N - alpha) / (N - 2)   (subcritical reaction threshold)
    tN = N / (N - 2)             (Serrin-type threshold)
    t2 = (2N - alpha) / (N - 2)  (combined threshold for p + q)

Critical equalities are tested with absolute tolerance 1e-12 so exact
rational inputs land on their boundary rows.  The alpha = N family is
routed through its dedicated sharp criterion before the generic clauses:
the generic subcritical clauses textually cover part of that family and
would otherwise misattribute the governing result.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .ansatz import ExistenceCase, choose_case_params
from .errors import HypothesisViolated, ParameterError
from .kernel import KernelParams, approx_eq, validate


class Side(enum.Enum):
    PMINUS = "P-"
    PPLUS = "P+"


class UClass(enum.Enum):
    GENERAL = "general"
    BOUNDED = "bounded"
    RADIAL = "radial"


class Verdict(enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    OPEN = "Open"


EXISTS_NOTE = "for some sufficiently large lambda > 0"
NOT_EXISTS_NOTE = "for every lambda > 0"


@dataclass(frozen=True)
class ProblemParams:
    side: Side
    N: int
    p: float
    q: float
    alpha: float
    beta: float
    u_class: UClass = UClass.GENERAL


@dataclass(frozen=True)
class RegimeDecision:
    verdict: Verdict
    clause: str
    construction: ExistenceCase | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"verdict": self.verdict.value, "clause": self.clause, "note": self.note}
        if self.construction is not None:
            d["construction"] = {
                "case_id": self.construction.case_id,
                "gamma": self.construction.gamma,
                "tau": self.construction.tau,
                "constraint_notes": self.construction.constraint_notes,
            }
        else:
            d["construction"] = None
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate_problem(params: ProblemParams) -> None:
    validate(KernelParams(N=params.N, alpha=params.alpha, beta=params.beta))
    if params.p <= 0.0 or params.q <= 0.0:
        raise ParameterError("exponents p, q must be positive")


def _ge(a: float, b: float) -> bool:
    return a > b or approx_eq(a, b)


def _gt(a: float, b: float) -> bool:
    return a > b and not approx_eq(a, b)


def _lt(a: float, b: float) -> bool:
    return a < b and not approx_eq(a, b)


def classify_pminus(params: ProblemParams) -> RegimeDecision:
    """Damped side: nonexistence holds throughout 0 < alpha < N.

    p >= 1 always rules solutions out; p < 1 does so for bounded or radial
    classes.  Unbounded non-radial u with p < 1 is genuinely unresolved.
    """
    validate_problem(params)
    if not (_gt(params.alpha, 0.0) and _lt(params.alpha, float(params.N))):
        raise HypothesisViolated(
            "damped-side classification requires 0 < alpha < N")
    if _ge(params.p, 1.0):
        return RegimeDecision(Verdict.NOT_EXISTS, "Thm1(i)", note=NOT_EXISTS_NOTE)
    if params.u_class is UClass.BOUNDED:
        return RegimeDecision(Verdict.NOT_EXISTS, "Thm1(ii)", note=NOT_EXISTS_NOTE)
    if params.u_class is UClass.RADIAL:
        return RegimeDecision(Verdict.NOT_EXISTS, "Thm1(iii)", note=NOT_EXISTS_NOTE)
    return RegimeDecision(Verdict.OPEN, "uncharted",
                          note="p < 1 with unbounded non-radial u is unresolved")


def thm2_clause(N: int, p: float, q: float, alpha: float, beta: float) -> str | None:
    """First matching nonexistence clause (ii)-(ix), or None; assumes N >= 3."""
    t = N - 2.0
    t1 = (N - alpha) / t
    tn = N / t
    t2 = (2.0 * N - alpha) / t
    s = p + q
    a_le_2 = alpha < 2.0 or approx_eq(alpha, 2.0)
    a_lt_2 = _lt(alpha, 2.0)

    if a_le_2 and _ge(p, 1.0) and _lt(p, t1):
        return "Thm2(ii)"
    if a_le_2 and approx_eq(p, t1) and _ge(beta, -1.0):
        return "Thm2(iii)"
    if _ge(p, 1.0) and _lt(s, t2):
        return "Thm2(iv)"
    if _ge(p, 1.0) and approx_eq(s, t2) and _gt(beta, 1.0 / s - 1.0):
        return "Thm2(v)"
    if a_lt_2 and _gt(q, 1.0) and _lt(q, t1):
        return "Thm2(vi)"
    if a_lt_2 and approx_eq(q, t1) and _gt(beta, 1.0 / q - 1.0):
        return "Thm2(vii)"
    if a_lt_2 and approx_eq(p, tn) and approx_eq(q, t1) and _gt(beta, -2.0 + 1.0 / q):
        return "Thm2(viii)"
    if a_lt_2 and approx_eq(p, t1) and approx_eq(q, tn) and _gt(beta, -2.0 + 1.0 / q):
        return "Thm2(ix)"
    return None


def thm3_clause(N: int, p: float, q: float, alpha: float, beta: float) -> tuple[str, str] | None:
    """First matching existence clause with its construction case id.

    Assumes N >= 3 and 0 <= alpha < N; equality rows are tested before the
    fully interior clause (i) so boundary tuples keep their sharper tags.
    """
    t = N - 2.0
    t1 = (N - alpha) / t
    tn = N / t
    t2 = (2.0 * N - alpha) / t
    s = p + q

    if approx_eq(p, t1) and _gt(q, tn) and _lt(beta, -1.0):
        return "Thm3(ii)", "2"
    if _gt(p, tn) and approx_eq(q, t1) and _lt(beta, -1.0):
        return "Thm3(iii)", "3"
    if _gt(p, t1) and _gt(q, t1) and approx_eq(s, t2) and _lt(beta, -1.0):
        return "Thm3(iv)", "4"
    if approx_eq(p, t1) and approx_eq(q, tn) and _lt(beta, -2.0):
        return "Thm3(v)", "5"
    if approx_eq(p, tn) and approx_eq(q, t1) and _lt(beta, -2.0):
        return "Thm3(vi)", "6"
    if _gt(p, t1) and _gt(q, t1) and _gt(s, t2):
        return "Thm3(i)", ("1a" if _ge(tn, p) else "1b")
    return None


def corollary_clause(N: int, p: float, q: float, alpha: float, beta: float) -> str | None:
    """Only-if directions of the sharp characterizations for p, q >= 1, alpha < N."""
    if not (_ge(p, 1.0) and _ge(q, 1.0)):
        return None
    t = N - 2.0
    t1 = (N - alpha) / t
    t2 = (2.0 * N - alpha) / t
    s = p + q
    if _lt(beta, -2.0):
        if not (_ge(p, t1) and _ge(q, t1) and _ge(s, t2)):
            return "Cor1.5(i)"
        return None
    if _gt(beta, -1.0 + 1.0 / q):
        if not (_gt(p, t1) and _gt(q, t1) and _gt(s, t2)):
            return "Cor1.5(ii)"
    return None


def open_row(N: int, p: float, q: float, alpha: float, beta: float) -> str | None:
    """Documented open cells (six rows); None means uncharted territory."""
    t = N - 2.0
    t1 = (N - alpha) / t
    tn = N / t
    t2 = (2.0 * N - alpha) / t
    s = p + q

    def in_closed(x, lo, hi):
        return (_gt(x, lo) or approx_eq(x, lo)) and (_lt(x, hi) or approx_eq(x, hi))

    if _gt(p, max(1.0, t1)) and _gt(q, t1) and approx_eq(s, t2) and in_closed(beta, -1.0, -1.0 + 1.0 / s):
        return "Table1-row1"
    if _ge(p, 1.0) and approx_eq(p, t1) and approx_eq(q, tn) and in_closed(beta, -2.0, -2.0 + 1.0 / q):
        return "Table1-row2"
    if approx_eq(p, tn) and approx_eq(q, t1) and in_closed(beta, -2.0, -2.0 + 1.0 / q):
        return "Table1-row3"
    if _gt(p, tn) and approx_eq(q, t1) and _gt(q, 1.0) and in_closed(beta, -1.0, -1.0 + 1.0 / q):
        return "Table1-row4"
    if _gt(p, tn) and _ge(1.0, q) and approx_eq(s, t2) and in_closed(beta, alpha - N, -1.0 + 1.0 / s) and _gt(beta, alpha - N):
        return "Table1-row5"
    if _gt(p, tn) and _ge(1.0, q) and _gt(s, t2):
        return "Table1-row6"
    return None


def classify_pplus(params: ProblemParams) -> RegimeDecision:
    """Driven side, evaluated as: low dimension, the alpha = N sharp
    criterion, nonexistence clauses, existence clauses (with construction),
    only-if corollary branches, documented open rows, uncharted."""
    validate_problem(params)
    N, p, q, alpha, beta = params.N, params.p, params.q, params.alpha, params.beta

    if N <= 2:
        return RegimeDecision(Verdict.NOT_EXISTS, "Thm2(i)", note=NOT_EXISTS_NOTE)

    s = p + q
    tn = N / (N - 2.0)
    if approx_eq(alpha, float(N)):
        if _ge(p, 1.0):
            if _gt(s, tn):
                case_id = "T4-1" if _ge(tn, p) else "T4-2"
                case = choose_case_params(case_id, N, float(N), beta, p, q)
                return RegimeDecision(Verdict.EXISTS, "Thm4", construction=case, note=EXISTS_NOTE)
            return RegimeDecision(Verdict.NOT_EXISTS, "Thm4", note=NOT_EXISTS_NOTE)
        return RegimeDecision(Verdict.OPEN, "uncharted",
                              note="alpha = N with p < 1 is unresolved")

    clause = thm2_clause(N, p, q, alpha, beta)
    if clause is not None:
        return RegimeDecision(Verdict.NOT_EXISTS, clause, note=NOT_EXISTS_NOTE)

    hit = thm3_clause(N, p, q, alpha, beta)
    if hit is not None:
        clause, case_id = hit
        case = choose_case_params(case_id, N, alpha, beta, p, q)
        return RegimeDecision(Verdict.EXISTS, clause, construction=case, note=EXISTS_NOTE)

    clause = corollary_clause(N, p, q, alpha, beta)
    if clause is not None:
        return RegimeDecision(Verdict.NOT_EXISTS, clause, note=NOT_EXISTS_NOTE)

    row = open_row(N, p, q, alpha, beta)
    if row is not None:
        return RegimeDecision(Verdict.OPEN, row, note="documented open case")
    return RegimeDecision(Verdict.OPEN, "uncharted")


def classify(params: ProblemParams) -> RegimeDecision:
    if params.side is Side.PMINUS:
        return classify_pminus(params)
    return classify_pplus(params)


# ---------------------------------------------------------------------------
# Golden summary table for the driven side.
#
# Each row mirrors one body row of the published exponent summary; the
# instantiator returns concrete (p, q, beta, expected clause) tuples for a
# given (N, alpha), or [] when the row is empty there (degenerate blocks at
# alpha = 0 or alpha = 2, kernel validity, clause alpha-ranges).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRowRecord:
    row_id: int
    description: str
    alpha: float
    p: float
    q: float
    beta: float
    expected_verdict: str
    expected_clause: str
    verdict: str
    clause: str
    match: bool

    def to_dict(self) -> dict:
        return {
            "row": self.row_id,
            "description": self.description,
            "alpha": self.alpha, "p": self.p, "q": self.q, "beta": self.beta,
            "expected_verdict": self.expected_verdict,
            "expected_clause": self.expected_clause,
            "verdict": self.verdict, "clause": self.clause,
            "match": self.match,
        }


def _valid_beta(beta: float, alpha: float, N: int) -> bool:
    return _gt(beta, alpha - N)


def _mid(lo: float, hi: float) -> float:
    return 0.5 * (lo + hi)


def _beta_between(lo: float, hi: float, alpha: float, N: int) -> float | None:
    """Midpoint of (max(lo, alpha-N), hi), or None when empty."""
    lo = max(lo, alpha - N)
    if not lo < hi:
        return None
    return _mid(lo, hi)


def _table_rows(N: int) -> list[tuple[int, str, str, Callable]]:
    t = N - 2.0

    def thresholds(alpha: float):
        return (N - alpha) / t, N / t, (2.0 * N - alpha) / t

    def a_le2(alpha):
        return alpha <= 2.0

    def a_lt2(alpha):
        return alpha < 2.0

    def a_ltN(alpha):
        return alpha < N

    rows: list[tuple[int, str, str, Callable]] = []

    def r1(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and t1 > 1.0):
            return []
        return [(_mid(1.0, t1), 1.0, 0.0, "Thm2(ii)")]

    rows.append((1, "1 <= p < t1, q > 0: nonexistence", "NotExists", r1))

    def r2(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        beta = _beta_between(-2.0, -1.0, alpha, N)
        if beta is None:
            return []
        return [(t1, tn / 2.0, beta, "Thm2(iv)")]

    rows.append((2, "p = t1, q < tN: below the combined threshold", "NotExists", r2))

    def r3(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        beta = _beta_between(-3.0, -2.0, alpha, N)
        if beta is None:
            return []
        return [(t1, tn, beta, "Thm3(v)")]

    rows.append((3, "p = t1, q = tN, beta < -2: existence", "Exists", r3))

    def r4(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        out = [(t1, tn, 0.0, "Thm2(iii)")]
        if 0.0 < alpha < 2.0:
            beta = _beta_between(-2.0 + 1.0 / tn, -1.0, alpha, N)
            if beta is not None:
                out.append((t1, tn, beta, "Thm2(ix)"))
        return out

    rows.append((4, "p = t1, q = tN, beta > -2+1/q: nonexistence", "NotExists", r4))

    def r5(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        beta = _beta_between(-2.0, -2.0 + 1.0 / tn, alpha, N)
        if beta is None:
            return []
        return [(t1, tn, beta, "Table1-row2")]

    rows.append((5, "p = t1, q = tN, -2 <= beta <= -2+1/q: open", "Open", r5))

    def r6(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        out = [(t1, tn + 0.7, 0.0, "Thm2(iii)")]
        if _valid_beta(-1.0, alpha, N):
            out.append((t1, tn + 0.7, -1.0, "Thm2(iii)"))
        return out

    rows.append((6, "p = t1, q > tN, beta >= -1: nonexistence", "NotExists", r6))

    def r7(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        beta = _beta_between(-3.0, -1.0, alpha, N)
        if beta is None:
            return []
        return [(t1, tn + 0.7, beta, "Thm3(ii)")]

    rows.append((7, "p = t1, q > tN, beta < -1: existence", "Exists", r7))

    def r8(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        return [(_mid(t1, tn), t1, 0.0, "Thm2(iv)")]

    rows.append((8, "t1 < p < tN, q <= t1: below combined threshold", "NotExists", r8))

    def r9(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        p = _mid(t1, tn)
        return [(p, t2 - p, 0.0, "Thm2(v)")]

    rows.append((9, "t1 < p < tN, p+q = t2, beta above window: nonexistence", "NotExists", r9))

    def r10(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        p = _mid(t1, tn)
        out = [(p, t2 - p, -1.0 + 1.0 / (2.0 * t2), "Table1-row1")]
        if _valid_beta(-1.0, alpha, N):
            out.append((p, t2 - p, -1.0, "Table1-row1"))
        return out

    rows.append((10, "t1 < p < tN, p+q = t2, beta in open window", "Open", r10))

    def r11(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        p = _mid(t1, tn)
        beta = _beta_between(-3.0, -1.0, alpha, N)
        if beta is None:
            return []
        return [(p, t2 - p, beta, "Thm3(iv)")]

    rows.append((11, "t1 < p < tN, p+q = t2, beta < -1: existence", "Exists", r11))

    def r12(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        p = _mid(t1, tn)
        return [(p, t2 - p + 0.6, 0.0, "Thm3(i)")]

    rows.append((12, "t1 < p < tN, p+q > t2: existence", "Exists", r12))

    def r13(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_le2(alpha):
            return []
        if alpha > 0.0:
            return [(tn, t1 / 2.0, 0.0, "Thm2(iv)")]
        # at alpha = 0 the p = tN block collides with p = t1, whose
        # equality clause would preempt for beta >= -1
        beta = _beta_between(-2.0, -1.0, alpha, N)
        if beta is None:
            return []
        return [(tn, t1 / 2.0, beta, "Thm2(iv)")]

    rows.append((13, "p = tN, q < t1: below combined threshold", "NotExists", r13))

    def r14(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_lt2(alpha):
            return []
        q = t1
        s = tn + t1
        hi = min(1.0 / q - 1.0, 1.0 / s - 1.0, -1.0)
        beta = _beta_between(-2.0 + 1.0 / q, hi, alpha, N)
        if beta is None:
            return []
        return [(tn, q, beta, "Thm2(viii)")]

    rows.append((14, "p = tN, q = t1, beta > -2+1/q: nonexistence", "NotExists", r14))

    def r15(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_le2(alpha) and alpha > 0.0):
            return []
        beta = _beta_between(-2.0, -2.0 + 1.0 / t1, alpha, N)
        if beta is None:
            return []
        return [(tn, t1, beta, "Table1-row3")]

    rows.append((15, "p = tN, q = t1, -2 <= beta <= -2+1/q: open", "Open", r15))

    def r16(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_ltN(alpha) and alpha > 0.0):
            return []
        beta = _beta_between(-3.5, -2.0, alpha, N)
        if beta is None:
            return []
        return [(tn, t1, beta, "Thm3(vi)")]

    rows.append((16, "p = tN, q = t1, beta < -2: existence", "Exists", r16))

    def r17(alpha):
        t1, tn, t2 = thresholds(alpha)
        if alpha <= 0.0:
            return []
        if approx_eq(alpha, float(N)):
            return [(tn, t1 + 0.8, 1.0, "Thm4")]
        return [(tn, t1 + 0.8, 0.0, "Thm3(i)")]

    rows.append((17, "p = tN, q > t1, p+q > t2: existence (alpha up to N)", "Exists", r17))

    def r18(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_ltN(alpha) and alpha > 0.0):
            return []
        return [(tn + t1 / 4.0, t1 / 2.0, 0.0, "Thm2(iv)")]

    rows.append((18, "p > tN, q < t1, p+q < t2: nonexistence", "NotExists", r18))

    def _small_q(t1):
        return min(0.9, 0.6 * t1)

    def r19(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_ltN(alpha):
            return []
        q = _small_q(t1)
        return [(t2 - q, q, 0.0, "Thm2(v)")]

    rows.append((19, "p > tN, q <= 1, p+q = t2, beta above window: nonexistence", "NotExists", r19))

    def r20(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_ltN(alpha):
            return []
        q = _small_q(t1)
        beta = _beta_between(-1.0, -1.0 + 1.0 / t2, alpha, N)
        if beta is None:
            return []
        return [(t2 - q, q, beta, "Table1-row5")]

    rows.append((20, "p > tN, q <= 1, p+q = t2, beta in open window", "Open", r20))

    def r21(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not a_ltN(alpha):
            return []
        q = _small_q(t1)
        out = [(t2, q, 0.0, "Table1-row6")]
        beta = _beta_between(-3.5, -2.0, alpha, N)
        if beta is not None:
            out.append((t2, q, beta, "Table1-row6"))
        return out

    rows.append((21, "p > tN, q <= 1, p+q > t2: open", "Open", r21))

    def r22(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_lt2(alpha) and t1 > 1.0):
            return []
        q = _mid(1.0, t1)
        p = tn + (t1 - q) + 0.5
        return [(p, q, 0.0, "Thm2(vi)")]

    rows.append((22, "p > tN, 1 < q < t1: nonexistence", "NotExists", r22))

    def r23(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_lt2(alpha) and t1 > 1.0):
            return []
        return [(tn + 1.0, t1, 0.0, "Thm2(vii)")]

    rows.append((23, "p > tN, q = t1, beta > -1+1/q: nonexistence", "NotExists", r23))

    def r24(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_lt2(alpha) and t1 > 1.0):
            return []
        out = [(tn + 1.0, t1, -1.0 + 1.0 / (2.0 * t1), "Table1-row4")]
        if _valid_beta(-1.0, alpha, N):
            out.append((tn + 1.0, t1, -1.0, "Table1-row4"))
        return out

    rows.append((24, "p > tN, q = t1, -1 <= beta <= -1+1/q: open", "Open", r24))

    def r25(alpha):
        t1, tn, t2 = thresholds(alpha)
        if not (a_lt2(alpha) and t1 > 1.0):
            return []
        beta = _beta_between(-3.0, -1.0, alpha, N)
        if beta is None:
            return []
        return [(tn + 1.0, t1, beta, "Thm3(iii)")]

    rows.append((25, "p > tN, q = t1, beta < -1: existence", "Exists", r25))

    def r26(alpha):
        t1, tn, t2 = thresholds(alpha)
        if approx_eq(alpha, float(N)):
            return [(tn + 1.0, t1 + 0.8, 1.0, "Thm4")]
        return [(tn + 1.0, t1 + 0.8, 0.0, "Thm3(i)")]

    rows.append((26, "p > tN, q > t1, p+q > t2: existence (alpha up to N)", "Exists", r26))

    return rows


def emit_regime_table(N: int, alpha_samples: Sequence[float] | None = None) -> list[TableRowRecord]:
    """Instantiate every summary row at representative alphas and classify.

    Returns one record per instantiation; callers assert that every row
    produced at least one record and that all records match.
    """
    if N < 3:
        raise ParameterError("the summary table is stated for N >= 3")
    if alpha_samples is None:
        alpha_samples = sorted({0.0, 0.5, 1.0, 1.5, 2.0, min(2.5, N - 0.5), N - 0.5, float(N)})
    records: list[TableRowRecord] = []
    for row_id, description, expected_verdict, instantiate in _table_rows(N):
        for alpha in alpha_samples:
            if not (0.0 <= alpha <= N):
                continue
            for p, q, beta, expected_clause in instantiate(alpha):
                if not _valid_beta(beta, alpha, N):
                    continue
                decision = classify_pplus(ProblemParams(
                    side=Side.PPLUS, N=N, p=float(p), q=float(q),
                    alpha=float(alpha), beta=float(beta)))
                match = (decision.verdict.value == expected_verdict
                         and decision.clause == expected_clause)
                records.append(TableRowRecord(
                    row_id=row_id, description=description,
                    alpha=float(alpha), p=float(p), q=float(q), beta=float(beta),
                    expected_verdict=expected_verdict, expected_clause=expected_clause,
                    verdict=decision.verdict.value, clause=decision.clause, match=match))
    return records
