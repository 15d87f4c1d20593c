"""Rigorous certification of the bound inequalities by interval branch-and-bound.

Each registered family packages one inequality together with its parameter
domain.  Continuous parameters (including the genus, relaxed from the
integers to a real interval, which only strengthens the claim) are covered
by adaptive bisection with outward-rounded interval arithmetic; the
unbounded genus tail beyond ``g_max`` is closed by a per-family closed-form
slack floor whose derivation is recorded in the family's ``tail`` note.

A family is Certified only when every leaf cell has a strictly positive
slack lower bound and the tail is handled; the engine never weakens a
claim to force a pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import collar
from .errors import DomainError
from .interval import IPI, IW, IWP, IndeterminateCell, Interval

DEFAULT_G_MAX = 10**6
DEFAULT_BUDGET = 10**7
DEFAULT_TOL = 1e-4

_LOG6 = Interval(6.0).log()
_R31 = Interval.ratio(31.0, 10.0)           # 3.1
_C66 = Interval.ratio(66.0, 100.0)
_C96 = Interval.ratio(96.0, 100.0)
_C73 = Interval.ratio(73.0, 100.0)


def _dcap(w: Interval) -> Interval:
    """pi - 2 arcsin(1/cosh w): the capacity denominator."""
    return IPI - (1.0 / w.cosh()).asin() * 2.0


def _dcap_point(w: float) -> float:
    return math.pi - 2.0 * math.asin(1.0 / math.cosh(w))


# ----------------------------------------------------------------------
# Engine data model
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Dim:
    """One continuous axis of a task domain.

    ``hi`` may be a callable of g_max for domains whose ceiling grows with
    the genus cutoff.  ``log_scale`` selects geometric bisection, suited to
    axes spanning several orders of magnitude.
    """

    name: str
    lo: float
    hi: float | Callable[[float], float]
    log_scale: bool = False

    def hi_at(self, g_max: float) -> float:
        return self.hi(g_max) if callable(self.hi) else self.hi


@dataclass(frozen=True)
class Task:
    """One rectangular (possibly clipped) sub-domain with its slack form."""

    name: str
    dims: tuple[Dim, ...]
    slack_iv: Callable[[dict], Interval]
    slack_point: Callable[[dict], float | None]
    clip: Callable[[dict, float], dict | None] | None = None
    # When the slack form's arccosh argument drops below 1 the geometric
    # configuration does not exist and the constraint is vacuous.  Only
    # tasks whose formulas have that reading may opt in; everywhere else a
    # DomainError is treated as "subdivide", never as "satisfied".
    domain_error_vacuous: bool = False


@dataclass(frozen=True)
class TailProof:
    infimum_lb: float
    note: str
    strict: bool = False  # slack exceeds infimum_lb at every finite parameter


@dataclass(frozen=True)
class CertFamily:
    id: str
    title: str
    tasks: tuple[Task, ...]
    tail: Callable[[float], TailProof] | None = None
    aliases: tuple[str, ...] = ()
    exempt: bool = False          # may stay Undecided without failing a suite
    budget_override: int | None = None


@dataclass(frozen=True)
class CertReport:
    family: str
    status: str                   # Certified | Violated | Undecided
    min_slack: Interval | None
    witness: dict | None
    cells_processed: int
    max_depth: int
    tail_status: str              # Proven | Checked-to-bound | N/A
    tail_note: str = ""
    vacuous_cells: int = 0
    g_max: float = DEFAULT_G_MAX
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "status": self.status,
            "min_slack_lo": None if self.min_slack is None else self.min_slack.lo,
            "min_slack_hi": None if self.min_slack is None else self.min_slack.hi,
            "witness": self.witness,
            "cells_processed": self.cells_processed,
            "max_depth": self.max_depth,
            "tail_status": self.tail_status,
            "tail_note": self.tail_note,
            "vacuous_cells": self.vacuous_cells,
            "g_max": self.g_max,
            "note": self.note,
        }


# ----------------------------------------------------------------------
# Branch and bound
# ----------------------------------------------------------------------

def _norm_width(cell: Interval, dim: Dim, span: float) -> float:
    if span <= 0:
        return 0.0
    if dim.log_scale:
        return math.log(cell.hi / cell.lo) / span
    return (cell.hi - cell.lo) / span


class _TaskRun:
    """Mutable state for one task's branch-and-bound sweep."""

    def __init__(self, task: Task, g_max: float, tol: float):
        self.task = task
        self.g_max = g_max
        self.tol = tol
        self.cells = 0
        self.vacuous = 0
        self.max_depth = 0
        self.min_slack: Interval | None = None
        self.witness: dict | None = None
        self.spans = []
        for d in task.dims:
            hi = d.hi_at(g_max)
            if d.log_scale:
                self.spans.append(math.log(hi / d.lo) if hi > d.lo else 0.0)
            else:
                self.spans.append(hi - d.lo)

    def _record(self, slack: Interval, cell: tuple[Interval, ...]):
        if self.min_slack is None or slack.lo < self.min_slack.lo:
            self.min_slack = slack
            self.witness = {
                d.name: c.mid for d, c in zip(self.task.dims, cell)
            }

    def run(self, budget: int) -> tuple[str, dict | None, Interval | None]:
        """Returns (outcome, stuck_witness, stuck_slack); outcome in
        {certified, violated, undecided, budget}."""
        task = self.task
        init = []
        for d in task.dims:
            hi = d.hi_at(self.g_max)
            if d.lo >= hi:
                return "certified", None, None  # empty axis: vacuous domain
            init.append(Interval(d.lo, hi))
        stack: list[tuple[tuple[Interval, ...], int]] = [(tuple(init), 0)]
        while stack:
            cell, depth = stack.pop()
            self.cells += 1
            self.max_depth = max(self.max_depth, depth)
            if self.cells > budget:
                return "budget", self._mid(cell), None
            named = {d.name: c for d, c in zip(task.dims, cell)}
            if task.clip is not None:
                named = task.clip(named, self.g_max)
                if named is None:
                    self.vacuous += 1
                    continue
                cell = tuple(named[d.name] for d in task.dims)
            slack = None
            try:
                slack = task.slack_iv(named)
            except DomainError:
                if task.domain_error_vacuous:
                    self.vacuous += 1
                    continue
            except IndeterminateCell:
                pass
            if slack is not None and slack.lo > 0.0:
                self._record(slack, cell)
                continue
            if slack is not None and slack.hi < 0.0:
                pt = self._mid(cell)
                ps = task.slack_point(pt)
                if ps is not None and ps < 0.0:
                    return "violated", pt, Interval.point(ps)
            if not cell:
                return "undecided", None, slack  # zero-dimensional, unresolved
            widths = [
                _norm_width(c, d, s)
                for c, d, s in zip(cell, task.dims, self.spans)
            ]
            axis = max(range(len(widths)), key=widths.__getitem__)
            if widths[axis] < self.tol:
                return "undecided", self._mid(cell), slack
            lo_cell, hi_cell = self._bisect(cell[axis], task.dims[axis])
            rest = list(cell)
            rest[axis] = hi_cell
            stack.append((tuple(rest), depth + 1))
            rest = list(cell)
            rest[axis] = lo_cell
            stack.append((tuple(rest), depth + 1))
        return "certified", None, None

    @staticmethod
    def _bisect(cell: Interval, dim: Dim) -> tuple[Interval, Interval]:
        if dim.log_scale and cell.lo > 0:
            m = math.sqrt(cell.lo * cell.hi)
            if not cell.lo < m < cell.hi:
                m = cell.mid
        else:
            m = cell.mid
        return Interval(cell.lo, m), Interval(m, cell.hi)

    def _mid(self, cell: tuple[Interval, ...]) -> dict:
        return {d.name: c.mid for d, c in zip(self.task.dims, cell)}


def certify(
    family: CertFamily,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    g_max: float = DEFAULT_G_MAX,
) -> CertReport:
    """Certify one family over its full domain up to ``g_max``.

    Subdivides until every cell's slack interval is strictly positive
    (Certified), a violating point is confirmed (Violated), or the cell
    width floor ``tol`` / the cell ``budget`` is reached (Undecided).
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    if budget <= 0:
        raise DomainError("budget must be positive")
    if family.budget_override is not None:
        budget = min(budget, family.budget_override)
    total_cells = 0
    total_vacuous = 0
    max_depth = 0
    min_slack: Interval | None = None
    witness: dict | None = None
    for task in family.tasks:
        run = _TaskRun(task, g_max, tol)
        outcome, stuck, stuck_slack = run.run(budget - total_cells)
        total_cells += run.cells
        total_vacuous += run.vacuous
        max_depth = max(max_depth, run.max_depth)
        if run.min_slack is not None and (
            min_slack is None or run.min_slack.lo < min_slack.lo
        ):
            min_slack = run.min_slack
            witness = run.witness
        if outcome == "violated":
            return CertReport(
                family=family.id, status="Violated", min_slack=stuck_slack,
                witness=stuck, cells_processed=total_cells, max_depth=max_depth,
                tail_status="N/A", vacuous_cells=total_vacuous, g_max=g_max,
                note=f"violation confirmed by point evaluation in task {task.name}",
            )
        if outcome in ("undecided", "budget"):
            reason = "cell budget exhausted" if outcome == "budget" \
                else "cell width floor reached"
            return CertReport(
                family=family.id, status="Undecided", min_slack=stuck_slack,
                witness=stuck, cells_processed=total_cells, max_depth=max_depth,
                tail_status="N/A", vacuous_cells=total_vacuous, g_max=g_max,
                note=f"{reason} in task {task.name}",
            )
    tail_status = "N/A"
    tail_note = ""
    if family.tail is not None:
        proof = family.tail(g_max + 1.0)
        if proof.infimum_lb > 0.0 or proof.strict:
            tail_status = "Proven"
        else:
            tail_status = "Checked-to-bound"
        tail_note = f"slack floor {proof.infimum_lb:.6g} beyond g_max: {proof.note}"
        if tail_status == "Checked-to-bound":
            return CertReport(
                family=family.id, status="Undecided", min_slack=min_slack,
                witness=witness, cells_processed=total_cells,
                max_depth=max_depth, tail_status=tail_status,
                tail_note=tail_note, vacuous_cells=total_vacuous,
                g_max=g_max, note="tail floor not positive",
            )
    return CertReport(
        family=family.id, status="Certified", min_slack=min_slack,
        witness=witness, cells_processed=total_cells, max_depth=max_depth,
        tail_status=tail_status, tail_note=tail_note,
        vacuous_cells=total_vacuous, g_max=g_max,
    )


# ----------------------------------------------------------------------
# Family definitions
# ----------------------------------------------------------------------
#
# The genus axis is treated as the continuous interval [2, g_max]; since
# the integers are a subset, certifying the relaxation certifies every
# genus.  Geometric bisection keeps the cell count near-logarithmic in
# g_max.


def _gdim(name: str = "g") -> Dim:
    return Dim(name, 2.0, lambda g_max: g_max, log_scale=True)


# -- CF-A --------------------------------------------------------------
# 2 arccosh(sinh^2(g/2)(cosh(2 arcsinh(2 pi (g-1)/gamma)) - 1) - 1)
#   <= 4 log(8g - 7)   on g in [2, g_max], gamma in (0, pi/2].
# Rewritten with cosh(2 arcsinh y) - 1 = 2 y^2 and sinh(x)/x = sinhc(x):
# the arccosh argument is 2 pi^2 (g-1)^2 sinhc(gamma/2)^2 - 1, which is
# finite and > 1 down to gamma = 0, so no cell is ever vacuous.

def _cfa_slack_iv(c: dict) -> Interval:
    g, y = c["g"], c["gamma"]
    s = (y * 0.5).sinhc()
    arg = IPI.sq() * (g - 1.0).sq() * s.sq() * 2.0 - 1.0
    return (g * 8.0 - 7.0).log() * 4.0 - arg.acosh() * 2.0


def _cfa_slack_point(p: dict) -> float | None:
    g, y = p["g"], p["gamma"]
    if y <= 0:
        return None
    w = math.asinh(2.0 * math.pi * (g - 1.0) / y)
    try:
        return 4.0 * math.log(8.0 * g - 7.0) - collar.y1_nu(y, w)
    except DomainError:
        return None


def _cfa_tail(_g_from: float) -> TailProof:
    # arccosh(x) <= log(2x) and 8g-7 >= 8(g-1) give the g-free floor
    # 4 log 8 - 2 log(4 pi^2 sinhc(pi/4)^2), valid for every g >= 2.
    smax = (IPI * 0.25).sinhc()
    floor = (Interval(8.0).log() * 4.0 - (IPI.sq() * smax.sq() * 4.0).log() * 2.0).lo
    return TailProof(floor, "log-majorization of arccosh, g-free floor")


# -- CF-B --------------------------------------------------------------
# 2 arccosh(sinh(gamma/4) 2 pi (g-1)/gamma) <= 3 log(8g - 7); the argument
# rewrites to (pi/2)(g-1) sinhc(gamma/4) >= pi/2 > 1.

def _cfb_slack_iv(c: dict) -> Interval:
    g, y = c["g"], c["gamma"]
    arg = IPI * 0.5 * (g - 1.0) * (y * 0.25).sinhc()
    return (g * 8.0 - 7.0).log() * 3.0 - arg.acosh() * 2.0


def _cfb_slack_point(p: dict) -> float | None:
    g, y = p["g"], p["gamma"]
    if y <= 0:
        return None
    w = math.asinh(2.0 * math.pi * (g - 1.0) / y)
    try:
        return 3.0 * math.log(8.0 * g - 7.0) - collar.y2_nu1_exact(y, w)
    except DomainError:
        return None


def _cfb_tail(_g_from: float) -> TailProof:
    smax = (IPI * 0.125).sinhc()
    floor = (Interval(8.0).log() * 3.0 - (IPI * smax).log() * 2.0).lo
    return TailProof(floor, "log-majorization of arccosh, g-free floor")


# -- CF-C --------------------------------------------------------------
# pi - 2 arcsin(1/cosh(qwtwo(alpha1))) >= 3/3.1 for alpha1 >= 1.1.  The
# genus only caps alpha1 at 2 log(4g-2); the union over all g is
# [1.1, inf), so the family is genus-free.  Beyond the bisected range,
# qwtwo(alpha1) >= arcsinh((4/3) sinh(alpha1/4)) (exact algebra:
# sqrt(5) sqrt(9/5) = 3) closes the alpha1 tail.

_CFC_CAP = 10.0


def _qwtwo_iv(a: Interval) -> Interval:
    num = (Interval(2.0) / Interval(5.0).sqrt()) * (a * 0.5).sinh()
    den = (Interval.ratio(9.0, 5.0) * (a * 0.25).cosh().sq() - 1.0).sqrt()
    return (num / den).asinh()


def _cfc_slack_iv(c: dict) -> Interval:
    return _dcap(_qwtwo_iv(c["alpha1"])) - Interval.ratio(3.0, 3.1)


def _cfc_slack_point(p: dict) -> float | None:
    return _dcap_point(collar.qwtwo(p["alpha1"])) - 3.0 / 3.1


def _crossing_tail_floor(quarter: float) -> Interval:
    """Interval floor arcsinh((4/3) sinh(quarter)) for qwtwo-type widths."""
    return (Interval.ratio(4.0, 3.0) * Interval.point(quarter).sinh()).asinh()


def _cfc_tail(_g_from: float) -> TailProof:
    w_lb = _crossing_tail_floor(_CFC_CAP / 4.0)
    floor = (_dcap(w_lb) - Interval.ratio(3.0, 3.1)).lo
    return TailProof(floor, f"width floor for alpha1 >= {_CFC_CAP} "
                            "(covers every genus cap)")


# -- CF-D --------------------------------------------------------------
# (2 log(24g-23) + 2.2)/(pi - 2 arcsin(1/cosh W')) <= 3.1 log(8g-7).

def _cfd_slack_iv(c: dict) -> Interval:
    g = c["g"]
    lhs = ((g * 24.0 - 23.0).log() * 2.0 + Interval.ratio(22.0, 10.0)) / _dcap(IWP)
    return (g * 8.0 - 7.0).log() * _R31 - lhs


def _cfd_slack_point(p: dict) -> float | None:
    g = p["g"]
    d = _dcap_point(collar.W_PRIME)
    return 3.1 * math.log(8.0 * g - 7.0) - (2.0 * math.log(24.0 * g - 23.0) + 2.2) / d


def _cfd_tail(g_from: float) -> TailProof:
    # 24g-23 <= 3(8g-7), so slack >= (3.1 - 2/D) log(8g-7) - (2 log 3 + 2.2)/D,
    # increasing in g once the leading coefficient is positive.
    d = _dcap(IWP)
    coeff = _R31 - 2.0 / d
    if coeff.lo <= 0:
        return TailProof(-math.inf, "leading coefficient not positive")
    const = (Interval(3.0).log() * 2.0 + Interval.ratio(22.0, 10.0)) / d
    lf = (Interval.point(g_from) * 8.0 - 7.0).log()
    return TailProof((coeff * lf - const).lo,
                     "log-coefficient comparison, increasing in g")


# -- CF-E --------------------------------------------------------------
# 4 arccosh(cosh(gamma2/4) cosh W') / (pi - 2 arcsin(1/cosh w(gamma2)))
#   <= 3.1 log(8g-7)  for gamma2 in [2.1, 3 log(8g-7)], with
# w = min{0.66, arccosh(cosh(gamma2/2)/(cosh(gamma2/4) cosh W'))}.

def _gamma2_cap(g_hi: float) -> Interval:
    return (Interval.point(g_hi) * 8.0 - 7.0).log() * 3.0


def _cfe_clip(named: dict, _g_max: float) -> dict | None:
    cap = _gamma2_cap(named["g"].hi).hi
    y = named["gamma2"]
    if y.lo > cap:
        return None
    if y.hi > cap:
        named = dict(named)
        named["gamma2"] = Interval(y.lo, max(cap, y.lo))
    return named


def _cfe_numerator_iv(y: Interval) -> Interval:
    return ((y * 0.25).cosh() * IWP.cosh()).acosh() * 4.0


def _cfe_width_iv(y: Interval) -> Interval:
    c = (y * 0.25).cosh()
    ratio = (c * 2.0 - 1.0 / c) / IWP.cosh()  # cosh(y/2)/cosh(y/4), rewritten
    return ratio.acosh_clamped().min_with(_C66)


def _cfe_slack_iv(c: dict) -> Interval:
    g, y = c["g"], c["gamma2"]
    lhs = _cfe_numerator_iv(y) / _dcap(_cfe_width_iv(y))
    return (g * 8.0 - 7.0).log() * _R31 - lhs


def _cfe_slack_point(p: dict) -> float | None:
    g, y = p["g"], p["gamma2"]
    try:
        w = collar.case2c2_width_bound(y)
    except DomainError:
        return None
    num = 4.0 * math.acosh(math.cosh(y / 4.0) * math.cosh(collar.W_PRIME))
    return 3.1 * math.log(8.0 * g - 7.0) - num / _dcap_point(w)


def _cfe_tail(g_from: float) -> TailProof:
    # Two regimes.  gamma2 <= 10: numerator and width are increasing, so
    # lhs <= N(10)/D(w(2.1)).  gamma2 in [10, 3 log(8g-7)]: the width is
    # pinned at 0.66 (cosh(gamma2/2)/(cosh(gamma2/4) cosh W') >=
    # cosh(gamma2/4)/cosh W' >= cosh(2.5)/cosh W' > cosh 0.66) and
    # arccosh x <= log 2x, cosh x <= e^x give
    # N <= gamma2 + 4 log(2 cosh W').
    if (Interval.point(2.5).cosh() / IWP.cosh()).lo < _C66.cosh().hi:
        return TailProof(-math.inf, "regime split invalid")
    d21 = _dcap(_cfe_width_iv(Interval.point(2.1)))
    c10 = (_cfe_numerator_iv(Interval.point(10.0)) / d21).hi
    d66 = _dcap(_C66)
    coeff = _R31 - 3.0 / d66
    if coeff.lo <= 0:
        return TailProof(-math.inf, "leading coefficient not positive")
    ce = (IWP.cosh() * 2.0).log() * 4.0
    lf = (Interval.point(g_from) * 8.0 - 7.0).log()
    t1 = (lf * _R31 - c10).lo
    t2 = (coeff * lf - ce / d66).lo
    return TailProof(min(t1, t2),
                     "two-regime split at gamma2 = 10, increasing in g")


# -- CF-F --------------------------------------------------------------
# capacity(gamma, w(gamma)) <= log(4g-2) on gamma in (0, 2 log(4g-2)],
# with w(gamma) the configuration-1 width floor below K and W above.
# Split at K: below, log(4g-2) >= log 6 removes the genus; above, the
# width is the constant W and the domain ceiling couples gamma to g.

def _cff_w_iv(y: Interval) -> Interval:
    """Configuration-1 width floor max{b1, b2} as an interval over y."""
    b1 = (1.0 / (y * 0.5).sinh()).asinh()
    c = (y * 0.25).cosh()
    b2 = (c * 2.0 - 1.0 / c).acosh_clamped()
    return b1.max_with(b2)


def _cff_short_slack_iv(c: dict) -> Interval:
    y = c["gamma"]
    if y.lo <= 0.0:
        # b1 = arcsinh(1/sinh(gamma/2)) decreases, so its value at the
        # right endpoint floors the width on the whole cell; the capacity
        # ceiling that yields is enough for cells touching gamma = 0.
        b1_hi = (1.0 / (Interval.point(y.hi) * 0.5).sinh()).asinh()
        cap_hi = (Interval.point(y.hi) / _dcap(Interval.point(b1_hi.lo))).hi
        return Interval(_LOG6.lo - cap_hi, _LOG6.hi)
    return _LOG6 - y / _dcap(_cff_w_iv(y))


def _cff_short_slack_point(p: dict) -> float | None:
    y = p["gamma"]
    if y <= 0:
        return None
    w = collar.collar_width_lower_bound(y, collar.CollarConfig.CONFIG1, True)
    return math.log(6.0) - collar.capacity(y, w)


def _cff_long_clip(named: dict, _g_max: float) -> dict | None:
    cap = ((Interval.point(named["g"].hi) * 4.0 - 2.0).log() * 2.0).hi
    y = named["gamma"]
    if y.lo > cap:
        return None
    if y.hi > cap:
        named = dict(named)
        named["gamma"] = Interval(y.lo, max(cap, y.lo))
    return named


def _cff_long_slack_iv(c: dict) -> Interval:
    g, y = c["g"], c["gamma"]
    return (g * 4.0 - 2.0).log() - y / _dcap(IW)


def _cff_long_slack_point(p: dict) -> float | None:
    g, y = p["g"], p["gamma"]
    return math.log(4.0 * g - 2.0) - collar.capacity(y, collar.W)


def _cff_tail(_g_from: float) -> TailProof:
    # Above K the capacity is at most 2 log(4g-2)/D(W) with 2/D(W) = 3/pi,
    # so the slack is at least (1 - 3/pi) log 6 for every g; below K the
    # short-core task is already genus-free.
    floor = (_LOG6 * (1.0 - 2.0 / _dcap(IW))).lo
    return TailProof(floor, "capacity ceiling 3 gamma/(2 pi) above K, g-free")


# -- CF-F' -------------------------------------------------------------
# Same configuration against the sharper ceiling (3/pi) log(4g-2).  At
# gamma = 2 log(4g-2) with w = W the two sides agree exactly, so no
# strictly-positive certificate exists; the family is expected Undecided
# and is exempt from suite failure.

def _cffp_short_slack_iv(c: dict) -> Interval:
    y = c["gamma"]
    rhs = _LOG6 * 3.0 / IPI
    if y.lo <= 0.0:
        b1_hi = (1.0 / (Interval.point(y.hi) * 0.5).sinh()).asinh()
        cap_hi = (Interval.point(y.hi) / _dcap(Interval.point(b1_hi.lo))).hi
        return Interval(rhs.lo - cap_hi, rhs.hi)
    return rhs - y / _dcap(_cff_w_iv(y))


def _cffp_short_slack_point(p: dict) -> float | None:
    y = p["gamma"]
    if y <= 0:
        return None
    w = collar.collar_width_lower_bound(y, collar.CollarConfig.CONFIG1, True)
    return 3.0 / math.pi * math.log(6.0) - collar.capacity(y, w)


def _cffp_long_slack_iv(c: dict) -> Interval:
    g, y = c["g"], c["gamma"]
    return (g * 4.0 - 2.0).log() * 3.0 / IPI - y / _dcap(IW)


def _cffp_long_slack_point(p: dict) -> float | None:
    g, y = p["g"], p["gamma"]
    return 3.0 / math.pi * math.log(4.0 * g - 2.0) - collar.capacity(y, collar.W)


# -- CF-G --------------------------------------------------------------

def _cfg_slack_iv(_c: dict) -> Interval:
    sep = (1.0 / Interval.point(1.05).sinh()).asinh()
    return sep.min_with(IWP) - _C73


def _cfg_slack_point(_p: dict) -> float | None:
    return min(collar.collar_separation(2.1), collar.W_PRIME) - 0.73


# -- CF-H --------------------------------------------------------------

def _cfh_slack_iv(c: dict) -> Interval:
    y = c["gamma2"]
    den = ((y * 0.25).cosh().sq() * IWP.cosh().sq() - 1.0).sqrt()
    return ((y * 0.5).cosh() / den).asinh() - _C96


def _cfh_slack_point(p: dict) -> float | None:
    return collar.case2c2b_width_bound(p["gamma2"]) - 0.96


def _cfh_tail(_g_from: float) -> TailProof:
    # For gamma2 >= 60: sqrt(c^2 cW^2 - 1) <= c cW and 2c^2 - 1 >= c^2
    # give width >= arcsinh(cosh(15)/cosh W'), increasing beyond.
    w_lb = (Interval.point(15.0).cosh() / IWP.cosh()).asinh()
    return TailProof((w_lb - _C96).lo,
                     "width floor for gamma2 >= 60 (covers every genus cap)")


# -- CF-I --------------------------------------------------------------
# 4 arccosh(1/(2 sin(pi (g+1)/12g))) < limit = 4 arccosh(1/(2 sin(pi/12))).

_BAVARD_LIMIT_IV = (1.0 / ((IPI / 12.0).sin() * 2.0)).acosh() * 4.0


def _cfi_slack_iv(c: dict) -> Interval:
    g = c["g"]
    # (g+1)/g written as 1 + 1/g so a wide genus cell still yields a tight
    # enclosure inside (pi/12, pi/8]
    theta = IPI / 12.0 * (1.0 + 1.0 / g)
    return _BAVARD_LIMIT_IV - (1.0 / (theta.sin() * 2.0)).acosh() * 4.0


def _cfi_slack_point(p: dict) -> float | None:
    g = p["g"]
    theta = math.pi * (g + 1.0) / (12.0 * g)
    return (_BAVARD_LIMIT_IV.mid
            - 4.0 * math.acosh(1.0 / (2.0 * math.sin(theta))))


def _cfi_tail(_g_from: float) -> TailProof:
    # Structural: theta(g) = (pi/12)(1 + 1/g) exceeds pi/12 for every
    # finite g and stays within (0, pi/2], where sin is increasing, so the
    # value stays strictly below its limit although the slack tends to 0.
    return TailProof(0.0, "theta(g) > pi/12 strictly for every finite g",
                     strict=True)


# -- CF-J --------------------------------------------------------------
# crossing_width_bound(alpha1, W', alpha1/4) > 0.66 for alpha1 >= 1.5.

_CFJ_CAP = 10.0


def _cfj_slack_iv(c: dict) -> Interval:
    a = c["alpha1"]
    num = IWP.sinh() * (a * 0.5).sinh()
    den = ((a * 0.25).cosh().sq() * IWP.cosh().sq() - 1.0).sqrt()
    return (num / den).asinh() - _C66


def _cfj_slack_point(p: dict) -> float | None:
    a = p["alpha1"]
    return collar.crossing_width_bound(a, collar.W_PRIME, a / 4.0) - 0.66


def _cfj_tail(_g_from: float) -> TailProof:
    w_lb = _crossing_tail_floor(_CFJ_CAP / 4.0)
    return TailProof((w_lb - _C66).lo,
                     f"width floor for alpha1 >= {_CFJ_CAP}")


# ----------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------

_GAMMA_HALF_PI = Dim("gamma", 0.0, math.pi / 2.0)

FAMILIES: tuple[CertFamily, ...] = (
    CertFamily(
        id="CF-A", title="config-1 boundary length vs 4 log(8g-7)",
        tasks=(Task("main", (_gdim(), _GAMMA_HALF_PI),
                    _cfa_slack_iv, _cfa_slack_point,
                    domain_error_vacuous=True),),
        tail=_cfa_tail,
    ),
    CertFamily(
        id="CF-B", title="config-2 boundary length vs 3 log(8g-7)",
        tasks=(Task("main", (_gdim(), _GAMMA_HALF_PI),
                    _cfb_slack_iv, _cfb_slack_point,
                    domain_error_vacuous=True),),
        tail=_cfb_tail,
    ),
    CertFamily(
        id="CF-C", title="crossing-width denominator vs 3/3.1",
        tasks=(Task("main", (Dim("alpha1", 1.1, _CFC_CAP),),
                    _cfc_slack_iv, _cfc_slack_point),),
        tail=_cfc_tail,
    ),
    CertFamily(
        id="CF-D", title="two-collar capacity sum vs 3.1 log(8g-7)",
        tasks=(Task("main", (_gdim(),), _cfd_slack_iv, _cfd_slack_point),),
        tail=_cfd_tail,
    ),
    CertFamily(
        id="CF-E", title="second-collar capacity vs 3.1 log(8g-7)",
        tasks=(Task(
            "main",
            (_gdim(), Dim("gamma2", 2.1,
                          lambda g_max: 3.0 * math.log(8.0 * g_max - 7.0))),
            _cfe_slack_iv, _cfe_slack_point, clip=_cfe_clip,
            domain_error_vacuous=True),),
        tail=_cfe_tail,
    ),
    CertFamily(
        id="CF-F", title="collar capacity vs log(4g-2)",
        tasks=(
            Task("short-core", (Dim("gamma", 0.0, collar.K),),
                 _cff_short_slack_iv, _cff_short_slack_point),
            Task("long-core",
                 (_gdim(), Dim("gamma", collar.K,
                               lambda g_max: 2.0 * math.log(4.0 * g_max - 2.0))),
                 _cff_long_slack_iv, _cff_long_slack_point,
                 clip=_cff_long_clip),
        ),
        tail=_cff_tail,
    ),
    CertFamily(
        id="CF-G", title="separation floor 0.73",
        tasks=(Task("point", (), _cfg_slack_iv, _cfg_slack_point),),
    ),
    CertFamily(
        id="CF-H", title="config-2 second-collar width floor 0.96",
        tasks=(Task("main", (Dim("gamma2", 2.1, 60.0),),
                    _cfh_slack_iv, _cfh_slack_point),),
        tail=_cfh_tail,
    ),
    CertFamily(
        id="CF-I", title="hyperelliptic systole limit",
        tasks=(Task("main", (_gdim(),), _cfi_slack_iv, _cfi_slack_point),),
        tail=_cfi_tail,
    ),
    CertFamily(
        id="CF-J", title="crossing width floor 0.66",
        tasks=(Task("main", (Dim("alpha1", 1.5, _CFJ_CAP),),
                    _cfj_slack_iv, _cfj_slack_point),),
        tail=_cfj_tail,
    ),
)

# Sharpened m1 variant: exact equality at the domain corner, so it cannot
# certify strictly; opt-in only, never part of the default registry.
CF_F_PRIME = CertFamily(
    id="CF-F-prime", title="collar capacity vs (3/pi) log(4g-2)",
    aliases=("CF-F'",),
    tasks=(
        Task("short-core", (Dim("gamma", 0.0, collar.K),),
             _cffp_short_slack_iv, _cffp_short_slack_point),
        Task("long-core",
             (_gdim(), Dim("gamma", collar.K,
                           lambda g_max: 2.0 * math.log(4.0 * g_max - 2.0))),
             _cffp_long_slack_iv, _cffp_long_slack_point,
             clip=_cff_long_clip),
    ),
    exempt=True,
    budget_override=20000,
)

_ALL = {f.id: f for f in FAMILIES}
_ALL[CF_F_PRIME.id] = CF_F_PRIME
for _f in list(_ALL.values()):
    for _a in _f.aliases:
        _ALL[_a] = _f


def lookup(identifier: str) -> CertFamily:
    try:
        return _ALL[identifier]
    except KeyError:
        raise DomainError(f"unknown certification family {identifier!r}") from None


def run_all(
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    g_max: float = DEFAULT_G_MAX,
    families: tuple[CertFamily, ...] | None = None,
) -> list[CertReport]:
    """Certify every registered family (or the given subset) in order."""
    if families is None:
        families = FAMILIES
    return [certify(f, tol=tol, budget=budget, g_max=g_max) for f in families]


__all__ = [
    "CF_F_PRIME",
    "CertFamily",
    "CertReport",
    "DEFAULT_BUDGET",
    "DEFAULT_G_MAX",
    "DEFAULT_TOL",
    "Dim",
    "FAMILIES",
    "TailProof",
    "Task",
    "certify",
    "lookup",
    "run_all",
]
