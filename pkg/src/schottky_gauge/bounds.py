"""Named bound evaluators and the Jacobian-exclusion verdict.

Theorem-level bounds on successive minima of Jacobians, lemma-level
geodesic length bounds, Minkowski/Hermite lattice bounds, the
decomposition corollary, and the contrapositive exclusion test for PPAV
Gram matrices.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .hyptrig import sinh

# Constant upper bound for m_1(J(S))^2 of a hyperelliptic surface:
# 3 log(3 + 2 sqrt 3 + 2 sqrt(5 + 3 sqrt 3)) / pi.
_HYPER_INNER = 3.0 + 2.0 * math.sqrt(3.0) + 2.0 * math.sqrt(5.0 + 3.0 * math.sqrt(3.0))


def _check_genus(g: int, minimum: int = 2) -> None:
    if not isinstance(g, int) or g < minimum:
        raise DomainError(f"genus must be an integer >= {minimum}, got {g!r}")


@dataclass(frozen=True)
class Signature:
    """Topological signature (genus, number of boundary components)."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise DomainError("signature components must be nonnegative")
        if 2 * self.g - 2 + self.n <= 0:
            raise DomainError(f"signature ({self.g},{self.n}) is not hyperbolic")


@dataclass(frozen=True)
class Decomposition:
    """Result of cutting a surface along disjoint short geodesics.

    ``t`` is a common upper bound for the cutting geodesics, ``pieces``
    the positive-genus components of the cut surface, ``n_cut`` the number
    of cutting geodesics.
    """

    t: float
    pieces: tuple[Signature, ...]
    n_cut: int

    def __post_init__(self):
        if self.t <= 0:
            raise DomainError("cut length bound t must be positive")
        if not self.pieces:
            raise DomainError("decomposition needs at least one piece")
        if any(p.g <= 0 for p in self.pieces):
            raise DomainError("every piece must have positive genus")
        if self.n_cut < 1:
            raise DomainError("decomposition needs at least one cutting geodesic")


class Verdict(enum.Enum):
    NOT_JACOBIAN = "NotJacobian"
    NOT_HYPERELLIPTIC_JACOBIAN = "NotHyperellipticJacobian"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ExclusionVerdict:
    m1_sq: float
    m2_sq: float
    thm_bs_threshold: float
    thm_main_m1_threshold: float
    thm_main_m2_threshold: float
    hyperelliptic_threshold: float
    verdict: Verdict
    margins: dict[str, float] = field(default_factory=dict)


def thm_bs_upper(g: int) -> float:
    """(3/pi) log(4g - 2): ceiling for m_1^2 over all genus-g Jacobians."""
    _check_genus(g)
    return 3.0 / math.pi * math.log(4 * g - 2)


def thm_main_bounds(g: int) -> tuple[float, float]:
    """(log(4g-2), 3.1 log(8g-7)): ceilings for m_1^2 and m_2^2 of a Jacobian."""
    _check_genus(g)
    return math.log(4 * g - 2), 3.1 * math.log(8 * g - 7)


def systole_bounds(g: int) -> tuple[float, float]:
    """(2 log(4g-2), 3 log(8g-7)): ceilings for the two shortest geodesics."""
    _check_genus(g)
    return 2.0 * math.log(4 * g - 2), 3.0 * math.log(8 * g - 7)


def nsscg_bound_closed(h: int) -> float:
    """2 log(8h - 2): non-separating geodesic ceiling inside a signature
    (h,1) piece with short boundary."""
    if not isinstance(h, int) or h < 1:
        raise DomainError("h must be an integer >= 1")
    return 2.0 * math.log(8 * h - 2)


def nsscg_bound_boundary(h: int, eta: float) -> float:
    """max{eta/2 + log(8h-2), 2 log(8h-2)} for arbitrary boundary length eta."""
    if not isinstance(h, int) or h < 1:
        raise DomainError("h must be an integer >= 1")
    if eta <= 0:
        raise DomainError("boundary length must be positive")
    l = math.log(8 * h - 2)
    return max(eta / 2.0 + l, 2.0 * l)


def boundary_systole_bound(sig: Signature, boundary_total: float) -> float:
    """4 log(4g + 2n + 3) + l(boundary): systole ceiling for a bordered surface."""
    if boundary_total < 0:
        raise DomainError("total boundary length must be nonnegative")
    return 4.0 * math.log(4 * sig.g + 2 * sig.n + 3) + boundary_total


def corollary_mixing(t: float) -> float:
    """M = min{sinh(t/2)/sqrt(sinh^2(t/2) + 1), 1/2} entering the
    decomposition bound denominator."""
    if t <= 0:
        raise DomainError("t must be positive")
    s = sinh(t / 2.0)
    return min(s / math.sqrt(s * s + 1.0), 0.5)


def corollary_bound(d: Decomposition) -> list[float]:
    """Per-piece vector-norm bounds
    (n_i + 1) max{4 log(4 g_i + 2 n_i - 3), t} / (pi - 2 arcsin(M))."""
    return [r["bound"] for r in corollary_report(d)["pieces"]]


def corollary_report(d: Decomposition) -> dict:
    """Full decomposition report.

    Includes M, the literal per-piece bounds with log argument
    4 g_i + 2 n_i - 3, and the companion values with +3 (the form the
    underlying bordered-systole bound produces); a flag marks the
    discrepancy rather than silently adopting either reading.
    """
    m_mix = corollary_mixing(d.t)
    denom = math.pi - 2.0 * math.asin(m_mix)
    pieces = []
    for sig in d.pieces:
        arg = 4 * sig.g + 2 * sig.n - 3
        if arg <= 1:
            raise DomainError(f"log argument {arg} <= 1 for piece ({sig.g},{sig.n})")
        literal = (sig.n + 1) * max(4.0 * math.log(arg), d.t) / denom
        variant = (sig.n + 1) * max(4.0 * math.log(4 * sig.g + 2 * sig.n + 3), d.t) / denom
        pieces.append(
            {
                "g": sig.g,
                "n": sig.n,
                "bound": literal,
                "bound_plus3_variant": variant,
                "log_argument_discrepancy": True,
            }
        )
    return {"t": d.t, "M": m_mix, "denominator": denom, "pieces": pieces}


def fay_bound(g_i: int) -> float:
    """log(8 g_i - 2): degeneration bound for a piece of genus g_i."""
    if not isinstance(g_i, int) or g_i < 1:
        raise DomainError("piece genus must be an integer >= 1")
    return math.log(8 * g_i - 2)


def hyperelliptic_bound() -> float:
    """Genus-independent ceiling for m_1^2 of a hyperelliptic Jacobian."""
    return 3.0 * math.log(_HYPER_INNER) / math.pi


def bavard_constant() -> float:
    """Limit constant 2 log(3 + 2 sqrt 3 + 2 sqrt(5 + 3 sqrt 3)) = 5.1067..."""
    return 2.0 * math.log(_HYPER_INNER)


def bavard_bound(g: int) -> float:
    """4 arccosh(1 / (2 sin(pi (g+1) / 12g))): hyperelliptic systole bound,
    increasing toward :func:`bavard_constant`."""
    _check_genus(g)
    return 4.0 * math.acosh(1.0 / (2.0 * math.sin(math.pi * (g + 1) / (12.0 * g))))


def naive_disk_bound() -> float:
    """Coarse disk-packing constant 4 arccosh(2) = 5.2678..."""
    return 4.0 * math.acosh(2.0)


def minkowski_product_log_bound(g: int) -> float:
    """log((4/pi)^g (g!)^2): Minkowski second-theorem ceiling for the log of
    the product of all 2g squared minima of a PPAV."""
    if not isinstance(g, int) or g < 1:
        raise DomainError("g must be an integer >= 1")
    return g * math.log(4.0 / math.pi) + 2.0 * math.lgamma(g + 1)


def minkowski_m2_bound(g: int, m1: float) -> float:
    """m1^(-1/g) ((4/pi)(g!)^(1/g))^(2g/(2g-1)): second-minimum ceiling."""
    _check_genus(g)
    if m1 <= 0:
        raise DomainError("m1 must be positive")
    log_base = math.log(4.0 / math.pi) + math.lgamma(g + 1) / g
    return math.exp(-math.log(m1) / g + 2.0 * g / (2.0 * g - 1.0) * log_base)


def hermite_ppav_bounds(g: int) -> tuple[float, float]:
    """((1/pi)(2 g!)^(1/g), (4/pi)(g!)^(1/g)): Hermite-constant bracket over
    dimension-g PPAVs; '2 g!' reads as 2*(g!), matching the g/(pi e) asymptote."""
    _check_genus(g)
    lg = math.lgamma(g + 1)
    lower = math.exp((math.log(2.0) + lg) / g) / math.pi
    upper = 4.0 / math.pi * math.exp(lg / g)
    return lower, upper


def jacobian_exclusion(gram) -> ExclusionVerdict:
    """Contrapositive Jacobian test for a PPAV Gram matrix.

    NotJacobian when m_1^2 exceeds the (3/pi) log(4g-2) ceiling or m_2^2
    exceeds 3.1 log(8g-7); otherwise NotHyperellipticJacobian when m_1^2
    exceeds the hyperelliptic constant; otherwise Inconclusive.
    """
    from . import lattice  # local import: lattice pulls bounds for Minkowski checks

    if gram.mode is not lattice.Mode.PPAV:
        raise DomainError("exclusion test requires a PPAV-mode Gram matrix")
    g = gram.dim // 2
    _check_genus(g)
    minima = lattice.successive_minima(gram, 2)
    m1_sq, m2_sq = minima.values[0], minima.values[1]
    thr_bs = thm_bs_upper(g)
    thr_m1, thr_m2 = thm_main_bounds(g)
    thr_hyp = hyperelliptic_bound()
    if m1_sq > thr_bs or m2_sq > thr_m2:
        verdict = Verdict.NOT_JACOBIAN
    elif m1_sq > thr_hyp:
        verdict = Verdict.NOT_HYPERELLIPTIC_JACOBIAN
    else:
        verdict = Verdict.INCONCLUSIVE
    margins = {
        "margin_m1_vs_bs": thr_bs - m1_sq,
        "margin_m1_vs_main": thr_m1 - m1_sq,
        "margin_m2_vs_main": thr_m2 - m2_sq,
        "margin_m1_vs_hyperelliptic": thr_hyp - m1_sq,
    }
    return ExclusionVerdict(
        m1_sq=m1_sq,
        m2_sq=m2_sq,
        thm_bs_threshold=thr_bs,
        thm_main_m1_threshold=thr_m1,
        thm_main_m2_threshold=thr_m2,
        hyperelliptic_threshold=thr_hyp,
        verdict=verdict,
        margins=margins,
    )
