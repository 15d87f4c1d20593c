"""Successive minima of positive-definite quadratic forms.

Validation of Gram matrices, LLL reduction with an exact unimodular
transform, bounded short-vector enumeration on the triangular
factorization, greedy extraction of independent minima witnesses, and a
Minkowski second-theorem compliance check.
"""

from __future__ import annotations

import enum
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    BudgetExceeded,
    DeterminantNotOne,
    DomainError,
    IncompleteMinima,
    NotPositiveDefinite,
    NotSymmetric,
    NumericalBreakdown,
    OddDimension,
    ValidationError,
)

DEFAULT_NODE_BUDGET = 10**9


def node_budget() -> int:
    """Enumeration node budget, overridable via SCHOTTKY_GAUGE_BUDGET."""
    raw = os.environ.get("SCHOTTKY_GAUGE_BUDGET")
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class Tolerances:
    """Every floating-point tolerance of the module, in one place."""

    symmetry: float = 1e-12       # relative asymmetry allowed before rejection
    norm: float = 1e-9            # relative error allowed in norm recomputation
    radius_slack: float = 1e-9    # multiplicative slack on the enumeration radius
    det_one: float = 1e-6         # |det - 1| allowed in PPAV mode


TOL = Tolerances()


class Mode(enum.Enum):
    PPAV = "ppav"
    PLAIN = "plain"


@dataclass(frozen=True)
class GramMatrix:
    dim: int
    entries: np.ndarray  # symmetrized copy, shape (dim, dim)
    mode: Mode

    def __post_init__(self):
        object.__setattr__(self, "entries", np.array(self.entries, dtype=float))
        self.entries.setflags(write=False)

    def norm_sq(self, coeffs) -> float:
        x = np.asarray(coeffs, dtype=float)
        return float(x @ self.entries @ x)


@dataclass(frozen=True)
class ShortVector:
    coeffs: tuple[int, ...]
    norm_sq: float

    def __post_init__(self):
        if not any(self.coeffs):
            raise DomainError("short vector must be nonzero")


@dataclass(frozen=True)
class SuccessiveMinima:
    k: int
    values: tuple[float, ...]
    witnesses: tuple[ShortVector, ...]
    independent: bool = True


def validate(raw, mode: Mode = Mode.PLAIN) -> GramMatrix:
    """Check symmetry, positive definiteness and (PPAV mode) unit determinant.

    Symmetrizes via (G + G^T)/2 once the asymmetry passes the tolerance.
    """
    a = np.array(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    d = a.shape[0]
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.max(np.abs(a - a.T))) > TOL.symmetry * scale:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    g = 0.5 * (a + a.T)
    if mode is Mode.PPAV and d % 2 != 0:
        raise OddDimension(f"PPAV Gram matrix must have even dimension, got {d}")
    try:
        chol = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise NotPositiveDefinite("matrix is not positive definite") from None
    if mode is Mode.PPAV:
        det = float(np.prod(np.diag(chol))) ** 2
        if abs(det - 1.0) > TOL.det_one:
            raise DeterminantNotOne(f"determinant {det} differs from 1")
    return GramMatrix(dim=d, entries=g, mode=mode)


def _lll(basis: np.ndarray, delta: float = 0.99, max_swaps: int = 10**6):
    """LLL reduction of the row basis; returns (reduced rows, integer T).

    Row i of the reduced basis equals row i of T applied to the input rows,
    so the reduced Gram is T G T^T with T unimodular.
    """
    b = basis.copy()
    n = b.shape[0]
    t = np.eye(n, dtype=np.int64)
    swaps = 0

    def gso(rows):
        ortho = np.zeros_like(rows)
        mu = np.zeros((n, n))
        for i in range(n):
            v = rows[i].copy()
            for j in range(i):
                denom = ortho[j] @ ortho[j]
                mu[i, j] = (rows[i] @ ortho[j]) / denom
                v -= mu[i, j] * ortho[j]
            ortho[i] = v
        return ortho, mu

    ortho, mu = gso(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q != 0:
                b[k] -= q * b[j]
                t[k] -= q * t[j]
                ortho, mu = gso(b)
        nk = ortho[k] @ ortho[k]
        nk1 = ortho[k - 1] @ ortho[k - 1]
        if nk >= (delta - mu[k, k - 1] ** 2) * nk1:
            k += 1
        else:
            b[[k - 1, k]] = b[[k, k - 1]]
            t[[k - 1, k]] = t[[k, k - 1]]
            ortho, mu = gso(b)
            k = max(k - 1, 1)
            swaps += 1
            if swaps > max_swaps:
                raise NumericalBreakdown("LLL swap budget exhausted")
    return b, t


def reduce(gram: GramMatrix) -> tuple[GramMatrix, np.ndarray]:
    """LLL-reduce (delta = 0.99); returns the reduced Gram and the integer
    unimodular T with reduced = T G T^T."""
    chol = np.linalg.cholesky(gram.entries)  # rows are a basis realizing G
    _, t = _lll(chol)
    reduced = t @ gram.entries @ t.T
    reduced = 0.5 * (reduced + reduced.T)
    return GramMatrix(dim=gram.dim, entries=reduced, mode=gram.mode), t


def _canonical_sign(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    for c in coeffs:
        if c != 0:
            return coeffs if c > 0 else tuple(-x for x in coeffs)
    return coeffs


def enumerate_below(gram: GramMatrix, radius_sq: float, budget: int | None = None
                    ) -> list[ShortVector]:
    """All nonzero integer vectors with form value <= radius_sq (one
    representative per +/- pair), in ascending (norm, coefficient) order.

    Fincke-Pohst tree search on the triangular factorization of the
    LLL-reduced form; a multiplicative slack keeps boundary vectors whose
    float norm lands within tolerance of the radius.
    """
    if radius_sq <= 0:
        raise DomainError("radius_sq must be positive")
    if budget is None:
        budget = node_budget()
    reduced, t = reduce(gram)
    d = gram.dim
    r = np.linalg.cholesky(reduced.entries).T  # upper triangular, G' = R^T R
    limit = radius_sq * (1.0 + TOL.radius_slack)
    found: dict[tuple[int, ...], float] = {}
    nodes = 0

    x = [0] * d

    def descend(i: int, partial: float):
        nonlocal nodes
        if i < 0:
            coeffs = tuple(int(v) for v in (t.T @ np.array(x, dtype=np.int64)))
            if any(coeffs):
                coeffs = _canonical_sign(coeffs)
                norm = gram.norm_sq(coeffs)
                if norm <= limit:
                    found.setdefault(coeffs, norm)
            return
        # offset contributed by already-fixed coordinates x[i+1:]
        off = sum(r[i, j] * x[j] for j in range(i + 1, d))
        room = limit - partial
        if room < 0:
            return
        half = math.sqrt(room) / r[i, i]
        center = -off / r[i, i]
        lo = math.ceil(center - half - 1e-12)
        hi = math.floor(center + half + 1e-12)
        for v in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} nodes")
            x[i] = v
            term = (r[i, i] * v + off) ** 2
            if term <= room + 1e-12:
                descend(i - 1, partial + term)
        x[i] = 0

    descend(d - 1, 0.0)
    vecs = [ShortVector(c, n) for c, n in found.items()]
    vecs.sort(key=lambda sv: (sv.norm_sq, sv.coeffs))
    return vecs


class _ExactRank:
    """Incremental rank over the rationals via fraction row echelon."""

    def __init__(self):
        self.rows: list[list[Fraction]] = []

    def admits(self, vec: tuple[int, ...]) -> bool:
        row = [Fraction(c) for c in vec]
        for pivot_row in self.rows:
            p = next(i for i, v in enumerate(pivot_row) if v != 0)
            if row[p] != 0:
                factor = row[p] / pivot_row[p]
                row = [a - factor * b for a, b in zip(row, pivot_row)]
        if any(v != 0 for v in row):
            self.rows.append(row)
            return True
        return False


def minkowski_radius(gram: GramMatrix) -> float:
    """Minkowski first-theorem radius (4/pi) det^(1/d) Gamma(d/2+1)^(2/d):
    guaranteed to contain a nonzero lattice vector."""
    d = gram.dim
    logdet = 2.0 * float(np.sum(np.log(np.diag(np.linalg.cholesky(gram.entries)))))
    return 4.0 / math.pi * math.exp(logdet / d + 2.0 / d * math.lgamma(d / 2.0 + 1.0))


def successive_minima(gram: GramMatrix, k: int) -> SuccessiveMinima:
    """First k successive minima with independent witness vectors.

    Scans enumeration output in ascending norm order, admitting a vector
    iff it raises the exact rational rank of the witness set; the radius
    starts at the Minkowski bound and doubles until k witnesses exist.
    """
    if not 1 <= k <= gram.dim:
        raise DomainError(f"k must be in [1, {gram.dim}], got {k}")
    radius = minkowski_radius(gram)
    while True:
        vecs = enumerate_below(gram, radius)
        rank = _ExactRank()
        witnesses = []
        for sv in vecs:
            if rank.admits(sv.coeffs):
                witnesses.append(sv)
                if len(witnesses) == k:
                    # a candidate below radius could still be missed only if
                    # it were longer than these; the scan order forbids that
                    return SuccessiveMinima(
                        k=k,
                        values=tuple(w.norm_sq for w in witnesses),
                        witnesses=tuple(witnesses),
                    )
        radius *= 2.0


def check_minkowski(gram: GramMatrix, minima: SuccessiveMinima) -> dict:
    """Second-theorem compliance: sum of log m_k^2 against the PPAV ceiling."""
    from . import bounds  # deferred: bounds imports this module for exclusion

    if gram.mode is not Mode.PPAV:
        raise DomainError("Minkowski check applies to PPAV-mode matrices")
    if minima.k < gram.dim:
        raise IncompleteMinima(f"need all {gram.dim} minima, got {minima.k}")
    g = gram.dim // 2
    total = sum(math.log(v) for v in minima.values)
    ceiling = bounds.minkowski_product_log_bound(g)
    return {
        "g": g,
        "sum_log_minima_sq": total,
        "log_bound": ceiling,
        "slack": ceiling - total,
        "passed": total <= ceiling + 1e-12,
    }


# ----------------------------------------------------------------------
# File formats
# ----------------------------------------------------------------------

def parse_gram_text(text: str, mode: Mode | None = None) -> GramMatrix:
    """Parse either the JSON or the whitespace Gram-matrix format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        d = int(obj["dim"])
        entries = np.array(obj["entries"], dtype=float).reshape(d, d)
        file_mode = Mode(obj.get("mode", "plain"))
    else:
        tokens = text.split()
        if not tokens:
            raise NotSymmetric("empty Gram matrix file")
        d = int(tokens[0])
        if len(tokens) != 1 + d * d:
            raise NotSymmetric(f"expected {d * d} entries, got {len(tokens) - 1}")
        entries = np.array([float(t) for t in tokens[1:]]).reshape(d, d)
        file_mode = Mode.PLAIN
    return validate(entries, mode if mode is not None else file_mode)


def load_gram(path: str, mode: Mode | None = None) -> GramMatrix:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_gram_text(text, mode)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise NotSymmetric(f"cannot parse Gram matrix file: {exc}") from exc


def dump_gram(gram: GramMatrix) -> str:
    """JSON serialization with 17-significant-digit decimals."""
    entries = [float(format(v, ".17g")) for v in gram.entries.ravel()]
    return json.dumps(
        {"dim": gram.dim, "entries": entries, "mode": gram.mode.value}
    )


__all__ = [
    "DEFAULT_NODE_BUDGET",
    "GramMatrix",
    "Mode",
    "ShortVector",
    "SuccessiveMinima",
    "Tolerances",
    "TOL",
    "ValidationError",
    "check_minkowski",
    "dump_gram",
    "enumerate_below",
    "load_gram",
    "minkowski_radius",
    "node_budget",
    "parse_gram_text",
    "reduce",
    "successive_minima",
    "validate",
]
