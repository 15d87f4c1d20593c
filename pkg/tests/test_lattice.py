"""Lattice engine: validation, reduction, enumeration, successive minima.

The brute-force oracle enumerates the coefficient box given by the
Cauchy-Schwarz bound per coordinate (diagonal of G^-1 times the radius)
and double-checks every operation that admits exhaustive search.
"""

import itertools
import json
import math

import numpy as np
import pytest

from schottky_gauge import lattice
from schottky_gauge.errors import (
    BudgetExceeded,
    DeterminantNotOne,
    DomainError,
    IncompleteMinima,
    NotPositiveDefinite,
    NotSymmetric,
    OddDimension,
)

HEX = (2.0 / math.sqrt(3.0)) * np.array([[1.0, 0.5], [0.5, 1.0]])
HEX_MIN = 1.1547005383792515  # 2/sqrt(3)


def brute_force_below(entries, radius_sq):
    """Exhaustive +/- class search over the Cauchy-Schwarz coefficient box."""
    g = np.asarray(entries, dtype=float)
    d = g.shape[0]
    inv_diag = np.diag(np.linalg.inv(g))
    box = [int(math.floor(math.sqrt(radius_sq * inv_diag[i] * (1 + 1e-9)))) + 1
           for i in range(d)]
    out = {}
    for coeffs in itertools.product(*(range(-b, b + 1) for b in box)):
        if not any(coeffs):
            continue
        first = next(c for c in coeffs if c)
        if first < 0:
            continue
        x = np.array(coeffs, dtype=float)
        n = float(x @ g @ x)
        if n <= radius_sq * (1 + 1e-9):
            out[coeffs] = n
    return out


def brute_force_minima(entries, k):
    g = np.asarray(entries, dtype=float)
    # the unit vectors span and all have norm <= the largest diagonal entry
    radius = float(np.max(np.diag(g)))
    while True:
        vecs = sorted(brute_force_below(g, radius).items(),
                      key=lambda kv: (kv[1], kv[0]))
        basis = []
        values = []
        for coeffs, norm in vecs:
            m = np.array(basis + [coeffs])
            if np.linalg.matrix_rank(m) == len(basis) + 1:
                basis.append(coeffs)
                values.append(norm)
                if len(values) == k:
                    return values
        radius *= 2.0


class TestValidate:
    def test_identity_plain(self):
        g = lattice.validate(np.eye(2), lattice.Mode.PLAIN)
        assert g.dim == 2

    def test_indefinite_rejected(self):
        with pytest.raises(NotPositiveDefinite):
            lattice.validate([[1.0, 2.0], [2.0, 1.0]], lattice.Mode.PLAIN)

    def test_odd_dimension_ppav(self):
        with pytest.raises(OddDimension):
            lattice.validate(np.eye(3), lattice.Mode.PPAV)

    def test_asymmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            lattice.validate([[1.0, 0.1], [0.0, 1.0]], lattice.Mode.PLAIN)

    def test_tiny_asymmetry_symmetrized(self):
        a = np.eye(2)
        a[0, 1] = 1e-14
        g = lattice.validate(a, lattice.Mode.PLAIN)
        assert g.entries[0, 1] == g.entries[1, 0]

    def test_determinant_check(self):
        with pytest.raises(DeterminantNotOne):
            lattice.validate(2.0 * np.eye(2), lattice.Mode.PPAV)
        lattice.validate(np.diag([2.0, 0.5]), lattice.Mode.PPAV)


class TestReduce:
    def test_identity_fixed(self):
        g = lattice.validate(np.eye(4), lattice.Mode.PLAIN)
        red, t = lattice.reduce(g)
        assert np.allclose(red.entries, np.eye(4))
        assert abs(round(np.linalg.det(t))) == 1

    def test_det_preserved_2d(self):
        g = lattice.validate([[4.0, 2.0], [2.0, 4.0]], lattice.Mode.PLAIN)
        red, t = lattice.reduce(g)
        assert red.entries[0, 0] <= 4.0 + 1e-9
        assert np.linalg.det(red.entries) == pytest.approx(12.0, rel=1e-9)
        assert np.allclose(t @ g.entries @ t.T, red.entries, rtol=1e-9)

    def test_det_preserved_random_6d(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            b = rng.normal(size=(6, 6))
            raw = b @ b.T + 0.5 * np.eye(6)
            g = lattice.validate(raw, lattice.Mode.PLAIN)
            red, t = lattice.reduce(g)
            assert np.linalg.det(red.entries) == pytest.approx(
                np.linalg.det(g.entries), rel=1e-9)
            assert abs(round(np.linalg.det(t))) == 1


class TestEnumerate:
    def test_identity_radius_one(self):
        g = lattice.validate(np.eye(2), lattice.Mode.PLAIN)
        vecs = lattice.enumerate_below(g, 1.0)
        assert {v.coeffs for v in vecs} == {(1, 0), (0, 1)}

    def test_hexagonal(self):
        g = lattice.validate(HEX, lattice.Mode.PLAIN)
        vecs = lattice.enumerate_below(g, 1.2)
        assert len(vecs) == 3
        for v in vecs:
            assert v.norm_sq == pytest.approx(HEX_MIN, rel=1e-9)

    def test_identity4_radius_two(self):
        g = lattice.validate(np.eye(4), lattice.Mode.PLAIN)
        vecs = lattice.enumerate_below(g, 2.0)
        ones = [v for v in vecs if abs(v.norm_sq - 1.0) < 1e-9]
        twos = [v for v in vecs if abs(v.norm_sq - 2.0) < 1e-9]
        assert len(ones) == 4
        assert len(twos) == 12
        assert len(vecs) == 16

    def test_budget(self):
        g = lattice.validate(np.eye(6), lattice.Mode.PLAIN)
        with pytest.raises(BudgetExceeded):
            lattice.enumerate_below(g, 50.0, budget=10)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            d = int(rng.integers(2, 7))
            b = rng.normal(size=(d, d))
            raw = b @ b.T + 0.3 * np.eye(d)
            g = lattice.validate(raw, lattice.Mode.PLAIN)
            m1 = lattice.successive_minima(g, 1).values[0]
            radius = 3.0 * m1
            got = {v.coeffs: v.norm_sq for v in lattice.enumerate_below(g, radius)}
            want = brute_force_below(g.entries, radius)
            assert set(got) == set(want)
            for c in got:
                assert got[c] == pytest.approx(want[c], rel=1e-9)


class TestSuccessiveMinima:
    def test_identity_all_one(self):
        g = lattice.validate(np.eye(6), lattice.Mode.PLAIN)
        m = lattice.successive_minima(g, 6)
        assert m.values == (1.0,) * 6

    def test_diagonal(self):
        g = lattice.validate(np.diag([0.25, 4.0]), lattice.Mode.PLAIN)
        m = lattice.successive_minima(g, 2)
        assert m.values[0] == pytest.approx(0.25, rel=1e-12)
        assert m.values[1] == pytest.approx(4.0, rel=1e-12)

    def test_hexagonal_witnesses(self):
        g = lattice.validate(HEX, lattice.Mode.PLAIN)
        m = lattice.successive_minima(g, 2)
        assert m.values[0] == pytest.approx(HEX_MIN, rel=1e-9)
        assert m.values[1] == pytest.approx(HEX_MIN, rel=1e-9)
        w = np.array([v.coeffs for v in m.witnesses])
        assert np.linalg.matrix_rank(w) == 2

    def test_values_sorted_and_witness_norms(self):
        rng = np.random.default_rng(3)
        b = rng.normal(size=(5, 5))
        g = lattice.validate(b @ b.T + 0.4 * np.eye(5), lattice.Mode.PLAIN)
        m = lattice.successive_minima(g, 5)
        assert list(m.values) == sorted(m.values)
        for v in m.witnesses:
            assert v.norm_sq == pytest.approx(g.norm_sq(v.coeffs), rel=1e-9)

    def test_k_range(self):
        g = lattice.validate(np.eye(2), lattice.Mode.PLAIN)
        with pytest.raises(DomainError):
            lattice.successive_minima(g, 3)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(23)
        for _ in range(15):
            d = int(rng.integers(2, 6))
            b = rng.normal(size=(d, d))
            g = lattice.validate(b @ b.T + 0.3 * np.eye(d), lattice.Mode.PLAIN)
            got = lattice.successive_minima(g, d).values
            want = brute_force_minima(g.entries, d)
            for a, w in zip(got, want):
                assert a == pytest.approx(w, rel=1e-9)


class TestMinkowski:
    def test_identity_g2(self):
        g = lattice.validate(np.eye(4), lattice.Mode.PPAV)
        m = lattice.successive_minima(g, 4)
        rep = lattice.check_minkowski(g, m)
        assert rep["passed"]
        assert rep["sum_log_minima_sq"] == pytest.approx(0.0, abs=1e-12)
        assert rep["slack"] == pytest.approx(1.8694233116608715, rel=1e-9)

    def test_hexagonal_pair(self):
        g4 = np.zeros((4, 4))
        g4[:2, :2] = HEX
        g4[2:, 2:] = HEX
        g = lattice.validate(g4, lattice.Mode.PPAV)
        m = lattice.successive_minima(g, 4)
        rep = lattice.check_minkowski(g, m)
        assert rep["passed"]
        assert rep["sum_log_minima_sq"] == pytest.approx(
            4.0 * math.log(HEX_MIN), rel=1e-9)

    def test_requires_all_minima(self):
        g = lattice.validate(np.eye(4), lattice.Mode.PPAV)
        m = lattice.successive_minima(g, 2)
        with pytest.raises(IncompleteMinima):
            lattice.check_minkowski(g, m)

    def test_requires_ppav(self):
        g = lattice.validate(np.eye(4), lattice.Mode.PLAIN)
        m = lattice.successive_minima(g, 4)
        with pytest.raises(DomainError):
            lattice.check_minkowski(g, m)


class TestFileFormats:
    def test_json_roundtrip(self, tmp_path):
        g = lattice.validate(HEX, lattice.Mode.PLAIN)
        text = lattice.dump_gram(g)
        back = lattice.parse_gram_text(text)
        assert np.allclose(back.entries, g.entries, rtol=1e-15)

    def test_plain_text(self, tmp_path):
        p = tmp_path / "gram.txt"
        p.write_text("2  1 0  0 1\n")
        g = lattice.load_gram(str(p))
        assert g.dim == 2

    def test_json_file(self, tmp_path):
        p = tmp_path / "gram.json"
        p.write_text(json.dumps({
            "dim": 2,
            "entries": [1.0, 0.0, 0.0, 1.0],
            "mode": "ppav",
        }))
        g = lattice.load_gram(str(p))
        assert g.mode is lattice.Mode.PPAV

    def test_malformed(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("2 1 0 0\n")
        with pytest.raises(NotSymmetric):
            lattice.load_gram(str(p))


class TestProperties:
    def test_transform_invariance(self):
        rng = np.random.default_rng(5)
        base = np.array([[2.0, 0.4, 0.1], [0.4, 1.5, 0.2], [0.1, 0.2, 3.0]])
        g = lattice.validate(base, lattice.Mode.PLAIN)
        ref = lattice.successive_minima(g, 3).values
        for _ in range(25):
            t = _random_unimodular(rng, 3)
            gt = lattice.validate(t.T @ base @ t, lattice.Mode.PLAIN)
            got = lattice.successive_minima(gt, 3).values
            for a, b in zip(got, ref):
                assert a == pytest.approx(b, rel=1e-9)

    def test_scaling_covariance(self):
        g = lattice.validate(HEX, lattice.Mode.PLAIN)
        ref = lattice.successive_minima(g, 2).values
        for c in (0.25, 2.0, 9.0):
            gc = lattice.validate(c * HEX, lattice.Mode.PLAIN)
            got = lattice.successive_minima(gc, 2).values
            for a, b in zip(got, ref):
                assert a == pytest.approx(c * b, rel=1e-9)

    def test_hermite_upper_bound_on_ppav(self):
        rng = np.random.default_rng(17)
        from schottky_gauge import bounds
        for _ in range(20):
            raw = _random_det_one(rng, 4)
            g = lattice.validate(raw, lattice.Mode.PPAV)
            m1 = lattice.successive_minima(g, 1).values[0]
            assert m1 <= bounds.hermite_ppav_bounds(2)[1] * (1 + 1e-9)


def _random_unimodular(rng, d):
    t = np.eye(d, dtype=np.int64)
    for _ in range(12):
        i, j = rng.integers(0, d, size=2)
        if i == j:
            continue
        t[i] += int(rng.integers(-2, 3)) * t[j]
    return t


def _random_det_one(rng, d):
    b = rng.normal(size=(d, d))
    raw = b @ b.T + 0.3 * np.eye(d)
    det = np.linalg.det(raw)
    return raw / det ** (1.0 / d)
