"""Parameter sweeps and level-crossing detection."""

import math

import numpy as np
import pytest

from pdmag.errors import DomainError
from pdmag.models import ModelKind, model_a_energy, model_c_energy
from pdmag.params import PhysicalParams, QuantumState
from pdmag.sweeps import SWEEPABLE, CrossingPoint, SweepSpec, find_crossings, sweep


class TestSweepSpec:
    def test_validation(self):
        states = (QuantumState(0, 1),)
        with pytest.raises(DomainError, match="lo < hi"):
            SweepSpec(ModelKind.A, states, "beta", 2.0, -2.0, 11)
        with pytest.raises(DomainError, match="steps"):
            SweepSpec(ModelKind.A, states, "beta", -2.0, 2.0, 1)
        with pytest.raises(DomainError, match="at least one state"):
            SweepSpec(ModelKind.A, (), "beta", -2.0, 2.0, 11)
        with pytest.raises(DomainError, match="cannot sweep"):
            SweepSpec(ModelKind.A, states, "eta", -2.0, 2.0, 11)

    def test_delta_only_matters_for_the_screened_model(self):
        states = (QuantumState(0, 1),)
        with pytest.raises(DomainError, match="do not depend"):
            SweepSpec(ModelKind.A, states, "delta", 0.01, 0.5, 11)
        spec = SweepSpec(ModelKind.C, states, "delta", 0.01, 0.5, 11)
        assert spec.values[0] == 0.01

    def test_grid(self):
        spec = SweepSpec(ModelKind.A, (QuantumState(0, 0),), "beta", -1.0, 1.0, 5)
        np.testing.assert_allclose(spec.values, [-1.0, -0.5, 0.0, 0.5, 1.0])


class TestSweep:
    def test_all_valid_model_a(self, unit_params):
        spec = SweepSpec(
            ModelKind.A, (QuantumState(0, 1), QuantumState(1, 0)), "beta", -2.0, 2.0, 41
        )
        rows = sweep(spec, unit_params)
        assert len(rows) == 82
        assert all(r.valid for r in rows)

    def test_rows_match_direct_evaluation(self, unit_params):
        spec = SweepSpec(ModelKind.A, (QuantumState(1, 1),), "b0", 0.5, 2.0, 7)
        for row in sweep(spec, unit_params):
            direct = model_a_energy(row.state, unit_params.replace(b0=row.value))
            assert row.energy == direct

    def test_deterministic_ordering(self, unit_params):
        # (value, state) lexicographic regardless of the states' input order
        spec = SweepSpec(
            ModelKind.A, (QuantumState(1, 0), QuantumState(0, 1)), "beta", 0.0, 1.0, 3
        )
        rows = sweep(spec, unit_params)
        keys = [(r.value, r.state) for r in rows]
        assert keys == sorted(keys)

    def test_unbound_points_marked_invalid(self):
        # model B at beta = -25 pushes beta_acute negative over part of the
        # mu range, so some rows lose their bound state
        params = PhysicalParams(beta=-25.0, kz=1.0)
        spec = SweepSpec(ModelKind.B, (QuantumState(1, 1),), "mu", 0.01, 0.4, 21)
        rows = sweep(spec, params)
        flags = [r.valid for r in rows]
        assert any(flags) and not all(flags)
        assert all(r.energy is None for r in rows if not r.valid)

    def test_sweeping_into_invalid_parameter_values(self, unit_params):
        # eta stays fixed, but a b0 sweep may cross b0 < 0 which the
        # parameter type itself rejects; those rows must come back invalid
        spec = SweepSpec(ModelKind.A, (QuantumState(0, 0),), "b0", -0.5, 0.5, 11)
        rows = sweep(spec, unit_params)
        assert not rows[0].valid
        assert rows[-1].valid


class TestFindCrossings:
    def test_flux_sweep_crossing_location(self, unit_params):
        # the (2,1)/(1,0) pair meets exactly at beta = 1: the level gap
        # 2[sqrt((1-b/2)^2 + 1/16) - sqrt((b/2)^2 + 1/16)] vanishes iff
        # the two square roots see the same argument
        found = find_crossings(
            ModelKind.A, QuantumState(2, 1), QuantumState(1, 0), "beta", (-3.0, 3.0), unit_params
        )
        assert len(found) == 1
        cp = found[0]
        assert isinstance(cp, CrossingPoint)
        assert cp.param_value == pytest.approx(1.0, abs=1e-9)
        assert cp.energy == pytest.approx(4.0 + 2.0 * math.sqrt(0.3125), rel=1e-9)
        assert cp.state_pair == (QuantumState(2, 1), QuantumState(1, 0))
        assert cp.bracket_width <= 1e-9

    def test_reported_crossing_reevaluates_to_degeneracy(self, unit_params):
        for cp in find_crossings(
            ModelKind.A, QuantumState(2, 1), QuantumState(1, 0), "beta", (-3.0, 3.0), unit_params
        ):
            p = unit_params.replace(beta=cp.param_value)
            gap = model_a_energy(QuantumState(2, 1), p) - model_a_energy(QuantumState(1, 0), p)
            assert abs(gap) <= 1e-9 * max(1.0, abs(cp.energy))

    def test_screened_model_delta_crossing(self, weak_field_params):
        found = find_crossings(
            ModelKind.C,
            QuantumState(0, 1),
            QuantumState(1, 0),
            "delta",
            (0.01, 0.5),
            weak_field_params,
        )
        assert len(found) >= 1
        for cp in found:
            p = weak_field_params.replace(delta=cp.param_value)
            gap = model_c_energy(QuantumState(0, 1), p) - model_c_energy(QuantumState(1, 0), p)
            assert abs(gap) <= 1e-9 * max(1.0, abs(cp.energy))

    def test_same_m_levels_never_cross(self, unit_params):
        # for fixed m the model A spectrum is strictly ordered in n_rho at
        # every parameter value, so no crossing can show up
        found = find_crossings(
            ModelKind.A, QuantumState(0, 1), QuantumState(2, 1), "beta", (-3.0, 3.0), unit_params
        )
        assert found == []

    def test_scan_resolution_does_not_change_the_answer(self, unit_params):
        args = (ModelKind.A, QuantumState(2, 1), QuantumState(1, 0), "beta", (-3.0, 3.0), unit_params)
        coarse = find_crossings(*args, scan_steps=501)
        fine = find_crossings(*args, scan_steps=4001)
        assert len(coarse) == len(fine) == 1
        assert coarse[0].param_value == pytest.approx(fine[0].param_value, abs=1e-9)

    def test_validation(self, unit_params):
        s = QuantumState(0, 1)
        with pytest.raises(DomainError, match="different states"):
            find_crossings(ModelKind.A, s, s, "beta", (-1.0, 1.0), unit_params)
        with pytest.raises(DomainError, match="lo < hi"):
            find_crossings(ModelKind.A, s, QuantumState(1, 0), "beta", (1.0, -1.0), unit_params)
        with pytest.raises(DomainError, match="cannot sweep"):
            find_crossings(ModelKind.A, s, QuantumState(1, 0), "kz", (-1.0, 1.0), unit_params)

    def test_sweepable_names(self):
        assert SWEEPABLE == ("beta", "b0", "alpha_ab", "mu", "delta")
