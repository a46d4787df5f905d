"""Round-trip reports and seeded sweeps."""

import math
import random

import pytest

from armkin import CartesianTarget, JointAngles, fk, roundtrip, sweep, sweep_cartesian_box, sweep_joint_space
from armkin.validate import CSV_HEADER


class TestRoundtrip:
    def test_validation_point(self, links):
        report = roundtrip(links, CartesianTarget(3.0, -5.0, -8.0))
        assert report.ok
        assert report.error_norm < 1e-3
        assert report.domain_fixes_triggered == 0
        assert report.recovered is not None

    def test_straight_pose(self, links):
        target = fk(links, JointAngles(0.0, 0.0, 0.0)).position
        report = roundtrip(links, target)
        assert report.ok
        assert report.error_norm < 1e-9

    def test_unreachable_becomes_failure_report(self, links):
        report = roundtrip(links, CartesianTarget(1000.0, 0.0, 0.0))
        assert not report.ok
        assert "a2+a3" in report.failure_reason
        assert report.angles is None and report.recovered is None

    def test_error_norm_is_distance(self, links):
        report = roundtrip(links, CartesianTarget(40.0, 20.0, -30.0))
        assert report.ok
        assert report.error_norm == math.dist(report.target, report.recovered)


class TestJointSpaceSweep:
    def test_zero_failures_and_tiny_errors(self, config):
        summary = sweep_joint_space(config.links, 1000, seed=7, limits=config.joint_limits())
        assert summary.samples == 1000
        assert summary.failures == 0
        assert summary.max_error <= 1e-6 * config.links.reach
        assert sum(summary.histogram.values()) == 1000

    def test_deterministic_under_seed(self, config):
        a = sweep_joint_space(config.links, 50, seed=3, limits=config.joint_limits())
        b = sweep_joint_space(config.links, 50, seed=3, limits=config.joint_limits())
        assert a == b

    def test_different_seeds_differ(self, config):
        a = sweep_joint_space(config.links, 50, seed=3, limits=config.joint_limits())
        b = sweep_joint_space(config.links, 50, seed=4, limits=config.joint_limits())
        assert a != b

    def test_single_sample(self, config):
        summary = sweep_joint_space(config.links, 1, seed=0, limits=config.joint_limits())
        assert summary.samples == 1
        assert summary.failures + sum(summary.histogram.values()) == 1

    def test_rejects_empty(self, config):
        with pytest.raises(ValueError):
            sweep_joint_space(config.links, 0, seed=0)


class TestCartesianBoxSweep:
    def test_box_with_unreachable_regions_reports_failures(self, links):
        r = links.a0 + links.reach
        summary = sweep_cartesian_box(links, 200, seed=11, box=(-r, r, -r, r, -r, r))
        assert summary.failures > 0
        assert summary.failures + sum(summary.histogram.values()) == summary.samples

    def test_failures_plus_successes_cover_samples(self, links):
        summary = sweep_cartesian_box(links, 300, seed=13)
        assert summary.failures + sum(summary.histogram.values()) == 300

    def test_reachable_samples_solve_exactly(self, links):
        # box confined to comfortably reachable space
        summary = sweep_cartesian_box(links, 200, seed=17, box=(60.0, 120.0, -50.0, 50.0, -40.0, -10.0))
        assert summary.failures == 0
        assert summary.max_error < 1e-9


class TestSweepDispatch:
    def test_sampler_names(self, config):
        joint = sweep(config.links, "joint", 20, 1, limits=config.joint_limits())
        box = sweep(config.links, "box", 20, 1)
        assert joint.samples == box.samples == 20
        with pytest.raises(ValueError):
            sweep(config.links, "spiral", 20, 1)

    def test_csv_row_round_trips_by_eye(self, config):
        summary = sweep(config.links, "joint", 25, 9, limits=config.joint_limits())
        row = summary.csv_row(seed=9)
        assert CSV_HEADER == "seed,samples,max_error,mean_error,failures"
        fields = row.split(",")
        assert fields[0] == "9" and fields[1] == "25"
        assert fields[2] == f"{summary.max_error:.9e}"
        assert int(fields[4]) == summary.failures
