"""Command-line interface: output formats and exit codes."""

import math

import pytest

from armkin import default_config, dumps_config
from armkin.cli import EXIT_CONFIG, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def small_config_path(tmp_path):
    """The (2,4,6,5) demo geometry with wide-open joint travel."""
    text = (
        "links.a0 = 2.0\nlinks.a1 = 4.0\nlinks.a2 = 6.0\nlinks.a3 = 5.0\n"
        "servos.waist.min_deg = -180.0\nservos.waist.max_deg = 180.0\n"
        "servos.shoulder.min_deg = -180.0\nservos.shoulder.max_deg = 180.0\n"
        "servos.elbow.min_deg = -180.0\nservos.elbow.max_deg = 180.0\n"
        "home.shoulder_deg = 0.0\nhome.elbow_deg = 0.0\n"
        "limits.z_floor = -1000.0\nlimits.x_min_when_y_negative = -1000.0\n"
        "limits.x_threshold_when_y_positive = 1000.0\n"
        "limits.x_clamp_when_y_positive = 999.0\n"
    )
    path = tmp_path / "small.cfg"
    path.write_text(text)
    return str(path)


class TestFkCommand:
    def test_straight_pose_output(self, capsys, small_config_path):
        code = main(["--config", small_config_path, "fk", "0", "0", "0"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "15.000000 0.000000 2.000000\n"

    def test_quarter_waist_turn(self, capsys, small_config_path):
        code = main(["--config", small_config_path, "fk", "90", "0", "0"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "0.000000 15.000000 2.000000\n"

    def test_out_of_limit_angle(self, capsys, small_config_path):
        code = main(["--config", small_config_path, "fk", "400", "0", "0"])
        assert code == EXIT_DOMAIN
        assert "t1" in capsys.readouterr().err

    def test_six_decimal_parse_back(self, capsys):
        code = main(["fk", "10", "40", "30"])
        assert code == EXIT_OK
        values = [float(tok) for tok in capsys.readouterr().out.split()]
        from armkin import JointAngles, fk

        exact = fk(default_config().links, JointAngles(*(math.radians(d) for d in (10, 40, 30))),
                   default_config().joint_limits()).position
        for printed, real in zip(values, exact):
            assert abs(printed - real) < 5e-7


class TestIkCommand:
    def test_pipes_back_through_fk(self, capsys):
        code = main(["ik", "3", "-5", "-8"])
        assert code == EXIT_OK
        angles = capsys.readouterr().out.split()
        assert len(angles) == 3
        code = main(["fk", *angles])
        assert code == EXIT_OK
        x, y, z = (float(tok) for tok in capsys.readouterr().out.split())
        assert math.dist((x, y, z), (3.0, -5.0, -8.0)) < 1e-3

    def test_clamp_notice_on_diagnostics_stream(self, capsys):
        code = main(["ik", "0", "0", "-75"])
        assert code == EXIT_OK
        captured = capsys.readouterr()
        assert "Z_FLOOR" in captured.err
        assert "Z_FLOOR" not in captured.out

    def test_unreachable_exit_code_names_inequality(self, capsys):
        code = main(["ik", "0", "-500", "0"])
        assert code == EXIT_DOMAIN
        assert "a2+a3" in capsys.readouterr().err


class TestSweepCommand:
    def test_joint_sweep_passes(self, capsys):
        code = main(["sweep", "--sampler", "joint", "--n", "200", "--seed", "7"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("seed,samples,max_error,mean_error,failures\n")
        assert out.count("\n") == 2

    def test_deterministic_bytes(self, capsys):
        main(["sweep", "--sampler", "joint", "--n", "100", "--seed", "5"])
        first = capsys.readouterr().out
        main(["sweep", "--sampler", "joint", "--n", "100", "--seed", "5"])
        assert capsys.readouterr().out == first

    def test_box_sweep_with_unreachables_fails(self, capsys):
        code = main(["sweep", "--sampler", "box", "--n", "100", "--seed", "3",
                     "--box", "200", "300", "200", "300", "200", "300"])
        assert code == EXIT_DOMAIN

    def test_bad_sampler_is_usage_error(self, capsys):
        code = main(["sweep", "--sampler", "spiral", "--n", "10", "--seed", "1"])
        assert code == EXIT_USAGE

    def test_nonpositive_n_is_usage_error(self, capsys):
        code = main(["sweep", "--sampler", "joint", "--n", "0", "--seed", "1"])
        assert code == EXIT_USAGE


class TestConfigHandling:
    def test_unknown_key_exit(self, tmp_path, capsys):
        path = tmp_path / "bad.cfg"
        path.write_text("links.a7 = 12\n")
        code = main(["--config", str(path), "fk", "0", "0", "0"])
        assert code == EXIT_CONFIG
        assert "links.a7" in capsys.readouterr().err

    def test_missing_config_file(self, capsys):
        code = main(["--config", "/nonexistent/arm.cfg", "fk", "0", "0", "0"])
        assert code == EXIT_CONFIG

    def test_mode_flags_override(self, capsys, tmp_path):
        # paper branch mode demonstrably misses the straight pose; aim along -Y
        # so the workspace guard stays quiet
        path = tmp_path / "arm.cfg"
        path.write_text(dumps_config(default_config()))
        code = main(["--config", str(path), "--branch-mode", "paper", "ik", "0", "-190", "70"])
        assert code == EXIT_OK
        angles = [float(tok) for tok in capsys.readouterr().out.split()]
        assert abs(angles[1] - 180.0) < 1.0  # paper form reports an impossible shoulder

    def test_usage_error_for_missing_command(self, capsys):
        assert main([]) == EXIT_USAGE
