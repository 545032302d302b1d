import pytest

from catacool.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPassivity:
    def test_passive_pair(self, capsys):
        code, out, _ = run(capsys, "passivity", "--pc", "0.9,0.1", "--ph", "0.5,0.3,0.2")
        assert code == 0
        assert out == "key,value\npassive,true\n"

    def test_active_pair(self, capsys):
        code, out, _ = run(capsys, "passivity", "--pc", "0.5,0.5", "--ph", "0.5,0.3,0.2")
        assert code == 0
        assert "passive,false" in out


class TestProbabilityParsing:
    def test_bad_sum_exits_2(self, capsys):
        code, _, err = run(capsys, "passivity", "--pc", "0.5,0.4", "--ph", "0.6,0.4")
        assert code == 2
        assert "error" in err

    def test_small_drift_renormalized_with_warning(self, capsys):
        code, out, err = run(
            capsys, "passivity", "--pc", "0.90000003,0.1", "--ph", "0.6,0.4"
        )
        assert code == 0
        assert "renormalizing" in err

    def test_unsorted_rejected(self, capsys):
        code, _, err = run(capsys, "passivity", "--pc", "0.4,0.6", "--ph", "0.6,0.4")
        assert code == 2


class TestCnu1Commands:
    def test_check_certificate_row(self, capsys):
        code, out, _ = run(
            capsys, "cnu1-check", "--pc", "0.6,0.4", "--ph", "0.6,0.4", "--pv", "0.55,0.45"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "exists,i,l,lp,chain_kind,loop_current"
        assert lines[1] == "true,1,1,1,hot-only,0.024"

    def test_check_no_certificate_exits_3(self, capsys):
        code, out, _ = run(
            capsys, "cnu1-check", "--pc", "0.6,0.4", "--ph", "0.6,0.4", "--pv", "0.5,0.5"
        )
        assert code == 3
        assert "false" in out

    def test_run_reports_verification(self, capsys, tmp_path):
        plan_file = tmp_path / "plan.txt"
        code, out, _ = run(
            capsys,
            "cnu1-run",
            "--pc", "0.6,0.4",
            "--ph", "0.6,0.4",
            "--pv", "0.55,0.45",
            "--plan-out", str(plan_file),
        )
        assert code == 0
        assert "catalyst_max_deviation,0" in out
        assert "violated_prefix,1" in out
        text = plan_file.read_text()
        assert text.startswith("dims=2,2,2")
        assert "cooling 2c1h1v -> 1c2h2v" in text

    def test_run_without_loop_exits_3(self, capsys):
        code, _, err = run(
            capsys, "cnu1-run", "--pc", "0.6,0.4", "--ph", "0.6,0.4", "--pv", "0.5,0.5"
        )
        assert code == 3

    def test_general_system_variant(self, capsys):
        code, out, _ = run(
            capsys, "cnu1-check", "--ps", "0.4,0.35,0.25", "--pv", "0.542,0.458"
        )
        assert code == 0
        assert "right" in out


class TestSynthesizeAndDiagram:
    def test_synthesize(self, capsys):
        code, out, _ = run(capsys, "synthesize", "--pc", "0.6,0.4", "--ph", "0.5,0.3,0.2")
        assert code == 0
        assert out.startswith("key,value\ndv,")

    def test_synthesize_mixed_exits_3(self, capsys):
        code, _, err = run(capsys, "synthesize", "--pc", "0.5,0.5", "--ph", "0.5,0.5")
        assert code == 3

    def test_diagram_sections(self, capsys):
        code, out, _ = run(
            capsys,
            "diagram",
            "--pc", "0.6,0.4",
            "--ph", "0.6,0.4",
            "--pv", "0.55,0.45",
            "--with-plan",
        )
        assert code == 0
        assert out.startswith("columns\nlabel,log_value\n")
        assert "\nrows\n" in out and "\narrows\n" in out
        assert "cooling,2c1h1v,1c2h2v" in out


class TestSweeps:
    def test_optimal_qubit_point(self, capsys):
        code, out, _ = run(capsys, "optimal-qubit", "--p2c", "0.25", "--p2h", "0.25")
        assert code == 0
        assert "J_cool_max,0.0681818181818" in out

    def test_optimal_qubit_sweep_deterministic(self, capsys):
        _, out1, _ = run(capsys, "optimal-qubit", "--sweep")
        _, out2, _ = run(capsys, "optimal-qubit", "--sweep")
        assert out1 == out2
        assert out1.startswith("p2c,p2h,n,J_cool_max,p1c_final,in_cooling_region\n")

    def test_config_overrides_grid(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("p2h_points=3\nfrac_points=2\nn_values=2\n")
        code, out, _ = run(capsys, "optimal-qubit", "--sweep", "--config", str(cfg))
        assert code == 0
        assert len(out.splitlines()) == 1 + 3 * 2 * 1

    def test_enhance_point_and_regime_error(self, capsys):
        code, out, _ = run(capsys, "enhance", "--p2c", "0.25", "--x", "0.05")
        assert code == 0
        assert "p1v_matches,true" in out
        code, _, err = run(capsys, "enhance", "--p2c", "0.1", "--x", "0.5")
        assert code == 3

    def test_enhance_hot_sweep_needs_x_cold(self, capsys):
        code, _, err = run(capsys, "enhance", "--sweep", "hot")
        assert code == 2

    def test_mbc_point_gamma(self, capsys):
        code, out, _ = run(capsys, "mbc-vs-cc", "--N", "12", "--p2", "0.5", "--Nc", "7")
        assert code == 0
        assert "gamma,1.33333333333" in out

    def test_mbc_sweeps(self, capsys):
        code, out, _ = run(capsys, "mbc-vs-cc", "--sweep", "xi", "--points", "5")
        assert code == 0
        assert out.startswith("p2,k,xi\n")
        code, out, _ = run(capsys, "mbc-vs-cc", "--sweep", "gamma", "--points", "5")
        assert code == 0
        assert out.startswith("Nc_over_N,beta_label,gamma_or_bound,is_exact\n")

    def test_thermometry_sweep_and_point(self, capsys):
        code, out, _ = run(capsys, "thermometry", "--ratio", "0.3", "--points", "5")
        assert code == 0
        assert out.startswith("x,sigma_prime,sigma_double_prime,cramer_rao,in_optimal_regime\n")
        assert len(out.splitlines()) == 6
        code, out, _ = run(capsys, "thermometry", "--beta", "2.0", "--probe", "0.75,0.25")
        assert code == 0
        assert "sigma_prime," in out and "cramer_rao," in out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.csv"
        code, out, _ = run(
            capsys, "passivity", "--pc", "0.9,0.1", "--ph", "0.6,0.4", "-o", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == "key,value\npassive,true\n"


class TestOracleCommand:
    @pytest.mark.parametrize("which", ["passivity", "cnu1", "hot-only", "lp"])
    def test_no_disagreements(self, capsys, which):
        trials = "10" if which in ("cnu1", "lp") else "50"
        code, out, _ = run(
            capsys, "oracle", "--which", which, "--trials", trials, "--seed", "7"
        )
        assert code == 0
        assert "disagreements,0" in out

    def test_seed_changes_nothing_on_agreement(self, capsys):
        for seed in ("1", "2"):
            code, out, _ = run(
                capsys, "oracle", "--which", "hot-only", "--trials", "25", "--seed", seed
            )
            assert code == 0
