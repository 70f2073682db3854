"""Exit codes and byte-exact output of every subcommand."""
import pytest

from logictables.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestCompile:
    def test_not_style(self, xor_path, capsys):
        assert run_cli("compile", xor_path, "--table", "xor", "--style", "not") == 0
        assert capsys.readouterr().out == "(NOT(X) AND Y) OR (X AND NOT(Y))\n"

    def test_xnor_style(self, xor_path, capsys):
        assert run_cli("compile", xor_path, "--table", "xor", "--style", "xnor") == 0
        out = capsys.readouterr().out
        assert out == "(XNOR(X,0) AND XNOR(Y,1)) OR (XNOR(X,1) AND XNOR(Y,0))\n"

    def test_continuous_style_on_soccer_table(self, soccer_path, capsys):
        code = run_cli(
            "compile", soccer_path, "--table", "drive_forward", "--style", "continuous"
        )
        assert code == 0
        assert capsys.readouterr().out == "1.0 * EQ(s0, 1.0)\n"

    def test_spec_flag_is_equivalent(self, xor_path, capsys):
        run_cli("compile", xor_path, "--table", "xor", "--style", "not")
        positional = capsys.readouterr().out
        run_cli("compile", "--spec", xor_path, "--table", "xor", "--style", "not")
        assert capsys.readouterr().out == positional

    def test_unknown_table_exits_2(self, xor_path, capsys):
        assert run_cli("compile", xor_path, "--table", "nope", "--style", "not") == 2
        assert "unknown table" in capsys.readouterr().err

    def test_parse_error_exits_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.tables"
        bad.write_text("[{]")
        assert run_cli("compile", str(bad), "--table", "x", "--style", "not") == 1
        assert capsys.readouterr().err

    def test_missing_file_exits_1(self, tmp_path):
        assert (
            run_cli("compile", str(tmp_path / "no.tables"), "--table", "x",
                    "--style", "not")
            == 1
        )

    def test_non_boolean_table_exits_3(self, soccer_path, capsys):
        code = run_cli(
            "compile", soccer_path, "--table", "throw_ball", "--style", "not"
        )
        assert code == 3

    def test_conflicting_spec_paths_are_a_usage_error(self, xor_path):
        with pytest.raises(SystemExit) as err:
            run_cli("compile", xor_path, "--spec", xor_path, "--table", "xor",
                    "--style", "not")
        assert err.value.code == 2


class TestTruthTable:
    def test_xor_csv(self, xor_path, capsys):
        assert run_cli("truth-table", xor_path, "--table", "xor") == 0
        assert capsys.readouterr().out == (
            "X,Y,out\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n"
        )

    def test_adder_carry_csv(self, adder_path, capsys):
        assert run_cli("truth-table", adder_path, "--table", "adder_carry") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "X,Y,Z,out"
        assert [line.rsplit(",", 1)[1] for line in lines[1:]] == [
            "0", "0", "0", "1", "0", "1", "1", "1",
        ]

    def test_continuous_table_exits_3(self, soccer_path, capsys):
        assert run_cli("truth-table", soccer_path, "--table", "throw_ball") == 3
        assert capsys.readouterr().err


class TestEval:
    def test_xor_center(self, xor_path, capsys):
        code = run_cli(
            "eval", xor_path, "--table", "xor", "--bind", "X=0.5", "--bind", "Y=0.5"
        )
        assert code == 0
        assert capsys.readouterr().out == "0.5\n"

    def test_throw_table_unit(self, soccer_path, capsys):
        code = run_cli(
            "eval", soccer_path, "--table", "throw_ball",
            "--bind", "s0=1", "--bind", "s2=0.75", "--bind", "s5=1",
        )
        assert code == 0
        assert float(capsys.readouterr().out) == 1.0

    def test_missing_binding_exits_4(self, soccer_path, capsys):
        code = run_cli(
            "eval", soccer_path, "--table", "throw_ball",
            "--bind", "s0=1", "--bind", "s2=0.75",
        )
        assert code == 4
        assert "s5" in capsys.readouterr().err

    def test_externals_bind_interpolation_tables(self, soccer_path, capsys):
        code = run_cli(
            "eval", soccer_path, "--table", "target",
            "--bind", "s5=1", "--bind", "w5=100", "--bind", "w6=300",
        )
        assert code == 0
        assert capsys.readouterr().out == "300\n"

    def test_missing_external_exits_4(self, soccer_path):
        assert (
            run_cli("eval", soccer_path, "--table", "target", "--bind", "s5=1") == 4
        )

    def test_malformed_binding_exits_4(self, xor_path):
        assert (
            run_cli("eval", xor_path, "--table", "xor", "--bind", "X=zero",
                    "--bind", "Y=1")
            == 4
        )

    def test_out_of_range_binding_exits_4(self, xor_path):
        assert (
            run_cli("eval", xor_path, "--table", "xor", "--bind", "X=1.5",
                    "--bind", "Y=1")
            == 4
        )

    def test_twelve_significant_digits(self, xor_path, capsys):
        # xor(x, 1) is the complement 1 - x; the 13th digit rounds away.
        run_cli("eval", xor_path, "--table", "xor",
                "--bind", "X=0.123456789123456", "--bind", "Y=1")
        assert capsys.readouterr().out == "0.876543210877\n"


class TestSurface:
    def test_res_two_grid(self, xor_path, capsys):
        assert run_cli("surface", xor_path, "--table", "xor", "--res", "2") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "X,Y,out"
        assert len(lines) == 1 + 9
        assert "0,0,0" in lines and "0,1,1" in lines
        assert "1,0,1" in lines and "1,1,0" in lines
        assert "0.5,0.5,0.5" in lines

    def test_res_zero_is_a_usage_error(self, xor_path):
        with pytest.raises(SystemExit) as err:
            run_cli("surface", xor_path, "--table", "xor", "--res", "0")
        assert err.value.code == 2

    def test_wrong_arity_exits_5(self, adder_path, capsys):
        code = run_cli("surface", adder_path, "--table", "adder_carry", "--res", "2")
        assert code == 5
        assert "2 continuous inputs" in capsys.readouterr().err


class TestSimulate:
    def test_single_tick_summary(self, capsys):
        assert run_cli("simulate", "--ticks", "1") == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "pickups,throws,goals,ticks"
        assert lines[1] == "0,0,0,1"
        assert lines[2].startswith("trace_hash=")

    def test_repeat_runs_print_identical_output(self, capsys):
        run_cli("simulate", "--ticks", "400")
        first = capsys.readouterr().out
        run_cli("simulate", "--ticks", "400")
        assert capsys.readouterr().out == first

    def test_trace_file(self, tmp_path, capsys):
        trace_path = tmp_path / "trace.jsonl"
        assert run_cli("simulate", "--ticks", "3", "--trace", str(trace_path)) == 0
        capsys.readouterr()
        lines = trace_path.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith('{"tick":1,')

    def test_unwritable_trace_exits_6(self, tmp_path, capsys):
        blocker = tmp_path / "file"
        blocker.write_text("")
        code = run_cli("simulate", "--ticks", "1",
                       "--trace", str(blocker / "trace.jsonl"))
        assert code == 6
        assert capsys.readouterr().err

    def test_spec_override(self, soccer_path, capsys):
        assert run_cli("simulate", "--ticks", "1", "--spec", soccer_path) == 0
        assert capsys.readouterr().out.splitlines()[1] == "0,0,0,1"

    def test_zero_ticks_is_a_usage_error(self):
        with pytest.raises(SystemExit) as err:
            run_cli("simulate", "--ticks", "0")
        assert err.value.code == 2


class TestOutFile:
    def test_out_writes_file(self, xor_path, tmp_path, capsys):
        out = tmp_path / "eq.txt"
        code = run_cli("compile", xor_path, "--table", "xor", "--style", "not",
                       "--out", str(out))
        assert code == 0
        assert capsys.readouterr().out == ""
        assert out.read_text() == "(NOT(X) AND Y) OR (X AND NOT(Y))\n"

    def test_unwritable_out_exits_6(self, xor_path, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        code = run_cli("compile", xor_path, "--table", "xor", "--style", "not",
                       "--out", str(blocker / "x.txt"))
        assert code == 6
