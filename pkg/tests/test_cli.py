import json

import pytest

from hyperlef import cli, constructions, model


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_demo_text(self, capsys):
        code, out, err = run(capsys, "analyze", "--demo", "mn", "--n", "3")
        assert code == cli.EXIT_OK
        assert "chi = 28" in out
        assert "sigma = -16" in out
        assert "Z + Z/3" in out
        assert "M # 8*CP2bar" in out

    def test_demo_machine_is_json_with_schema_version(self, capsys):
        code, out, err = run(capsys, "analyze", "--demo", "mn", "--n", "3",
                             "--format", "machine")
        assert code == cli.EXIT_OK
        payload = json.loads(out)
        assert payload["schema_version"] == cli.SCHEMA_VERSION
        assert payload["chi"] == 28
        assert payload["lift_class"] == "Trivial"

    def test_machine_output_byte_deterministic(self, capsys):
        _, out1, _ = run(capsys, "analyze", "--demo", "mn", "--n", "2",
                         "--format", "machine")
        _, out2, _ = run(capsys, "analyze", "--demo", "mn", "--n", "2",
                         "--format", "machine")
        assert out1 == out2
        # compact separators, sorted keys, one trailing newline
        assert out1.endswith("\n") and not out1.rstrip("\n").endswith(" ")
        keys = list(json.loads(out1))
        assert keys == sorted(keys)

    def test_spec_file_roundtrip(self, capsys, tmp_path, family3):
        path = tmp_path / "fam.json"
        path.write_text(model.serialize_spec(family3))
        code, out, err = run(capsys, "analyze", "--spec", str(path))
        assert code == cli.EXIT_OK
        assert "chi = 28" in out
        # reparsed documents carry no certificate
        assert "complex structure: Unknown" in out

    def test_out_dir_writes_files(self, capsys, tmp_path, matsumoto):
        spec_path = tmp_path / "m.json"
        spec_path.write_text(model.serialize_spec(matsumoto))
        out_dir = tmp_path / "reports"
        code, out, err = run(capsys, "analyze", "--spec", str(spec_path),
                             "--format", "machine", "--out", str(out_dir))
        assert code == cli.EXIT_OK
        assert out == ""
        report = json.loads((out_dir / "m.json").read_text())
        assert report["chi"] == 4
        assert not list(out_dir.glob("*.tmp"))

    def test_malformed_spec_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, out, err = run(capsys, "analyze", "--spec", str(path))
        assert code == cli.EXIT_INVALID
        assert "malformed" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, out, err = run(capsys, "analyze", "--spec",
                             str(tmp_path / "nope.json"))
        assert code == cli.EXIT_INVALID

    def test_no_input_is_usage_error(self, capsys):
        code, out, err = run(capsys, "analyze")
        assert code == cli.EXIT_USAGE

    def test_strict_flags_warnings(self, capsys, tmp_path, family3):
        # reparsed spec gets a certificate warning; strict makes that 3
        path = tmp_path / "fam.json"
        path.write_text(model.serialize_spec(family3))
        code, out, err = run(capsys, "analyze", "--spec", str(path),
                             "--strict")
        assert code == cli.EXIT_UNDECIDED
        # the demo family carries its certificate, so strict stays 0
        code, out, err = run(capsys, "analyze", "--demo", "mn", "--n", "3",
                             "--strict")
        assert code == cli.EXIT_OK

    def test_digest_tracks_input(self, capsys, tmp_path, matsumoto, family3):
        digests = []
        for spec in (matsumoto, family3):
            path = tmp_path / "s.json"
            path.write_text(model.serialize_spec(spec))
            _, out, _ = run(capsys, "analyze", "--spec", str(path),
                            "--format", "machine")
            digests.append(json.loads(out)["input_digest"])
        assert digests[0] != digests[1]


class TestClassifyHypersurface:
    def test_cubic_text(self, capsys):
        code, out, err = run(capsys, "classify-hypersurface", "3")
        assert code == cli.EXIT_OK
        assert "chi = 9" in out and "sigma = -5" in out

    def test_machine(self, capsys):
        code, out, err = run(capsys, "classify-hypersurface", "2",
                             "--format", "machine")
        assert code == cli.EXIT_OK
        payload = json.loads(out)
        assert payload["diffeo_type"] == "S2xS2"
        assert payload["spin"] is True

    def test_unsupported_degree_exits_4(self, capsys):
        code, out, err = run(capsys, "classify-hypersurface", "5")
        assert code == cli.EXIT_UNSUPPORTED

    def test_degree_zero_is_usage(self, capsys):
        code, out, err = run(capsys, "classify-hypersurface", "0")
        assert code == cli.EXIT_USAGE

    def test_non_integer_is_usage(self, capsys):
        code, out, err = run(capsys, "classify-hypersurface", "x")
        assert code == cli.EXIT_USAGE


class TestBraid:
    def test_perm(self, capsys):
        code, out, err = run(capsys, "braid", "perm", "--strands", "4",
                             "1", "2", "3")
        assert code == cli.EXIT_OK
        assert out.split() == ["4", "1", "2", "3"]

    def test_degree_spherical_reduces(self, capsys):
        code, out, err = run(capsys, "braid", "degree", "--strands", "4",
                             "--", "1", "1", "1", "1", "1", "1", "1")
        assert code == cli.EXIT_OK
        assert out.strip() == "1"

    def test_liftclass_full_twist(self, capsys, curve_table):
        letters = []
        for _ in range(6):
            letters += ["1", "2", "3", "4", "5"]
        code, out, err = run(capsys, "braid", "liftclass", "--strands", "6",
                             *letters)
        assert code == cli.EXIT_OK
        assert "mcg-trivial: True" in out
        assert "lift class: FullTwist" in out

    def test_liftclass_nontrivial(self, capsys):
        code, out, err = run(capsys, "braid", "liftclass", "--strands", "4",
                             "--", "-3", "-3", "2", "2")
        assert code == cli.EXIT_OK
        assert "mcg-trivial: False" in out

    def test_liftclass_planar_rejected(self, capsys):
        code, out, err = run(capsys, "braid", "liftclass", "--strands", "3",
                             "--ambient", "planar", "1", "-1")
        assert code == cli.EXIT_USAGE

    def test_bad_letter_is_usage(self, capsys):
        code, out, err = run(capsys, "braid", "perm", "--strands", "3",
                             "9")
        assert code == cli.EXIT_USAGE


class TestTopLevel:
    def test_no_args_prints_usage(self, capsys):
        code, out, err = run(capsys)
        assert code == cli.EXIT_USAGE

    def test_help_exits_zero(self, capsys):
        code, out, err = run(capsys, "--help")
        assert code == cli.EXIT_OK
        assert "classify-hypersurface" in out

    def test_unknown_command(self, capsys):
        code, out, err = run(capsys, "frobnicate")
        assert code == cli.EXIT_USAGE

    def test_subcommand_help_exits_zero(self, capsys):
        code, out, err = run(capsys, "analyze", "--help")
        assert code == cli.EXIT_OK

    def test_console_script_installed(self):
        import shutil
        assert shutil.which("hyperlef") is not None
