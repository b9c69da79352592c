import json

from nilcommute.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBurgeCommands:
    def test_encode(self, capsys):
        code, out, _ = run(capsys, "burge", "encode", "--partition", "5,4,3,3,3,2,2,1")
        assert code == 0
        assert out.strip() == "b a2 b2 a7 b5 a"

    def test_dmap(self, capsys):
        code, out, _ = run(capsys, "burge", "dmap", "--partition", "5,4,3,3,3,2,2,1")
        assert code == 0
        assert out.strip() == "[17,5,1]"

    def test_decode(self, capsys):
        code, out, _ = run(capsys, "burge", "decode", "--code", "a a b b a")
        assert code == 0
        assert out.strip() == "[2,2]"

    def test_decode_run_length(self, capsys):
        code, out, _ = run(capsys, "burge", "decode", "--code", "b a2 b2 a7 b5 a")
        assert code == 0
        assert out.strip() == "[5,4,3,3,3,2,2,1]"

    def test_bad_partition_exits_2(self, capsys):
        code, _, err = run(capsys, "burge", "encode", "--partition", "3,5")
        assert code == 2 and "error" in err

    def test_bad_code_exits_2(self, capsys):
        code, _, err = run(capsys, "burge", "decode", "--code", "a a")
        assert code == 2 and "error" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "burge", "dmap", "--partition", "2,2")
        assert code == 0
        data = json.loads(out)
        assert data["parts"] == [4]
        assert data["config"]["prime"] == 1_000_000_007


class TestBoxCommands:
    def test_box_52(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "box", "--q", "5,2")
        assert code == 0
        data = json.loads(out)
        assert data["key"] == [2, 2]
        cells = {tuple(c["index"]): c["partition"] for c in data["cells"]}
        assert cells[(2, 2)] == [4, 1, 1, 1]

    def test_box_852(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "box", "--q", "8,5,2")
        data = json.loads(out)
        assert code == 0 and len(data["cells"]) == 8

    def test_box_unstable_exits_2(self, capsys):
        code, _, err = run(capsys, "box", "--q", "5,4")
        assert code == 2 and "stable" in err

    def test_table(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "table", "--q", "5,2")
        data = json.loads(out)
        assert code == 0
        assert data["rows"] == [[[5, 2], [5, 1, 1]], [[4, 2, 1], [4, 1, 1, 1]]]


class TestVerifyCommand:
    def test_all_cells_pass(self, capsys):
        code, out, _ = run(capsys, "--seed", "42", "verify", "--q", "5,2", "--samples", "20")
        assert code == 0
        assert "4/4 cells pass" in out

    def test_single_cell(self, capsys):
        code, out, _ = run(
            capsys, "--seed", "42", "--format", "json",
            "verify", "--q", "5,2", "--cell", "2,2", "--samples", "10",
        )
        assert code == 0
        data = json.loads(out)
        assert data["reports"][0]["max_type"] == [4, 1, 1, 1]

    def test_unstable_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--q", "6,5")
        assert code == 2 and "stable" in err

    def test_nonprime_exits_2(self, capsys):
        code, _, err = run(capsys, "--prime", "1000000006", "verify", "--q", "5,2")
        assert code == 2 and "prime" in err

    def test_determinism(self, capsys):
        argv = ["--seed", "7", "--format", "json", "verify", "--q", "5,2", "--samples", "10"]
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2


class TestOtherCommands:
    def test_intersect(self, capsys):
        code, out, _ = run(
            capsys, "--seed", "3", "--format", "json",
            "intersect", "--q", "5,2", "--cells", "1,2+2,1", "--samples", "60",
        )
        assert code == 0
        data = json.loads(out)
        assert data["branches"][0]["max_type"] == [3, 3, 1]

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "--seed", "5", "oracle", "--p", "2,1,1", "--samples", "60")
        assert code == 0
        assert out.splitlines()[0] == "[4]"

    def test_oracle_oversize_exits_2(self, capsys):
        code, _, err = run(capsys, "oracle", "--p", "13", "--samples", "5")
        assert code == 2

    def test_survey(self, capsys):
        code, out, _ = run(
            capsys, "--seed", "9", "--format", "json", "survey", "--q", "5,2", "--samples", "40"
        )
        assert code == 0
        data = json.loads(out)
        assert data["all_in_box"] is True

    def test_env_defaults(self, capsys, monkeypatch):
        monkeypatch.setenv("NILCOMMUTE_SEED", "123")
        monkeypatch.setenv("NILCOMMUTE_PRIME", "999999937")
        code, out, _ = run(capsys, "--format", "json", "burge", "dmap", "--partition", "1")
        assert code == 0
        data = json.loads(out)
        assert data["config"]["seed"] == 123
        assert data["config"]["prime"] == 999999937

    def test_unknown_command_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2
