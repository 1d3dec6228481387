import json

import pytest

from lhparts.cli import main


class TestMapCommand:
    def test_composite_worked_example(self, capsys):
        code = main(["map", "composite", "--m", "3", "--n", "3",
                     "--parts", "5,5,4,4,4"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "8,5,5,2,2"

    def test_inverse_returns_input(self, capsys):
        code = main(["map", "inverse", "--m", "3", "--n", "3",
                     "--parts", "8,5,5,2,2"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "5,5,4,4,4"

    def test_sk(self, capsys):
        code = main(["map", "sk", "--m", "3",
                     "--parts", "19,17,14,13,13,8,1"])
        assert code == 0
        assert capsys.readouterr().out.strip() == \
            "11,10,9,9,8,8,6,5,5,4,4,2,2,1,1"

    def test_trace_lines_are_commented(self, capsys):
        main(["map", "composite", "--m", "3", "--n", "3",
              "--parts", "5,5,4,4,4", "--trace"])
        out = capsys.readouterr().out.splitlines()
        assert any(line.startswith("# ") for line in out)
        assert out[-1] == "8,5,5,2,2"

    def test_jsonl_output(self, capsys):
        main(["map", "sk", "--m", "3", "--parts", "5,5,4,4,4",
              "--format", "jsonl"])
        rec = json.loads(capsys.readouterr().out)
        assert rec["input"] == [5, 5, 4, 4, 4]
        assert sum(rec["output"]) == 22

    def test_bad_parts_exit_2(self, capsys):
        code = main(["map", "sk", "--m", "3", "--parts", "3,4"])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_wrong_class_exit_2(self, capsys):
        code = main(["map", "sk", "--m", "3", "--parts", "6,1"])
        assert code == 2

    def test_missing_n_exit_2(self, capsys):
        code = main(["map", "composite", "--m", "3", "--parts", "5,4"])
        assert code == 2


class TestCheckCommand:
    def test_pass_exit_0(self, capsys):
        code = main(["check", "Glaisher", "--m", "2", "--max-weight", "10"])
        assert code == 0
        assert "PASS" in capsys.readouterr().out

    def test_jsonl_rows(self, capsys):
        code = main(["check", "T1.1", "--n", "2", "--max-weight", "8",
                     "--format", "jsonl"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        records = [json.loads(line) for line in lines]
        assert records[-1]["weight"] == "total"
        assert all(r["status"] in ("ok", "pass") for r in records)

    def test_report_dir_writes_jsonl_and_png(self, tmp_path, capsys):
        code = main(["check", "Glaisher", "--m", "2", "--max-weight", "10",
                     "--format", "jsonl",
                     "--report-dir", str(tmp_path / "out")])
        assert code == 0
        jsonl = tmp_path / "out" / "Glaisher.jsonl"
        png = tmp_path / "out" / "Glaisher.png"
        assert jsonl.exists() and png.exists()
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
        stdout_lines = capsys.readouterr().out.strip().splitlines()
        assert jsonl.read_text().strip().splitlines() == stdout_lines

    def test_jobs_output_is_byte_identical(self, capsys):
        main(["check", "T1.2", "--m", "3", "--max-weight", "12",
              "--format", "jsonl"])
        serial = capsys.readouterr().out
        main(["check", "T1.2", "--m", "3", "--max-weight", "12",
              "--format", "jsonl", "--jobs", "2"])
        assert capsys.readouterr().out == serial

    def test_unknown_theorem_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["check", "T9.9"])
        assert err.value.code == 2


class TestTableAndFigures:
    def test_table1_prints_rows(self, capsys):
        code = main(["table1"])
        assert code == 0
        out = capsys.readouterr().out
        assert "8,8,7,7,7 -> 15,12,10" in out
        assert "2,2,1,1,1 -> 5,2" in out

    def test_figures(self, capsys):
        assert main(["figures"]) == 0
        assert "PASS" in capsys.readouterr().out


class TestGfAndShow:
    def test_gf_class(self, capsys):
        code = main(["gf", "class", "--kind", "O_m", "--m", "3",
                     "--stat", "trivial", "--max-degree", "6"])
        assert code == 0
        out = capsys.readouterr().out
        assert "1 : 1" in out
        assert "q^6" in out

    def test_gf_rhs(self, capsys):
        code = main(["gf", "rhs", "--m", "3", "--n", "2", "--z-mode",
                     "single", "--max-degree", "6"])
        assert code == 0
        assert "q^" in capsys.readouterr().out

    def test_show_ferrers(self, capsys):
        code = main(["show", "ferrers", "--m", "3", "--parts", "13,11,6,4"])
        assert code == 0
        assert capsys.readouterr().out == \
            "3 3 3 3 1\n3 3 3 2\n3 3\n3 1\n"
