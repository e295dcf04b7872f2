import io
import json
from fractions import Fraction

import pytest

import twosquare_gaps.cli as cli
from twosquare_gaps.construction import construction_to_json, richards_construction
from twosquare_gaps.halving import NoGoodIntervalError, find_gap_interval


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScan:
    def test_limit_30(self, capsys):
        code, out, _ = run(capsys, "scan", "--limit", "30")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "s_prev,s_next,gap,ratio"
        assert lines[-1].startswith("20,25,5,1.55")

    def test_limit_2(self, capsys):
        code, out, _ = run(capsys, "scan", "--limit", "2")
        assert code == 0
        assert out.strip().split("\n")[1].startswith("1,2,1,")

    def test_segment_and_thread_independence(self, capsys):
        _, base, _ = run(capsys, "scan", "--limit", "100000")
        _, small_seg, _ = run(
            capsys, "scan", "--limit", "100000", "--segment-size", "4096"
        )
        _, threaded, _ = run(
            capsys, "scan", "--limit", "100000", "--segment-size", "4096",
            "--threads", "3",
        )
        assert base == small_seg == threaded

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "records.csv"
        code, out, _ = run(capsys, "scan", "--limit", "30", "--out", str(target))
        assert code == 0 and out == ""
        _, direct, _ = run(capsys, "scan", "--limit", "30")
        assert target.read_text() == direct

    def test_bad_limit(self, capsys):
        code, _, err = run(capsys, "scan", "--limit", "1")
        assert code == 1 and "error" in err


class TestRichards:
    def test_json_document(self, capsys):
        code, out, _ = run(capsys, "richards", "--y", "10")
        assert code == 0
        obj = json.loads(out)
        assert obj["y"] == 10
        assert obj["factors"] == [[3, 4], [7, 2], [11, 2], [19, 2], [23, 2], [31, 2]]
        assert obj["a"] == "22033969275260"

    def test_y1(self, capsys):
        _, out, _ = run(capsys, "richards", "--y", "1")
        assert json.loads(out)["factors"] == [[3, 2]]

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "richards", "--y", "10", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "p,e" and lines[1] == "3,4"


class TestVerify:
    def test_round_trip_via_file(self, capsys, tmp_path):
        doc = tmp_path / "c.json"
        doc.write_text(construction_to_json(richards_construction(10)))
        code, out, _ = run(capsys, "verify", str(doc))
        assert code == 0
        assert "covered: 10/10" in out
        assert "offset 1: odd p=3 k=1" in out

    def test_round_trip_via_stdin(self, capsys, monkeypatch):
        text = construction_to_json(richards_construction(3))
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        code, out, _ = run(capsys, "verify")
        assert code == 0 and "covered: 3/3" in out

    def test_inadmissible_prime_exit_2(self, capsys, tmp_path):
        doc = tmp_path / "bad.json"
        doc.write_text('{"y": 1, "factors": [[5, 1]], "a": "1"}')
        code, _, err = run(capsys, "verify", str(doc))
        assert code == 2
        assert "inadmissible prime 5" in err

    def test_parse_error_exit_3(self, capsys, tmp_path):
        doc = tmp_path / "trunc.json"
        doc.write_text('{"y": 10, "factors": [[3, 4')
        code, _, err = run(capsys, "verify", str(doc))
        assert code == 3 and "malformed" in err

    def test_missing_file_exit_3(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"))
        assert code == 3

    def test_shift_out_of_range_exit_5(self, capsys, tmp_path):
        doc = tmp_path / "shift.json"
        doc.write_text('{"y": 1, "factors": [[3, 2]], "a": "10"}')
        code, _, err = run(capsys, "verify", str(doc))
        assert code == 5

    def test_uncovered_exit_1(self, capsys, tmp_path):
        doc = tmp_path / "uncov.json"
        doc.write_text('{"y": 1, "factors": [[3, 1]], "a": "2"}')
        code, out, _ = run(capsys, "verify", str(doc))
        assert code == 1
        assert "uncovered at offset 1" in out


class TestHalve:
    def test_y10_document(self, capsys):
        code, out, err = run(capsys, "halve", "--y", "10")
        assert code == 0
        obj = json.loads(out)
        assert obj["chosen_n"] == 0
        assert obj["a0"] == "63369479"
        assert obj["interval"] == ["63369480", "63369489"]
        assert "ratio=1.7102" in err

    def test_delta_flag(self, capsys):
        code, out, _ = run(capsys, "halve", "--y", "10", "--delta", "0.5")
        assert code == 0
        assert json.loads(out)["delta"] == "1/2"

    def test_deep_verify_y20(self, capsys):
        code, out, _ = run(capsys, "halve", "--y", "20", "--deep-verify")
        assert code == 0
        obj = json.loads(out)
        assert len(obj["certificates"]) == 20

    def test_out_of_range_delta(self, capsys):
        code, _, err = run(capsys, "halve", "--y", "10", "--delta", "3/2")
        assert code == 1 and "delta" in err

    def test_no_good_interval_exit_4(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise NoGoodIntervalError(frozenset({0, 1}))

        monkeypatch.setattr(cli, "find_gap_interval", boom)
        code, _, err = run(capsys, "halve", "--y", "10")
        assert code == 4
        assert "bad set" in err

    def test_degenerate_warning(self, capsys, monkeypatch):
        from twosquare_gaps.arith import FactoredInteger
        from twosquare_gaps.construction import Construction

        synth = Construction(
            y=5, modulus=FactoredInteger(((2, 4), (3, 2))), shift=90
        )
        res = find_gap_interval(synth, Fraction(7, 10))
        monkeypatch.setattr(cli, "richards_construction", lambda y: synth)
        monkeypatch.setattr(cli, "find_gap_interval", lambda *a, **k: res)
        monkeypatch.setattr(
            cli, "efficiency_report", lambda ys, delta: [(5, 1.0, 1.0, 1.0, 1.0, 1.0)]
        )
        code, _, err = run(capsys, "halve", "--y", "5", "--delta", "7/10")
        assert code == 0
        assert "halving disabled" in err


class TestBounds:
    def test_single_row(self, capsys):
        code, out, err = run(capsys, "bounds", "--y-list", "10")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "Y,ln_plain,ln_halved,e_plain,e_halved,ratio"
        fields = lines[1].split(",")
        assert fields[0] == "10"
        assert float(fields[5]) == pytest.approx(1.71024, abs=1e-4)
        assert "195/449" in err and "390/449" in err

    def test_empty_list(self, capsys):
        code, out, _ = run(capsys, "bounds", "--y-list", "")
        assert code == 0
        assert out.strip() == "Y,ln_plain,ln_halved,e_plain,e_halved,ratio"

    def test_multi_row(self, capsys):
        code, out, _ = run(capsys, "bounds", "--y-list", "10,20")
        assert code == 0
        assert len(out.strip().split("\n")) == 3


def test_pipe_round_trip(capsys, monkeypatch):
    # richards | verify, exactly as the two commands compose in a shell
    code, out, _ = run(capsys, "richards", "--y", "10")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "covered: 10/10" in out
