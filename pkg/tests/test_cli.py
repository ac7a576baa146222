import json

import pytest

from welzlorder.cli import (
    EXIT_BOUND,
    EXIT_FALSE,
    EXIT_INPUT,
    EXIT_OK,
    main,
)


def run(args):
    return main(args)


class TestGen:
    def test_prefix(self, tmp_path, capsys):
        out = tmp_path / "p.ssys"
        assert run(["gen", "prefix", "8", "--out", str(out)]) == EXIT_OK
        lines = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
        assert lines[0] == "ssys 8 9 36"
        assert len(lines) == 10

    def test_grid_c4(self, tmp_path):
        out = tmp_path / "c4.ssys"
        assert run(["gen", "grid", "2", "2", "--out", str(out)]) == EXIT_OK
        body = out.read_text()
        assert "ssys 4 4 8" in body

    def test_same_seed_byte_identical(self, tmp_path):
        a = tmp_path / "a.ssys"
        b = tmp_path / "b.ssys"
        run(["gen", "bounded_degree", "10", "3", "--seed", "4", "--out", str(a)])
        run(["gen", "bounded_degree", "10", "3", "--seed", "4", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_prefix_cap(self, capsys):
        assert run(["gen", "prefix", "100000"]) == EXIT_INPUT

    def test_json_format(self, tmp_path):
        out = tmp_path / "g.json"
        run(["gen", "grid", "2", "3", "--format", "json", "--out", str(out)])
        obj = json.loads(out.read_text())
        assert obj["a"] == 6


class TestOrder:
    def test_grid_run_and_trace(self, tmp_path, capsys):
        inp = tmp_path / "g.ssys"
        run(["gen", "grid", "16", "16", "--out", str(inp)])
        assert run(["order", str(inp), "--c", "4", "--seed", "7"]) == EXIT_OK
        order_lines = (tmp_path / "g.ssys.order").read_text().split()
        assert sorted(int(v) for v in order_lines) == list(range(256))
        trace = json.loads((tmp_path / "g.ssys.trace").read_text().splitlines()[-1])
        assert trace["iterations"] <= 7   # log2(256) - 1
        assert trace["outcome"] == "order"

    def test_auto_prints_c_used(self, tmp_path, capsys):
        inp = tmp_path / "g.ssys"
        run(["gen", "grid", "8", "8", "--out", str(inp)])
        assert run(["order", str(inp), "--c", "auto", "--seed", "1"]) == EXIT_OK
        assert "c_used=" in capsys.readouterr().out

    def test_tiny_instance_zero_iterations(self, tmp_path):
        inp = tmp_path / "t.ssys"
        run(["gen", "grid", "2", "2", "--out", str(inp)])
        run(["order", str(inp), "--c", "1", "--seed", "0"])
        trace = json.loads((tmp_path / "t.ssys.trace").read_text().splitlines()[-1])
        assert trace["iterations"] == 0

    def test_malformed_input(self, tmp_path):
        bad = tmp_path / "bad.ssys"
        bad.write_text("garbage\n")
        assert run(["order", str(bad), "--c", "1"]) == EXIT_INPUT

    def test_missing_input(self):
        assert run(["order", "/nonexistent.ssys", "--c", "1"]) == EXIT_INPUT

    def test_reproducible_outputs(self, tmp_path):
        inp = tmp_path / "g.ssys"
        run(["gen", "grid", "16", "16", "--out", str(inp)])
        outs = []
        for tag in ("x", "y"):
            run(["order", str(inp), "--c", "2", "--seed", "5",
                 "--out", str(tmp_path / f"{tag}.order"),
                 "--trace", str(tmp_path / f"{tag}.trace")])
            outs.append(((tmp_path / f"{tag}.order").read_bytes(),
                         (tmp_path / f"{tag}.trace").read_bytes()))
        assert outs[0] == outs[1]


class TestVerify:
    def test_pass_and_report(self, tmp_path, capsys):
        inp = tmp_path / "g.ssys"
        run(["gen", "grid", "8", "8", "--out", str(inp)])
        run(["order", str(inp), "--c", "4", "--seed", "2"])
        code = run(["verify", str(inp), str(inp) + ".order", "--c", "4"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "pass=1" in out

    def test_c4_witness_max_one(self, tmp_path, capsys):
        inp = tmp_path / "c4.ssys"
        run(["gen", "grid", "2", "2", "--out", str(inp)])
        order_file = tmp_path / "w.order"
        order_file.write_text("1\n2\n0\n3\n")
        code = run(["verify", str(inp), str(order_file), "--c", "1"])
        assert code == EXIT_OK
        assert "max=1" in capsys.readouterr().out

    def test_non_permutation_order(self, tmp_path):
        inp = tmp_path / "c4.ssys"
        run(["gen", "grid", "2", "2", "--out", str(inp)])
        order_file = tmp_path / "bad.order"
        order_file.write_text("0\n1\n")
        assert run(["verify", str(inp), str(order_file), "--c", "1"]) == EXIT_INPUT

    def test_bound_failure_exit_code(self, tmp_path, capsys):
        # one set holding every even element of 2048: the identity order
        # crosses it 2047 times, above the c=1 bound 12 * 11^2 = 1452
        n = 2048
        evens = list(range(0, n, 2))
        inp = tmp_path / "evens.ssys"
        inp.write_text(f"ssys {n} 1 {len(evens)}\n"
                       + " ".join(["0", str(len(evens))] + [str(v) for v in evens])
                       + "\n")
        order_file = tmp_path / "id.order"
        order_file.write_text("\n".join(str(v) for v in range(n)) + "\n")
        code = run(["verify", str(inp), str(order_file), "--c", "1"])
        assert code == EXIT_BOUND
        assert "pass=0" in capsys.readouterr().out


class TestCover:
    def test_round_trip(self, tmp_path, capsys):
        inp = tmp_path / "g.ssys"
        run(["gen", "grid", "8", "8", "--out", str(inp)])
        run(["order", str(inp), "--c", "4", "--seed", "3"])
        code = run(["cover", str(inp), str(inp) + ".order", "--c", "4"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "coverage=1" in out
        assert (tmp_path / "g.ssys.cover").exists()


class TestBench:
    def test_small_suite(self, tmp_path, capsys):
        suite = {"runs": [{"family": "grid", "params": [8, 8], "c": 4,
                           "d": 1, "seeds": [1, 2, 3], "trials": 1}]}
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(suite))
        assert run(["bench", str(path)]) == EXIT_OK
        tsv = (tmp_path / "suite.json.report.tsv").read_text()
        assert len(tsv.splitlines()) == 4
        report = json.loads((tmp_path / "suite.json.report.json").read_text())
        assert len(report["rows"]) == 3
        assert 0.0 <= report["aggregates"]["failure_rate"] <= 1.0


class TestEndToEnd:
    @pytest.mark.parametrize("family,params", [
        ("grid", ["4", "6"]),
        ("prefix", ["12"]),
        ("bounded_degree", ["16", "3"]),
        ("halfplane", ["24", "24"]),
    ])
    def test_gen_order_verify_cover(self, tmp_path, family, params):
        inp = tmp_path / "inst.ssys"
        assert run(["gen", family, *params, "--seed", "2", "--out", str(inp)]) == EXIT_OK
        d = "2" if family == "halfplane" else "1"
        assert run(["order", str(inp), "--c", "auto", "--d", d,
                    "--seed", "9"]) == EXIT_OK
        # verify against a generous bound; exact certification is the
        # acceptance suite's job
        code = run(["verify", str(inp), str(inp) + ".order", "--c", "8", "--d", d])
        assert code in (EXIT_OK, EXIT_BOUND)
        if family in ("grid", "bounded_degree"):
            assert run(["cover", str(inp), str(inp) + ".order", "--c", "8"]) == EXIT_OK
