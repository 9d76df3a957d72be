"""Tests for the command-line front end: payloads on stdout and exit codes."""
import json

from cli.main import main
from core.config import ExitCodes


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ==================== Graph verbs ====================

class TestInfo:
    def test_complete_graph(self, capsys):
        code, out, _ = run(capsys, "info", "--generate", "complete:4")
        payload = json.loads(out)
        assert code == ExitCodes.OK
        assert (payload["n"], payload["m"], payload["hadwiger"]) == (4, 6, 4)
        assert payload["graph6"] == "C~"

    def test_edgeless(self, capsys):
        _, out, _ = run(capsys, "info", "--generate", "empty:3")
        payload = json.loads(out)
        assert payload["hadwiger"] == 1 and payload["independent"]

    def test_edge_list_file(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("n 3\n0 1\n1 2\n# closing edge\n0 2\n", encoding="utf-8")
        code, out, _ = run(capsys, "info", str(path), "--format", "edgelist")
        assert code == ExitCodes.OK
        assert json.loads(out)["hadwiger"] == 3

    def test_malformed_graph6(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("!!!\n", encoding="ascii")
        code, _, err = run(capsys, "info", str(path))
        assert code == ExitCodes.PARSE_OR_CONFIG
        assert "error" in err

    def test_unknown_generator(self, capsys):
        code, _, _ = run(capsys, "info", "--generate", "bogus")
        assert code == ExitCodes.PARSE_OR_CONFIG

    def test_out_file(self, capsys, tmp_path):
        out = tmp_path / "info.json"
        run(capsys, "info", "--generate", "cycle:5", "--out", str(out))
        assert json.loads(out.read_text(encoding="utf-8"))["hadwiger"] == 3


class TestMinor:
    def test_witness(self, capsys):
        code, out, _ = run(capsys, "minor", "--generate", "wheel:5", "--t", "4")
        payload = json.loads(out)
        assert code == ExitCodes.OK
        assert payload["found"] and len(payload["witness"]["branch_sets"]) == 4

    def test_minimal_minors_of_k4(self, capsys):
        _, out, _ = run(capsys, "minor", "--generate", "complete:4", "--minimal")
        payload = json.loads(out)
        assert len(payload["minors"]) == 1
        assert payload["intersections"] == [[[0, 1, 2, 3]]]

    def test_budget_exhausted(self, capsys):
        code, _, err = run(capsys, "minor", "--generate", "petersen", "--t", "5", "--budget", "1")
        assert code == ExitCodes.BUDGET
        assert "error" in json.loads(err.strip().splitlines()[-1])


class TestPartition:
    def test_srp_of_wheel(self, capsys):
        code, out, _ = run(capsys, "partition", "--generate", "wheel:5", "--kind", "srp")
        payload = json.loads(out)
        assert code == ExitCodes.OK
        assert payload["parts"] == [[0], [1, 2, 3, 4, 5]]
        assert all(check["pass"] for check in payload["report"])

    def test_missing_minor_is_inapplicable(self, capsys):
        code, _, err = run(capsys, "partition", "--generate", "path:4", "--kind", "rp", "--t", "3")
        assert code == ExitCodes.INAPPLICABLE
        assert "inapplicable" in err

    def test_erp_ignores_t(self, capsys):
        code, out, _ = run(capsys, "partition", "--generate", "cycle:5", "--kind", "ERP", "--t", "7")
        assert code == ExitCodes.OK
        assert json.loads(out)["parts"] == [[0, 1, 2, 3], [4]]


class TestColor:
    def test_greedy(self, capsys):
        _, out, _ = run(capsys, "color", "--generate", "complete:4", "--scheme", "greedy")
        payload = json.loads(out)
        assert payload["k"] == 4 and payload["scheme"] == "greedy"

    def test_oracle(self, capsys):
        _, out, _ = run(capsys, "color", "--generate", "petersen")
        assert json.loads(out)["k"] == 3

    def test_fc4_on_non_planar(self, capsys):
        code, _, _ = run(capsys, "color", "--generate", "complete:5", "--scheme", "fc4")
        assert code == ExitCodes.INAPPLICABLE


# ==================== Campaign verbs ====================

class TestVerify:
    def write_config(self, tmp_path, **fields):
        path = tmp_path / "campaign.json"
        path.write_text(json.dumps(dict({"family": "exhaustive", "max_order": 3, "jobs": 1}, **fields)),
                        encoding="utf-8")
        return str(path)

    def test_no_claims(self, capsys, tmp_path):
        config = self.write_config(tmp_path, claims=[])
        code, out, _ = run(capsys, "verify", config, "--no-progress")
        assert code == ExitCodes.OK
        assert json.loads(out)["claims"] == {}

    def test_report_file(self, capsys, tmp_path):
        config = self.write_config(tmp_path, claims=["T1"])
        report = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", config, "--no-progress", "--out", str(report))
        payload = json.loads(report.read_text(encoding="utf-8"))
        assert code == ExitCodes.OK
        assert payload["instances"] == 7
        assert "T1" in out

    def test_bad_config(self, capsys, tmp_path):
        config = self.write_config(tmp_path, family="everything")
        code, _, _ = run(capsys, "verify", config, "--no-progress")
        assert code == ExitCodes.PARSE_OR_CONFIG


class TestEnumerate:
    def test_three_vertices(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3")
        assert code == ExitCodes.OK
        assert len(out.splitlines()) == 4

    def test_random_planar(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--n", "6", "--family", "random-planar", "--count", "3")
        assert len(out.splitlines()) == 3

    def test_order_cap(self, capsys):
        code, _, _ = run(capsys, "enumerate", "--n", "9")
        assert code == ExitCodes.PARSE_OR_CONFIG
