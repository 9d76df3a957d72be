"""Tests for verdict tallies, report formatting and JSON serialization."""
import pytest

from analysis.report_formatter import ReportFormatter
from core.results import Verdict
from tracking.verdict_tracker import VerdictTracker
from utils.serialization import ReportSerializer
from verify.claims import ClaimReport


def report(claim_id, verdict, instance="C~", evidence=None):
    return ClaimReport(claim_id, instance, verdict, 4, evidence or {})


# ==================== Tracker ====================

class TestVerdictTracker:
    def test_listed_claims_start_at_zero(self):
        tracker = VerdictTracker(["T1", "T9"])
        counts = tracker.get_counts()
        assert set(counts) == {"T1", "T9"}
        assert counts["T1"] == {"verified": 0, "refuted": 0, "inapplicable": 0, "budget": 0}

    def test_counts_and_archives(self):
        tracker = VerdictTracker(["T9"])
        tracker.record_claim_result(report("T9", Verdict.VERIFIED), 0.5)
        tracker.record_claim_result(report("T9", Verdict.VERIFIED, "D?{", {"construction": {"stage": "x"}}), 1.5)
        tracker.record_claim_result(report("T9", Verdict.REFUTED, "Bw"), 1.0)
        stats = tracker.get_claim_statistics("T9")
        assert stats["counts"]["verified"] == 2 and stats["total"] == 3 and stats["decided"] == 3
        assert stats["construction_failures"] == 1
        assert stats["mean_seconds"] == pytest.approx(1.0) and stats["max_seconds"] == 1.5
        assert [r.instance for r in tracker.get_refutations()] == ["Bw"]
        assert [r.instance for r in tracker.get_certificates()] == ["D?{"]

    def test_archives_sorted_by_claim_order(self):
        tracker = VerdictTracker()
        tracker.record_claim_result(report("T9", Verdict.REFUTED))
        tracker.record_claim_result(report("T1", Verdict.REFUTED))
        assert [r.claim_id for r in tracker.get_refutations()] == ["T1", "T9"]

    def test_unknown_claim_statistics(self):
        assert VerdictTracker().get_claim_statistics("T1") is None

    def test_flagging(self):
        tracker = VerdictTracker(["T1", "T2", "T3"])
        tracker.record_claim_result(report("T1", Verdict.REFUTED))
        tracker.record_claim_result(report("T2", Verdict.BUDGET))
        tracker.record_claim_result(report("T3", Verdict.VERIFIED))
        assert tracker.should_flag_claim("T1")
        assert tracker.should_flag_claim("T2")
        assert not tracker.should_flag_claim("T3")
        summary = tracker.get_session_summary()
        assert summary["checks"] == 3 and summary["flagged"] == ["T1", "T2"]

    def test_reset(self):
        tracker = VerdictTracker(["T1"])
        tracker.record_claim_result(report("T1", Verdict.VERIFIED))
        tracker.reset_tracker()
        assert tracker.get_claim_statistics("T1")["total"] == 0


# ==================== Formatter ====================

class TestReportFormatter:
    @pytest.mark.parametrize("counts, status", [
        ({}, "no checks"),
        ({"verified": 3, "refuted": 1}, "REFUTED"),
        ({"verified": 1, "budget": 1}, "budget-limited"),
        ({"inapplicable": 4}, "never applicable"),
        ({"verified": 40, "inapplicable": 60, "budget": 1}, "holds"),
    ])
    def test_claim_status(self, counts, status):
        assert ReportFormatter().claim_status(counts) == status

    def test_claims_in_registry_order(self):
        payload = {"claims": {"T9": {}, "X": {}, "T1": {}}}
        assert ReportFormatter.ordered_claims(payload) == ["T1", "T9", "X"]

    def test_verdict_table(self):
        payload = {"instances": 7, "claims": {"T1": {"verified": 7, "refuted": 0, "inapplicable": 0, "budget": 0}}}
        table = ReportFormatter().format_verdict_table(payload)
        lines = table.splitlines()
        assert lines[0].startswith("claim")
        assert lines[2].startswith("T1") and lines[2].endswith("holds")
        assert lines[-1] == "7 instances"

    def test_refutation_limit(self):
        entries = [{"claim": "T1", "instance": "C~", "t": 4, "note": ""}] * 3
        text = ReportFormatter().format_refutations({"refutations": entries}, limit=2)
        assert text.splitlines()[0] == "3 refutation(s):"
        assert "1 more" in text

    def test_empty_report(self):
        formatter = ReportFormatter()
        assert formatter.format_verdict_table({}) == "no claims checked"
        assert formatter.format_refutations({}) == "no refutations"

    def test_describe_claim(self):
        assert "planar" in ReportFormatter.describe_claim("FC4")
        assert ReportFormatter.describe_claim("X") == ""


# ==================== Serializer ====================

class TestReportSerializer:
    def test_vertex_sets_sorted_in_caller_order(self):
        assert ReportSerializer.vertex_sets([{3, 1}, frozenset({2, 0})]) == [[1, 3], [0, 2]]

    def test_dumps_is_key_order_independent(self):
        assert ReportSerializer.dumps({"b": 1, "a": [2]}) == ReportSerializer.dumps({"a": [2], "b": 1})
        assert ReportSerializer.dumps({}).endswith("\n")

    def test_write_creates_parent_directories(self, tmp_path):
        path = ReportSerializer.write_json(tmp_path / "reports" / "run.json", {"instances": 3})
        assert ReportSerializer.read_json(path) == {"instances": 3}
