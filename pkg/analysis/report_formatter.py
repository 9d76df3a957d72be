"""
Report Formatter for rpgraph
Turns campaign report payloads into plain-text tables for terminals and
short status lines for the viewer.
"""
from typing import Any, Dict, List, Optional

from core.config import CampaignDefaults
from verify.claims import CLAIM_IDS, CLAIMS

COLUMNS = ("verified", "refuted", "inapplicable", "budget")


class ReportFormatter:
    """Formats campaign report dicts (CampaignReport.to_dict or a loaded JSON file)"""

    def __init__(self, width: int = 6):
        self.width = width

    @staticmethod
    def ordered_claims(report: Dict[str, Any]) -> List[str]:
        claims = report.get("claims", {})
        known = [c for c in CLAIM_IDS if c in claims]
        return known + sorted(c for c in claims if c not in CLAIM_IDS)

    def claim_status(self, counts: Dict[str, int]) -> str:
        """One-word status for a row of verdict counts"""
        total = sum(counts.get(k, 0) for k in COLUMNS)
        if not total:
            return "no checks"
        if counts.get("refuted"):
            return "REFUTED"
        if counts.get("budget", 0) / total > CampaignDefaults.BUDGET_WARNING_RATIO:
            return "budget-limited"
        if not counts.get("verified"):
            return "never applicable"
        return "holds"

    def format_verdict_table(self, report: Dict[str, Any]) -> str:
        claims = report.get("claims", {})
        if not claims:
            return "no claims checked"
        w = self.width
        header = f"{'claim':<6}" + "".join(f"{c[:w]:>{w + 2}}" for c in COLUMNS) + "  status"
        lines = [header, "-" * len(header)]
        for claim_id in self.ordered_claims(report):
            counts = claims[claim_id]
            row = f"{claim_id:<6}" + "".join(f"{counts.get(c, 0):>{w + 2}}" for c in COLUMNS)
            lines.append(f"{row}  {self.claim_status(counts)}")
        lines.append(f"{report.get('instances', 0)} instances")
        return "\n".join(lines)

    def format_refutations(self, report: Dict[str, Any], limit: Optional[int] = 10) -> str:
        refutations = report.get("refutations", [])
        if not refutations:
            return "no refutations"
        lines = [f"{len(refutations)} refutation(s):"]
        for entry in refutations[:limit]:
            lines.append(f"  {entry['claim']:<5} {entry['instance']:<12} t={entry.get('t')}  {entry.get('note', '')}")
        if limit is not None and len(refutations) > limit:
            lines.append(f"  ... {len(refutations) - limit} more in the JSON report")
        return "\n".join(lines)

    def format_timing(self, timing: Dict[str, Dict[str, float]]) -> str:
        lines = [f"{'claim':<6}{'mean s':>10}{'max s':>10}"]
        for claim_id in [c for c in CLAIM_IDS if c in timing]:
            stats = timing[claim_id]
            lines.append(f"{claim_id:<6}{stats['mean_seconds']:>10.4f}{stats['max_seconds']:>10.4f}")
        return "\n".join(lines)

    @staticmethod
    def describe_claim(claim_id: str) -> str:
        claim = CLAIMS.get(claim_id)
        return claim.statement if claim else ""

    def format_report(self, report: Dict[str, Any], timing: Optional[Dict] = None) -> str:
        parts = [self.format_verdict_table(report), self.format_refutations(report)]
        certificates = report.get("certificates", [])
        if certificates:
            parts.append(f"{len(certificates)} construction certificate(s) archived for claims that still held")
        if timing:
            parts.append(self.format_timing(timing))
        return "\n\n".join(parts)
