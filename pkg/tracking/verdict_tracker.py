"""
Verdict Tracker for rpgraph
Tallies claim verdicts and check timings across a campaign and flags
claims that deserve a closer look.
"""
import time
from typing import Any, Dict, List, Optional, Sequence

from core.config import CampaignDefaults
from core.results import Verdict
from verify.claims import ClaimReport


class VerdictTracker:
    """
    Tracks claim reports as they arrive from the worker pool.

    This class provides:
    - Recording one report per checked instance
    - Per-claim verdict counts and timing statistics
    - The archive of REFUTED reports and of construction certificates
    - A session summary
    """

    def __init__(self, claim_ids: Sequence[str] = ()):
        """Initialize the tracker; listed claims appear in the counts even with no reports"""
        self.claim_ids = list(claim_ids)
        self.reset_tracker()
        self.budget_warning_ratio = CampaignDefaults.BUDGET_WARNING_RATIO

    def reset_tracker(self):
        """Reset the tracker for a new campaign"""
        self.claim_results: Dict[str, Dict[str, Any]] = {}
        for claim_id in self.claim_ids:
            self._entry(claim_id)
        self.session_start_time = time.perf_counter()

    def _entry(self, claim_id: str) -> Dict[str, Any]:
        if claim_id not in self.claim_results:
            self.claim_results[claim_id] = {
                'counts': {v.key: 0 for v in Verdict},
                'durations': [],
                'refutations': [],
                'certificates': [],
            }
        return self.claim_results[claim_id]

    def record_claim_result(self, report: ClaimReport, elapsed: float = 0.0):
        """
        Record the outcome of one claim check.

        Args:
            report: The claim report
            elapsed: Wall-clock seconds spent on the check
        """
        data = self._entry(report.claim_id)
        data['counts'][report.verdict.key] += 1
        data['durations'].append(elapsed)
        if report.verdict is Verdict.REFUTED:
            data['refutations'].append(report)
        elif report.evidence.get('construction'):
            data['certificates'].append(report)

    def get_counts(self) -> Dict[str, Dict[str, int]]:
        return {claim_id: dict(data['counts']) for claim_id, data in self.claim_results.items()}

    def get_refutations(self) -> List[ClaimReport]:
        reports = [r for data in self.claim_results.values() for r in data['refutations']]
        return sorted(reports, key=ClaimReport.sort_key)

    def get_certificates(self) -> List[ClaimReport]:
        """Non-refuted reports whose constructive procedure failed and left a certificate"""
        reports = [r for data in self.claim_results.values() for r in data['certificates']]
        return sorted(reports, key=ClaimReport.sort_key)

    def get_claim_statistics(self, claim_id: str) -> Optional[Dict[str, Any]]:
        """
        Get statistics for one claim.

        Args:
            claim_id: Registered claim id

        Returns:
            Dict with counts, totals and timing, or None if never recorded
        """
        if claim_id not in self.claim_results:
            return None
        data = self.claim_results[claim_id]
        durations = data['durations']
        total = sum(data['counts'].values())
        decided = data['counts']['verified'] + data['counts']['refuted']
        return {
            'counts': dict(data['counts']),
            'total': total,
            'decided': decided,
            'construction_failures': len(data['certificates']),
            'mean_seconds': sum(durations) / len(durations) if durations else 0.0,
            'max_seconds': max(durations, default=0.0),
        }

    def should_flag_claim(self, claim_id: str) -> bool:
        """A claim is flagged when refuted anywhere or when too many checks ran out of budget"""
        stats = self.get_claim_statistics(claim_id)
        if not stats or not stats['total']:
            return False
        if stats['counts']['refuted']:
            return True
        return stats['counts']['budget'] / stats['total'] > self.budget_warning_ratio

    def get_session_summary(self) -> Dict[str, Any]:
        """Totals over every claim"""
        totals = {v.key: 0 for v in Verdict}
        for data in self.claim_results.values():
            for key, count in data['counts'].items():
                totals[key] += count
        return {
            'claims': len(self.claim_results),
            'checks': sum(totals.values()),
            'totals': totals,
            'flagged': [c for c in self.claim_results if self.should_flag_claim(c)],
            'session_duration': time.perf_counter() - self.session_start_time,
        }
