"""
Tracking module for rpgraph
Tallies claim verdicts and timings across a campaign
"""

from tracking.verdict_tracker import VerdictTracker

__all__ = ['VerdictTracker']
