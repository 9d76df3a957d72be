"""
Verify module for rpgraph
Claim registry, instance generators and the campaign runner
"""

from verify.claims import CLAIM_IDS, CLAIMS, ClaimReport, check_claim, replay_report
from verify.generators import enumerate_graphs, generate, random_gnp, random_planar
from verify.campaign import CampaignConfig, CampaignReport, run_campaign

__all__ = [
    'CLAIM_IDS', 'CLAIMS', 'ClaimReport', 'check_claim', 'replay_report',
    'enumerate_graphs', 'generate', 'random_gnp', 'random_planar',
    'CampaignConfig', 'CampaignReport', 'run_campaign',
]
