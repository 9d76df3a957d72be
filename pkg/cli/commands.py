"""
Verb implementations for the command-line front end.
Each cmd_* takes parsed inputs and returns (payload, exit code); failures
the caller maps to exit codes are raised as rpgraph errors.
"""
import logging
from dataclasses import replace
from typing import Any, Dict, Iterator, Optional, Tuple

from analysis.report_formatter import ReportFormatter
from coloring.chromatic import chromatic_number
from coloring.coloring import greedy_coloring
from coloring.schemes import planar_fc4_coloring, srp_inductive_coloring
from core.config import ExitCodes
from core.errors import DomainError
from core.formats import to_graph6
from core.graph import Graph, components, is_forest, is_independent
from minors.minimal import enumerate_minimal_minors, pairwise_intersections
from minors.search import find_clique_minor, hadwiger_number
from partition.builders import build_erp, build_rp, build_srp
from partition.validation import PartitionKind
from utils.serialization import ReportSerializer
from verify.campaign import CampaignConfig, CampaignReport, run_campaign
from verify.generators import enumerate_graphs, random_gnp, random_planar

logger = logging.getLogger(__name__)

Result = Tuple[Dict[str, Any], int]


def cmd_info(g: Graph, budget: Optional[int] = None) -> Result:
    h, witness = hadwiger_number(g, budget) if g.order else (0, None)
    vertices = list(g.vertices)
    payload = {
        "graph6": to_graph6(g),
        "n": g.order,
        "m": g.size,
        "components": len(components(g)),
        "forest": is_forest(g, vertices),
        "independent": is_independent(g, vertices),
        "hadwiger": h,
        "witness": witness.to_dict() if witness is not None else None,
    }
    return payload, ExitCodes.OK


def cmd_minor(g: Graph, t: Optional[int] = None, minimal: bool = False,
              budget: Optional[int] = None) -> Result:
    """Witness for K_t (t defaults to the Hadwiger number), or the minimal K_t minors"""
    if t is None:
        t = hadwiger_number(g, budget)[0] if g.order else 0
    if not minimal:
        witness = find_clique_minor(g, t, budget)
        return {"t": t, "found": witness is not None,
                "witness": witness.to_dict() if witness else None}, ExitCodes.OK

    enumeration = enumerate_minimal_minors(g, t, budget=budget)
    matrix = pairwise_intersections(enumeration.minors) if enumeration.minors else []
    payload = {
        "t": t,
        "minors": [m.to_dict() for m in enumeration.minors],
        "truncated": enumeration.truncated,
        "intersections": [[sorted(cell) for cell in row] for row in matrix],
    }
    return payload, ExitCodes.BUDGET if enumeration.budget_exhausted else ExitCodes.OK


def cmd_partition(g: Graph, kind: str, t: Optional[int] = None, budget: Optional[int] = None) -> Result:
    """Builder dispatch; ConstructionFailed and PreconditionNotMet propagate to the exit-code mapping"""
    kind = PartitionKind.parse(kind)
    if kind is PartitionKind.ERP:
        if t is not None:
            logger.warning("--t is ignored for ERP; each layer uses the Hadwiger number of its remainder")
        result = build_erp(g, budget=budget)
    elif kind is PartitionKind.RP:
        result = build_rp(g, t, budget=budget)
    else:
        result = build_srp(g, t, budget=budget)
    return result.to_dict(), ExitCodes.OK


def cmd_color(g: Graph, scheme: str = "oracle", budget: Optional[int] = None) -> Result:
    if scheme == "oracle":
        _, coloring = chromatic_number(g, budget)
    elif scheme == "greedy":
        coloring = greedy_coloring(g)
    elif scheme == "srp":
        coloring = srp_inductive_coloring(g, budget=budget)
    elif scheme == "fc4":
        coloring = planar_fc4_coloring(g, budget=budget)
    else:
        raise DomainError(f"unknown coloring scheme '{scheme}'")
    return dict(coloring.to_dict(), scheme=scheme), ExitCodes.OK


def cmd_verify(config_path: str, jobs: Optional[int] = None, budget: Optional[int] = None,
               seed: Optional[int] = None, progress: bool = True) -> Tuple[CampaignReport, int]:
    """Run a campaign; flags override the matching config fields"""
    cfg = CampaignConfig.load(config_path)
    overrides = {k: v for k, v in (("jobs", jobs), ("budget", budget), ("seed", seed)) if v is not None}
    cfg = replace(cfg, **overrides)
    report = run_campaign(cfg, progress=progress)
    return report, ExitCodes.REFUTATIONS_FOUND if report.has_refutations else ExitCodes.OK


def format_campaign(report: CampaignReport) -> str:
    """Terminal table; wall-clock stats are shown here even when the JSON leaves them out"""
    return ReportFormatter().format_report(report.to_dict(), report.timing)


def cmd_enumerate(order: int, family: str = "exhaustive", count: int = 1, seed: Optional[int] = None,
                  probability: float = 0.4) -> Iterator[str]:
    """graph6 lines of a family"""
    if family == "exhaustive":
        return (to_graph6(g) for g in enumerate_graphs(order))
    if family == "random-planar":
        return (to_graph6(random_planar(order, None if seed is None else seed + i)) for i in range(count))
    if family == "random-gnp":
        return (to_graph6(random_gnp(order, probability, None if seed is None else seed + i)) for i in range(count))
    raise DomainError(f"unknown family '{family}'")


def render(payload: Any) -> str:
    return ReportSerializer.dumps(payload)
