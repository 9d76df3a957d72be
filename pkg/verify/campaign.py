"""
Claim campaigns
Builds an instance family from a config, fans (claim, instance) checks out
to a worker pool and aggregates the reports. The report is a pure function
of the config: tasks are dispatched in a fixed order, results come back in
that order, and timing is kept out of the JSON unless asked for.
"""
import json
import logging
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from core.config import CampaignDefaults
from core.errors import CampaignConfigError, DomainError, GraphParseError, RPGraphError
from core.formats import parse_graph6, to_graph6
from core.graph import Graph
from core.results import Verdict
from tracking.verdict_tracker import VerdictTracker
from utils.serialization import ReportSerializer
from verify.claims import CLAIM_IDS, ClaimReport, check_claim
from verify.generators import enumerate_graphs, random_gnp, random_planar

logger = logging.getLogger(__name__)

_FIELDS = ("family", "min_order", "max_order", "count", "seed", "probability", "files", "claims",
           "budget", "claim_budgets", "minor_cap", "jobs", "include_timing")


# ==================== CONFIGURATION ====================

def _require_int(payload: Dict, key: str, default: Optional[int] = None, minimum: int = 0) -> Optional[int]:
    value = payload.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise CampaignConfigError(f"'{key}' must be an integer, got {value!r}")
    if value < minimum:
        raise CampaignConfigError(f"'{key}' must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class CampaignConfig:
    family: str
    max_order: int
    min_order: int = 1
    count: int = CampaignDefaults.DEFAULT_COUNT
    seed: int = CampaignDefaults.DEFAULT_SEED
    probability: float = CampaignDefaults.DEFAULT_GNP_PROBABILITY
    files: Tuple[str, ...] = ()
    claims: Tuple[str, ...] = CLAIM_IDS
    budget: Optional[int] = None
    claim_budgets: Dict[str, int] = field(default_factory=dict)
    minor_cap: Optional[int] = None
    jobs: int = CampaignDefaults.JOBS
    include_timing: bool = False

    def budget_for(self, claim_id: str) -> Optional[int]:
        return self.claim_budgets.get(claim_id, self.budget)

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "CampaignConfig":
        """Validate a decoded JSON config; every problem is a CampaignConfigError"""
        if not isinstance(payload, dict):
            raise CampaignConfigError("campaign config must be a JSON object")
        unknown = sorted(set(payload) - set(_FIELDS))
        if unknown:
            raise CampaignConfigError(f"unknown config keys: {', '.join(unknown)}")

        family = payload.get("family")
        if family not in CampaignDefaults.FAMILIES:
            raise CampaignConfigError(f"'family' must be one of {', '.join(CampaignDefaults.FAMILIES)}")
        files = payload.get("files", [])
        if not isinstance(files, list) or not all(isinstance(f, str) for f in files):
            raise CampaignConfigError("'files' must be a list of paths")
        if family == "file-list" and not files:
            raise CampaignConfigError("the file-list family needs at least one file")

        max_order = _require_int(payload, "max_order", 0 if family == "file-list" else None)
        if max_order is None:
            raise CampaignConfigError("'max_order' is required")
        min_order = _require_int(payload, "min_order", 1)
        if min_order > max_order and family != "file-list":
            raise CampaignConfigError(f"'min_order' {min_order} exceeds 'max_order' {max_order}")
        if family == "exhaustive" and max_order > CampaignDefaults.EXHAUSTIVE_MAX_ORDER:
            raise CampaignConfigError(
                f"exhaustive family is capped at {CampaignDefaults.EXHAUSTIVE_MAX_ORDER} vertices")
        if family == "random-planar" and min_order < 3:
            raise CampaignConfigError("random-planar instances need at least 3 vertices")

        probability = payload.get("probability", CampaignDefaults.DEFAULT_GNP_PROBABILITY)
        if isinstance(probability, bool) or not isinstance(probability, (int, float)) or not 0 <= probability <= 1:
            raise CampaignConfigError(f"'probability' must be a number in [0, 1], got {probability!r}")

        claims = payload.get("claims", list(CLAIM_IDS))
        if not isinstance(claims, list) or any(c not in CLAIM_IDS for c in claims):
            raise CampaignConfigError(f"'claims' must be a list drawn from {', '.join(CLAIM_IDS)}")
        claim_budgets = payload.get("claim_budgets", {})
        if not isinstance(claim_budgets, dict) or any(c not in CLAIM_IDS for c in claim_budgets):
            raise CampaignConfigError("'claim_budgets' must map claim ids to node budgets")
        for claim_id in claim_budgets:
            _require_int(claim_budgets, claim_id, minimum=1)

        include_timing = payload.get("include_timing", False)
        if not isinstance(include_timing, bool):
            raise CampaignConfigError("'include_timing' must be true or false")

        return cls(
            family=family,
            max_order=max_order,
            min_order=min_order,
            count=_require_int(payload, "count", CampaignDefaults.DEFAULT_COUNT),
            seed=_require_int(payload, "seed", CampaignDefaults.DEFAULT_SEED),
            probability=float(probability),
            files=tuple(files),
            claims=tuple(dict.fromkeys(claims)),
            budget=_require_int(payload, "budget", None, minimum=1),
            claim_budgets=dict(sorted(claim_budgets.items())),
            minor_cap=_require_int(payload, "minor_cap", None, minimum=1),
            jobs=_require_int(payload, "jobs", CampaignDefaults.JOBS, minimum=1),
            include_timing=include_timing,
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "CampaignConfig":
        """Read a JSON config; relative instance files resolve against its directory"""
        path = Path(path)
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise CampaignConfigError(f"cannot read campaign config {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise CampaignConfigError(f"campaign config {path} is not valid JSON: {e}") from e
        if isinstance(payload, dict) and isinstance(payload.get("files"), list):
            payload = dict(payload, files=[
                f if not isinstance(f, str) or Path(f).is_absolute() else str(path.parent / f)
                for f in payload["files"]
            ])
        return cls.from_dict(payload)

    def to_dict(self) -> Dict[str, Any]:
        """Result-relevant settings; the worker count is left out so reports do not depend on it"""
        payload = {
            "family": self.family,
            "min_order": self.min_order,
            "max_order": self.max_order,
            "claims": list(self.claims),
            "budget": self.budget,
            "claim_budgets": dict(self.claim_budgets),
            "minor_cap": self.minor_cap,
        }
        if self.family in ("random-planar", "random-gnp"):
            payload.update(count=self.count, seed=self.seed)
        if self.family == "random-gnp":
            payload["probability"] = self.probability
        if self.family == "file-list":
            payload["files"] = [Path(f).name for f in self.files]
        return payload


# ==================== INSTANCES ====================

def _read_graph6_file(path: str) -> Iterator[Graph]:
    try:
        lines = Path(path).read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise CampaignConfigError(f"cannot read instance file {path}: {e}") from e
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except GraphParseError as e:
            raise CampaignConfigError(f"{path}:{number}: {e}") from e


def _random_orders(cfg: CampaignConfig) -> Iterator[Tuple[int, int]]:
    """(order, seed) pairs drawn from the campaign seed"""
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.count):
        yield int(rng.integers(cfg.min_order, cfg.max_order + 1)), int(rng.integers(2 ** 32))


def instances(cfg: CampaignConfig) -> List[Graph]:
    if cfg.family == "exhaustive":
        return [g for n in range(cfg.min_order, cfg.max_order + 1) for g in enumerate_graphs(n)]
    if cfg.family == "random-planar":
        return [random_planar(n, seed) for n, seed in _random_orders(cfg)]
    if cfg.family == "random-gnp":
        return [random_gnp(n, cfg.probability, seed) for n, seed in _random_orders(cfg)]
    return [g for path in cfg.files for g in _read_graph6_file(path)]


# ==================== RUNNER ====================

Task = Tuple[str, str, Optional[int], Optional[int]]


def _check_task(task: Task) -> Tuple[ClaimReport, float]:
    """Worker entry point: one claim on one graph6 instance"""
    claim_id, instance, budget, minor_cap = task
    start = time.perf_counter()
    try:
        report = check_claim(claim_id, parse_graph6(instance), budget, minor_cap)
    except (RPGraphError, RecursionError) as e:
        logger.warning("%s on %s stopped: %s", claim_id, instance, e)
        report = ClaimReport(claim_id, instance, Verdict.BUDGET, None, {}, f"stopped: {e}")
    return report, time.perf_counter() - start


def _run_tasks(tasks: List[Task], jobs: int, progress: bool) -> Iterable[Tuple[ClaimReport, float]]:
    bar = dict(total=len(tasks), desc="claims", unit="check", disable=not progress)
    if jobs <= 1 or len(tasks) <= 1:
        return [result for result in tqdm(map(_check_task, tasks), **bar)]
    chunksize = max(1, len(tasks) // (jobs * 8))
    with Pool(jobs) as pool:
        return list(tqdm(pool.imap(_check_task, tasks, chunksize=chunksize), **bar))


@dataclass
class CampaignReport:
    config: CampaignConfig
    instances: int
    counts: Dict[str, Dict[str, int]]
    refutations: List[ClaimReport]
    certificates: List[ClaimReport]
    timing: Dict[str, Dict[str, float]] = field(default_factory=dict)

    @property
    def has_refutations(self) -> bool:
        return bool(self.refutations)

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "config": self.config.to_dict(),
            "instances": self.instances,
            "claims": self.counts,
            "refutations": [r.to_dict() for r in self.refutations],
            "certificates": [r.to_dict() for r in self.certificates],
        }
        if self.config.include_timing:
            payload["timing"] = self.timing
        return payload

    def to_json(self) -> str:
        return ReportSerializer.dumps(self.to_dict())

    def write(self, path: Union[str, Path]) -> Path:
        return ReportSerializer.write_json(path, self.to_dict())


def run_campaign(cfg: CampaignConfig, progress: bool = False,
                 tracker: Optional[VerdictTracker] = None) -> CampaignReport:
    """Check every configured claim on every instance of the family"""
    tracker = tracker or VerdictTracker(cfg.claims)
    try:
        graphs = instances(cfg)
    except DomainError as e:
        raise CampaignConfigError(str(e)) from e
    tasks = [(claim_id, to_graph6(g), cfg.budget_for(claim_id), cfg.minor_cap)
             for g in graphs for claim_id in cfg.claims]
    logger.info("campaign: %d instances x %d claims on %d workers", len(graphs), len(cfg.claims), cfg.jobs)

    for report, elapsed in _run_tasks(tasks, cfg.jobs, progress):
        tracker.record_claim_result(report, elapsed)

    timing = {}
    for claim_id in cfg.claims:
        stats = tracker.get_claim_statistics(claim_id)
        timing[claim_id] = {"mean_seconds": stats["mean_seconds"], "max_seconds": stats["max_seconds"]}
    summary = tracker.get_session_summary()
    logger.info("campaign finished in %.1fs: %s", summary["session_duration"], summary["totals"])
    return CampaignReport(cfg, len(graphs), tracker.get_counts(), tracker.get_refutations(),
                          tracker.get_certificates(), timing)
