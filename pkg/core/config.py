"""
Configuration module for rpgraph
Contains all search budgets, caps, defaults and exit codes.
"""
from pathlib import Path
import os

# Load environment variables from .env file
from dotenv import load_dotenv
load_dotenv(Path(__file__).parent.parent / ".env")


def _env_int(name, default):
    """Read an integer setting from the environment, falling back to default"""
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class AppConfig:
    """Application-wide configuration settings"""

    # Application metadata
    TITLE = "rpgraph - reducible partitions, clique minors and colorings"
    VERSION = "1.0.0"

    # Paths - relative to the repository root
    ROOT = Path(__file__).parent.parent  # Go up from core/ to the root
    REPORTS_PATH = ROOT / "reports"


class GraphConfig:
    """Graph parsing limits"""

    # Exact minor search is exponential; the parser refuses larger inputs
    DEFAULT_MAX_ORDER = 64
    MAX_ORDER = _env_int("RPGRAPH_MAX_ORDER", DEFAULT_MAX_ORDER)

    GRAPH6_HEADER = ">>graph6<<"


class SearchConfig:
    """Clique-minor search and minimal-minor enumeration settings"""

    DEFAULT_BUDGET = 10_000_000  # search nodes per call
    BUDGET = _env_int("RPGRAPH_BUDGET", DEFAULT_BUDGET)

    # Minimal minors enumerated inside the critical-set procedure
    MINIMAL_MINOR_CAP = _env_int("RPGRAPH_MINOR_CAP", 64)

    # Minimal minors enumerated when a claim needs the complete family
    CLAIM_MINOR_CAP = 4096

    # k-subsets of minor vertex sets examined by the transversal claims
    TRANSVERSAL_SUBSET_CAP = 20_000

    # Claims that enumerate vertex subsets (dominating trees, maximal forests)
    SUBSET_ENUMERATION_MAX_ORDER = 16

    @staticmethod
    def resolve_budget(explicit=None):
        """Explicit value wins, then RPGRAPH_BUDGET, then the default"""
        if explicit is not None:
            return int(explicit)
        return _env_int("RPGRAPH_BUDGET", SearchConfig.DEFAULT_BUDGET)


class ColoringConfig:
    """Coloring oracle and scheme settings"""

    ORACLE_MAX_ORDER = 16
    PLANAR_COLORS = 4

    # Connecting paths recorded in planar scheme certificates
    MAX_CONNECTING_PATH_LENGTH = 4


class CampaignDefaults:
    """Claim campaign defaults"""

    EXHAUSTIVE_MAX_ORDER = 8
    FAMILIES = ("exhaustive", "random-planar", "random-gnp", "file-list")
    DEFAULT_SEED = 1
    DEFAULT_GNP_PROBABILITY = 0.4

    # Share of BUDGET verdicts above which a claim is flagged in reports
    BUDGET_WARNING_RATIO = 0.05

    # Instances drawn per random family when the config gives no count
    DEFAULT_COUNT = 100

    JOBS = _env_int("RPGRAPH_JOBS", os.cpu_count() or 1)


class ExitCodes:
    """Stable process exit codes of the command-line front end"""

    OK = 0
    PARSE_OR_CONFIG = 2
    BUDGET = 3
    CONSTRUCTION_FAILED = 4
    INAPPLICABLE = 5
    REFUTATIONS_FOUND = 6
