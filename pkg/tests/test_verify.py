"""Tests for instance generators, the claim registry and campaigns."""
import json
import time

import networkx as nx
import pytest
from hypothesis import given, settings

from core.errors import CampaignConfigError, DomainError
from core.formats import to_graph6
from core.graph import Graph
from core.results import Verdict
from coloring.schemes import is_planar
from verify.campaign import CampaignConfig, instances, run_campaign
from verify.claims import CLAIM_IDS, CLAIMS, ClaimReport, check_claim, replay_report
from verify.generators import enumerate_graphs, generate, random_gnp, random_planar
from tests.conftest import complete
from tests.strategies import graphs


# ==================== Generators ====================

class TestEnumerateGraphs:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
    def test_isomorphism_class_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(n)) == count

    def test_pairwise_non_isomorphic(self):
        found = [g.to_networkx() for g in enumerate_graphs(5)]
        assert not any(nx.is_isomorphic(a, b) for i, a in enumerate(found) for b in found[i + 1:])

    @pytest.mark.parametrize("n", [-1, 9])
    def test_out_of_range(self, n):
        with pytest.raises(DomainError):
            list(enumerate_graphs(n))

    @pytest.mark.slow
    def test_order_eight(self):
        assert sum(1 for _ in enumerate_graphs(8)) == 12346


class TestRandomFamilies:
    def test_triangulation(self):
        g = random_planar(10, 1)
        assert g.size == 3 * 10 - 6
        assert is_planar(g)

    def test_seeded(self):
        assert random_planar(10, 1) == random_planar(10, 1)
        assert random_gnp(9, 0.5, 3) == random_gnp(9, 0.5, 3)

    def test_triangulation_needs_three_vertices(self):
        with pytest.raises(DomainError):
            random_planar(2, 1)

    def test_gnp_probability_range(self):
        with pytest.raises(DomainError):
            random_gnp(5, 1.5, 1)


class TestGenerate:
    def test_wheel(self):
        g = generate("wheel:5")
        assert (g.order, g.size) == (6, 10)

    def test_petersen(self):
        g = generate("petersen")
        assert (g.order, g.size) == (10, 15)

    def test_planar_matches_random_planar(self):
        assert generate("planar:10:1") == random_planar(10, 1)

    @pytest.mark.parametrize("spec", ["bogus", "complete", "complete:x", "complete:-1", "gnp:5:p:1"])
    def test_bad_specs(self, spec):
        with pytest.raises(DomainError):
            generate(spec)


# ==================== Claims ====================

class TestCheckClaim:
    @pytest.mark.parametrize("claim_id", ["T1", "L1", "T2", "T3", "T4", "T5", "T8", "T9"])
    def test_k4_verified(self, k4, claim_id):
        report = check_claim(claim_id, k4)
        assert report.verdict is Verdict.VERIFIED
        assert report.t == 4

    @pytest.mark.parametrize("claim_id", ["L2", "C2", "C3"])
    def test_k4_has_too_few_minors(self, k4, claim_id):
        assert check_claim(claim_id, k4).verdict is Verdict.INAPPLICABLE

    def test_unknown_claim(self, k4):
        with pytest.raises(DomainError):
            check_claim("T99", k4)

    def test_empty_graph(self):
        report = check_claim("T1", Graph.empty(0))
        assert report.verdict is Verdict.INAPPLICABLE and report.t is None

    def test_four_colors_needs_planarity(self):
        assert check_claim("FC4", complete(5)).verdict is Verdict.INAPPLICABLE

    def test_srp_coloring_on_wheel(self, wheel5):
        assert check_claim("T413", wheel5).verdict is Verdict.VERIFIED

    def test_tiny_budget(self, petersen):
        report = check_claim("T9", petersen, budget=1)
        assert report.verdict is Verdict.BUDGET

    def test_registry_covers_every_id(self):
        assert set(CLAIMS) == set(CLAIM_IDS)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_order=1, max_order=6))
    def test_dominating_forests_are_never_refuted(self, g):
        assert check_claim("T1", g).verdict is not Verdict.REFUTED
        assert check_claim("L1", g).verdict is not Verdict.REFUTED

    @pytest.mark.slow
    @pytest.mark.parametrize("claim_id", CLAIM_IDS)
    def test_no_refutation_up_to_six_vertices(self, claim_id):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                assert check_claim(claim_id, g).verdict is not Verdict.REFUTED, to_graph6(g)


class TestReports:
    def test_replay(self, k4):
        assert replay_report(check_claim("T5", k4))

    def test_replay_detects_tampering(self, k4):
        report = check_claim("T3", k4)
        forged = ClaimReport(report.claim_id, report.instance, Verdict.REFUTED, report.t, report.evidence)
        assert not replay_report(forged)

    def test_dict_round_trip(self, wheel5):
        report = check_claim("T9", wheel5)
        payload = json.loads(json.dumps(report.to_dict()))
        assert ClaimReport.from_dict(payload).to_dict() == payload


# ==================== Campaigns ====================

class TestCampaignConfig:
    @pytest.mark.parametrize("payload", [
        [],
        {"family": "everything", "max_order": 3},
        {"family": "exhaustive"},
        {"family": "exhaustive", "max_order": 9},
        {"family": "exhaustive", "max_order": 3, "min_order": 4},
        {"family": "exhaustive", "max_order": 3, "claims": ["T99"]},
        {"family": "exhaustive", "max_order": 3, "jobs": 0},
        {"family": "exhaustive", "max_order": 3, "budget": "lots"},
        {"family": "exhaustive", "max_order": 3, "colour": True},
        {"family": "random-gnp", "max_order": 5, "probability": 2},
        {"family": "random-planar", "min_order": 2, "max_order": 5},
        {"family": "file-list"},
    ])
    def test_rejected(self, payload):
        with pytest.raises(CampaignConfigError):
            CampaignConfig.from_dict(payload)

    def test_defaults(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "max_order": 3})
        assert cfg.claims == CLAIM_IDS and cfg.min_order == 1 and not cfg.include_timing

    def test_per_claim_budget(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "max_order": 3, "budget": 100,
                                        "claim_budgets": {"T9": 5}})
        assert cfg.budget_for("T9") == 5 and cfg.budget_for("T1") == 100

    def test_unreadable_file(self, tmp_path):
        path = tmp_path / "campaign.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(CampaignConfigError):
            CampaignConfig.load(path)


class TestRunCampaign:
    def test_exhaustive_instances(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "max_order": 4, "claims": ["T1"], "jobs": 1})
        report = run_campaign(cfg)
        assert report.instances == 18
        assert sum(report.counts["T1"].values()) == 18
        assert not report.has_refutations

    def test_no_claims(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "max_order": 3, "claims": [], "jobs": 1})
        payload = run_campaign(cfg).to_dict()
        assert payload["claims"] == {} and payload["refutations"] == []

    def test_independent_of_worker_count(self):
        base = {"family": "random-planar", "min_order": 4, "max_order": 7, "count": 4, "seed": 3,
                "claims": ["T1", "T9", "FC4"]}
        serial = run_campaign(CampaignConfig.from_dict(dict(base, jobs=1))).to_json()
        parallel = run_campaign(CampaignConfig.from_dict(dict(base, jobs=2))).to_json()
        assert serial == parallel

    @pytest.mark.slow
    def test_all_claims_up_to_seven_vertices(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "min_order": 1, "max_order": 7})
        started = time.perf_counter()
        report = run_campaign(cfg)
        elapsed = time.perf_counter() - started
        assert report.instances == 1 + 2 + 4 + 11 + 34 + 156 + 1044
        assert not report.has_refutations, [r.instance for r in report.refutations]
        for claim_id in CLAIM_IDS:
            assert report.counts[claim_id][Verdict.REFUTED.key] == 0, claim_id
            assert report.counts[claim_id][Verdict.BUDGET.key] == 0, claim_id
            assert sum(report.counts[claim_id].values()) == report.instances
        assert elapsed < 3600

    @pytest.mark.slow
    def test_report_is_byte_identical_across_runs(self):
        cfg = CampaignConfig.from_dict({"family": "exhaustive", "min_order": 1, "max_order": 6, "jobs": 2})
        assert run_campaign(cfg).to_json() == run_campaign(cfg).to_json()

    def test_seeded_instances(self):
        cfg = CampaignConfig.from_dict({"family": "random-gnp", "max_order": 6, "count": 5, "seed": 7})
        assert instances(cfg) == instances(cfg)

    def test_timing_is_opt_in(self):
        base = {"family": "exhaustive", "max_order": 2, "claims": ["T1"], "jobs": 1}
        assert "timing" not in run_campaign(CampaignConfig.from_dict(base)).to_dict()
        timed = run_campaign(CampaignConfig.from_dict(dict(base, include_timing=True))).to_dict()
        assert set(timed["timing"]["T1"]) == {"mean_seconds", "max_seconds"}

    def test_file_list_relative_to_config(self, tmp_path):
        (tmp_path / "instances.g6").write_text("C~\n# comment\n\nD?{\n", encoding="ascii")
        config = tmp_path / "campaign.json"
        config.write_text(json.dumps({"family": "file-list", "files": ["instances.g6"],
                                      "claims": ["T9"], "jobs": 1}), encoding="utf-8")
        report = run_campaign(CampaignConfig.load(config))
        assert report.instances == 2
        assert report.to_dict()["config"]["files"] == ["instances.g6"]

    def test_bad_instance_file(self, tmp_path):
        (tmp_path / "instances.g6").write_text("C~\n!!\n", encoding="ascii")
        cfg = CampaignConfig.from_dict({"family": "file-list", "files": [str(tmp_path / "instances.g6")]})
        with pytest.raises(CampaignConfigError):
            run_campaign(cfg)
