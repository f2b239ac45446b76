"""Command-line interface: routing, exit codes, JSON report shapes, and
byte-identical reruns."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from example_data import X_DOC, X_OPEN_COUNT, XP_DOC
from mereotop.cli import EXAMPLE_CONCLUSION, main


@pytest.fixture
def topo_file(tmp_path):
    path = tmp_path / "space.json"
    path.write_text(json.dumps(X_DOC))
    return str(path)


@pytest.fixture
def discrete_file(tmp_path):
    path = tmp_path / "discrete.json"
    path.write_text(json.dumps({"atoms": 2, "covering_mode": "discrete"}))
    return str(path)


@pytest.fixture
def broken_covering_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"atoms": 1, "covering": []}))
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# routing and exit codes


class TestRouting:
    def test_no_command_is_usage_error(self, capsys):
        assert main([]) == 2

    def test_unknown_command_is_usage_error(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_missing_input(self, capsys):
        assert main(["rc"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_nonexistent_file(self, capsys):
        assert main(["rc", "--input", "/no/such/file.json"]) == 2

    def test_invalid_json_reports_position(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["rc", "--input", str(path)]) == 2
        err = capsys.readouterr().err
        assert "line" in err and "column" in err

    def test_wrong_document_kind(self, discrete_file, capsys):
        assert main(["rc", "--input", discrete_file]) == 2

    def test_unrecognized_document(self, tmp_path, capsys):
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"something": 1}))
        assert main(["check-axioms", "--input", str(path)]) == 2

    def test_represent_requires_kind(self, topo_file, capsys):
        assert main(["represent", "--input", topo_file]) == 2

    def test_bad_flag_values(self, capsys):
        assert main(["random", "--trials", "-1"]) == 2
        assert main(["random", "--max-universe", "0"]) == 2
        assert main(["rc", "--cap-elements", "0"]) == 2

    def test_cap_too_small_is_input_error(self, topo_file, capsys):
        assert main(["rc", "--input", topo_file, "--cap-elements", "4"]) == 2

    def test_cap_above_default_warns(self, topo_file, capsys):
        assert main(["rc", "--input", topo_file, "--cap-elements", "128"]) == 0
        assert "warning:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# rc


class TestRcCommand:
    def test_json_report(self, topo_file, capsys):
        code, doc = run_json(capsys, ["rc", "--input", topo_file, "--json"])
        assert code == 0
        assert doc["open_sets"] == X_OPEN_COUNT
        assert doc["carrier_size"] == 8
        assert doc["atom_indices"] == [1, 2, 4]
        assert doc["carrier"][0]["points"] == []
        assert doc["carrier"][-1]["points"] == list("1234567")
        assert all(row["internally_connected"] for row in doc["carrier"])

    def test_verbose_includes_tables(self, topo_file, capsys):
        code, doc = run_json(capsys, ["rc", "--input", topo_file, "--json", "--verbose"])
        assert code == 0
        assert len(doc["contact"]) == 8
        assert doc["contact"][0] == [False] * 8
        assert [0, 0, 0] in doc["covering"]

    def test_text_output(self, topo_file, capsys):
        assert main(["rc", "--input", topo_file]) == 0
        out = capsys.readouterr().out
        assert "regular closed carrier: 8 elements, 3 atoms" in out

    def test_discrete_two_points_has_four_elements(self, tmp_path, capsys):
        path = tmp_path / "two.json"
        path.write_text(json.dumps({"universe": ["a", "b"], "subbasis": [["a"], ["b"]]}))
        code, doc = run_json(capsys, ["rc", "--input", str(path), "--json"])
        assert code == 0
        assert doc["carrier_size"] == 4

    def test_unknown_label_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "bad_label.json"
        path.write_text(json.dumps({"universe": ["a"], "subbasis": [["zz"]]}))
        assert main(["rc", "--input", str(path)]) == 2
        assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# check-axioms


class TestCheckAxiomsCommand:
    def test_mutated_discrete_covering_names_witness(self, tmp_path, capsys):
        triples = [
            [a, b, d]
            for a in range(4)
            for b in range(4)
            for d in range(4)
            if (a & b) & ~d == 0 and (a, b, d) != (3, 3, 3)
        ]
        path = tmp_path / "mutated.json"
        path.write_text(json.dumps({"atoms": 2, "covering": triples}))
        code, doc = run_json(capsys, ["check-axioms", "--input", str(path), "--json"])
        assert code == 1
        assert doc["all_passed"] is False
        witnesses = [
            check["witness"]
            for system in doc["systems"]
            for check in system.get("checks", [])
            if not check["pass"]
        ]
        assert witnesses and all(w is not None for w in witnesses)
    def test_topology_input_all_pass(self, topo_file, capsys):
        code, doc = run_json(capsys, ["check-axioms", "--input", topo_file, "--json"])
        assert code == 0
        assert doc["all_passed"] is True
        names = [s["name"] for s in doc["systems"]]
        assert names == ["WECA", "ECA", "CA"]
        weca_checks = doc["systems"][0]["checks"]
        assert [c["name"] for c in weca_checks] == ["WECA1", "WECA2", "WECA3", "WECA4"]
        assert all(c["pass"] for system in doc["systems"] for c in system["checks"])

    def test_covering_input(self, discrete_file, capsys):
        code, doc = run_json(capsys, ["check-axioms", "--input", discrete_file, "--json"])
        assert code == 0
        assert doc["all_passed"] is True

    def test_failing_covering_exits_one_and_skips_ca(self, broken_covering_file, capsys):
        code, doc = run_json(
            capsys, ["check-axioms", "--input", broken_covering_file, "--json"]
        )
        assert code == 1
        assert doc["all_passed"] is False
        ca = doc["systems"][2]
        assert ca["name"] == "CA" and ca.get("skipped") is True
        witnessed = [
            c
            for system in doc["systems"]
            if "checks" in system
            for c in system["checks"]
            if not c["pass"]
        ]
        assert witnessed and all(c["witness"] is not None for c in witnessed)


# ---------------------------------------------------------------------------
# represent


class TestRepresentCommand:
    @pytest.mark.parametrize("kind", ["type1", "type2"])
    def test_topology_pipelines(self, kind, topo_file, capsys):
        code, doc = run_json(
            capsys, ["represent", "--kind", kind, "--input", topo_file, "--json"]
        )
        assert code == 0
        assert doc["pipeline"] == kind
        assert doc["mode"] == "exhaustive"
        assert doc["frame"]["kind"] == kind
        assert doc["frame"]["worlds"] == 12
        names = [c["name"] for c in doc["checks"]]
        assert "preserves-covering" in names
        assert ("preserves-internal-connectedness" in names) == (kind == "type2")
        assert all(c["pass"] for c in doc["checks"])
        assert set(doc["embedding"]) == {str(m) for m in range(8)}

    def test_parametrized_on_covering(self, discrete_file, capsys):
        code, doc = run_json(
            capsys,
            ["represent", "--kind", "parametrized", "--input", discrete_file, "--json"],
        )
        assert code == 0
        assert doc["pipeline"] == "parametrized"
        assert doc["frame"]["kind"] == "parametrized"
        assert doc["frame"]["worlds"] == 2

    def test_parametrized_on_topology(self, topo_file, capsys):
        code, doc = run_json(
            capsys, ["represent", "--kind", "parametrized", "--input", topo_file, "--json"]
        )
        assert code == 0
        assert doc["frame"]["worlds"] == 3

    def test_type_pipelines_reject_covering(self, discrete_file, capsys):
        assert main(["represent", "--kind", "type1", "--input", discrete_file]) == 2
        err = capsys.readouterr().err
        assert "topological model" in err

    def test_parametrized_rejects_weak_axiom_failure(self, broken_covering_file, capsys):
        code, doc = run_json(
            capsys,
            [
                "represent",
                "--kind",
                "parametrized",
                "--input",
                broken_covering_file,
                "--json",
            ],
        )
        assert code == 1
        assert doc["all_passed"] is False
        assert any(not c["pass"] for c in doc["input_axioms"])


# ---------------------------------------------------------------------------
# example1


class TestExample1Command:
    def test_passes_with_conclusion(self, capsys):
        code, doc = run_json(capsys, ["example1", "--json"])
        assert code == 0
        assert doc["conclusion"] == EXAMPLE_CONCLUSION
        assert [c["name"] for c in doc["checks"]] == [
            "f-bijection",
            "f-preserves-zero",
            "f-preserves-complement",
            "f-preserves-join",
            "f-preserves-contact",
            "region-internally-connected",
            "primed-region-disconnected",
        ]
        assert all(c["pass"] for c in doc["checks"])
        assert doc["regions"]["X"]["internally_connected"] is True
        assert doc["regions"]["X_prime"]["internally_connected"] is False
        assert doc["contact_differences"] == []

    def test_text_mentions_conclusion(self, capsys):
        assert main(["example1"]) == 0
        assert EXAMPLE_CONCLUSION in capsys.readouterr().out

    def test_builtin_docs_match_frozen_spaces(self):
        from mereotop.cli import EXAMPLE_SPACE, EXAMPLE_SPACE_PRIME

        assert EXAMPLE_SPACE == X_DOC
        assert EXAMPLE_SPACE_PRIME == XP_DOC


# ---------------------------------------------------------------------------
# random


class TestExample1Verbose:
    def test_verbose_reports_no_contact_differences(self, capsys):
        assert main(["example1", "--verbose"]) == 0
        out = capsys.readouterr().out
        assert "contact differences across f: 0" in out


class TestRandomCommand:
    def test_fifty_trial_campaign_passes(self, capsys):
        code, doc = run_json(
            capsys, ["random", "--seed", "1", "--trials", "50", "--json"]
        )
        assert code == 0
        assert doc["all_passed"] is True
        assert doc["passed"] == doc["total"] == 50

    def test_campaign_passes(self, capsys):
        code, doc = run_json(
            capsys, ["random", "--seed", "3", "--trials", "4", "--json"]
        )
        assert code == 0
        assert doc["all_passed"] is True
        assert doc["total"] == 4 and doc["passed"] == 4 and doc["failed"] == 0
        assert doc["first_counterexample"] is None
        assert [t["trial"] for t in doc["trials"]] == [0, 1, 2, 3]
        for t in doc["trials"]:
            assert 1 <= t["universe"] <= 5
            assert t["passed"] is True and t["failures"] == []

    def test_reruns_are_byte_identical(self, capsys):
        argv = ["random", "--seed", "11", "--trials", "3", "--json"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_different_seeds_differ(self, capsys):
        code, doc_a = run_json(capsys, ["random", "--seed", "0", "--trials", "3", "--json"])
        code_b, doc_b = run_json(capsys, ["random", "--seed", "1", "--trials", "3", "--json"])
        assert doc_a["trials"] != doc_b["trials"]

    def test_zero_trials(self, capsys):
        code, doc = run_json(capsys, ["random", "--trials", "0", "--json"])
        assert code == 0
        assert doc["total"] == 0 and doc["all_passed"] is True


# ---------------------------------------------------------------------------
# console entry point


class TestConsoleScript:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mereotop.cli", "example1", "--json"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["conclusion"] == EXAMPLE_CONCLUSION
