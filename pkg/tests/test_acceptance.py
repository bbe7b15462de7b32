"""Acceptance gate: one test per criterion, each printing a pass line.

The full-suite runtime budget (final criterion) is enforced by the
``pytest_sessionfinish`` hook in conftest, which prints its own line.
"""
from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager

from fastapi.testclient import TestClient

from facetforge import (
    Concept,
    Facet,
    RelationEdge,
    Severity,
    ViolationCode,
    build_automaton,
    build_ontology,
    default_pspp_schema,
    index_document,
    parse_canonical_json,
    parse_skos_turtle,
    serialize_canonical_json,
    serialize_skos_turtle,
    validate,
)
from facetforge.oracle import oracle_index
from facetforge.service import create_app, load_registry

from conftest import AEROGEL_PATH, BATTERY_PATH, FIXTURES_DIR, load_fixture
from randgen import random_document, random_ontology
from test_oracle_equivalence import AEROGEL_PARAGRAPHS, BATTERY_PARAGRAPHS


@contextmanager
def budget(name: str, seconds: float):
    started = time.perf_counter()
    yield
    elapsed = time.perf_counter() - started
    assert elapsed < seconds, f"{name}: {elapsed:.2f}s exceeded the {seconds:.0f}s budget"
    print(f"[acceptance] {name}: PASS ({elapsed:.2f}s < {seconds:.0f}s)")


def test_schema_fidelity():
    with budget("schema fidelity", 1.0):
        schema = default_pspp_schema()
        table = {
            r.name: (r.domain_facet.value, r.range_facet.value, r.acyclic_required)
            for r in schema
        }
        assert table == {
            "isSynthesizedBy": ("Structure", "Processing", False),
            "isDependentOn": ("Property", "Performance", False),
            "isDerivedFrom": ("Performance", "Property", False),
            "isPrecededBy": ("Processing", "Processing", True),
            "isAssociatedWith": ("Structure", "Structure", False),
        }
        assert len(schema) == 5
        assert "isA" not in schema


def test_round_trip_suite():
    with budget("round-trip suite", 10.0):
        for path in (AEROGEL_PATH, BATTERY_PATH):
            data = path.read_bytes()
            onto = parse_canonical_json(data).ontology
            assert parse_canonical_json(serialize_canonical_json(onto)).ontology == onto
            assert parse_skos_turtle(serialize_skos_turtle(onto)).ontology == onto
            once = serialize_canonical_json(parse_canonical_json(data).ontology)
            assert serialize_canonical_json(parse_canonical_json(once).ontology) == once
            ttl = serialize_skos_turtle(onto)
            assert serialize_skos_turtle(parse_skos_turtle(ttl).ontology) == ttl

        rng = random.Random(616)
        for _ in range(100):
            onto = random_ontology(rng, max_concepts=50, matchable_labels=False)
            json_bytes = serialize_canonical_json(onto)
            assert parse_canonical_json(json_bytes).ontology == onto
            assert serialize_canonical_json(parse_canonical_json(json_bytes).ontology) \
                == json_bytes
            ttl = serialize_skos_turtle(onto)
            assert parse_skos_turtle(ttl).ontology == onto
            assert serialize_skos_turtle(parse_skos_turtle(ttl).ontology) == ttl


def test_validator_mutation_suite():
    with budget("validator mutation suite", 5.0):
        aerogel = load_fixture(AEROGEL_PATH).ontology
        battery = load_fixture(BATTERY_PATH).ontology
        for onto in (aerogel, battery):
            clean = validate(onto)
            assert clean.passed and not clean.violations

        def rebuilt(base, concepts=(), edges=()):
            return build_ontology(
                base.name, base.version,
                list(base.concepts.values()) + list(concepts),
                list(base.edges) + list(edges),
                base.schema,
            )

        seeded = {
            ViolationCode.V1_FACET_EXCLUSIVITY: rebuilt(aerogel, concepts=[
                Concept("DensityOfStates", "density", facet=Facet.STRUCTURE)]),
            ViolationCode.V3_DOMAIN_RANGE_MISMATCH: rebuilt(aerogel, edges=[
                RelationEdge("ThermalConductivity", "isSynthesizedBy", "SolGelProcess")]),
            ViolationCode.V4_ORDER_CYCLE: rebuilt(aerogel, edges=[
                RelationEdge("SolGelProcess", "isPrecededBy", "SolventFreezing")]),
            ViolationCode.V5_LABEL_COLLISION: rebuilt(battery, concepts=[
                Concept("FoilLayer", "Foil Layer", ("collector foil",), Facet.STRUCTURE)]),
        }
        for expected, mutated in seeded.items():
            report = validate(mutated)
            matching = report.by_code(expected)
            assert matching, expected
            error_codes = {v.code for v in report.violations if v.severity is Severity.ERROR}
            assert error_codes <= {expected}
            if expected is ViolationCode.V5_LABEL_COLLISION:
                assert report.passed  # warning severity keeps the report green
            else:
                assert not report.passed


def test_indexer_oracle_equivalence():
    with budget("indexer oracle equivalence", 30.0):
        for path, paragraphs in (
            (AEROGEL_PATH, AEROGEL_PARAGRAPHS),
            (BATTERY_PATH, BATTERY_PARAGRAPHS),
        ):
            onto = load_fixture(path).ontology
            automaton = build_automaton(onto)
            assert len(paragraphs) == 10
            for text in paragraphs:
                fast = index_document(automaton, text)
                slow = oracle_index(onto, automaton.config, text)
                assert fast == slow
                assert json.dumps(fast.to_json_dict()) == json.dumps(slow.to_json_dict())

        rng = random.Random(271828)
        for _ in range(500):
            onto = random_ontology(rng, max_concepts=15)
            automaton = build_automaton(onto)
            text = random_document(rng, max_tokens=150)
            fast = index_document(automaton, text)
            slow = oracle_index(onto, automaton.config, text)
            assert fast == slow
            assert json.dumps(fast.to_json_dict()) == json.dumps(slow.to_json_dict())


def test_anchored_extraction():
    with budget("anchored extraction", 1.0):
        battery = load_fixture(BATTERY_PATH).ontology
        result = index_document(
            build_automaton(battery),
            "The current collector was coated with active material.",
        )
        assert {h.concept_id for h in result.hits} == {"CurrentCollector", "ActiveMaterial"}

        aerogel = load_fixture(AEROGEL_PATH).ontology
        abstract = (
            "Aerogels are low-density, open-pored nanostructured materials "
            "with low thermal conductivity and high adsorption capacity."
        )
        result = index_document(build_automaton(aerogel), abstract)
        assert {h.concept_id for h in result.hits} == {
            "Density", "ThermalConductivity", "AdsorptionCapacity",
        }
        property_group = result.per_facet[Facet.PROPERTY]
        assert "ThermalConductivity" in {a.concept_id for a in property_group}
        assert all(h.facet is Facet.PROPERTY for h in result.hits
                   if h.concept_id == "ThermalConductivity")


def test_is_associated_with_anchor():
    with budget("isAssociatedWith anchor", 1.0):
        client = TestClient(create_app(load_registry(FIXTURES_DIR)))
        body = client.get(
            "/ontologies/Battery Cathode Excerpt/concepts/ActiveMaterial"
        ).json()
        incoming = [(e["relation"], e["subject"]) for e in body["incoming"]]
        assert sorted(incoming) == [
            ("isAssociatedWith", "Morphology"),
            ("isAssociatedWith", "ParticleSize"),
            ("isAssociatedWith", "SizeDistribution"),
        ]
        assert len(incoming) == 3


def test_cli_contract(tmp_path):
    with budget("CLI contract", 5.0):
        def invoke(*argv, stdin=None):
            return subprocess.run(
                [sys.executable, "-m", "facetforge.cli", *argv],
                input=stdin, capture_output=True,
            ).returncode

        assert invoke("validate", str(AEROGEL_PATH)) == 0

        doc = json.loads(AEROGEL_PATH.read_bytes())
        doc["edges"].append({
            "subject": "ThermalConductivity",
            "relation": "isSynthesizedBy",
            "object": "SolGelProcess",
        })
        seeded = tmp_path / "seeded.json"
        seeded.write_text(json.dumps(doc))
        assert invoke("validate", str(seeded)) == 1

        malformed = tmp_path / "malformed.json"
        malformed.write_text('{"name": "x", ')
        assert invoke("validate", str(malformed)) == 2
        assert invoke("stats", str(tmp_path / "missing.json")) == 2

        assert invoke("no-such-command") == 3
        assert invoke("convert", str(AEROGEL_PATH)) == 3  # --to is required
