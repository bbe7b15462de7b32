from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facetforge import (
    DocumentSchemaError,
    DocumentSyntaxError,
    Facet,
    MissingFacetError,
    UnknownFacetValueError,
    build_ontology,
    default_pspp_schema,
    parse_canonical_json,
    parse_skos_turtle,
    serialize_skos_turtle,
)

from conftest import FIXTURES_DIR
from randgen import random_ontology

PREFIXES = """\
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix mat: <https://facetforge.dev/ns/pspp#> .
@prefix ex: <https://example.org/vocab#> .
"""

HEADER = """\
mat:ontology mat:name "Mini" ;
    mat:version "1" .
"""


def parse(body: str) -> object:
    return parse_skos_turtle(PREFIXES + HEADER + body)


class TestParsing:
    def test_one_concept_document(self):
        outcome = parse(
            'ex:SolventFreezing mat:facet mat:Processing ; '
            'skos:prefLabel "Solvent Freezing" .\n'
        )
        onto = outcome.ontology
        assert onto.name == "Mini" and onto.version == "1"
        assert list(onto.concepts) == ["SolventFreezing"]
        assert onto.concepts["SolventFreezing"].facet is Facet.PROCESSING
        assert onto.concepts["SolventFreezing"].pref_label == "Solvent Freezing"

    def test_labels_without_facet_is_an_error(self):
        with pytest.raises(MissingFacetError, match="X"):
            parse('ex:X skos:prefLabel "x" .\n')

    def test_unknown_facet_value(self):
        with pytest.raises(UnknownFacetValueError):
            parse('ex:X mat:facet mat:Shape ; skos:prefLabel "x" .\n')

    def test_alt_labels_broader_definition(self):
        outcome = parse(
            'ex:Parent mat:facet mat:Structure ; skos:prefLabel "parent" .\n'
            'ex:Kid mat:facet mat:Structure ;\n'
            '    skos:prefLabel "kid" ;\n'
            '    skos:altLabel "child" ;\n'
            '    skos:altLabel "junior" ;\n'
            '    skos:broader ex:Parent ;\n'
            '    skos:definition "a junior node" .\n'
        )
        kid = outcome.ontology.concepts["Kid"]
        assert kid.alt_labels == ("child", "junior")
        assert kid.parent == "Parent"
        assert kid.definition == "a junior node"

    def test_object_lists_with_commas(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; skos:prefLabel "x" ;\n'
            '    skos:altLabel "one", "two" .\n'
        )
        assert outcome.ontology.concepts["X"].alt_labels == ("one", "two")

    def test_full_iri_subject_uses_final_segment(self):
        outcome = parse(
            '<https://example.org/vocab#DeepId> mat:facet mat:Property ; '
            'skos:prefLabel "deep" .\n'
        )
        assert "DeepId" in outcome.ontology.concepts

    def test_relation_header_and_edges(self):
        text = PREFIXES + (
            'mat:ontology mat:name "Rel" ;\n'
            '    mat:version "2" ;\n'
            '    mat:relation [ mat:name "isAssociatedWith" ; '
            'mat:domainFacet mat:Structure ; mat:rangeFacet mat:Structure ; '
            'mat:acyclic "false" ] .\n'
            'ex:A mat:facet mat:Structure ; skos:prefLabel "a" .\n'
            'ex:B mat:facet mat:Structure ; skos:prefLabel "b" .\n'
            'ex:A mat:isAssociatedWith ex:B .\n'
        )
        onto = parse_skos_turtle(text).ontology
        assert len(onto.schema) == 1
        assert onto.edges[0].subject == "A" and onto.edges[0].object == "B"

    def test_alias_relation_spelling_in_header_and_predicate(self):
        text = PREFIXES + (
            'mat:ontology mat:name "Rel" ; mat:version "2" ;\n'
            '    mat:relation [ mat:name "isPreceededby" ; '
            'mat:domainFacet mat:Processing ; mat:rangeFacet mat:Processing ; '
            'mat:acyclic "true" ] .\n'
            'ex:A mat:facet mat:Processing ; skos:prefLabel "a" .\n'
            'ex:B mat:facet mat:Processing ; skos:prefLabel "b" .\n'
            'ex:B mat:isPreceededBy ex:A .\n'
        )
        outcome = parse_skos_turtle(text)
        assert outcome.ontology.schema.get("isPrecededBy").acyclic_required
        assert outcome.ontology.edges[0].relation == "isPrecededBy"
        assert [w.code for w in outcome.warnings].count("relation-alias") == 2

    def test_incomplete_relation_declaration(self):
        text = PREFIXES + (
            'mat:ontology mat:name "Rel" ; mat:version "2" ;\n'
            '    mat:relation [ mat:name "isAssociatedWith" ] .\n'
        )
        with pytest.raises(DocumentSchemaError, match="domainFacet"):
            parse_skos_turtle(text)

    def test_missing_header_defaults_with_warning(self):
        outcome = parse_skos_turtle(
            PREFIXES + 'ex:X mat:facet mat:Structure ; skos:prefLabel "x" .\n'
        )
        assert outcome.ontology.name == ""
        assert any(w.code == "missing-header" for w in outcome.warnings)


class TestWarningsNeverChangeContent:
    NOISY = PREFIXES + HEADER + (
        'ex:X a skos:Concept ;\n'
        '    mat:facet mat:Structure ;\n'
        '    skos:prefLabel "x" ;\n'
        '    skos:related ex:Y ;\n'
        '    skos:note [ skos:prefLabel "nested" ] ;\n'
        '    skos:editorialNote "note", 5, true .\n'
    )
    CLEAN = PREFIXES + HEADER + (
        'ex:X mat:facet mat:Structure ;\n'
        '    skos:prefLabel "x" .\n'
    )

    def test_unknown_predicates_warn_and_skip(self):
        noisy = parse_skos_turtle(self.NOISY)
        clean = parse_skos_turtle(self.CLEAN)
        assert noisy.ontology == clean.ontology
        assert clean.warnings == ()
        assert any(w.code == "unknown-predicate" for w in noisy.warnings)

    def test_language_tag_dropped_with_warning(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; skos:prefLabel "x"@en .\n'
        )
        assert outcome.ontology.concepts["X"].pref_label == "x"
        assert any(w.code == "language-tag" for w in outcome.warnings)

    def test_typed_and_numeric_literals_skipped(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; skos:prefLabel "x" ;\n'
            '    skos:altLabel "y"^^<http://www.w3.org/2001/XMLSchema#string> ;\n'
            '    skos:altLabel 4.5 .\n'
        )
        assert outcome.ontology.concepts["X"].alt_labels == ()
        codes = {w.code for w in outcome.warnings}
        assert "typed-literal" in codes and "number" in codes

    def test_blank_node_subject_skipped(self):
        outcome = parse('[ skos:prefLabel "floating" ] .\n')
        assert len(outcome.ontology.concepts) == 0
        assert any(w.code == "blank-node-subject" for w in outcome.warnings)

    def test_collection_object_skipped(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; skos:prefLabel "x" ;\n'
            '    skos:altLabel ("a" "b") .\n'
        )
        assert outcome.ontology.concepts["X"].alt_labels == ()
        assert any(w.code == "collection" for w in outcome.warnings)

    def test_duplicate_alt_labels_deduplicated(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; skos:prefLabel "Open Pore" ;\n'
            '    skos:altLabel "porosity" ; skos:altLabel "Porosity" ;\n'
            '    skos:altLabel "open-pore" .\n'
        )
        assert outcome.ontology.concepts["X"].alt_labels == ("porosity",)
        assert [w.code for w in outcome.warnings].count("duplicate-altlabel") == 2


class TestSyntaxErrors:
    @pytest.mark.parametrize("text, line", [
        (PREFIXES + 'ex:X skos:prefLabel "unterminated .\n', 4),
        (PREFIXES + "ex:X skos:prefLabel 'single' .\n", 4),
        (PREFIXES + 'ex:X skos:prefLabel """long""" .\n', 4),
        (PREFIXES + "undeclared:X skos:prefLabel \"x\" .\n", 4),
        (PREFIXES + "ex:X skos:prefLabel \"x\"\n", 4),  # missing final dot
        ("@prefix broken <https://x> .\n", 1),
        (PREFIXES + "ex:X <https://p> <https://o\n", 4),
    ])
    def test_error_carries_location(self, text, line):
        with pytest.raises(DocumentSyntaxError) as excinfo:
            parse_skos_turtle(text)
        assert excinfo.value.location.line >= 1
        # never past the offending line
        assert excinfo.value.location.line <= text.count("\n") + 1

    def test_unterminated_string_points_at_opening_quote(self):
        with pytest.raises(DocumentSyntaxError) as excinfo:
            parse_skos_turtle(PREFIXES + 'ex:X skos:prefLabel "oops\n')
        assert excinfo.value.location.line == 4
        assert excinfo.value.location.column == 21

    def test_string_escapes_round_trip(self):
        outcome = parse(
            'ex:X mat:facet mat:Structure ; '
            'skos:prefLabel "tab\\there \\"quoted\\" \\\\ \\u00E9 \\U0001F600" .\n'
        )
        assert outcome.ontology.concepts["X"].pref_label == 'tab\there "quoted" \\ é 😀'


class TestSerialization:
    def test_empty_ontology_is_prefixes_plus_header_only(self):
        onto = build_ontology("Empty", "1", [], [], default_pspp_schema())
        text = serialize_skos_turtle(onto)
        lines = text.splitlines()
        assert lines[0].startswith("@prefix skos:")
        assert lines[1].startswith("@prefix mat:")
        assert lines[2].startswith("@prefix ex:")
        assert lines[4].startswith("mat:ontology ")
        assert "ex:" not in text.split("mat:ontology")[1].replace("ex: ", "")
        reparsed = parse_skos_turtle(text)
        assert reparsed.ontology == onto
        assert reparsed.warnings == ()

    def test_ids_emit_as_bare_local_names(self, aerogel):
        text = serialize_skos_turtle(aerogel)
        assert "ex:SolventFreezing " in text
        assert "<" not in text.split("\n\n", 1)[1]  # no raw IRIs after prefixes

    def test_cross_format_round_trip_on_fixtures(self):
        for path in sorted(FIXTURES_DIR.glob("*.json")):
            via_json = parse_canonical_json(path.read_bytes()).ontology
            via_turtle = parse_skos_turtle(serialize_skos_turtle(via_json))
            assert via_turtle.ontology == via_json
            assert via_turtle.warnings == ()

    def test_serialization_is_deterministic(self, battery):
        assert serialize_skos_turtle(battery) == serialize_skos_turtle(battery)

    def test_round_trip_on_seeded_random_ontologies(self):
        rng = random.Random(88)
        for _ in range(30):
            onto = random_ontology(rng, matchable_labels=False)
            outcome = parse_skos_turtle(serialize_skos_turtle(onto))
            assert outcome.ontology == onto


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_round_trip_identity_property(seed):
    onto = random_ontology(random.Random(seed), max_concepts=20, matchable_labels=False)
    outcome = parse_skos_turtle(serialize_skos_turtle(onto))
    assert outcome.ontology == onto
