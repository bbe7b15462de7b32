"""Facet-rule validation: exclusivity, domain/range conformance, ordering cycles.

The builder already guarantees structural integrity, so most checks here are
semantic; V6/V7 re-derive structural facts as defense in depth for ontologies
assembled without :func:`facetforge.model.build_ontology`. Problems are
reported as data, never raised.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import (
    MAX_HIERARCHY_DEPTH,
    ConceptId,
    Facet,
    Ontology,
    RelationSchema,
    RelationType,
)
from .textnorm import normalize_phrase


def default_pspp_schema() -> RelationSchema:
    """The stock relation set connecting the four facets.

    isPrecededBy chains process steps in execution order, so its edge
    subgraph must stay acyclic; the others carry no ordering meaning.
    """
    return RelationSchema((
        RelationType("isSynthesizedBy", Facet.STRUCTURE, Facet.PROCESSING),
        RelationType("isDependentOn", Facet.PROPERTY, Facet.PERFORMANCE),
        RelationType("isDerivedFrom", Facet.PERFORMANCE, Facet.PROPERTY),
        RelationType("isPrecededBy", Facet.PROCESSING, Facet.PROCESSING, acyclic_required=True),
        RelationType("isAssociatedWith", Facet.STRUCTURE, Facet.STRUCTURE),
    ))


# Why each stock relation points the way it does; quoted by explain().
RELATION_RATIONALE = {
    "isSynthesizedBy": "a structure points at the processing step that synthesizes it",
    "isDependentOn": "a property points at the performance outcomes that rest on it",
    "isDerivedFrom": "a performance metric points at the property it is mathematically derived from",
    "isPrecededBy": "processing steps chain in the order they occur, so the chain cannot loop",
    "isAssociatedWith": "a structure detail points at the larger structure it belongs with",
}


class Severity(enum.Enum):
    ERROR = "Error"
    WARNING = "Warning"

    def __str__(self) -> str:
        return self.value


class ViolationCode(enum.Enum):
    V1_FACET_EXCLUSIVITY = "V1_FacetExclusivity"
    V2_HIERARCHY_ERROR = "V2_HierarchyError"
    V3_DOMAIN_RANGE_MISMATCH = "V3_DomainRangeMismatch"
    V4_ORDER_CYCLE = "V4_OrderCycle"
    V5_LABEL_COLLISION = "V5_LabelCollision"
    V6_DANGLING_REFERENCE = "V6_DanglingReference"
    V7_UNREACHABLE = "V7_Unreachable"

    def __str__(self) -> str:
        return self.value

    @property
    def severity(self) -> Severity:
        if self in (ViolationCode.V5_LABEL_COLLISION, ViolationCode.V7_UNREACHABLE):
            return Severity.WARNING
        return Severity.ERROR


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    subjects: tuple[ConceptId, ...]
    message: str

    @property
    def severity(self) -> Severity:
        return self.code.severity

    def to_json_dict(self) -> dict:
        return {
            "code": self.code.value,
            "severity": self.severity.value,
            "subjects": list(self.subjects),
            "message": self.message,
        }


@dataclass(frozen=True)
class ValidationReport:
    ontology_name: str
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not any(v.severity is Severity.ERROR for v in self.violations)

    def by_code(self, code: ViolationCode) -> list[Violation]:
        return [v for v in self.violations if v.code is code]

    def to_json_dict(self) -> dict:
        return {
            "ontology": self.ontology_name,
            "pass": self.passed,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def _check_facet_exclusivity(ontology: Ontology, out: list[Violation]) -> None:
    # V1: the same normalized preferred label claiming homes in two facets.
    by_label: dict[str, list[ConceptId]] = {}
    for concept in ontology.concepts.values():
        by_label.setdefault(normalize_phrase(concept.pref_label), []).append(concept.id)
    for label, ids in by_label.items():
        facets = {ontology.concepts[i].facet for i in ids}
        if len(facets) > 1:
            facet_names = ", ".join(sorted(f.value for f in facets))
            out.append(Violation(
                ViolationCode.V1_FACET_EXCLUSIVITY,
                tuple(sorted(ids)),
                f"preferred label {label!r} is claimed in multiple facets ({facet_names}); "
                "facets are mutually exclusive",
            ))


def _check_hierarchy(ontology: Ontology, out: list[Violation]) -> None:
    # V2: chains escaping their facet, or deeper than the guard limit.
    for concept in ontology.concepts.values():
        if concept.parent is None:
            continue
        parent = ontology.concepts.get(concept.parent)
        if parent is not None and parent.facet is not concept.facet:
            out.append(Violation(
                ViolationCode.V2_HIERARCHY_ERROR,
                (concept.id, parent.id),
                f"concept {concept.id} ({concept.facet}) has parent {parent.id} "
                f"({parent.facet}); hierarchies must stay within one facet",
            ))
        depth = 0
        node = concept.parent
        while node is not None and depth <= MAX_HIERARCHY_DEPTH:
            depth += 1
            next_concept = ontology.concepts.get(node)
            node = next_concept.parent if next_concept else None
        if depth > MAX_HIERARCHY_DEPTH:
            out.append(Violation(
                ViolationCode.V2_HIERARCHY_ERROR,
                (concept.id,),
                f"concept {concept.id} sits deeper than the {MAX_HIERARCHY_DEPTH}-level "
                "hierarchy limit",
            ))


def _check_domain_range(ontology: Ontology, out: list[Violation]) -> None:
    # V3: every edge's endpoint facets must equal the relation's declaration.
    for edge in ontology.edges:
        relation = ontology.schema.get(edge.relation)
        subject = ontology.concepts.get(edge.subject)
        object_ = ontology.concepts.get(edge.object)
        if subject is None or object_ is None:
            continue  # reported as V6
        if relation is None:
            out.append(Violation(
                ViolationCode.V3_DOMAIN_RANGE_MISMATCH,
                (edge.subject, edge.object),
                f"edge ({edge.subject}, {edge.relation}, {edge.object}) uses relation "
                f"{edge.relation!r} that the schema does not declare",
            ))
            continue
        if subject.facet is not relation.domain_facet:
            out.append(Violation(
                ViolationCode.V3_DOMAIN_RANGE_MISMATCH,
                (edge.subject, edge.object),
                f"edge ({edge.subject}, {edge.relation}, {edge.object}): subject facet "
                f"{subject.facet} does not match the {edge.relation} domain "
                f"{relation.domain_facet}",
            ))
        if object_.facet is not relation.range_facet:
            out.append(Violation(
                ViolationCode.V3_DOMAIN_RANGE_MISMATCH,
                (edge.subject, edge.object),
                f"edge ({edge.subject}, {edge.relation}, {edge.object}): object facet "
                f"{object_.facet} does not match the {edge.relation} range "
                f"{relation.range_facet}",
            ))


def _strongly_connected_components(
    nodes: list[ConceptId], adjacency: dict[ConceptId, list[ConceptId]]
) -> list[list[ConceptId]]:
    """Iterative Tarjan; recursion would overflow on long relation chains."""
    index_of: dict[ConceptId, int] = {}
    lowlink: dict[ConceptId, int] = {}
    on_stack: set[ConceptId] = set()
    stack: list[ConceptId] = []
    components: list[list[ConceptId]] = []
    counter = 0

    for start in nodes:
        if start in index_of:
            continue
        work: list[tuple[ConceptId, int]] = [(start, 0)]
        while work:
            node, edge_i = work.pop()
            if edge_i == 0:
                index_of[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            neighbors = adjacency.get(node, [])
            for i in range(edge_i, len(neighbors)):
                succ = neighbors[i]
                if succ not in index_of:
                    work.append((node, i + 1))
                    work.append((succ, 0))
                    advanced = True
                    break
                if succ in on_stack:
                    lowlink[node] = min(lowlink[node], index_of[succ])
            if advanced:
                continue
            if lowlink[node] == index_of[node]:
                component: list[ConceptId] = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(component)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
    return components


def _check_order_cycles(ontology: Ontology, out: list[Violation]) -> None:
    # V4: one violation per cyclic component of each acyclic-required relation.
    for relation in ontology.schema:
        if not relation.acyclic_required:
            continue
        adjacency: dict[ConceptId, list[ConceptId]] = {}
        nodes: list[ConceptId] = []
        has_self_loop: set[ConceptId] = set()
        for edge in ontology.edges:
            if edge.relation != relation.name:
                continue
            for endpoint in (edge.subject, edge.object):
                if endpoint not in adjacency:
                    adjacency[endpoint] = []
                    nodes.append(endpoint)
            adjacency[edge.subject].append(edge.object)
            if edge.subject == edge.object:
                has_self_loop.add(edge.subject)
        nodes.sort()
        for neighbors in adjacency.values():
            neighbors.sort()
        for component in _strongly_connected_components(nodes, adjacency):
            if len(component) == 1 and component[0] not in has_self_loop:
                continue
            members = tuple(sorted(component))
            out.append(Violation(
                ViolationCode.V4_ORDER_CYCLE,
                members,
                f"{relation.name} edges form a cycle through {', '.join(members)}; "
                "ordering relations must be acyclic",
            ))


def _check_label_collisions(ontology: Ontology, out: list[Violation]) -> None:
    # V5: any normalized label (preferred or alternative) shared across concepts.
    owners: dict[str, set[ConceptId]] = {}
    for concept in ontology.concepts.values():
        for label in concept.labels:
            norm = normalize_phrase(label)
            if norm:
                owners.setdefault(norm, set()).add(concept.id)
    for label, ids in owners.items():
        if len(ids) > 1:
            out.append(Violation(
                ViolationCode.V5_LABEL_COLLISION,
                tuple(sorted(ids)),
                f"label {label!r} maps to more than one concept; "
                "indexing hits on it will be ambiguous",
            ))


def _check_dangling(ontology: Ontology, out: list[Violation]) -> None:
    # V6: defense in depth; the builder rejects these at construction time.
    for concept in ontology.concepts.values():
        if concept.parent is not None and concept.parent not in ontology.concepts:
            out.append(Violation(
                ViolationCode.V6_DANGLING_REFERENCE,
                (concept.id,),
                f"concept {concept.id}: parent {concept.parent!r} does not exist",
            ))
    for edge in ontology.edges:
        for endpoint in (edge.subject, edge.object):
            if endpoint not in ontology.concepts:
                referrer = edge.object if endpoint == edge.subject else edge.subject
                subjects = (referrer,) if referrer in ontology.concepts else ()
                out.append(Violation(
                    ViolationCode.V6_DANGLING_REFERENCE,
                    subjects,
                    f"edge ({edge.subject}, {edge.relation}, {edge.object}): "
                    f"concept {endpoint!r} does not exist",
                ))


def _check_reachability(ontology: Ontology, out: list[Violation]) -> None:
    # V7: every concept should hang off a facet root through child traversal.
    children: dict[ConceptId, list[ConceptId]] = {}
    queue: list[ConceptId] = []
    for concept in ontology.concepts.values():
        if concept.parent is None:
            queue.append(concept.id)
        elif concept.parent in ontology.concepts:
            children.setdefault(concept.parent, []).append(concept.id)
    reached: set[ConceptId] = set()
    while queue:
        node = queue.pop()
        if node in reached:
            continue
        reached.add(node)
        queue.extend(children.get(node, []))
    for concept_id in sorted(ontology.concepts):
        if concept_id not in reached:
            out.append(Violation(
                ViolationCode.V7_UNREACHABLE,
                (concept_id,),
                f"concept {concept_id} is not reachable from any facet root",
            ))


def validate(ontology: Ontology) -> ValidationReport:
    """Run every check; the report lists all violations, deterministically ordered."""
    violations: list[Violation] = []
    _check_facet_exclusivity(ontology, violations)
    _check_hierarchy(ontology, violations)
    _check_domain_range(ontology, violations)
    _check_order_cycles(ontology, violations)
    _check_label_collisions(ontology, violations)
    _check_dangling(ontology, violations)
    _check_reachability(ontology, violations)
    violations.sort(key=lambda v: (v.code.value, v.subjects[0] if v.subjects else "", v.message))
    return ValidationReport(ontology_name=ontology.name, violations=tuple(violations))


_CODE_EXPLANATIONS = {
    ViolationCode.V1_FACET_EXCLUSIVITY: (
        "Facets are mutually exclusive categories: a term belongs to exactly one of "
        "Processing, Structure, Property, or Performance. When the same preferred label "
        "shows up under two facets, either the two entries describe one term that must "
        "be merged, or they are genuinely different terms that need distinct labels."
    ),
    ViolationCode.V2_HIERARCHY_ERROR: (
        "Is-a hierarchies live inside a single facet and are kept shallow. A parent in "
        "another facet breaks the browse tree, and a chain deeper than the limit almost "
        "always signals corrupted parent links."
    ),
    ViolationCode.V3_DOMAIN_RANGE_MISMATCH: (
        "Each relation declares which facet its subjects and objects must come from, and "
        "an edge is only meaningful when both endpoints sit in the declared facets."
    ),
    ViolationCode.V4_ORDER_CYCLE: (
        "This relation expresses ordering, and an ordering that loops back on itself "
        "orders nothing: no step in the cycle can be first."
    ),
    ViolationCode.V5_LABEL_COLLISION: (
        "Two concepts share a label after normalization. That is legal, and common for "
        "synonyms that drift across subfields, but every indexing hit on the shared label "
        "will be flagged ambiguous, so consider renaming if the overlap is accidental."
    ),
    ViolationCode.V6_DANGLING_REFERENCE: (
        "A parent or edge endpoint names a concept that is not in the ontology. Built "
        "ontologies cannot contain these; seeing one means the object was assembled by "
        "hand or the data was corrupted."
    ),
    ViolationCode.V7_UNREACHABLE: (
        "Browsing starts at facet roots and walks child links, so a concept that no "
        "root can reach will never show up in the tree even though search still finds it."
    ),
}

_V3_DIRECTIONS = {
    "isSynthesizedBy": "the edge must run from a structure to the processing step ("
                       + RELATION_RATIONALE["isSynthesizedBy"] + ")",
    "isDependentOn": "the edge must run from a property to a performance term ("
                     + RELATION_RATIONALE["isDependentOn"] + ")",
    "isDerivedFrom": "the edge must run from a performance term to a property ("
                     + RELATION_RATIONALE["isDerivedFrom"] + ")",
    "isPrecededBy": "both endpoints must be processing steps ("
                    + RELATION_RATIONALE["isPrecededBy"] + ")",
    "isAssociatedWith": "both endpoints must be structure terms ("
                        + RELATION_RATIONALE["isAssociatedWith"] + ")",
}


def explain(violation: Violation) -> str:
    """One human-readable paragraph: what the rule is and why it exists."""
    parts = [violation.message + ".", _CODE_EXPLANATIONS[violation.code]]
    mentioned = next((n for n in RELATION_RATIONALE if n in violation.message), None)
    if violation.code is ViolationCode.V3_DOMAIN_RANGE_MISMATCH and mentioned:
        parts.append(f"For {mentioned}, {_V3_DIRECTIONS[mentioned]}.")
    elif violation.code is ViolationCode.V4_ORDER_CYCLE and mentioned:
        parts.append(f"Here, {RELATION_RATIONALE[mentioned]}.")
    return " ".join(parts)
