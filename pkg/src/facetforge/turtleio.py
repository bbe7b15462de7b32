"""SKOS-flavored Turtle subset: the interchange surface for vocabulary servers.

Recognized subset
-----------------
* ``@prefix`` declarations.
* Triples whose predicates are skos:prefLabel, skos:altLabel (repeatable),
  skos:broader (is-a parent), skos:definition, mat:facet, and one
  mat:<relationName> predicate per relation declared in the header.
* A header under the fixed node ``mat:ontology`` carrying mat:name,
  mat:version, and mat:relation declarations as bracketed property lists
  ``[ mat:name "..." ; mat:domainFacet mat:X ; mat:rangeFacet mat:Y ;
  mat:acyclic "true" ]``. The acyclic flag is a string literal because the
  subset excludes boolean literals.

Everything else (unknown predicates, language tags, typed/numeric/boolean
literals, collections, blank-node subjects) is warned about and skipped, so
real-world SKOS files with extra metadata still load.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DocumentSchemaError,
    DocumentSyntaxError,
    MissingFacetError,
    SourceLocation,
    UnknownFacetValueError,
)
from .iobase import (
    ParseOutcome,
    ParseWarning,
    canonical_relation_name,
    dedupe_alt_labels,
)
from .model import (
    Concept,
    Facet,
    Ontology,
    RelationEdge,
    RelationSchema,
    RelationType,
    build_ontology,
)
from .textnorm import normalize_phrase

SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
MAT_NS = "https://facetforge.dev/ns/pspp#"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

_HEADER_NODE = MAT_NS + "ontology"
_FACET_IRIS = {MAT_NS + facet.value: facet for facet in Facet}
_HEADER_LOCALS = {"name", "version", "relation", "domainFacet", "rangeFacet", "acyclic"}


# --- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class _Iri:
    value: str


@dataclass(frozen=True)
class _Literal:
    value: str
    lang: str | None = None
    datatype: str | None = None


@dataclass(frozen=True)
class _BNode:
    # (predicate IRI, object term, predicate location)
    props: tuple[tuple[str, object, SourceLocation], ...]


@dataclass(frozen=True)
class _Unsupported:
    kind: str  # "number", "boolean", "collection", "blank-node-label"


@dataclass(frozen=True)
class _Triple:
    subject: object
    predicate: str
    object: object
    location: SourceLocation  # of the predicate


# --- lexer --------------------------------------------------------------------

_PUNCT = {".", ";", ",", "[", "]", "(", ")"}

_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


@dataclass(frozen=True)
class _Tok:
    kind: str  # punct kinds use the literal char
    value: str
    location: SourceLocation


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _loc(self) -> SourceLocation:
        return SourceLocation(self.line, self.col)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def _error(self, message: str, loc: SourceLocation | None = None) -> DocumentSyntaxError:
        return DocumentSyntaxError(message, loc or self._loc())

    def tokens(self) -> list[_Tok]:
        out: list[_Tok] = []
        while True:
            tok = self._next()
            out.append(tok)
            if tok.kind == "eof":
                return out

    def _next(self) -> _Tok:
        while self.pos < len(self.text):
            ch = self._peek()
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self._peek() != "\n":
                    self._advance()
            else:
                break
        if self.pos >= len(self.text):
            return _Tok("eof", "", self._loc())

        loc = self._loc()
        ch = self._peek()

        if ch in _PUNCT:
            self._advance()
            return _Tok(ch, ch, loc)
        if ch == "<":
            return self._iriref(loc)
        if ch == '"':
            return self._string(loc)
        if ch == "'":
            raise self._error("single-quoted strings are outside the supported subset", loc)
        if ch == "@":
            return self._at_word(loc)
        if ch == "^" and self._peek(1) == "^":
            self._advance(2)
            return _Tok("^^", "^^", loc)
        if ch == "_" and self._peek(1) == ":":
            self._advance(2)
            label = self._word()
            return _Tok("blank-label", label, loc)
        if ch.isdigit() or (ch in "+-" and self._peek(1).isdigit()):
            return self._number(loc)
        if ch.isalpha():
            word = self._word()
            if self._peek() == ":":
                self._advance()
                return _Tok("pname", word + ":" + self._local_name(), loc)
            if word in ("a", "true", "false"):
                return _Tok(word, word, loc)
            raise self._error(f"unexpected bare word {word!r}", loc)
        if ch == ":":
            self._advance()
            return _Tok("pname", ":" + self._local_name(), loc)
        raise self._error(f"unexpected character {ch!r}", loc)

    def _word(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self._peek().isalnum() or self._peek() in "_-"):
            self._advance()
        return self.text[start:self.pos]

    def _local_name(self) -> str:
        # A trailing '.' belongs to the statement terminator, not the name.
        start = self.pos
        while self.pos < len(self.text) and (self._peek().isalnum() or self._peek() in "_-."):
            self._advance()
        name = self.text[start:self.pos]
        while name.endswith("."):
            name = name[:-1]
            self.pos -= 1
            self.col -= 1
        return name

    def _iriref(self, loc: SourceLocation) -> _Tok:
        self._advance()  # <
        out: list[str] = []
        while True:
            if self.pos >= len(self.text) or self._peek() in "\n<\"":
                raise self._error("unterminated IRI", loc)
            ch = self._peek()
            if ch == ">":
                self._advance()
                return _Tok("iri", "".join(out), loc)
            if ch == "\\":
                out.append(self._unicode_escape(loc))
            else:
                out.append(ch)
                self._advance()

    def _unicode_escape(self, loc: SourceLocation) -> str:
        self._advance()  # backslash
        kind = self._peek()
        if kind not in "uU":
            raise self._error("only \\u/\\U escapes are allowed in IRIs", loc)
        self._advance()
        width = 4 if kind == "u" else 8
        digits = self.text[self.pos:self.pos + width]
        if len(digits) < width or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise self._error(f"malformed \\{kind} escape", loc)
        self._advance(width)
        return chr(int(digits, 16))

    def _string(self, loc: SourceLocation) -> _Tok:
        self._advance()  # opening quote
        if self._peek() == '"' and self._peek(1) == '"':
            raise self._error("triple-quoted strings are outside the supported subset", loc)
        out: list[str] = []
        while True:
            if self.pos >= len(self.text) or self._peek() == "\n":
                raise self._error("unterminated string literal", loc)
            ch = self._peek()
            if ch == '"':
                self._advance()
                return _Tok("string", "".join(out), loc)
            if ch == "\\":
                nxt = self._peek(1)
                if nxt in _ESCAPES:
                    out.append(_ESCAPES[nxt])
                    self._advance(2)
                elif nxt in "uU":
                    out.append(self._unicode_escape(loc))
                else:
                    raise self._error(f"unknown string escape \\{nxt}", loc)
            else:
                out.append(ch)
                self._advance()

    def _at_word(self, loc: SourceLocation) -> _Tok:
        self._advance()  # @
        word = self._word()
        if word == "prefix":
            return _Tok("@prefix", word, loc)
        if word and word.isalpha() or "-" in word:
            return _Tok("langtag", word, loc)
        raise self._error(f"unexpected @{word}", loc)

    def _number(self, loc: SourceLocation) -> _Tok:
        start = self.pos
        if self._peek() in "+-":
            self._advance()
        while self.pos < len(self.text) and (self._peek().isdigit() or self._peek() in ".eE+-"):
            # Stop before a statement-terminating dot ("1 ." vs "1.5").
            if self._peek() == "." and not self._peek(1).isdigit():
                break
            self._advance()
        return _Tok("number", self.text[start:self.pos], loc)


# --- reader -------------------------------------------------------------------

class _Reader:
    """Turns the token stream into triples, resolving prefixes."""

    def __init__(self, text: str):
        self.toks = _Lexer(text).tokens()
        self.i = 0
        self.prefixes: dict[str, str] = {}
        self.triples: list[_Triple] = []
        self.warnings: list[ParseWarning] = []

    def _peek(self) -> _Tok:
        return self.toks[self.i]

    def _take(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def _expect(self, kind: str) -> _Tok:
        tok = self._take()
        if tok.kind != kind:
            raise DocumentSyntaxError(
                f"expected {kind!r}, found {tok.value or tok.kind!r}", tok.location
            )
        return tok

    def _warn(self, loc: SourceLocation, code: str, message: str) -> None:
        self.warnings.append(ParseWarning(loc.line, loc.column, code, message))

    def _resolve(self, tok: _Tok) -> str:
        prefix, _, local = tok.value.partition(":")
        if prefix not in self.prefixes:
            raise DocumentSyntaxError(f"undeclared prefix {prefix!r}", tok.location)
        return self.prefixes[prefix] + local

    def read(self) -> None:
        while True:
            tok = self._peek()
            if tok.kind == "eof":
                return
            if tok.kind == "@prefix":
                self._take()
                name = self._expect("pname")
                prefix = name.value.partition(":")[0]
                if name.value.partition(":")[2]:
                    raise DocumentSyntaxError(
                        "prefix declaration must end with a bare colon", name.location
                    )
                iri = self._expect("iri")
                self._expect(".")
                self.prefixes[prefix] = iri.value
                continue
            self._statement()

    def _statement(self) -> None:
        tok = self._peek()
        if tok.kind in ("iri", "pname"):
            subject: object = _Iri(self._resolve(tok) if tok.kind == "pname" else tok.value)
            self._take()
        elif tok.kind in ("[", "blank-label"):
            # Blank-node subjects are excluded from the subset.
            subject = _Unsupported("blank-node-subject")
            if tok.kind == "[":
                self._bnode()
            else:
                self._take()
            self._warn(tok.location, "blank-node-subject",
                       "skipped statement with a blank-node subject")
            if self._peek().kind == ".":
                self._take()
                return
        else:
            raise DocumentSyntaxError(
                f"expected a subject, found {tok.value or tok.kind!r}", tok.location
            )
        props = self._predicate_object_list()
        self._expect(".")
        if isinstance(subject, _Iri):
            for predicate, obj, loc in props:
                self.triples.append(_Triple(subject.value, predicate, obj, loc))

    def _predicate_object_list(self) -> list[tuple[str, object, SourceLocation]]:
        props: list[tuple[str, object, SourceLocation]] = []
        while True:
            tok = self._peek()
            if tok.kind == "a":
                self._take()
                predicate = RDF_TYPE
            elif tok.kind in ("iri", "pname"):
                self._take()
                predicate = self._resolve(tok) if tok.kind == "pname" else tok.value
            else:
                raise DocumentSyntaxError(
                    f"expected a predicate, found {tok.value or tok.kind!r}", tok.location
                )
            while True:
                props.append((predicate, self._object(), tok.location))
                if self._peek().kind == ",":
                    self._take()
                    continue
                break
            if self._peek().kind == ";":
                self._take()
                # Turtle allows a dangling ';' before the closing '.' or ']'.
                if self._peek().kind in (".", "]"):
                    return props
                continue
            return props

    def _object(self) -> object:
        tok = self._peek()
        if tok.kind in ("iri", "pname"):
            self._take()
            return _Iri(self._resolve(tok) if tok.kind == "pname" else tok.value)
        if tok.kind == "string":
            self._take()
            lang = None
            datatype = None
            if self._peek().kind == "langtag":
                lang = self._take().value
            elif self._peek().kind == "^^":
                self._take()
                dt = self._peek()
                if dt.kind not in ("iri", "pname"):
                    raise DocumentSyntaxError("expected datatype IRI after ^^", dt.location)
                self._take()
                datatype = self._resolve(dt) if dt.kind == "pname" else dt.value
            return _Literal(tok.value, lang=lang, datatype=datatype)
        if tok.kind == "[":
            return self._bnode()
        if tok.kind == "(":
            self._collection()
            return _Unsupported("collection")
        if tok.kind in ("true", "false"):
            self._take()
            return _Unsupported("boolean")
        if tok.kind == "number":
            self._take()
            return _Unsupported("number")
        if tok.kind == "blank-label":
            self._take()
            return _Unsupported("blank-node-label")
        raise DocumentSyntaxError(
            f"expected an object, found {tok.value or tok.kind!r}", tok.location
        )

    def _bnode(self) -> _BNode:
        self._expect("[")
        if self._peek().kind == "]":
            self._take()
            return _BNode(())
        props = self._predicate_object_list()
        self._expect("]")
        return _BNode(tuple(props))

    def _collection(self) -> None:
        self._expect("(")
        while self._peek().kind != ")":
            if self._peek().kind == "eof":
                raise DocumentSyntaxError("unterminated collection", self._peek().location)
            self._object()
        self._take()


# --- interpretation ------------------------------------------------------------

class _ConceptDraft:
    def __init__(self, concept_id: str, location: SourceLocation):
        self.id = concept_id
        self.location = location
        self.pref_label: str | None = None
        self.alt_labels: list[str] = []
        self.facet: Facet | None = None
        self.parent: str | None = None
        self.definition: str | None = None


def _local_part(iri: str) -> str:
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    return iri.rstrip("/").rsplit("/", 1)[-1]


def parse_skos_turtle(text: str) -> ParseOutcome:
    """Parse the Turtle subset into an ontology plus warnings."""
    reader = _Reader(text)
    reader.read()
    warnings = reader.warnings

    def warn(loc: SourceLocation, code: str, message: str) -> None:
        warnings.append(ParseWarning(loc.line, loc.column, code, message))

    def literal_value(triple: _Triple) -> str | None:
        """Unwrap a plain string literal; warn and skip everything else."""
        obj = triple.object
        if isinstance(obj, _Literal):
            if obj.datatype is not None:
                warn(triple.location, "typed-literal",
                     f"skipped typed literal for {_local_part(triple.predicate)}")
                return None
            if obj.lang is not None:
                warn(triple.location, "language-tag",
                     f"dropped language tag @{obj.lang}")
            return obj.value
        if isinstance(obj, _Unsupported):
            warn(triple.location, obj.kind,
                 f"skipped unsupported {obj.kind} object")
        else:
            warn(triple.location, "non-literal-object",
                 f"expected a string literal for {_local_part(triple.predicate)}")
        return None

    # Pass 1: the header fixes the name, version, and relation schema.
    name: str | None = None
    version: str | None = None
    relations: list[RelationType] = []
    saw_header = False
    for triple in reader.triples:
        if triple.subject != _HEADER_NODE:
            continue
        saw_header = True
        local = _local_part(triple.predicate)
        if triple.predicate == MAT_NS + "name":
            value = literal_value(triple)
            if value is not None and name is not None:
                warn(triple.location, "duplicate-header-value", "keeping first mat:name")
            elif value is not None:
                name = value
        elif triple.predicate == MAT_NS + "version":
            value = literal_value(triple)
            if value is not None and version is not None:
                warn(triple.location, "duplicate-header-value", "keeping first mat:version")
            elif value is not None:
                version = value
        elif triple.predicate == MAT_NS + "relation":
            if not isinstance(triple.object, _BNode):
                raise DocumentSchemaError(
                    "mat:relation expects a [ ... ] property list", triple.location
                )
            relations.append(_relation_from_bnode(triple.object, triple.location, warn))
        else:
            warn(triple.location, "unknown-predicate",
                 f"ignored predicate {local!r} on the ontology header")
    if not saw_header:
        warnings.insert(0, ParseWarning(
            1, 1, "missing-header",
            "no mat:ontology header found; name and version default to empty",
        ))

    schema = RelationSchema(tuple(relations))
    name = name or ""
    version = version or ""

    # Pass 2: concepts and edges.
    drafts: dict[str, _ConceptDraft] = {}
    edges: list[RelationEdge] = []

    def draft_for(triple: _Triple) -> _ConceptDraft:
        concept_id = _local_part(triple.subject)
        if concept_id not in drafts:
            drafts[concept_id] = _ConceptDraft(concept_id, triple.location)
        return drafts[concept_id]

    for triple in reader.triples:
        if triple.subject == _HEADER_NODE:
            continue
        predicate = triple.predicate

        if predicate == SKOS_NS + "prefLabel":
            value = literal_value(triple)
            if value is None:
                continue
            draft = draft_for(triple)
            if draft.pref_label is not None:
                warn(triple.location, "duplicate-preflabel",
                     f"concept {draft.id}: keeping first prefLabel")
            else:
                draft.pref_label = value
        elif predicate == SKOS_NS + "altLabel":
            value = literal_value(triple)
            if value is not None:
                draft_for(triple).alt_labels.append(value)
        elif predicate == SKOS_NS + "definition":
            value = literal_value(triple)
            if value is None:
                continue
            draft = draft_for(triple)
            if draft.definition is None:
                draft.definition = value
        elif predicate == SKOS_NS + "broader":
            if not isinstance(triple.object, _Iri):
                warn(triple.location, "non-iri-object", "skos:broader expects an IRI")
                continue
            draft = draft_for(triple)
            parent = _local_part(triple.object.value)
            if draft.parent is not None and draft.parent != parent:
                warn(triple.location, "multiple-broader",
                     f"concept {draft.id}: keeping first broader parent")
            else:
                draft.parent = parent
        elif predicate == MAT_NS + "facet":
            if not isinstance(triple.object, _Iri):
                raise UnknownFacetValueError(
                    "mat:facet expects one of mat:Processing, mat:Structure, "
                    "mat:Property, mat:Performance",
                    triple.location,
                )
            facet = _FACET_IRIS.get(triple.object.value)
            if facet is None:
                raise UnknownFacetValueError(
                    f"{triple.object.value!r} is not a facet value", triple.location
                )
            draft = draft_for(triple)
            if draft.facet is not None and draft.facet is not facet:
                warn(triple.location, "duplicate-facet",
                     f"concept {draft.id}: keeping first facet")
            else:
                draft.facet = facet
        elif predicate.startswith(MAT_NS):
            local = _local_part(predicate)
            relation_name, folded = canonical_relation_name(local)
            if relation_name in schema:
                if folded:
                    warn(triple.location, "relation-alias",
                         f"normalized relation {local!r} to {relation_name!r}")
                if not isinstance(triple.object, _Iri):
                    warn(triple.location, "non-iri-object",
                         f"mat:{local} expects an IRI object")
                    continue
                edges.append(RelationEdge(
                    subject=_local_part(triple.subject),
                    relation=relation_name,
                    object=_local_part(triple.object.value),
                ))
            elif local in _HEADER_LOCALS:
                warn(triple.location, "unknown-predicate",
                     f"ignored header predicate mat:{local} outside the header")
            else:
                warn(triple.location, "unknown-predicate",
                     f"ignored undeclared relation predicate mat:{local}")
        else:
            warn(triple.location, "unknown-predicate",
                 f"ignored unknown predicate <{predicate}>")

    concepts: list[Concept] = []
    for draft in drafts.values():
        has_labels = draft.pref_label is not None or draft.alt_labels
        if draft.facet is None:
            if has_labels:
                raise MissingFacetError(
                    f"concept {draft.id} has labels but no mat:facet", draft.location
                )
            # Only broader/definition scraps: not a concept declaration.
            continue
        pref_label = draft.pref_label or ""
        alt_labels, dropped = dedupe_alt_labels(pref_label, draft.alt_labels, normalize_phrase)
        for label in dropped:
            warn(draft.location, "duplicate-altlabel",
                 f"concept {draft.id}: dropped altLabel {label!r} "
                 "(duplicate after normalization)")
        concepts.append(Concept(
            id=draft.id,
            pref_label=pref_label,
            alt_labels=tuple(alt_labels),
            facet=draft.facet,
            parent=draft.parent,
            definition=draft.definition,
        ))

    ontology = build_ontology(name, version, concepts, edges, schema)
    return ParseOutcome(ontology=ontology, warnings=tuple(warnings))


def _relation_from_bnode(bnode: _BNode, loc: SourceLocation, warn) -> RelationType:
    name: str | None = None
    domain: Facet | None = None
    range_: Facet | None = None
    acyclic = False
    for predicate, obj, prop_loc in bnode.props:
        local = _local_part(predicate)
        if predicate == MAT_NS + "name" and isinstance(obj, _Literal):
            raw = obj.value
            name, folded = canonical_relation_name(raw)
            if folded:
                warn(prop_loc, "relation-alias",
                     f"normalized relation {raw!r} to {name!r}")
        elif predicate == MAT_NS + "domainFacet" and isinstance(obj, _Iri):
            domain = _FACET_IRIS.get(obj.value)
            if domain is None:
                raise UnknownFacetValueError(
                    f"{obj.value!r} is not a facet value", prop_loc
                )
        elif predicate == MAT_NS + "rangeFacet" and isinstance(obj, _Iri):
            range_ = _FACET_IRIS.get(obj.value)
            if range_ is None:
                raise UnknownFacetValueError(
                    f"{obj.value!r} is not a facet value", prop_loc
                )
        elif predicate == MAT_NS + "acyclic" and isinstance(obj, _Literal):
            if obj.value not in ("true", "false"):
                raise DocumentSchemaError(
                    'mat:acyclic must be the string "true" or "false"', prop_loc
                )
            acyclic = obj.value == "true"
        else:
            warn(prop_loc, "unknown-predicate",
                 f"ignored predicate {local!r} in a relation declaration")
    if name is None or domain is None or range_ is None:
        raise DocumentSchemaError(
            "relation declaration needs mat:name, mat:domainFacet, and mat:rangeFacet", loc
        )
    return RelationType(name, domain, range_, acyclic_required=acyclic)


# --- serialization ---------------------------------------------------------------

def _escape(value: str) -> str:
    out: list[str] = []
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def _base_iri(name: str) -> str:
    slug_chars: list[str] = []
    previous_dash = True
    for ch in name.lower():
        if ch.isascii() and ch.isalnum():
            slug_chars.append(ch)
            previous_dash = False
        elif not previous_dash:
            slug_chars.append("-")
            previous_dash = True
    slug = "".join(slug_chars).strip("-") or "ontology"
    return f"https://facetforge.dev/ontologies/{slug}#"


def serialize_skos_turtle(ontology: Ontology) -> str:
    """Deterministic Turtle output; re-parsing yields an equal ontology."""
    lines = [
        f"@prefix skos: <{SKOS_NS}> .",
        f"@prefix mat: <{MAT_NS}> .",
        f"@prefix ex: <{_base_iri(ontology.name)}> .",
        "",
    ]

    header = [f'mat:name "{_escape(ontology.name)}"',
              f'mat:version "{_escape(ontology.version)}"']
    for relation in ontology.schema:  # stored sorted by name
        flag = "true" if relation.acyclic_required else "false"
        header.append(
            f'mat:relation [ mat:name "{relation.name}" ; '
            f"mat:domainFacet mat:{relation.domain_facet.value} ; "
            f"mat:rangeFacet mat:{relation.range_facet.value} ; "
            f'mat:acyclic "{flag}" ]'
        )
    lines.append("mat:ontology " + " ;\n    ".join(header) + " .")

    for concept in sorted(ontology.concepts.values(), key=lambda c: c.id):
        parts = [f"mat:facet mat:{concept.facet.value}",
                 f'skos:prefLabel "{_escape(concept.pref_label)}"']
        parts.extend(f'skos:altLabel "{_escape(label)}"' for label in concept.alt_labels)
        if concept.parent is not None:
            parts.append(f"skos:broader ex:{concept.parent}")
        if concept.definition is not None:
            parts.append(f'skos:definition "{_escape(concept.definition)}"')
        lines.append("")
        lines.append(f"ex:{concept.id} " + " ;\n    ".join(parts) + " .")

    if ontology.edges:
        lines.append("")
        for edge in ontology.edges:  # stored in canonical order
            lines.append(f"ex:{edge.subject} mat:{edge.relation} ex:{edge.object} .")

    return "\n".join(lines) + "\n"
