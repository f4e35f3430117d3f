"""Well-known RDF vocabulary IRIs used during parsing and SKOS collapse."""

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"

RDFS_LABEL = RDFS_NS + "label"
RDFS_COMMENT = RDFS_NS + "comment"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"

OWL_CLASS = OWL_NS + "Class"
OWL_THING = OWL_NS + "Thing"

SKOS_CONCEPT = SKOS_NS + "Concept"
SKOS_CONCEPT_SCHEME = SKOS_NS + "ConceptScheme"
SKOS_PREF_LABEL = SKOS_NS + "prefLabel"
SKOS_ALT_LABEL = SKOS_NS + "altLabel"
SKOS_BROADER = SKOS_NS + "broader"
SKOS_NARROWER = SKOS_NS + "narrower"
SKOS_RELATED = SKOS_NS + "related"
SKOS_SCOPE_NOTE = SKOS_NS + "scopeNote"
SKOS_DEFINITION = SKOS_NS + "definition"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_BOOLEAN = XSD_NS + "boolean"


def local_name(iri: str) -> str:
    """Fragment after '#', else the last path segment."""
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    return iri.rstrip("/").rsplit("/", 1)[-1]
