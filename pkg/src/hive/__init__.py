"""Multi-ontology SKOS terminology engine.

Ingests OWL/SKOS/RDF vocabularies into a uniform concept model, serves
hierarchy navigation and search, extracts keywords from documents, and
indexes those keywords against ontology preferred labels.
"""

__version__ = "1.0.0"
