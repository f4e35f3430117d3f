// Shapes of the service's JSON payloads. Field names mirror the API exactly;
// nothing here is recomputed client-side.

export interface ConceptDto {
  uri: string;
  pref_label: string;
  ontology_id: string;
  alt_labels: string[];
  notes: string[];
  broader: string[];
  narrower: string[];
  related: string[];
}

export interface OntologyRecordDto {
  id: string;
  display_name: string;
  source_format: string;
  concept_count: number;
  root_uris: string[];
}

export interface OntologiesPayload {
  version: number;
  ontologies: OntologyRecordDto[];
}

export interface RootsPayload {
  ontology_id: string;
  roots: ConceptDto[];
}

export interface ChildrenPayload {
  ontology_id: string;
  uri: string;
  total: number;
  offset: number;
  limit: number;
  children: ConceptDto[];
}

export interface SearchGroup {
  ontology_id: string;
  total: number;
  concepts: ConceptDto[];
}

export interface SearchPayload {
  query: string;
  offset: number;
  limit: number;
  groups: SearchGroup[];
}

export interface TermHitDto {
  ontology_id: string;
  uri: string;
  pref_label: string;
  matched_phrase: string;
  score: number;
  rank: number;
  display_weight: number;
}

export interface ExtractionConfigDto {
  algorithm: string;
  max_phrase_len: number;
  top_k: number;
  stopword_list_id: string;
}

export interface ArrangedGroup {
  ontology_id: string;
  hits: TermHitDto[];
}

/** "merged" carries a flat hit list; the other three modes carry groups. */
export interface Arranged {
  mode: string;
  groups?: ArrangedGroup[];
  hits?: TermHitDto[];
}

export interface IndexPayload {
  source: { kind: string; locator: string; char_count: number; encoding: string | null };
  config: ExtractionConfigDto;
  hits_by_ontology: Record<string, TermHitDto[]>;
  candidates_total: number;
  elapsed_ms: number;
  arranged: Arranged;
}

export interface IndexRequestBody {
  text?: string;
  url?: string;
  ontologies: string[];
  algorithm?: string;
  max_phrase_len?: number;
  top_k?: number;
  sort?: string;
}
