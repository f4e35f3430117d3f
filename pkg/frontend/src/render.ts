// HTML string builders. Kept free of fetch and DOM state so tests can assert
// on structure and ordering directly.

import { Arranged, ConceptDto, OntologyRecordDto, SearchPayload, TermHitDto } from './types.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;');
}

/**
 * Font size per display_weight bucket (rem). Strictly increasing with the
 * weight: the heaviest terms read first.
 */
export const WEIGHT_FONT_SIZES: Record<number, number> = {
  1: 0.82,
  2: 0.95,
  3: 1.08,
  4: 1.25,
  5: 1.45,
};

export function fontSizeFor(weight: number): number {
  return WEIGHT_FONT_SIZES[weight] ?? WEIGHT_FONT_SIZES[1];
}

export const ENCODING_FORMATS = ['json-ld', 'skos-rdf-xml', 'dc-xml', 'plain-xml'];

function termButton(hit: TermHitDto, withBadge: boolean): string {
  const size = fontSizeFor(hit.display_weight).toFixed(2);
  const badge = withBadge
    ? `<span class="badge">${escapeHtml(hit.ontology_id)}</span> `
    : '';
  return (
    `<li>${badge}<button class="term w${hit.display_weight}"` +
    ` style="font-size:${size}rem"` +
    ` data-ont="${escapeHtml(hit.ontology_id)}" data-uri="${escapeHtml(hit.uri)}"` +
    ` title="score ${hit.score} rank ${hit.rank}">${escapeHtml(hit.pref_label)}</button></li>`
  );
}

/**
 * Weighted term list for one arrangement, in exactly the order given.
 * Grouped modes render one section per ontology; merged renders a flat list.
 */
export function renderTermList(arranged: Arranged): string {
  if (arranged.hits) {
    const items = arranged.hits.map((h) => termButton(h, true)).join('');
    return `<ul class="term-list merged">${items}</ul>`;
  }
  const sections = (arranged.groups ?? []).map((group) => {
    const items = group.hits.map((h) => termButton(h, false)).join('');
    const body = items
      ? `<ul class="term-list">${items}</ul>`
      : '<p class="empty">no hits</p>';
    return (
      `<section class="hit-group"><h3>${escapeHtml(group.ontology_id)}` +
      ` <small>${group.hits.length}</small></h3>${body}</section>`
    );
  });
  return sections.join('');
}

function linkList(ontologyId: string, uris: string[]): string {
  if (!uris.length) return '<span class="empty">none</span>';
  const items = uris.map(
    (uri) =>
      `<li><button class="concept-link" data-ont="${escapeHtml(ontologyId)}"` +
      ` data-uri="${escapeHtml(uri)}">${escapeHtml(uri)}</button></li>`,
  );
  return `<ul class="uri-list">${items.join('')}</ul>`;
}

function textList(values: string[]): string {
  if (!values.length) return '<span class="empty">none</span>';
  return `<ul>${values.map((v) => `<li>${escapeHtml(v)}</li>`).join('')}</ul>`;
}

/** Full concept card: the seven attributes plus one copy button per format. */
export function renderConceptPanel(concept: ConceptDto): string {
  const copies = ENCODING_FORMATS.map(
    (format) =>
      `<button class="copy-encoding" data-ont="${escapeHtml(concept.ontology_id)}"` +
      ` data-uri="${escapeHtml(concept.uri)}" data-format="${format}">copy ${format}</button>`,
  ).join(' ');
  return `
    <h2>${escapeHtml(concept.pref_label)}</h2>
    <dl>
      <dt>URI</dt><dd class="uri">${escapeHtml(concept.uri)}</dd>
      <dt>Ontology</dt><dd>${escapeHtml(concept.ontology_id)}</dd>
      <dt>Alternate labels</dt><dd>${textList(concept.alt_labels)}</dd>
      <dt>Notes</dt><dd>${textList(concept.notes)}</dd>
      <dt>Broader</dt><dd>${linkList(concept.ontology_id, concept.broader)}</dd>
      <dt>Narrower</dt><dd>${linkList(concept.ontology_id, concept.narrower)}</dd>
      <dt>Related</dt><dd>${textList(concept.related)}</dd>
    </dl>
    <div class="copy-row">${copies}</div>
    <pre class="encoding-preview" hidden></pre>`;
}

/**
 * One tree entry. Nodes with narrower concepts get an expand toggle; leaves
 * get a dot. Children load lazily into the nested list on first expand.
 */
export function renderTreeNode(concept: ConceptDto): string {
  const leaf = concept.narrower.length === 0;
  const toggle = leaf
    ? '<span class="leaf">&bull;</span>'
    : `<button class="toggle" data-ont="${escapeHtml(concept.ontology_id)}"` +
      ` data-uri="${escapeHtml(concept.uri)}" aria-expanded="false">&#9656;</button>`;
  return (
    `<li class="node" data-uri="${escapeHtml(concept.uri)}">${toggle}` +
    `<button class="concept-link" data-ont="${escapeHtml(concept.ontology_id)}"` +
    ` data-uri="${escapeHtml(concept.uri)}">${escapeHtml(concept.pref_label)}</button>` +
    `<ul class="kids" hidden></ul></li>`
  );
}

export function renderTreeList(concepts: ConceptDto[]): string {
  return concepts.map(renderTreeNode).join('');
}

export function renderSearchResults(payload: SearchPayload): string {
  if (!payload.groups.length) {
    return `<p class="empty">no matches for &quot;${escapeHtml(payload.query)}&quot;</p>`;
  }
  return payload.groups
    .map((group) => {
      const items = group.concepts
        .map(
          (c) =>
            `<li><button class="concept-link" data-ont="${escapeHtml(group.ontology_id)}"` +
            ` data-uri="${escapeHtml(c.uri)}">${escapeHtml(c.pref_label)}</button>` +
            ` <span class="uri">${escapeHtml(c.uri)}</span></li>`,
        )
        .join('');
      return (
        `<section class="hit-group"><h3>${escapeHtml(group.ontology_id)}` +
        ` <small>${group.total}</small></h3><ul>${items}</ul></section>`
      );
    })
    .join('');
}

export function renderPicker(records: OntologyRecordDto[], selected: string[]): string {
  if (!records.length) return '<p class="empty">no ontologies loaded</p>';
  const chosen = new Set(selected);
  const rows = records
    .map(
      (r) =>
        `<label><input type="checkbox" class="ont-check" value="${escapeHtml(r.id)}"` +
        `${chosen.has(r.id) ? ' checked' : ''}> ${escapeHtml(r.display_name)}` +
        ` <small>${r.concept_count}</small></label>`,
    )
    .join('');
  return `${rows}<button id="select-all">all / none</button>`;
}
