import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import {
  escapeHtml,
  fontSizeFor,
  renderConceptPanel,
  renderPicker,
  renderSearchResults,
  renderTermList,
  renderTreeList,
  renderTreeNode,
  WEIGHT_FONT_SIZES,
} from '../src/render.js';
import { ConceptDto, IndexPayload } from '../src/types.js';

function fixture<T = IndexPayload>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, 'utf8'));
}

function urisInOrder(html: string): string[] {
  return [...html.matchAll(/data-uri="([^"]*)"/g)].map((m) => m[1]);
}

describe('term list rendering', () => {
  it('renders hits in exactly the response order', () => {
    const payload = fixture('index-score.json');
    const html = renderTermList(payload.arranged);
    const expected = payload.arranged.groups!.flatMap((g) => g.hits.map((h) => h.uri));
    expect(urisInOrder(html)).toEqual(expected);
    // and that order is the raw hits_by_ontology order of the POST response
    expect(expected).toEqual(
      Object.values(payload.hits_by_ontology).flat().map((h) => h.uri),
    );
  });

  it('renders the merged arrangement as one flat list with badges', () => {
    const payload = fixture('index-merged.json');
    const html = renderTermList(payload.arranged);
    expect(urisInOrder(html)).toEqual(payload.arranged.hits!.map((h) => h.uri));
    expect(html).toContain('class="badge"');
    expect(html.match(/<section/g)).toBeNull();
  });

  it('font size grows strictly with display weight', () => {
    for (let w = 2; w <= 5; w++) {
      expect(fontSizeFor(w)).toBeGreaterThan(fontSizeFor(w - 1));
    }
    expect(Object.keys(WEIGHT_FONT_SIZES).sort()).toEqual(['1', '2', '3', '4', '5']);
    // out-of-range weights fall back to the smallest size, never explode
    expect(fontSizeFor(99)).toBe(fontSizeFor(1));
  });

  it('weight classes and inline sizes appear on the buttons', () => {
    const payload = fixture('index-score.json');
    const html = renderTermList(payload.arranged);
    const topSize = fontSizeFor(5).toFixed(2);
    expect(html).toContain(`class="term w5" style="font-size:${topSize}rem"`);
  });
});

const concept: ConceptDto = {
  uri: 'http://x/c1',
  pref_label: 'Zeolite <& "friends">',
  ontology_id: 'demo',
  alt_labels: ['Molecular sieve'],
  notes: [],
  broader: ['http://x/parent'],
  narrower: [],
  related: [],
};

describe('concept panel', () => {
  it('shows all seven attributes and a copy button per format', () => {
    const html = renderConceptPanel(concept);
    for (const label of ['URI', 'Ontology', 'Alternate labels', 'Notes', 'Broader', 'Narrower', 'Related']) {
      expect(html).toContain(`<dt>${label}</dt>`);
    }
    for (const format of ['json-ld', 'skos-rdf-xml', 'dc-xml', 'plain-xml']) {
      expect(html).toContain(`data-format="${format}"`);
    }
    expect(html).toContain('Molecular sieve');
  });

  it('escapes markup in labels', () => {
    const html = renderConceptPanel(concept);
    expect(html).not.toContain('<& "friends">');
    expect(html).toContain('Zeolite &lt;&amp; &quot;friends&quot;&gt;');
  });
});

describe('tree nodes', () => {
  it('gives leaves a dot and parents an expand toggle', () => {
    const leaf = renderTreeNode({ ...concept, narrower: [] });
    expect(leaf).toContain('class="leaf"');
    expect(leaf).not.toContain('class="toggle"');

    const parent = renderTreeNode({ ...concept, narrower: ['http://x/kid'] });
    expect(parent).toContain('class="toggle"');
    expect(parent).toContain('aria-expanded="false"');
  });
});

describe('rendering captured service responses', () => {
  it('search results keep group and concept order with totals', () => {
    const payload = fixture<import('../src/types.js').SearchPayload>('search.json');
    const html = renderSearchResults(payload);
    const headings = [...html.matchAll(/<h3>([^<]+) /g)].map((m) => m[1]);
    expect(headings).toEqual(payload.groups.map((g) => g.ontology_id));
    expect(urisInOrder(html)).toEqual(
      payload.groups.flatMap((g) => g.concepts.map((c) => c.uri)),
    );
  });

  it('roots render with expand toggles when they have children', () => {
    const payload = fixture<import('../src/types.js').RootsPayload>('roots.json');
    const html = `<ul class="tree">${renderTreeList(payload.roots)}</ul>`;
    expect(urisInOrder(html).length).toBeGreaterThan(0);
    const withKids = payload.roots.filter((c) => c.narrower.length > 0);
    expect(html.match(/class="toggle"/g)?.length ?? 0).toBe(withKids.length);
  });

  it('children lists preserve the server page order', () => {
    const payload = fixture<import('../src/types.js').ChildrenPayload>('children.json');
    const html = renderTreeList(payload.children);
    const links = [...html.matchAll(/class="concept-link"[^>]*data-uri="([^"]*)"/g)].map(
      (m) => m[1],
    );
    expect(links).toEqual(payload.children.map((c) => c.uri));
  });

  it('the concept panel shows a captured concept faithfully', () => {
    const concept = fixture<ConceptDto>('concept.json');
    const html = renderConceptPanel(concept);
    expect(html).toContain(concept.pref_label);
    for (const alt of concept.alt_labels) expect(html).toContain(alt);
    for (const broader of concept.broader) expect(html).toContain(broader);
  });

  it('the picker lists every ontology with its concept count', () => {
    const payload = fixture<import('../src/types.js').OntologiesPayload>('ontologies.json');
    const html = renderPicker(payload.ontologies, [payload.ontologies[0].id]);
    for (const record of payload.ontologies) {
      expect(html).toContain(`value="${record.id}"`);
      expect(html).toContain(`<small>${record.concept_count}</small>`);
    }
    expect(html.match(/checked/g)?.length).toBe(1);
    expect(html).toContain('id="select-all"');
  });
});

describe('escapeHtml', () => {
  it('neutralizes the five specials and nothing else', () => {
    expect(escapeHtml(`<a href="x">'&'</a>`)).toBe(
      '&lt;a href=&quot;x&quot;&gt;&#39;&amp;&#39;&lt;/a&gt;',
    );
    expect(escapeHtml('plain text 123')).toBe('plain text 123');
  });
});
