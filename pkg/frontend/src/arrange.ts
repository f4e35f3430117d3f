// Client-side re-application of the service's four display arrangements.
// Switching the sort selector must not re-run indexing, so the orderings the
// server defines are replayed here over the hit lists it already returned.
// No scores are recomputed; this only permutes.

import { Arranged, TermHitDto } from './types.js';

export const SORT_MODES = ['score', 'alpha', 'ontology-size', 'merged'] as const;
export type SortMode = (typeof SORT_MODES)[number];

export type ScorePolarity = 'ascending' | 'descending';

/** rake ranks high scores first; yake low. Mirrors the extractor contract. */
export function polarityFor(algorithm: string): ScorePolarity {
  return algorithm === 'yake' ? 'ascending' : 'descending';
}

function cmpStr(a: string, b: string): number {
  // code-unit comparison, deliberately not locale-aware: the service sorts
  // by plain string ordering and the two must agree
  return a < b ? -1 : a > b ? 1 : 0;
}

export function arrangeHits(
  groups: Record<string, TermHitDto[]>,
  mode: SortMode,
  polarity: ScorePolarity,
): Arranged {
  if (mode === 'merged') {
    const sign = polarity === 'ascending' ? 1 : -1;
    const merged = Object.values(groups)
      .flat()
      .slice()
      .sort(
        (a, b) =>
          sign * a.score - sign * b.score ||
          a.rank - b.rank ||
          cmpStr(a.ontology_id, b.ontology_id),
      );
    return { mode, hits: merged };
  }

  let order = Object.keys(groups);
  if (mode === 'ontology-size') {
    order = order.slice().sort(
      (a, b) => groups[b].length - groups[a].length || cmpStr(a, b),
    );
  }
  return {
    mode,
    groups: order.map((ontologyId) => {
      let hits = groups[ontologyId];
      if (mode === 'alpha') {
        hits = hits.slice().sort(
          (a, b) =>
            cmpStr(a.pref_label.toLowerCase(), b.pref_label.toLowerCase()) ||
            cmpStr(a.uri, b.uri),
        );
      }
      return { ontology_id: ontologyId, hits };
    }),
  };
}

/** Every hit in an arrangement, however it is grouped. */
export function arrangedHits(arranged: Arranged): TermHitDto[] {
  if (arranged.hits) return arranged.hits;
  return (arranged.groups ?? []).flatMap((g) => g.hits);
}
