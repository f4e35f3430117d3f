// Thin fetch wrapper over the service. The UI is served under /ui, so every
// path here is absolute to reach the API at the origin root.

import {
  ChildrenPayload,
  ConceptDto,
  IndexPayload,
  IndexRequestBody,
  OntologiesPayload,
  RootsPayload,
  SearchPayload,
} from './types.js';

export class ApiError extends Error {
  code: string;
  status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

async function raise(response: Response): Promise<never> {
  let code = 'internal';
  let message = response.statusText || `HTTP ${response.status}`;
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code || code;
      message = body.error.message || message;
    }
  } catch {
    // non-JSON error body, keep the status text
  }
  throw new ApiError(response.status, code, message);
}

async function getJson<T>(path: string): Promise<T> {
  const response = await fetch(path);
  if (!response.ok) await raise(response);
  return response.json() as Promise<T>;
}

export function fetchOntologies(): Promise<OntologiesPayload> {
  return getJson('/ontologies');
}

export function fetchRoots(ontologyId: string): Promise<RootsPayload> {
  return getJson(`/ontologies/${encodeURIComponent(ontologyId)}/roots`);
}

export function fetchChildren(
  ontologyId: string,
  uri: string,
  offset = 0,
): Promise<ChildrenPayload> {
  const q = new URLSearchParams({ uri, offset: String(offset) });
  return getJson(`/ontologies/${encodeURIComponent(ontologyId)}/children?${q}`);
}

export function fetchConcept(ontologyId: string, uri: string): Promise<ConceptDto> {
  const q = new URLSearchParams({ uri });
  return getJson(`/ontologies/${encodeURIComponent(ontologyId)}/concept?${q}`);
}

export function searchConcepts(query: string, ontologyIds: string[]): Promise<SearchPayload> {
  const q = new URLSearchParams({ q: query, onts: ontologyIds.join(',') });
  return getJson(`/search?${q}`);
}

export async function indexDocument(body: IndexRequestBody): Promise<IndexPayload> {
  const response = await fetch('/index', {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  });
  if (!response.ok) await raise(response);
  return response.json() as Promise<IndexPayload>;
}

/**
 * Raw encoding body for the copy buttons. Returned verbatim: what lands on
 * the clipboard must byte-match what the endpoint sent.
 */
export async function fetchEncoding(
  ontologyId: string,
  uri: string,
  format: string,
): Promise<string> {
  const q = new URLSearchParams({ ont: ontologyId, uri, format });
  const response = await fetch(`/concept/encoding?${q}`);
  if (!response.ok) await raise(response);
  return response.text();
}
