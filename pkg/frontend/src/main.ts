// Wiring: tabs, ontology picker, tree navigation, search, and the indexing
// view. All data comes from the service; this file only moves it into the DOM.

import {
  ApiError,
  fetchChildren,
  fetchConcept,
  fetchEncoding,
  fetchOntologies,
  fetchRoots,
  indexDocument,
  searchConcepts,
} from './api.js';
import { arrangeHits, polarityFor, SORT_MODES, SortMode } from './arrange.js';
import {
  renderConceptPanel,
  renderPicker,
  renderSearchResults,
  renderTermList,
  renderTreeList,
} from './render.js';
import { canSearch, canSubmitIndex, SessionState, toggleAll } from './state.js';
import { IndexPayload, OntologyRecordDto } from './types.js';

const state = new SessionState();
let records: OntologyRecordDto[] = [];
let selected: string[] = [];
let lastIndex: IndexPayload | null = null;
let indexInFlight = false;

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function status(message: string, isError = false): void {
  const bar = $('status');
  bar.textContent = message;
  bar.classList.toggle('error', isError);
  if (message) {
    window.setTimeout(() => {
      if (bar.textContent === message) bar.textContent = '';
    }, 4000);
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  return String(err);
}

// --- tabs ---------------------------------------------------------------

function showTab(name: string): void {
  state.setTab(name);
  document.querySelectorAll<HTMLElement>('.tab-panel').forEach((panel) => {
    panel.hidden = panel.id !== `tab-${name}`;
  });
  document.querySelectorAll<HTMLButtonElement>('#tabs button').forEach((btn) => {
    btn.classList.toggle('active', btn.dataset.tab === name);
  });
}

// --- ontology picker ----------------------------------------------------

function refreshControls(): void {
  const searchBtn = $('search-btn') as HTMLButtonElement;
  searchBtn.disabled = !canSearch(selected, (
    $('search-q') as HTMLInputElement
  ).value);
  const submit = $('index-submit') as HTMLButtonElement;
  submit.disabled = !canSubmitIndex(
    selected,
    ($('doc-text') as HTMLTextAreaElement).value,
    ($('doc-url') as HTMLInputElement).value,
    indexInFlight,
  );
  const navSelect = $('nav-ont') as HTMLSelectElement;
  const current = navSelect.value;
  navSelect.innerHTML = records
    .map((r) => `<option value="${r.id}">${r.display_name}</option>`)
    .join('');
  if (records.some((r) => r.id === current)) navSelect.value = current;
}

function paintPicker(): void {
  $('picker').innerHTML = renderPicker(records, selected);
  refreshControls();
}

async function loadOntologies(): Promise<void> {
  const payload = await fetchOntologies();
  records = payload.ontologies;
  selected = state.prune(records.map((r) => r.id));
  paintPicker();
}

// --- navigate tab -------------------------------------------------------

async function loadTree(): Promise<void> {
  const ontologyId = ($('nav-ont') as HTMLSelectElement).value;
  if (!ontologyId) return;
  try {
    const payload = await fetchRoots(ontologyId);
    $('tree').innerHTML = `<ul class="tree">${renderTreeList(payload.roots)}</ul>`;
  } catch (err) {
    status(describe(err), true);
  }
}

async function expandNode(toggle: HTMLButtonElement): Promise<void> {
  const node = toggle.closest('li.node') as HTMLElement;
  const kids = node.querySelector(':scope > ul.kids') as HTMLElement;
  const expanded = toggle.getAttribute('aria-expanded') === 'true';
  if (expanded) {
    kids.hidden = true;
    toggle.setAttribute('aria-expanded', 'false');
    toggle.innerHTML = '&#9656;';
    return;
  }
  if (!node.dataset.loaded) {
    const payload = await fetchChildren(toggle.dataset.ont!, toggle.dataset.uri!);
    kids.innerHTML = renderTreeList(payload.children);
    node.dataset.loaded = '1';
  }
  kids.hidden = false;
  toggle.setAttribute('aria-expanded', 'true');
  toggle.innerHTML = '&#9662;';
}

async function showConcept(ontologyId: string, uri: string): Promise<void> {
  try {
    const concept = await fetchConcept(ontologyId, uri);
    const panel = $('concept-panel');
    panel.innerHTML = renderConceptPanel(concept);
    panel.hidden = false;
  } catch (err) {
    status(describe(err), true);
  }
}

async function copyEncoding(btn: HTMLButtonElement): Promise<void> {
  try {
    const body = await fetchEncoding(btn.dataset.ont!, btn.dataset.uri!, btn.dataset.format!);
    const preview = document.querySelector<HTMLPreElement>('.encoding-preview');
    if (preview) {
      preview.textContent = body;
      preview.hidden = false;
    }
    await navigator.clipboard.writeText(body);
    status(`copied ${btn.dataset.format}`);
  } catch (err) {
    status(describe(err), true);
  }
}

// --- search tab ---------------------------------------------------------

async function runSearch(): Promise<void> {
  const query = ($('search-q') as HTMLInputElement).value;
  if (!canSearch(selected, query)) return;
  try {
    const payload = await searchConcepts(query, selected);
    $('search-results').innerHTML = renderSearchResults(payload);
  } catch (err) {
    status(describe(err), true);
  }
}

// --- index tab ----------------------------------------------------------

function currentSort(): SortMode {
  const value = ($('sort-mode') as HTMLSelectElement).value;
  return (SORT_MODES as readonly string[]).includes(value) ? (value as SortMode) : 'score';
}

function paintHits(): void {
  if (!lastIndex) return;
  const arranged = arrangeHits(
    lastIndex.hits_by_ontology,
    currentSort(),
    polarityFor(lastIndex.config.algorithm),
  );
  $('index-results').innerHTML = renderTermList(arranged);
  $('index-meta').textContent =
    `${lastIndex.candidates_total} candidate phrases ` +
    `(${lastIndex.config.algorithm}, ${Math.round(lastIndex.elapsed_ms)} ms)`;
}

async function runIndex(): Promise<void> {
  const text = ($('doc-text') as HTMLTextAreaElement).value;
  const url = ($('doc-url') as HTMLInputElement).value;
  if (!canSubmitIndex(selected, text, url, indexInFlight)) return;
  indexInFlight = true;
  refreshControls();
  try {
    const body = {
      ontologies: selected.slice(),
      algorithm: ($('algorithm') as HTMLSelectElement).value,
      max_phrase_len: Number(($('max-len') as HTMLInputElement).value) || 3,
      top_k: Number(($('top-k') as HTMLInputElement).value) || 30,
      sort: currentSort(),
      ...(url.trim() ? { url: url.trim() } : { text }),
    };
    lastIndex = await indexDocument(body);
    // first paint comes straight from the response; later sort switches
    // re-arrange the same hits client-side
    $('index-results').innerHTML = renderTermList(lastIndex.arranged);
    $('index-meta').textContent =
      `${lastIndex.candidates_total} candidate phrases ` +
      `(${lastIndex.config.algorithm}, ${Math.round(lastIndex.elapsed_ms)} ms)`;
  } catch (err) {
    status(describe(err), true);
  } finally {
    indexInFlight = false;
    refreshControls();
  }
}

function readFileIntoText(input: HTMLInputElement): void {
  const file = input.files && input.files[0];
  if (!file) return;
  const reader = new FileReader();
  reader.onload = () => {
    ($('doc-text') as HTMLTextAreaElement).value = String(reader.result ?? '');
    ($('doc-url') as HTMLInputElement).value = '';
    refreshControls();
  };
  reader.onerror = () => status(`could not read ${file.name}`, true);
  reader.readAsText(file);
}

// --- boot ---------------------------------------------------------------

function wire(): void {
  $('tabs').addEventListener('click', (event) => {
    const btn = (event.target as HTMLElement).closest<HTMLButtonElement>('button[data-tab]');
    if (btn) showTab(btn.dataset.tab!);
  });

  $('picker').addEventListener('change', (event) => {
    const box = event.target as HTMLInputElement;
    if (!box.classList.contains('ont-check')) return;
    selected = box.checked
      ? [...selected, box.value]
      : selected.filter((id) => id !== box.value);
    state.setSelection(selected);
    refreshControls();
  });
  $('picker').addEventListener('click', (event) => {
    if ((event.target as HTMLElement).id !== 'select-all') return;
    selected = toggleAll(records.map((r) => r.id), selected);
    state.setSelection(selected);
    paintPicker();
  });

  $('nav-ont').addEventListener('change', loadTree);
  $('tree').addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const toggle = target.closest<HTMLButtonElement>('button.toggle');
    if (toggle) {
      expandNode(toggle).catch((err) => status(describe(err), true));
      return;
    }
  });

  // concept links appear in the tree, search results, and the term list
  document.body.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const link = target.closest<HTMLButtonElement>('button.concept-link, button.term');
    if (link) {
      showConcept(link.dataset.ont!, link.dataset.uri!);
      return;
    }
    const copy = target.closest<HTMLButtonElement>('button.copy-encoding');
    if (copy) copyEncoding(copy);
  });

  $('search-q').addEventListener('input', refreshControls);
  $('search-q').addEventListener('keydown', (event) => {
    if ((event as KeyboardEvent).key === 'Enter') runSearch();
  });
  $('search-btn').addEventListener('click', runSearch);

  $('doc-text').addEventListener('input', refreshControls);
  $('doc-url').addEventListener('input', refreshControls);
  $('doc-file').addEventListener('change', (event) =>
    readFileIntoText(event.target as HTMLInputElement),
  );
  $('index-submit').addEventListener('click', runIndex);
  $('sort-mode').addEventListener('change', paintHits);
}

async function boot(): Promise<void> {
  wire();
  showTab(state.tab());
  try {
    await loadOntologies();
    await loadTree();
  } catch (err) {
    status(describe(err), true);
  }
}

boot();
