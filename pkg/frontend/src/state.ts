// Session state: which ontologies are picked and which tab is open. That is
// the only client-side state that outlives a render, and it lives in
// sessionStorage so a reload within the tab keeps the curator's selection.

export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

const SELECTION_KEY = 'hive.selection';
const TAB_KEY = 'hive.tab';

function defaultStorage(): KeyValueStore {
  try {
    // touching sessionStorage can itself throw in sandboxed frames
    window.sessionStorage.getItem(SELECTION_KEY);
    return window.sessionStorage;
  } catch {
    const bag = new Map<string, string>();
    return {
      getItem: (k) => bag.get(k) ?? null,
      setItem: (k, v) => void bag.set(k, v),
    };
  }
}

export class SessionState {
  private storage: KeyValueStore;

  constructor(storage?: KeyValueStore) {
    this.storage = storage ?? defaultStorage();
  }

  selection(): string[] {
    try {
      const raw = this.storage.getItem(SELECTION_KEY);
      if (!raw) return [];
      const parsed = JSON.parse(raw);
      if (!Array.isArray(parsed)) return [];
      return parsed.filter((x): x is string => typeof x === 'string');
    } catch {
      return [];
    }
  }

  setSelection(ids: string[]): void {
    try {
      this.storage.setItem(SELECTION_KEY, JSON.stringify(ids));
    } catch {
      // storage full or gone; the in-memory checkbox state still rules
    }
  }

  /** Drop ids that no longer exist on the server (deleted ontologies). */
  prune(validIds: string[]): string[] {
    const valid = new Set(validIds);
    const kept = this.selection().filter((id) => valid.has(id));
    this.setSelection(kept);
    return kept;
  }

  tab(): string {
    try {
      return this.storage.getItem(TAB_KEY) || 'navigate';
    } catch {
      return 'navigate';
    }
  }

  setTab(name: string): void {
    try {
      this.storage.setItem(TAB_KEY, name);
    } catch {
      // fine, tab just will not survive a reload
    }
  }
}

/** Select-all toggle: everything unless everything is already selected. */
export function toggleAll(allIds: string[], selected: string[]): string[] {
  const every = allIds.length > 0 && allIds.every((id) => selected.includes(id));
  return every ? [] : allIds.slice();
}

/**
 * The index form submits only when some ontology is picked, exactly one
 * source is filled in, and no indexing request is already running.
 */
export function canSubmitIndex(
  selected: string[],
  text: string,
  url: string,
  inFlight: boolean,
): boolean {
  if (inFlight || selected.length === 0) return false;
  const hasText = text.trim().length > 0;
  const hasUrl = url.trim().length > 0;
  return hasText !== hasUrl;
}

export function canSearch(selected: string[], query: string): boolean {
  return selected.length > 0 && query.trim().length > 0;
}
