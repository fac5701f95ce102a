/**
 * Session state: one annotator working through one task bundle.
 *
 * Drafts live in browser storage keyed by (task_id, annotator_id) so a
 * session survives page reloads; agreement between annotators is
 * computed offline by the evaluation CLI, never here.
 */

import {
  AnnotationRecord,
  ErrorTag,
  ValidationError,
  isValidSqm,
  toJsonl,
  validateErrorTag,
  parseJsonl,
} from "./schema.js";

export interface TaskItem {
  segment_id: string | number;
  source_text: string;
  reference_text: string;
  hypothesis_text: string;
}

export interface TaskBundle {
  task_id: string;
  direction: string;
  system_id: string;
  items: TaskItem[];
}

export interface SegmentDraft {
  sqm: number | null;
  errors: ErrorTag[];
}

export interface SessionState {
  annotatorId: string;
  bundle: TaskBundle;
  drafts: Record<string, SegmentDraft>; // keyed by String(segment_id)
}

export class BundleError extends Error {}

export class IncompleteExport extends Error {
  constructor(public readonly missing: (string | number)[]) {
    super(`segments without an SQM rating: ${missing.join(", ")}`);
  }
}

const TEXT_FIELDS = ["source_text", "reference_text", "hypothesis_text"] as const;

/** Validate an uploaded bundle; messages name the field and item index. */
export function parseTaskBundle(data: unknown): TaskBundle {
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new BundleError("bundle must be a JSON object");
  }
  const obj = data as Record<string, unknown>;
  for (const field of ["task_id", "direction", "system_id"] as const) {
    if (typeof obj[field] !== "string" || obj[field] === "") {
      throw new BundleError(`field "${field}" must be a non-empty string`);
    }
  }
  if (!Array.isArray(obj.items) || obj.items.length === 0) {
    throw new BundleError('field "items" must be a non-empty array');
  }
  const seen = new Set<string>();
  const items: TaskItem[] = obj.items.map((raw, index) => {
    if (typeof raw !== "object" || raw === null) {
      throw new BundleError(`item ${index}: not an object`);
    }
    const item = raw as Record<string, unknown>;
    const id = item.segment_id;
    if (typeof id !== "string" && typeof id !== "number") {
      throw new BundleError(`item ${index}: field "segment_id" missing or invalid`);
    }
    const key = String(id);
    if (seen.has(key)) {
      throw new BundleError(`item ${index}: duplicate segment_id ${JSON.stringify(id)}`);
    }
    seen.add(key);
    for (const field of TEXT_FIELDS) {
      if (typeof item[field] !== "string" || (item[field] as string).trim() === "") {
        throw new BundleError(`item ${index}: field "${field}" must be non-empty text`);
      }
    }
    return {
      segment_id: id,
      source_text: item.source_text as string,
      reference_text: item.reference_text as string,
      hypothesis_text: item.hypothesis_text as string,
    };
  });
  return {
    task_id: obj.task_id as string,
    direction: obj.direction as string,
    system_id: obj.system_id as string,
    items,
  };
}

export function newSession(bundle: TaskBundle, annotatorId: string): SessionState {
  if (!annotatorId) throw new BundleError("annotator id must be non-empty");
  const drafts: Record<string, SegmentDraft> = {};
  for (const item of bundle.items) {
    drafts[String(item.segment_id)] = { sqm: null, errors: [] };
  }
  return { annotatorId, bundle, drafts };
}

/**
 * Store one segment's rating and error tags.  The validation layer is
 * the invariant holder: an out-of-range SQM or a severity-less error
 * on an ordinary category can never enter the state.
 */
export function recordAnnotation(
  session: SessionState,
  segmentId: string | number,
  sqm: number | null,
  errors: ErrorTag[]
): SessionState {
  const key = String(segmentId);
  if (!(key in session.drafts)) {
    throw new BundleError(`unknown segment_id ${JSON.stringify(segmentId)}`);
  }
  if (sqm !== null && !isValidSqm(sqm)) {
    throw new ValidationError(`sqm must be an integer in 0..6, got ${JSON.stringify(sqm)}`);
  }
  const checked = errors.map(validateErrorTag);
  return {
    ...session,
    drafts: { ...session.drafts, [key]: { sqm, errors: checked } },
  };
}

export function isComplete(session: SessionState, segmentId: string | number): boolean {
  return session.drafts[String(segmentId)]?.sqm !== null;
}

export function incompleteSegments(session: SessionState): (string | number)[] {
  return session.bundle.items
    .filter((item) => !isComplete(session, item.segment_id))
    .map((item) => item.segment_id);
}

/**
 * Records for download, in bundle order.  Partial export must be an
 * explicit choice; by default every segment needs a rating.
 */
export function exportRecords(
  session: SessionState,
  options: { allowPartial?: boolean } = {}
): AnnotationRecord[] {
  const missing = incompleteSegments(session);
  if (missing.length > 0 && !options.allowPartial) {
    throw new IncompleteExport(missing);
  }
  const records: AnnotationRecord[] = [];
  for (const item of session.bundle.items) {
    const draft = session.drafts[String(item.segment_id)];
    if (!draft || draft.sqm === null) continue;
    records.push({
      segment_id: item.segment_id,
      annotator_id: session.annotatorId,
      system_id: session.bundle.system_id,
      direction: session.bundle.direction,
      sqm: draft.sqm,
      errors: draft.errors,
    });
  }
  return records;
}

export function exportJsonl(session: SessionState, options: { allowPartial?: boolean } = {}): string {
  return toJsonl(exportRecords(session, options));
}

/** Rebuild a session from a previously exported bundle. */
export function importSession(
  bundle: TaskBundle,
  annotatorId: string,
  jsonl: string
): SessionState {
  let session = newSession(bundle, annotatorId);
  for (const record of parseJsonl(jsonl)) {
    if (record.annotator_id !== annotatorId) {
      throw new ValidationError(
        `record for annotator "${record.annotator_id}" does not belong to "${annotatorId}"`
      );
    }
    session = recordAnnotation(session, record.segment_id, record.sqm, record.errors);
  }
  return session;
}

// --- draft persistence -------------------------------------------------

export interface DraftStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export function storageKey(taskId: string, annotatorId: string): string {
  return `workbench:${taskId}:${annotatorId}`;
}

export function saveSession(store: DraftStore, session: SessionState): void {
  store.setItem(
    storageKey(session.bundle.task_id, session.annotatorId),
    JSON.stringify({ annotatorId: session.annotatorId, drafts: session.drafts })
  );
}

export function restoreSession(
  store: DraftStore,
  bundle: TaskBundle,
  annotatorId: string
): SessionState | null {
  const raw = store.getItem(storageKey(bundle.task_id, annotatorId));
  if (raw === null) return null;
  let parsed: { drafts?: Record<string, SegmentDraft> };
  try {
    parsed = JSON.parse(raw);
  } catch {
    return null;
  }
  let session = newSession(bundle, annotatorId);
  for (const item of bundle.items) {
    const draft = parsed.drafts?.[String(item.segment_id)];
    if (!draft) continue;
    try {
      session = recordAnnotation(session, item.segment_id, draft.sqm, draft.errors ?? []);
    } catch {
      // a corrupted draft entry is dropped rather than poisoning the session
    }
  }
  return session;
}

export function clearSession(store: DraftStore, session: SessionState): void {
  store.removeItem(storageKey(session.bundle.task_id, session.annotatorId));
}
