/**
 * The annotation record schema shared with the evaluation CLI.
 *
 * Exported JSONL must validate against the scorer's bundle contract:
 * one record per line with exactly {segment_id, annotator_id,
 * system_id, direction, sqm, errors:[{category, severity?, span?}]}.
 * Category names are case-sensitive and must stay byte-identical to
 * this list.
 */

export const CATEGORIES = [
  "Non-translation",
  "Addition",
  "Omission",
  "Mistranslation",
  "Untranslated text",
  "Punctuation",
  "Spelling",
  "Grammar",
  "Register",
  "Inconsistency",
  "Character encoding",
] as const;

export type Category = (typeof CATEGORIES)[number];

export const NON_TRANSLATION: Category = "Non-translation";

export type Severity = "minor" | "major";

/** Score contribution badges shown on error chips. */
export const SEVERITY_WEIGHTS: Record<Severity, number> = { minor: 1, major: 10 };
export const NON_TRANSLATION_WEIGHT = 25;

export const SQM_MIN = 0;
export const SQM_MAX = 6;

/** Anchored level descriptions; odd ratings are in-between choices. */
export const SQM_LEVEL_LABELS: Record<number, string> = {
  6: "Perfect meaning and grammar",
  4: "Most meaning preserved, minor issues",
  2: "Some meaning preserved",
  0: "No meaning preserved",
};

export interface ErrorTag {
  category: Category;
  severity?: Severity;
  span?: [number, number];
}

export interface AnnotationRecord {
  segment_id: string | number;
  annotator_id: string;
  system_id: string;
  direction: string;
  sqm: number;
  errors: ErrorTag[];
}

export class ValidationError extends Error {}

export function isValidSqm(value: unknown): value is number {
  return (
    typeof value === "number" &&
    Number.isInteger(value) &&
    value >= SQM_MIN &&
    value <= SQM_MAX
  );
}

export function isCategory(value: unknown): value is Category {
  return typeof value === "string" && (CATEGORIES as readonly string[]).includes(value);
}

export function errorWeight(tag: ErrorTag): number {
  return tag.category === NON_TRANSLATION
    ? NON_TRANSLATION_WEIGHT
    : SEVERITY_WEIGHTS[tag.severity as Severity];
}

/**
 * Validate one error tag; throws naming the offence.  Non-translation
 * must not carry a severity, everything else must.
 */
export function validateErrorTag(tag: unknown): ErrorTag {
  if (typeof tag !== "object" || tag === null || Array.isArray(tag)) {
    throw new ValidationError("error tag must be an object");
  }
  const obj = tag as Record<string, unknown>;
  for (const key of Object.keys(obj)) {
    if (key !== "category" && key !== "severity" && key !== "span") {
      throw new ValidationError(`unknown error field "${key}"`);
    }
  }
  if (!isCategory(obj.category)) {
    throw new ValidationError(`unknown category ${JSON.stringify(obj.category)}`);
  }
  const category = obj.category;
  if (category === NON_TRANSLATION) {
    if (obj.severity !== undefined) {
      throw new ValidationError("Non-translation takes no severity");
    }
  } else if (obj.severity !== "minor" && obj.severity !== "major") {
    throw new ValidationError(`severity must be minor or major for ${category}`);
  }
  let span: [number, number] | undefined;
  if (obj.span !== undefined) {
    const raw = obj.span;
    if (
      !Array.isArray(raw) ||
      raw.length !== 2 ||
      !raw.every((v) => typeof v === "number" && Number.isInteger(v))
    ) {
      throw new ValidationError("span must be [start, end] integers");
    }
    const [start, end] = raw as [number, number];
    if (start < 0 || end < start) {
      throw new ValidationError(`invalid span [${start}, ${end}]`);
    }
    span = [start, end];
  }
  const out: ErrorTag = { category };
  if (category !== NON_TRANSLATION) out.severity = obj.severity as Severity;
  if (span) out.span = span;
  return out;
}

/** Validate a whole record (used both on export and on import). */
export function validateRecord(record: unknown): AnnotationRecord {
  if (typeof record !== "object" || record === null || Array.isArray(record)) {
    throw new ValidationError("record must be an object");
  }
  const obj = record as Record<string, unknown>;
  const fields = ["segment_id", "annotator_id", "system_id", "direction", "sqm", "errors"];
  for (const field of fields) {
    if (!(field in obj)) throw new ValidationError(`missing field "${field}"`);
  }
  for (const key of Object.keys(obj)) {
    if (!fields.includes(key)) throw new ValidationError(`unknown field "${key}"`);
  }
  if (typeof obj.segment_id !== "string" && typeof obj.segment_id !== "number") {
    throw new ValidationError("segment_id must be a string or number");
  }
  for (const name of ["annotator_id", "system_id", "direction"] as const) {
    if (typeof obj[name] !== "string" || obj[name] === "") {
      throw new ValidationError(`${name} must be a non-empty string`);
    }
  }
  if (!isValidSqm(obj.sqm)) {
    throw new ValidationError(`sqm must be an integer in 0..6, got ${JSON.stringify(obj.sqm)}`);
  }
  if (!Array.isArray(obj.errors)) {
    throw new ValidationError("errors must be an array");
  }
  return {
    segment_id: obj.segment_id,
    annotator_id: obj.annotator_id as string,
    system_id: obj.system_id as string,
    direction: obj.direction as string,
    sqm: obj.sqm,
    errors: obj.errors.map(validateErrorTag),
  };
}

/** Serialize with the scorer's field order, one record per line. */
export function toJsonl(records: AnnotationRecord[]): string {
  return records
    .map((r) =>
      JSON.stringify({
        segment_id: r.segment_id,
        annotator_id: r.annotator_id,
        system_id: r.system_id,
        direction: r.direction,
        sqm: r.sqm,
        errors: r.errors.map((e) => {
          const out: Record<string, unknown> = { category: e.category };
          if (e.severity !== undefined) out.severity = e.severity;
          if (e.span !== undefined) out.span = e.span;
          return out;
        }),
      })
    )
    .join("\n") + (records.length ? "\n" : "");
}

/** Parse and validate a JSONL bundle; errors name the line. */
export function parseJsonl(text: string): AnnotationRecord[] {
  const records: AnnotationRecord[] = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i];
    if (line === undefined || line.trim() === "") continue;
    let obj: unknown;
    try {
      obj = JSON.parse(line);
    } catch {
      throw new ValidationError(`line ${i + 1}: invalid JSON`);
    }
    try {
      records.push(validateRecord(obj));
    } catch (err) {
      throw new ValidationError(`line ${i + 1}: ${(err as Error).message}`);
    }
  }
  return records;
}
