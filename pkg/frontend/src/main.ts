/**
 * Workbench UI: load a task bundle, rate each segment on the 0-6
 * scale, tag errors, and export the JSONL bundle for offline scoring.
 *
 * All state changes go through state.ts, whose validation layer is
 * what keeps exports schema-clean; this file is only wiring.
 */

import {
  CATEGORIES,
  NON_TRANSLATION,
  SQM_LEVEL_LABELS,
  SQM_MAX,
  SQM_MIN,
  ErrorTag,
  Severity,
  errorWeight,
} from "./schema.js";
import {
  IncompleteExport,
  SessionState,
  TaskBundle,
  clearSession,
  exportJsonl,
  importSession,
  incompleteSegments,
  newSession,
  parseTaskBundle,
  recordAnnotation,
  restoreSession,
  saveSession,
} from "./state.js";

let session: SessionState | null = null;

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function banner(message: string, kind: "error" | "info" = "error"): void {
  const box = $("banner");
  box.textContent = message;
  box.className = message ? `banner ${kind}` : "banner hidden";
  if (!message) box.classList.add("hidden");
}

function setSession(next: SessionState): void {
  session = next;
  saveSession(window.localStorage, next);
  render();
}

// --- bundle loading -----------------------------------------------------

async function onBundleChosen(file: File): Promise<void> {
  const annotatorId = ($("annotator") as HTMLInputElement).value.trim();
  if (!annotatorId) {
    banner("enter your annotator id before loading a task bundle");
    return;
  }
  let bundle: TaskBundle;
  try {
    bundle = parseTaskBundle(JSON.parse(await file.text()));
  } catch (err) {
    banner(`could not load bundle: ${(err as Error).message}`);
    return;
  }
  const restored = restoreSession(window.localStorage, bundle, annotatorId);
  session = restored ?? newSession(bundle, annotatorId);
  banner(restored ? "resumed a saved session for this task" : "", "info");
  render();
}

// --- rendering ----------------------------------------------------------

function render(): void {
  const list = $("items");
  list.textContent = "";
  const header = $("progress");
  if (!session) {
    header.textContent = "";
    $("toolbar").classList.add("hidden");
    return;
  }
  $("toolbar").classList.remove("hidden");
  const total = session.bundle.items.length;
  const done = total - incompleteSegments(session).length;
  header.textContent =
    `${session.bundle.task_id} · ${session.bundle.system_id} · ` +
    `${session.bundle.direction} · annotator ${session.annotatorId} — ${done}/${total} rated`;

  session.bundle.items.forEach((item, index) => {
    const draft = session!.drafts[String(item.segment_id)]!;
    const card = document.createElement("section");
    card.className = "card" + (draft.sqm !== null ? " complete" : "");

    const title = document.createElement("h3");
    title.textContent = `segment ${item.segment_id} (${index + 1}/${total})`;
    card.appendChild(title);

    for (const [label, text] of [
      ["source", item.source_text],
      ["reference", item.reference_text],
      ["system output", item.hypothesis_text],
    ] as const) {
      const row = document.createElement("p");
      row.className = "text-row";
      const tag = document.createElement("span");
      tag.className = "tag";
      tag.textContent = label;
      row.appendChild(tag);
      const body = document.createElement("span");
      body.textContent = text;
      if (label === "system output") {
        // selecting a stretch here attaches its offsets to the next tag
        body.className = "hypothesis";
        body.dataset.segment = String(item.segment_id);
        body.title = "select text before adding an error to record its span";
      }
      row.appendChild(document.createTextNode(" "));
      row.appendChild(body);
      card.appendChild(row);
    }

    card.appendChild(sqmControl(item.segment_id, draft.sqm));
    card.appendChild(errorList(item.segment_id, draft.errors));
    card.appendChild(errorForm(item.segment_id, draft.errors));
    list.appendChild(card);
  });
}

function sqmControl(segmentId: string | number, current: number | null): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "sqm";
  const caption = document.createElement("span");
  caption.className = "tag";
  caption.textContent = "quality (0-6)";
  wrap.appendChild(caption);
  for (let value = SQM_MIN; value <= SQM_MAX; value++) {
    const label = document.createElement("label");
    const radio = document.createElement("input");
    radio.type = "radio";
    radio.name = `sqm-${segmentId}`;
    radio.value = String(value);
    radio.checked = current === value;
    radio.addEventListener("change", () => {
      const draft = session!.drafts[String(segmentId)]!;
      setSession(recordAnnotation(session!, segmentId, value, draft.errors));
    });
    label.appendChild(radio);
    label.appendChild(document.createTextNode(String(value)));
    const description = SQM_LEVEL_LABELS[value];
    if (description) label.title = description;
    wrap.appendChild(label);
  }
  const hint = document.createElement("div");
  hint.className = "sqm-hint";
  hint.textContent =
    current !== null && SQM_LEVEL_LABELS[current]
      ? SQM_LEVEL_LABELS[current]!
      : "anchors: " +
        [6, 4, 2, 0].map((v) => `${v} ${SQM_LEVEL_LABELS[v]}`).join(" · ");
  wrap.appendChild(hint);
  return wrap;
}

function errorList(segmentId: string | number, errors: ErrorTag[]): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "chips";
  errors.forEach((tag, index) => {
    const chip = document.createElement("span");
    chip.className = "chip";
    const spanText = tag.span ? ` [${tag.span[0]}-${tag.span[1]}]` : "";
    chip.textContent = `${tag.category}${tag.severity ? " / " + tag.severity : ""}${spanText}`;
    const badge = document.createElement("b");
    badge.textContent = String(errorWeight(tag));
    badge.title = "score weight";
    chip.appendChild(badge);
    const remove = document.createElement("button");
    remove.textContent = "×";
    remove.addEventListener("click", () => {
      const draft = session!.drafts[String(segmentId)]!;
      const rest = draft.errors.filter((_, i) => i !== index);
      setSession(recordAnnotation(session!, segmentId, draft.sqm, rest));
    });
    chip.appendChild(remove);
    wrap.appendChild(chip);
  });
  return wrap;
}

/** Character span of the current selection within a segment's
 * hypothesis text, if the selection lives there. */
function selectedSpan(segmentId: string | number): [number, number] | undefined {
  const selection = window.getSelection();
  if (!selection || selection.isCollapsed || selection.rangeCount === 0) return undefined;
  const range = selection.getRangeAt(0);
  const host = range.startContainer.parentElement?.closest?.(".hypothesis");
  if (!(host instanceof HTMLElement) || host.dataset.segment !== String(segmentId)) {
    return undefined;
  }
  if (!host.contains(range.endContainer)) return undefined;
  const start = range.startOffset;
  const end = range.endOffset;
  if (end <= start) return undefined;
  return [start, end];
}

function errorForm(segmentId: string | number, existing: ErrorTag[]): HTMLElement {
  const form = document.createElement("div");
  form.className = "error-form";

  const category = document.createElement("select");
  for (const name of CATEGORIES) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    category.appendChild(option);
  }

  const severity = document.createElement("select");
  for (const name of ["minor", "major"] as const) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    severity.appendChild(option);
  }
  // whole-segment non-translation has a fixed weight, no severity
  category.addEventListener("change", () => {
    severity.disabled = category.value === NON_TRANSLATION;
  });

  const add = document.createElement("button");
  add.textContent = "add error";
  add.addEventListener("click", () => {
    const tag: ErrorTag =
      category.value === NON_TRANSLATION
        ? { category: NON_TRANSLATION }
        : { category: category.value as ErrorTag["category"], severity: severity.value as Severity };
    const span = selectedSpan(segmentId);
    if (span) tag.span = span;
    const draft = session!.drafts[String(segmentId)]!;
    setSession(recordAnnotation(session!, segmentId, draft.sqm, [...draft.errors, tag]));
  });

  form.appendChild(category);
  form.appendChild(severity);
  form.appendChild(add);
  return form;
}

// --- export / import ----------------------------------------------------

function download(filename: string, text: string): void {
  const link = document.createElement("a");
  link.href = URL.createObjectURL(new Blob([text], { type: "application/jsonl" }));
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

function onExport(): void {
  if (!session) return;
  let jsonl: string;
  try {
    jsonl = exportJsonl(session);
  } catch (err) {
    if (err instanceof IncompleteExport) {
      const go = window.confirm(
        `Unrated segments: ${err.missing.join(", ")}.\nExport the rated segments only?`
      );
      if (!go) {
        banner(`export blocked; unrated segments: ${err.missing.join(", ")}`);
        return;
      }
      jsonl = exportJsonl(session, { allowPartial: true });
    } else {
      banner((err as Error).message);
      return;
    }
  }
  banner("", "info");
  download(`${session.bundle.task_id}.${session.annotatorId}.jsonl`, jsonl);
}

async function onImport(file: File): Promise<void> {
  if (!session) return;
  try {
    const next = importSession(session.bundle, session.annotatorId, await file.text());
    setSession(next);
    banner("session restored from export", "info");
  } catch (err) {
    banner(`import failed: ${(err as Error).message}`);
  }
}

function onReset(): void {
  if (!session) return;
  if (!window.confirm("Discard all drafts for this task?")) return;
  clearSession(window.localStorage, session);
  session = newSession(session.bundle, session.annotatorId);
  render();
}

export function init(): void {
  ($("bundle-file") as HTMLInputElement).addEventListener("change", (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (file) void onBundleChosen(file);
  });
  ($("import-file") as HTMLInputElement).addEventListener("change", (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (file) void onImport(file);
  });
  $("export").addEventListener("click", onExport);
  $("reset").addEventListener("click", onReset);
}

if (typeof document !== "undefined" && document.getElementById("items")) {
  init();
}
