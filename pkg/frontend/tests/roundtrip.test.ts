/**
 * End-to-end contract test: exports produced by the workbench state
 * layer must be accepted by the scoring CLI.  Two annotators' sessions
 * over the same 25-segment task are concatenated (the real agreement
 * workflow) and fed to `loreseval agree`.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { CATEGORIES } from "../src/schema.js";
import { exportJsonl, newSession, recordAnnotation, SessionState } from "../src/state.js";
import { makeBundle } from "./state.test.js";

const cliAvailable = spawnSync("loreseval", ["--help"]).status === 0;
const describeCli = cliAvailable ? describe : describe.skip;

function completedSession(annotator: string, seed: number): SessionState {
  const bundle = makeBundle(25);
  let session = newSession(bundle, annotator);
  const ordinary = CATEGORIES.filter((c) => c !== "Non-translation");
  for (let i = 0; i < 25; i++) {
    const errors = [];
    // deterministic but annotator-dependent disagreement pattern
    const nErrors = (i * seed + seed) % 3;
    for (let e = 0; e < nErrors; e++) {
      const category = ordinary[(i + e * seed) % ordinary.length]!;
      errors.push({ category, severity: (i + e) % 2 ? ("minor" as const) : ("major" as const) });
    }
    session = recordAnnotation(session, i, (i + seed) % 7, errors);
  }
  return session;
}

describeCli("round-trip into the scoring CLI", () => {
  it("a completed 25-segment session exports JSONL the CLI schema accepts", () => {
    const jsonl = exportJsonl(completedSession("a1", 2));
    expect(jsonl.trim().split("\n")).toHaveLength(25);
    const dir = mkdtempSync(join(tmpdir(), "workbench-"));
    const path = join(dir, "single.jsonl");
    writeFileSync(path, jsonl);
    const result = spawnSync(
      "loreseval",
      ["agree", path, "--system", "mllm-tuned", "--direction", "en2ga"],
      { encoding: "utf-8", env: { ...process.env, LORES_EVAL_LOG_DIR: join(dir, "logs") } }
    );
    // one annotator cannot yield agreement, but the bundle itself must
    // pass schema validation: the only acceptable complaint is the
    // annotator count
    expect(result.status).toBe(5);
    expect(result.stderr).toMatch(/exactly two annotators/);
    expect(result.stderr).not.toMatch(/line \d+/);
  });

  it("two annotators' exports concatenated score cleanly (exit 0)", () => {
    const combined = exportJsonl(completedSession("a1", 2)) + exportJsonl(completedSession("a2", 3));
    const dir = mkdtempSync(join(tmpdir(), "workbench-"));
    const path = join(dir, "both.jsonl");
    writeFileSync(path, combined);
    const result = spawnSync(
      "loreseval",
      ["agree", path, "--system", "mllm-tuned", "--direction", "en2ga", "--json"],
      { encoding: "utf-8", env: { ...process.env, LORES_EVAL_LOG_DIR: join(dir, "logs") } }
    );
    expect(result.status).toBe(0);
    const payload = JSON.parse(result.stdout);
    expect(Object.keys(payload.errors_by_annotator).sort()).toEqual(["a1", "a2"]);
    expect(Object.keys(payload.agreement)).toHaveLength(11);
    expect(payload.sqm_mean).toBeGreaterThanOrEqual(0);
    expect(payload.sqm_mean).toBeLessThanOrEqual(6);
  });
});
