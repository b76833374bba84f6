/**
 * Strict reader for the simulator's sweep CSVs.
 *
 * The expected schema is exactly the column set written by the simulator's
 * `write_results`; anything else (missing columns, extra columns, malformed
 * cells, empty files) is rejected with a diagnostic that names the offending
 * column so broken pipelines fail loudly instead of plotting garbage.
 */

import Papa from "papaparse";

export const CSV_COLUMNS = [
  "experiment",
  "sweep_param",
  "sweep_value",
  "arm",
  "trials",
  "mean_snr_db",
  "env_low_db",
  "env_high_db",
  "master_seed",
] as const;

export interface ResultRow {
  experiment: string;
  sweepParam: string;
  /** numeric sweep values stay numbers; categorical ones (e.g. "continuous") stay strings */
  sweepValue: number | string;
  arm: string;
  trials: number;
  meanSnrDb: number;
  envLowDb: number;
  envHighDb: number;
  masterSeed: number;
}

export class SchemaError extends Error {}

function fail(message: string): never {
  throw new SchemaError(message);
}

function parseNumber(raw: string, column: string, line: number): number {
  const value = Number(raw);
  if (raw.trim() === "" || !Number.isFinite(value)) {
    fail(`row ${line}: column "${column}" has non-numeric value "${raw}"`);
  }
  return value;
}

/** Parse and validate one results CSV; throws SchemaError with a column diagnostic. */
export function parseResultsCsv(text: string): ResultRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    fail(`malformed CSV: ${e.message}${e.row !== undefined ? ` (row ${e.row})` : ""}`);
  }

  const header = parsed.meta.fields ?? [];
  const missing = CSV_COLUMNS.filter((c) => !header.includes(c));
  const unknown = header.filter((c) => !(CSV_COLUMNS as readonly string[]).includes(c));
  if (missing.length > 0) {
    fail(`missing column(s): ${missing.join(", ")}`);
  }
  if (unknown.length > 0) {
    fail(`unknown column(s): ${unknown.join(", ")}`);
  }
  if (parsed.data.length === 0) {
    fail("no data rows");
  }

  const rows = parsed.data.map((record, i) => {
    const line = i + 2; // 1-based, after the header line
    for (const c of ["experiment", "sweep_param", "sweep_value", "arm"]) {
      if ((record[c] ?? "").trim() === "") {
        fail(`row ${line}: column "${c}" is empty`);
      }
    }
    const rawValue = record.sweep_value;
    const numeric = Number(rawValue);
    return {
      experiment: record.experiment,
      sweepParam: record.sweep_param,
      sweepValue: Number.isFinite(numeric) && rawValue.trim() !== "" ? numeric : rawValue,
      arm: record.arm,
      trials: parseNumber(record.trials, "trials", line),
      meanSnrDb: parseNumber(record.mean_snr_db, "mean_snr_db", line),
      envLowDb: parseNumber(record.env_low_db, "env_low_db", line),
      envHighDb: parseNumber(record.env_high_db, "env_high_db", line),
      masterSeed: parseNumber(record.master_seed, "master_seed", line),
    };
  });

  const experiments = new Set(rows.map((r) => r.experiment));
  if (experiments.size > 1) {
    fail(`rows span multiple experiments: ${[...experiments].sort().join(", ")}`);
  }
  return rows;
}
