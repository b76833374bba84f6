/**
 * Pure SVG rendering of one sweep figure: per-arm mean lines with shaded
 * 95% envelopes, grouped additionally by transmit-array size on the
 * position figure (where the no-RIS series becomes a dashed reference).
 * No statistics are computed here; the CSV is plotted as-is.
 */

import { ResultRow, SchemaError } from "./schema";

export type FigureKind = "elements" | "position" | "mse" | "quantization";

export const FIGURE_KINDS: FigureKind[] = ["elements", "position", "mse", "quantization"];

export const KIND_SWEEP_PARAM: Record<FigureKind, string> = {
  elements: "ris_elements",
  position: "ris_x_m",
  mse: "csi_mse_db",
  quantization: "phase_bits",
};

const X_LABEL: Record<FigureKind, string> = {
  elements: "number of surface elements",
  position: "surface position x [m]",
  mse: "channel estimation error [dB]",
  quantization: "phase resolution [bits]",
};

/** display names mirror the reference figure legends exactly */
export const ARM_LABELS: Record<string, string> = {
  attack: "attack",
  random_phase: "random phase",
  no_ris: "no RIS",
};

const ARM_ORDER = ["attack", "random_phase", "no_ris"];

const ARM_COLORS: Record<string, string> = {
  attack: "#d4622a",
  random_phase: "#2a9d5c",
  no_ris: "#4063a3",
};

interface Series {
  baseArm: string;
  group: string | null; // array size tag on the position figure
  points: { x: number | string; mean: number; low: number; high: number }[];
}

interface Layout {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
}

const LAYOUT: Layout = { width: 760, height: 470, left: 66, right: 190, top: 24, bottom: 56 };

function splitArm(arm: string): { base: string; group: string | null } {
  const idx = arm.indexOf(":");
  const base = idx === -1 ? arm : arm.slice(0, idx);
  if (!(base in ARM_LABELS)) {
    throw new SchemaError(
      `unknown arm "${arm}" (expected one of ${Object.keys(ARM_LABELS).join(", ")})`
    );
  }
  return { base, group: idx === -1 ? null : arm.slice(idx + 1) };
}

function compareSweepValues(a: number | string, b: number | string): number {
  const an = typeof a === "number";
  const bn = typeof b === "number";
  if (an && bn) return (a as number) - (b as number);
  if (an !== bn) return an ? -1 : 1; // numbers first, then categories
  return String(a) < String(b) ? -1 : String(a) > String(b) ? 1 : 0;
}

function buildSeries(rows: ResultRow[], kind: FigureKind): Series[] {
  const param = KIND_SWEEP_PARAM[kind];
  const badParam = rows.find((r) => r.sweepParam !== param);
  if (badParam) {
    throw new SchemaError(
      `kind "${kind}" expects sweep_param "${param}", found "${badParam.sweepParam}"`
    );
  }
  const byArm = new Map<string, ResultRow[]>();
  for (const r of rows) {
    const bucket = byArm.get(r.arm) ?? [];
    bucket.push(r);
    byArm.set(r.arm, bucket);
  }
  const series: Series[] = [];
  for (const [arm, bucket] of byArm) {
    const { base, group } = splitArm(arm);
    const seen = new Set<string>();
    for (const r of bucket) {
      const key = String(r.sweepValue);
      if (seen.has(key)) {
        throw new SchemaError(`duplicate row for arm "${arm}" at sweep_value "${key}"`);
      }
      seen.add(key);
    }
    const points = bucket
      .map((r) => ({ x: r.sweepValue, mean: r.meanSnrDb, low: r.envLowDb, high: r.envHighDb }))
      .sort((p, q) => compareSweepValues(p.x, q.x));
    series.push({ baseArm: base, group, points });
  }
  series.sort((s, t) => {
    const byBase = ARM_ORDER.indexOf(s.baseArm) - ARM_ORDER.indexOf(t.baseArm);
    if (byBase !== 0) return byBase;
    return (s.group ?? "") < (t.group ?? "") ? -1 : (s.group ?? "") > (t.group ?? "") ? 1 : 0;
  });
  return series;
}

/** tick positions with a 1/2/5 step covering [lo, hi] */
function niceTicks(lo: number, hi: number, target = 6): number[] {
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const raw = (hi - lo) / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => (hi - lo) / s <= target) ?? 10 * mag;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return ticks;
}

function fmt(v: number): string {
  const s = Number(v.toPrecision(6)).toString();
  return s === "-0" ? "0" : s;
}

function px(v: number): string {
  return v.toFixed(2);
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** group tags (array sizes) get distinct stroke widths; arms keep the color */
function groupWidths(groups: string[]): Map<string, number> {
  const widths = new Map<string, number>();
  groups.forEach((g, i) => widths.set(g, 1.3 + (1.8 * i) / Math.max(1, groups.length - 1)));
  return widths;
}

export function buildFigureSvg(rows: ResultRow[], kind: FigureKind): string {
  const series = buildSeries(rows, kind);
  const L = LAYOUT;
  const plotW = L.width - L.left - L.right;
  const plotH = L.height - L.top - L.bottom;

  // x scale: linear when every sweep value is numeric, ordered categories otherwise
  const xValues = [...new Set(series.flatMap((s) => s.points.map((p) => p.x)))].sort(
    compareSweepValues
  );
  const categorical = xValues.some((v) => typeof v === "string");
  let xPos: (v: number | string) => number;
  let xTicks: { pos: number; label: string }[];
  if (categorical || xValues.length === 1) {
    const index = new Map(xValues.map((v, i) => [String(v), i]));
    const slot = plotW / Math.max(1, xValues.length - 1 || 1);
    const offset = xValues.length === 1 ? plotW / 2 : 0;
    xPos = (v) => L.left + offset + (index.get(String(v)) ?? 0) * slot;
    xTicks = xValues.map((v) => ({
      pos: xPos(v),
      label: typeof v === "number" ? fmt(v) : String(v),
    }));
  } else {
    const nums = xValues as number[];
    const [xLo, xHi] = [nums[0], nums[nums.length - 1]];
    const span = xHi - xLo || 1;
    xPos = (v) => L.left + (((v as number) - xLo) / span) * plotW;
    xTicks = niceTicks(xLo, xHi)
      .filter((t) => t >= xLo - span * 1e-9 && t <= xHi + span * 1e-9)
      .map((t) => ({ pos: xPos(t), label: fmt(t) }));
  }

  // y scale over the envelopes with a small pad
  let yLo = Math.min(...series.flatMap((s) => s.points.map((p) => p.low)));
  let yHi = Math.max(...series.flatMap((s) => s.points.map((p) => p.high)));
  if (yLo === yHi) {
    yLo -= 1;
    yHi += 1;
  }
  const pad = (yHi - yLo) * 0.05;
  yLo -= pad;
  yHi += pad;
  const yPos = (v: number) => L.top + ((yHi - v) / (yHi - yLo)) * plotH;
  const yTicks = niceTicks(yLo, yHi).filter((t) => t >= yLo && t <= yHi);

  const groups = [...new Set(series.map((s) => s.group).filter((g): g is string => g !== null))];
  groups.sort();
  const widths = groupWidths(groups);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${L.width}" height="${L.height}" ` +
      `viewBox="0 0 ${L.width} ${L.height}" font-family="Helvetica, Arial, sans-serif">`
  );
  parts.push(`<rect width="${L.width}" height="${L.height}" fill="white"/>`);

  // grid + axes
  for (const t of yTicks) {
    const y = px(yPos(t));
    parts.push(
      `<line x1="${px(L.left)}" y1="${y}" x2="${px(L.left + plotW)}" y2="${y}" ` +
        `stroke="#e4e4e4" stroke-width="1"/>`
    );
    parts.push(
      `<text x="${px(L.left - 8)}" y="${y}" font-size="12" fill="#333" ` +
        `text-anchor="end" dominant-baseline="middle">${fmt(t)}</text>`
    );
  }
  for (const t of xTicks) {
    parts.push(
      `<line x1="${px(t.pos)}" y1="${px(L.top + plotH)}" x2="${px(t.pos)}" ` +
        `y2="${px(L.top + plotH + 5)}" stroke="#333" stroke-width="1"/>`
    );
    parts.push(
      `<text x="${px(t.pos)}" y="${px(L.top + plotH + 20)}" font-size="12" fill="#333" ` +
        `text-anchor="middle">${esc(t.label)}</text>`
    );
  }
  parts.push(
    `<rect x="${px(L.left)}" y="${px(L.top)}" width="${px(plotW)}" height="${px(plotH)}" ` +
      `fill="none" stroke="#333" stroke-width="1"/>`
  );
  parts.push(
    `<text x="${px(L.left + plotW / 2)}" y="${px(L.height - 14)}" font-size="13" ` +
      `fill="#111" text-anchor="middle">${esc(X_LABEL[kind])}</text>`
  );
  parts.push(
    `<text x="18" y="${px(L.top + plotH / 2)}" font-size="13" fill="#111" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${px(L.top + plotH / 2)})">SNR [dB]</text>`
  );

  // the no-RIS series is drawn as a dashed reference on the position figure
  const dashedReference = (s: Series) => kind === "position" && s.baseArm === "no_ris";

  for (const s of series) {
    if (dashedReference(s)) continue; // bands only for non-reference series
    const color = ARM_COLORS[s.baseArm];
    const upper = s.points.map((p) => `${px(xPos(p.x))},${px(yPos(p.high))}`);
    const lower = [...s.points].reverse().map((p) => `${px(xPos(p.x))},${px(yPos(p.low))}`);
    parts.push(
      `<polygon points="${upper.join(" ")} ${lower.join(" ")}" fill="${color}" ` +
        `fill-opacity="0.14" stroke="none"/>`
    );
  }

  for (const s of series) {
    const color = ARM_COLORS[s.baseArm];
    const width = s.group !== null ? widths.get(s.group)! : 2;
    const dash = dashedReference(s) ? ' stroke-dasharray="7 5"' : "";
    const coords = s.points.map((p) => `${px(xPos(p.x))},${px(yPos(p.mean))}`);
    if (coords.length > 1) {
      parts.push(
        `<polyline points="${coords.join(" ")}" fill="none" stroke="${color}" ` +
          `stroke-width="${px(width)}"${dash}/>`
      );
    }
    for (const c of coords) {
      const [cx, cy] = c.split(",");
      parts.push(`<circle cx="${cx}" cy="${cy}" r="3" fill="${color}"/>`);
    }
  }

  // legend: the three arms by name, then array-size line weights if grouped
  const legendX = L.left + plotW + 18;
  let legendY = L.top + 10;
  const presentArms = ARM_ORDER.filter((a) => series.some((s) => s.baseArm === a));
  for (const arm of presentArms) {
    const dash = kind === "position" && arm === "no_ris" ? ' stroke-dasharray="7 5"' : "";
    parts.push(
      `<line x1="${px(legendX)}" y1="${px(legendY)}" x2="${px(legendX + 28)}" ` +
        `y2="${px(legendY)}" stroke="${ARM_COLORS[arm]}" stroke-width="2.5"${dash}/>`
    );
    parts.push(
      `<text x="${px(legendX + 34)}" y="${px(legendY)}" font-size="12" fill="#111" ` +
        `dominant-baseline="middle">${esc(ARM_LABELS[arm])}</text>`
    );
    legendY += 20;
  }
  if (groups.length > 0) {
    legendY += 6;
    for (const g of groups) {
      parts.push(
        `<line x1="${px(legendX)}" y1="${px(legendY)}" x2="${px(legendX + 28)}" ` +
          `y2="${px(legendY)}" stroke="#777" stroke-width="${px(widths.get(g)!)}"/>`
      );
      parts.push(
        `<text x="${px(legendX + 34)}" y="${px(legendY)}" font-size="12" fill="#444" ` +
          `dominant-baseline="middle">${esc(g)}</text>`
      );
      legendY += 20;
    }
  }

  parts.push("</svg>");
  return parts.join("\n");
}
