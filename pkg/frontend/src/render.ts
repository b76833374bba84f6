/**
 * File output: build the SVG for a figure kind and write both the SVG and a
 * rasterized PNG next to each other.
 */

import * as fs from "fs";
import * as path from "path";
import sharp from "sharp";

import { buildFigureSvg, FigureKind } from "./figure";
import { parseResultsCsv } from "./schema";

export interface RenderResult {
  svgPath: string;
  pngPath: string;
}

/** `out` may carry a .svg or .png extension (or none); both files are written. */
export function outputPaths(out: string): RenderResult {
  const ext = path.extname(out);
  const base = ext === ".svg" || ext === ".png" ? out.slice(0, -ext.length) : out;
  return { svgPath: `${base}.svg`, pngPath: `${base}.png` };
}

export async function renderFigure(
  csvPath: string,
  kind: FigureKind,
  out: string
): Promise<RenderResult> {
  const text = fs.readFileSync(csvPath, "utf8");
  const rows = parseResultsCsv(text);
  const svg = buildFigureSvg(rows, kind);

  const paths = outputPaths(out);
  fs.mkdirSync(path.dirname(paths.svgPath) || ".", { recursive: true });
  fs.writeFileSync(paths.svgPath, svg + "\n");
  // density 144 gives a 2x raster of the nominal 72 dpi SVG size
  const png = await sharp(Buffer.from(svg), { density: 144 }).png().toBuffer();
  fs.writeFileSync(paths.pngPath, png);
  return paths;
}
