#!/usr/bin/env node
/**
 * CLI: render one figure from a sweep CSV.
 *
 *   riscancel-figures render --csv results/sweep_elements.csv \
 *       --kind elements --out figures/elements.png
 *
 * Writes both <out>.svg and <out>.png; exits nonzero with a diagnostic on
 * schema violations.
 */

import { FIGURE_KINDS, FigureKind } from "./figure";
import { renderFigure } from "./render";
import { SchemaError } from "./schema";

const USAGE =
  "usage: riscancel-figures render --csv <path> " +
  `--kind {${FIGURE_KINDS.join(",")}} --out <path>`;

interface Args {
  csv: string;
  kind: FigureKind;
  out: string;
}

export function parseArgs(argv: string[]): Args {
  if (argv[0] !== "render") {
    throw new Error(`unknown command "${argv[0] ?? ""}"\n${USAGE}`);
  }
  const opts = new Map<string, string>();
  for (let i = 1; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new Error(`malformed option "${flag}"\n${USAGE}`);
    }
    opts.set(flag.slice(2), value);
  }
  for (const required of ["csv", "kind", "out"]) {
    if (!opts.has(required)) {
      throw new Error(`missing --${required}\n${USAGE}`);
    }
  }
  const kind = opts.get("kind")!;
  if (!(FIGURE_KINDS as string[]).includes(kind)) {
    throw new Error(`invalid --kind "${kind}" (expected ${FIGURE_KINDS.join(", ")})`);
  }
  return { csv: opts.get("csv")!, kind: kind as FigureKind, out: opts.get("out")! };
}

export async function run(argv: string[]): Promise<number> {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (e) {
    console.error(`error: ${(e as Error).message}`);
    return 2;
  }
  try {
    const { svgPath, pngPath } = await renderFigure(args.csv, args.kind, args.out);
    console.log(`wrote ${svgPath}`);
    console.log(`wrote ${pngPath}`);
    return 0;
  } catch (e) {
    if (e instanceof SchemaError) {
      console.error(`error: invalid results CSV: ${e.message}`);
    } else {
      console.error(`error: ${(e as Error).message}`);
    }
    return 1;
  }
}

if (require.main === module) {
  run(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
