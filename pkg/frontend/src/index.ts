export { ARM_LABELS, FIGURE_KINDS, KIND_SWEEP_PARAM, buildFigureSvg } from "./figure";
export type { FigureKind } from "./figure";
export { renderFigure, outputPaths } from "./render";
export { CSV_COLUMNS, SchemaError, parseResultsCsv } from "./schema";
export type { ResultRow } from "./schema";
