export { parseCsv } from "./csv.js";
export { EmptyTableError, MissingColumnError, UsageError } from "./errors.js";
export {
  FIG2_REQUIRED,
  FIG4_REQUIRED,
  buildFig2Scene,
  buildFig4Scene,
} from "./figures.js";
export { buildScene, render, svgToPng } from "./render.js";
export type { FigureKind, PlotSpec } from "./render.js";
export { sceneToSvg } from "./svg.js";
