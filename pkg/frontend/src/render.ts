import { readFileSync, writeFileSync } from "node:fs";
import { extname } from "node:path";

import { Resvg } from "@resvg/resvg-js";

import { parseCsv } from "./csv.js";
import { UsageError } from "./errors.js";
import { buildFig2Scene, buildFig4Scene } from "./figures.js";
import { Scene } from "./scene.js";
import { sceneToSvg } from "./svg.js";

export type FigureKind = "fig2" | "fig4";

export interface PlotSpec {
  kind: FigureKind;
  input: string;
  output: string;
}

export function buildScene(kind: FigureKind, csvText: string): Scene {
  const table = parseCsv(csvText);
  switch (kind) {
    case "fig2":
      return buildFig2Scene(table);
    case "fig4":
      return buildFig4Scene(table);
    default:
      throw new UsageError(`unknown figure kind: ${kind as string}`);
  }
}

export function svgToPng(svg: string): Buffer {
  const resvg = new Resvg(svg, {
    font: { loadSystemFonts: true },
    background: "#ffffff",
  });
  return resvg.render().asPng();
}

/** Render a CSV sweep table to an image file; the input is only read. */
export function render(spec: PlotSpec): void {
  if (spec.kind !== "fig2" && spec.kind !== "fig4") {
    throw new UsageError(`unknown figure kind: ${String(spec.kind)}`);
  }
  const text = readFileSync(spec.input, "utf-8");
  const scene = buildScene(spec.kind, text);
  const svg = sceneToSvg(scene);
  const ext = extname(spec.output).toLowerCase();
  if (ext === ".svg") {
    writeFileSync(spec.output, svg);
  } else if (ext === ".png") {
    writeFileSync(spec.output, svgToPng(svg));
  } else {
    throw new UsageError(`unsupported output format: ${ext || "(none)"}; ` +
      "use .svg or .png");
  }
}
