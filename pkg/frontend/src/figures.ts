import { Table, numericColumn } from "./csv.js";
import { EmptyTableError, MissingColumnError } from "./errors.js";
import {
  Primitive,
  Scale,
  Scene,
  extent,
  formatTick,
  linearScale,
  linearTicks,
  logScale,
  logTicks,
  padLog,
} from "./scene.js";

const WIDTH = 860;
const HEIGHT = 560;
const MARGIN = { left: 78, right: 24, top: 24, bottom: 58 };
const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#9467bd",
  "#8c564b",
  "#17becf",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
];
const LIMIT_COLOR = "#d62728";

export const FIG2_REQUIRED = [
  "f_ghz",
  "d_prime_m",
  "r_m",
  "s_at_1w_w_per_m2",
  "local_limit_w_per_m2",
] as const;

export const FIG4_REQUIRED = [
  "f_ghz",
  "arch",
  "bits",
  "p_consumed_w",
  "compliant",
] as const;

export function requireColumns(table: Table, names: readonly string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) throw new MissingColumnError(name);
  }
  if (table.rows.length === 0) throw new EmptyTableError();
}

interface Box {
  x0: number;
  x1: number;
  y0: number; // bottom (maximum pixel y)
  y1: number; // top
}

function plotBox(): Box {
  return {
    x0: MARGIN.left,
    x1: WIDTH - MARGIN.right,
    y0: HEIGHT - MARGIN.bottom,
    y1: MARGIN.top,
  };
}

function axes(
  prims: Primitive[],
  box: Box,
  xScale: Scale,
  yScale: Scale,
  xTicks: number[],
  yTicks: number[],
  xLabel: string,
  yLabel: string,
): void {
  for (const t of xTicks) {
    const px = xScale(t);
    prims.push({
      kind: "polyline",
      points: [
        [px, box.y0],
        [px, box.y1],
      ],
      stroke: "#dddddd",
      width: 1,
    });
    prims.push({
      kind: "text",
      x: px,
      y: box.y0 + 18,
      text: formatTick(t),
      size: 12,
      anchor: "middle",
    });
  }
  for (const t of yTicks) {
    const py = yScale(t);
    prims.push({
      kind: "polyline",
      points: [
        [box.x0, py],
        [box.x1, py],
      ],
      stroke: "#dddddd",
      width: 1,
    });
    prims.push({
      kind: "text",
      x: box.x0 - 8,
      y: py + 4,
      text: formatTick(t),
      size: 12,
      anchor: "end",
    });
  }
  prims.push({
    kind: "polyline",
    points: [
      [box.x0, box.y1],
      [box.x0, box.y0],
      [box.x1, box.y0],
      [box.x1, box.y1],
      [box.x0, box.y1],
    ],
    stroke: "#333333",
    width: 1.2,
  });
  prims.push({
    kind: "text",
    x: (box.x0 + box.x1) / 2,
    y: HEIGHT - 14,
    text: xLabel,
    size: 14,
    anchor: "middle",
  });
  prims.push({
    kind: "text",
    x: 20,
    y: (box.y0 + box.y1) / 2,
    text: yLabel,
    size: 14,
    anchor: "middle",
    rotate: -90,
  });
}

function legend(
  prims: Primitive[],
  box: Box,
  entries: { label: string; color: string; dash?: string }[],
): void {
  const x = box.x1 - 215;
  let y = box.y1 + 16;
  for (const entry of entries) {
    prims.push({
      kind: "polyline",
      points: [
        [x, y - 4],
        [x + 26, y - 4],
      ],
      stroke: entry.color,
      width: 2,
      dash: entry.dash,
    });
    prims.push({
      kind: "text",
      x: x + 32,
      y: y,
      text: entry.label,
      size: 12,
      anchor: "start",
    });
    y += 16;
  }
}

function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const groups = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = groups.get(k);
    if (bucket) bucket.push(item);
    else groups.set(k, [item]);
  }
  return groups;
}

interface Fig2Row {
  f: number;
  dPrime: number;
  r: number;
  density: number;
  limit: number;
}

/** Density-versus-radius curves on log-log axes with exposure limit lines. */
export function buildFig2Scene(table: Table): Scene {
  requireColumns(table, FIG2_REQUIRED);
  const f = numericColumn(table, "f_ghz");
  const dPrime = numericColumn(table, "d_prime_m");
  const r = numericColumn(table, "r_m");
  const density = numericColumn(table, "s_at_1w_w_per_m2");
  const limit = numericColumn(table, "local_limit_w_per_m2");
  const rows: Fig2Row[] = table.rows.map((_, i) => ({
    f: f[i]!,
    dPrime: dPrime[i]!,
    r: r[i]!,
    density: density[i]!,
    limit: limit[i]!,
  }));
  const box = plotBox();
  const xDomain = padLog(extent(rows.map((r) => r.r)));
  const yDomain = padLog(
    extent([...rows.map((r) => r.density), ...rows.map((r) => r.limit)]),
  );
  const xScale = logScale(xDomain, [box.x0, box.x1]);
  const yScale = logScale(yDomain, [box.y0, box.y1]);
  const prims: Primitive[] = [];
  axes(
    prims,
    box,
    xScale,
    yScale,
    logTicks(xDomain[0], xDomain[1]),
    logTicks(yDomain[0], yDomain[1]),
    "distance from receiver r (m)",
    "incident power density at 1 W delivered (W/m^2)",
  );

  // one dashed limit line per frequency
  const limits = new Map<number, number>();
  for (const row of rows) limits.set(row.f, row.limit);
  for (const [f, limit] of [...limits.entries()].sort((a, b) => a[0] - b[0])) {
    const py = yScale(limit);
    prims.push({
      kind: "polyline",
      points: [
        [box.x0, py],
        [box.x1, py],
      ],
      stroke: LIMIT_COLOR,
      width: 1.4,
      dash: "6 4",
    });
    prims.push({
      kind: "text",
      x: box.x0 + 6,
      y: py - 4,
      text: `limit @ ${formatTick(f)} GHz`,
      size: 11,
      anchor: "start",
      color: LIMIT_COLOR,
    });
  }

  const curves = groupBy(rows, (r) => `${r.f}|${r.dPrime}`);
  const entries: { label: string; color: string }[] = [];
  let colorIndex = 0;
  for (const [key, curve] of curves) {
    const [f, dPrime] = key.split("|").map(Number);
    const color = PALETTE[colorIndex++ % PALETTE.length]!;
    curve.sort((a, b) => a.r - b.r);
    prims.push({
      kind: "polyline",
      points: curve.map((row) => [xScale(row.r), yScale(row.density)]),
      stroke: color,
      width: 2,
    });
    // marker where the curve crosses its limit, if it does
    for (let i = 1; i < curve.length; i++) {
      const a = curve[i - 1]!;
      const b = curve[i]!;
      const above = (row: Fig2Row) => row.density > row.limit;
      if (above(a) !== above(b)) {
        const t =
          Math.log(a.limit / a.density) / Math.log(b.density / a.density);
        const rCross = a.r * (b.r / a.r) ** t;
        prims.push({
          kind: "marker",
          cx: xScale(rCross),
          cy: yScale(a.limit),
          r: 4.5,
          fill: LIMIT_COLOR,
        });
      }
    }
    entries.push({ label: `f=${f} GHz, d'=${dPrime} m`, color });
  }
  legend(prims, box, entries);
  return { width: WIDTH, height: HEIGHT, primitives: prims };
}

interface Fig4Row {
  f: number;
  series: string;
  consumed: number;
  compliant: boolean;
}

/** Consumed power per architecture versus frequency, log y, with the
 * frequency spans where every architecture meets the exposure limit
 * shaded. */
export function buildFig4Scene(table: Table): Scene {
  requireColumns(table, FIG4_REQUIRED);
  const f = numericColumn(table, "f_ghz");
  const consumed = numericColumn(table, "p_consumed_w");
  const rows: Fig4Row[] = table.rows.map((row, i) => ({
    f: f[i]!,
    series:
      row["bits"] === "inf" ? `${row["arch"]}` : `${row["arch"]} (${row["bits"]}-bit)`,
    consumed: consumed[i]!,
    compliant: row["compliant"] === "true",
  }));
  const box = plotBox();
  const xDomain = extent(rows.map((r) => r.f));
  const yDomain = padLog(extent(rows.map((r) => r.consumed)));
  const xScale = linearScale(xDomain, [box.x0, box.x1]);
  const yScale = logScale(yDomain, [box.y0, box.y1]);
  const prims: Primitive[] = [];

  // compliance band behind everything else
  const byFrequency = groupBy(rows, (r) => String(r.f));
  const frequencies = [...byFrequency.keys()].map(Number).sort((a, b) => a - b);
  const allCompliant = frequencies.map((f) =>
    byFrequency.get(String(f))!.every((r) => r.compliant),
  );
  let bandStart: number | null = null;
  for (let i = 0; i <= frequencies.length; i++) {
    const ok = i < frequencies.length && allCompliant[i];
    if (ok && bandStart === null) bandStart = frequencies[i]!;
    if (!ok && bandStart !== null) {
      const bandEnd = frequencies[i - 1]!;
      prims.push({
        kind: "rect",
        x: xScale(bandStart),
        y: box.y1,
        w: Math.max(xScale(bandEnd) - xScale(bandStart), 2),
        h: box.y0 - box.y1,
        fill: "#2ca02c",
        opacity: 0.15,
      });
      bandStart = null;
    }
  }

  axes(
    prims,
    box,
    xScale,
    yScale,
    linearTicks(xDomain[0], xDomain[1]),
    logTicks(yDomain[0], yDomain[1]),
    "frequency (GHz)",
    "transmitter consumed power (W)",
  );

  const series = groupBy(rows, (r) => r.series);
  const entries: { label: string; color: string }[] = [];
  let colorIndex = 0;
  for (const [label, points] of series) {
    const color = PALETTE[colorIndex++ % PALETTE.length]!;
    points.sort((a, b) => a.f - b.f);
    prims.push({
      kind: "polyline",
      points: points.map((p) => [xScale(p.f), yScale(p.consumed)]),
      stroke: color,
      width: 2,
    });
    entries.push({ label, color });
  }
  entries.push({ label: "compliant band", color: "#2ca02c" });
  legend(prims, box, entries);
  return { width: WIDTH, height: HEIGHT, primitives: prims };
}
