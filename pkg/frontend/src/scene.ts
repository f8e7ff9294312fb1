/** Resolution-independent plot primitives plus axis scales and ticks. */

export type Primitive =
  | {
      kind: "polyline";
      points: [number, number][];
      stroke: string;
      width: number;
      dash?: string;
    }
  | {
      kind: "rect";
      x: number;
      y: number;
      w: number;
      h: number;
      fill: string;
      opacity?: number;
    }
  | {
      kind: "text";
      x: number;
      y: number;
      text: string;
      size: number;
      anchor?: "start" | "middle" | "end";
      color?: string;
      rotate?: number;
    }
  | { kind: "marker"; cx: number; cy: number; r: number; fill: string };

export interface Scene {
  width: number;
  height: number;
  primitives: Primitive[];
}

export interface Scale {
  (value: number): number;
  readonly domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
  return Object.assign(fn, { domain }) as Scale;
}

export function logScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error("log scale requires a positive domain");
  }
  const [r0, r1] = range;
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  const fn = (v: number) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0);
  return Object.assign(fn, { domain }) as Scale;
}

/** Round ticks at 1/2/5 multiples covering [min, max]. */
export function linearTicks(min: number, max: number, target = 6): number[] {
  if (!(max > min)) return [min];
  const rawStep = (max - min) / target;
  const magnitude = 10 ** Math.floor(Math.log10(rawStep));
  const residual = rawStep / magnitude;
  const step = magnitude * (residual > 5 ? 10 : residual > 2 ? 5 : residual > 1 ? 2 : 1);
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step * 1e-9; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

/** Decade ticks covering [min, max]. */
export function logTicks(min: number, max: number): number[] {
  const ticks: number[] = [];
  for (
    let e = Math.ceil(Math.log10(min) - 1e-9);
    e <= Math.floor(Math.log10(max) + 1e-9);
    e++
  ) {
    ticks.push(10 ** e);
  }
  return ticks.length > 0 ? ticks : [min];
}

export function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e4 || abs < 1e-3) {
    const exponent = Math.floor(Math.log10(abs));
    const mantissa = value / 10 ** exponent;
    const m = Number(mantissa.toPrecision(3));
    return m === 1 ? `1e${exponent}` : `${m}e${exponent}`;
  }
  return String(Number(value.toPrecision(6)));
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    throw new Error("cannot compute an extent of no values");
  }
  return [lo, hi];
}

export function padLog(domain: [number, number]): [number, number] {
  const [lo, hi] = domain;
  return [lo / 1.5, hi * 1.5];
}
