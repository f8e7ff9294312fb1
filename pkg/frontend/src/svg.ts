import { Primitive, Scene } from "./scene.js";

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function round(v: number): string {
  return Number(v.toFixed(2)).toString();
}

function primitiveToSvg(p: Primitive): string {
  switch (p.kind) {
    case "polyline": {
      const points = p.points.map(([x, y]) => `${round(x)},${round(y)}`).join(" ");
      const dash = p.dash ? ` stroke-dasharray="${p.dash}"` : "";
      return `<polyline points="${points}" fill="none" stroke="${p.stroke}" stroke-width="${p.width}"${dash}/>`;
    }
    case "rect": {
      const opacity = p.opacity !== undefined ? ` fill-opacity="${p.opacity}"` : "";
      return `<rect x="${round(p.x)}" y="${round(p.y)}" width="${round(p.w)}" height="${round(p.h)}" fill="${p.fill}"${opacity}/>`;
    }
    case "text": {
      const anchor = p.anchor ?? "start";
      const color = p.color ?? "#222222";
      const transform = p.rotate
        ? ` transform="rotate(${p.rotate} ${round(p.x)} ${round(p.y)})"`
        : "";
      return `<text x="${round(p.x)}" y="${round(p.y)}" font-size="${p.size}" font-family="DejaVu Sans, Helvetica, sans-serif" text-anchor="${anchor}" fill="${color}"${transform}>${escapeXml(p.text)}</text>`;
    }
    case "marker":
      return `<circle cx="${round(p.cx)}" cy="${round(p.cy)}" r="${p.r}" fill="${p.fill}"/>`;
  }
}

export function sceneToSvg(scene: Scene): string {
  const body = scene.primitives.map(primitiveToSvg).join("\n  ");
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" height="${scene.height}" viewBox="0 0 ${scene.width} ${scene.height}">`,
    `  <rect width="${scene.width}" height="${scene.height}" fill="#ffffff"/>`,
    `  ${body}`,
    `</svg>`,
    ``,
  ].join("\n");
}
