/** Deterministic SVG rendering: log-log panels, CI bands, curve markers. */

import { Panel, Point } from "./layout";

const PANEL_W = 360;
const PANEL_H = 340;
const MARGIN = { top: 44, right: 16, bottom: 52, left: 62 };
const LEGEND_H = 24;

const COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#bcbd22",
  "#7f7f7f",
];

function fmt(x: number): string {
  // fixed short representation so output is byte-stable
  return Number(x.toFixed(3)).toString();
}

function fmtTick(exp: number): string {
  return `1e${exp}`;
}

interface Scale {
  min: number;
  max: number;
  map(v: number): number;
}

function logScale(min: number, max: number, lo: number, hi: number): Scale {
  const lmin = Math.log10(min);
  const lmax = Math.log10(max);
  return {
    min,
    max,
    map: (v) => lo + ((Math.log10(v) - lmin) / (lmax - lmin)) * (hi - lo),
  };
}

function decadeTicks(min: number, max: number): number[] {
  const out: number[] = [];
  for (let e = Math.ceil(Math.log10(min) - 1e-9); e <= Math.floor(Math.log10(max) + 1e-9); e++) {
    out.push(e);
  }
  return out;
}

function pathOf(pts: Array<[number, number]>): string {
  return pts
    .map(([x, y], i) => `${i === 0 ? "M" : "L"}${fmt(x)},${fmt(y)}`)
    .join(" ");
}

function renderPanel(panel: Panel, x0: number): string {
  const innerX = x0 + MARGIN.left;
  const innerY = MARGIN.top;
  const innerW = PANEL_W - MARGIN.left - MARGIN.right;
  const innerH = PANEL_H - MARGIN.top - MARGIN.bottom;

  const pts: Point[] = panel.curves.flatMap((c) => c.points);
  const alphas = pts.map((p) => p.alpha);
  const ys = pts.flatMap((p) => [p.ler, p.ciLo, p.ciHi]).filter((v) => v > 0);
  const xMin = Math.min(...alphas) / 1.3;
  const xMax = Math.max(...alphas) * 1.3;
  const yMin = Math.min(...ys) / 2;
  const yMax = Math.min(1, Math.max(...ys) * 2);
  const sx = logScale(xMin, xMax, innerX, innerX + innerW);
  const sy = logScale(yMin, yMax, innerY + innerH, innerY);

  const parts: string[] = [];
  parts.push(
    `<rect x="${fmt(innerX)}" y="${fmt(innerY)}" width="${fmt(innerW)}" height="${fmt(innerH)}" class="frame"/>`,
  );
  parts.push(
    `<text x="${fmt(innerX + innerW / 2)}" y="${fmt(innerY - 14)}" class="title">${panel.code}</text>`,
  );
  for (const e of decadeTicks(xMin, xMax)) {
    const v = 10 ** e;
    const px = sx.map(v);
    parts.push(`<line x1="${fmt(px)}" y1="${fmt(innerY)}" x2="${fmt(px)}" y2="${fmt(innerY + innerH)}" class="grid"/>`);
    parts.push(
      `<text x="${fmt(px)}" y="${fmt(innerY + innerH + 18)}" class="tick">${fmtTick(e)}</text>`,
    );
  }
  for (const e of decadeTicks(yMin, yMax)) {
    const v = 10 ** e;
    const py = sy.map(v);
    parts.push(`<line x1="${fmt(innerX)}" y1="${fmt(py)}" x2="${fmt(innerX + innerW)}" y2="${fmt(py)}" class="grid"/>`);
    parts.push(
      `<text x="${fmt(innerX - 8)}" y="${fmt(py + 4)}" class="tick ylab">${fmtTick(e)}</text>`,
    );
  }
  parts.push(
    `<text x="${fmt(innerX + innerW / 2)}" y="${fmt(innerY + innerH + 40)}" class="axis">physical error rate &#945;</text>`,
  );
  parts.push(
    `<text transform="translate(${fmt(x0 + 16)},${fmt(innerY + innerH / 2)}) rotate(-90)" class="axis">logical error rate</text>`,
  );

  panel.curves.forEach((curve, ci) => {
    const color = COLORS[ci % COLORS.length];
    const band = [
      ...curve.points.map((p) => [sx.map(p.alpha), sy.map(p.ciHi)] as [number, number]),
      ...[...curve.points].reverse().map((p) => [sx.map(p.alpha), sy.map(p.ciLo)] as [number, number]),
    ];
    parts.push(`<path d="${pathOf(band)} Z" fill="${color}" class="band"/>`);
    const line = curve.points.map(
      (p) => [sx.map(p.alpha), sy.map(p.ler)] as [number, number],
    );
    parts.push(`<path d="${pathOf(line)}" stroke="${color}" class="curve" data-curve="${curve.label}"/>`);
    for (const p of curve.points) {
      const cx = fmt(sx.map(p.alpha));
      const cy = fmt(sy.map(p.ler));
      if (p.clamped) {
        // zero-failure point: open marker at the clamp floor
        parts.push(
          `<circle cx="${cx}" cy="${cy}" r="4" fill="#ffffff" stroke="${color}" class="marker clamped" data-source="${p.row.source}:${p.row.line}"/>`,
        );
      } else {
        parts.push(
          `<circle cx="${cx}" cy="${cy}" r="3" fill="${color}" class="marker" data-source="${p.row.source}:${p.row.line}"/>`,
        );
      }
    }
  });
  return parts.join("\n");
}

export function renderSvg(panels: Panel[]): string {
  const curves = panels[0]?.curves ?? [];
  const legendRows = Math.ceil(curves.length / 3);
  const width = PANEL_W * panels.length;
  const height = PANEL_H + LEGEND_H * legendRows + 8;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(
    `<style>
text{font-family:Helvetica,Arial,sans-serif}
.title{font-size:13px;text-anchor:middle;font-weight:bold}
.axis{font-size:12px;text-anchor:middle}
.tick{font-size:10px;text-anchor:middle;fill:#444}
.ylab{text-anchor:end}
.frame{fill:none;stroke:#222;stroke-width:1}
.grid{stroke:#ddd;stroke-width:0.5}
.band{opacity:0.18;stroke:none}
.curve{fill:none;stroke-width:1.6}
.legend{font-size:11px}
</style>`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="#ffffff"/>`);
  panels.forEach((panel, i) => parts.push(renderPanel(panel, i * PANEL_W)));
  curves.forEach((curve, ci) => {
    const color = COLORS[ci % COLORS.length];
    const lx = 16 + (ci % 3) * 180;
    const ly = PANEL_H + 14 + Math.floor(ci / 3) * LEGEND_H;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" stroke="${color}" class="curve"/>`,
    );
    parts.push(
      `<text x="${lx + 28}" y="${ly + 4}" class="legend">${curve.label}</text>`,
    );
  });
  const anyClamped = panels.some((p) =>
    p.curves.some((c) => c.points.some((pt) => pt.clamped)),
  );
  if (anyClamped) {
    parts.push(
      `<text x="${width - 16}" y="${height - 8}" class="legend" text-anchor="end">open markers: 0 failures (clamped on log axis)</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
