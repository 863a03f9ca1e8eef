/** Grouping of sweep rows into panels (per code) and curves (mode, iters). */

import { SweepRow } from "./schema";

export class SelectionError extends Error {}

export interface Point {
  row: SweepRow;
  alpha: number;
  ler: number;
  ciLo: number;
  ciHi: number;
  /** true when failures == 0 and the point is drawn at the clamp floor */
  clamped: boolean;
}

export interface Curve {
  mode: string;
  iters: number;
  label: string;
  points: Point[];
}

export interface Panel {
  code: string;
  curves: Curve[];
}

/** Floor used for zero-failure points on the log axis: 1/(10 * trials). */
export function clampFloor(trials: number): number {
  return 0.1 / trials;
}

export function buildPanels(rows: SweepRow[]): Panel[] {
  if (rows.length === 0) {
    throw new SelectionError("no rows selected; nothing to plot");
  }
  const byCode = new Map<string, SweepRow[]>();
  for (const row of rows) {
    const list = byCode.get(row.code) ?? [];
    list.push(row);
    byCode.set(row.code, list);
  }
  const panels: Panel[] = [];
  for (const code of [...byCode.keys()].sort()) {
    const curves = new Map<string, Curve>();
    for (const row of byCode.get(code)!) {
      const key = `${row.mode}\u0000${row.iters}`;
      let curve = curves.get(key);
      if (!curve) {
        curve = {
          mode: row.mode,
          iters: row.iters,
          label: `${row.mode}, I=${row.iters}`,
          points: [],
        };
        curves.set(key, curve);
      }
      const clamped = row.failures === 0;
      const floor = clampFloor(row.trials);
      curve.points.push({
        row,
        alpha: row.alpha,
        ler: clamped ? floor : row.ler,
        ciLo: Math.max(row.ci_lo, floor),
        ciHi: Math.max(row.ci_hi, floor),
        clamped,
      });
    }
    const sorted = [...curves.values()].sort(
      (a, b) => a.mode.localeCompare(b.mode) || a.iters - b.iters,
    );
    for (const curve of sorted) {
      curve.points.sort((a, b) => a.alpha - b.alpha);
    }
    panels.push({ code, curves: sorted });
  }
  return panels;
}

/** Point -> CSV row mapping, one record per plotted point. */
export interface VerifyRecord {
  panel: string;
  curve: string;
  alpha: number;
  plotted_ler: number;
  clamped: boolean;
  source: string;
  line: number;
}

export function verifyMapping(panels: Panel[]): VerifyRecord[] {
  const records: VerifyRecord[] = [];
  for (const panel of panels) {
    for (const curve of panel.curves) {
      for (const pt of curve.points) {
        records.push({
          panel: panel.code,
          curve: curve.label,
          alpha: pt.alpha,
          plotted_ler: pt.ler,
          clamped: pt.clamped,
          source: pt.row.source,
          line: pt.row.line,
        });
      }
    }
  }
  return records;
}
