/** Shared helpers for building synthetic sweep CSVs in tests. */

export const HEADER =
  "code,decoder,mode,alpha,iters,trials,failures,ler,ci_lo,ci_hi,seed";

export interface RowSpec {
  code?: string;
  decoder?: string;
  mode?: string;
  alpha?: number;
  iters?: number;
  trials?: number;
  failures?: number;
  ler?: number;
  ci_lo?: number;
  ci_hi?: number;
  seed?: number;
}

export function csvLine(spec: RowSpec = {}): string {
  const trials = spec.trials ?? 1000;
  const failures = spec.failures ?? 100;
  const ler = spec.ler ?? failures / trials;
  const ci_lo = spec.ci_lo ?? Math.max(0, ler - 0.01);
  const ci_hi = spec.ci_hi ?? Math.min(1, ler + 0.01);
  return [
    spec.code ?? "codeA",
    spec.decoder ?? "iso",
    spec.mode ?? "none",
    spec.alpha ?? 0.03,
    spec.iters ?? 50,
    trials,
    failures,
    ler,
    ci_lo,
    ci_hi,
    spec.seed ?? 0,
  ].join(",");
}

export function makeCsv(rows: RowSpec[]): string {
  return [HEADER, ...rows.map(csvLine)].join("\n") + "\n";
}

/** 9 curves (3 modes x 3 iteration budgets) x 3 alphas for one code. */
export function fullPanelRows(code: string): RowSpec[] {
  const rows: RowSpec[] = [];
  for (const mode of ["none", "block", "edge"]) {
    for (const iters of [10, 20, 50]) {
      for (const alpha of [0.01, 0.02, 0.03]) {
        rows.push({
          code,
          mode,
          iters,
          alpha,
          trials: 1000,
          failures: Math.round(1000 * alpha * (iters / 50)),
        });
      }
    }
  }
  return rows;
}
