/** CSV schema of the simulation sweep output and its validation. */

import Papa from "papaparse";
import { z } from "zod";

export const CSV_HEADER =
  "code,decoder,mode,alpha,iters,trials,failures,ler,ci_lo,ci_hi,seed";

export const rowSchema = z
  .object({
    code: z.string().min(1),
    decoder: z.string().min(1),
    mode: z.string().min(1),
    alpha: z.number().gt(0).lt(0.5),
    iters: z.number().int().positive(),
    trials: z.number().int().positive(),
    failures: z.number().int().nonnegative(),
    ler: z.number().min(0).max(1),
    ci_lo: z.number().min(0).max(1),
    ci_hi: z.number().min(0).max(1),
    seed: z.number().int(),
  })
  .refine((r) => r.failures <= r.trials, {
    message: "failures exceed trials",
  })
  .refine((r) => r.ci_lo <= r.ler && r.ler <= r.ci_hi, {
    message: "point estimate outside its confidence interval",
  })
  .refine((r) => Math.abs(r.ler - r.failures / r.trials) < 1e-9, {
    message: "ler does not equal failures/trials",
  });

export type SweepRow = z.infer<typeof rowSchema> & {
  /** source file and 1-based data line for point -> row verification */
  source: string;
  line: number;
};

export class SchemaError extends Error {}

const NUMERIC = new Set([
  "alpha",
  "iters",
  "trials",
  "failures",
  "ler",
  "ci_lo",
  "ci_hi",
  "seed",
]);

/** Parse one CSV document (exact header required). */
export function parseCsv(text: string, source: string): SweepRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new SchemaError(`${source}: CSV parse error at row ${e.row}: ${e.message}`);
  }
  const fields = parsed.meta.fields ?? [];
  if (fields.join(",") !== CSV_HEADER) {
    throw new SchemaError(
      `${source}: header mismatch\n  expected: ${CSV_HEADER}\n  got:      ${fields.join(",")}`,
    );
  }
  return parsed.data.map((raw, i) => {
    const rec: Record<string, unknown> = {};
    for (const [key, value] of Object.entries(raw)) {
      rec[key] = NUMERIC.has(key) ? Number(value) : value;
    }
    const check = rowSchema.safeParse(rec);
    if (!check.success) {
      const issue = check.error.issues[0];
      throw new SchemaError(
        `${source} line ${i + 2}: ${issue.path.join(".") || "row"}: ${issue.message}`,
      );
    }
    return { ...check.data, source, line: i + 2 };
  });
}
