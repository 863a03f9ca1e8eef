/** plot_ler command line: sweep CSV in, deterministic figure out. */

import { readFileSync, writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { parseCsv, SchemaError, SweepRow } from "./schema";
import { buildPanels, SelectionError, verifyMapping } from "./layout";
import { renderSvg } from "./svg";

export interface CliResult {
  code: number;
  message?: string;
}

export async function run(argv: string[]): Promise<CliResult> {
  const args = await yargs(argv)
    .option("csv", { type: "string", array: true, demandOption: true })
    .option("out", { type: "string", demandOption: true })
    .option("format", {
      type: "string",
      choices: ["png", "svg"] as const,
      default: "svg",
    })
    .option("verify", {
      type: "boolean",
      default: false,
      describe: "emit the point -> CSV row mapping as JSON next to the image",
    })
    .strict()
    .fail((msg) => {
      throw new SchemaError(msg);
    })
    .parse();

  const rows: SweepRow[] = [];
  for (const path of args.csv) {
    rows.push(...parseCsv(readFileSync(path, "utf-8"), path));
  }
  const panels = buildPanels(rows);
  const svg = renderSvg(panels);
  if (args.format === "svg") {
    writeFileSync(args.out, svg);
  } else {
    const sharp = (await import("sharp")).default;
    const png = await sharp(Buffer.from(svg)).png().toBuffer();
    writeFileSync(args.out, png);
  }
  let message = `wrote ${panels.length} panel(s) to ${args.out}`;
  if (args.verify) {
    const records = verifyMapping(panels);
    const verifyPath = `${args.out}.verify.json`;
    writeFileSync(verifyPath, JSON.stringify(records, null, 2) + "\n");
    if (records.length !== rows.length) {
      return {
        code: 1,
        message: `verification failed: ${records.length} points for ${rows.length} rows`,
      };
    }
    message += `; verified ${records.length} point(s) -> ${verifyPath}`;
  }
  return { code: 0, message };
}

export async function main(): Promise<void> {
  try {
    const result = await run(hideBin(process.argv));
    if (result.message) console.log(result.message);
    process.exitCode = result.code;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof SelectionError) {
      console.error(`error: ${err.message}`);
      process.exitCode = 2;
    } else {
      throw err;
    }
  }
}
