#!/usr/bin/env node
/**
 * plot --csv bench.csv --out charts/
 */

import { CsvFormatError } from "./csv";
import { render } from "./plot";

function usage(): never {
  console.error("usage: cadeque-plot --csv bench.csv --out charts/ [--structures a,b]");
  process.exit(2);
}

export function main(argv: string[]): number {
  let csv: string | undefined;
  let out: string | undefined;
  let structures: string[] | undefined;
  for (let i = 0; i < argv.length; i++) {
    switch (argv[i]) {
      case "--csv":
        csv = argv[++i];
        break;
      case "--out":
        out = argv[++i];
        break;
      case "--structures":
        structures = (argv[++i] ?? "").split(",").filter((s) => s.length > 0);
        break;
      default:
        usage();
    }
  }
  if (!csv || !out) usage();
  try {
    const written = render({ csvPath: csv, outDir: out, structures });
    for (const f of written) console.log(f);
    return 0;
  } catch (err) {
    if (err instanceof CsvFormatError) {
      console.error(`bench CSV parse error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
