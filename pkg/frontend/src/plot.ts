/**
 * Turn one bench CSV into five SVG panels, one per operation kind.
 */

import * as fs from "fs";
import * as path from "path";
import { BenchRow, parseBenchCsv } from "./csv";
import { renderChart, Series } from "./chart";

export const OPS = ["push", "pop", "inject", "eject", "concat"] as const;

export interface ChartSpec {
  csvPath: string;
  outDir: string;
  ops?: string[];
  structures?: string[];
}

export function seriesFor(rows: BenchRow[], op: string, structures?: string[]): Series[] {
  const names = structures ?? [...new Set(rows.map((r) => r.structure))].sort();
  return names.map((name) => {
    const pts = rows
      .filter((r) => r.structure === name && r.op === op)
      .sort((a, b) => a.bin - b.bin)
      .map((r): [number, number] => [r.bin, r.nanosPerOp]);
    return { name, points: pts };
  });
}

export function render(spec: ChartSpec): string[] {
  const text = fs.readFileSync(spec.csvPath, "utf8");
  const rows = parseBenchCsv(text);
  const keep = spec.structures;
  const filtered = keep ? rows.filter((r) => keep.includes(r.structure)) : rows;
  fs.mkdirSync(spec.outDir, { recursive: true });
  const written: string[] = [];
  for (const op of spec.ops ?? [...OPS]) {
    const svg = renderChart(seriesFor(filtered, op, keep), {
      title: `${op}: time per operation vs result length`,
    });
    const file = path.join(spec.outDir, `${op}.svg`);
    fs.writeFileSync(file, svg);
    written.push(file);
  }
  return written;
}
