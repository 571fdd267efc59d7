/**
 * Strict reader for the bench CSV contract:
 *   structure,op,bin,length,nanos_per_op,work_counter
 * Unknown or missing columns are reported by name.
 */

export interface BenchRow {
  structure: string;
  op: string;
  bin: number;
  length: number;
  nanosPerOp: number;
  workCounter: number;
}

export const EXPECTED_HEADER = [
  "structure",
  "op",
  "bin",
  "length",
  "nanos_per_op",
  "work_counter",
];

export class CsvFormatError extends Error {}

function splitLine(line: string): string[] {
  // the contract needs no quoting; reject embedded quotes outright
  if (line.includes('"')) {
    throw new CsvFormatError(`quoted fields are not part of the bench CSV contract: ${line}`);
  }
  return line.split(",");
}

export function parseBenchCsv(text: string): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvFormatError("empty file: expected a bench CSV header");
  }
  const header = splitLine(lines[0]);
  for (const col of EXPECTED_HEADER) {
    if (!header.includes(col)) {
      throw new CsvFormatError(`missing column: ${col}`);
    }
  }
  for (const col of header) {
    if (!EXPECTED_HEADER.includes(col)) {
      throw new CsvFormatError(`unexpected column: ${col}`);
    }
  }
  const idx = EXPECTED_HEADER.map((c) => header.indexOf(c));
  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = splitLine(lines[i]);
    if (parts.length !== header.length) {
      throw new CsvFormatError(`row ${i + 1} has ${parts.length} fields, expected ${header.length}`);
    }
    const get = (k: number) => parts[idx[k]];
    const num = (k: number, name: string): number => {
      const v = Number(get(k));
      if (!Number.isFinite(v)) {
        throw new CsvFormatError(`row ${i + 1}: column ${name} is not a number: ${get(k)}`);
      }
      return v;
    };
    rows.push({
      structure: get(0),
      op: get(1),
      bin: num(2, "bin"),
      length: num(3, "length"),
      nanosPerOp: num(4, "nanos_per_op"),
      workCounter: num(5, "work_counter"),
    });
  }
  return rows;
}
