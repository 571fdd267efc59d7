import assert from "node:assert/strict";
import { test } from "node:test";
import * as fs from "fs";
import * as os from "os";
import * as path from "path";
import { renderChart } from "./chart";
import { OPS, render, seriesFor } from "./plot";
import { parseBenchCsv } from "./csv";

const HEADER = "structure,op,bin,length,nanos_per_op,work_counter";

function sampleCsv(): string {
  const lines = [HEADER];
  for (const s of ["cadeque", "list"]) {
    for (const op of OPS) {
      for (let b = 1; b <= 10; b++) {
        const ns = s === "list" && op === "concat" ? 50 * 2 ** b : 40 + b;
        lines.push(`${s},${op},${b},${2 ** b - 1},${ns},${s === "cadeque" ? 22 : 0}`);
      }
    }
  }
  return lines.join("\n") + "\n";
}

function tmpdir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), "cadeque-plot-"));
}

test("renders five panels", () => {
  const dir = tmpdir();
  const csv = path.join(dir, "bench.csv");
  fs.writeFileSync(csv, sampleCsv());
  const written = render({ csvPath: csv, outDir: path.join(dir, "charts") });
  assert.equal(written.length, 5);
  for (const op of OPS) {
    const file = path.join(dir, "charts", `${op}.svg`);
    assert.ok(fs.existsSync(file), file);
    const svg = fs.readFileSync(file, "utf8");
    assert.match(svg, /<svg /);
    assert.match(svg, /base-2 log bins/);
    assert.match(svg, /base-10 log/);
    // one legend entry per structure
    assert.match(svg, />cadeque</);
    assert.match(svg, />list</);
  }
});

test("re-rendering the same CSV is byte-stable", () => {
  const dir = tmpdir();
  const csv = path.join(dir, "bench.csv");
  fs.writeFileSync(csv, sampleCsv());
  render({ csvPath: csv, outDir: path.join(dir, "a") });
  render({ csvPath: csv, outDir: path.join(dir, "b") });
  for (const op of OPS) {
    const a = fs.readFileSync(path.join(dir, "a", `${op}.svg`));
    const b = fs.readFileSync(path.join(dir, "b", `${op}.svg`));
    assert.ok(a.equals(b), `${op}.svg differs between renders`);
  }
});

test("header-only CSV yields five empty-axes panels", () => {
  const dir = tmpdir();
  const csv = path.join(dir, "bench.csv");
  fs.writeFileSync(csv, HEADER + "\n");
  const written = render({ csvPath: csv, outDir: path.join(dir, "charts") });
  assert.equal(written.length, 5);
  for (const f of written) {
    const svg = fs.readFileSync(f, "utf8");
    assert.match(svg, /<rect[^>]*stroke="#333333"/); // axes frame present
    assert.doesNotMatch(svg, /<path /); // no series drawn
  }
});

test("series are bin-ordered and log-scaled sensibly", () => {
  const rows = parseBenchCsv(sampleCsv());
  const series = seriesFor(rows, "concat");
  assert.deepEqual(series.map((s) => s.name), ["cadeque", "list"]);
  const bins = series[1].points.map(([b]) => b);
  assert.deepEqual(bins, [...bins].sort((a, b) => a - b));
  const svg = renderChart(series, { title: "t" });
  // list concat spans decades: multiple y-axis decade labels appear
  assert.match(svg, />100</);
  assert.match(svg, />10000</);
});

test("growing curve sits above flat curve at the right edge", () => {
  const rows = parseBenchCsv(sampleCsv());
  const series = seriesFor(rows, "concat");
  const flat = series[0].points.at(-1)![1];
  const grown = series[1].points.at(-1)![1];
  assert.ok(grown > 100 * flat);
});
