/**
 * Deterministic SVG chart: result length on a base-2 log x axis, time per
 * operation on a base-10 log y axis, one line per structure.  Identical
 * input always yields identical bytes (fixed precision, no timestamps).
 */

export interface Series {
  name: string;
  /** [log2(length+1) position via bin, nanos] pairs, bin-ordered */
  points: Array<[number, number]>;
}

export interface ChartOptions {
  title: string;
  width?: number;
  height?: number;
}

const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
];

const FONT = "12px sans-serif";

function fmt(v: number): string {
  return v.toFixed(2).replace(/\.00$/, "");
}

function pow10Label(exp: number): string {
  if (exp >= 0 && exp < 7) return String(10 ** exp);
  return `1e${exp}`;
}

export function renderChart(series: Series[], opts: ChartOptions): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 480;
  const m = { left: 70, right: 150, top: 40, bottom: 55 };
  const plotW = width - m.left - m.right;
  const plotH = height - m.top - m.bottom;

  let xMax = 1;
  let yMinExp = 1;
  let yMaxExp = 2;
  const all = series.flatMap((s) => s.points);
  if (all.length > 0) {
    xMax = Math.max(1, ...all.map(([x]) => x));
    const exps = all
      .filter(([, y]) => y > 0)
      .map(([, y]) => Math.log10(y));
    if (exps.length > 0) {
      yMinExp = Math.floor(Math.min(...exps));
      yMaxExp = Math.ceil(Math.max(...exps));
      if (yMinExp === yMaxExp) yMaxExp += 1;
    }
  }

  const xPos = (bin: number) => m.left + (bin / xMax) * plotW;
  const yPos = (ns: number) =>
    m.top + plotH - ((Math.log10(ns) - yMinExp) / (yMaxExp - yMinExp)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${m.left + plotW / 2}" y="22" style="font:14px sans-serif" text-anchor="middle">${opts.title}</text>`
  );

  // x grid: one tick per power of two (thinned when dense)
  const xStep = xMax > 24 ? 4 : xMax > 12 ? 2 : 1;
  for (let b = 0; b <= xMax; b += xStep) {
    const x = fmt(xPos(b));
    parts.push(
      `<line x1="${x}" y1="${m.top}" x2="${x}" y2="${m.top + plotH}" stroke="#dddddd" stroke-width="1"/>`
    );
    const label = b === 0 ? "0" : `2^${b - 1}`;
    parts.push(
      `<text x="${x}" y="${m.top + plotH + 16}" style="font:${FONT}" text-anchor="middle">${label}</text>`
    );
  }
  // y grid: one tick per decade
  for (let e = yMinExp; e <= yMaxExp; e++) {
    const y = fmt(yPos(10 ** e));
    parts.push(
      `<line x1="${m.left}" y1="${y}" x2="${m.left + plotW}" y2="${y}" stroke="#dddddd" stroke-width="1"/>`
    );
    parts.push(
      `<text x="${m.left - 8}" y="${y}" style="font:${FONT}" text-anchor="end" dominant-baseline="middle">${pow10Label(e)}</text>`
    );
  }
  // axes
  parts.push(
    `<rect x="${m.left}" y="${m.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#333333"/>`
  );
  parts.push(
    `<text x="${m.left + plotW / 2}" y="${height - 12}" style="font:${FONT}" text-anchor="middle">result length (base-2 log bins)</text>`
  );
  parts.push(
    `<text x="18" y="${m.top + plotH / 2}" style="font:${FONT}" text-anchor="middle" transform="rotate(-90 18 ${m.top + plotH / 2})">time per operation, ns (base-10 log)</text>`
  );

  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const pts = s.points.filter(([, y]) => y > 0);
    if (pts.length > 0) {
      const path = pts
        .map(([b, ns], k) => `${k === 0 ? "M" : "L"}${fmt(xPos(b))},${fmt(yPos(ns))}`)
        .join(" ");
      parts.push(`<path d="${path}" fill="none" stroke="${color}" stroke-width="1.5"/>`);
      for (const [b, ns] of pts) {
        parts.push(
          `<circle cx="${fmt(xPos(b))}" cy="${fmt(yPos(ns))}" r="2.5" fill="${color}"/>`
        );
      }
    }
    // legend entry (also for empty series, so every structure is listed)
    const ly = m.top + 10 + i * 18;
    parts.push(
      `<line x1="${width - m.right + 12}" y1="${ly}" x2="${width - m.right + 34}" y2="${ly}" stroke="${color}" stroke-width="1.5"/>`
    );
    parts.push(
      `<text x="${width - m.right + 40}" y="${ly + 4}" style="font:${FONT}">${s.name}</text>`
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
