import { readFileSync } from "node:fs";

export function loadFixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

/** Metric cell texts per route key, parsed from rendered table HTML. */
export function parseMetricCells(html: string): Map<string, Map<string, string>> {
  const rows = new Map<string, Map<string, string>>();
  const rowRe = /<tr class="[^"]*" data-key="([^"]+)">(.*?)<\/tr>/gs;
  const cellRe = /<td class="metric" data-criterion="([a-z]+)">([^<]*)<\/td>/g;
  for (const rowMatch of html.matchAll(rowRe)) {
    const cells = new Map<string, string>();
    for (const cellMatch of rowMatch[2].matchAll(cellRe)) {
      cells.set(cellMatch[1], cellMatch[2]);
    }
    rows.set(rowMatch[1], cells);
  }
  return rows;
}

export function bestRowKey(html: string): string | null {
  const match = html.match(/<tr class="best[^"]*" data-key="([^"]+)">/);
  return match ? match[1] : null;
}
