/**
 * Pure view-model builders and HTML renderers.
 *
 * Metric cells are rendered with String(value) straight from the gateway
 * response, so every displayed number is byte-traceable to a response
 * field; the contract tests enforce this.
 */

import {
  Criterion,
  CRITERIA,
  QueryResponse,
  ScenarioResponse,
  ScenarioRow,
} from "./types";

export interface ResultViewState {
  status: "ok" | "unreachable";
  scenarioId: string;
  best: string | null;
  front: ReadonlySet<string>;
  rows: ScenarioRow[]; // ranking order
  provenance: Record<string, unknown>;
}

export interface ScatterPoint {
  key: string;
  x: number;
  y: number;
  onFront: boolean;
  isBest: boolean;
}

export function buildResultView(response: ScenarioResponse): ResultViewState {
  const result = response.result;
  const byKey = new Map(result.rows.map((row) => [row.key, row]));
  const ordered: ScenarioRow[] = [];
  for (const key of result.ranking) {
    const row = byKey.get(key);
    if (row) ordered.push(row);
  }
  for (const row of result.rows) {
    if (!result.ranking.includes(row.key)) ordered.push(row);
  }
  return {
    status: result.status,
    scenarioId: response.scenario_id,
    best: result.best,
    front: new Set(result.pareto_front),
    rows: ordered,
    provenance: result.provenance,
  };
}

export function buildScatter(
  view: ResultViewState,
  xAxis: Criterion = "ghg",
  yAxis: Criterion = "time",
): ScatterPoint[] {
  return view.rows.map((row) => ({
    key: row.key,
    x: row.metrics[xAxis],
    y: row.metrics[yAxis],
    onFront: view.front.has(row.key),
    isBest: row.key === view.best,
  }));
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Attribute-context escaping: route keys keep their ">" separators. */
export function escapeAttr(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/"/g, "&quot;");
}

export const EMPTY_STATE_MESSAGE =
  "No route connects this origin and destination under the current constraints.";

export function renderResultTable(view: ResultViewState): string {
  if (view.status === "unreachable" || view.rows.length === 0) {
    return `<p class="empty-state">${EMPTY_STATE_MESSAGE}</p>`;
  }
  const header = ["route", "modes", "transfers", ...CRITERIA, "score"]
    .map((name) => `<th>${name}</th>`)
    .join("");
  const body = view.rows
    .map((row) => {
      const classes = [
        row.key === view.best ? "best" : "",
        view.front.has(row.key) ? "front" : "",
      ]
        .filter(Boolean)
        .join(" ");
      const metricCells = CRITERIA.map(
        (c) => `<td class="metric" data-criterion="${c}">${String(row.metrics[c])}</td>`,
      ).join("");
      const score = row.score === null ? "" : String(row.score);
      return (
        `<tr class="${classes}" data-key="${escapeAttr(row.key)}">` +
        `<td>${escapeHtml(row.nodes.join(" → "))}</td>` +
        `<td>${escapeHtml(row.modes.join(", "))}</td>` +
        `<td>${String(row.transfers)}</td>` +
        metricCells +
        `<td class="score">${score}</td></tr>`
      );
    })
    .join("");
  return `<table class="results"><thead><tr>${header}</tr></thead><tbody>${body}</tbody></table>`;
}

export function renderRouteDetail(row: ScenarioRow): string {
  const legs = row.nodes
    .map((node, i) =>
      i < row.modes.length
        ? `${escapeHtml(node)} —[${escapeHtml(row.modes[i])}]→`
        : escapeHtml(node),
    )
    .join(" ");
  const breakdown = CRITERIA.map(
    (c) =>
      `<dt>${c}</dt><dd class="metric" data-criterion="${c}">${String(row.metrics[c])}</dd>`,
  ).join("");
  return (
    `<section class="route-detail" data-key="${escapeAttr(row.key)}">` +
    `<p class="legs">${legs}</p>` +
    `<p class="transfers">transfers: ${String(row.transfers)}</p>` +
    `<dl class="metrics">${breakdown}</dl></section>`
  );
}

export function renderScatterSvg(
  points: ScatterPoint[],
  width = 420,
  height = 300,
): string {
  if (points.length === 0) {
    return `<svg width="${width}" height="${height}"></svg>`;
  }
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const pad = 16;
  const sx = (x: number) =>
    xMax === xMin ? width / 2 : pad + ((x - xMin) / (xMax - xMin)) * (width - 2 * pad);
  const sy = (y: number) =>
    yMax === yMin
      ? height / 2
      : height - pad - ((y - yMin) / (yMax - yMin)) * (height - 2 * pad);
  const circles = points
    .map((p) => {
      const cls = [p.onFront ? "front" : "dominated", p.isBest ? "best" : ""]
        .filter(Boolean)
        .join(" ");
      return (
        `<circle class="${cls}" data-key="${escapeAttr(p.key)}" ` +
        `cx="${sx(p.x).toFixed(1)}" cy="${sy(p.y).toFixed(1)}" ` +
        `r="${p.isBest ? 6 : 4}"/>`
      );
    })
    .join("");
  return `<svg width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">${circles}</svg>`;
}

export function renderQueryTable(response: QueryResponse): string {
  const header = response.columns.map((c) => `<th>${escapeHtml(c)}</th>`).join("");
  const body = response.rows
    .map((row) => {
      const cells = response.columns
        .map((c) => `<td>${row[c] === null ? "" : escapeHtml(String(row[c]))}</td>`)
        .join("");
      return `<tr>${cells}</tr>`;
    })
    .join("");
  const count = `<p class="row-count">${String(response.rows.length)} rows</p>`;
  return `${count}<table class="bindings"><thead><tr>${header}</tr></thead><tbody>${body}</tbody></table>`;
}

export function renderErrorBanner(detail: string): string {
  return `<div class="error-banner">${escapeHtml(detail)}</div>`;
}
