/**
 * DOM wiring for the what-if explorer and the CQ console.
 *
 * All computation lives on the gateway; this module only moves form state
 * into requests and responses into the pure renderers in views.ts. Stale
 * responses (superseded submissions) are dropped via the sequencer.
 */

import { GatewayClient } from "./api";
import {
  addDisruption,
  canSubmit,
  defaultFormState,
  removeDisruption,
  RequestSequencer,
  ScenarioFormState,
  setWeight,
  toggleMode,
  toScenarioRequest,
  unknownDisruptionSegments,
  validateForm,
} from "./state";
import { Criterion, GatewayError, Mode, ScenarioResponse } from "./types";
import {
  buildResultView,
  buildScatter,
  renderErrorBanner,
  renderQueryTable,
  renderResultTable,
  renderRouteDetail,
  renderScatterSvg,
  ResultViewState,
} from "./views";

const GATEWAY_URL =
  (window as unknown as { ONTOFREIGHT_GATEWAY?: string }).ONTOFREIGHT_GATEWAY ??
  "http://127.0.0.1:8080";
const NETWORK_ID =
  (window as unknown as { ONTOFREIGHT_NETWORK?: string }).ONTOFREIGHT_NETWORK ??
  "demo";

const client = new GatewayClient(GATEWAY_URL);
const sequencer = new RequestSequencer();

let form: ScenarioFormState = defaultFormState();
let currentView: ResultViewState | null = null;
let previousView: ResultViewState | null = null;
let knownSegments: ReadonlySet<string> = new Set();
let scatterX: Criterion = "ghg";
let scatterY: Criterion = "time";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function refreshFormPanel(): void {
  const problems = validateForm(form);
  const unknown = unknownDisruptionSegments(form, knownSegments);
  const messages = [...problems, ...unknown.map((s) => `unknown segment id: ${s}`)];
  el("form-problems").innerHTML = messages
    .map((m) => `<li>${m}</li>`)
    .join("");
  (el<HTMLButtonElement>("submit")).disabled =
    !canSubmit(form) || unknown.length > 0;
  el("disruption-list").innerHTML = form.disruptions
    .map(
      (d) =>
        `<li data-segment="${d.segment}">${d.segment} ` +
        `${d.closed ? "closed" : `×${String(d.multiplier)}`} ` +
        `<button class="remove-disruption" data-segment="${d.segment}">remove</button></li>`,
    )
    .join("");
}

function renderView(): void {
  if (!currentView) return;
  el("result-table").innerHTML = renderResultTable(currentView);
  el("scatter").innerHTML = renderScatterSvg(
    buildScatter(currentView, scatterX, scatterY),
  );
  el("config-snapshot").textContent = JSON.stringify(
    currentView.provenance,
    null,
    2,
  );
  if (previousView) {
    el("previous-result").innerHTML = renderResultTable(previousView);
  }
  const bestRow = currentView.rows.find((row) => row.key === currentView!.best);
  el("route-detail").innerHTML = bestRow ? renderRouteDetail(bestRow) : "";
}

async function submitScenario(): Promise<void> {
  if (!canSubmit(form)) return;
  const seq = sequencer.next();
  el("result-status").textContent = "solving…";
  try {
    const response: ScenarioResponse = await client.solveScenario(
      NETWORK_ID,
      toScenarioRequest(form),
    );
    if (!sequencer.isCurrent(seq)) return; // superseded submission
    previousView = currentView;
    currentView = buildResultView(response);
    el("result-status").textContent =
      currentView.status === "ok" ? `scenario ${currentView.scenarioId}` : "";
    renderView();
  } catch (error) {
    if (!sequencer.isCurrent(seq)) return;
    const gatewayError = error as GatewayError;
    el("result-status").innerHTML = renderErrorBanner(
      gatewayError.detail ?? String(error),
    );
  }
}

async function runCq(): Promise<void> {
  const ontologyId = (el<HTMLInputElement>("cq-ontology")).value;
  const sparql = (el<HTMLTextAreaElement>("cq-text")).value;
  try {
    const response = await client.runQuery(ontologyId, sparql);
    el("cq-results").innerHTML = renderQueryTable(response);
  } catch (error) {
    const gatewayError = error as GatewayError;
    el("cq-results").innerHTML = renderErrorBanner(
      gatewayError.detail ?? String(error),
    );
  }
}

function bind(): void {
  el<HTMLInputElement>("origin").addEventListener("input", (event) => {
    form = { ...form, origin: (event.target as HTMLInputElement).value };
    refreshFormPanel();
  });
  el<HTMLInputElement>("destination").addEventListener("input", (event) => {
    form = { ...form, destination: (event.target as HTMLInputElement).value };
    refreshFormPanel();
  });
  el<HTMLSelectElement>("method").addEventListener("change", (event) => {
    form = {
      ...form,
      method: (event.target as HTMLSelectElement).value as
        | "weighted"
        | "lexicographic"
        | "pareto",
    };
    refreshFormPanel();
  });
  for (const criterion of ["ghg", "cost", "time", "fuel", "distance"] as const) {
    el<HTMLInputElement>(`weight-${criterion}`).addEventListener(
      "input",
      (event) => {
        form = setWeight(
          form,
          criterion,
          Number((event.target as HTMLInputElement).value),
        );
        refreshFormPanel();
      },
    );
  }
  for (const mode of ["road", "rail", "water"] as const) {
    el<HTMLInputElement>(`mode-${mode}`).addEventListener("change", () => {
      form = toggleMode(form, mode as Mode);
      refreshFormPanel();
    });
  }
  el<HTMLInputElement>("payload").addEventListener("input", (event) => {
    form = {
      ...form,
      payloadTonnes: Number((event.target as HTMLInputElement).value),
    };
    refreshFormPanel();
  });
  el<HTMLButtonElement>("add-disruption").addEventListener("click", () => {
    const segment = (el<HTMLInputElement>("disruption-segment")).value.trim();
    if (!segment) return;
    const closed = (el<HTMLInputElement>("disruption-closed")).checked;
    const multiplier = Number(
      (el<HTMLInputElement>("disruption-multiplier")).value || "1",
    );
    form = addDisruption(form, { segment, closed, multiplier });
    refreshFormPanel();
  });
  el("disruption-list").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("remove-disruption")) {
      form = removeDisruption(form, target.dataset.segment ?? "");
      refreshFormPanel();
    }
  });
  el<HTMLSelectElement>("scatter-x").addEventListener("change", (event) => {
    scatterX = (event.target as HTMLSelectElement).value as Criterion;
    renderView();
  });
  el<HTMLSelectElement>("scatter-y").addEventListener("change", (event) => {
    scatterY = (event.target as HTMLSelectElement).value as Criterion;
    renderView();
  });
  el<HTMLButtonElement>("submit").addEventListener("click", () => {
    void submitScenario();
  });
  el<HTMLButtonElement>("cq-run").addEventListener("click", () => {
    void runCq();
  });
}

async function loadSegments(): Promise<void> {
  try {
    const exported = await client.exportNetwork(NETWORK_ID);
    const ids = exported.edges_csv
      .split("\n")
      .slice(1)
      .map((line) => line.split(",")[0])
      .filter(Boolean);
    knownSegments = new Set(ids);
  } catch {
    knownSegments = new Set();
  }
}

document.addEventListener("DOMContentLoaded", () => {
  bind();
  refreshFormPanel();
  void loadSegments();
});
