/** Thin typed client for the gateway JSON API. */

import {
  GatewayError,
  QueryResponse,
  ScenarioRequest,
  ScenarioResponse,
} from "./types";

async function parseError(response: Response): Promise<GatewayError> {
  let detail = response.statusText;
  try {
    const payload = await response.json();
    if (payload && typeof payload.detail === "string") detail = payload.detail;
  } catch {
    // keep the status text
  }
  return { status: response.status, detail };
}

export class GatewayClient {
  constructor(private readonly baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  solveScenario(networkId: string, scenario: ScenarioRequest): Promise<ScenarioResponse> {
    return this.post<ScenarioResponse>("/scenarios", {
      network_id: networkId,
      scenario,
    });
  }

  runQuery(ontologyId: string, sparql: string): Promise<QueryResponse> {
    return this.post<QueryResponse>("/query", {
      ontology_id: ontologyId,
      sparql,
    });
  }

  async getScenario(scenarioId: string): Promise<ScenarioResponse> {
    const response = await fetch(`${this.baseUrl}/scenarios/${scenarioId}`);
    if (!response.ok) throw await parseError(response);
    const record = await response.json();
    return { scenario_id: scenarioId, result: record.result };
  }

  async exportNetwork(networkId: string): Promise<{ nodes_csv: string; edges_csv: string }> {
    const response = await fetch(`${this.baseUrl}/networks/${networkId}/export`);
    if (!response.ok) throw await parseError(response);
    return await response.json();
  }
}
