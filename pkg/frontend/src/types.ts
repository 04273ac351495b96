/**
 * Wire types mirroring the gateway JSON API. The UI never computes metrics:
 * every number shown on screen is copied from one of these fields.
 */

export type Criterion = "ghg" | "cost" | "time" | "fuel" | "distance";

export const CRITERIA: Criterion[] = ["ghg", "cost", "time", "fuel", "distance"];

export type Mode = "road" | "rail" | "water";

export const MODES: Mode[] = ["road", "rail", "water"];

export type Method = "weighted" | "lexicographic" | "pareto";

export interface RouteMetrics {
  ghg: number;
  cost: number;
  time: number;
  fuel: number;
  distance: number;
}

export interface ScenarioRow {
  key: string;
  nodes: string[];
  edges: string[];
  modes: string[];
  transfers: number;
  metrics: RouteMetrics;
  normalized: Partial<RouteMetrics>;
  score: number | null;
}

export interface ScenarioResultPayload {
  status: "ok" | "unreachable";
  rows: ScenarioRow[];
  ranking: string[];
  pareto_front: string[];
  best: string | null;
  provenance: Record<string, unknown>;
}

export interface ScenarioResponse {
  scenario_id: string;
  result: ScenarioResultPayload;
}

export interface QueryResponse {
  columns: string[];
  rows: Record<string, string | null>[];
}

export interface DisruptionEdit {
  segment: string;
  closed: boolean;
  multiplier: number;
}

export interface ScenarioRequest {
  origin: string;
  destination: string;
  method: Method;
  weights: Partial<Record<Criterion, number>>;
  lex_order?: Criterion[];
  constraints: {
    max_hops: number;
    detour_factor: number;
    allowed_modes: Mode[];
    max_transfers: number;
    disruptions: DisruptionEdit[];
    payload_tonnes: number;
  };
}

export interface GatewayError {
  status: number;
  detail: string;
}
