/**
 * Scenario form state: validation, request building, and the sequence
 * guard that discards stale in-flight responses.
 */

import {
  CRITERIA,
  Criterion,
  DisruptionEdit,
  Method,
  Mode,
  MODES,
  ScenarioRequest,
} from "./types";

export interface ScenarioFormState {
  origin: string;
  destination: string;
  method: Method;
  weights: Record<Criterion, number>;
  lexOrder: Criterion[];
  modes: Record<Mode, boolean>;
  disruptions: DisruptionEdit[];
  payloadTonnes: number;
  maxHops: number;
  detourFactor: number;
  maxTransfers: number;
}

export function defaultFormState(): ScenarioFormState {
  return {
    origin: "",
    destination: "",
    method: "weighted",
    weights: { ghg: 0.5, cost: 0.5, time: 0.5, fuel: 0, distance: 0 },
    lexOrder: ["ghg"],
    modes: { road: true, rail: true, water: true },
    disruptions: [],
    payloadTonnes: 1.0,
    maxHops: 8,
    detourFactor: 2.0,
    maxTransfers: 3,
  };
}

/** Human-readable blockers; an empty list means the form can be submitted. */
export function validateForm(state: ScenarioFormState): string[] {
  const problems: string[] = [];
  if (!state.origin) problems.push("pick an origin hub");
  if (!state.destination) problems.push("pick a destination hub");
  if (state.origin && state.origin === state.destination) {
    problems.push("origin and destination must differ");
  }
  if (state.method === "weighted") {
    const positive = CRITERIA.some((c) => state.weights[c] > 0);
    if (!positive) problems.push("weighted method needs a positive weight");
  }
  if (state.method === "lexicographic" && state.lexOrder.length === 0) {
    problems.push("lexicographic method needs a criterion order");
  }
  if (!MODES.some((m) => state.modes[m])) {
    problems.push("allow at least one mode");
  }
  if (!(state.payloadTonnes > 0)) {
    problems.push("payload must be positive");
  }
  return problems;
}

export function canSubmit(state: ScenarioFormState): boolean {
  return validateForm(state).length === 0;
}

/** Disruption rows referencing segments the network does not contain. */
export function unknownDisruptionSegments(
  state: ScenarioFormState,
  knownSegments: ReadonlySet<string>,
): string[] {
  return state.disruptions
    .map((d) => d.segment)
    .filter((segment) => !knownSegments.has(segment));
}

export function setWeight(
  state: ScenarioFormState,
  criterion: Criterion,
  value: number,
): ScenarioFormState {
  const clamped = Math.min(1, Math.max(0, value));
  return { ...state, weights: { ...state.weights, [criterion]: clamped } };
}

export function toggleMode(state: ScenarioFormState, mode: Mode): ScenarioFormState {
  return { ...state, modes: { ...state.modes, [mode]: !state.modes[mode] } };
}

export function addDisruption(
  state: ScenarioFormState,
  edit: DisruptionEdit,
): ScenarioFormState {
  const rest = state.disruptions.filter((d) => d.segment !== edit.segment);
  return { ...state, disruptions: [...rest, edit] };
}

export function removeDisruption(
  state: ScenarioFormState,
  segment: string,
): ScenarioFormState {
  return {
    ...state,
    disruptions: state.disruptions.filter((d) => d.segment !== segment),
  };
}

export function toScenarioRequest(state: ScenarioFormState): ScenarioRequest {
  const weights: Partial<Record<Criterion, number>> = {};
  for (const criterion of CRITERIA) {
    if (state.weights[criterion] > 0) weights[criterion] = state.weights[criterion];
  }
  const request: ScenarioRequest = {
    origin: state.origin,
    destination: state.destination,
    method: state.method,
    weights,
    constraints: {
      max_hops: state.maxHops,
      detour_factor: state.detourFactor,
      allowed_modes: MODES.filter((m) => state.modes[m]),
      max_transfers: state.maxTransfers,
      disruptions: state.disruptions,
      payload_tonnes: state.payloadTonnes,
    },
  };
  if (state.method === "lexicographic") request.lex_order = state.lexOrder;
  return request;
}

/**
 * At most one scenario request counts at a time: responses whose sequence
 * number is not the latest issued are discarded.
 */
export class RequestSequencer {
  private latest = 0;

  next(): number {
    this.latest += 1;
    return this.latest;
  }

  isCurrent(seq: number): boolean {
    return seq === this.latest;
  }
}
