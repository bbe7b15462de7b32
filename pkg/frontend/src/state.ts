import type { FacetName, IndexResult } from "./types.js";

/** Single source of truth for what the three panes are showing. */
export interface ViewState {
  ontology: string | null;
  facet: FacetName;
  expanded: Set<string>;
  selectedConcept: string | null;
  lastResult: IndexResult | null;
}

export function initialState(): ViewState {
  return {
    ontology: null,
    facet: "Processing",
    expanded: new Set(),
    selectedConcept: null,
    lastResult: null,
  };
}

/** Switching ontologies invalidates every concept-scoped piece of state. */
export function withOntology(state: ViewState, ontology: string): ViewState {
  if (ontology === state.ontology) return state;
  return {
    ontology,
    facet: state.facet,
    expanded: new Set(),
    selectedConcept: null,
    lastResult: null,
  };
}

export function withFacet(state: ViewState, facet: FacetName): ViewState {
  return { ...state, facet };
}

export function withSelectedConcept(state: ViewState, conceptId: string | null): ViewState {
  return { ...state, selectedConcept: conceptId };
}

export function withResult(state: ViewState, result: IndexResult | null): ViewState {
  return { ...state, lastResult: result };
}

export function toggleExpanded(state: ViewState, conceptId: string): ViewState {
  const expanded = new Set(state.expanded);
  if (expanded.has(conceptId)) expanded.delete(conceptId);
  else expanded.add(conceptId);
  return { ...state, expanded };
}
