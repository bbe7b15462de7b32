import { ApiClient, ApiError } from "./api.js";
import { resolveServiceUrl } from "./config.js";
import { renderConceptPanel, renderConceptPlaceholder } from "./concept.js";
import { renderIndexResult } from "./indexview.js";
import {
  initialState,
  toggleExpanded,
  withFacet,
  withOntology,
  withResult,
  withSelectedConcept,
  type ViewState,
} from "./state.js";
import { renderFacetTree } from "./tree.js";
import { FACETS, type FacetName } from "./types.js";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing #${id}`);
  return element as T;
}

export function bootstrap(): void {
  void start();
}

async function start(): Promise<void> {
  const api = new ApiClient(await resolveServiceUrl());
  let state: ViewState = initialState();

  const banner = byId<HTMLDivElement>("banner");
  const ontologySelect = byId<HTMLSelectElement>("ontology-select");
  const facetTabs = byId<HTMLDivElement>("facet-tabs");
  const treePane = byId<HTMLDivElement>("tree-pane");
  const conceptPane = byId<HTMLDivElement>("concept-pane");
  const indexForm = byId<HTMLFormElement>("index-form");
  const indexText = byId<HTMLTextAreaElement>("index-text");
  const indexError = byId<HTMLParagraphElement>("index-error");
  const indexResults = byId<HTMLDivElement>("index-results");

  function showBanner(message: string): void {
    banner.textContent = message;
    banner.hidden = false;
  }

  function clearBanner(): void {
    banner.hidden = true;
    banner.textContent = "";
  }

  function reportError(error: unknown): void {
    if (error instanceof ApiError) showBanner(error.message);
    else showBanner(String(error));
  }

  // Generation counters: concurrent in-flight requests per pane are
  // deduplicated, last request wins.
  let treeSeq = 0;
  let conceptSeq = 0;
  let indexSeq = 0;

  async function refreshTree(): Promise<void> {
    if (!state.ontology) return;
    const seq = ++treeSeq;
    try {
      const browse = await api.browse(state.ontology, state.facet);
      if (seq !== treeSeq) return;
      clearBanner();
      renderFacetTree(treePane, browse[state.facet] ?? [], {
        onSelect: (conceptId) => void showConcept(conceptId),
        onToggle: (conceptId) => {
          state = toggleExpanded(state, conceptId);
          void refreshTree();
        },
        isExpanded: (conceptId) => state.expanded.has(conceptId),
      });
    } catch (error) {
      if (seq === treeSeq) reportError(error);
    }
  }

  async function showConcept(conceptId: string): Promise<void> {
    if (!state.ontology) return;
    const seq = ++conceptSeq;
    const ontology = state.ontology;
    try {
      const detail = await api.concept(ontology, conceptId);
      if (seq !== conceptSeq || state.ontology !== ontology) return;
      state = withSelectedConcept(state, conceptId);
      clearBanner();
      renderConceptPanel(conceptPane, detail, {
        onNavigate: (next) => void showConcept(next),
      });
    } catch (error) {
      if (seq !== conceptSeq) return;
      state = withSelectedConcept(state, null);
      renderConceptPlaceholder(conceptPane, "Concept not available.");
      reportError(error);
    }
  }

  async function submitIndex(): Promise<void> {
    if (!state.ontology) return;
    const seq = ++indexSeq;
    const text = indexText.value;
    indexError.hidden = true;
    indexError.textContent = "";
    try {
      const result = await api.indexText(state.ontology, text);
      if (seq !== indexSeq) return;
      state = withResult(state, result);
      renderIndexResult(indexResults, text, result, {
        onNavigate: (conceptId) => void showConcept(conceptId),
      });
    } catch (error) {
      if (seq !== indexSeq) return;
      if (error instanceof ApiError && (error.status === 400 || error.status === 413)) {
        indexError.textContent = error.message;
        indexError.hidden = false;
      } else {
        reportError(error);
      }
    }
  }

  function renderFacetTabs(): void {
    facetTabs.innerHTML = "";
    for (const facet of FACETS) {
      const tab = document.createElement("button");
      tab.type = "button";
      tab.className = `facet-tab facet-${facet.toLowerCase()}`;
      if (facet === state.facet) tab.classList.add("active");
      tab.textContent = facet;
      tab.addEventListener("click", () => {
        state = withFacet(state, facet as FacetName);
        renderFacetTabs();
        void refreshTree();
      });
      facetTabs.appendChild(tab);
    }
  }

  function switchOntology(name: string): void {
    state = withOntology(state, name);
    renderConceptPlaceholder(conceptPane, "Select a concept from the tree.");
    renderIndexResult(indexResults, "", {
      hits: [], perConcept: [], perFacet: {}, notation: "",
    }, { onNavigate: () => undefined });
    void refreshTree();
  }

  ontologySelect.addEventListener("change", () => switchOntology(ontologySelect.value));
  indexForm.addEventListener("submit", (event) => {
    event.preventDefault();
    void submitIndex();
  });

  renderFacetTabs();
  try {
    const ontologies = await api.listOntologies();
    ontologySelect.innerHTML = "";
    for (const summary of ontologies) {
      const option = document.createElement("option");
      option.value = summary.name;
      option.textContent = `${summary.name} (${summary.counts.concepts.total} concepts)`;
      ontologySelect.appendChild(option);
    }
    const first = ontologies[0];
    if (first) {
      ontologySelect.value = first.name;
      switchOntology(first.name);
    } else {
      showBanner("The service has no ontologies loaded.");
    }
  } catch (error) {
    reportError(error);
  }
}

if (typeof document !== "undefined" && document.getElementById("ontology-select")) {
  bootstrap();
}
