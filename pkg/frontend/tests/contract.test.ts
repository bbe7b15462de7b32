/**
 * Contract tests against the live fixture-backed service: every displayed
 * fact must be traceable to one service response.
 */
import { describe, expect, inject, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { renderConceptPanel } from "../src/concept.js";
import { renderIndexResult } from "../src/indexview.js";
import { renderFacetTree } from "../src/tree.js";
import { FACETS, type FacetName } from "../src/types.js";
import { breadcrumb, countTreeNodes, flattenTree } from "../src/viewmodel.js";

const api = new ApiClient(inject("serviceUrl"));

const AEROGEL = "Aerogel Excerpt";
const BATTERY = "Battery Cathode Excerpt";

function container(): HTMLElement {
  const el = document.createElement("div");
  document.body.appendChild(el);
  return el;
}

const noop = { onNavigate: () => undefined };

describe("tree pane", () => {
  it("renders exactly the node count of the browse response", async () => {
    for (const name of [AEROGEL, BATTERY]) {
      const browse = await api.browse(name);
      for (const facet of FACETS) {
        const roots = browse[facet as FacetName] ?? [];
        const pane = container();
        renderFacetTree(pane, roots, {
          onSelect: () => undefined,
          onToggle: () => undefined,
          isExpanded: () => true, // fully expanded so every node is in the DOM
        });
        const rendered = pane.querySelectorAll("li[data-concept-id]").length;
        expect(rendered).toBe(countTreeNodes(roots));
      }
    }
  });

  it("renders every concept the service puts in the facet", async () => {
    const browse = await api.browse(AEROGEL, "Processing");
    const roots = browse.Processing ?? [];
    const pane = container();
    renderFacetTree(pane, roots, {
      onSelect: () => undefined,
      onToggle: () => undefined,
      isExpanded: () => true,
    });
    const ids = [...pane.querySelectorAll("li[data-concept-id]")].map(
      (li) => (li as HTMLElement).dataset.conceptId,
    );
    expect(new Set(ids)).toEqual(new Set(flattenTree(roots)));
    expect(ids).toContain("SolventFreezing");
  });
});

describe("concept panel", () => {
  it("relationship lists match the /concepts response", async () => {
    const detail = await api.concept(BATTERY, "ActiveMaterial");
    const pane = container();
    renderConceptPanel(pane, detail, noop);

    const incoming = [...pane.querySelectorAll(".edge-list.incoming li")].map((li) => ({
      relation: (li as HTMLElement).dataset.relation,
      other: (li.querySelector(".concept-link") as HTMLElement).dataset.conceptId,
    }));
    expect(incoming).toEqual(
      detail.incoming.map((e) => ({ relation: e.relation, other: e.subject })),
    );
    expect(incoming.map((e) => e.other)).toEqual(
      ["Morphology", "ParticleSize", "SizeDistribution"],
    );

    const outgoing = [...pane.querySelectorAll(".edge-list.outgoing li")];
    expect(outgoing.length).toBe(detail.outgoing.length);
  });

  it("breadcrumb is the ancestors list root-first", async () => {
    const detail = await api.concept(AEROGEL, "SolventFreezing");
    expect(detail.ancestors).toEqual(["FreezeDrying", "DryingProcess"]);
    const pane = container();
    renderConceptPanel(pane, detail, noop);
    const crumbs = [...pane.querySelectorAll(".breadcrumb .concept-link")].map(
      (el) => (el as HTMLElement).dataset.conceptId,
    );
    expect(crumbs).toEqual(breadcrumb(detail));
    expect(crumbs).toEqual(["DryingProcess", "FreezeDrying"]);
  });
});

describe("index view", () => {
  it("highlight spans equal the index-response offsets", async () => {
    const text =
      "The current collector was coated with active material; particle size varied.";
    const result = await api.indexText(BATTERY, text);
    expect(result.hits.length).toBeGreaterThan(0);

    const pane = container();
    renderIndexResult(pane, text, result, noop);

    const marks = [...pane.querySelectorAll("mark.hl")].map((mark) => ({
      start: Number((mark as HTMLElement).dataset.start),
      end: Number((mark as HTMLElement).dataset.end),
      text: mark.textContent,
    }));
    const spans = [...new Set(result.hits.map((h) => `${h.start}:${h.end}`))]
      .map((key) => key.split(":").map(Number))
      .sort((a, b) => a[0]! - b[0]!);
    expect(marks.map((m) => [m.start, m.end])).toEqual(spans);
    for (const mark of marks) {
      expect(mark.text).toBe(text.slice(mark.start, mark.end));
    }

    // the rendered document reproduces the submitted text exactly
    const doc = pane.querySelector(".highlighted-doc")!;
    expect(doc.textContent).toBe(text);
  });

  it("facet groups mirror perFacet ordering and the notation is shown", async () => {
    const text = "Morphology and particle size of the active material.";
    const result = await api.indexText(BATTERY, text);
    const pane = container();
    renderIndexResult(pane, text, result, noop);

    const sections = [...pane.querySelectorAll(".facet-group")];
    expect(sections.map((s) => (s as HTMLElement).dataset.facet)).toEqual(
      FACETS.filter((f) => (result.perFacet[f as FacetName] ?? []).length > 0),
    );
    for (const section of sections) {
      const facet = (section as HTMLElement).dataset.facet as FacetName;
      const shown = [...section.querySelectorAll(".concept-link")].map(
        (el) => (el as HTMLElement).dataset.conceptId,
      );
      expect(shown).toEqual(result.perFacet[facet]!.map((a) => a.concept));
    }
    expect(pane.querySelector(".notation")!.textContent).toContain(result.notation);
  });

  it("empty submissions produce empty groups and no highlights", async () => {
    const result = await api.indexText(BATTERY, "");
    expect(result).toEqual({ hits: [], perConcept: [], perFacet: {}, notation: "" });
  });
});
