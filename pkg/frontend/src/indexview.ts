import type { FacetName, IndexResult } from "./types.js";
import { FACETS } from "./types.js";
import { highlightSegments } from "./viewmodel.js";

export interface IndexViewCallbacks {
  onNavigate: (conceptId: string) => void;
}

function renderHighlightedText(
  container: HTMLElement,
  text: string,
  result: IndexResult,
): void {
  const box = document.createElement("div");
  box.className = "highlighted-doc";
  for (const segment of highlightSegments(text, result.hits)) {
    if (!segment.hit) {
      box.appendChild(document.createTextNode(segment.text));
      continue;
    }
    const mark = document.createElement("mark");
    mark.className = `hl facet-${segment.hit.facets[0]!.toLowerCase()}`;
    if (segment.hit.ambiguous) mark.classList.add("ambiguous");
    mark.dataset.start = String(segment.start);
    mark.dataset.end = String(segment.end);
    mark.dataset.concepts = segment.hit.concepts.join(",");
    mark.title = segment.hit.concepts.join(", ");
    mark.textContent = segment.text;
    box.appendChild(mark);
  }
  container.appendChild(box);
}

function renderFacetGroups(
  container: HTMLElement,
  result: IndexResult,
  callbacks: IndexViewCallbacks,
): void {
  const groups = document.createElement("div");
  groups.className = "facet-groups";
  for (const facet of FACETS) {
    const aggregates = result.perFacet[facet as FacetName];
    if (!aggregates || !aggregates.length) continue;
    const section = document.createElement("section");
    section.className = "facet-group";
    section.dataset.facet = facet;

    const heading = document.createElement("h3");
    heading.className = `facet-${facet.toLowerCase()}`;
    heading.textContent = facet;
    section.appendChild(heading);

    const ol = document.createElement("ol");
    for (const aggregate of aggregates) {
      const li = document.createElement("li");
      const link = document.createElement("button");
      link.type = "button";
      link.className = "concept-link";
      link.dataset.conceptId = aggregate.concept;
      link.textContent = aggregate.concept;
      link.addEventListener("click", () => callbacks.onNavigate(aggregate.concept));
      li.appendChild(link);
      const meta = document.createElement("span");
      meta.className = "score";
      meta.textContent = ` score ${aggregate.score}, ${aggregate.count}×`;
      li.appendChild(meta);
      if (result.hits.some((h) => h.concept === aggregate.concept && h.ambiguous)) {
        const badge = document.createElement("span");
        badge.className = "ambiguous-badge";
        badge.textContent = "ambiguous";
        li.appendChild(badge);
      }
      ol.appendChild(li);
    }
    section.appendChild(ol);
    groups.appendChild(section);
  }
  container.appendChild(groups);
}

/** Render extraction results: highlighted document, facet groups, notation. */
export function renderIndexResult(
  container: HTMLElement,
  text: string,
  result: IndexResult,
  callbacks: IndexViewCallbacks,
): void {
  container.innerHTML = "";
  if (!text) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "Paste a paragraph above and press Extract.";
    container.appendChild(empty);
    return;
  }
  renderHighlightedText(container, text, result);
  renderFacetGroups(container, result, callbacks);

  const notation = document.createElement("p");
  notation.className = "notation";
  notation.textContent = result.notation ? `Notation: ${result.notation}` : "Notation: (none)";
  container.appendChild(notation);
}
