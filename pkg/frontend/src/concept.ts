import type { ConceptDetail } from "./types.js";
import { breadcrumb } from "./viewmodel.js";

export interface ConceptCallbacks {
  onNavigate: (conceptId: string) => void;
}

function conceptLink(
  conceptId: string,
  label: string,
  callbacks: ConceptCallbacks,
): HTMLButtonElement {
  const button = document.createElement("button");
  button.type = "button";
  button.className = "concept-link";
  button.dataset.conceptId = conceptId;
  button.textContent = label;
  button.addEventListener("click", () => callbacks.onNavigate(conceptId));
  return button;
}

function edgeList(
  container: HTMLElement,
  title: string,
  rows: { relation: string; otherId: string; otherLabel: string }[],
  callbacks: ConceptCallbacks,
  incoming: boolean,
): void {
  const heading = document.createElement("h3");
  heading.textContent = title;
  container.appendChild(heading);

  if (!rows.length) {
    const none = document.createElement("p");
    none.className = "empty-state";
    none.textContent = "none";
    container.appendChild(none);
    return;
  }
  const ul = document.createElement("ul");
  ul.className = incoming ? "edge-list incoming" : "edge-list outgoing";
  for (const row of rows) {
    const li = document.createElement("li");
    li.dataset.relation = row.relation;
    const relation = document.createElement("code");
    relation.textContent = row.relation;
    const link = conceptLink(row.otherId, `${row.otherLabel} (${row.otherId})`, callbacks);
    if (incoming) {
      li.append(link, " ", relation);
    } else {
      li.append(relation, " ", link);
    }
    ul.appendChild(li);
  }
  container.appendChild(ul);
}

/** Render the concept detail pane (replacing `container` contents). */
export function renderConceptPanel(
  container: HTMLElement,
  detail: ConceptDetail,
  callbacks: ConceptCallbacks,
): void {
  container.innerHTML = "";

  const crumbs = document.createElement("nav");
  crumbs.className = "breadcrumb";
  for (const ancestorId of breadcrumb(detail)) {
    crumbs.appendChild(conceptLink(ancestorId, ancestorId, callbacks));
    crumbs.appendChild(document.createTextNode(" › "));
  }
  const here = document.createElement("span");
  here.textContent = detail.id;
  crumbs.appendChild(here);
  container.appendChild(crumbs);

  const title = document.createElement("h2");
  title.textContent = detail.prefLabel;
  const badge = document.createElement("span");
  badge.className = `facet-badge facet-${detail.facet.toLowerCase()}`;
  badge.textContent = detail.facet;
  title.appendChild(badge);
  container.appendChild(title);

  if (detail.altLabels.length) {
    const alts = document.createElement("p");
    alts.className = "alt-labels";
    alts.textContent = `Also known as: ${detail.altLabels.join(", ")}`;
    container.appendChild(alts);
  }
  if (detail.definition) {
    const definition = document.createElement("p");
    definition.className = "definition";
    definition.textContent = detail.definition;
    container.appendChild(definition);
  }

  edgeList(
    container,
    "Outgoing relationships",
    detail.outgoing.map((e) => ({
      relation: e.relation,
      otherId: e.object,
      otherLabel: e.objectLabel,
    })),
    callbacks,
    false,
  );
  edgeList(
    container,
    "Incoming relationships",
    detail.incoming.map((e) => ({
      relation: e.relation,
      otherId: e.subject,
      otherLabel: e.subjectLabel,
    })),
    callbacks,
    true,
  );
}

/** Used when the selected concept no longer exists (ontology switched). */
export function renderConceptPlaceholder(container: HTMLElement, message: string): void {
  container.innerHTML = "";
  const p = document.createElement("p");
  p.className = "empty-state";
  p.textContent = message;
  container.appendChild(p);
}
