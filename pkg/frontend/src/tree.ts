import type { TreeNode } from "./types.js";

export interface TreeCallbacks {
  onSelect: (conceptId: string) => void;
  onToggle: (conceptId: string) => void;
  isExpanded: (conceptId: string) => boolean;
}

function renderNode(node: TreeNode, callbacks: TreeCallbacks): HTMLLIElement {
  const li = document.createElement("li");
  li.dataset.conceptId = node.conceptId;

  const row = document.createElement("div");
  row.className = "tree-row";

  const toggle = document.createElement("button");
  toggle.type = "button";
  toggle.className = "tree-toggle";
  if (node.children.length) {
    const expanded = callbacks.isExpanded(node.conceptId);
    toggle.textContent = expanded ? "▾" : "▸";
    toggle.setAttribute("aria-expanded", String(expanded));
    toggle.addEventListener("click", (event) => {
      event.stopPropagation();
      callbacks.onToggle(node.conceptId);
    });
  } else {
    toggle.textContent = "·";
    toggle.disabled = true;
  }
  row.appendChild(toggle);

  const label = document.createElement("button");
  label.type = "button";
  label.className = "tree-label";
  label.textContent = node.prefLabel;
  label.title = node.conceptId;
  label.addEventListener("click", () => callbacks.onSelect(node.conceptId));
  row.appendChild(label);

  li.appendChild(row);

  if (node.children.length && callbacks.isExpanded(node.conceptId)) {
    const ul = document.createElement("ul");
    ul.className = "tree-children";
    for (const child of node.children) {
      ul.appendChild(renderNode(child, callbacks));
    }
    li.appendChild(ul);
  }
  return li;
}

/** Render one facet's tree into `container` (replacing its contents). */
export function renderFacetTree(
  container: HTMLElement,
  roots: TreeNode[],
  callbacks: TreeCallbacks,
): void {
  container.innerHTML = "";
  if (!roots.length) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No concepts in this facet.";
    container.appendChild(empty);
    return;
  }
  const ul = document.createElement("ul");
  ul.className = "tree-root";
  for (const root of roots) {
    ul.appendChild(renderNode(root, callbacks));
  }
  container.appendChild(ul);
}
