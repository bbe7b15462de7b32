/**
 * Pure view-model helpers. Everything here is a deterministic function of
 * service responses, so contract tests can check it without a DOM.
 */
import type { ConceptDetail, FacetName, IndexHit, TreeNode } from "./types.js";

export function countTreeNodes(roots: TreeNode[]): number {
  let count = 0;
  const stack = [...roots];
  while (stack.length) {
    const node = stack.pop()!;
    count += 1;
    stack.push(...node.children);
  }
  return count;
}

export function flattenTree(roots: TreeNode[]): string[] {
  const ids: string[] = [];
  const walk = (node: TreeNode) => {
    ids.push(node.conceptId);
    node.children.forEach(walk);
  };
  roots.forEach(walk);
  return ids;
}

/** Root-first path for the breadcrumb; the service reports nearest-first. */
export function breadcrumb(detail: ConceptDetail): string[] {
  return [...detail.ancestors].reverse();
}

export interface HighlightSegment {
  text: string;
  start: number;
  end: number;
  /** null for plain text between hits */
  hit: {
    concepts: string[];
    facets: FacetName[];
    ambiguous: boolean;
  } | null;
}

/**
 * Split a document into alternating plain/highlighted segments.
 *
 * Hits sharing one span are a single ambiguous segment; spans never overlap
 * (service guarantee), and the concatenated segment texts reproduce the
 * document exactly.
 */
export function highlightSegments(text: string, hits: IndexHit[]): HighlightSegment[] {
  const bySpan = new Map<string, IndexHit[]>();
  for (const hit of hits) {
    const key = `${hit.start}:${hit.end}`;
    const group = bySpan.get(key);
    if (group) group.push(hit);
    else bySpan.set(key, [hit]);
  }
  const groups = [...bySpan.values()].sort((a, b) => a[0]!.start - b[0]!.start);

  const segments: HighlightSegment[] = [];
  let cursor = 0;
  for (const group of groups) {
    const { start, end } = group[0]!;
    if (start > cursor) {
      segments.push({ text: text.slice(cursor, start), start: cursor, end: start, hit: null });
    }
    const facets: FacetName[] = [];
    for (const hit of group) {
      if (!facets.includes(hit.facet)) facets.push(hit.facet);
    }
    segments.push({
      text: text.slice(start, end),
      start,
      end,
      hit: {
        concepts: group.map((h) => h.concept),
        facets,
        ambiguous: group.some((h) => h.ambiguous),
      },
    });
    cursor = end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), start: cursor, end: text.length, hit: null });
  }
  return segments;
}
