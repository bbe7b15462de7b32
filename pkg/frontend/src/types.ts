/** Response shapes of the facetforge HTTP API. The UI adds nothing to them. */

export type FacetName = "Processing" | "Structure" | "Property" | "Performance";

export const FACETS: FacetName[] = ["Processing", "Structure", "Property", "Performance"];

export interface FacetCountsSection {
  Processing: number;
  Structure: number;
  Property: number;
  Performance: number;
  total: number;
}

export interface OntologySummary {
  name: string;
  version: string;
  counts: { concepts: FacetCountsSection; labels: FacetCountsSection };
  loadedAt: string;
}

export interface TreeNode {
  conceptId: string;
  prefLabel: string;
  children: TreeNode[];
}

/** Keyed by facet name; all four keys for the full forest, one when filtered. */
export type BrowseResponse = Partial<Record<FacetName, TreeNode[]>>;

export interface OutgoingEdge {
  relation: string;
  object: string;
  objectLabel: string;
}

export interface IncomingEdge {
  relation: string;
  subject: string;
  subjectLabel: string;
}

export interface ConceptDetail {
  id: string;
  prefLabel: string;
  altLabels: string[];
  facet: FacetName;
  parent: string | null;
  definition: string | null;
  ancestors: string[];
  outgoing: OutgoingEdge[];
  incoming: IncomingEdge[];
}

export interface IndexHit {
  concept: string;
  facet: FacetName;
  surface: string;
  label: string;
  start: number;
  end: number;
  ambiguous: boolean;
}

export interface ConceptScore {
  concept: string;
  count: number;
  score: number;
}

export interface IndexResult {
  hits: IndexHit[];
  perConcept: ConceptScore[];
  perFacet: Partial<Record<FacetName, ConceptScore[]>>;
  notation: string;
}
