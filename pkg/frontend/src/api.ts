import type {
  BrowseResponse,
  ConceptDetail,
  FacetName,
  IndexResult,
  OntologySummary,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (cause) {
    throw new ApiError(0, `service unreachable at ${url}`);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

/** Thin typed client; every UI fact comes through one of these calls. */
export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  listOntologies(): Promise<OntologySummary[]> {
    return request(this.url("/ontologies"));
  }

  browse(ontology: string, facet?: FacetName): Promise<BrowseResponse> {
    const suffix = facet ? `?facet=${encodeURIComponent(facet)}` : "";
    return request(this.url(`/ontologies/${encodeURIComponent(ontology)}/tree${suffix}`));
  }

  concept(ontology: string, conceptId: string): Promise<ConceptDetail> {
    return request(this.url(
      `/ontologies/${encodeURIComponent(ontology)}/concepts/${encodeURIComponent(conceptId)}`,
    ));
  }

  indexText(ontology: string, text: string): Promise<IndexResult> {
    return request(this.url(`/ontologies/${encodeURIComponent(ontology)}/index`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }
}
