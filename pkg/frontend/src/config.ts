const DEFAULT_SERVICE_URL = "http://127.0.0.1:8000";

declare global {
  interface Window {
    FACETFORGE_SERVICE_URL?: string;
  }
}

/**
 * Service URL resolution order: build/page-provided global, then an optional
 * config.json next to index.html, then the local default.
 */
export async function resolveServiceUrl(): Promise<string> {
  if (typeof window !== "undefined" && window.FACETFORGE_SERVICE_URL) {
    return window.FACETFORGE_SERVICE_URL;
  }
  try {
    const response = await fetch("config.json");
    if (response.ok) {
      const config = (await response.json()) as { serviceUrl?: string };
      if (config.serviceUrl) return config.serviceUrl;
    }
  } catch {
    // no config file shipped; fall through
  }
  return DEFAULT_SERVICE_URL;
}
