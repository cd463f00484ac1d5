/** Thin typed client for the case service. The UI never computes a
 * status, diagnostic, or coverage number itself; everything displayed
 * comes back from these calls. */

import type {
  CaseDoc,
  CaseSummary,
  Consideration,
  CoverageResponse,
  Diagnostic,
  Evaluation,
  Stage,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ConflictError extends ApiError {}
export class NotFoundError extends ApiError {}

export class PreconditionError extends ApiError {
  constructor(
    status: number,
    code: string,
    message: string,
    public diagnostics: Diagnostic[],
  ) {
    super(status, code, message);
  }
}

async function raiseFor(response: Response): Promise<never> {
  let code = "Error";
  let message = `${response.status} ${response.statusText}`;
  let diagnostics: Diagnostic[] = [];
  try {
    const body = await response.json();
    if (body && typeof body.code === "string") code = body.code;
    if (body && typeof body.message === "string") message = body.message;
    if (Array.isArray(body?.diagnostics)) diagnostics = body.diagnostics;
  } catch {
    /* non-JSON error body; keep defaults */
  }
  if (response.status === 409) throw new ConflictError(409, code, message);
  if (response.status === 404) throw new NotFoundError(404, code, message);
  if (response.status === 422 && code === "PreconditionFailed") {
    throw new PreconditionError(422, code, message, diagnostics);
  }
  throw new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private url(path: string): string {
    return `${this.baseUrl}/api/v1${path}`;
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.url(path));
    if (!response.ok) await raiseFor(response);
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body?: BodyInit): Promise<T> {
    const response = await this.fetchFn(this.url(path), { method: "POST", body });
    if (!response.ok) await raiseFor(response);
    return (await response.json()) as T;
  }

  listCases(): Promise<CaseSummary[]> {
    return this.getJson("/cases");
  }

  async createCase(doc: CaseDoc): Promise<{ caseId: string; revision: number }> {
    return this.postJson("/cases", JSON.stringify(doc));
  }

  /** Returns the document plus the revision the server reported via ETag. */
  async getCase(caseId: string): Promise<{ doc: CaseDoc; revision: number }> {
    const response = await this.fetchFn(this.url(`/cases/${caseId}`));
    if (!response.ok) await raiseFor(response);
    const doc = (await response.json()) as CaseDoc;
    const etag = response.headers.get("etag");
    const revision = etag ? parseInt(etag.replace(/"/g, ""), 10) : doc.revision;
    return { doc, revision };
  }

  /** Optimistic save; throws ConflictError when the revision moved. */
  async putCase(caseId: string, doc: CaseDoc, expectedRevision: number): Promise<number> {
    const response = await this.fetchFn(this.url(`/cases/${caseId}`), {
      method: "PUT",
      headers: { "If-Match": String(expectedRevision) },
      body: JSON.stringify(doc),
    });
    if (!response.ok) await raiseFor(response);
    const body = (await response.json()) as { revision: number };
    return body.revision;
  }

  validate(caseId: string): Promise<Diagnostic[]> {
    return this.postJson(`/cases/${caseId}/validate`);
  }

  coverage(caseId: string, map = "fairness-v1"): Promise<CoverageResponse> {
    return this.postJson(`/cases/${caseId}/coverage?map=${encodeURIComponent(map)}`);
  }

  evaluate(caseId: string): Promise<Evaluation> {
    return this.postJson(`/cases/${caseId}/evaluate`);
  }

  async dsl(caseId: string): Promise<string> {
    const response = await this.fetchFn(this.url(`/cases/${caseId}/dsl`));
    if (!response.ok) await raiseFor(response);
    return response.text();
  }

  stages(): Promise<Stage[]> {
    return this.getJson("/registry/stages");
  }

  considerations(map = "fairness-v1"): Promise<Consideration[]> {
    return this.getJson(`/registry/considerations?map=${encodeURIComponent(map)}`);
  }
}
