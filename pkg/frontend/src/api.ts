import type { MoveRequest } from './types.js';

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string
  ) {
    super(message);
  }
}

/**
 * Thin client for the stateless arrangement service. The document always
 * travels as its exact canonical text and responses are kept as raw text,
 * so round trips stay byte-identical and every interaction is replayable
 * as a CLI invocation.
 */
export class ServiceClient {
  constructor(
    private readonly baseUrl: string = 'http://127.0.0.1:8765',
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init)
  ) {}

  private async post(path: string, body: string): Promise<string> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body
      });
    } catch (err) {
      throw new ServiceError(0, `service unreachable: ${String(err)}`);
    }
    const text = await response.text();
    if (!response.ok) {
      throw new ServiceError(response.status, text || `request failed (${response.status})`);
    }
    return text;
  }

  validate(arrangementText: string): Promise<string> {
    return this.post('/api/validate', arrangementText);
  }

  graph(arrangementText: string, axis: 'x' | 'y'): Promise<string> {
    return this.post(`/api/graph?axis=${axis}`, arrangementText);
  }

  preview(arrangementText: string, move: MoveRequest): Promise<string> {
    return this.post('/api/move/preview', this.moveBody(arrangementText, move));
  }

  commit(arrangementText: string, move: MoveRequest): Promise<string> {
    return this.post('/api/move/commit', this.moveBody(arrangementText, move));
  }

  private moveBody(arrangementText: string, move: MoveRequest): string {
    // embed the document text unchanged inside the request envelope
    return `{"arrangement":${arrangementText},"move":${JSON.stringify(move)}}`;
  }
}
