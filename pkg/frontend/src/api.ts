/**
 * Typed client for the session service.
 *
 * Every method maps to one route. Error responses become
 * ServiceError with the service's machine-readable code; request
 * validation rejections (pydantic's list-shaped detail) get the
 * code "validation".
 */

import type {
  EntryPayload,
  ServiceConfig,
  SessionPayload,
  SessionRecordDoc,
  SignalDoc,
  SignalSummary,
  SsiPoint,
} from './types.js';

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ServiceError';
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

interface ErrorBody {
  detail?: { code?: string; message?: string } | { msg?: string }[];
}

export class ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { 'Content-Type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      throw await this.toError(response);
    }
    return (await response.json()) as T;
  }

  private async toError(response: Response): Promise<ServiceError> {
    let body: ErrorBody | null = null;
    try {
      body = (await response.json()) as ErrorBody;
    } catch {
      // non-JSON error body; fall through to the generic message
    }
    const detail = body?.detail;
    if (Array.isArray(detail)) {
      const first = detail[0] as { msg?: string } | undefined;
      return new ServiceError(
        response.status,
        'validation',
        first?.msg ?? 'request validation failed',
      );
    }
    if (detail && typeof detail === 'object') {
      const coded = detail as { code?: string; message?: string };
      return new ServiceError(
        response.status,
        coded.code ?? 'error',
        coded.message ?? response.statusText,
      );
    }
    return new ServiceError(response.status, 'error', response.statusText);
  }

  config(): Promise<ServiceConfig> {
    return this.request('GET', '/config');
  }

  listSignals(): Promise<SignalSummary[]> {
    return this.request('GET', '/signals');
  }

  getSignal(id: string): Promise<SignalDoc> {
    return this.request('GET', `/signals/${id}`);
  }

  getLocus(id: string): Promise<SessionRecordDoc[]> {
    return this.request('GET', `/signals/${id}/locus`);
  }

  getSsi(id: string): Promise<SsiPoint[]> {
    return this.request('GET', `/signals/${id}/ssi`);
  }

  createSignal(payload: EntryPayload): Promise<SignalDoc> {
    return this.request('POST', '/signals', payload);
  }

  /** What-if computation; the register is not touched. */
  preview(id: string, payload: SessionPayload): Promise<SessionRecordDoc> {
    return this.request('POST', `/signals/${id}/preview`, payload);
  }

  /** Append the session; idempotent when payload.client_token is set. */
  commitSession(
    id: string,
    payload: SessionPayload,
  ): Promise<SessionRecordDoc> {
    return this.request('POST', `/signals/${id}/sessions`, payload);
  }

  markCandidate(id: string): Promise<SignalDoc> {
    return this.request('POST', `/signals/${id}/candidate`);
  }

  reactivate(id: string): Promise<SignalDoc> {
    return this.request('POST', `/signals/${id}/reactivate`);
  }

  retire(id: string, confirmed: boolean): Promise<SignalDoc> {
    return this.request('POST', `/signals/${id}/retire`, { confirmed });
  }
}
