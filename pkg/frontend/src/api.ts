/**
 * Typed client for the cipherquest HTTP API.
 *
 * Every gameplay truth comes from these six endpoints; the client never
 * grades anything itself. At most one call is in flight at a time: actions
 * fired while busy are rejected so the UI can keep its buttons disabled
 * instead of queueing surprises.
 */

export const SESSION_HEADER = 'X-Session';

export interface SessionResponse {
  session_id: string;
  player_id: string;
  resumed: boolean;
  current: string | null;
  levels: Record<string, 'locked' | 'unlocked' | 'completed'>;
  codex: string[];
}

export interface StartResponse {
  level_id: string;
  chapter: string;
  kind: string;
  answer_form: 'text' | 'integer' | 'hex' | 'point' | 'script';
  challenge: Record<string, unknown>;
  intro_text: string;
  story_intro: string;
  attempts: number;
  hints_taken: number;
  replay: number;
}

export interface AttemptResponse {
  verdict: 'correct' | 'incorrect';
  direction: 'warmer' | 'colder' | 'neutral';
  message: string;
  attempts: number;
  score?: number;
  codex_updates?: string[];
  story_outro?: string;
  next_level?: string | null;
}

export interface HintResponse {
  tier: number;
  text: string;
  hints_taken: number;
}

export interface CodexEntry {
  concept_id: string;
  title: string;
  body: string;
  unlocked_by: string;
  topics: string[];
}

export interface CodexResponse {
  entries: CodexEntry[];
  total: number;
}

export interface ProgressRow {
  id: string;
  chapter: string;
  status: 'locked' | 'unlocked' | 'completed';
  best_score?: number;
  attempts?: number;
  total_time?: number;
}

export interface ProgressResponse {
  player_id: string;
  current: string | null;
  levels: ProgressRow[];
  codex_unlocked: number;
}

/** Server-reported failure: one machine code plus a human message. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** Transport failure (server unreachable); the draft answer is kept. */
export class NetworkError extends Error {
  constructor(cause: unknown) {
    super('network failure');
    this.name = 'NetworkError';
    this.cause = cause;
  }
}

export class BusyError extends Error {
  constructor() {
    super('a request is already in flight');
    this.name = 'BusyError';
  }
}

export class ApiClient {
  private sessionId: string | null = null;
  private inFlight = false;

  constructor(private readonly baseUrl: string = '') {}

  get busy(): boolean {
    return this.inFlight;
  }

  private async call<T>(
    method: 'GET' | 'POST',
    path: string,
    body?: unknown,
  ): Promise<T | null> {
    if (this.inFlight) throw new BusyError();
    this.inFlight = true;
    try {
      const headers: Record<string, string> = {};
      if (body !== undefined) headers['Content-Type'] = 'application/json';
      if (this.sessionId !== null) headers[SESSION_HEADER] = this.sessionId;
      let response: Response;
      try {
        response = await fetch(this.baseUrl + path, {
          method,
          headers,
          body: body === undefined ? undefined : JSON.stringify(body),
        });
      } catch (cause) {
        throw new NetworkError(cause);
      }
      if (response.status === 204) return null;
      const payload = await response.json();
      if (!response.ok) {
        throw new ApiError(
          response.status,
          String(payload.code ?? 'UNKNOWN'),
          String(payload.message ?? 'request failed'),
        );
      }
      return payload as T;
    } finally {
      this.inFlight = false;
    }
  }

  async openSession(playerId: string): Promise<SessionResponse> {
    const session = (await this.call<SessionResponse>('POST', '/api/session', {
      player_id: playerId,
    }))!;
    this.sessionId = session.session_id;
    return session;
  }

  async startLevel(levelId: string): Promise<StartResponse> {
    return (await this.call<StartResponse>(
      'POST',
      `/api/level/${encodeURIComponent(levelId)}/start`,
    ))!;
  }

  async submitAttempt(answer: string): Promise<AttemptResponse> {
    return (await this.call<AttemptResponse>('POST', '/api/attempt', { answer }))!;
  }

  /** Resolves null when the server has no hint to give yet (204). */
  async requestHint(): Promise<HintResponse | null> {
    return this.call<HintResponse>('POST', '/api/hint');
  }

  async fetchCodex(): Promise<CodexResponse> {
    return (await this.call<CodexResponse>('GET', '/api/codex'))!;
  }

  async fetchProgress(): Promise<ProgressResponse> {
    return (await this.call<ProgressResponse>('GET', '/api/progress'))!;
  }
}
