/** Typed client for the answermeter HTTP JSON API. */

export type BandName = "weak" | "medium" | "strong";
export type ColorName = "red" | "orange" | "green";

export interface RuleFlags {
  has_capital: boolean;
  has_digit: boolean;
  has_special: boolean;
  has_letter: boolean;
  long_enough: boolean;
}

export interface ScoreResponse {
  rules: RuleFlags;
  score: number;
  band: BandName;
  color: ColorName;
  common: string | null;
}

export interface QuestionInfo {
  id: string;
  text: string;
  category: string;
}

export type AnswerStateName = "empty" | "pending_weak_confirmation" | "accepted";

export interface SlotView {
  number: number;
  kind: "predefined" | "custom";
  question_id: string | null;
  question: string | null;
  answer_state: AnswerStateName;
  band: string | null;
  weak_override: boolean;
}

export interface SessionView {
  state: string;
  slots: SlotView[];
}

export interface CreatedSession extends SessionView {
  session_id: string;
  token: string;
}

export interface SuggestionView {
  answer: string;
  explanation: string;
  category: string;
}

export interface SubmitResponse {
  status: "accepted" | "weak_needs_confirmation";
  report: {
    rules: RuleFlags;
    score: number;
    band: BandName;
    color: ColorName;
  };
  common: string | null;
  suggestion: SuggestionView | null;
  slot: SlotView;
}

export interface FinalizeResponse {
  profile_id: string;
  recovery_threshold: number;
  entries: { question: string; band: string; weak_override: boolean }[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
    public readonly field: string | null = null,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let code = "internal";
  let message = `HTTP ${response.status}`;
  let field: string | null = null;
  try {
    const body = await response.json();
    code = body.code ?? code;
    message = body.message ?? message;
    field = body.field ?? null;
  } catch {
    // non-JSON error body; keep the defaults
  }
  throw new ApiError(response.status, code, message, field);
}

export class MeterApi {
  constructor(
    private readonly baseUrl: string,
    private token: string | null = null,
  ) {}

  private headers(): Record<string, string> {
    const headers: Record<string, string> = { "content-type": "application/json" };
    if (this.token) headers["authorization"] = `Bearer ${this.token}`;
    return headers;
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: this.headers(),
      body: body === undefined ? undefined : JSON.stringify(body),
      signal,
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  score(answer: string, signal?: AbortSignal): Promise<ScoreResponse> {
    return this.request("POST", "/score", { answer }, signal);
  }

  async questions(): Promise<QuestionInfo[]> {
    const body = await this.request<{ questions: QuestionInfo[] }>("GET", "/questions");
    return body.questions;
  }

  async createSession(): Promise<CreatedSession> {
    const created = await this.request<CreatedSession>("POST", "/sessions");
    this.token = created.token;
    return created;
  }

  setPredefined(sessionId: string, slot: number, questionId: string): Promise<SessionView> {
    return this.request("PUT", `/sessions/${sessionId}/slots/${slot}/question`, {
      question_id: questionId,
    });
  }

  setCustom(sessionId: string, slot: number, text: string): Promise<SessionView> {
    return this.request("PUT", `/sessions/${sessionId}/slots/${slot}/question`, { text });
  }

  submitAnswer(sessionId: string, slot: number, answer: string): Promise<SubmitResponse> {
    return this.request("POST", `/sessions/${sessionId}/slots/${slot}/answer`, { answer });
  }

  confirmWeak(sessionId: string, slot: number, answer: string): Promise<{ slot: SlotView }> {
    return this.request("POST", `/sessions/${sessionId}/slots/${slot}/confirm-weak`, {
      answer,
    });
  }

  finalize(sessionId: string, threshold?: number): Promise<FinalizeResponse> {
    return this.request("POST", `/sessions/${sessionId}/finalize`, {
      threshold: threshold ?? null,
    });
  }

  async recover(profileId: string, answers: (string | null)[]): Promise<boolean> {
    const body = await this.request<{ granted: boolean }>(
      "POST",
      `/recover/${profileId}`,
      { answers },
    );
    return body.granted;
  }
}
