// Typed client for the argcoach platform API. Every derived value the UI
// shows (prose previews, completeness, rating means, search scores) comes
// from these endpoints; the client never recomputes them.

export interface CaseSummary {
  id: string
  title: string
  abstract: string
  attachments: string[]
  author_ref: string
  opened_at: string
  tags: string[]
}

export interface DraftDocument {
  claim: string | null
  grounds: string[]
  warrant: string | null
  backing: string | null
  qualifier: string | null
  rebuttal: string | null
  locale: string
  case_ref: string
  author_ref: string
}

export interface ArgumentRecord {
  id: string
  case_ref: string
  author_ref: string
  published_at: string
  rendered_text: string
  template_version: string
  draft: DraftDocument
}

export interface ArgumentPage {
  items: ArgumentRecord[]
  page: number
  page_size: number
  total: number
}

export interface WizardPrompt {
  target: string
  question: string
  hint: string | null
}

export interface WizardState {
  session_id: string
  draft_id: string
  locale: string
  done: boolean
  prompt: WizardPrompt | null
  completeness: string
  publishable: boolean
  grounds: string[]
}

export interface RenderResult {
  draft_id: string
  locale: string
  annotated: boolean
  text: string
}

export interface RatingSummary {
  argument_ref: string
  community_count: number
  community_mean: number | null
  moderator_count: number
  moderator_mean: number | null
}

export interface CriticalQuestion {
  id: string
  text: string
  kind: "premise_acceptability" | "exception"
}

export interface Scheme {
  id: string
  name: string
  premises: string[]
  conclusion: string
  critical_questions: CriticalQuestion[]
  source: string
}

export interface ChecklistReport {
  draft_ref: string
  answers: Record<string, string>
  flaws: string[]
  advisory: string[]
}

export interface SearchHit {
  kind: "case" | "argument"
  id: string
  score: number
  label: string | null
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
    readonly issues: string[] = [],
  ) {
    super(detail)
  }
}

type Params = Record<string, string | number | boolean | undefined>

export class ApiClient {
  token: string | null = null

  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, params?: Params, body?: unknown): Promise<T> {
    const url = new URL(path, this.baseUrl)
    for (const [key, value] of Object.entries(params ?? {})) {
      if (value !== undefined) url.searchParams.set(key, String(value))
    }
    const headers: Record<string, string> = {}
    if (body !== undefined) headers["Content-Type"] = "application/json"
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`
    const response = await fetch(url.toString(), {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    })
    const text = await response.text()
    const data = text ? JSON.parse(text) : null
    if (!response.ok) {
      const code = data?.error ?? data?.detail ?? `HTTP ${response.status}`
      throw new ApiError(response.status, String(code), String(data?.detail ?? code), data?.issues ?? [])
    }
    return data as T
  }

  get<T>(path: string, params?: Params): Promise<T> {
    return this.request<T>("GET", path, params)
  }

  post<T>(path: string, body?: unknown, params?: Params): Promise<T> {
    return this.request<T>("POST", path, params, body)
  }

  // --- cases and arguments ---

  listCases(): Promise<{ cases: CaseSummary[] }> {
    return this.get("/cases")
  }

  listArguments(caseId: string, opts: { sort?: string; page?: number; author?: string } = {}): Promise<ArgumentPage> {
    return this.get(`/cases/${caseId}/arguments`, {
      sort: opts.sort ?? "newest",
      page: opts.page ?? 1,
      author: opts.author,
    })
  }

  publishDraft(caseId: string, draftId: string): Promise<{ id: string }> {
    return this.post(`/cases/${caseId}/arguments`, { draft_id: draftId })
  }

  getArgument(argumentId: string): Promise<ArgumentRecord> {
    return this.get(`/arguments/${argumentId}`)
  }

  // --- wizard and drafts ---

  openWizard(caseId: string, locale: string): Promise<WizardState> {
    return this.post("/wizard/sessions", { case_ref: caseId, locale })
  }

  wizardPrompt(sessionId: string): Promise<WizardState> {
    return this.get(`/wizard/sessions/${sessionId}/prompt`)
  }

  answer(sessionId: string, answer: string): Promise<WizardState> {
    return this.post(`/wizard/sessions/${sessionId}/answers`, { answer })
  }

  signal(sessionId: string, signal: "skip" | "no_more_grounds"): Promise<WizardState> {
    return this.post(`/wizard/sessions/${sessionId}/answers`, { signal })
  }

  renderDraft(draftId: string, opts: { locale?: string; annotated?: boolean } = {}): Promise<RenderResult> {
    return this.post(`/drafts/${draftId}/render`, undefined, {
      locale: opts.locale,
      annotated: opts.annotated ?? true,
    })
  }

  runChecklist(draftId: string, answers: Record<string, string>, locale?: string): Promise<ChecklistReport> {
    return this.post(`/drafts/${draftId}/checklist`, { answers }, { locale })
  }

  // --- ratings ---

  rate(argumentId: string, stars: number, comment?: string): Promise<unknown> {
    return this.post(`/arguments/${argumentId}/ratings`, { stars, comment: comment ?? null })
  }

  ratingSummary(argumentId: string): Promise<RatingSummary> {
    return this.get(`/arguments/${argumentId}/ratings/summary`)
  }

  // --- schemes and search ---

  searchSchemes(query: string, locale?: string): Promise<{ locale: string; schemes: Scheme[] }> {
    return this.get("/schemes", { q: query, locale })
  }

  criticalQuestions(schemeId: string, locale?: string): Promise<{ critical_questions: CriticalQuestion[] }> {
    return this.get(`/schemes/${schemeId}/critical-questions`, { locale })
  }

  search(query: string): Promise<{ query: string; hits: SearchHit[] }> {
    return this.get("/search", { q: query })
  }
}
