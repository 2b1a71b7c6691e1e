// Minimal observable store for cross-component view state.

export interface ViewState {
  user: string | null
  role: string | null
  locale: string
  activeCaseId: string | null
}

type Listener = (state: ViewState) => void

export class Store {
  private state: ViewState
  private listeners: Listener[] = []

  constructor(initial?: Partial<ViewState>) {
    this.state = {
      user: null,
      role: null,
      locale: "en",
      activeCaseId: null,
      ...initial,
    }
  }

  get(): ViewState {
    return this.state
  }

  set(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch }
    for (const listener of this.listeners) listener(this.state)
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener)
    return () => {
      this.listeners = this.listeners.filter(l => l !== listener)
    }
  }
}
