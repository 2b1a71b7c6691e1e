// Guided composition: one server prompt at a time, a live prose preview after
// every answer, and a publish button that only unlocks once the server's
// structural gate passes.

import { ApiClient, ApiError, WizardState } from "./api.js"

export interface WizardOptions {
  client: ApiClient
  caseId: string
  locale: string
  onPublished?: (argumentId: string) => void
}

export function mountWizard(root: HTMLElement, options: WizardOptions): Promise<{ draftId: string | null }> {
  root.innerHTML = `
    <div class="wizard">
      <div class="wizard-question">
        <p class="prompt-question" data-role="question"></p>
        <p class="prompt-hint" data-role="hint"></p>
        <ul class="ground-list" data-role="grounds"></ul>
        <textarea data-role="answer" rows="3" placeholder="Type your answer"></textarea>
        <div class="wizard-actions">
          <button data-role="submit">Answer</button>
          <button data-role="skip" hidden>Skip</button>
          <button data-role="no-more" hidden>No more reasons</button>
        </div>
        <p class="wizard-error" data-role="error" hidden></p>
      </div>
      <div class="wizard-preview">
        <h3>Preview</h3>
        <blockquote data-role="preview"></blockquote>
        <button data-role="publish" disabled>Publish to case</button>
        <p class="wizard-status" data-role="status"></p>
      </div>
    </div>`

  const el = <T extends HTMLElement>(role: string): T => {
    const found = root.querySelector<T>(`[data-role="${role}"]`)
    if (!found) throw new Error(`wizard is missing ${role}`)
    return found
  }
  const question = el<HTMLParagraphElement>("question")
  const hint = el<HTMLParagraphElement>("hint")
  const grounds = el<HTMLUListElement>("grounds")
  const answerBox = el<HTMLTextAreaElement>("answer")
  const submit = el<HTMLButtonElement>("submit")
  const skip = el<HTMLButtonElement>("skip")
  const noMore = el<HTMLButtonElement>("no-more")
  const errorLine = el<HTMLParagraphElement>("error")
  const preview = el<HTMLQuoteElement>("preview")
  const publish = el<HTMLButtonElement>("publish")
  const status = el<HTMLParagraphElement>("status")

  const { client, caseId, locale, onPublished } = options
  let state: WizardState | null = null

  function showError(message: string, issues: string[] = []) {
    errorLine.hidden = false
    errorLine.textContent = issues.length ? `${message}: ${issues.join(", ")}` : message
  }

  function clearError() {
    errorLine.hidden = true
    errorLine.textContent = ""
  }

  async function refreshPreview() {
    if (!state) return
    if (state.completeness === "empty") {
      preview.textContent = ""
      return
    }
    // The preview is always the server's rendering, never assembled locally.
    const rendered = await client.renderDraft(state.draft_id, { locale, annotated: true })
    preview.textContent = rendered.text
  }

  function sync() {
    if (!state) return
    grounds.innerHTML = ""
    for (const [index, ground] of state.grounds.entries()) {
      const item = document.createElement("li")
      item.textContent = `(${index + 1}) ${ground}`
      grounds.appendChild(item)
    }
    if (state.done) {
      question.textContent = "All elements collected."
      hint.textContent = "Review the preview, run the checklist, then publish."
      answerBox.hidden = true
      submit.hidden = true
      skip.hidden = true
      noMore.hidden = true
    } else if (state.prompt) {
      question.textContent = state.prompt.question
      hint.textContent = state.prompt.hint ?? ""
      answerBox.hidden = false
      submit.hidden = false
      // legality of a skip is the server's call; rejections land inline
      skip.hidden = false
      noMore.hidden = !(state.prompt.target === "ground" && state.grounds.length > 0)
    }
    publish.disabled = !state.publishable
    status.textContent = `completeness: ${state.completeness}`
  }

  async function step(action: () => Promise<WizardState>) {
    clearError()
    try {
      state = await action()
      await refreshPreview()
    } catch (error) {
      if (error instanceof ApiError) showError(error.message, error.issues)
      else throw error
    }
    sync()
  }

  submit.addEventListener("click", () => {
    const text = answerBox.value.trim()
    if (!state || !text) return
    void step(() => client.answer(state!.session_id, text)).then(() => {
      answerBox.value = ""
      answerBox.focus()
    })
  })
  skip.addEventListener("click", () => {
    if (state) void step(() => client.signal(state!.session_id, "skip"))
  })
  noMore.addEventListener("click", () => {
    if (state) void step(() => client.signal(state!.session_id, "no_more_grounds"))
  })
  publish.addEventListener("click", async () => {
    if (!state) return
    clearError()
    try {
      const published = await client.publishDraft(caseId, state.draft_id)
      status.textContent = "published"
      onPublished?.(published.id)
    } catch (error) {
      if (error instanceof ApiError) showError(error.message, error.issues)
      else throw error
    }
  })

  return step(() => client.openWizard(caseId, locale)).then(() => ({
    draftId: state ? state.draft_id : null,
  }))
}
