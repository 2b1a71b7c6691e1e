// Verification-roll runner for a draft. The question texts are client locale
// strings keyed by the server's stable roll ids; the flaw analysis itself is
// entirely the server's verdict.

import { ApiClient, ApiError, ChecklistReport } from "./api.js"

export const ROLL_TEXTS: Record<string, Record<string, string>> = {
  en: {
    q1: "Is it clear and sure the claim the argument tries to make?",
    q2: "Is there clarity and certainty in what is implicitly purposed (is there any purpose)?",
    q3: "Are the data/reasons relevant?",
    q4: "Are the data/reasons enough?",
    q5: "Are the data/reasons justified?",
  },
  "pt-BR": {
    q1: "A tese que o argumento pretende sustentar está clara e segura?",
    q2: "Há clareza e certeza no que está implicitamente proposto (há algum propósito)?",
    q3: "Os dados/razões são relevantes?",
    q4: "Os dados/razões são suficientes?",
    q5: "Os dados/razões são justificados?",
  },
}

const ANSWER_LABELS = ["yes", "no", "unsure"] as const

export interface ChecklistOptions {
  client: ApiClient
  draftId: string
  locale: string
}

export function mountChecklist(root: HTMLElement, options: ChecklistOptions): void {
  const { client, draftId, locale } = options
  const texts = ROLL_TEXTS[locale] ?? ROLL_TEXTS.en

  const form = document.createElement("form")
  form.className = "checklist"
  for (const [qid, text] of Object.entries(texts)) {
    const row = document.createElement("fieldset")
    const legend = document.createElement("legend")
    legend.textContent = text
    row.appendChild(legend)
    for (const value of ANSWER_LABELS) {
      const label = document.createElement("label")
      const radio = document.createElement("input")
      radio.type = "radio"
      radio.name = qid
      radio.value = value
      label.append(radio, document.createTextNode(value))
      row.appendChild(label)
    }
    form.appendChild(row)
  }
  const run = document.createElement("button")
  run.type = "submit"
  run.textContent = "Run checklist"
  form.appendChild(run)

  const result = document.createElement("div")
  result.className = "checklist-result"
  result.dataset.role = "result"

  form.addEventListener("submit", async event => {
    event.preventDefault()
    const answers: Record<string, string> = {}
    for (const qid of Object.keys(texts)) {
      const checked = form.querySelector<HTMLInputElement>(`input[name="${qid}"]:checked`)
      if (checked) answers[qid] = checked.value
    }
    try {
      const report: ChecklistReport = await client.runChecklist(draftId, answers, locale)
      const flaws = report.flaws.length
        ? `flaws: ${report.flaws.join(", ")}`
        : "no flaws found"
      const advisory = report.advisory.length
        ? ` | revisit: ${report.advisory.join(" / ")}`
        : ""
      result.textContent = flaws + advisory
    } catch (error) {
      result.textContent = error instanceof ApiError ? error.message : String(error)
    }
  })

  root.innerHTML = ""
  root.append(form, result)
}
