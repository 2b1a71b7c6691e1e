// Case feed and per-case argument listing. The newest case is pinned at the
// top, mirroring the weekly-case rhythm; argument prose is the server's
// cached rendering.

import { ApiClient, ArgumentRecord, CaseSummary } from "./api.js"
import { mountRatingWidget } from "./rating.js"

export interface FeedOptions {
  client: ApiClient
  currentUser: () => string | null
  onCompose?: (caseId: string) => void
}

export async function mountFeed(root: HTMLElement, options: FeedOptions): Promise<void> {
  const { client, currentUser, onCompose } = options
  root.innerHTML = `
    <div class="feed">
      <section class="case-list" data-role="cases"></section>
      <section class="case-detail" data-role="detail" hidden>
        <header>
          <h2 data-role="title"></h2>
          <p data-role="abstract"></p>
          <div class="case-actions">
            <label>sort
              <select data-role="sort">
                <option value="newest">newest</option>
                <option value="top_community">top (community)</option>
                <option value="top_moderator">top (moderators)</option>
              </select>
            </label>
            <button data-role="compose">Compose an argument</button>
          </div>
        </header>
        <div class="argument-list" data-role="arguments"></div>
      </section>
    </div>`

  const caseList = root.querySelector<HTMLElement>('[data-role="cases"]')!
  const detail = root.querySelector<HTMLElement>('[data-role="detail"]')!
  const title = root.querySelector<HTMLHeadingElement>('[data-role="title"]')!
  const abstract = root.querySelector<HTMLParagraphElement>('[data-role="abstract"]')!
  const sortSelect = root.querySelector<HTMLSelectElement>('[data-role="sort"]')!
  const composeButton = root.querySelector<HTMLButtonElement>('[data-role="compose"]')!
  const argumentsBox = root.querySelector<HTMLElement>('[data-role="arguments"]')!

  let activeCase: CaseSummary | null = null

  async function showArguments(): Promise<void> {
    if (!activeCase) return
    const page = await client.listArguments(activeCase.id, { sort: sortSelect.value })
    argumentsBox.innerHTML = ""
    if (page.items.length === 0) {
      argumentsBox.textContent = "No arguments published yet."
      return
    }
    for (const record of page.items) {
      argumentsBox.appendChild(renderArgument(record))
    }
  }

  function renderArgument(record: ArgumentRecord): HTMLElement {
    const card = document.createElement("article")
    card.className = "argument-card"
    card.dataset.argumentId = record.id
    const byline = document.createElement("p")
    byline.className = "argument-byline"
    byline.textContent = `by ${record.author_ref} — ${record.published_at}`
    const prose = document.createElement("blockquote")
    prose.className = "argument-text"
    prose.textContent = record.rendered_text
    const ratingBox = document.createElement("div")
    card.append(byline, prose, ratingBox)
    void mountRatingWidget(ratingBox, {
      client,
      argument: record,
      currentUser: currentUser(),
    })
    return card
  }

  async function showCase(summary: CaseSummary): Promise<void> {
    activeCase = summary
    detail.hidden = false
    title.textContent = summary.title
    abstract.textContent = summary.abstract
    await showArguments()
  }

  sortSelect.addEventListener("change", () => void showArguments())
  composeButton.addEventListener("click", () => {
    if (activeCase) onCompose?.(activeCase.id)
  })
  root.addEventListener("feed-refresh", () => void showArguments())

  const { cases } = await client.listCases()
  caseList.innerHTML = ""
  for (const [index, summary] of cases.entries()) {
    const entry = document.createElement("button")
    entry.className = index === 0 ? "case-entry pinned" : "case-entry"
    entry.textContent = index === 0 ? `📌 ${summary.title}` : summary.title
    entry.addEventListener("click", () => void showCase(summary))
    caseList.appendChild(entry)
  }
  if (cases.length > 0) await showCase(cases[0])
}
