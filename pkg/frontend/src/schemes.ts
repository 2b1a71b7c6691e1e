// Scheme browser: name search over the server's per-locale scheme sets, with
// a detail view whose critical questions work as a client-local self-check.

import { ApiClient, Scheme } from "./api.js"

export interface SchemeBrowserOptions {
  client: ApiClient
  locale: string
}

export function mountSchemeBrowser(root: HTMLElement, options: SchemeBrowserOptions): Promise<void> {
  root.innerHTML = `
    <div class="schemes">
      <input data-role="query" placeholder="Search schemes by name">
      <ul class="scheme-list" data-role="list"></ul>
      <div class="scheme-detail" data-role="detail" hidden>
        <h3 data-role="name"></h3>
        <p class="scheme-source" data-role="source"></p>
        <h4>Premises</h4>
        <ul data-role="premises"></ul>
        <h4>Conclusion</h4>
        <p data-role="conclusion"></p>
        <h4>Critical questions</h4>
        <ul class="cq-list" data-role="questions"></ul>
      </div>
      <p class="schemes-empty" data-role="empty" hidden>No schemes match.</p>
    </div>`

  const query = root.querySelector<HTMLInputElement>('[data-role="query"]')!
  const list = root.querySelector<HTMLUListElement>('[data-role="list"]')!
  const detail = root.querySelector<HTMLDivElement>('[data-role="detail"]')!
  const empty = root.querySelector<HTMLParagraphElement>('[data-role="empty"]')!

  const { client } = options
  let locale = options.locale

  function showDetail(scheme: Scheme) {
    detail.hidden = false
    detail.querySelector('[data-role="name"]')!.textContent = scheme.name
    detail.querySelector('[data-role="source"]')!.textContent = scheme.source
    detail.querySelector('[data-role="conclusion"]')!.textContent = scheme.conclusion
    const premises = detail.querySelector<HTMLUListElement>('[data-role="premises"]')!
    premises.innerHTML = ""
    for (const premise of scheme.premises) {
      const item = document.createElement("li")
      item.textContent = premise
      premises.appendChild(item)
    }
    const questions = detail.querySelector<HTMLUListElement>('[data-role="questions"]')!
    questions.innerHTML = ""
    for (const cq of scheme.critical_questions) {
      const item = document.createElement("li")
      const box = document.createElement("input")
      box.type = "checkbox" // self-check only; nothing is sent to the server
      box.id = `cq-${scheme.id}-${cq.id}`
      const label = document.createElement("label")
      label.htmlFor = box.id
      label.textContent = `${cq.text} [${cq.kind === "exception" ? "exception" : "premise"}]`
      item.append(box, label)
      questions.appendChild(item)
    }
  }

  async function refresh(): Promise<void> {
    const found = await client.searchSchemes(query.value, locale)
    list.innerHTML = ""
    empty.hidden = found.schemes.length > 0
    for (const scheme of found.schemes) {
      const item = document.createElement("li")
      const link = document.createElement("button")
      link.className = "scheme-name"
      link.textContent = scheme.name
      link.addEventListener("click", () => showDetail(scheme))
      item.appendChild(link)
      list.appendChild(item)
    }
  }

  query.addEventListener("input", () => void refresh())
  root.addEventListener("locale-changed", event => {
    locale = (event as CustomEvent<string>).detail
    detail.hidden = true
    void refresh()
  })
  return refresh()
}
