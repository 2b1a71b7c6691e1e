// Application shell: token login, locale switcher, and the three surfaces
// (case feed, composition wizard, scheme browser) wired over one ApiClient.

import { ApiClient } from "./api.js"
import { mountChecklist } from "./checklist.js"
import { mountFeed } from "./feed.js"
import { mountSchemeBrowser } from "./schemes.js"
import { Store } from "./store.js"
import { mountWizard } from "./wizard.js"

export interface AppOptions {
  apiBase?: string
}

export function mountApp(root: HTMLElement, options: AppOptions = {}): {
  client: ApiClient
  store: Store
} {
  const apiBase =
    options.apiBase ??
    new URLSearchParams(location.search).get("api") ??
    "http://127.0.0.1:8765"
  const client = new ApiClient(apiBase)
  const store = new Store()

  root.innerHTML = `
    <header class="topbar">
      <h1>argcoach</h1>
      <nav data-role="tabs">
        <button data-tab="cases" class="active">Cases</button>
        <button data-tab="compose">Compose</button>
        <button data-tab="schemes">Schemes</button>
      </nav>
      <div class="session-controls">
        <input data-role="token" placeholder="access token">
        <input data-role="user" placeholder="user id">
        <button data-role="login">Sign in</button>
        <select data-role="locale">
          <option value="en">English</option>
          <option value="pt-BR">Português (BR)</option>
        </select>
      </div>
    </header>
    <main>
      <section data-panel="cases"></section>
      <section data-panel="compose" hidden><p>Select a case and press "Compose an argument".</p></section>
      <section data-panel="schemes" hidden></section>
    </main>`

  const panel = (name: string) => root.querySelector<HTMLElement>(`[data-panel="${name}"]`)!
  const tabs = root.querySelectorAll<HTMLButtonElement>("[data-tab]")

  function activate(name: string) {
    for (const tab of tabs) tab.classList.toggle("active", tab.dataset.tab === name)
    for (const section of root.querySelectorAll<HTMLElement>("[data-panel]")) {
      section.hidden = section.dataset.panel !== name
    }
  }
  for (const tab of tabs) {
    tab.addEventListener("click", () => activate(tab.dataset.tab!))
  }

  const tokenInput = root.querySelector<HTMLInputElement>('[data-role="token"]')!
  const userInput = root.querySelector<HTMLInputElement>('[data-role="user"]')!
  const loginButton = root.querySelector<HTMLButtonElement>('[data-role="login"]')!
  const localeSelect = root.querySelector<HTMLSelectElement>('[data-role="locale"]')!

  loginButton.addEventListener("click", () => {
    client.token = tokenInput.value.trim() || null
    store.set({ user: userInput.value.trim() || null })
    void mountFeed(panel("cases"), feedOptions)
  })
  localeSelect.addEventListener("change", () => {
    store.set({ locale: localeSelect.value })
    panel("schemes").dispatchEvent(
      new CustomEvent("locale-changed", { detail: localeSelect.value }),
    )
  })

  function startWizard(caseId: string) {
    activate("compose")
    const compose = panel("compose")
    compose.innerHTML = ""
    const wizardBox = document.createElement("div")
    const checklistBox = document.createElement("div")
    compose.append(wizardBox, checklistBox)
    store.set({ activeCaseId: caseId })
    void mountWizard(wizardBox, {
      client,
      caseId,
      locale: store.get().locale,
      onPublished: () => {
        activate("cases")
        panel("cases").dispatchEvent(new Event("feed-refresh"))
      },
    }).then(({ draftId }) => {
      if (draftId) {
        mountChecklist(checklistBox, { client, draftId, locale: store.get().locale })
      }
    })
  }

  const feedOptions = {
    client,
    currentUser: () => store.get().user,
    onCompose: (caseId: string) => startWizard(caseId),
  }

  void mountFeed(panel("cases"), feedOptions)
  void mountSchemeBrowser(panel("schemes"), { client, locale: store.get().locale })

  return { client, store }
}

export { mountChecklist }

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!)
}
