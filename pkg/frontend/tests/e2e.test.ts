// End-to-end: a scripted browser session against a live platform server.
// The session completes the whole composition flow, the preview pane must
// show the server's golden rendering byte-for-byte, and the published
// argument must appear in the case feed with a working two-column rating
// summary.

import { spawn, ChildProcess } from "node:child_process"
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs"
import { get } from "node:http"
import { tmpdir } from "node:os"
import { join } from "node:path"
import { afterAll, beforeAll, describe, expect, it } from "vitest"

import { mountApp } from "../src/main.js"
import { click, flush, q, type, waitFor } from "./helpers/dom.js"

const PORT = 8123 + (process.pid % 500)
const BASE = `http://127.0.0.1:${PORT}`
const FIXTURES = join(__dirname, "..", "..", "tests", "fixtures", "keen")

let server: ChildProcess

function ping(): Promise<boolean> {
  return new Promise(resolve => {
    const request = get(`${BASE}/health`, response => {
      response.resume()
      resolve(response.statusCode === 200)
    })
    request.on("error", () => resolve(false))
  })
}

async function waitForServer(): Promise<void> {
  const deadline = Date.now() + 30_000
  while (Date.now() < deadline) {
    if (await ping()) return
    await new Promise(resolve => setTimeout(resolve, 200))
  }
  throw new Error("server did not come up")
}

beforeAll(async () => {
  const dir = mkdtempSync(join(tmpdir(), "argcoach-e2e-"))
  writeFileSync(join(dir, "tokens.json"), JSON.stringify({
    "tok-alice": { user: "alice", role: "student" },
    "tok-bruno": { user: "bruno", role: "student" },
    "tok-prof": { user: "prof", role: "moderator" },
  }))
  writeFileSync(join(dir, "config.json"), JSON.stringify({
    data_dir: join(dir, "data"),
    token_file: join(dir, "tokens.json"),
    port: PORT,
  }))
  server = spawn("python3", [
    "-m", "argcoach.service.cli", "--config", join(dir, "config.json"), "serve",
  ], { stdio: ["ignore", "pipe", "pipe"] })
  server.stderr?.on("data", () => undefined)
  await waitForServer()

  // the professor posts this week's case
  const seeded = await fetch(`${BASE}/cases`, {
    method: "POST",
    headers: { "Content-Type": "application/json", Authorization: "Bearer tok-prof" },
    body: JSON.stringify({
      title: "The Speluncean Explorers",
      abstract: "Explorers sacrificed one of their own to survive; the appeal "
        + "against their condemnation is before the court.",
    }),
  })
  expect(seeded.status).toBe(201)
}, 60_000)

afterAll(() => {
  server?.kill()
})

function signIn(root: HTMLElement, token: string, user: string) {
  type(q(root, '[data-role="token"]'), token)
  type(q(root, '[data-role="user"]'), user)
  click(q(root, '[data-role="login"]'))
}

function argumentCard(root: HTMLElement): HTMLElement | null {
  return root.querySelector<HTMLElement>(".argument-card")
}

describe("scripted session against the live server", () => {
  it("completes the Keen flow, previews the golden text, publishes and rates", async () => {
    const payloads = JSON.parse(readFileSync(join(FIXTURES, "payloads.json"), "utf-8"))
    const golden = readFileSync(join(FIXTURES, "rendered_annotated.txt"), "utf-8")

    document.body.innerHTML = '<div id="app"></div>'
    const root = document.getElementById("app")!
    mountApp(root, { apiBase: BASE })
    await waitFor(() => root.querySelector(".case-entry.pinned"))

    signIn(root, "tok-alice", "alice")
    await flush(10)

    // the weekly case is pinned at the top of the feed
    const pinned = await waitFor(() => root.querySelector<HTMLButtonElement>(".case-entry.pinned"))
    expect(pinned.textContent).toContain("The Speluncean Explorers")
    click(pinned)
    await waitFor(() => !q<HTMLElement>(root, '[data-role="detail"]').hidden || undefined)

    click(q(root, '[data-role="compose"]'))
    const question = await waitFor(() => {
      const node = root.querySelector('[data-role="question"]')
      return node?.textContent ? node : null
    })

    const answerBox = q<HTMLTextAreaElement>(root, '[data-role="answer"]')
    const submit = q<HTMLButtonElement>(root, '[data-role="submit"]')
    const answer = async (text: string, expectAfter: (state: string) => boolean) => {
      type(answerBox, text)
      click(submit)
      await waitFor(() => expectAfter(question.textContent ?? "") || undefined)
    }

    expect(question.textContent).toBe("What are you trying to prove?")
    await answer(payloads.claim, s => s === "What facts or reasons support it?")
    let expected = 0
    for (const ground of payloads.grounds) {
      expected += 1
      const count = expected
      type(answerBox, ground)
      click(submit)
      await waitFor(() =>
        q(root, '[data-role="grounds"]').children.length === count || undefined)
    }
    click(q(root, '[data-role="no-more"]'))
    await waitFor(() =>
      question.textContent === "Why do you have those assumptions?" || undefined)
    await answer(payloads.warrant, s => s === "What authority backs that rule?")
    await answer(payloads.backing, s => s === "How strongly does your claim hold?")
    click(q(root, '[data-role="skip"]')) // qualifier
    await waitFor(() =>
      question.textContent === "Under which circumstances would your claim not hold?"
      || undefined)
    click(q(root, '[data-role="skip"]')) // rebuttal
    await waitFor(() => question.textContent === "All elements collected." || undefined)

    // the preview pane shows the server's golden rendering exactly
    await waitFor(() => q(root, '[data-role="preview"]').textContent === golden || undefined)
    expect(q(root, '[data-role="preview"]').textContent).toBe(golden)

    const publish = q<HTMLButtonElement>(root, '[data-role="publish"]')
    expect(publish.disabled).toBe(false)
    click(publish)

    // publishing lands the argument in the case feed
    const card = await waitFor(() => argumentCard(root))
    expect(card.querySelector(".argument-text")!.textContent).toBe(golden)
    await waitFor(() =>
      card.querySelector('[data-role="community"]')!.textContent === "— (0)" || undefined)

    // a peer rates five stars: community column moves, moderator stays empty
    signIn(root, "tok-bruno", "bruno")
    const freshCard = await waitFor(() => {
      const found = argumentCard(root)
      return found && found !== card ? found : null
    })
    await waitFor(() =>
      freshCard.querySelector('[data-role="community"]')!.textContent === "— (0)" || undefined)
    click(freshCard.querySelector<HTMLButtonElement>('button[data-stars="5"]')!)
    await waitFor(() =>
      freshCard.querySelector('[data-role="community"]')!.textContent === "5.00 ★ (1)"
      || undefined)
    expect(freshCard.querySelector('[data-role="moderator"]')!.textContent).toBe("— (0)")

    // the professor rates three stars into the moderator dimension
    signIn(root, "tok-prof", "prof")
    const profCard = await waitFor(() => {
      const found = argumentCard(root)
      return found && found !== freshCard ? found : null
    })
    await waitFor(() =>
      profCard.querySelector('[data-role="community"]')!.textContent === "5.00 ★ (1)"
      || undefined)
    click(profCard.querySelector<HTMLButtonElement>('button[data-stars="3"]')!)
    await waitFor(() =>
      profCard.querySelector('[data-role="moderator"]')!.textContent === "3.00 ★ (1)"
      || undefined)
    expect(profCard.querySelector('[data-role="community"]')!.textContent).toBe("5.00 ★ (1)")
  }, 120_000)
})
