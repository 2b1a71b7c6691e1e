import { beforeEach, describe, expect, it } from "vitest"

import { ApiClient, ArgumentRecord } from "../src/api.js"
import { mountRatingWidget } from "../src/rating.js"
import { click, flush, q, root } from "./helpers/dom.js"
import { MockServer } from "./helpers/mock-server.js"

let server: MockServer

function record(author = "alice"): ArgumentRecord {
  return {
    id: "argument-1",
    case_ref: "case-1",
    author_ref: author,
    published_at: "2026-01-01T00:00:00Z",
    rendered_text: "Therefore, X.",
    template_version: "mock",
    draft: {
      claim: "X", grounds: ["g"], warrant: null, backing: null,
      qualifier: null, rebuttal: null, locale: "en",
      case_ref: "case-1", author_ref: author,
    },
  }
}

beforeEach(() => {
  server = new MockServer()
  server.install()
  server.published.push({
    id: "argument-1", case_ref: "case-1", author_ref: "alice",
    rendered_text: "Therefore, X.",
    draft: { claim: "X", grounds: ["g"], warrant: null, backing: null, qualifier: null, rebuttal: null },
  })
})

describe("rating widget", () => {
  it("submits stars and refreshes the two-column summary", async () => {
    const client = new ApiClient("http://mock.local")
    client.token = "tok-bruno"
    const box = root()
    await mountRatingWidget(box, { client, argument: record(), currentUser: "bruno" })
    await flush()
    expect(q(box, '[data-role="community"]').textContent).toBe("— (0)")

    click(box.querySelector<HTMLButtonElement>('button[data-stars="4"]')!)
    await flush()
    expect(q(box, '[data-role="community"]').textContent).toBe("4.00 ★ (1)")
    expect(q(box, '[data-role="moderator"]').textContent).toBe("— (0)")
    const summaryCalls = server.calls.filter(c => c.path.endsWith("/ratings/summary"))
    expect(summaryCalls.length).toBe(2) // initial load + post-submit refresh
  })

  it("keeps moderator ratings out of the community column", async () => {
    const client = new ApiClient("http://mock.local")
    client.token = "tok-prof"
    const box = root()
    await mountRatingWidget(box, { client, argument: record(), currentUser: "prof" })
    await flush()
    click(box.querySelector<HTMLButtonElement>('button[data-stars="3"]')!)
    await flush()
    expect(q(box, '[data-role="moderator"]').textContent).toBe("3.00 ★ (1)")
    expect(q(box, '[data-role="community"]').textContent).toBe("— (0)")
  })

  it("disables the widget on the author's own argument", async () => {
    const client = new ApiClient("http://mock.local")
    client.token = "tok-alice"
    const box = root()
    await mountRatingWidget(box, { client, argument: record("alice"), currentUser: "alice" })
    await flush()
    const stars = box.querySelectorAll<HTMLButtonElement>("button.star")
    expect(stars).toHaveLength(5)
    for (const star of stars) expect(star.disabled).toBe(true)
  })

  it("surfaces a server self-rating rejection inline", async () => {
    const client = new ApiClient("http://mock.local")
    client.token = "tok-alice" // alice is the author; widget unaware of identity
    const box = root()
    await mountRatingWidget(box, { client, argument: record("alice"), currentUser: null })
    await flush()
    click(box.querySelector<HTMLButtonElement>('button[data-stars="5"]')!)
    await flush()
    const errorLine = q<HTMLParagraphElement>(box, '[data-role="error"]')
    expect(errorLine.hidden).toBe(false)
    expect(errorLine.textContent).toContain("own arguments")
  })
})
