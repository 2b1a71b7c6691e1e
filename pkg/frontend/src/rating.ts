// Five-star rating widget with the community and moderator means displayed
// side by side. The widget is disabled on the viewer's own arguments; all
// aggregates come back from the summary endpoint.

import { ApiClient, ApiError, ArgumentRecord, RatingSummary } from "./api.js"

export interface RatingOptions {
  client: ApiClient
  argument: ArgumentRecord
  currentUser: string | null
}

function meanCell(mean: number | null, count: number): string {
  return mean === null ? `— (${count})` : `${mean.toFixed(2)} ★ (${count})`
}

export async function mountRatingWidget(root: HTMLElement, options: RatingOptions): Promise<void> {
  const { client, argument, currentUser } = options
  const ownArgument = currentUser !== null && currentUser === argument.author_ref

  root.innerHTML = `
    <div class="rating">
      <div class="rating-stars" data-role="stars"></div>
      <input data-role="comment" placeholder="Optional comment" ${ownArgument ? "hidden" : ""}>
      <table class="rating-summary">
        <thead><tr><th>Community</th><th>Moderators</th></tr></thead>
        <tbody><tr>
          <td data-role="community"></td>
          <td data-role="moderator"></td>
        </tr></tbody>
      </table>
      <p class="rating-error" data-role="error" hidden></p>
    </div>`

  const starsBox = root.querySelector<HTMLDivElement>('[data-role="stars"]')!
  const comment = root.querySelector<HTMLInputElement>('[data-role="comment"]')!
  const community = root.querySelector<HTMLTableCellElement>('[data-role="community"]')!
  const moderator = root.querySelector<HTMLTableCellElement>('[data-role="moderator"]')!
  const errorLine = root.querySelector<HTMLParagraphElement>('[data-role="error"]')!

  function renderSummary(summary: RatingSummary) {
    community.textContent = meanCell(summary.community_mean, summary.community_count)
    moderator.textContent = meanCell(summary.moderator_mean, summary.moderator_count)
  }

  for (let stars = 1; stars <= 5; stars++) {
    const button = document.createElement("button")
    button.className = "star"
    button.dataset.stars = String(stars)
    button.textContent = "★".repeat(stars)
    button.disabled = ownArgument
    button.title = ownArgument ? "You cannot rate your own argument" : `${stars} stars`
    button.addEventListener("click", async () => {
      errorLine.hidden = true
      try {
        await client.rate(argument.id, stars, comment.value || undefined)
        renderSummary(await client.ratingSummary(argument.id))
      } catch (error) {
        if (error instanceof ApiError) {
          errorLine.hidden = false
          errorLine.textContent = error.message
        } else throw error
      }
    })
    starsBox.appendChild(button)
  }

  renderSummary(await client.ratingSummary(argument.id))
}
