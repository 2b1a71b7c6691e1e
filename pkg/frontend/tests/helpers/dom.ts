// Small DOM conveniences for driving components in tests.

export function root(): HTMLElement {
  document.body.innerHTML = '<div id="root"></div>'
  return document.getElementById("root")!
}

export async function flush(rounds = 4): Promise<void> {
  for (let i = 0; i < rounds; i++) {
    await new Promise(resolve => setTimeout(resolve, 0))
  }
}

export async function waitFor<T>(probe: () => T | null | undefined | false,
                                 timeoutMs = 10_000): Promise<T> {
  const deadline = Date.now() + timeoutMs
  for (;;) {
    const found = probe()
    if (found) return found
    if (Date.now() > deadline) throw new Error("waitFor timed out")
    await new Promise(resolve => setTimeout(resolve, 25))
  }
}

export function q<T extends HTMLElement>(scope: ParentNode, selector: string): T {
  const found = scope.querySelector<T>(selector)
  if (!found) throw new Error(`missing element: ${selector}`)
  return found
}

export function click(element: HTMLElement): void {
  element.dispatchEvent(new MouseEvent("click", { bubbles: true }))
}

export function type(input: HTMLInputElement | HTMLTextAreaElement, value: string): void {
  input.value = value
  input.dispatchEvent(new Event("input", { bubbles: true }))
}
