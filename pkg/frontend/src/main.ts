import { ApiClient } from "./api.js"
import { Controller, View } from "./controller.js"
import { renderBreadcrumb, renderCluster, renderHits, renderTagCloud } from "./render.js"
import type { SessionState } from "./state.js"
import type { QueryResultPayload, TopTag } from "./types.js"

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id)
  if (!node) throw new Error(`missing element #${id}`)
  return node as T
}

// the page can point at a remote service with ?api=http://host:port
const apiBase = new URLSearchParams(location.search).get("api") ?? ""
const api = new ApiClient(apiBase)

const banner = el<HTMLDivElement>("banner")
const cloud = el<HTMLDivElement>("tagcloud")
const graphBox = el<HTMLDivElement>("graph")
const hitsBox = el<HTMLDivElement>("hits")
const breadcrumb = el<HTMLDivElement>("breadcrumb")
const hitCount = el<HTMLSpanElement>("hit-count")
const searchForm = el<HTMLFormElement>("search-form")
const searchInput = el<HTMLInputElement>("search-input")
const slider = el<HTMLInputElement>("threshold")
const sliderValue = el<HTMLSpanElement>("threshold-value")
const measureSelect = el<HTMLSelectElement>("measure")
const methodSelect = el<HTMLSelectElement>("method")
const rankingSelect = el<HTMLSelectElement>("ranking")
const prevButton = el<HTMLButtonElement>("page-prev")
const nextButton = el<HTMLButtonElement>("page-next")
const pageLabel = el<HTMLSpanElement>("page-label")

let currentPage = 1

const view: View = {
  showTagCloud(tags: TopTag[]): void {
    banner.hidden = true
    cloud.innerHTML = renderTagCloud(tags)
  },

  showResult(result: QueryResultPayload, state: SessionState): void {
    banner.hidden = true
    currentPage = state.page
    graphBox.innerHTML = renderCluster(result.graph)
    hitsBox.innerHTML = renderHits(result.hits)
    breadcrumb.innerHTML = renderBreadcrumb(state)
    hitCount.textContent = `${result.hit_count} hits`
    pageLabel.textContent = `page ${state.page}`
    slider.value = String(state.threshold)
    sliderValue.textContent = state.threshold.toFixed(2)
    measureSelect.value = state.measure
    methodSelect.value = state.method
    rankingSelect.value = state.ranking
    prevButton.disabled = state.page <= 1
    nextButton.disabled = result.hits.length < result.page_size
  },

  showError(message: string, retry: () => void): void {
    // previous graph and result list stay in place under the banner
    banner.hidden = false
    banner.innerHTML = ""
    banner.append(`request failed: ${message} `)
    const button = document.createElement("button")
    button.textContent = "retry"
    button.addEventListener("click", retry)
    banner.append(button)
  },
}

const controller = new Controller(api, view)

searchForm.addEventListener("submit", (event) => {
  event.preventDefault()
  void controller.search(searchInput.value)
})

cloud.addEventListener("click", (event) => {
  const tag = (event.target as HTMLElement).dataset.cloudTag
  if (tag) {
    searchInput.value = tag
    void controller.search(tag)
  }
})

graphBox.addEventListener("click", (event) => {
  const target = event.target as Element
  const vertex = target.closest<SVGTextElement>("text[data-tag]")
  if (vertex) {
    void controller.clickVertex(vertex.dataset.tag!)
    return
  }
  const edge = target.closest<SVGLineElement>("line[data-edge-a]")
  if (edge) {
    void controller.clickEdge(edge.dataset.edgeA!, edge.dataset.edgeB!)
  }
})

breadcrumb.addEventListener("click", (event) => {
  const tag = (event.target as HTMLElement).dataset.remove
  if (tag) void controller.removeTerm(tag)
})

slider.addEventListener("input", () => {
  sliderValue.textContent = Number(slider.value).toFixed(2)
  controller.setThreshold(Number(slider.value))
})

measureSelect.addEventListener("change", () => {
  void controller.setMeasure(measureSelect.value as SessionState["measure"])
})
methodSelect.addEventListener("change", () => {
  void controller.setMethod(methodSelect.value as SessionState["method"])
})
rankingSelect.addEventListener("change", () => {
  void controller.setRanking(rankingSelect.value as SessionState["ranking"])
})

prevButton.addEventListener("click", () => void controller.setPage(currentPage - 1))
nextButton.addEventListener("click", () => void controller.setPage(currentPage + 1))

void controller.start()
