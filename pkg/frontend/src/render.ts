import { forceLayout } from "./layout.js"
import type { GraphPayload, HitPayload, TopTag } from "./types.js"
import type { SessionState } from "./state.js"

const FONT_BASE = 10
const FONT_STEP = 2

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;")
}

export function fontSizeForBin(bin: number): number {
  return FONT_BASE + FONT_STEP * bin
}

/** Renders the display graph as an SVG string, or a placeholder when empty. */
export function renderCluster(graph: GraphPayload, width = 640, height = 420): string {
  if (graph.vertices.length === 0) {
    return '<p class="placeholder">no cluster</p>'
  }

  const tags = graph.vertices.map((v) => v.tag)
  const pairs = graph.edges.map((e): [string, string] => [e.a, e.b])
  const positions = forceLayout(tags, pairs, width, height)

  const parts: string[] = [
    `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  ]

  for (const edge of graph.edges) {
    const from = positions.get(edge.a)
    const to = positions.get(edge.b)
    if (!from || !to) continue
    parts.push(
      `<line class="edge" x1="${from.x.toFixed(1)}" y1="${from.y.toFixed(1)}"` +
        ` x2="${to.x.toFixed(1)}" y2="${to.y.toFixed(1)}"` +
        ` stroke-width="${edge.width}" data-edge-a="${escapeXml(edge.a)}" data-edge-b="${escapeXml(edge.b)}">` +
        `<title>${escapeXml(edge.a)} -- ${escapeXml(edge.b)} (phi ${edge.phi.toFixed(4)})</title></line>`,
    )
  }

  for (const vertex of graph.vertices) {
    const at = positions.get(vertex.tag)
    if (!at) continue
    parts.push(
      `<text class="vertex" x="${at.x.toFixed(1)}" y="${at.y.toFixed(1)}"` +
        ` font-size="${fontSizeForBin(vertex.size)}" text-anchor="middle"` +
        ` data-tag="${escapeXml(vertex.tag)}">${escapeXml(vertex.tag)}</text>`,
    )
  }

  parts.push("</svg>")
  return parts.join("")
}

export function renderTagCloud(tags: TopTag[]): string {
  if (tags.length === 0) return '<p class="placeholder">no tags yet</p>'
  const freqs = tags.map((t) => t.freq)
  const lo = Math.min(...freqs)
  const hi = Math.max(...freqs)
  const items = [...tags]
    .sort((a, b) => a.tag.localeCompare(b.tag))
    .map((t) => {
      const bin = hi === lo ? 5 : 1 + Math.floor((9 * (t.freq - lo)) / (hi - lo))
      return (
        `<button class="cloud-tag" font-size="${fontSizeForBin(bin)}"` +
        ` style="font-size:${fontSizeForBin(bin)}px" data-cloud-tag="${escapeXml(t.tag)}">` +
        `${escapeXml(t.tag)}</button>`
      )
    })
  return items.join(" ")
}

export function renderHits(hits: HitPayload[]): string {
  if (hits.length === 0) return '<p class="placeholder">no results on this page</p>'
  const items = hits.map(
    (h) =>
      `<li value="${h.rank}"><a href="${escapeXml(h.url)}" target="_blank" rel="noopener">` +
      `${escapeXml(h.title || h.url)}</a> <span class="score">${h.score.toFixed(4)}</span></li>`,
  )
  return `<ol>${items.join("")}</ol>`
}

export function renderBreadcrumb(state: SessionState): string {
  const chips = [`<span class="crumb base">${escapeXml(state.base)}</span>`]
  for (const tag of state.refinements) {
    chips.push(
      `<span class="crumb">and ${escapeXml(tag)}` +
        `<button class="remove" data-remove="${escapeXml(tag)}" title="remove">&#215;</button></span>`,
    )
  }
  return chips.join(" ")
}
