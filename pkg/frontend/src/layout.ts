/**
 * Small force-directed layout (Fruchterman-Reingold style). Positions are
 * seeded deterministically so the same graph always lands the same way; only
 * the size/width bins are contractual, positions are free.
 */

export interface Point {
  x: number
  y: number
}

function lcg(seed: number): () => number {
  let s = seed >>> 0
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0
    return s / 4294967296
  }
}

export function forceLayout(
  tags: string[],
  edges: Array<[string, string]>,
  width: number,
  height: number,
  iterations = 200,
): Map<string, Point> {
  const positions = new Map<string, Point>()
  if (tags.length === 0) return positions

  const rand = lcg(tags.length * 2654435761 + 1)
  for (const tag of tags) {
    positions.set(tag, {
      x: width * (0.2 + 0.6 * rand()),
      y: height * (0.2 + 0.6 * rand()),
    })
  }
  if (tags.length === 1) {
    positions.set(tags[0], { x: width / 2, y: height / 2 })
    return positions
  }

  const index = new Map(tags.map((tag, i) => [tag, i]))
  const xs = tags.map((tag) => positions.get(tag)!.x)
  const ys = tags.map((tag) => positions.get(tag)!.y)
  const k = Math.sqrt((width * height) / tags.length)
  let temperature = width / 8

  for (let step = 0; step < iterations; step++) {
    const dx = new Array<number>(tags.length).fill(0)
    const dy = new Array<number>(tags.length).fill(0)

    for (let i = 0; i < tags.length; i++) {
      for (let j = i + 1; j < tags.length; j++) {
        let vx = xs[i] - xs[j]
        let vy = ys[i] - ys[j]
        let dist = Math.hypot(vx, vy)
        if (dist < 0.01) {
          vx = rand() - 0.5
          vy = rand() - 0.5
          dist = Math.hypot(vx, vy)
        }
        const repulse = (k * k) / dist
        dx[i] += (vx / dist) * repulse
        dy[i] += (vy / dist) * repulse
        dx[j] -= (vx / dist) * repulse
        dy[j] -= (vy / dist) * repulse
      }
    }

    for (const [a, b] of edges) {
      const i = index.get(a)
      const j = index.get(b)
      if (i === undefined || j === undefined || i === j) continue
      const vx = xs[i] - xs[j]
      const vy = ys[i] - ys[j]
      const dist = Math.max(0.01, Math.hypot(vx, vy))
      const attract = (dist * dist) / k
      dx[i] -= (vx / dist) * attract
      dy[i] -= (vy / dist) * attract
      dx[j] += (vx / dist) * attract
      dy[j] += (vy / dist) * attract
    }

    for (let i = 0; i < tags.length; i++) {
      const move = Math.hypot(dx[i], dy[i])
      if (move > 0) {
        const capped = Math.min(move, temperature)
        xs[i] += (dx[i] / move) * capped
        ys[i] += (dy[i] / move) * capped
      }
      xs[i] = Math.min(width * 0.95, Math.max(width * 0.05, xs[i]))
      ys[i] = Math.min(height * 0.95, Math.max(height * 0.05, ys[i]))
    }
    temperature *= 0.95
  }

  tags.forEach((tag, i) => positions.set(tag, { x: xs[i], y: ys[i] }))
  return positions
}
