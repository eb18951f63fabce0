import { ApiClient } from "./api.js"
import { debounce } from "./debounce.js"
import {
  SessionState,
  Measure,
  Method,
  Ranking,
  addEdgeRefinement,
  addRefinement,
  initialState,
  removeRefinement,
  toQueryString,
  withMeasure,
  withMethod,
  withPage,
  withRanking,
  withThreshold,
} from "./state.js"
import type { QueryResultPayload, TopTag } from "./types.js"

export interface View {
  showTagCloud(tags: TopTag[]): void
  showResult(result: QueryResultPayload, state: SessionState): void
  showError(message: string, retry: () => void): void
}

/**
 * Drives the session: applies pure state transformations, fetches the
 * matching server query, and hands results to the view. At most the latest
 * in-flight query wins; a failed fetch leaves the committed state untouched.
 */
export class Controller {
  private api: ApiClient
  private view: View
  private state: SessionState | null = null
  private lastResult: QueryResultPayload | null = null
  private requestToken = 0
  private thresholdDebounced: (value: number) => void

  constructor(api: ApiClient, view: View, debounceMs = 250) {
    this.api = api
    this.view = view
    this.thresholdDebounced = debounce((value: number) => {
      if (this.state) void this.apply(withThreshold(this.state, value))
    }, debounceMs)
  }

  async start(): Promise<void> {
    try {
      this.view.showTagCloud(await this.api.topTags(50))
    } catch (err) {
      this.view.showError(messageOf(err), () => void this.start())
    }
  }

  async search(base: string): Promise<void> {
    const trimmed = base.trim().toLowerCase()
    if (!trimmed) return
    await this.apply(initialState(trimmed))
  }

  async clickVertex(tag: string): Promise<void> {
    if (this.state) await this.apply(addRefinement(this.state, tag))
  }

  async clickEdge(tagA: string, tagB: string): Promise<void> {
    if (this.state) await this.apply(addEdgeRefinement(this.state, tagA, tagB))
  }

  async removeTerm(tag: string): Promise<void> {
    if (this.state) await this.apply(removeRefinement(this.state, tag))
  }

  setThreshold(value: number): void {
    this.thresholdDebounced(value)
  }

  async setMeasure(measure: Measure): Promise<void> {
    if (this.state) await this.apply(withMeasure(this.state, measure))
  }

  async setMethod(method: Method): Promise<void> {
    if (this.state) await this.apply(withMethod(this.state, method))
  }

  async setRanking(ranking: Ranking): Promise<void> {
    if (this.state) await this.apply(withRanking(this.state, ranking))
  }

  async setPage(page: number): Promise<void> {
    if (this.state) await this.apply(withPage(this.state, page))
  }

  /** Query string of the committed state, i.e. what the view displays. */
  queryString(): string | null {
    return this.state ? toQueryString(this.state) : null
  }

  displayedHitCount(): number | null {
    return this.lastResult ? this.lastResult.hit_count : null
  }

  private async apply(next: SessionState): Promise<void> {
    if (this.state && toQueryString(next) === toQueryString(this.state)) return
    const token = ++this.requestToken
    try {
      const result = await this.api.query(toQueryString(next))
      if (token !== this.requestToken) return
      this.state = next
      this.lastResult = result
      this.view.showResult(result, next)
    } catch (err) {
      if (token !== this.requestToken) return
      this.view.showError(messageOf(err), () => void this.apply(next))
    }
  }
}

function messageOf(err: unknown): string {
  return err instanceof Error ? err.message : String(err)
}
