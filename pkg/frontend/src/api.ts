import type { QueryResultPayload, TopTag } from "./types.js"

export interface ResponseLike {
  ok: boolean
  status: number
  json(): Promise<unknown>
}

export type FetchLike = (url: string) => Promise<ResponseLike>

export class ApiError extends Error {
  status: number

  constructor(status: number, message: string) {
    super(message)
    this.status = status
  }
}

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value)
}

function parseQueryResult(data: unknown): QueryResultPayload {
  if (
    !isRecord(data) ||
    typeof data.hit_count !== "number" ||
    !isRecord(data.query) ||
    typeof data.query.base !== "string" ||
    !Array.isArray(data.query.and) ||
    !Array.isArray(data.hits) ||
    !isRecord(data.graph) ||
    !Array.isArray(data.graph.vertices) ||
    !Array.isArray(data.graph.edges)
  ) {
    throw new Error("malformed query response")
  }
  return data as unknown as QueryResultPayload
}

function parseTopTags(data: unknown): TopTag[] {
  if (!Array.isArray(data) || data.some((t) => !isRecord(t) || typeof t.tag !== "string")) {
    throw new Error("malformed tag list")
  }
  return data as TopTag[]
}

export class ApiClient {
  private baseUrl: string
  private fetchFn: FetchLike

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "")
    this.fetchFn = fetchFn ?? ((url) => fetch(url))
  }

  async query(queryString: string): Promise<QueryResultPayload> {
    const response = await this.fetchFn(`${this.baseUrl}/query?${queryString}`)
    if (!response.ok) throw new ApiError(response.status, `query failed (${response.status})`)
    return parseQueryResult(await response.json())
  }

  async topTags(n = 50): Promise<TopTag[]> {
    const response = await this.fetchFn(`${this.baseUrl}/tags/top?n=${n}`)
    if (!response.ok) throw new ApiError(response.status, `tag list failed (${response.status})`)
    return parseTopTags(await response.json())
  }
}
