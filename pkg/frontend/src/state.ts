/**
 * Session state and its pure query-string transformations.
 *
 * Every user gesture becomes one of these transformations; the state mirrors
 * exactly one server query string and holds no derived hit data.
 */

export type Measure = "dice" | "cosine" | "jaccard"
export type Method = "single" | "complete" | "group_average"
export type Ranking = "absolute" | "wdf_itf"

export interface SessionState {
  base: string
  refinements: readonly string[]
  measure: Measure
  method: Method
  threshold: number
  ranking: Ranking
  page: number
}

export function initialState(base: string): SessionState {
  return {
    base,
    refinements: [],
    measure: "cosine",
    method: "single",
    threshold: 0.5,
    ranking: "absolute",
    page: 1,
  }
}

export function addRefinement(state: SessionState, tag: string): SessionState {
  if (tag === state.base || state.refinements.includes(tag)) return state
  return { ...state, refinements: [...state.refinements, tag], page: 1 }
}

export function addEdgeRefinement(state: SessionState, tagA: string, tagB: string): SessionState {
  return addRefinement(addRefinement(state, tagA), tagB)
}

export function removeRefinement(state: SessionState, tag: string): SessionState {
  if (!state.refinements.includes(tag)) return state
  return { ...state, refinements: state.refinements.filter((t) => t !== tag), page: 1 }
}

export function withThreshold(state: SessionState, value: number): SessionState {
  // slider step is 0.05; rounding keeps float noise out of the query string
  const snapped = Math.round(Math.min(1, Math.max(0, value)) * 100) / 100
  return { ...state, threshold: snapped, page: 1 }
}

export function withMeasure(state: SessionState, measure: Measure): SessionState {
  return { ...state, measure, page: 1 }
}

export function withMethod(state: SessionState, method: Method): SessionState {
  return { ...state, method, page: 1 }
}

export function withRanking(state: SessionState, ranking: Ranking): SessionState {
  return { ...state, ranking, page: 1 }
}

export function withPage(state: SessionState, page: number): SessionState {
  return { ...state, page: Math.max(1, Math.floor(page)) }
}

export function toQueryString(state: SessionState): string {
  const params = new URLSearchParams()
  params.set("q", state.base)
  for (const tag of state.refinements) params.append("and", tag)
  params.set("measure", state.measure)
  params.set("method", state.method)
  params.set("threshold", String(state.threshold))
  params.set("ranking", state.ranking)
  params.set("page", String(state.page))
  return params.toString()
}
