export interface VertexPayload {
  tag: string
  freq: number
  size: number
}

export interface EdgePayload {
  a: string
  b: string
  phi: number
  width: number
}

export interface GraphPayload {
  vertices: VertexPayload[]
  edges: EdgePayload[]
}

export interface HitPayload {
  rank: number
  url: string
  title: string
  score: number
}

export interface QueryResultPayload {
  query: { base: string; and: string[] }
  params: {
    measure: string
    method: string
    threshold: number
    support_floor: number
    ranking: string
  }
  hit_count: number
  page: number
  page_size: number
  hits: HitPayload[]
  graph: GraphPayload
}

export interface TopTag {
  tag: string
  freq: number
}
