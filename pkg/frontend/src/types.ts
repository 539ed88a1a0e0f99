export type NodeStatus =
  | "enforced_true"
  | "enforced_false"
  | "implied_true"
  | "implied_false"
  | "normal";

export type Engine = "heuristic" | "complete";

export interface GraphNode {
  id: string;
  status: NodeStatus;
  /** Owning interface id when this option is an implementation, else null. */
  interface: string | null;
}

export interface Cluster {
  iface: string;
  impls: string[];
}

export interface Edge {
  from: string;
  to: string;
}

/** Response body of /api/graph and of every mutating endpoint. */
export interface StatePayload {
  nodes: GraphNode[];
  clusters: Cluster[];
  edges: Edge[];
  conflict: boolean;
  complete: boolean;
  engine: Engine;
}
