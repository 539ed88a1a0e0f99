import type { StatePayload } from "./types.js";

/* Cluster-aware layered layout. Each interface and its implementations
   form one group drawn as a box; remaining options are their own
   groups. Groups are layered left to right along the dependency edges
   (an edge a -> b means a needs b, so b is drawn one layer further
   right), then stacked vertically inside each layer. */

export const NODE_W = 148;
export const NODE_H = 32;
const NODE_GAP = 12;
const CLUSTER_PAD = 10;
const GROUP_GAP = 20;
const LAYER_GAP = 70;
const MARGIN = 16;

export interface NodeBox {
  id: string;
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface ClusterBox {
  iface: string;
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface EdgeLine {
  from: string;
  to: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface Layout {
  width: number;
  height: number;
  nodes: NodeBox[];
  clusters: ClusterBox[];
  edges: EdgeLine[];
}

interface Group {
  key: string;
  boxed: boolean;
  members: string[];
}

interface Grouping {
  groups: Group[];
  groupOf: Map<string, string>;
}

function buildGroups(payload: StatePayload): Grouping {
  const implOwner = new Map<string, string>();
  for (const node of payload.nodes) {
    if (node.interface !== null) implOwner.set(node.id, node.interface);
  }
  const groups: Group[] = [];
  const groupOf = new Map<string, string>();
  for (const cluster of payload.clusters) {
    const members: string[] = [];
    // An interface that is itself an implementation lives in its
    // parent's box; every option is enclosed by at most one box.
    if (!implOwner.has(cluster.iface)) {
      members.push(cluster.iface);
      groupOf.set(cluster.iface, cluster.iface);
    }
    for (const impl of cluster.impls) {
      members.push(impl);
      groupOf.set(impl, cluster.iface);
    }
    groups.push({ key: cluster.iface, boxed: true, members });
  }
  for (const node of payload.nodes) {
    if (!groupOf.has(node.id)) {
      groupOf.set(node.id, node.id);
      groups.push({ key: node.id, boxed: false, members: [node.id] });
    }
  }
  return { groups, groupOf };
}

/* Longest-path layering over the group dependency graph. Cycle back
   edges contribute no constraint, so the walk terminates on any
   input. */
function layerGroups(
  groups: Group[],
  incoming: Map<string, Set<string>>,
): Map<string, number> {
  const layer = new Map<string, number>();
  const visiting = new Set<string>();

  const place = (key: string): number => {
    const known = layer.get(key);
    if (known !== undefined) return known;
    if (visiting.has(key)) return 0;
    visiting.add(key);
    let depth = 0;
    for (const source of incoming.get(key) ?? []) {
      depth = Math.max(depth, place(source) + 1);
    }
    visiting.delete(key);
    layer.set(key, depth);
    return depth;
  };

  for (const group of groups) place(group.key);
  return layer;
}

export function buildLayout(payload: StatePayload): Layout {
  const { groups, groupOf } = buildGroups(payload);

  const incoming = new Map<string, Set<string>>();
  for (const group of groups) incoming.set(group.key, new Set());
  for (const edge of payload.edges) {
    const from = groupOf.get(edge.from);
    const to = groupOf.get(edge.to);
    if (from !== undefined && to !== undefined && from !== to) {
      incoming.get(to)?.add(from);
    }
  }

  const layerOf = layerGroups(groups, incoming);
  const layers: Group[][] = [];
  for (const group of groups) {
    const index = layerOf.get(group.key) ?? 0;
    while (layers.length <= index) layers.push([]);
    layers[index].push(group);
  }

  const nodes: NodeBox[] = [];
  const clusters: ClusterBox[] = [];
  const position = new Map<string, NodeBox>();

  let x = MARGIN;
  let totalHeight = 0;
  for (const column of layers) {
    let y = MARGIN;
    for (const group of column) {
      const pad = group.boxed ? CLUSTER_PAD : 0;
      const top = y;
      let innerY = top + pad;
      for (const member of group.members) {
        const box = {
          id: member,
          x: x + pad,
          y: innerY,
          width: NODE_W,
          height: NODE_H,
        };
        nodes.push(box);
        position.set(member, box);
        innerY += NODE_H + NODE_GAP;
      }
      const contentBottom = innerY - NODE_GAP;
      if (group.boxed) {
        clusters.push({
          iface: group.key,
          x,
          y: top,
          width: NODE_W + 2 * pad,
          height: contentBottom + pad - top,
        });
      }
      y = contentBottom + pad + GROUP_GAP;
    }
    totalHeight = Math.max(totalHeight, y - GROUP_GAP + MARGIN);
    x += NODE_W + 2 * CLUSTER_PAD + LAYER_GAP;
  }

  const edges: EdgeLine[] = [];
  for (const edge of payload.edges) {
    const from = position.get(edge.from);
    const to = position.get(edge.to);
    if (!from || !to) continue;
    const leftToRight = to.x >= from.x + from.width;
    edges.push({
      from: edge.from,
      to: edge.to,
      x1: leftToRight ? from.x + from.width : from.x,
      y1: from.y + from.height / 2,
      x2: leftToRight ? to.x : to.x + to.width,
      y2: to.y + to.height / 2,
    });
  }

  return {
    width: Math.max(x - LAYER_GAP + MARGIN, 2 * MARGIN),
    height: Math.max(totalHeight, 2 * MARGIN),
    nodes,
    clusters,
    edges,
  };
}
