//! Dijkstra variants shared by construction: plain runs on (sub)graphs,
//! additively weighted multi-source runs for Voronoi cells, and runs on
//! unions of subgraphs with dense distance matrices.
//!
//! Tie handling is exact: keys are full `Cost` values. On exact distance ties
//! the owner with larger additive weight wins (the Voronoi rule), and among
//! equal-cost predecessors the one with the smaller last arc wins, which
//! picks the decomposition through the most intermediate vertices when
//! running on DDG unions.

use crate::cost::Cost;
use crate::graph::{DartId, EmbeddedGraph, SubView, VertexId, NONE_U32};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

pub const NO_TAG: u64 = u64::MAX;

#[derive(Clone, Debug)]
pub struct Arc {
    pub to: usize,
    pub cost: Cost,
    /// Preference rank on exact ties after arc cost; 0 beats 1.
    pub pref: u8,
    pub tag: u64,
}

#[derive(Clone, Debug)]
pub struct SpResult {
    pub dist: Vec<Option<Cost>>,
    pub owner: Vec<u32>,
    pub owner_w: Vec<Cost>,
    pub parent_tag: Vec<u64>,
    pub parent_arc_cost: Vec<Cost>,
    pub parent_pref: Vec<u8>,
}

impl SpResult {
    pub fn reached(&self, v: usize) -> bool {
        self.dist[v].is_some()
    }
}

struct HeapEntry {
    dist: Cost,
    owner_w: Cost,
    node: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; reverse so smallest (dist, -owner_w) pops.
        other
            .dist
            .cmp(&self.dist)
            .then_with(|| self.owner_w.cmp(&other.owner_w))
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// Generic Dijkstra over `n` nodes. `sources` are `(node, weight, owner)`
/// triples; `arcs(u, out)` must push the arcs leaving `u`.
pub fn dijkstra_engine<F>(n: usize, sources: &[(usize, Cost, u32)], mut arcs: F) -> SpResult
where
    F: FnMut(usize, &mut Vec<Arc>),
{
    let mut res = SpResult {
        dist: vec![None; n],
        owner: vec![NONE_U32; n],
        owner_w: vec![Cost::ZERO; n],
        parent_tag: vec![NO_TAG; n],
        parent_arc_cost: vec![Cost::ZERO; n],
        parent_pref: vec![0; n],
    };
    let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::new();
    for &(s, w, owner) in sources {
        let better = match res.dist[s] {
            None => true,
            Some(d) => w < d || (w == d && res.owner_w[s] < w),
        };
        if better {
            res.dist[s] = Some(w);
            res.owner[s] = owner;
            res.owner_w[s] = w;
            res.parent_tag[s] = NO_TAG;
            heap.push(HeapEntry { dist: w, owner_w: w, node: s });
        }
    }
    let mut buf: Vec<Arc> = Vec::new();
    let mut done = vec![false; n];
    while let Some(HeapEntry { dist, owner_w, node }) = heap.pop() {
        if done[node] || res.dist[node] != Some(dist) || res.owner_w[node] != owner_w {
            continue;
        }
        done[node] = true;
        buf.clear();
        arcs(node, &mut buf);
        for a in &buf {
            let nd = dist + a.cost;
            let improve = match res.dist[a.to] {
                None => true,
                Some(cur) => match nd.cmp(&cur) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        if res.owner_w[a.to] != owner_w {
                            owner_w > res.owner_w[a.to]
                        } else {
                            (a.cost, a.pref) < (res.parent_arc_cost[a.to], res.parent_pref[a.to])
                        }
                    }
                },
            };
            if improve {
                debug_assert!(!done[a.to] || res.dist[a.to] == Some(nd));
                let repush = res.dist[a.to] != Some(nd) || res.owner_w[a.to] != owner_w;
                res.dist[a.to] = Some(nd);
                res.owner[a.to] = res.owner[node];
                res.owner_w[a.to] = owner_w;
                res.parent_tag[a.to] = a.tag;
                res.parent_arc_cost[a.to] = a.cost;
                res.parent_pref[a.to] = a.pref;
                if repush && !done[a.to] {
                    heap.push(HeapEntry { dist: nd, owner_w, node: a.to });
                }
            }
        }
    }
    res
}

/// Shortest-path tree on an embedded graph or one of its subviews.
/// `parent_tag` holds the dart into each vertex.
pub fn sp_graph(
    g: &EmbeddedGraph,
    view: Option<&SubView>,
    sources: &[(VertexId, Cost, u32)],
    skip: impl Fn(DartId) -> bool,
) -> SpResult {
    let n = g.vertex_count();
    let srcs: Vec<(usize, Cost, u32)> =
        sources.iter().map(|&(v, w, o)| (v.idx(), w, o)).collect();
    dijkstra_engine(n, &srcs, |u, out| {
        for &d in g.darts_at(VertexId(u as u32)) {
            if skip(d) {
                continue;
            }
            if let Some(vw) = view {
                if !vw.contains_dart(d) {
                    continue;
                }
            }
            out.push(Arc {
                to: g.head(d).idx(),
                cost: g.cost[d.idx()],
                pref: 0,
                tag: d.0 as u64,
            });
        }
    })
}

/// Single-source convenience wrapper.
pub fn sp_single(g: &EmbeddedGraph, view: Option<&SubView>, s: VertexId) -> SpResult {
    sp_graph(g, view, &[(s, Cost::ZERO, s.0)], |_| false)
}

/// Extracts the dart path from a source to `v` in a tree produced by
/// `sp_graph` (parent tags are dart ids).
pub fn tree_path_darts(g: &EmbeddedGraph, tree: &SpResult, v: VertexId) -> Vec<DartId> {
    let mut darts = Vec::new();
    let mut cur = v.idx();
    while tree.parent_tag[cur] != NO_TAG {
        let d = DartId(tree.parent_tag[cur] as u32);
        darts.push(d);
        cur = g.tail[d.idx()].idx();
    }
    darts.reverse();
    darts
}

/// Counts vertices with more than one exact-optimal predecessor; nonzero
/// means the perturbation failed to make shortest paths unique.
pub fn count_predecessor_ties(
    g: &EmbeddedGraph,
    view: Option<&SubView>,
    tree: &SpResult,
    skip: impl Fn(DartId) -> bool,
) -> usize {
    let mut ties = 0;
    for v in g.vertices() {
        let Some(dv) = tree.dist[v.idx()] else { continue };
        if tree.parent_tag[v.idx()] == NO_TAG {
            continue;
        }
        let mut optimal = 0;
        for &d in g.darts_at(v) {
            // incoming dart is twin of an outgoing dart at v
            let inc = d.twin();
            if skip(inc) {
                continue;
            }
            if let Some(vw) = view {
                if !vw.contains_dart(inc) {
                    continue;
                }
            }
            let u = g.tail[inc.idx()];
            if let Some(du) = tree.dist[u.idx()] {
                if du + g.cost[inc.idx()] == dv {
                    optimal += 1;
                }
            }
        }
        if optimal > 1 {
            ties += 1;
        }
    }
    ties
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_distances() {
        let g = crate::harness::grid_graph(4, crate::harness::GridWeights::Unit);
        let t = sp_single(&g, None, VertexId(0));
        // corner to corner on a 4x4 unit grid
        assert_eq!(t.dist[15].unwrap().primary, 6);
        assert_eq!(t.dist[3].unwrap().primary, 3);
    }

    #[test]
    fn perturbed_grid_unique_predecessors() {
        let g = crate::harness::grid_graph(4, crate::harness::GridWeights::Unit)
            .perturb_for_uniqueness(3)
            .unwrap();
        for s in 0..16u32 {
            let t = sp_single(&g, None, VertexId(s));
            assert_eq!(count_predecessor_ties(&g, None, &t, |_| false), 0);
        }
    }
}
