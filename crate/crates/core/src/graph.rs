//! Embedded planar graphs: rotation systems, faces, triangulation,
//! deterministic perturbation, duals and left/right tests.
//!
//! A graph is stored as a set of darts (directed half-edges). Darts come in
//! twin pairs `2e, 2e+1` for undirected edge `e`; each direction carries its
//! own cost. The embedding is a clockwise rotation system: for every vertex
//! the incident darts (tails at that vertex) are listed in clockwise order.
//! Faces are traced with `next_face(d) = cw_next(twin(d))`, which keeps each
//! face on the *left* of its darts.

use crate::cost::{splitmix64, Cost, MAX_TIE_VERTICES};
use std::collections::HashMap;
use thiserror::Error;

pub const NONE_U32: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DartId(pub u32);
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(pub u32);

impl VertexId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}
impl DartId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
    pub fn twin(self) -> DartId {
        DartId(self.0 ^ 1)
    }
    /// Undirected edge index.
    pub fn edge(self) -> u32 {
        self.0 >> 1
    }
}
impl FaceId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Side of an oriented path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathSide {
    Left,
    Right,
}

impl PathSide {
    pub fn complement(self) -> PathSide {
        match self {
            PathSide::Left => PathSide::Right,
            PathSide::Right => PathSide::Left,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("embedding is not planar: V - E + F = {chi}, expected 2")]
    NonPlanarEmbedding { chi: i64 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("negative weight on edge {u} -> {v}")]
    NegativeWeight { u: u32, v: u32 },
    #[error("weight {w} exceeds the supported bound on edge {u} -> {v}")]
    WeightTooLarge { u: u32, v: u32, w: u64 },
    #[error("dart {0} is not incident to an internal path vertex")]
    NotIncident(u32),
    #[error("graph too large for the tie-break encoding: {n} vertices")]
    CapacityExceeded { n: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
}

/// Sub-position space for rotation keys. Real darts sit at sub 0; virtual
/// items (shortcut darts, pendant and face-corner slots) use positive subs.
pub const ROT_SUB_SPACE: u64 = 1 << 22;
/// Base sub for face-corner / fill slots; keeps them after shortcut ranks.
pub const ROT_SUB_FILL: u32 = 1 << 20;

/// Angular position of an item in the rotation around a fixed vertex:
/// `pos` is the index of the real dart the item is anchored at (the item lies
/// at that dart, or just clockwise of it when `sub > 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct RotKey {
    pub pos: u32,
    pub sub: u32,
}

impl RotKey {
    pub fn real(pos: u32) -> RotKey {
        RotKey { pos, sub: 0 }
    }
    pub fn encode(self) -> u64 {
        self.pos as u64 * ROT_SUB_SPACE + self.sub as u64
    }
}

/// Sweeping clockwise from `from`, does `a` appear strictly before `b`?
/// All three keys must be distinct items around a vertex of degree `deg`.
pub fn cw_first(deg: u32, from: RotKey, a: RotKey, b: RotKey) -> bool {
    let m = deg as u64 * ROT_SUB_SPACE;
    let f = from.encode();
    let rel = |k: RotKey| (k.encode() + m - f) % m;
    let (ra, rb) = (rel(a), rel(b));
    debug_assert_ne!(ra, rb, "rotation keys must be distinct");
    ra < rb
}

#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    /// Per dart: the vertex the dart leaves from.
    pub tail: Vec<VertexId>,
    /// Per dart: cost of traversing it.
    pub cost: Vec<Cost>,
    /// Clockwise rotation per vertex.
    pub rot: Vec<Vec<DartId>>,
    /// Per dart: its index in `rot[tail]`.
    pub rot_pos: Vec<u32>,
    /// Per dart: next dart clockwise around its tail.
    pub next_cw: Vec<DartId>,
    /// Face cycles; each face keeps the darts that have it on their left.
    pub faces: Vec<Vec<DartId>>,
    /// Per dart: the face on its left.
    pub dart_face: Vec<FaceId>,
    /// Face preserved from triangulation (the outer face of generated
    /// instances); dummy-filled per Voronoi host instead.
    pub distinguished_face: Option<FaceId>,
    pub perturbed: bool,
}

impl EmbeddedGraph {
    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }
    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }
    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
    pub fn head(&self, d: DartId) -> VertexId {
        self.tail[d.twin().idx()]
    }
    pub fn deg(&self, v: VertexId) -> u32 {
        self.rot[v.idx()].len() as u32
    }
    pub fn darts_at(&self, v: VertexId) -> &[DartId] {
        &self.rot[v.idx()]
    }
    pub fn dart_key(&self, d: DartId) -> RotKey {
        RotKey::real(self.rot_pos[d.idx()])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.rot.len() as u32).map(VertexId)
    }
    pub fn darts(&self) -> impl Iterator<Item = DartId> {
        (0..self.tail.len() as u32).map(DartId)
    }

    /// Builds a graph from per-vertex clockwise neighbor lists and per-dart
    /// weights. `weights[v][k]` is the cost of the dart from `v` to its k-th
    /// neighbor. Rejects non-planar rotation systems and disconnected input.
    pub fn build(
        neighbors: &[Vec<u32>],
        weights: &[Vec<u64>],
    ) -> Result<EmbeddedGraph, GraphError> {
        let n = neighbors.len();
        let mut dart_of: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pair_count = 0u32;
        for (u, nbrs) in neighbors.iter().enumerate() {
            for &v in nbrs {
                if v as usize >= n {
                    return Err(GraphError::Malformed(format!("neighbor {v} out of range")));
                }
                if u as u32 == v {
                    return Err(GraphError::Malformed(format!("self loop at {u}")));
                }
                let key = (u.min(v as usize) as u32, u.max(v as usize) as u32);
                if !dart_of.contains_key(&key) {
                    dart_of.insert(key, 2 * pair_count);
                    pair_count += 1;
                } else if u as u32 > v {
                    // second sighting, fine
                } else {
                    return Err(GraphError::Malformed(format!(
                        "edge {{{u}, {v}}} listed twice at vertex {u}"
                    )));
                }
            }
        }
        let dart_total = 2 * pair_count as usize;
        let mut tail = vec![VertexId(0); dart_total];
        let mut cost = vec![Cost::ZERO; dart_total];
        let mut rot = vec![Vec::new(); n];
        let mut seen = vec![false; dart_total];
        for (u, nbrs) in neighbors.iter().enumerate() {
            for (k, &v) in nbrs.iter().enumerate() {
                let key = (u.min(v as usize) as u32, u.max(v as usize) as u32);
                let base = dart_of[&key];
                // lower endpoint owns dart `base`, upper owns `base+1`
                let d = if (u as u32) < v { base } else { base + 1 };
                if seen[d as usize] {
                    return Err(GraphError::Malformed(format!(
                        "edge {{{u}, {v}}} listed twice at vertex {u}"
                    )));
                }
                seen[d as usize] = true;
                tail[d as usize] = VertexId(u as u32);
                let w = weights[u][k];
                if w > crate::cost::MAX_INPUT_WEIGHT {
                    return Err(GraphError::WeightTooLarge { u: u as u32, v, w });
                }
                cost[d as usize] = Cost::finite(w, 0);
                rot[u].push(DartId(d));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GraphError::Malformed(
                "an edge is listed at only one endpoint".into(),
            ));
        }
        Self::assemble(tail, cost, rot, None, false)
    }

    /// Low-level constructor from explicit dart arrays; traces faces and
    /// checks Euler's formula and connectivity.
    pub fn assemble(
        tail: Vec<VertexId>,
        cost: Vec<Cost>,
        rot: Vec<Vec<DartId>>,
        distinguished_face: Option<FaceId>,
        perturbed: bool,
    ) -> Result<EmbeddedGraph, GraphError> {
        let dart_total = tail.len();
        let n = rot.len();
        let mut rot_pos = vec![0u32; dart_total];
        let mut next_cw = vec![DartId(NONE_U32); dart_total];
        for (v, list) in rot.iter().enumerate() {
            for (k, &d) in list.iter().enumerate() {
                debug_assert_eq!(tail[d.idx()].idx(), v);
                rot_pos[d.idx()] = k as u32;
                next_cw[d.idx()] = list[(k + 1) % list.len()];
            }
        }
        // face tracing, face on the left of each dart
        let mut dart_face = vec![FaceId(NONE_U32); dart_total];
        let mut faces: Vec<Vec<DartId>> = Vec::new();
        for d0 in 0..dart_total {
            if dart_face[d0].0 != NONE_U32 {
                continue;
            }
            let f = FaceId(faces.len() as u32);
            let mut cycle = Vec::new();
            let mut d = DartId(d0 as u32);
            loop {
                dart_face[d.idx()] = f;
                cycle.push(d);
                d = next_cw[d.twin().idx()];
                if d.idx() == d0 {
                    break;
                }
            }
            faces.push(cycle);
        }
        let chi = n as i64 - (dart_total / 2) as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(GraphError::NonPlanarEmbedding { chi });
        }
        let g = EmbeddedGraph {
            tail,
            cost,
            rot,
            rot_pos,
            next_cw,
            faces,
            dart_face,
            distinguished_face,
            perturbed,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in self.darts_at(v) {
                let h = self.head(d);
                if !seen[h.idx()] {
                    seen[h.idx()] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        count == n
    }

    /// Adds diagonals until every face outside `preserve` is a triangle.
    /// Added edges are fanned from the lowest-id vertex of each face and get
    /// an artificial cost of tier 1 with primary `n * max_len`, so no finite
    /// distance changes. Existing dart ids are stable; faces are retraced.
    pub fn triangulate(&self, preserve: &[FaceId]) -> Result<EmbeddedGraph, GraphError> {
        let n = self.vertex_count() as u64;
        let max_len = self.cost.iter().map(|c| c.primary).max().unwrap_or(0);
        let art = Cost::new(1, n.saturating_mul(max_len), 0);

        let mut tail: Vec<VertexId> = self.tail.clone();
        let mut cost = self.cost.clone();
        // rotation as insertion lists: per vertex, (after_dart_pos, new darts)
        let mut rot: Vec<Vec<DartId>> = self.rot.clone();
        // positions shift as we insert; we rebuild rot fresh via insertions
        // keyed by existing darts, so process per face using dart identity.
        let preserved: Vec<bool> = {
            let mut p = vec![false; self.face_count()];
            for f in preserve {
                p[f.idx()] = true;
            }
            p
        };

        for (fi, cycle) in self.faces.iter().enumerate() {
            if preserved[fi] || cycle.len() <= 3 {
                continue;
            }
            // face cycle darts: cycle[k] goes v_k -> v_{k+1}
            let verts: Vec<VertexId> = cycle.iter().map(|&d| self.tail[d.idx()]).collect();
            let k = verts.len();
            let (start, _) = verts
                .iter()
                .enumerate()
                .min_by_key(|&(_, v)| v.0)
                .expect("nonempty face");
            // rotate so the fan apex is verts[0]
            let verts: Vec<VertexId> = (0..k).map(|i| verts[(start + i) % k]).collect();
            let cycle: Vec<DartId> = (0..k).map(|i| cycle[(start + i) % k]).collect();
            let apex = verts[0];
            // diagonals apex -> verts[2..k-1]
            // at apex, clockwise order: ..., (apex->v_{k-1}), v_{k-2}, ..., v_2, (apex->v_1), ...
            let mut new_at_apex: Vec<DartId> = Vec::new();
            for j in 2..k - 1 {
                let d_out = DartId(tail.len() as u32);
                tail.push(apex);
                cost.push(art);
                let d_in = DartId(tail.len() as u32);
                tail.push(verts[j]);
                cost.push(art);
                debug_assert_eq!(d_out.twin(), d_in);
                new_at_apex.push(d_out);
                // at verts[j]: insert d_in between (v_j -> v_{j+1}) = cycle[j]
                // and (v_j -> v_{j-1}) = twin(cycle[j-1]): immediately after
                // twin(cycle[j-1]) in clockwise order is cycle[j], so insert
                // right before cycle[j].
                let list = &mut rot[verts[j].idx()];
                let at = list
                    .iter()
                    .position(|&x| x == cycle[j])
                    .expect("face dart in rotation");
                list.insert(at, d_in);
            }
            // at apex: the face sector runs from (apex->v_{k-1}) = twin(cycle[k-1])
            // immediately clockwise to (apex->v_1) = cycle[0]; diagonals go in
            // decreasing j order between them. Inserting each diagonal at the
            // position of cycle[0] (ascending j) produces exactly that order.
            let list = &mut rot[apex.idx()];
            let at = list
                .iter()
                .position(|&x| x == cycle[0])
                .expect("face dart in rotation");
            for &d in &new_at_apex {
                list.insert(at, d);
            }
        }
        // distinguished face id shifts after retracing; recover it by a
        // representative dart.
        let dist_dart = self
            .distinguished_face
            .map(|f| self.faces[f.idx()][0]);
        let mut g = EmbeddedGraph::assemble(tail, cost, rot, None, self.perturbed)?;
        if let Some(d) = dist_dart {
            g.distinguished_face = Some(g.dart_face[d.idx()]);
        }
        Ok(g)
    }

    /// Assigns deterministic strictly-positive tie components to every dart so
    /// shortest paths become unique in every subgraph. Primary components are
    /// untouched. The encoding supports simple paths over up to
    /// `MAX_TIE_VERTICES` vertices; larger graphs get `CapacityExceeded`.
    pub fn perturb_for_uniqueness(&self, seed: u64) -> Result<EmbeddedGraph, GraphError> {
        let n = self.vertex_count() as u64;
        if n + 2 > MAX_TIE_VERTICES {
            return Err(GraphError::CapacityExceeded {
                n: self.vertex_count(),
            });
        }
        // room for a path visiting every vertex plus slack for pendant edges
        // and for adding two path costs together in queries
        let cap = (u64::MAX >> 3) / (4 * (n + 2));
        let mut g = self.clone();
        for d in 0..g.dart_count() {
            let t = 1 + splitmix64(seed ^ (0x5eed_0000_0000 + d as u64)) % cap;
            g.cost[d].tie = t;
        }
        g.perturbed = true;
        Ok(g)
    }

    /// The dual embedded graph: one vertex per face, one edge per edge.
    /// The dual dart of `d` leaves the face on the left of `d`.
    pub fn dual(&self) -> EmbeddedGraph {
        let nf = self.face_count();
        let mut tail = vec![VertexId(0); self.dart_count()];
        let mut cost = vec![Cost::ZERO; self.dart_count()];
        let mut rot = vec![Vec::new(); nf];
        for (fi, cycle) in self.faces.iter().enumerate() {
            for &d in cycle {
                tail[d.idx()] = VertexId(fi as u32);
                cost[d.idx()] = self.cost[d.idx()];
                rot[fi].push(d);
            }
        }
        EmbeddedGraph::assemble(tail, cost, rot, None, self.perturbed)
            .expect("dual of a valid embedding is valid")
    }

    /// Where does dart `e` lie relative to the oriented path (of darts)?
    /// `e` must leave an internal vertex of the path and not be on it.
    pub fn side_of_path(&self, path: &[DartId], e: DartId) -> Result<PathSide, GraphError> {
        let v = self.tail[e.idx()];
        for i in 1..path.len() {
            let incoming = path[i - 1];
            let outgoing = path[i];
            if self.head(incoming) != v || self.tail[outgoing.idx()] != v {
                continue;
            }
            if e == outgoing || e == incoming.twin() {
                return Err(GraphError::NotIncident(e.0));
            }
            // right iff e appears strictly between outgoing and twin(incoming)
            // sweeping clockwise from outgoing.
            let deg = self.deg(v);
            let first = cw_first(
                deg,
                self.dart_key(outgoing),
                self.dart_key(e),
                self.dart_key(incoming.twin()),
            );
            return Ok(if first { PathSide::Right } else { PathSide::Left });
        }
        Err(GraphError::NotIncident(e.0))
    }

    /// Euler characteristic V - E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }
}

/// An edge-induced subgraph of an embedded graph with the induced rotation
/// system and its own face tracing. Dart/vertex ids are the parent's.
#[derive(Clone, Debug)]
pub struct SubView {
    pub darts: Vec<DartId>,
    pub in_view: Vec<bool>,
    pub vertices: Vec<VertexId>,
    pub in_view_vertex: Vec<bool>,
    /// Next in-view dart clockwise around the tail (cyclic among in-view darts).
    pub next_in_view: Vec<DartId>,
    pub faces: Vec<Vec<DartId>>,
    /// Per dart (parent indexing): view face on its left, NONE_U32 if absent.
    pub dart_face: Vec<u32>,
}

impl SubView {
    pub fn new(g: &EmbeddedGraph, mut darts: Vec<DartId>) -> SubView {
        darts.sort_unstable();
        darts.dedup();
        let mut in_view = vec![false; g.dart_count()];
        for &d in &darts {
            in_view[d.idx()] = true;
            debug_assert!(in_view[d.twin().idx()] || darts.binary_search(&d.twin()).is_ok());
        }
        let mut in_view_vertex = vec![false; g.vertex_count()];
        for &d in &darts {
            in_view_vertex[g.tail[d.idx()].idx()] = true;
        }
        let vertices: Vec<VertexId> = (0..g.vertex_count() as u32)
            .map(VertexId)
            .filter(|v| in_view_vertex[v.idx()])
            .collect();
        let mut next_in_view = vec![DartId(NONE_U32); g.dart_count()];
        for &v in &vertices {
            let list: Vec<DartId> = g.rot[v.idx()]
                .iter()
                .copied()
                .filter(|d| in_view[d.idx()])
                .collect();
            for (k, &d) in list.iter().enumerate() {
                next_in_view[d.idx()] = list[(k + 1) % list.len()];
            }
        }
        let mut dart_face = vec![NONE_U32; g.dart_count()];
        let mut faces = Vec::new();
        for &d0 in &darts {
            if dart_face[d0.idx()] != NONE_U32 {
                continue;
            }
            let fi = faces.len() as u32;
            let mut cycle = Vec::new();
            let mut d = d0;
            loop {
                dart_face[d.idx()] = fi;
                cycle.push(d);
                d = next_in_view[d.twin().idx()];
                if d == d0 {
                    break;
                }
            }
            faces.push(cycle);
        }
        SubView {
            darts,
            in_view,
            vertices,
            in_view_vertex,
            next_in_view,
            faces,
            dart_face,
        }
    }

    pub fn contains_dart(&self, d: DartId) -> bool {
        self.in_view[d.idx()]
    }
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.in_view_vertex[v.idx()]
    }
}

/// Parses the text graph format: header `n m`, then `n` rotation lines
/// `v: u1 u2 ... uk` (clockwise), then `2m` dart weight lines `u v w`.
pub fn parse_graph_file(text: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut lines = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Malformed("empty file".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| GraphError::Malformed("bad header".into()))?;
    let m: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| GraphError::Malformed("bad header".into()))?;
    let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); n];
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| GraphError::Malformed("missing rotation line".into()))?;
        let (v_part, rest) = line
            .split_once(':')
            .ok_or_else(|| GraphError::Malformed(format!("bad rotation line: {line}")))?;
        let v: usize = v_part
            .trim()
            .parse()
            .map_err(|_| GraphError::Malformed(format!("bad vertex id: {v_part}")))?;
        if v >= n {
            return Err(GraphError::Malformed(format!("vertex {v} out of range")));
        }
        for tok in rest.split_whitespace() {
            let u: u32 = tok
                .parse()
                .map_err(|_| GraphError::Malformed(format!("bad neighbor: {tok}")))?;
            neighbors[v].push(u);
        }
    }
    let mut weights: Vec<Vec<u64>> = neighbors
        .iter()
        .map(|l| vec![u64::MAX; l.len()])
        .collect();
    for _ in 0..2 * m {
        let line = lines
            .next()
            .ok_or_else(|| GraphError::Malformed("missing weight line".into()))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Malformed(format!("bad weight line: {line}")))?;
        let v: u32 = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Malformed(format!("bad weight line: {line}")))?;
        let w_str = it
            .next()
            .ok_or_else(|| GraphError::Malformed(format!("bad weight line: {line}")))?;
        let w: i64 = w_str
            .parse()
            .map_err(|_| GraphError::Malformed(format!("bad weight: {w_str}")))?;
        if w < 0 {
            return Err(GraphError::NegativeWeight { u: u as u32, v });
        }
        let k = neighbors[u]
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| GraphError::Malformed(format!("weight for absent edge {u} {v}")))?;
        weights[u][k] = w as u64;
    }
    if weights.iter().flatten().any(|&w| w == u64::MAX) {
        return Err(GraphError::Malformed("missing dart weight".into()));
    }
    EmbeddedGraph::build(&neighbors, &weights)
}

pub fn write_graph_file(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for v in g.vertices() {
        out.push_str(&format!("{}:", v.0));
        for &d in g.darts_at(v) {
            out.push_str(&format!(" {}", g.head(d).0));
        }
        out.push('\n');
    }
    for d in g.darts() {
        out.push_str(&format!(
            "{} {} {}\n",
            g.tail[d.idx()].0,
            g.head(d).0,
            g.cost[d.idx()].primary
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> EmbeddedGraph {
        // square 0-1-2-3 embedded as a 4-cycle; clockwise rotations
        let neighbors = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let weights = vec![vec![1, 1], vec![1, 1], vec![1, 1], vec![1, 1]];
        EmbeddedGraph::build(&neighbors, &weights).unwrap()
    }

    #[test]
    fn four_cycle_has_two_faces() {
        let g = four_cycle();
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.euler_characteristic(), 2);
    }

    #[test]
    fn k4_planar_rotations() {
        // K4 with a planar embedding: 3 in the middle of triangle 0,1,2
        let neighbors = vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ];
        let weights = vec![vec![1; 3]; 4];
        let g = EmbeddedGraph::build(&neighbors, &weights).unwrap();
        assert_eq!(g.face_count(), 4);
    }

    #[test]
    fn nonplanar_rotation_detected() {
        // K4 with a twisted rotation at vertex 3 is not planar as embedded
        let neighbors = vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 2, 1],
        ];
        let weights = vec![vec![1; 3]; 4];
        match EmbeddedGraph::build(&neighbors, &weights) {
            Err(GraphError::NonPlanarEmbedding { .. }) => {}
            other => panic!("expected NonPlanarEmbedding, got {other:?}"),
        }
    }

    #[test]
    fn triangulate_quad_adds_one_diagonal() {
        let g = four_cycle();
        let outer = g.distinguished_or_biggest();
        let t = g.triangulate(&[outer]).unwrap();
        assert_eq!(t.edge_count(), g.edge_count() + 1);
        // new edge is artificial
        let extra = DartId((t.dart_count() - 2) as u32);
        assert_eq!(t.cost[extra.idx()].tier, 1);
    }

    #[test]
    fn triangulate_triangle_is_identity() {
        let neighbors = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let weights = vec![vec![1, 1]; 3];
        let g = EmbeddedGraph::build(&neighbors, &weights).unwrap();
        let t = g.triangulate(&[]).unwrap();
        assert_eq!(t.edge_count(), g.edge_count());
    }

    #[test]
    fn dual_of_triangle() {
        let neighbors = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let weights = vec![vec![1, 1]; 3];
        let g = EmbeddedGraph::build(&neighbors, &weights).unwrap();
        let d = g.dual();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 3);
        let dd = d.dual();
        assert_eq!(dd.vertex_count(), g.vertex_count());
        assert_eq!(dd.edge_count(), g.edge_count());
    }

    #[test]
    fn perturb_strictly_positive() {
        let g = four_cycle();
        let p = g.perturb_for_uniqueness(7).unwrap();
        for d in p.darts() {
            assert!(p.cost[d.idx()] > Cost::ZERO);
            assert_eq!(p.cost[d.idx()].primary, g.cost[d.idx()].primary);
        }
    }
}

impl EmbeddedGraph {
    /// The distinguished face if set, else the face with the longest cycle.
    pub fn distinguished_or_biggest(&self) -> FaceId {
        self.distinguished_face.unwrap_or_else(|| {
            FaceId(
                self.faces
                    .iter()
                    .enumerate()
                    .max_by_key(|(_, c)| c.len())
                    .map(|(i, _)| i as u32)
                    .unwrap(),
            )
        })
    }
}
