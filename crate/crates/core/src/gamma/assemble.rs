use serde::{Deserialize, Serialize};

use super::gadgets::check_boundary_length;
use super::layout::{inner_offsets, junction_positions, leaf_interior, pants_rungs, Layout, Side};
use crate::error::BuildError;
use crate::planar::{trace_faces, EmbeddedGraph, FaceSet, HalfEdgeId, VertexId};
use crate::speiser::{excess_table, Excess};
use crate::tree::{build_pruned_tree, PrunedTree, TreeVertex};

/// How many concentric circles each leaf piece gets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchedulePolicy {
    Constant(usize),
    /// `(s0, band)`: `s(v) = s0 + generation(v) / band`, where the
    /// generation is the index of the ray vertex the piece hangs from.
    Banded(usize, usize),
    /// Explicit `s(v)` per tree vertex (entries for pants are ignored).
    PerVertex(Vec<usize>),
}

impl SchedulePolicy {
    pub fn s_for(&self, tree: &PrunedTree, v: TreeVertex) -> usize {
        match self {
            SchedulePolicy::Constant(s) => *s,
            SchedulePolicy::Banded(s0, band) => s0 + tree.generation(v) / (*band).max(1),
            SchedulePolicy::PerVertex(map) => map.get(v).copied().unwrap_or(0),
        }
    }

    fn validate(&self, tree: &PrunedTree) -> Result<(), BuildError> {
        for v in tree.leaves() {
            if self.s_for(tree, v) == 0 {
                return Err(BuildError::BadSchedule(v));
            }
        }
        if let SchedulePolicy::Banded(_, 0) = self {
            return Err(BuildError::BadSchedule(0));
        }
        Ok(())
    }
}

/// Builder configuration, also the JSON config-file schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildConfig {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub schedule: SchedulePolicy,
}

impl BuildConfig {
    pub fn build(&self) -> Result<Gamma, BuildError> {
        let tree = build_pruned_tree(self.n)?;
        assemble(tree, &self.schedule, self.l)
    }
}

/// A finite truncation of the assembled Speiser graph.
#[derive(Debug, Clone)]
pub struct Gamma {
    pub graph: EmbeddedGraph,
    pub faces: FaceSet,
    pub tree: PrunedTree,
    pub boundary_length: usize,
    pub policy: SchedulePolicy,
    /// Outer circle of each piece, indexed by tree vertex.
    pub outer: Vec<Vec<VertexId>>,
    /// Concentric circles of each leaf piece, outermost first.
    pub concentric: Vec<Vec<Vec<VertexId>>>,
    /// Tree vertex owning each graph vertex.
    pub owner: Vec<TreeVertex>,
    /// Exact excess per vertex (`None` when untrusted).
    pub excess: Vec<Option<Excess>>,
    pub basepoint: VertexId,
}

/// Pastes a leaf disk for every leaf of `tree` and a pants for every other
/// vertex, gluing each outer circle onto an inner circle of the parent (ray
/// child first). The outer circle of the top piece is the truncation
/// boundary.
pub fn assemble(tree: PrunedTree, policy: &SchedulePolicy, l: usize) -> Result<Gamma, BuildError> {
    check_boundary_length(l)?;
    policy.validate(&tree)?;
    let n = tree.len();
    let mut offset = vec![0usize; n];
    for v in 0..n {
        let offs = inner_offsets(offset[v], l);
        for (i, &c) in tree.node(v).children.iter().enumerate() {
            offset[c] = offs[i];
        }
    }
    let mut layout = Layout::new();
    let mut owner = Vec::new();
    let mut outer = Vec::with_capacity(n);
    let mut concentric = vec![Vec::new(); n];
    for v in 0..n {
        outer.push(layout.circle(l, offset[v]));
        if tree.node(v).is_leaf() {
            let s = policy.s_for(&tree, v);
            concentric[v] = (1..=s).map(|i| layout.circle(l, offset[v] + i)).collect();
        }
        owner.resize(layout.vertex_count(), v);
    }
    for v in 0..n {
        let node = tree.node(v);
        if node.is_leaf() {
            let mut circles = vec![outer[v].clone()];
            circles.extend(concentric[v].iter().cloned());
            leaf_interior(&mut layout, &circles).map_err(|_| BuildError::ParityMismatch { child: v, parent: v })?;
        } else {
            let (a, b) = (node.children[0], node.children[1]);
            pants_rungs(&mut layout, &outer[v], &outer[a], &outer[b]).map_err(|(_, x)| {
                let child = if outer[a].contains(&x) { a } else { b };
                BuildError::ParityMismatch { child, parent: v }
            })?;
        }
    }
    layout.mark_hole(&outer[tree.top()], Side::Outside);
    let graph = layout.finish()?;
    let faces = trace_faces(&graph);
    let excess = excess_table(&graph, &faces);
    let basepoint = outer[tree.ray_vertex(1)][0];
    Ok(Gamma {
        graph,
        faces,
        tree,
        boundary_length: l,
        policy: policy.clone(),
        outer,
        concentric,
        owner,
        excess,
        basepoint,
    })
}

impl Gamma {
    pub fn s_of(&self, v: TreeVertex) -> usize {
        self.concentric[v].len()
    }

    /// Outer circles of the ray pieces `S(v_1), …, S(v_N)`: pairwise
    /// disjoint cycles of length `L` separating the basepoint from the top.
    pub fn ray_circles(&self) -> Vec<&[VertexId]> {
        (1..=self.tree.ray_length)
            .map(|k| self.outer[self.tree.ray_vertex(k)].as_slice())
            .collect()
    }

    /// Edge cutsets `Π_k` for `k = 1..N-1`: the rungs leaving the outer
    /// circle of `S(v_k)` towards its parent, as half-edges pointing up.
    pub fn ray_cutsets(&self) -> Vec<Vec<HalfEdgeId>> {
        (1..self.tree.ray_length)
            .map(|k| {
                self.outer[self.tree.ray_vertex(k)]
                    .iter()
                    .map(|&v| self.graph.rotation(v)[0])
                    .collect()
            })
            .collect()
    }

    /// All vertices on the circles bounding piece `v` plus its interior.
    pub fn piece_closure(&self, v: TreeVertex) -> Vec<VertexId> {
        let mut out = self.outer[v].clone();
        for &c in &self.tree.node(v).children {
            out.extend_from_slice(&self.outer[c]);
        }
        for c in &self.concentric[v] {
            out.extend_from_slice(c);
        }
        out
    }

    /// Vertices of the innermost leaf circles carrying the 2-gons.
    pub fn two_gon_vertices(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        for leaf in self.tree.leaves() {
            let inner = self.concentric[leaf].last().expect("leaf has circles");
            out.extend(junction_positions(self.boundary_length).iter().map(|&j| inner[j]));
        }
        out.sort();
        out
    }

    pub fn excess_of(&self, v: VertexId) -> Option<Excess> {
        self.excess[v.index()]
    }
}
