//! The pruned subtree `T` of the 3-regular tree.
//!
//! Fix a ray `v_0, v_1, …` in the 3-regular tree. A vertex `u` at distance
//! `m` from its ray attachment `v_k` (through the off-ray neighbour `u_k`)
//! has `d(u, v_n) = m + n - k` for `n ≥ k`, so it stays within distance `n`
//! of `v_n` exactly when `m ≤ k`. The off-ray part at `v_k` is therefore a
//! complete binary tree hanging from `u_k` whose leaves sit at `m = k`.
//!
//! The truncation keeps the ray up to `v_N` and every hanging tree with
//! `k ≤ N`; only `v_N` misses a neighbour (its parent `v_{N+1}`).

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::TreeError;

pub type TreeVertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NodeKind {
    /// Ray vertex `v_k`.
    Ray { k: usize },
    /// Off-ray vertex at distance `depth ≥ 1` from `v_attach`.
    Hang { attach: usize, depth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub kind: NodeKind,
    pub parent: Option<TreeVertex>,
    /// Zero or two children. For `v_k` the ray child `v_{k-1}` comes first.
    pub children: Vec<TreeVertex>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Index `k` of the ray vertex this node hangs from (or is).
    pub fn attachment(&self) -> usize {
        match self.kind {
            NodeKind::Ray { k } => k,
            NodeKind::Hang { attach, .. } => attach,
        }
    }

    /// Distance to the ray attachment (`0` on the ray).
    pub fn depth(&self) -> usize {
        match self.kind {
            NodeKind::Ray { .. } => 0,
            NodeKind::Hang { depth, .. } => depth,
        }
    }
}

/// Truncation of `T` at ray length `N`, numbered breadth-first from `v_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrunedTree {
    pub ray_length: usize,
    pub nodes: Vec<TreeNode>,
    ray: Vec<TreeVertex>,
}

pub fn build_pruned_tree(n: usize) -> Result<PrunedTree, TreeError> {
    if n < 1 {
        return Err(TreeError::RayTooShort(n));
    }
    let mut nodes = vec![TreeNode {
        kind: NodeKind::Ray { k: n },
        parent: None,
        children: Vec::new(),
    }];
    let mut ray = vec![0; n + 1];
    ray[n] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let kids: Vec<NodeKind> = match nodes[id].kind {
            NodeKind::Ray { k: 0 } => vec![],
            NodeKind::Ray { k } => vec![NodeKind::Ray { k: k - 1 }, NodeKind::Hang { attach: k, depth: 1 }],
            NodeKind::Hang { attach, depth } if depth < attach => vec![
                NodeKind::Hang {
                    attach,
                    depth: depth + 1,
                },
                NodeKind::Hang {
                    attach,
                    depth: depth + 1,
                },
            ],
            NodeKind::Hang { .. } => vec![],
        };
        for kind in kids {
            let child = nodes.len();
            if let NodeKind::Ray { k } = kind {
                ray[k] = child;
            }
            nodes.push(TreeNode {
                kind,
                parent: Some(id),
                children: Vec::new(),
            });
            nodes[id].children.push(child);
            queue.push_back(child);
        }
    }
    Ok(PrunedTree {
        ray_length: n,
        nodes,
        ray,
    })
}

impl PrunedTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Expected vertex count `(N + 1) + Σ_{k=1}^{N} (2^k - 1)`.
    pub fn expected_len(n: usize) -> usize {
        (n + 1) + (1..=n).map(|k| (1usize << k) - 1).sum::<usize>()
    }

    pub fn ray_vertex(&self, k: usize) -> TreeVertex {
        self.ray[k]
    }

    pub fn top(&self) -> TreeVertex {
        self.ray[self.ray_length]
    }

    pub fn node(&self, v: TreeVertex) -> &TreeNode {
        &self.nodes[v]
    }

    pub fn parent(&self, v: TreeVertex) -> Result<TreeVertex, TreeError> {
        let node = self.nodes.get(v).ok_or(TreeError::UnknownVertex(v))?;
        node.parent.ok_or(TreeError::NoParent(v))
    }

    pub fn leaves(&self) -> impl Iterator<Item = TreeVertex> + '_ {
        (0..self.nodes.len()).filter(|&v| self.nodes[v].is_leaf())
    }

    /// Degree in the untruncated tree (the top's missing parent counts).
    pub fn degree(&self, v: TreeVertex) -> usize {
        self.nodes[v].children.len() + 1
    }

    /// Degree inside the truncation.
    pub fn truncated_degree(&self, v: TreeVertex) -> usize {
        self.nodes[v].children.len() + usize::from(self.nodes[v].parent.is_some())
    }

    pub fn neighbors(&self, v: TreeVertex) -> impl Iterator<Item = TreeVertex> + '_ {
        self.nodes[v]
            .parent
            .into_iter()
            .chain(self.nodes[v].children.iter().copied())
    }

    pub fn distances_from(&self, v: TreeVertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Index of the ray vertex `v` hangs from; used by banded schedules.
    pub fn generation(&self, v: TreeVertex) -> usize {
        self.nodes[v].attachment()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row {
            id: usize,
            parent: Option<usize>,
            #[serde(flatten)]
            kind: NodeKind,
        }
        #[derive(Serialize)]
        struct Dump {
            ray_length: usize,
            vertices: Vec<Row>,
        }
        let dump = Dump {
            ray_length: self.ray_length,
            vertices: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| Row {
                    id,
                    parent: n.parent,
                    kind: n.kind,
                })
                .collect(),
        };
        serde_json::to_string(&dump).expect("tree serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_tree() {
        let t = build_pruned_tree(1).unwrap();
        // v_0, v_1 and the single off-ray neighbour u_1 of v_1
        assert_eq!(t.len(), 3);
        assert!(t.node(t.ray_vertex(0)).is_leaf());
        assert_eq!(t.parent(t.ray_vertex(0)).unwrap(), t.ray_vertex(1));
    }

    #[test]
    fn counts_match_formula() {
        for n in 1..=10 {
            assert_eq!(build_pruned_tree(n).unwrap().len(), PrunedTree::expected_len(n));
        }
    }

    #[test]
    fn rejects_zero() {
        assert_eq!(build_pruned_tree(0), Err(TreeError::RayTooShort(0)));
    }

    #[test]
    fn parent_map() {
        let t = build_pruned_tree(5).unwrap();
        for k in 0..5 {
            assert_eq!(t.parent(t.ray_vertex(k)).unwrap(), t.ray_vertex(k + 1));
        }
        assert_eq!(t.parent(t.top()), Err(TreeError::NoParent(t.top())));
        for v in 0..t.len() {
            if let NodeKind::Hang { attach, depth: 1 } = t.node(v).kind {
                assert_eq!(t.parent(v).unwrap(), t.ray_vertex(attach));
            }
        }
    }

    #[test]
    fn degrees_and_membership() {
        let t = build_pruned_tree(7).unwrap();
        for v in 0..t.len() {
            let node = t.node(v);
            assert!(node.depth() <= node.attachment());
            let d = t.degree(v);
            assert!(d == 1 || d == 3, "vertex {v} has degree {d}");
            assert_eq!(d == 1, node.is_leaf());
        }
        // handshake inside the truncation
        let sum: usize = (0..t.len()).map(|v| t.truncated_degree(v)).sum();
        assert_eq!(sum, 2 * (t.len() - 1));
    }

    #[test]
    fn unique_step_towards_top() {
        let t = build_pruned_tree(6).unwrap();
        let dist = t.distances_from(t.top());
        for v in 0..t.len() {
            let closer = t.neighbors(v).filter(|&w| dist[w] + 1 == dist[v]).count();
            assert_eq!(closer, usize::from(v != t.top()));
        }
    }
}
