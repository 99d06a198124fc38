//! Small reference graphs used by tests, negative controls and the CLI.

use super::{EmbeddedGraph, GraphBuilder, HalfEdgeId, Parity, VertexId};

/// Two vertices joined by two parallel edges.
pub fn digon() -> EmbeddedGraph {
    let mut b = GraphBuilder::new();
    let u = b.add_vertex(Parity::Cross);
    let v = b.add_vertex(Parity::Circle);
    b.add_edge(u, v);
    b.add_edge(u, v);
    b.build().expect("digon is well formed")
}

/// Cycle on `n` vertices with alternating parity.
pub fn cycle(n: usize) -> EmbeddedGraph {
    assert!(n >= 2);
    let mut b = GraphBuilder::new();
    let vs: Vec<_> = (0..n).map(|i| b.add_vertex(Parity::from_bit(i))).collect();
    let mut next = Vec::with_capacity(n);
    let mut prev = vec![HalfEdgeId(0); n];
    for i in 0..n {
        let (a, t) = b.add_edge(vs[i], vs[(i + 1) % n]);
        next.push(a);
        prev[(i + 1) % n] = t;
    }
    for i in 0..n {
        b.set_rotation(vs[i], vec![next[i], prev[i]]);
    }
    b.build().expect("cycle is well formed")
}

/// Path with `n` unit edges (n + 1 vertices), vertex 0 first.
pub fn path(n: usize) -> EmbeddedGraph {
    let mut b = GraphBuilder::new();
    let vs: Vec<_> = (0..=n).map(|i| b.add_vertex(Parity::from_bit(i))).collect();
    for i in 0..n {
        b.add_edge(vs[i], vs[i + 1]);
    }
    b.build().expect("path is well formed")
}

/// One vertex carrying a single loop.
pub fn self_loop() -> EmbeddedGraph {
    let mut b = GraphBuilder::new();
    let v = b.add_vertex(Parity::Cross);
    b.add_edge(v, v);
    b.build().expect("loop is well formed")
}

/// Vertex index of grid point `(x, y)` in a graph from [`grid`].
pub fn grid_vertex(width: usize, x: usize, y: usize) -> VertexId {
    VertexId((y * width + x) as u32)
}

/// Planar `width × height` grid; parity by `x + y`. The outer face is
/// marked as truncation boundary.
pub fn grid(width: usize, height: usize) -> EmbeddedGraph {
    grid_builder(width, height, None).build().expect("grid is well formed")
}

/// Grid with one extra diagonal from `(x, y)` to `(x + 1, y + 1)` drawn
/// inside that unit square. The diagonal joins equal parities.
pub fn grid_with_diagonal(width: usize, height: usize, x: usize, y: usize) -> EmbeddedGraph {
    grid_builder(width, height, Some((x, y)))
        .build()
        .expect("grid is well formed")
}

fn grid_builder(width: usize, height: usize, diagonal: Option<(usize, usize)>) -> GraphBuilder {
    assert!(width >= 2 && height >= 2);
    let mut b = GraphBuilder::with_capacity(width * height, 2 * width * height);
    for y in 0..height {
        for x in 0..width {
            b.add_vertex(Parity::from_bit(x + y));
        }
    }
    let id = |x: usize, y: usize| grid_vertex(width, x, y);
    // directions: 0 = east, 1 = north, 2 = west, 3 = south
    let mut slots: Vec<[Option<HalfEdgeId>; 4]> = vec![[None; 4]; width * height];
    let mut outer = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                let (e, w) = b.add_edge(id(x, y), id(x + 1, y));
                slots[id(x, y).index()][0] = Some(e);
                slots[id(x + 1, y).index()][2] = Some(w);
                if y == 0 {
                    outer.push(w);
                }
                if y + 1 == height {
                    outer.push(e);
                }
            }
            if y + 1 < height {
                let (n, s) = b.add_edge(id(x, y), id(x, y + 1));
                slots[id(x, y).index()][1] = Some(n);
                slots[id(x, y + 1).index()][3] = Some(s);
                if x == 0 {
                    outer.push(n);
                }
                if x + 1 == width {
                    outer.push(s);
                }
            }
        }
    }
    let mut diag = None;
    if let Some((dx, dy)) = diagonal {
        assert!(dx + 1 < width && dy + 1 < height);
        diag = Some(b.add_edge(id(dx, dy), id(dx + 1, dy + 1)));
    }
    for y in 0..height {
        for x in 0..width {
            let v = id(x, y);
            let mut rot = Vec::with_capacity(5);
            for (dir, slot) in slots[v.index()].iter().enumerate() {
                if let Some(h) = slot {
                    rot.push(*h);
                }
                if let (Some((dx, dy)), Some((a, t))) = (diagonal, diag) {
                    // north-east diagonal sits between east and north,
                    // south-west between west and south
                    if dir == 0 && (x, y) == (dx, dy) {
                        rot.push(a);
                    }
                    if dir == 2 && (x, y) == (dx + 1, dy + 1) {
                        rot.push(t);
                    }
                }
            }
            b.set_rotation(v, rot);
        }
    }
    for h in outer {
        b.mark_boundary(h);
    }
    b
}

/// Ball of radius `depth` in the 3-regular tree around its root (vertex 0).
/// Leaves at depth `depth` are the sphere.
pub fn regular_tree_ball(depth: usize) -> EmbeddedGraph {
    let mut b = GraphBuilder::new();
    let root = b.add_vertex(Parity::Cross);
    let mut frontier = vec![root];
    for d in 1..=depth {
        let mut next = Vec::new();
        for &u in &frontier {
            let kids = if d == 1 { 3 } else { 2 };
            for _ in 0..kids {
                let w = b.add_vertex(Parity::from_bit(d));
                b.add_edge(u, w);
                next.push(w);
            }
        }
        frontier = next;
    }
    b.build().expect("tree is well formed")
}
