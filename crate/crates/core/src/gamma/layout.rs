//! Circle-and-slot construction shared by the standalone gadgets and the
//! assembled graph.
//!
//! Every circle is oriented counter-clockwise around the disk it bounds
//! (the child side). A circle vertex has four slots whose counter-clockwise
//! order is `outside, next, inside, prev`; an empty slot is skipped.

use crate::error::BuildError;
use crate::planar::{EmbeddedGraph, GraphBuilder, HalfEdgeId, Parity, VertexId};

#[derive(Debug, Clone, Copy, Default)]
struct Slots {
    outside: Option<HalfEdgeId>,
    next: Option<HalfEdgeId>,
    inside: Option<HalfEdgeId>,
    prev: Option<HalfEdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Outside,
    Inside,
}

#[derive(Debug, Default)]
pub(crate) struct Layout {
    builder: GraphBuilder,
    slots: Vec<Slots>,
}

impl Layout {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.builder.vertex_count()
    }

    /// Adds a circle of `len` vertices; vertex `j` has parity `j + offset`.
    pub fn circle(&mut self, len: usize, offset: usize) -> Vec<VertexId> {
        let verts: Vec<VertexId> = (0..len)
            .map(|j| {
                self.slots.push(Slots::default());
                self.builder.add_vertex(Parity::from_bit(j + offset))
            })
            .collect();
        for j in 0..len {
            let (a, b) = (verts[j], verts[(j + 1) % len]);
            let (fwd, back) = self.builder.add_edge(a, b);
            self.slots[a.index()].next = Some(fwd);
            self.slots[b.index()].prev = Some(back);
        }
        verts
    }

    /// Joins two slots with an edge; returns the half-edge leaving `a`.
    pub fn join(&mut self, a: VertexId, side_a: Side, b: VertexId, side_b: Side) -> Option<HalfEdgeId> {
        if self.builder.parity(a) == self.builder.parity(b) {
            return None;
        }
        let (ab, ba) = self.builder.add_edge(a, b);
        self.put(a, side_a, ab);
        self.put(b, side_b, ba);
        Some(ab)
    }

    fn put(&mut self, v: VertexId, side: Side, h: HalfEdgeId) {
        let slot = match side {
            Side::Outside => &mut self.slots[v.index()].outside,
            Side::Inside => &mut self.slots[v.index()].inside,
        };
        debug_assert!(slot.is_none(), "slot of {v} filled twice");
        *slot = Some(h);
    }

    /// Marks the face on the given side of a circle as truncation boundary.
    pub fn mark_hole(&mut self, circle: &[VertexId], side: Side) {
        for &v in circle {
            let h = match side {
                // the face to the right of `next` is to the left of `prev`
                Side::Outside => self.slots[v.index()].prev,
                Side::Inside => self.slots[v.index()].next,
            };
            self.builder
                .mark_boundary(h.expect("circle vertex has both circle edges"));
        }
    }

    pub fn finish(mut self) -> Result<EmbeddedGraph, BuildError> {
        for (i, s) in self.slots.iter().enumerate() {
            let rot = [s.outside, s.next, s.inside, s.prev].into_iter().flatten().collect();
            self.builder.set_rotation(VertexId(i as u32), rot);
        }
        Ok(self.builder.build()?)
    }
}

/// Rungs of a pants piece between outer circle `o` and inner circles
/// `i1`, `i2` (all of length `L = 2h`):
/// `o[i] ~ i1[i]`, `o[h + i] ~ i2[i]`, `i1[h + t] ~ i2[L - 1 - t]`.
/// Returns the first failing pair on a parity clash.
pub(crate) fn pants_rungs(
    layout: &mut Layout,
    o: &[VertexId],
    i1: &[VertexId],
    i2: &[VertexId],
) -> Result<(), (VertexId, VertexId)> {
    let l = o.len();
    let h = l / 2;
    for i in 0..h {
        layout
            .join(o[i], Side::Inside, i1[i], Side::Outside)
            .ok_or((o[i], i1[i]))?;
        layout
            .join(o[h + i], Side::Inside, i2[i], Side::Outside)
            .ok_or((o[h + i], i2[i]))?;
        layout
            .join(i1[h + i], Side::Outside, i2[l - 1 - i], Side::Outside)
            .ok_or((i1[h + i], i2[l - 1 - i]))?;
    }
    Ok(())
}

/// Parity offsets of the inner circles of a pants whose outer circle has
/// offset `o`.
pub(crate) fn inner_offsets(o: usize, l: usize) -> [usize; 2] {
    [o + 1, o + l / 2 + 1]
}

/// Leaf interior: `circles[0]` is the boundary circle, `circles[1..]` the
/// `s` concentric circles. Radial rungs join equal positions; the innermost
/// circle closes with doubled edges at `(L-1, 0)` and `(h-1, h)` and nested
/// chords `j ~ L-1-j` for `1 ≤ j ≤ h-2`.
pub(crate) fn leaf_interior(layout: &mut Layout, circles: &[Vec<VertexId>]) -> Result<(), (VertexId, VertexId)> {
    let l = circles[0].len();
    let h = l / 2;
    for pair in circles.windows(2) {
        for (&outer, &inner) in pair[0].iter().zip(&pair[1]) {
            layout
                .join(outer, Side::Inside, inner, Side::Outside)
                .ok_or((outer, inner))?;
        }
    }
    let c = circles.last().expect("at least one circle");
    let mut pairs = vec![(l - 1, 0), (h - 1, h)];
    pairs.extend((1..h.saturating_sub(1)).map(|j| (j, l - 1 - j)));
    for (a, b) in pairs {
        layout
            .join(c[a], Side::Inside, c[b], Side::Inside)
            .ok_or((c[a], c[b]))?;
    }
    Ok(())
}

/// Positions on every circle that carry negative excess after assembly,
/// and on the innermost leaf circle the positions carrying 2-gons.
pub fn junction_positions(l: usize) -> [usize; 4] {
    let h = l / 2;
    [0, h - 1, h, l - 1]
}
