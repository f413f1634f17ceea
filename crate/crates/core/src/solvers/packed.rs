use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexRef};

/// Largest vertex count the bitmask solvers accept.
pub(crate) const MAX_VERTICES: usize = 128;

/// Dense form of a hypergraph for the search routines: vertex `(c, p)` is bit
/// `offset[c] + p` and each edge is the mask of its vertices. Edges keep the
/// hypergraph's lexicographic order.
pub(crate) struct Packed {
    pub edges: Vec<Edge>,
    pub masks: Vec<u128>,
    pub class_masks: Vec<u128>,
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl Packed {
    pub fn new(h: &KPartiteHypergraph) -> Result<Self> {
        if h.vertex_count() > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{} vertices exceeds the solver limit of {MAX_VERTICES}",
                h.vertex_count()
            )));
        }
        let offsets = h.offsets();
        let class_masks = offsets.iter().zip(h.sizes()).map(|(&o, &n)| span(o, n)).collect();
        let edges: Vec<Edge> = h.edges().cloned().collect();
        let masks = edges
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .fold(0u128, |m, (c, &p)| m | 1u128 << (offsets[c] + p))
            })
            .collect();
        Ok(Self {
            edges,
            masks,
            class_masks,
            offsets,
            sizes: h.sizes().to_vec(),
        })
    }

    pub fn vertex(&self, bit: usize) -> VertexRef {
        let class = (0..self.sizes.len())
            .find(|&c| bit >= self.offsets[c] && bit < self.offsets[c] + self.sizes[c])
            .expect("bit inside some class");
        VertexRef::new(class, bit - self.offsets[class])
    }

    pub fn vertices_of(&self, mask: u128) -> Vec<VertexRef> {
        let mut out = Vec::new();
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out.push(self.vertex(b));
            m &= m - 1;
        }
        out
    }
}

fn span(offset: usize, len: usize) -> u128 {
    if len == 0 {
        0
    } else if len >= 128 {
        u128::MAX << offset
    } else {
        ((1u128 << len) - 1) << offset
    }
}
