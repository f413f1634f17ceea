use super::packed::Packed;
use super::Budget;
use crate::error::{Error, Result};
use crate::hypergraph::{KPartiteHypergraph, VertexCover};

/// Minimum vertex cover by exact hitting-set branch and bound.
///
/// Start from the cover `V(M)` of a maximum matching `M` (size k·ν). Each
/// node picks an uncovered edge with the fewest still-allowed vertices and
/// branches on them in class order; branch `i` takes vertex `i` and forbids
/// vertices `0..i` of that edge, so no cover is visited twice. A greedily
/// packed set of disjoint uncovered edges lower-bounds what remains.
pub fn min_vertex_cover(h: &KPartiteHypergraph) -> Result<VertexCover> {
    min_vertex_cover_with(h, Budget::UNLIMITED)
}

/// [`min_vertex_cover`] with a node limit. On exhaustion returns
/// [`Error::Budget`] carrying the best cover size found, an upper bound on τ.
pub fn min_vertex_cover_with(h: &KPartiteHypergraph, budget: Budget) -> Result<VertexCover> {
    let packed = Packed::new(h)?;
    let matching = super::max_matching_with(h, budget)?;
    let initial = matching
        .edges
        .iter()
        .flat_map(|e| e.vertices())
        .fold(0u128, |m, v| m | 1u128 << (offset_of(h, v.class) + v.pos));
    let mut search = Search {
        p: &packed,
        budget,
        nodes: 0,
        best: initial,
        best_len: initial.count_ones(),
        floor: matching.len() as u32,
    };
    search.dfs(0, 0)?;
    Ok(VertexCover::new(packed.vertices_of(search.best)))
}

fn offset_of(h: &KPartiteHypergraph, class: usize) -> usize {
    h.sizes()[..class].iter().sum()
}

struct Search<'a> {
    p: &'a Packed,
    budget: Budget,
    nodes: u64,
    best: u128,
    best_len: u32,
    /// ν: no cover can be smaller.
    floor: u32,
}

impl Search<'_> {
    fn dfs(&mut self, chosen: u128, forbidden: u128) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                return Err(Error::Budget {
                    limit,
                    best: self.best_len as usize,
                });
            }
        }
        if self.best_len <= self.floor {
            return Ok(());
        }
        let size = chosen.count_ones();

        // Branch edge plus a greedy disjoint packing of uncovered edges.
        let mut pivot: Option<(u32, u128)> = None;
        let mut packed_used = 0u128;
        let mut lower = 0u32;
        for &m in &self.p.masks {
            if m & chosen != 0 {
                continue;
            }
            let allowed = m & !forbidden;
            if allowed == 0 {
                return Ok(());
            }
            let width = allowed.count_ones();
            if pivot.is_none_or(|(w, _)| width < w) {
                pivot = Some((width, allowed));
            }
            if m & packed_used == 0 {
                packed_used |= m;
                lower += 1;
            }
        }
        let Some((_, allowed)) = pivot else {
            if size < self.best_len {
                self.best = chosen;
                self.best_len = size;
            }
            return Ok(());
        };
        if size + lower >= self.best_len {
            return Ok(());
        }

        let mut rest = allowed;
        let mut banned = forbidden;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            self.dfs(chosen | bit, banned)?;
            banned |= bit;
            rest &= rest - 1;
        }
        Ok(())
    }
}
