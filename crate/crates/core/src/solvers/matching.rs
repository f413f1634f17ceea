use super::packed::Packed;
use super::Budget;
use crate::error::{Error, Result};
use crate::hypergraph::{KPartiteHypergraph, Matching};

/// Maximum matching by depth-first branch and bound.
///
/// The search branches on the first still-available edge's class-0 vertex:
/// match it through each available edge containing it (in edge order), or
/// leave it unmatched. A branch is cut when the current size plus the number
/// of distinct vertices still reachable in the scarcest class cannot beat the
/// incumbent. Include-first order means the certificate returned is the first
/// maximum matching in lexicographic order of edge indices.
pub fn max_matching(h: &KPartiteHypergraph) -> Result<Matching> {
    max_matching_with(h, Budget::UNLIMITED)
}

/// [`max_matching`] with a node limit. On exhaustion returns
/// [`Error::Budget`] carrying the size of the best matching found, which is
/// then only a lower bound on ν.
pub fn max_matching_with(h: &KPartiteHypergraph, budget: Budget) -> Result<Matching> {
    let packed = Packed::new(h)?;
    let mut search = Search {
        p: &packed,
        budget,
        nodes: 0,
        current: Vec::new(),
        best: Vec::new(),
        target: usize::MAX,
    };
    search.run()?;
    Ok(Matching::new(
        search.best.iter().map(|&i| packed.edges[i].clone()).collect(),
    ))
}

/// A perfect matching if one exists. Requires equal class sizes; otherwise
/// returns `None`.
pub fn perfect_matching(h: &KPartiteHypergraph) -> Result<Option<Matching>> {
    let n = h.sizes()[0];
    if h.sizes().iter().any(|&s| s != n) {
        return Ok(None);
    }
    let packed = Packed::new(h)?;
    let mut search = Search {
        p: &packed,
        budget: Budget::UNLIMITED,
        nodes: 0,
        current: Vec::new(),
        best: Vec::new(),
        target: n,
    };
    search.run()?;
    Ok((search.best.len() == n).then(|| Matching::new(search.best.iter().map(|&i| packed.edges[i].clone()).collect())))
}

struct Search<'a> {
    p: &'a Packed,
    budget: Budget,
    nodes: u64,
    current: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a matching of this size is found.
    target: usize,
}

impl Search<'_> {
    fn run(&mut self) -> Result<()> {
        // Greedy first-fit packing is the first leaf of the search order.
        let mut used = 0u128;
        for (i, &m) in self.p.masks.iter().enumerate() {
            if m & used == 0 {
                used |= m;
                self.best.push(i);
            }
        }
        if self.best.len() >= self.target {
            self.best.truncate(self.target);
            return Ok(());
        }
        self.dfs(0, 0)
    }

    fn dfs(&mut self, start: usize, used: u128) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                return Err(Error::Budget {
                    limit,
                    best: self.best.len(),
                });
            }
        }
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
        }
        if self.best.len() >= self.target {
            return Ok(());
        }

        let masks = &self.p.masks;
        let mut reach = 0u128;
        let mut first = None;
        for (i, &m) in masks.iter().enumerate().skip(start) {
            if m & used == 0 {
                reach |= m;
                first.get_or_insert(i);
            }
        }
        let Some(first) = first else {
            return Ok(());
        };
        let bound = self
            .p
            .class_masks
            .iter()
            .map(|&c| (reach & c).count_ones() as usize)
            .min()
            .unwrap_or(0);
        if self.current.len() + bound <= self.best.len() {
            return Ok(());
        }

        // Pivot: the class-0 vertex of the first available edge.
        let pivot = masks[first] & self.p.class_masks[0];
        for (i, &m) in masks.iter().enumerate().skip(first) {
            if m & pivot == 0 || m & used != 0 {
                continue;
            }
            self.current.push(i);
            self.dfs(i + 1, used | m)?;
            self.current.pop();
            if self.best.len() >= self.target {
                return Ok(());
            }
        }
        self.dfs(first + 1, used | pivot)
    }
}
