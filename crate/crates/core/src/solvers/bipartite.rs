use std::borrow::Borrow;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bipartite graph on left vertices `0..left` and right vertices `0..right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= left {
                return Err(Error::OutOfRange {
                    class: 0,
                    position: u,
                    size: left,
                });
            }
            if v >= right {
                return Err(Error::OutOfRange {
                    class: 1,
                    position: v,
                    size: right,
                });
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(vec![u, v]));
            }
        }
        Ok(Self {
            left,
            right,
            edges: set,
        })
    }

    /// Graph on an `left × right` grid whose edges are the set bits of `mask`,
    /// bit `u * right + v` standing for edge `(u, v)`.
    pub fn from_mask(left: usize, right: usize, mask: u64) -> Self {
        let edges = (0..left)
            .flat_map(|u| (0..right).map(move |v| (u, v)))
            .filter(|&(u, v)| mask >> (u * right + v) & 1 == 1)
            .collect();
        Self { left, right, edges }
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }
}

/// Matching of a bipartite graph as `(left, right)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteMatching {
    pub pairs: Vec<(usize, usize)>,
}

impl BipartiteMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Vertex cover of a bipartite graph split by side.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteCover {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BipartiteCover {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn covers(&self, g: &BipartiteGraph) -> bool {
        g.edges()
            .all(|(u, v)| self.left.contains(&u) || self.right.contains(&v))
    }
}

/// Maximum matching by augmenting paths (Kuhn), left vertices in order.
pub fn bipartite_max_matching(g: &BipartiteGraph) -> BipartiteMatching {
    let (_, match_right) = kuhn(g);
    let mut pairs: Vec<(usize, usize)> = match_right
        .iter()
        .enumerate()
        .filter_map(|(v, u)| u.map(|u| (u, v)))
        .collect();
    pairs.sort_unstable();
    BipartiteMatching { pairs }
}

fn kuhn(g: &BipartiteGraph) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v].is_none_or(|w| augment(w, adj, seen, mate)) {
                mate[v] = Some(u);
                return true;
            }
        }
        false
    }
    let adj = g.adjacency();
    let mut mate = vec![None; g.right];
    for u in 0..g.left {
        let mut seen = vec![false; g.right];
        augment(u, &adj, &mut seen, &mut mate);
    }
    (adj, mate)
}

/// König cover from a maximum matching: with `Z` the vertices reachable from
/// unmatched left vertices along alternating paths, the cover is
/// `(L \ Z) ∪ (R ∩ Z)`. Its size equals the matching size.
pub fn bipartite_min_cover(g: &BipartiteGraph) -> BipartiteCover {
    let (adj, mate_right) = kuhn(g);
    let mut mate_left = vec![None; g.left];
    for (v, u) in mate_right.iter().enumerate() {
        if let Some(u) = *u {
            mate_left[u] = Some(v);
        }
    }
    let mut left_seen = vec![false; g.left];
    let mut right_seen = vec![false; g.right];
    let mut stack: Vec<usize> = (0..g.left).filter(|&u| mate_left[u].is_none()).collect();
    for &u in &stack {
        left_seen[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if right_seen[v] || mate_left[u] == Some(v) {
                continue;
            }
            right_seen[v] = true;
            if let Some(w) = mate_right[v] {
                if !left_seen[w] {
                    left_seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    BipartiteCover {
        left: (0..g.left).filter(|&u| !left_seen[u]).collect(),
        right: (0..g.right).filter(|&v| right_seen[v]).collect(),
    }
}

/// A rainbow matching: one edge from each listed family member, pairwise
/// disjoint. Entries are `(family index, (left, right))` in family order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowAssignment {
    pub picks: Vec<(usize, (usize, usize))>,
}

impl RainbowAssignment {
    pub fn is_valid_for(&self, family: &[BipartiteGraph]) -> bool {
        let mut families: Vec<usize> = self.picks.iter().map(|p| p.0).collect();
        families.sort_unstable();
        families.dedup();
        families.len() == family.len()
            && self.picks.len() == family.len()
            && self.picks.iter().all(|&(i, (u, v))| family[i].contains(u, v))
            && self
                .picks
                .iter()
                .enumerate()
                .all(|(a, &(_, (u, v)))| self.picks[a + 1..].iter().all(|&(_, (x, y))| u != x && v != y))
    }
}

/// Full rainbow matching of `family`, or `None` when none exists. Exact
/// backtracking over members in ascending edge-count order (ties by index).
/// All members must share side sizes; sides are limited to 128 vertices.
pub fn rainbow_matching<G: Borrow<BipartiteGraph>>(family: &[G]) -> Result<Option<RainbowAssignment>> {
    let family: Vec<&BipartiteGraph> = family.iter().map(Borrow::borrow).collect();
    let Some(first) = family.first() else {
        return Ok(Some(RainbowAssignment { picks: Vec::new() }));
    };
    let (left, right) = (first.left, first.right);
    if let Some(g) = family.iter().find(|g| g.left != left || g.right != right) {
        return Err(Error::BadArity {
            expected: left,
            found: g.left,
        });
    }
    if left > 128 || right > 128 {
        return Err(Error::TooLarge("rainbow search supports sides up to 128".into()));
    }
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| (family[i].edge_count(), i));
    let lists: Vec<Vec<(usize, usize)>> = order.iter().map(|&i| family[i].edges().collect()).collect();

    fn go(depth: usize, lists: &[Vec<(usize, usize)>], lu: u128, ru: u128, picks: &mut Vec<(usize, usize)>) -> bool {
        if depth == lists.len() {
            return true;
        }
        for &(u, v) in &lists[depth] {
            if lu >> u & 1 == 1 || ru >> v & 1 == 1 {
                continue;
            }
            picks.push((u, v));
            if go(depth + 1, lists, lu | 1 << u, ru | 1 << v, picks) {
                return true;
            }
            picks.pop();
        }
        false
    }

    let mut picks = Vec::with_capacity(family.len());
    if !go(0, &lists, 0, 0, &mut picks) {
        return Ok(None);
    }
    let mut out: Vec<(usize, (usize, usize))> = order.into_iter().zip(picks).collect();
    out.sort_unstable_by_key(|p| p.0);
    Ok(Some(RainbowAssignment { picks: out }))
}
