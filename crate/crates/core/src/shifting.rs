//! Partite shifting (compression).
//!
//! `S_xy` for two vertices `x < y` of one class moves every edge through `y`
//! onto `x`, unless the moved edge is already present. A hypergraph fixed by
//! every same-class shift is *partitely shifted*.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexRef};

/// Applies `S_xy`. Both vertices must lie in the same class with
/// `x.pos < y.pos`. The edge count is preserved.
pub fn shift(h: &KPartiteHypergraph, x: VertexRef, y: VertexRef) -> Result<KPartiteHypergraph> {
    check_pair(h, x, y)?;
    let mut edges = h.edge_set().clone();
    shift_in_place(&mut edges, x.class, x.pos, y.pos);
    Ok(KPartiteHypergraph::from_parts(h.sizes().to_vec(), edges))
}

fn check_pair(h: &KPartiteHypergraph, x: VertexRef, y: VertexRef) -> Result<()> {
    for v in [x, y] {
        if !h.has_vertex(v) {
            return Err(Error::OutOfRange {
                class: v.class,
                position: v.pos,
                size: h.sizes().get(v.class).copied().unwrap_or(0),
            });
        }
    }
    if x.class != y.class {
        return Err(Error::DifferentClass { x, y });
    }
    if x.pos >= y.pos {
        return Err(Error::NotOrdered { x, y });
    }
    Ok(())
}

/// Returns whether anything moved. Replacement edges have `x` in `class`
/// while moved edges have `y`, so the membership test against the original
/// edge set is unaffected by earlier moves in the same pass.
fn shift_in_place(edges: &mut BTreeSet<Edge>, class: usize, x: usize, y: usize) -> bool {
    let moves: Vec<(Edge, Edge)> = edges
        .iter()
        .filter(|e| e[class] == y)
        .map(|e| (e.clone(), e.replaced(class, x)))
        .filter(|(_, target)| !edges.contains(target))
        .collect();
    for (from, to) in &moves {
        edges.remove(from);
        edges.insert(to.clone());
    }
    !moves.is_empty()
}

/// One changing shift of a closure run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftStep {
    pub class: usize,
    pub x: usize,
    pub y: usize,
}

/// The sequence `H = G_0, G_1, …, G_t` of a closure run, `G_t` shifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    pub steps: Vec<ShiftStep>,
    pub graphs: Vec<KPartiteHypergraph>,
}

/// Shifts until no same-class shift changes the edge set.
///
/// Pairs are swept class by class, and within a class in lexicographic
/// `(x, y)` order; the sweep restarts from the beginning after every change.
/// The sum of all edge positions drops with each change, so this terminates.
/// Different sweep orders can reach different shifted graphs; this order is
/// fixed, so the output is deterministic.
pub fn shift_closure(h: &KPartiteHypergraph) -> KPartiteHypergraph {
    let mut edges = h.edge_set().clone();
    while let Some(step) = next_change(h.sizes(), &edges) {
        shift_in_place(&mut edges, step.class, step.x, step.y);
    }
    KPartiteHypergraph::from_parts(h.sizes().to_vec(), edges)
}

/// [`shift_closure`] keeping every intermediate graph.
pub fn shift_closure_traced(h: &KPartiteHypergraph) -> ShiftTrace {
    let mut edges = h.edge_set().clone();
    let mut steps = Vec::new();
    let mut graphs = vec![h.clone()];
    while let Some(step) = next_change(h.sizes(), &edges) {
        shift_in_place(&mut edges, step.class, step.x, step.y);
        steps.push(step);
        graphs.push(KPartiteHypergraph::from_parts(h.sizes().to_vec(), edges.clone()));
    }
    ShiftTrace { steps, graphs }
}

/// First pair in sweep order whose shift would change `edges`.
fn next_change(sizes: &[usize], edges: &BTreeSet<Edge>) -> Option<ShiftStep> {
    for (class, &n) in sizes.iter().enumerate() {
        for x in 0..n {
            for y in x + 1..n {
                let moves = edges
                    .iter()
                    .any(|e| e[class] == y && !edges.contains(&e.replaced(class, x)));
                if moves {
                    return Some(ShiftStep { class, x, y });
                }
            }
        }
    }
    None
}

/// Fixed by every same-class shift `S_xy`, `x < y`.
pub fn is_partitely_shifted(h: &KPartiteHypergraph) -> bool {
    next_change(h.sizes(), h.edge_set()).is_none()
}

/// Neighbourhoods nested by position: within each class, the link of a later
/// vertex is contained in the link of every earlier one. Equivalent to
/// [`is_partitely_shifted`], computed without applying shifts.
pub fn has_nested_neighbourhoods(h: &KPartiteHypergraph) -> bool {
    (0..h.k()).all(|class| {
        let links: Vec<HashSet<Vec<usize>>> = (0..h.sizes()[class])
            .map(|p| {
                h.edges()
                    .filter(|e| e[class] == p)
                    .map(|e| {
                        let mut rest = e.positions().to_vec();
                        rest.remove(class);
                        rest
                    })
                    .collect()
            })
            .collect();
        links.windows(2).all(|w| w[1].is_subset(&w[0]))
    })
}
