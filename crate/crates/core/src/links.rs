//! Coloured link systems of a legal triple against two disjoint edges, and
//! the matching extension they enable.
//!
//! Fix a legal triple `S = {x_0, x_1, x_2}` (`x_i` in class `i`) and disjoint
//! edges `f_1`, `f_2`. For colour `i` let `j < l` be the two other classes.
//! Colour `i` has two candidate pairs between `f_1` and `f_2`:
//!
//! * slot 0: `f_1`'s class-`j` vertex with `f_2`'s class-`l` vertex,
//! * slot 1: `f_1`'s class-`l` vertex with `f_2`'s class-`j` vertex,
//!
//! and a slot is present when the pair together with `x_i` is an edge. The
//! six slots are pairwise distinct vertex pairs, so a pair never carries two
//! colours.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::{Status, VerificationReport};
use crate::hypergraph::{Edge, KPartiteHypergraph, LegalSet, Matching};
use crate::solvers::{bipartite_max_matching, BipartiteGraph};

/// The two classes other than `color`, ascending.
fn other_classes(color: usize) -> (usize, usize) {
    match color {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// `(class of the f_1 endpoint, class of the f_2 endpoint)` of a slot.
pub fn slot_classes(color: usize, slot: usize) -> (usize, usize) {
    let (j, l) = other_classes(color);
    if slot == 0 {
        (j, l)
    } else {
        (l, j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Context {
    s: [usize; 3],
    f1: Edge,
    f2: Edge,
}

/// Presence pattern of the six coloured slots, optionally tied to concrete
/// `S`, `f_1`, `f_2` so that present slots can be turned into edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSystem {
    present: [[bool; 2]; 3],
    context: Option<Context>,
}

impl LinkSystem {
    /// Abstract system from a 6-bit mask; bit `2*color + slot` marks a slot.
    pub fn from_bits(bits: u8) -> Self {
        let mut present = [[false; 2]; 3];
        for (color, row) in present.iter_mut().enumerate() {
            for (slot, p) in row.iter_mut().enumerate() {
                *p = bits >> (2 * color + slot) & 1 == 1;
            }
        }
        Self { present, context: None }
    }

    pub fn bits(&self) -> u8 {
        let mut b = 0;
        for color in 0..3 {
            for slot in 0..2 {
                if self.present[color][slot] {
                    b |= 1 << (2 * color + slot);
                }
            }
        }
        b
    }

    pub fn is_present(&self, color: usize, slot: usize) -> bool {
        self.present[color][slot]
    }

    pub fn color_count(&self, color: usize) -> usize {
        self.present[color].iter().filter(|&&p| p).count()
    }

    /// e(L_S(f_1, f_2)).
    pub fn total(&self) -> usize {
        (0..3).map(|c| self.color_count(c)).sum()
    }

    /// The 3×3 bipartite union graph: left vertex `a` is `f_1`'s class-`a`
    /// vertex, right vertex `b` is `f_2`'s class-`b` vertex.
    pub fn union_graph(&self) -> BipartiteGraph {
        let pairs = (0..3)
            .flat_map(|c| (0..2).map(move |s| (c, s)))
            .filter(|&(c, s)| self.present[c][s])
            .map(|(c, s)| slot_classes(c, s));
        BipartiteGraph::new(3, 3, pairs).expect("slots are distinct pairs")
    }

    /// The hyperedge `{x_color} ∪ pair(slot)`; needs a concrete system.
    pub fn slot_edge(&self, color: usize, slot: usize) -> Option<Edge> {
        let ctx = self.context.as_ref()?;
        let (a, b) = slot_classes(color, slot);
        let mut p = [0usize; 3];
        p[color] = ctx.s[color];
        p[a] = ctx.f1[a];
        p[b] = ctx.f2[b];
        Some(Edge::new(p))
    }
}

/// Builds `L_S(f_1, f_2)` for a 3-partite 3-graph.
pub fn link_system(h: &KPartiteHypergraph, s: &LegalSet, f1: &Edge, f2: &Edge) -> Result<LinkSystem> {
    if h.k() != 3 {
        return Err(Error::BadArity {
            expected: 3,
            found: h.k(),
        });
    }
    for f in [f1, f2] {
        if !h.is_legal_tuple(f) {
            return Err(Error::BadArity {
                expected: 3,
                found: f.len(),
            });
        }
    }
    if s.len() != 3 {
        return Err(Error::BadArity {
            expected: 3,
            found: s.len(),
        });
    }
    let pos: Vec<usize> = (0..3).map(|c| s.in_class(c).expect("legal triple").pos).collect();
    let s_arr = [pos[0], pos[1], pos[2]];
    if !f1.is_disjoint(f2) || s.vertices().iter().any(|v| f1.contains(*v) || f2.contains(*v)) {
        return Err(Error::Overlap);
    }
    let mut sys = LinkSystem {
        present: [[false; 2]; 3],
        context: Some(Context {
            s: s_arr,
            f1: f1.clone(),
            f2: f2.clone(),
        }),
    };
    for color in 0..3 {
        for slot in 0..2 {
            let e = sys.slot_edge(color, slot).expect("concrete");
            sys.present[color][slot] = h.contains_edge(&e);
        }
    }
    Ok(sys)
}

/// One present slot per colour, pairwise disjoint: `slots[color]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowTriple {
    pub slots: [usize; 3],
}

/// Exhaustive search over the `2^3` slot choices.
pub fn rainbow_extension(sys: &LinkSystem) -> Option<RainbowTriple> {
    for choice in 0..8u8 {
        let slots = [
            choice as usize & 1,
            (choice as usize >> 1) & 1,
            (choice as usize >> 2) & 1,
        ];
        if (0..3).any(|c| !sys.is_present(c, slots[c])) {
            continue;
        }
        let ends: Vec<(usize, usize)> = (0..3).map(|c| slot_classes(c, slots[c])).collect();
        let disjoint = (0..3).all(|i| (i + 1..3).all(|j| ends[i].0 != ends[j].0 && ends[i].1 != ends[j].1));
        if disjoint {
            return Some(RainbowTriple { slots });
        }
    }
    None
}

/// Swaps `f_1, f_2` in `m` for the three edges of a rainbow triple through
/// `S`, giving a matching one larger. `None` when the link system has no
/// rainbow triple.
pub fn extend_matching(
    h: &KPartiteHypergraph,
    m: &Matching,
    s: &LegalSet,
    f1: &Edge,
    f2: &Edge,
) -> Result<Option<Matching>> {
    for f in [f1, f2] {
        if !m.edges.contains(f) {
            return Err(Error::NotInMatching(f.positions().to_vec()));
        }
    }
    let covered = m.vertices();
    if s.vertices().iter().any(|v| covered.contains(v)) {
        return Err(Error::Overlap);
    }
    let sys = link_system(h, s, f1, f2)?;
    let Some(triple) = rainbow_extension(&sys) else {
        return Ok(None);
    };
    let mut edges: Vec<Edge> = m.edges.iter().filter(|e| *e != f1 && *e != f2).cloned().collect();
    edges.extend((0..3).map(|c| sys.slot_edge(c, triple.slots[c]).expect("concrete")));
    let out = Matching::new(edges);
    debug_assert!(out.is_valid_in(h));
    Ok(out.is_valid_in(h).then_some(out))
}

/// One configuration of the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub config: u8,
    pub counts: [usize; 3],
    pub total: usize,
    pub rainbow: bool,
    pub perfect_matching: bool,
    pub non_rainbow_perfect_matching: bool,
}

/// All 64 slot configurations.
pub fn census() -> Vec<CensusRow> {
    (0u8..64)
        .map(|bits| {
            let sys = LinkSystem::from_bits(bits);
            let union = sys.union_graph();
            CensusRow {
                config: bits,
                counts: [sys.color_count(0), sys.color_count(1), sys.color_count(2)],
                total: sys.total(),
                rainbow: rainbow_extension(&sys).is_some(),
                perfect_matching: bipartite_max_matching(&union).len() == 3,
                non_rainbow_perfect_matching: perfect_matchings(&sys)
                    .iter()
                    .any(|colors| !(colors[0] != colors[1] && colors[0] != colors[2] && colors[1] != colors[2])),
            }
        })
        .collect()
}

/// Colour triples of every perfect matching of the union graph.
fn perfect_matchings(sys: &LinkSystem) -> Vec<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let color_of = |a: usize, b: usize| -> Option<usize> {
        (0..3)
            .flat_map(|c| (0..2).map(move |s| (c, s)))
            .find(|&(c, s)| slot_classes(c, s) == (a, b) && sys.is_present(c, s))
            .map(|(c, _)| c)
    };
    PERMS
        .iter()
        .filter_map(|p| {
            let cs: Option<Vec<usize>> = (0..3).map(|a| color_of(a, p[a])).collect();
            cs.map(|v| [v[0], v[1], v[2]])
        })
        .collect()
}

/// Runs the census and checks the extension bound: every configuration with
/// at least five present slots has a rainbow triple.
pub fn extension_lemma_census() -> VerificationReport {
    let start = Instant::now();
    let rows = census();
    let violations: Vec<serde_json::Value> = rows
        .iter()
        .filter(|r| r.total >= 5 && !r.rainbow)
        .map(|r| serde_json::to_value(r).expect("row serializes"))
        .collect();
    let mut by_total: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for r in &rows {
        let e = by_total.entry(r.total).or_default();
        e.0 += 1;
        if r.rainbow {
            e.1 += 1;
        }
    }
    let slot_pairs: Vec<(usize, usize)> = (0..3).flat_map(|c| (0..2).map(move |s| slot_classes(c, s))).collect();
    let slots_distinct = slot_pairs
        .iter()
        .enumerate()
        .all(|(i, p)| !slot_pairs[i + 1..].contains(p));
    let mut findings = BTreeMap::new();
    findings.insert(
        "by_total".into(),
        serde_json::json!(by_total
            .iter()
            .map(|(t, (n, r))| serde_json::json!({"total": t, "configs": n, "with_rainbow": r}))
            .collect::<Vec<_>>()),
    );
    findings.insert("slots_distinct".into(), serde_json::json!(slots_distinct));
    findings.insert(
        "total4_without_rainbow".into(),
        serde_json::json!(rows.iter().filter(|r| r.total == 4 && !r.rainbow).count()),
    );
    findings.insert(
        "rainbow_equals_perfect_matching".into(),
        serde_json::json!(rows.iter().all(|r| r.rainbow == r.perfect_matching)),
    );
    findings.insert(
        "non_rainbow_perfect_matchings".into(),
        serde_json::json!(rows.iter().filter(|r| r.non_rainbow_perfect_matching).count()),
    );
    let status = if violations.is_empty() && slots_distinct {
        Status::Pass
    } else {
        Status::Fail
    };
    VerificationReport {
        claim_id: "lem-2.1".into(),
        params: BTreeMap::new(),
        instances_tested: rows.len() as u64,
        instances_skipped: 0,
        counterexamples: violations,
        status,
        findings,
        seed: 0,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_uniform, extremal_hknm};
    use crate::hypergraph::VertexRef;

    fn triple(p: [usize; 3]) -> LegalSet {
        LegalSet::new((0..3).map(|c| VertexRef::new(c, p[c]))).unwrap()
    }

    #[test]
    fn complete_graph_has_all_slots() {
        let h = complete_uniform(3, 3);
        let sys = link_system(&h, &triple([2, 2, 2]), &Edge::from([0, 0, 0]), &Edge::from([1, 1, 1])).unwrap();
        assert_eq!(sys.total(), 6);
        assert!(rainbow_extension(&sys).is_some());
    }

    #[test]
    fn no_edges_at_s_gives_empty_system() {
        let h = KPartiteHypergraph::new(3, vec![3, 3, 3], [[0, 0, 0], [1, 1, 1]]).unwrap();
        let sys = link_system(&h, &triple([2, 2, 2]), &Edge::from([0, 0, 0]), &Edge::from([1, 1, 1])).unwrap();
        assert_eq!(sys.total(), 0);
        assert!(rainbow_extension(&sys).is_none());
    }

    #[test]
    fn extremal_graph_system_matches_direct_queries() {
        let h = extremal_hknm(3, 5, 2).unwrap();
        let s = triple([4, 4, 4]);
        let (f1, f2) = (Edge::from([2, 0, 1]), Edge::from([3, 1, 0]));
        let sys = link_system(&h, &s, &f1, &f2).unwrap();
        for color in 0..3 {
            let x = s.in_class(color).unwrap();
            let (a, b) = slot_classes(color, 0);
            let (c, d) = slot_classes(color, 1);
            let oracle = [
                h.degree(&[x, f1.vertex(a), f2.vertex(b)]),
                h.degree(&[x, f1.vertex(c), f2.vertex(d)]),
            ];
            assert_eq!(sys.color_count(color), oracle.iter().sum::<usize>());
        }
        // Away from W_1 and v_1 the only edges run through (v_2, v_3) = (0, 0);
        // colour 0, slot 0 pairs f_1's V1[0] with f_2's V2[0].
        assert_eq!(sys.bits(), 0b000001);
    }

    #[test]
    fn link_system_errors() {
        let h = complete_uniform(3, 3);
        let s = triple([0, 2, 2]);
        assert_eq!(
            link_system(&h, &s, &Edge::from([0, 0, 0]), &Edge::from([1, 1, 1])),
            Err(Error::Overlap)
        );
        assert_eq!(
            link_system(&h, &triple([2, 2, 2]), &Edge::from([0, 0, 0]), &Edge::from([0, 1, 1])),
            Err(Error::Overlap)
        );
        let h4 = complete_uniform(4, 3);
        assert!(matches!(
            link_system(
                &h4,
                &triple([2, 2, 2]),
                &Edge::from([0, 0, 0, 0]),
                &Edge::from([1, 1, 1, 1])
            ),
            Err(Error::BadArity { .. })
        ));
    }

    /// Brute force over all triples of present slots, independent of
    /// [`rainbow_extension`]'s enumeration.
    fn brute_rainbow(sys: &LinkSystem) -> bool {
        let present: Vec<(usize, usize)> = (0..3)
            .flat_map(|c| (0..2).map(move |s| (c, s)))
            .filter(|&(c, s)| sys.is_present(c, s))
            .collect();
        for a in &present {
            for b in &present {
                for c in &present {
                    let colors = [a.0, b.0, c.0];
                    if colors != [0, 1, 2] {
                        continue;
                    }
                    let mut f1s: Vec<usize> = [a, b, c].iter().map(|p| slot_classes(p.0, p.1).0).collect();
                    let mut f2s: Vec<usize> = [a, b, c].iter().map(|p| slot_classes(p.0, p.1).1).collect();
                    f1s.sort();
                    f1s.dedup();
                    f2s.sort();
                    f2s.dedup();
                    if f1s.len() == 3 && f2s.len() == 3 {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn rainbow_extension_agrees_with_brute_force() {
        for bits in 0..64u8 {
            let sys = LinkSystem::from_bits(bits);
            assert_eq!(
                rainbow_extension(&sys).is_some(),
                brute_rainbow(&sys),
                "config {bits:06b}"
            );
        }
    }

    #[test]
    fn full_and_five_slot_systems_extend() {
        assert!(rainbow_extension(&LinkSystem::from_bits(0b111111)).is_some());
        for missing in 0..6 {
            let sys = LinkSystem::from_bits(0b111111 & !(1 << missing));
            assert_eq!(sys.total(), 5);
            assert!(rainbow_extension(&sys).is_some());
        }
        // Colour 2 empty.
        assert!(rainbow_extension(&LinkSystem::from_bits(0b001111)).is_none());
    }

    #[test]
    fn census_properties() {
        let rows = census();
        assert_eq!(rows.len(), 64);
        assert!(rows.iter().filter(|r| r.total >= 5).all(|r| r.rainbow));
        assert!(rows.iter().any(|r| r.total == 4 && !r.rainbow));
        assert!(rows.iter().any(|r| r.total == 3 && r.counts.contains(&0) && !r.rainbow));
        assert!(rows.iter().all(|r| r.rainbow == r.perfect_matching));
        assert!(rows.iter().all(|r| !r.non_rainbow_perfect_matching));
        let report = extension_lemma_census();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.instances_tested, 64);
    }

    #[test]
    fn extend_matching_in_complete_graph() {
        let h = complete_uniform(3, 3);
        let (f1, f2) = (Edge::from([0, 0, 0]), Edge::from([1, 1, 1]));
        let m = Matching::new(vec![f1.clone(), f2.clone()]);
        let out = extend_matching(&h, &m, &triple([2, 2, 2]), &f1, &f2).unwrap().unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.is_valid_in(&h));
        assert!(out.is_perfect_in(&h));
    }

    #[test]
    fn extend_matching_fails_on_blocked_system() {
        // Census: 4 present slots with no rainbow triple. Realize one.
        let row = census().into_iter().find(|r| r.total == 4 && !r.rainbow).unwrap();
        let sys = LinkSystem::from_bits(row.config);
        let (f1, f2) = (Edge::from([0, 0, 0]), Edge::from([1, 1, 1]));
        let s = [2usize, 2, 2];
        let mut edges = vec![f1.clone(), f2.clone()];
        for color in 0..3 {
            for slot in 0..2 {
                if sys.is_present(color, slot) {
                    let (a, b) = slot_classes(color, slot);
                    let mut p = [0; 3];
                    p[color] = s[color];
                    p[a] = f1[a];
                    p[b] = f2[b];
                    edges.push(Edge::from(p));
                }
            }
        }
        let h = KPartiteHypergraph::new(3, vec![3, 3, 3], edges).unwrap();
        let m = Matching::new(vec![f1.clone(), f2.clone()]);
        let got = link_system(&h, &triple(s), &f1, &f2).unwrap();
        assert_eq!(got.bits(), row.config);
        assert_eq!(extend_matching(&h, &m, &triple(s), &f1, &f2).unwrap(), None);
    }

    #[test]
    fn extend_matching_rejects_foreign_edges() {
        let h = complete_uniform(3, 3);
        let m = Matching::new(vec![Edge::from([0, 0, 0])]);
        assert!(matches!(
            extend_matching(
                &h,
                &m,
                &triple([2, 2, 2]),
                &Edge::from([0, 0, 0]),
                &Edge::from([1, 1, 1])
            ),
            Err(Error::NotInMatching(_))
        ));
    }
}
