//! k-partite k-uniform hypergraphs and the basic queries on them.
//!
//! Vertices are addressed by `(class, position)` with 0-based positions. An
//! edge is a k-tuple whose slot `i` holds the position of its class-`i`
//! vertex, so every edge is legal by construction. The position order inside
//! a class is the linear order used by shifting: a smaller position precedes
//! a larger one.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solvers::BipartiteGraph;

/// A vertex of a k-partite hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub class: usize,
    pub pos: usize,
}

impl VertexRef {
    pub const fn new(class: usize, pos: usize) -> Self {
        Self { class, pos }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}[{}]", self.class, self.pos)
    }
}

/// A legal k-edge: slot `i` is the position of the edge's class-`i` vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Edge(Vec<usize>);

impl Edge {
    pub fn new(positions: impl Into<Vec<usize>>) -> Self {
        Self(positions.into())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn into_positions(self) -> Vec<usize> {
        self.0
    }

    pub fn vertex(&self, class: usize) -> VertexRef {
        VertexRef::new(class, self.0[class])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.0
            .iter()
            .enumerate()
            .map(|(class, &pos)| VertexRef::new(class, pos))
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        self.0.get(v.class) == Some(&v.pos)
    }

    /// True when the two edges share no vertex.
    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a != b)
    }

    /// Copy of this edge with the class-`class` vertex replaced by `pos`.
    pub fn replaced(&self, class: usize, pos: usize) -> Edge {
        let mut p = self.0.clone();
        p[class] = pos;
        Edge(p)
    }
}

impl Deref for Edge {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Edge {
    fn from(v: Vec<usize>) -> Self {
        Edge(v)
    }
}

impl<const N: usize> From<[usize; N]> for Edge {
    fn from(v: [usize; N]) -> Self {
        Edge(v.to_vec())
    }
}

/// A k-partite k-graph: `k` vertex classes of given sizes and a set of legal
/// edges. Immutable once built; edges iterate in lexicographic tuple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KPartiteHypergraph {
    sizes: Vec<usize>,
    edges: BTreeSet<Edge>,
}

impl KPartiteHypergraph {
    /// Validating constructor. Rejects tuples of the wrong length, positions
    /// outside their class and repeated tuples.
    pub fn new<I, E>(k: usize, sizes: Vec<usize>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if k < 2 {
            return Err(Error::BadParams(format!("k must be at least 2, got {k}")));
        }
        if sizes.len() != k {
            return Err(Error::BadArity {
                expected: k,
                found: sizes.len(),
            });
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let e: Edge = e.into();
            if e.len() != k {
                return Err(Error::BadArity {
                    expected: k,
                    found: e.len(),
                });
            }
            for (class, (&pos, &size)) in e.iter().zip(&sizes).enumerate() {
                if pos >= size {
                    return Err(Error::OutOfRange {
                        class,
                        position: pos,
                        size,
                    });
                }
            }
            if set.contains(&e) {
                return Err(Error::DuplicateEdge(e.into_positions()));
            }
            set.insert(e);
        }
        Ok(Self { sizes, edges: set })
    }

    /// Hypergraph with no edges.
    pub fn empty(sizes: Vec<usize>) -> Result<Self> {
        Self::new(sizes.len(), sizes, std::iter::empty::<Edge>())
    }

    /// Trusted constructor for edge sets that are valid by construction.
    pub(crate) fn from_parts(sizes: Vec<usize>, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == sizes.len() && e.iter().zip(&sizes).all(|(p, s)| p < s)));
        Self { sizes, edges }
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// e(H).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub(crate) fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &n)| (0..n).map(move |p| VertexRef::new(c, p)))
    }

    pub fn has_vertex(&self, v: VertexRef) -> bool {
        v.class < self.k() && v.pos < self.sizes[v.class]
    }

    /// Number of legal k-tuples, i.e. the edge count of the complete graph
    /// on these classes.
    pub fn legal_tuple_count(&self) -> usize {
        self.sizes.iter().product()
    }

    /// Whether `e` is a well-formed tuple for these classes.
    pub fn is_legal_tuple(&self, e: &Edge) -> bool {
        e.len() == self.k() && e.iter().zip(&self.sizes).all(|(p, s)| p < s)
    }

    /// Copy with `e` added. Errors if `e` is malformed or already present.
    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        if e.len() != self.k() {
            return Err(Error::BadArity {
                expected: self.k(),
                found: e.len(),
            });
        }
        if let Some((class, (&position, &size))) = e.iter().zip(&self.sizes).enumerate().find(|(_, (p, s))| p >= s) {
            return Err(Error::OutOfRange { class, position, size });
        }
        let mut edges = self.edges.clone();
        if !edges.insert(e.clone()) {
            return Err(Error::DuplicateEdge(e.into_positions()));
        }
        Ok(Self::from_parts(self.sizes.clone(), edges))
    }

    /// Copy with `e` removed (no-op when absent).
    pub fn without_edge(&self, e: &Edge) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self::from_parts(self.sizes.clone(), edges)
    }

    /// Number of edges containing every vertex of `t`. Zero when `t` is not
    /// legal (two vertices in one class).
    pub fn degree(&self, t: &[VertexRef]) -> usize {
        let Some(t) = legal_or_none(t) else {
            return 0;
        };
        if t.iter().any(|v| !self.has_vertex(*v)) {
            return 0;
        }
        self.edges.iter().filter(|e| t.iter().all(|v| e.contains(*v))).count()
    }

    /// δ_l(H): the minimum degree over legal l-subsets; `e(H)` for `l = 0`.
    /// When no legal l-subset exists the hypergraph has no edges and 0 is
    /// returned.
    pub fn min_l_degree(&self, l: usize) -> Result<usize> {
        let k = self.k();
        if l > k {
            return Err(Error::BadLevel { level: l, k });
        }
        if l == 0 {
            return Ok(self.edge_count());
        }
        let mut best: Option<usize> = None;
        for classes in class_subsets(k, l) {
            let sets: usize = classes.iter().map(|&c| self.sizes[c]).product();
            if sets == 0 {
                continue;
            }
            let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
            for e in &self.edges {
                let key: Vec<usize> = classes.iter().map(|&c| e[c]).collect();
                *counts.entry(key).or_default() += 1;
            }
            let m = if counts.len() < sets {
                0
            } else {
                counts.values().copied().min().unwrap_or(0)
            };
            best = Some(best.map_or(m, |b| b.min(m)));
        }
        Ok(best.unwrap_or(0))
    }

    /// Degree of every vertex, indexed `[class][position]`.
    pub fn vertex_degrees(&self) -> Vec<Vec<usize>> {
        let mut deg: Vec<Vec<usize>> = self.sizes.iter().map(|&n| vec![0; n]).collect();
        for e in &self.edges {
            for (c, &p) in e.iter().enumerate() {
                deg[c][p] += 1;
            }
        }
        deg
    }

    /// H − T: drop the vertices of `t` and every edge meeting them. Surviving
    /// vertices are renumbered densely within their class; the returned map
    /// sends `[class][old position]` to the new position.
    pub fn remove_vertices(&self, t: &[VertexRef]) -> (Self, Vec<Vec<Option<usize>>>) {
        let mut removed: Vec<Vec<bool>> = self.sizes.iter().map(|&n| vec![false; n]).collect();
        for v in t {
            if self.has_vertex(*v) {
                removed[v.class][v.pos] = true;
            }
        }
        let mut mapping: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.k());
        let mut sizes = Vec::with_capacity(self.k());
        for gone in &removed {
            let mut next = 0;
            let map: Vec<Option<usize>> = gone
                .iter()
                .map(|&g| {
                    if g {
                        None
                    } else {
                        next += 1;
                        Some(next - 1)
                    }
                })
                .collect();
            sizes.push(next);
            mapping.push(map);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                e.iter()
                    .enumerate()
                    .map(|(c, &p)| mapping[c][p])
                    .collect::<Option<Vec<usize>>>()
                    .map(Edge)
            })
            .collect();
        (Self::from_parts(sizes, edges), mapping)
    }

    /// Link graph L_x(A, B) of a 3-partite 3-graph: the bipartite graph with
    /// left side `a`, right side `b` (in the given order) and an edge `(i, j)`
    /// whenever `{a[i], b[j], x}` is an edge.
    pub fn link_graph(&self, x: VertexRef, a: &[VertexRef], b: &[VertexRef]) -> Result<BipartiteGraph> {
        if self.k() != 3 {
            return Err(Error::BadArity {
                expected: 3,
                found: self.k(),
            });
        }
        for v in a.iter().chain(b).chain(std::iter::once(&x)) {
            if !self.has_vertex(*v) {
                return Err(Error::OutOfRange {
                    class: v.class,
                    position: v.pos,
                    size: self.sizes.get(v.class).copied().unwrap_or(0),
                });
            }
        }
        if a.contains(&x) || b.contains(&x) || a.iter().any(|u| b.contains(u)) {
            return Err(Error::Overlap);
        }
        let mut pairs = Vec::new();
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                if let Some(e) = edge_from_vertices(3, &[*u, *v, x]) {
                    if self.edges.contains(&e) {
                        pairs.push((i, j));
                    }
                }
            }
        }
        BipartiteGraph::new(a.len(), b.len(), pairs)
    }

    /// e_H(A, B): number of edges meeting both `a` and `b`.
    pub fn edges_between(&self, a: &[VertexRef], b: &[VertexRef]) -> usize {
        self.edges
            .iter()
            .filter(|e| a.iter().any(|v| e.contains(*v)) && b.iter().any(|v| e.contains(*v)))
            .count()
    }

    /// Global dense index of a vertex: classes laid out one after another.
    pub(crate) fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.sizes
            .iter()
            .map(|&n| {
                let o = acc;
                acc += n;
                o
            })
            .collect()
    }
}

/// Edge formed by `vertices` if they hit each of the `k` classes exactly once.
pub fn edge_from_vertices(k: usize, vertices: &[VertexRef]) -> Option<Edge> {
    if vertices.len() != k {
        return None;
    }
    let mut slots = vec![None; k];
    for v in vertices {
        let slot = slots.get_mut(v.class)?;
        if slot.is_some() {
            return None;
        }
        *slot = Some(v.pos);
    }
    slots.into_iter().collect::<Option<Vec<_>>>().map(Edge)
}

fn legal_or_none(t: &[VertexRef]) -> Option<Vec<VertexRef>> {
    let set: BTreeSet<VertexRef> = t.iter().copied().collect();
    let mut seen = BTreeSet::new();
    for v in &set {
        if !seen.insert(v.class) {
            return None;
        }
    }
    Some(set.into_iter().collect())
}

/// All `l`-element subsets of `0..k` in lexicographic order.
pub(crate) fn class_subsets(k: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for c in start..k {
            cur.push(c);
            rec(c + 1, k, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, l, &mut Vec::new(), &mut out);
    out
}

/// A set of pairwise disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn new(edges: Vec<Edge>) -> Self {
        Self { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that the edges are pairwise disjoint edges of `host`.
    pub fn is_valid_in(&self, host: &KPartiteHypergraph) -> bool {
        self.edges.iter().all(|e| host.contains_edge(e))
            && self
                .edges
                .iter()
                .enumerate()
                .all(|(i, e)| self.edges[i + 1..].iter().all(|f| e.is_disjoint(f)))
    }

    /// Covers every vertex of `host`.
    pub fn is_perfect_in(&self, host: &KPartiteHypergraph) -> bool {
        self.is_valid_in(host) && host.sizes().iter().all(|&n| n == self.len())
    }

    pub fn vertices(&self) -> BTreeSet<VertexRef> {
        self.edges.iter().flat_map(|e| e.vertices()).collect()
    }
}

/// A set of vertices meeting every edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCover {
    pub vertices: BTreeSet<VertexRef>,
}

impl VertexCover {
    pub fn new(vertices: impl IntoIterator<Item = VertexRef>) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn covers(&self, host: &KPartiteHypergraph) -> bool {
        host.edges().all(|e| self.vertices.iter().any(|v| e.contains(*v)))
    }
}

/// A vertex set with at most one vertex per class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LegalSet {
    vertices: Vec<VertexRef>,
}

impl LegalSet {
    pub fn new(vertices: impl IntoIterator<Item = VertexRef>) -> Result<Self> {
        let mut vertices: Vec<VertexRef> = vertices.into_iter().collect();
        vertices.sort();
        vertices.dedup();
        if vertices.windows(2).any(|w| w[0].class == w[1].class) {
            return Err(Error::Overlap);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[VertexRef] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Member in class `class`, if any.
    pub fn in_class(&self, class: usize) -> Option<VertexRef> {
        self.vertices.iter().copied().find(|v| v.class == class)
    }
}

/// On-disk hypergraph: `{"k":3,"sizes":[..],"edges":[[..],..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub k: usize,
    pub sizes: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

impl From<&KPartiteHypergraph> for HypergraphJson {
    fn from(h: &KPartiteHypergraph) -> Self {
        Self {
            k: h.k(),
            sizes: h.sizes.clone(),
            edges: h.edges.iter().map(|e| e.0.clone()).collect(),
        }
    }
}

impl TryFrom<HypergraphJson> for KPartiteHypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        KPartiteHypergraph::new(j.k, j.sizes, j.edges)
    }
}

impl KPartiteHypergraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&HypergraphJson::from(self)).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: HypergraphJson = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        j.try_into()
    }
}

/// `{"matching":[[..],..]}`.
pub fn matching_json(m: &Matching) -> serde_json::Value {
    serde_json::json!({ "matching": m.edges })
}

/// `{"cover":[[class,pos],..]}`.
pub fn cover_json(c: &VertexCover) -> serde_json::Value {
    let list: Vec<[usize; 2]> = c.vertices.iter().map(|v| [v.class, v.pos]).collect();
    serde_json::json!({ "cover": list })
}

/// Per-class vertex partition of a vertex list, keyed by class.
pub fn group_by_class(vs: &[VertexRef]) -> BTreeMap<usize, Vec<usize>> {
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in vs {
        out.entry(v.class).or_default().push(v.pos);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(k: usize, n: usize) -> KPartiteHypergraph {
        crate::constructions::complete_uniform(k, n)
    }

    #[test]
    fn build_complete_and_single() {
        let all: Vec<Vec<usize>> = (0..8).map(|i| vec![i >> 2 & 1, i >> 1 & 1, i & 1]).collect();
        let h = KPartiteHypergraph::new(3, vec![2, 2, 2], all).unwrap();
        assert_eq!(h.edge_count(), 8);
        let h = KPartiteHypergraph::new(3, vec![1, 1, 1], [[0, 0, 0]]).unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            KPartiteHypergraph::new(3, vec![2, 2, 2], [[0, 0, 2]]),
            Err(Error::OutOfRange {
                class: 2,
                position: 2,
                size: 2
            })
        ));
        assert!(matches!(
            KPartiteHypergraph::new(3, vec![2, 2, 2], [[0, 0, 1], [0, 0, 1]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            KPartiteHypergraph::new(3, vec![2, 2, 2], [vec![0, 0]]),
            Err(Error::BadArity { expected: 3, found: 2 })
        ));
        assert!(KPartiteHypergraph::new(1, vec![2], [[0]]).is_err());
    }

    #[test]
    fn empty_class_allowed() {
        let h = KPartiteHypergraph::empty(vec![2, 0, 3]).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.min_l_degree(1).unwrap(), 0);
    }

    #[test]
    fn degree_examples() {
        let c = complete(3, 2);
        assert_eq!(c.degree(&[VertexRef::new(0, 0)]), 4);
        assert_eq!(c.degree(&[VertexRef::new(0, 0), VertexRef::new(0, 1)]), 0);
        let h = crate::constructions::extremal_hknm(3, 5, 2).unwrap();
        assert_eq!(h.degree(&[VertexRef::new(0, 0)]), 25);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(complete(3, 2).min_l_degree(1).unwrap(), 4);
        assert_eq!(complete(3, 3).min_l_degree(0).unwrap(), 27);
        let h = KPartiteHypergraph::new(3, vec![2, 1, 1], [[0, 0, 0]]).unwrap();
        assert_eq!(h.min_l_degree(1).unwrap(), 0);
        assert!(matches!(h.min_l_degree(4), Err(Error::BadLevel { .. })));
        assert_eq!(complete(3, 2).min_l_degree(3).unwrap(), 1);
        assert_eq!(complete(3, 2).min_l_degree(2).unwrap(), 2);
    }

    #[test]
    fn remove_vertices_examples() {
        let h = KPartiteHypergraph::new(3, vec![1, 1, 1], [[0, 0, 0]]).unwrap();
        let (g, map) = h.remove_vertices(&[VertexRef::new(0, 0)]);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.sizes(), &[0, 1, 1]);
        assert_eq!(map[0], vec![None]);

        let (g, _) = complete(3, 2).remove_vertices(&[VertexRef::new(1, 0)]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.sizes(), &[2, 1, 2]);

        // H_3(5,2): W_1 = {V0[0]}, v_1 = V0[1].
        let h = crate::constructions::extremal_hknm(3, 5, 2).unwrap();
        let t = [VertexRef::new(0, 0), VertexRef::new(0, 1)];
        let oracle = h.edges().filter(|e| !t.iter().any(|v| e.contains(*v))).count();
        let (g, _) = h.remove_vertices(&t);
        assert_eq!(g.edge_count(), oracle);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn remove_nothing_is_identity() {
        let h = crate::constructions::extremal_hknm(3, 4, 2).unwrap();
        assert_eq!(h.remove_vertices(&[]).0, h);
    }

    #[test]
    fn link_graph_examples() {
        let h = KPartiteHypergraph::new(3, vec![1, 1, 1], [[0, 0, 0]]).unwrap();
        let g = h
            .link_graph(VertexRef::new(2, 0), &[VertexRef::new(0, 0)], &[VertexRef::new(1, 0)])
            .unwrap();
        assert_eq!(g.edge_count(), 1);

        let c = complete(3, 2);
        let a: Vec<_> = (0..2).map(|p| VertexRef::new(0, p)).collect();
        let b: Vec<_> = (0..2).map(|p| VertexRef::new(1, p)).collect();
        assert_eq!(c.link_graph(VertexRef::new(2, 1), &a, &b).unwrap().edge_count(), 4);

        let h = crate::constructions::extremal_hknm(3, 5, 2).unwrap();
        let a: Vec<_> = (0..5).map(|p| VertexRef::new(1, p)).collect();
        let b: Vec<_> = (0..5).map(|p| VertexRef::new(2, p)).collect();
        let v1 = VertexRef::new(0, 1);
        let g = h.link_graph(v1, &a, &b).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.edge_count(), h.degree(&[v1]));
    }

    #[test]
    fn link_graph_errors() {
        let c = complete(3, 2);
        let x = VertexRef::new(2, 0);
        assert_eq!(
            c.link_graph(x, &[VertexRef::new(0, 0)], &[VertexRef::new(0, 0)]),
            Err(Error::Overlap)
        );
        assert_eq!(c.link_graph(x, &[x], &[VertexRef::new(0, 0)]), Err(Error::Overlap));
        let c4 = complete(4, 2);
        assert!(matches!(
            c4.link_graph(x, &[VertexRef::new(0, 0)], &[VertexRef::new(1, 0)]),
            Err(Error::BadArity { .. })
        ));
    }

    #[test]
    fn edges_between_examples() {
        let h = KPartiteHypergraph::new(3, vec![2, 2, 2], [[0, 0, 0]]).unwrap();
        assert_eq!(h.edges_between(&[VertexRef::new(0, 0)], &[VertexRef::new(1, 0)]), 1);
        assert_eq!(h.edges_between(&[VertexRef::new(0, 0)], &[VertexRef::new(1, 1)]), 0);
        let c = complete(3, 2);
        let brute = c.edges().filter(|e| e[0] == 0 && e[1] == 0).count();
        assert_eq!(c.edges_between(&[VertexRef::new(0, 0)], &[VertexRef::new(1, 0)]), brute);
        assert_eq!(brute, 2);
    }

    #[test]
    fn json_round_trip_and_rejects() {
        let h = crate::constructions::extremal_hknm(3, 4, 2).unwrap();
        assert_eq!(KPartiteHypergraph::from_json(&h.to_json()).unwrap(), h);
        assert!(matches!(
            KPartiteHypergraph::from_json(r#"{"k":3,"sizes":[2,2,2],"edges":[[0,0,2]]}"#),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            KPartiteHypergraph::from_json(r#"{"k":3,"sizes":[2,2],"edges":[]}"#),
            Err(Error::BadArity { .. })
        ));
        assert!(matches!(
            KPartiteHypergraph::from_json(r#"{"k":3,"sizes":[2,2,2],"edges":[[0,0,0],[0,0,0]]}"#),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(KPartiteHypergraph::from_json("{"), Err(Error::Format(_))));
    }

    #[test]
    fn legal_set_rejects_same_class() {
        assert!(LegalSet::new([VertexRef::new(0, 0), VertexRef::new(0, 1)]).is_err());
        let s = LegalSet::new([VertexRef::new(2, 1), VertexRef::new(0, 3)]).unwrap();
        assert_eq!(s.in_class(2), Some(VertexRef::new(2, 1)));
        assert_eq!(s.in_class(1), None);
    }
}
