//! Simple undirected graphs on at most 128 vertices.
//!
//! Vertex order of the named constructions (witnesses are reported in
//! these indices):
//!
//! * [`Graph::path`] `v0 - v1 - ... - v(n-1)`; [`Graph::cycle`] adds `v(n-1) v0`.
//! * [`Graph::complete_multipartite`] lists the parts in argument order, so
//!   part `j` occupies a contiguous index block.
//! * [`Graph::hamming`] indexes the word `x1 x2 ... xm` over `0..q` by
//!   `x1*q^(m-1) + ... + xm`, first coordinate most significant.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// A connected component together with its vertex map into the parent.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// `parent_index[i]` is the parent vertex of component vertex `i`.
    pub parent_index: Vec<usize>,
}

impl Component {
    pub fn to_parent(&self, set: &VertexSet) -> VertexSet {
        set.map(&self.parent_index)
    }
}

fn check_capacity(what: &str, n: u128) -> Result<()> {
    if n > MAX_VERTICES as u128 {
        return Err(Error::Capacity {
            what: what.to_string(),
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity("graph", n as u128)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            closed: (0..n).map(VertexSet::singleton).collect(),
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge {u} {v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.closed[u].insert(v);
        self.closed[v].insert(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// `K_{n1,...,nr}`, vertices labelled `v{part}_{index}` (1-based).
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("at least one part required".into()));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidArgument(format!("part {} is empty", pos + 1)));
        }
        let n: usize = parts.iter().sum();
        check_capacity("complete multipartite graph", n as u128)?;
        let mut part_of = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for (j, &size) in parts.iter().enumerate() {
            for i in 0..size {
                part_of.push(j);
                labels.push(format!("v{}_{}", j + 1, i + 1));
            }
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Graph::from_edges(n, edges)?.with_labels(labels)
    }

    /// The Hamming graph `Γ(m, q)`: words of length `m` over `{0..q}`,
    /// adjacent at Hamming distance one.
    pub fn hamming(m: usize, q: usize) -> Result<Self> {
        if m == 0 || q < 2 {
            return Err(Error::InvalidArgument(format!(
                "hamming graph needs m >= 1 and q >= 2, got m={m}, q={q}"
            )));
        }
        let count = (q as u128)
            .checked_pow(m as u32)
            .filter(|&c| c <= MAX_VERTICES as u128)
            .ok_or_else(|| Error::Capacity {
                what: format!("hamming graph Γ({m},{q})"),
                requested: (q as u128).saturating_pow(m as u32),
                limit: MAX_VERTICES,
            })? as usize;
        let mut edges = Vec::new();
        let mut weight = 1;
        for _ in 0..m {
            // Changing the digit with place value `weight`.
            for x in 0..count {
                let digit = (x / weight) % q;
                for d in digit + 1..q {
                    edges.push((x, x + (d - digit) * weight));
                }
            }
            weight *= q;
        }
        let labels = (0..count).map(|x| hamming_label(x, m, q)).collect();
        Graph::from_edges(count, edges)?.with_labels(labels)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity("disjoint union", n as u128)?;
        let shifted = other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n));
        let mut g = Graph::from_edges(n, self.edges().into_iter().chain(shifted))?;
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.n)
                .map(|v| self.label(v))
                .chain((0..other.n).map(|v| other.label(v)))
                .collect();
            g.labels = Some(labels);
        }
        Ok(g)
    }

    /// Subgraph induced on `vertices`, renumbered in ascending order. The
    /// returned vector maps new indices to old.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = vertices.iter().filter(|&v| v < self.n).collect();
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let mut g = Graph::empty(map.len()).expect("subgraph within capacity");
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(vertices) {
                let j = inverse[w];
                if i < j {
                    g.add_edge(i, j).expect("valid induced edge");
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, map)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    /// `N[S] = ⋃_{v ∈ S} N[v]`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    /// `N(S) = ⋃_{v ∈ S} N(v)`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        let rest = set.complement(self.n);
        self.is_independent(&rest)
    }

    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.open_neighborhood(&frontier) - comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            let (graph, parent_index) = self.induced_subgraph(&comp);
            out.push(Component {
                graph,
                parent_index,
            });
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Maximum cardinality search order; reversed, it is a perfect
    /// elimination ordering exactly when the graph is chordal.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited.insert(v);
            order.push(v);
            for w in self.adj[v] - visited {
                weight[w] += 1;
            }
        }
        order
    }

    pub fn is_chordal(&self) -> bool {
        let mut earlier = VertexSet::EMPTY;
        for v in self.maximum_cardinality_search() {
            let back = self.adj[v] & earlier;
            for w in back {
                let others = back - VertexSet::singleton(w);
                if !others.is_subset(&self.adj[w]) {
                    return false;
                }
            }
            earlier.insert(v);
        }
        true
    }

    /// All maximal independent sets, sorted (Bron–Kerbosch with pivoting on
    /// the complement graph).
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(VertexSet::EMPTY);
            return out;
        }
        self.bron_kerbosch(VertexSet::EMPTY, self.vertices(), VertexSet::EMPTY, &mut out);
        out.sort();
        out
    }

    // Cliques of the complement: the complement neighborhood of v is
    // V \ N[v].
    fn bron_kerbosch(
        &self,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let all = self.vertices();
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (p - self.closed[u]).len())
            .expect("p or x nonempty");
        let pivot_nbrs = all - self.closed[pivot];
        let (mut p, mut x) = (p, x);
        for v in p - pivot_nbrs {
            let nv = all - self.closed[v];
            let mut r2 = r;
            r2.insert(v);
            self.bron_kerbosch(r2, p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Well-covered, no isolated vertices, and every maximal independent
    /// set has exactly `n / 2` vertices.
    pub fn is_very_well_covered(&self) -> bool {
        if self.n % 2 == 1 || (0..self.n).any(|v| self.adj[v].is_empty()) {
            return false;
        }
        self.maximal_independent_sets()
            .iter()
            .all(|s| s.len() == self.n / 2)
    }
}

fn hamming_label(mut x: usize, m: usize, q: usize) -> String {
    let mut digits = vec![0usize; m];
    for d in digits.iter_mut().rev() {
        *d = x % q;
        x /= q;
    }
    if q <= 10 {
        digits.iter().map(|d| char::from(b'0' + *d as u8)).collect()
    } else {
        digits
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::test_graphs::{private_neighbor_figure, set};

    #[test]
    fn closed_neighborhood_examples() {
        let g = private_neighbor_figure();
        assert_eq!(g.closed_neighborhood(&set(&[3])), set(&[2, 3, 4, 5]));
        assert_eq!(g.closed_neighborhood(&VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(g.closed_neighborhood(&set(&[0, 3, 5])), g.vertices());
    }

    #[test]
    fn closed_neighborhood_invariants() {
        let g = private_neighbor_figure();
        for v in 0..g.vertex_count() {
            assert!(g.closed_neighbors(v).contains(v));
            assert_eq!(g.closed_neighbors(v).len(), g.degree(v) + 1);
        }
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(129).is_err());
    }

    #[test]
    fn hamming_graph_shapes() {
        let cube = Graph::hamming(3, 2).unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        assert_eq!(cube.label(5), "101");
        assert!(cube.has_edge(0, 4));
        assert!(!cube.has_edge(0, 3));

        let k2 = Graph::hamming(1, 2).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap().with_labels(vec!["0".into(), "1".into()]).unwrap());

        let g = Graph::hamming(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 18));
        assert!((0..9).all(|v| g.degree(v) == 4));

        let big = Graph::hamming(7, 2).unwrap();
        assert!((0..128).all(|v| big.degree(v) == 7));
        assert!(Graph::hamming(8, 2).is_err());
        assert!(Graph::hamming(5, 3).is_err());
    }

    #[test]
    fn named_families() {
        assert_eq!(Graph::path(1).unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert!(Graph::cycle(2).is_err());

        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        assert_eq!(k23.label(2), "v2_1");
        assert!(!k23.has_edge(0, 1));
        assert!(k23.has_edge(1, 4));
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
        assert!(Graph::complete_multipartite(&[]).is_err());
    }

    #[test]
    fn structural_predicates() {
        let p5 = Graph::path(5).unwrap();
        assert!(p5.is_tree() && p5.is_chordal() && p5.is_bipartite());

        let c4 = Graph::cycle(4).unwrap();
        assert!(!c4.is_chordal());
        assert!(c4.is_bipartite());
        assert!(!c4.is_tree());

        let c5 = Graph::cycle(5).unwrap();
        assert!(!c5.is_bipartite());

        // C4 plus a chord.
        let diamond = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(diamond.is_chordal());

        // C6 = K_{3,3} minus a perfect matching: maximal independent sets of
        // size 2 ({0,3}) and 3 ({0,2,4}) both occur.
        let c6 = Graph::cycle(6).unwrap();
        let sizes: std::collections::BTreeSet<usize> =
            c6.maximal_independent_sets().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, [2, 3].into_iter().collect());
        assert!(!c6.is_very_well_covered());

        // P4 and K2 are very well-covered; P3 is not.
        assert!(Graph::path(4).unwrap().is_very_well_covered());
        assert!(Graph::complete(2).unwrap().is_very_well_covered());
        assert!(!Graph::path(3).unwrap().is_very_well_covered());
    }

    #[test]
    fn components_map_back() {
        let g = Graph::from_edges(5, [(0, 3), (1, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].parent_index, vec![0, 3]);
        assert_eq!(comps[1].parent_index, vec![1, 4]);
        assert_eq!(comps[2].parent_index, vec![2]);
        assert_eq!(comps[1].to_parent(&set(&[1])), set(&[4]));
        assert!(!g.is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn maximal_independent_sets_of_p3() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.maximal_independent_sets(), vec![set(&[0, 2]), set(&[1])]);
    }
}
