//! Regularity and projective dimension of `S/N_G` through the
//! Stanley–Reisner complex and Hochster's formula
//! `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ)`.
//!
//! A set `F` is a face of `Δ` when `t_F ∉ N_G`, i.e. when `F` contains no
//! closed neighborhood, i.e. when `V \ F` is dominating. The facets are the
//! complements of the minimal dominating sets.

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{matching_number, minimal_dominating_sets, vertex_cover_number};
use crate::error::{Error, Result};
use crate::graph::Graph;
pub use crate::homology::Field;
use crate::homology::reduced_homology_dims;
use crate::ideal::{closed_neighborhood_ideal, SquarefreeIdeal};
use crate::vertex_set::VertexSet;

/// Default vertex cap for the `2^n` sweep over induced subcomplexes.
pub const REGULARITY_CAP: usize = 14;

/// The Stanley–Reisner complex of `N_G`, described by its faces rather than
/// materialized.
#[derive(Clone, Debug)]
pub struct SimplicialComplexView {
    ambient: VertexSet,
    ideal: SquarefreeIdeal,
    facets: Vec<VertexSet>,
}

impl SimplicialComplexView {
    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn is_face(&self, f: &VertexSet) -> bool {
        f.is_subset(&self.ambient) && !self.ideal.contains_monomial(f)
    }

    /// Maximal faces in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Faces of the induced subcomplex on `sigma`, found by extending faces
    /// one vertex at a time (non-faces have no faces above them).
    pub fn faces_within(&self, sigma: &VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if !self.is_face(&VertexSet::EMPTY) {
            return out;
        }
        let verts = sigma.to_vec();
        self.extend_faces(&verts, 0, VertexSet::EMPTY, &mut out);
        out
    }

    fn extend_faces(&self, verts: &[usize], from: usize, face: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(face);
        for (j, &v) in verts.iter().enumerate().skip(from) {
            let mut next = face;
            next.insert(v);
            if self.is_face(&next) {
                self.extend_faces(verts, j + 1, next, out);
            }
        }
    }

    /// `dim H̃_d(Δ|_σ)` for `d = -1, 0, …`; entry `k` is degree `k - 1`.
    pub fn reduced_homology_dims(&self, sigma: &VertexSet, field: Field) -> Vec<usize> {
        assert!(sigma.is_subset(&self.ambient), "sigma {sigma} outside the vertex set");
        reduced_homology_dims(&self.faces_within(sigma), field)
    }

    /// Maximal faces found by enumerating all `2^n` subsets.
    fn facets_by_enumeration(&self) -> Vec<VertexSet> {
        let faces = self.faces_within(&self.ambient);
        let mut facets: Vec<VertexSet> = faces
            .iter()
            .filter(|f| (self.ambient - **f).iter().all(|v| !self.is_face(&(**f | VertexSet::singleton(v)))))
            .copied()
            .collect();
        facets.sort();
        facets
    }
}

/// Stanley–Reisner complex of `N_G`. For graphs within
/// [`REGULARITY_CAP`] the facets are also found by enumeration and checked
/// against the complements of the minimal dominating sets.
pub fn stanley_reisner(graph: &Graph) -> SimplicialComplexView {
    let ambient = graph.vertices();
    let mut facets: Vec<VertexSet> = minimal_dominating_sets(graph)
        .into_iter()
        .map(|d| ambient - d)
        .collect();
    facets.sort();
    let view = SimplicialComplexView {
        ambient,
        ideal: closed_neighborhood_ideal(graph),
        facets,
    };
    if graph.vertex_count() <= REGULARITY_CAP {
        assert_eq!(
            view.facets_by_enumeration(),
            view.facets,
            "facets differ from complements of minimal dominating sets"
        );
    }
    view
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub sigma: VertexSet,
    pub rank: usize,
}

/// Nonzero multigraded Betti numbers `β_{i,σ}(S/N_G)`, sorted by `(i, σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field: Field,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: &VertexSet) -> usize {
        self.entries
            .binary_search_by(|e| (e.i, e.sigma).cmp(&(i, *sigma)))
            .map_or(0, |k| self.entries[k].rank)
    }

    /// `max{|σ| - i}` over nonzero entries.
    pub fn regularity(&self) -> usize {
        self.entries.iter().map(|e| e.sigma.len() - e.i).max().unwrap_or(0)
    }

    /// `max{i}` over nonzero entries.
    pub fn projective_dimension(&self) -> usize {
        self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }

    /// Graded Betti numbers `β_{i,j} = Σ_{|σ|=j} β_{i,σ}`, sorted by `(i, j)`.
    pub fn graded(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        let mut keyed: Vec<(usize, usize, usize)> =
            self.entries.iter().map(|e| (e.i, e.sigma.len(), e.rank)).collect();
        keyed.sort();
        for (i, j, r) in keyed {
            match out.last_mut() {
                Some((a, b, total)) if *a == i && *b == j => *total += r,
                _ => out.push((i, j, r)),
            }
        }
        out
    }
}

pub fn betti_table(graph: &Graph, field: Field) -> Result<BettiTable> {
    betti_table_with_cap(graph, field, REGULARITY_CAP)
}

pub fn betti_table_with_cap(graph: &Graph, field: Field, cap: usize) -> Result<BettiTable> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(Error::RegularityUnavailable { n, cap });
    }
    let view = stanley_reisner(graph);
    let mut entries: Vec<BettiEntry> = (0..1u64 << n)
        .into_par_iter()
        .flat_map_iter(|bits| {
            let sigma = VertexSet::from_bits(bits as u128);
            let size = sigma.len();
            view.reduced_homology_dims(&sigma, field)
                .into_iter()
                .enumerate()
                .filter(|&(_, rank)| rank > 0)
                .map(move |(k, rank)| BettiEntry { i: size - k, sigma, rank })
        })
        .collect();
    entries.sort_by(|a, b| (a.i, a.sigma).cmp(&(b.i, b.sigma)));
    Ok(BettiTable { field, entries })
}

pub fn regularity(graph: &Graph, field: Field) -> Result<usize> {
    Ok(betti_table(graph, field)?.regularity())
}

pub fn projective_dimension(graph: &Graph, field: Field) -> Result<usize> {
    Ok(betti_table(graph, field)?.projective_dimension())
}

/// The best proven bounds available for a graph without computing homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityBounds {
    pub lower: Option<usize>,
    pub exact: Option<usize>,
    pub rationale: String,
}

pub fn regularity_bounds(graph: &Graph) -> RegularityBounds {
    let tau = vertex_cover_number(graph).value;
    let matching = matching_number(graph).ok().map(|m| m.size);
    let mut lower = matching;
    let mut reasons = Vec::new();
    match matching {
        Some(a) => reasons.push(format!("reg >= a(G) = {a}")),
        None => reasons.push("matching number unavailable at this size".to_string()),
    }
    let bipartite = graph.is_bipartite();
    if bipartite || graph.is_very_well_covered() {
        lower = Some(lower.map_or(tau, |l| l.max(tau)));
        let why = if bipartite { "bipartite" } else { "very well-covered" };
        reasons.push(format!("reg >= tau(G) = {tau} ({why})"));
    }
    let mut exact = None;
    if graph.is_chordal() {
        exact = Some(tau);
        reasons.push(format!("reg = tau(G) = {tau} (chordal)"));
    } else if let Some((n1, n2)) = complete_bipartite_sides(graph) {
        exact = Some(n1 + n2 - 2);
        reasons.push(format!("reg = n1 + n2 - 2 = {} (K_{{{n1},{n2}}})", n1 + n2 - 2));
    }
    if let Some(e) = exact {
        lower = Some(lower.map_or(e, |l| l.max(e)));
    }
    RegularityBounds {
        lower,
        exact,
        rationale: reasons.join("; "),
    }
}

/// `Some((n1, n2))` with `n1 <= n2` when the graph is `K_{n1,n2}` with
/// both sides of size at least 2. Stars are chordal and handled there.
fn complete_bipartite_sides(graph: &Graph) -> Option<(usize, usize)> {
    let n = graph.vertex_count();
    if n < 2 || !graph.is_connected() || !graph.is_bipartite() {
        return None;
    }
    let side = graph.neighbors(0);
    let other = graph.vertices() - side;
    let (a, b) = (side.len(), other.len());
    let complete = side.iter().all(|v| graph.neighbors(v) == other)
        && other.iter().all(|v| graph.neighbors(v) == side);
    (complete && a.min(b) >= 2).then_some((a.min(b), a.max(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{connected_chordal_graphs_up_to, connected_graphs_up_to};
    use crate::test_graphs::set;

    fn reg(g: &Graph) -> usize {
        regularity(g, Field::Gf2).unwrap()
    }

    #[test]
    fn complex_of_small_graphs() {
        let k1 = stanley_reisner(&Graph::complete(1).unwrap());
        assert_eq!(k1.faces_within(&set(&[0])), vec![VertexSet::EMPTY]);
        assert_eq!(k1.facets(), &[VertexSet::EMPTY]);

        let p3 = stanley_reisner(&Graph::path(3).unwrap());
        assert_eq!(p3.facets(), &[set(&[0, 2]), set(&[1])]);
        assert!(!p3.is_face(&set(&[0, 1])));
        assert!(p3.is_face(&set(&[0, 2])));

        let k23 = stanley_reisner(&Graph::complete_multipartite(&[2, 3]).unwrap());
        assert_eq!(k23.facets().len(), 8);
    }

    #[test]
    fn known_regularities() {
        assert_eq!(reg(&Graph::complete(1).unwrap()), 0);
        assert_eq!(projective_dimension(&Graph::complete(1).unwrap(), Field::Gf2).unwrap(), 1);
        assert_eq!(reg(&Graph::path(4).unwrap()), 2);
        assert_eq!(reg(&Graph::complete_multipartite(&[2, 3]).unwrap()), 3);
        for (n1, n2) in [(2, 2), (2, 4), (3, 3)] {
            let g = Graph::complete_multipartite(&[n1, n2]).unwrap();
            assert_eq!(reg(&g), n1 + n2 - 2);
        }
        // Stars fall outside that closed form: reg = tau = 1.
        assert_eq!(reg(&Graph::star(4).unwrap()), 1);
    }

    #[test]
    fn principal_ideal_of_complete_graph() {
        // N_{K_n} is generated by one monomial of degree n, so S/N_G has a
        // two-term resolution S(-n) -> S.
        for n in 1..=6 {
            let t = betti_table(&Graph::complete(n).unwrap(), Field::Gf2).unwrap();
            assert_eq!(t.graded(), vec![(0, 0, 1), (1, n, 1)]);
            assert_eq!(t.regularity(), n - 1);
        }
    }

    #[test]
    fn first_syzygies_are_generators() {
        for g in connected_graphs_up_to(5) {
            let t = betti_table(&g, Field::Gf2).unwrap();
            let gens = closed_neighborhood_ideal(&g);
            let first: Vec<VertexSet> = t.entries.iter().filter(|e| e.i == 1).map(|e| e.sigma).collect();
            assert_eq!(first, gens.gens());
            assert!(t.entries.iter().filter(|e| e.i == 1).all(|e| e.rank == 1));
            assert_eq!(t.get(0, &VertexSet::EMPTY), 1);
            // Projective dimension is at least the height, the least size of
            // an associated prime.
            let height = gens.associated_primes().iter().map(|p| p.len()).min().unwrap();
            assert!(t.projective_dimension() >= height);
        }
    }

    #[test]
    fn fields_agree_on_small_graphs() {
        for g in connected_graphs_up_to(5) {
            assert_eq!(betti_table(&g, Field::Gf2).unwrap().entries, betti_table(&g, Field::Rational).unwrap().entries);
        }
    }

    #[test]
    fn chordal_and_lower_bounds() {
        for g in connected_chordal_graphs_up_to(6) {
            assert_eq!(reg(&g), vertex_cover_number(&g).value, "{g:?}");
        }
        for g in connected_graphs_up_to(6) {
            let r = reg(&g);
            let b = regularity_bounds(&g);
            assert!(r >= b.lower.unwrap(), "{g:?}");
            if let Some(e) = b.exact {
                assert_eq!(r, e);
            }
        }
    }

    #[test]
    fn bounds_rationale() {
        let p4 = regularity_bounds(&Graph::path(4).unwrap());
        assert_eq!((p4.lower, p4.exact), (Some(2), Some(2)));
        assert!(p4.rationale.contains("chordal"));
        let k33 = regularity_bounds(&Graph::complete_multipartite(&[3, 3]).unwrap());
        assert_eq!(k33.exact, Some(4));
        let c5 = regularity_bounds(&Graph::cycle(5).unwrap());
        assert_eq!((c5.lower, c5.exact), (Some(2), None));
    }

    #[test]
    fn cap() {
        let g = Graph::path(5).unwrap();
        assert!(matches!(
            betti_table_with_cap(&g, Field::Gf2, 4),
            Err(Error::RegularityUnavailable { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn disconnected_regularity_adds() {
        // Tensor products of resolutions: regularities add.
        let g = Graph::path(4).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(reg(&g), 2 + 2);
    }
}
