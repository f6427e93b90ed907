//! Dominating sets, private neighbors and the classical invariants
//! γ (domination), τ (vertex cover), i (independence) and a (matching).
//!
//! All witnesses are the lexicographically smallest optimal sets under the
//! vertex order (see [`VertexSet`]'s `Ord`). The exact searches decide
//! vertices in index order, trying "include" before "exclude", so they meet
//! candidate sets in lexicographic order and only ever replace the incumbent
//! by something strictly smaller.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest non-bipartite graph handled by the exact matching search.
pub const MATCHING_SEARCH_CAP: usize = 24;

pub fn is_dominating(graph: &Graph, set: &VertexSet) -> bool {
    graph.closed_neighborhood(set) == graph.vertices()
}

/// `set` dominates `target` when `target ⊆ N[set]`.
pub fn dominates(graph: &Graph, set: &VertexSet, target: &VertexSet) -> bool {
    target.is_subset(&graph.closed_neighborhood(set))
}

pub fn is_minimal_dominating(graph: &Graph, set: &VertexSet) -> bool {
    is_dominating(graph, set)
        && set
            .iter()
            .all(|v| !is_dominating(graph, &(*set - VertexSet::singleton(v))))
}

/// Removes every set that strictly contains another one, then sorts.
pub(crate) fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Every inclusion-minimal dominating set, sorted lexicographically.
///
/// These are the minimal transversals of the hypergraph of closed
/// neighborhoods, built edge by edge (Berge's method).
pub fn minimal_dominating_sets(graph: &Graph) -> Vec<VertexSet> {
    let mut edges = minimalize((0..graph.vertex_count()).map(|v| graph.closed_neighbors(v)).collect());
    edges.sort_by_key(|e| (e.len(), *e));

    let mut transversals = vec![VertexSet::EMPTY];
    for edge in edges {
        let (hit, miss): (Vec<_>, Vec<_>) = transversals.into_iter().partition(|t| t.intersects(&edge));
        let mut fresh: Vec<VertexSet> = Vec::new();
        for t in &miss {
            for v in edge {
                let mut c = *t;
                c.insert(v);
                // The old antichain never contains a superset of `c`.
                if !hit.iter().any(|h| h.is_subset(&c)) {
                    fresh.push(c);
                }
            }
        }
        let mut next = hit;
        next.extend(minimalize(fresh));
        transversals = next;
    }
    transversals.sort();
    transversals
}

/// How a vertex relates to `D` in the private-neighbor classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrivateKind {
    /// `v ∉ D` with exactly one neighbor in `D`.
    External,
    /// `v ∈ D` with no neighbor in `D`.
    SelfPrivate,
    /// `v ∈ D` with exactly one neighbor in `D`; not part of `P_N(D)`.
    Internal,
}

pub fn classify(graph: &Graph, set: &VertexSet, v: usize) -> Option<PrivateKind> {
    let inside = (graph.neighbors(v) & *set).len();
    match (set.contains(v), inside) {
        (false, 1) => Some(PrivateKind::External),
        (true, 0) => Some(PrivateKind::SelfPrivate),
        (true, 1) => Some(PrivateKind::Internal),
        _ => None,
    }
}

/// Private neighbors of a vertex set `D`, grouped by owner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrivateNeighborProfile {
    /// `(d, {v : N[v] ∩ D = {d}})` for each `d ∈ D`, ascending in `d`.
    pub owner_lists: Vec<(usize, VertexSet)>,
    /// `P_N(D)`, the union of the owner lists.
    pub all_pn: VertexSet,
}

impl PrivateNeighborProfile {
    pub fn owned_by(&self, d: usize) -> Option<VertexSet> {
        self.owner_lists
            .iter()
            .find(|(owner, _)| *owner == d)
            .map(|(_, s)| *s)
    }

    /// Owners that have no private neighbor at all.
    pub fn orphans(&self) -> impl Iterator<Item = usize> + '_ {
        self.owner_lists
            .iter()
            .filter(|(_, s)| s.is_empty())
            .map(|(d, _)| *d)
    }
}

pub fn private_neighbors(graph: &Graph, set: &VertexSet) -> PrivateNeighborProfile {
    let mut owner_lists: Vec<(usize, VertexSet)> = set.iter().map(|d| (d, VertexSet::EMPTY)).collect();
    let mut all_pn = VertexSet::EMPTY;
    for v in 0..graph.vertex_count() {
        let hit = graph.closed_neighbors(v) & *set;
        if hit.len() == 1 {
            let d = hit.first().expect("one element");
            let slot = owner_lists
                .iter_mut()
                .find(|(owner, _)| *owner == d)
                .expect("owner in D");
            slot.1.insert(v);
            all_pn.insert(v);
        }
    }
    PrivateNeighborProfile { owner_lists, all_pn }
}

/// Every `u ∈ D` has some `v` with `N[v] ∩ D = {u}`.
pub fn is_irredundant(graph: &Graph, set: &VertexSet) -> bool {
    private_neighbors(graph, set).orphans().next().is_none()
}

/// An optimal value with its witness set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnessed {
    pub value: usize,
    pub witness: VertexSet,
}

/// Exact domination number γ(G) with the lexicographically smallest
/// minimum dominating set.
pub fn domination_number(graph: &Graph) -> Witnessed {
    let n = graph.vertex_count();
    let all = graph.vertices();
    let max_closed = (0..n).map(|v| graph.closed_neighbors(v).len()).max().unwrap_or(1);
    let mut best = all;
    let mut search = DominationSearch {
        graph,
        all,
        max_closed,
        best: &mut best,
    };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    Witnessed {
        value: best.len(),
        witness: best,
    }
}

struct DominationSearch<'a> {
    graph: &'a Graph,
    all: VertexSet,
    max_closed: usize,
    best: &'a mut VertexSet,
}

impl DominationSearch<'_> {
    fn run(&mut self, v: usize, chosen: VertexSet, dominated: VertexSet) {
        if dominated == self.all {
            if chosen.len() < self.best.len() {
                *self.best = chosen;
            }
            return;
        }
        let n = self.graph.vertex_count();
        if v == n {
            return;
        }
        let undominated = self.all - dominated;
        let needed = undominated.len().div_ceil(self.max_closed);
        if chosen.len() + needed >= self.best.len() {
            return;
        }
        let remaining = self.all - VertexSet::full(v);
        if undominated
            .iter()
            .any(|w| self.graph.closed_neighbors(w).is_disjoint(&remaining))
        {
            return;
        }
        let nv = self.graph.closed_neighbors(v);
        // A vertex adding nothing new can be dropped from any solution.
        if !nv.is_subset(&dominated) {
            let mut with = chosen;
            with.insert(v);
            self.run(v + 1, with, dominated | nv);
        }
        self.run(v + 1, chosen, dominated);
    }
}

/// Exact vertex cover number τ(G) with the lexicographically smallest
/// minimum cover.
pub fn vertex_cover_number(graph: &Graph) -> Witnessed {
    let mut best = graph.vertices();
    let mut search = CoverSearch { graph, best: &mut best };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    Witnessed {
        value: best.len(),
        witness: best,
    }
}

struct CoverSearch<'a> {
    graph: &'a Graph,
    best: &'a mut VertexSet,
}

impl CoverSearch<'_> {
    fn run(&mut self, v: usize, chosen: VertexSet, forced: VertexSet) {
        let n = self.graph.vertex_count();
        if v == n {
            if chosen.len() < self.best.len() {
                *self.best = chosen;
            }
            return;
        }
        let undecided = VertexSet::full(n) - VertexSet::full(v);
        if chosen.len() + self.lower_bound(undecided, forced) >= self.best.len() {
            return;
        }
        let mut with = chosen;
        with.insert(v);
        self.run(v + 1, with, forced);
        if !forced.contains(v) {
            // Excluding v puts all of its neighbors in the cover; earlier
            // neighbors must already be there.
            let nbrs = self.graph.neighbors(v);
            let earlier = nbrs & VertexSet::full(v);
            if earlier.is_subset(&chosen) {
                self.run(v + 1, chosen, forced | (nbrs - VertexSet::full(v)));
            }
        }
    }

    /// Forced undecided vertices plus a greedy matching on the rest.
    fn lower_bound(&self, undecided: VertexSet, forced: VertexSet) -> usize {
        let must = undecided & forced;
        let mut free = undecided - forced;
        let mut bound = must.len();
        while let Some(u) = free.first() {
            free.remove(u);
            if let Some(w) = (self.graph.neighbors(u) & free).first() {
                free.remove(w);
                bound += 1;
            }
        }
        bound
    }
}

/// Independence number i(G) = n − τ(G); the witness is the complement of
/// the cover witness.
pub fn independence_number(graph: &Graph) -> Witnessed {
    let cover = vertex_cover_number(graph);
    let witness = cover.witness.complement(graph.vertex_count());
    Witnessed {
        value: witness.len(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Exact matching number a(G). Bipartite graphs use augmenting paths at any
/// size; other graphs use a memoized search up to [`MATCHING_SEARCH_CAP`]
/// vertices.
pub fn matching_number(graph: &Graph) -> Result<Matching> {
    let n = graph.vertex_count();
    if graph.is_bipartite() {
        return Ok(bipartite_matching(graph));
    }
    if n > MATCHING_SEARCH_CAP {
        return Err(Error::MatchingUnavailable {
            n,
            cap: MATCHING_SEARCH_CAP,
        });
    }
    let mut memo = HashMap::new();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let size = matching_memo(graph, full, &mut memo);
    let mut edges = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let u = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << u);
        let target = matching_memo(graph, mask, &mut memo);
        if matching_memo(graph, rest, &mut memo) == target {
            mask = rest;
            continue;
        }
        let w = graph
            .neighbors(u)
            .iter()
            .filter(|&w| rest & (1 << w) != 0)
            .find(|&w| 1 + matching_memo(graph, rest & !(1 << w), &mut memo) == target)
            .expect("an optimal choice exists");
        edges.push((u, w));
        mask = rest & !(1 << w);
    }
    Ok(Matching { size, edges })
}

fn matching_memo(graph: &Graph, mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let u = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << u);
    let mut best = matching_memo(graph, rest, memo);
    for w in graph.neighbors(u) {
        if rest & (1 << w) != 0 {
            best = best.max(1 + matching_memo(graph, rest & !(1 << w), memo));
        }
    }
    memo.insert(mask, best);
    best
}

fn bipartite_matching(graph: &Graph) -> Matching {
    let n = graph.vertex_count();
    // Two-coloring; color 0 vertices are the left side.
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in graph.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                }
            }
        }
    }
    let mut mate = vec![usize::MAX; n];
    for u in (0..n).filter(|&u| color[u] == 0) {
        let mut visited = VertexSet::EMPTY;
        augment(graph, u, &mut mate, &mut visited);
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .filter(|&u| color[u] == 0 && mate[u] != usize::MAX)
        .map(|u| (u.min(mate[u]), u.max(mate[u])))
        .collect();
    edges.sort();
    Matching {
        size: edges.len(),
        edges,
    }
}

fn augment(graph: &Graph, u: usize, mate: &mut [usize], visited: &mut VertexSet) -> bool {
    for w in graph.neighbors(u) {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        if mate[w] == usize::MAX || augment(graph, mate[w], mate, visited) {
            mate[w] = u;
            mate[u] = w;
            return true;
        }
    }
    false
}

/// `|N[v] ∩ D| = 1` for every vertex `v`.
pub fn is_efficient_dominating(graph: &Graph, set: &VertexSet) -> bool {
    (0..graph.vertex_count()).all(|v| (graph.closed_neighbors(v) & *set).len() == 1)
}

/// The lexicographically first efficient dominating set, if one exists.
pub fn find_efficient_dominating(graph: &Graph) -> Option<VertexSet> {
    efficient_search(graph, 0, VertexSet::EMPTY, VertexSet::EMPTY)
}

fn efficient_search(graph: &Graph, v: usize, chosen: VertexSet, covered: VertexSet) -> Option<VertexSet> {
    let n = graph.vertex_count();
    let all = graph.vertices();
    if covered == all {
        return Some(chosen);
    }
    if v == n {
        return None;
    }
    let candidates: VertexSet = (v..n)
        .filter(|&x| graph.closed_neighbors(x).is_disjoint(&covered))
        .collect();
    if (all - covered)
        .iter()
        .any(|w| graph.closed_neighbors(w).is_disjoint(&candidates))
    {
        return None;
    }
    if candidates.contains(v) {
        let mut with = chosen;
        with.insert(v);
        if let Some(found) = efficient_search(graph, v + 1, with, covered | graph.closed_neighbors(v)) {
            return Some(found);
        }
    }
    efficient_search(graph, v + 1, chosen, covered)
}

/// γ, τ, i and a of a graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub gamma: usize,
    pub tau: usize,
    pub indep: usize,
    pub matching: usize,
    pub witnesses: InvariantWitnesses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantWitnesses {
    pub gamma: VertexSet,
    pub tau: VertexSet,
    pub indep: VertexSet,
    pub matching: Vec<(usize, usize)>,
}

pub fn invariants(graph: &Graph) -> Result<InvariantReport> {
    let gamma = domination_number(graph);
    let tau = vertex_cover_number(graph);
    let indep = independence_number(graph);
    let matching = matching_number(graph)?;
    Ok(InvariantReport {
        gamma: gamma.value,
        tau: tau.value,
        indep: indep.value,
        matching: matching.size,
        witnesses: InvariantWitnesses {
            gamma: gamma.witness,
            tau: tau.witness,
            indep: indep.witness,
            matching: matching.edges,
        },
    })
}
