//! The v-number of a closed neighborhood ideal from minimal dominating sets
//! and private neighbors.
//!
//! For a minimal dominating set `D`, every `d ∈ D` owns the private
//! neighbors `{v : N[v] ∩ D = {d}}`. A set `U ⊆ P_N(D)` dominates `D`
//! exactly when it picks at least one private neighbor of every owner, and
//! `|N[U] \ D|` only grows with `U`, so it suffices to pick exactly one per
//! owner. The v-number is the minimum of `|N[U] \ D|` over all such pairs.
//!
//! Ties are broken by the smallest `D`, then the smallest `U`, in the
//! lexicographic set order, so results do not depend on thread scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{is_minimal_dominating, minimal_dominating_sets, private_neighbors};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A pair `(D, U)` realizing a value of `|N[U] \ D|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VNumberWitness {
    pub value: usize,
    /// The minimal dominating set `D`.
    #[serde(rename = "D")]
    pub dominating_set: VertexSet,
    /// One private neighbor of `D` per element of `D`.
    #[serde(rename = "U")]
    pub private_choice: VertexSet,
    /// `N[U] \ D`; its size is `value`.
    pub expansion: VertexSet,
}

impl VNumberWitness {
    fn key(&self) -> (usize, VertexSet, VertexSet) {
        (self.value, self.dominating_set, self.private_choice)
    }
}

/// Witness for one connected component, in parent vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVNumber {
    pub vertices: VertexSet,
    #[serde(flatten)]
    pub witness: VNumberWitness,
}

/// The v-number of `N_G` with a witness assembled from per-component
/// witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VNumberReport {
    #[serde(flatten)]
    pub witness: VNumberWitness,
    pub per_component: Vec<ComponentVNumber>,
}

impl VNumberReport {
    pub fn value(&self) -> usize {
        self.witness.value
    }
}

/// v-number of `N_G`, computed per connected component and summed.
pub fn v_number(graph: &Graph) -> VNumberReport {
    let mut total = VNumberWitness {
        value: 0,
        dominating_set: VertexSet::EMPTY,
        private_choice: VertexSet::EMPTY,
        expansion: VertexSet::EMPTY,
    };
    let mut per_component = Vec::new();
    for component in graph.connected_components() {
        let w = v_number_formula(&component.graph);
        let mapped = VNumberWitness {
            value: w.value,
            dominating_set: component.to_parent(&w.dominating_set),
            private_choice: component.to_parent(&w.private_choice),
            expansion: component.to_parent(&w.expansion),
        };
        total.value += mapped.value;
        total.dominating_set |= mapped.dominating_set;
        total.private_choice |= mapped.private_choice;
        total.expansion |= mapped.expansion;
        per_component.push(ComponentVNumber {
            vertices: component.parent_index.iter().copied().collect(),
            witness: mapped,
        });
    }
    VNumberReport {
        witness: total,
        per_component,
    }
}

/// The formula applied to the whole graph at once, without splitting into
/// components.
pub fn v_number_formula(graph: &Graph) -> VNumberWitness {
    let candidates = minimal_dominating_sets(graph);
    let bound = AtomicUsize::new(usize::MAX);
    candidates
        .par_iter()
        .filter_map(|d| best_for(graph, d, &bound))
        .min_by(|a, b| a.key().cmp(&b.key()))
        .expect("every graph has a minimal dominating set")
}

/// `min |N[U] \ D|` for one minimal dominating set `D`.
pub fn v_number_local(graph: &Graph, dominating_set: &VertexSet) -> Result<VNumberWitness> {
    if !dominating_set.is_subset(&graph.vertices()) || !is_minimal_dominating(graph, dominating_set) {
        let reason = if !dominating_set.is_subset(&graph.vertices()) {
            "contains vertices outside the graph".to_string()
        } else if !crate::domination::is_dominating(graph, dominating_set) {
            let missed = graph.vertices() - graph.closed_neighborhood(dominating_set);
            format!("vertices {missed} are not dominated")
        } else {
            let profile = private_neighbors(graph, dominating_set);
            let orphans: VertexSet = profile.orphans().collect();
            format!("vertices {orphans} own no private neighbor and can be removed")
        };
        return Err(Error::NotMinimalDominating(dominating_set.to_string(), reason));
    }
    let bound = AtomicUsize::new(usize::MAX);
    Ok(best_for(graph, dominating_set, &bound).expect("minimal dominating sets are irredundant"))
}

struct ChoiceSearch<'a> {
    graph: &'a Graph,
    dominating_set: VertexSet,
    owners: Vec<VertexSet>,
    global: &'a AtomicUsize,
    best: Option<(usize, VertexSet, VertexSet)>,
}

impl ChoiceSearch<'_> {
    fn run(&mut self, level: usize, covered: VertexSet, chosen: VertexSet) {
        let value = (covered - self.dominating_set).len();
        // Strict comparisons keep every tie alive for the final tie-break.
        if value > self.global.load(Ordering::Relaxed) {
            return;
        }
        if let Some((best, best_u, _)) = &self.best {
            if value > *best || (level == self.owners.len() && value == *best && chosen >= *best_u) {
                return;
            }
        }
        if level == self.owners.len() {
            self.best = Some((value, chosen, covered - self.dominating_set));
            self.global.fetch_min(value, Ordering::Relaxed);
            return;
        }
        for p in self.owners[level] {
            let mut next = chosen;
            next.insert(p);
            self.run(level + 1, covered | self.graph.closed_neighbors(p), next);
        }
    }
}

/// Best `U` for one `D`, pruning against the shared running minimum.
/// `None` when some element of `D` owns no private neighbor, or when every
/// choice is already worse than the running minimum.
fn best_for(graph: &Graph, dominating_set: &VertexSet, global: &AtomicUsize) -> Option<VNumberWitness> {
    let profile = private_neighbors(graph, dominating_set);
    if profile.orphans().next().is_some() {
        return None;
    }
    let mut owners: Vec<VertexSet> = profile.owner_lists.iter().map(|(_, s)| *s).collect();
    // Narrow lists first; the choice order does not affect the result.
    owners.sort_by_key(|s| (s.len(), *s));
    let mut search = ChoiceSearch {
        graph,
        dominating_set: *dominating_set,
        owners,
        global,
        best: None,
    };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    search.best.map(|(value, u, expansion)| VNumberWitness {
        value,
        dominating_set: *dominating_set,
        private_choice: u,
        expansion,
    })
}
