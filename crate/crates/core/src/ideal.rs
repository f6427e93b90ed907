//! Squarefree monomial ideals, identified with antichains of vertex sets.
//!
//! The monomial `t_A` is the product of the variables indexed by `A`.
//! Ideals are kept minimalized after every operation, so two ideals are
//! equal exactly when their generator lists are.
//!
//! Only squarefree colon multipliers `t_A` are enumerated by the
//! brute-force sweep. For a squarefree ideal `I` and any monomial `f`,
//! `(I : f) = (I : t_{supp f})`, so nothing is lost.

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::minimal_dominating_sets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default vertex cap for [`v_number_bruteforce`].
pub const ORACLE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ambient_n: usize,
    gens: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    /// The ideal generated by `t_g` for each `g`, minimalized.
    pub fn new(ambient_n: usize, gens: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut all: Vec<VertexSet> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|g| g.is_subset(&VertexSet::full(ambient_n))));
        all.sort_by_key(|g| (g.len(), *g));
        all.dedup();
        let mut minimal: Vec<VertexSet> = Vec::with_capacity(all.len());
        for g in all {
            if !minimal.iter().any(|m| m.is_subset(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        SquarefreeIdeal {
            ambient_n,
            gens: minimal,
        }
    }

    pub fn zero(ambient_n: usize) -> Self {
        SquarefreeIdeal {
            ambient_n,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient_n: usize) -> Self {
        SquarefreeIdeal {
            ambient_n,
            gens: vec![VertexSet::EMPTY],
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Minimal generators in lexicographic order.
    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&VertexSet::EMPTY)
    }

    pub fn contains_monomial(&self, support: &VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(support))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &SquarefreeIdeal) -> bool {
        self.gens.iter().all(|g| other.contains_monomial(g))
    }

    /// `(I : t_A)`.
    pub fn colon_by_subset(&self, a: &VertexSet) -> SquarefreeIdeal {
        SquarefreeIdeal::new(self.ambient_n, self.gens.iter().map(|g| *g - *a))
    }

    /// `Some(D)` when the ideal is the prime `⟨t_d : d ∈ D⟩`. The zero ideal
    /// is the prime generated by no variables.
    pub fn as_variable_prime(&self) -> Option<VertexSet> {
        if self.gens.iter().all(|g| g.len() == 1) {
            Some(self.gens.iter().map(|g| g.first().expect("singleton")).collect())
        } else {
            None
        }
    }

    /// The prime `⟨t_d : d ∈ D⟩`.
    pub fn variable_prime(ambient_n: usize, d: &VertexSet) -> Self {
        SquarefreeIdeal::new(ambient_n, d.iter().map(VertexSet::singleton))
    }

    /// Minimal primes, i.e. minimal transversals of the generators. A
    /// squarefree ideal is radical, so these are all its associated primes.
    pub fn associated_primes(&self) -> Vec<VertexSet> {
        if self.is_unit() {
            return Vec::new();
        }
        let mut transversals = vec![VertexSet::EMPTY];
        for g in &self.gens {
            let mut next: Vec<VertexSet> = Vec::new();
            for t in &transversals {
                if t.intersects(g) {
                    next.push(*t);
                } else {
                    next.extend(g.iter().map(|x| *t | VertexSet::singleton(x)));
                }
            }
            transversals = SquarefreeIdeal::new(self.ambient_n, next).gens;
        }
        transversals
    }
}

/// `N_G = ⟨t_{N[v]} : v ∈ V(G)⟩`.
pub fn closed_neighborhood_ideal(graph: &Graph) -> SquarefreeIdeal {
    SquarefreeIdeal::new(
        graph.vertex_count(),
        graph.vertices().iter().map(|v| graph.closed_neighbors(v)),
    )
}

/// Associated primes of `N_G`, as vertex sets.
pub fn associated_primes(graph: &Graph) -> Vec<VertexSet> {
    closed_neighborhood_ideal(graph).associated_primes()
}

/// Result of the colon-ideal sweep: `(N_G : t_A) = ⟨D⟩` with `|A|` least.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleWitness {
    pub value: usize,
    #[serde(rename = "A")]
    pub multiplier: VertexSet,
    #[serde(rename = "D")]
    pub prime: VertexSet,
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().copied().collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn sweep<F>(n: usize, cap: usize, accept: F) -> Result<Option<OracleWitness>>
where
    F: Fn(&VertexSet) -> Option<VertexSet> + Sync,
{
    if n > cap {
        return Err(Error::OracleUnavailable { n, cap });
    }
    for k in 0..=n {
        let found = k_subsets(n, k)
            .into_par_iter()
            .find_map_first(|a| accept(&a).map(|d| (a, d)));
        if let Some((a, d)) = found {
            assert!(a.is_disjoint(&d), "colon witness {a} meets its prime {d}");
            return Ok(Some(OracleWitness {
                value: k,
                multiplier: a,
                prime: d,
            }));
        }
    }
    Ok(None)
}

/// v-number of `N_G` from its definition: the least `|A|` such that
/// `(N_G : t_A)` is an associated prime. Sweeps subsets by size, then
/// lexicographically, and stops at the first hit.
pub fn v_number_bruteforce(graph: &Graph, cap: usize) -> Result<OracleWitness> {
    let ideal = closed_neighborhood_ideal(graph);
    let primes = ideal.associated_primes();
    let found = sweep(graph.vertex_count(), cap, |a| {
        let d = ideal.colon_by_subset(a).as_variable_prime()?;
        // Radical ideals have no embedded primes; checked anyway.
        primes.binary_search(&d).ok().map(|_| d)
    })?;
    Ok(found.unwrap_or(OracleWitness {
        value: 0,
        multiplier: VertexSet::EMPTY,
        prime: VertexSet::EMPTY,
    }))
}

/// The least `|A|` with `(N_G : t_A) = ⟨D⟩`, or `None` if `⟨D⟩` is not
/// associated.
pub fn v_number_local_bruteforce(graph: &Graph, d: &VertexSet, cap: usize) -> Result<Option<OracleWitness>> {
    let ideal = closed_neighborhood_ideal(graph);
    let target = SquarefreeIdeal::variable_prime(graph.vertex_count(), d);
    sweep(graph.vertex_count(), cap, |a| {
        (ideal.colon_by_subset(a) == target).then_some(*d)
    })
}

/// Checks both directions between the colon sweep and the minimal
/// dominating sets: every prime reached by some `(N_G : t_A)` is a minimal
/// dominating set, and every minimal dominating set `D` is reached by
/// `A = N[U] \ D` for its local v-number witness `U`.
pub fn cross_validate_primes(graph: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(Error::OracleUnavailable { n, cap });
    }
    let ideal = closed_neighborhood_ideal(graph);
    let mds = minimal_dominating_sets(graph);
    let primes = ideal.associated_primes();
    if primes != mds {
        return Err(Error::InvalidArgument(format!(
            "associated primes {primes:?} differ from minimal dominating sets {mds:?}"
        )));
    }
    let realized: Vec<VertexSet> = (0..1u128 << n)
        .into_par_iter()
        .filter_map(|bits| ideal.colon_by_subset(&VertexSet::from_bits(bits)).as_variable_prime())
        .collect();
    if let Some(stray) = realized.iter().find(|d| mds.binary_search(d).is_err()) {
        return Err(Error::InvalidArgument(format!(
            "colon ideal prime {stray} is not a minimal dominating set"
        )));
    }
    for d in &mds {
        let w = crate::vnumber::v_number_local(graph, d)?;
        let a = graph.closed_neighborhood(&w.private_choice) - *d;
        if ideal.colon_by_subset(&a).as_variable_prime() != Some(*d) {
            return Err(Error::InvalidArgument(format!(
                "N[U] \\ D = {a} does not realize the prime {d}"
            )));
        }
    }
    Ok(mds)
}
