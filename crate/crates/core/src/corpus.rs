//! Exhaustive isomorphism-free graph corpora for small vertex counts.
//!
//! Graphs are grown one vertex at a time and deduplicated by a canonical
//! form computed with partition refinement plus individualization. Every
//! graph is some smaller graph plus a vertex, every
//! connected graph has a vertex whose removal leaves it connected, every
//! connected chordal graph has a simplicial vertex, and every tree has a
//! leaf, so growing from the previous level reaches each class completely.
//!
//! Corpora are returned sorted by the graph6 string of the canonical form.

use std::collections::HashMap;

use crate::format::to_graph6;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX: usize = 16;

/// Canonical relabelling of `graph`: two graphs are isomorphic iff their
/// canonical forms are equal. Labels are dropped.
pub fn canonical_form(graph: &Graph) -> Graph {
    let (_, perm) = canonical_labelling(graph);
    relabel(graph, &perm)
}

/// Returns the canonical adjacency code and the vertex order achieving it
/// (`perm[position] = vertex`).
pub fn canonical_labelling(graph: &Graph) -> (u128, Vec<usize>) {
    let n = graph.vertex_count();
    assert!(n <= CANONICAL_MAX, "canonical form supports at most {CANONICAL_MAX} vertices");
    let cells = refine(graph, vec![(0..n).collect()]);
    let mut best = None;
    search(graph, cells, &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn relabel(graph: &Graph, perm: &[usize]) -> Graph {
    let n = graph.vertex_count();
    let mut position = vec![0; n];
    for (p, &v) in perm.iter().enumerate() {
        position[v] = p;
    }
    Graph::from_edges(n, graph.edges().into_iter().map(|(u, v)| (position[u], position[v])))
        .expect("relabelled graph is valid")
}

fn code_of(graph: &Graph, perm: &[usize]) -> u128 {
    let n = perm.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | graph.has_edge(perm[i], perm[j]) as u128;
        }
    }
    code
}

fn search(graph: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let perm: Vec<usize> = cells.into_iter().flatten().collect();
        let code = code_of(graph, &perm);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    // Vertices with identical closed or open neighborhoods are
    // interchangeable; trying one of each twin class is enough.
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        let twin = tried.iter().any(|&u| {
            let mask = !(VertexSet::singleton(u) | VertexSet::singleton(v));
            graph.neighbors(u) & mask == graph.neighbors(v) & mask
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..target].iter().cloned());
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(graph, refine(graph, next), best);
    }
}

/// Splits cells by neighbor counts into other cells until the ordered
/// partition is equitable.
fn refine(graph: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| (graph.neighbors(v) & splitter).len();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
                for &v in &cells[c] {
                    let k = count(v);
                    match groups.iter_mut().find(|(key, _)| *key == k) {
                        Some((_, g)) => g.push(v),
                        None => groups.push((k, vec![v])),
                    }
                }
                groups.sort_by_key(|(k, _)| *k);
                let replacement: Vec<Vec<usize>> = groups.into_iter().map(|(_, g)| g).collect();
                cells.splice(c..=c, replacement);
                continue 'outer;
            }
        }
        return cells;
    }
}

/// Adds one vertex to every parent in every way `allowed` accepts, keeping
/// one representative per isomorphism class.
fn extend<F>(parents: &[Graph], allowed: F) -> Vec<Graph>
where
    F: Fn(&Graph, VertexSet) -> bool,
{
    let mut seen: HashMap<u128, Graph> = HashMap::new();
    for parent in parents {
        let n = parent.vertex_count();
        let edges = parent.edges();
        for mask in 0u32..(1u32 << n) {
            let nbhd = VertexSet::from_bits(mask as u128);
            if !allowed(parent, nbhd) {
                continue;
            }
            let child = Graph::from_edges(
                n + 1,
                edges.iter().copied().chain(nbhd.iter().map(|u| (u, n))),
            )
            .expect("child within capacity");
            let (code, perm) = canonical_labelling(&child);
            seen.entry(code).or_insert_with(|| relabel(&child, &perm));
        }
    }
    sorted_by_graph6(seen.into_values().collect())
}

fn sorted_by_graph6(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = graphs
        .into_iter()
        .map(|g| (to_graph6(&g).expect("small graph"), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

fn grow<F>(n: usize, allowed: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph, VertexSet) -> bool,
{
    assert!(n <= CANONICAL_MAX);
    let mut levels = Vec::with_capacity(n);
    if n == 0 {
        return levels;
    }
    levels.push(vec![Graph::complete(1).expect("K1")]);
    for _ in 1..n {
        let next = extend(levels.last().expect("nonempty"), &allowed);
        levels.push(next);
    }
    levels
}

/// All connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    grow(n, |_, nbhd| !nbhd.is_empty()).pop().unwrap_or_default()
}

/// All connected graphs on `1..=max_n` vertices, ordered by vertex count.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    grow(max_n, |_, nbhd| !nbhd.is_empty()).into_iter().flatten().collect()
}

/// All graphs, connected or not, on `1..=max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    grow(max_n, |_, _| true).into_iter().flatten().collect()
}

/// All trees on `1..=max_n` vertices, ordered by vertex count.
pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    grow(max_n, |_, nbhd| nbhd.len() == 1).into_iter().flatten().collect()
}

/// All connected chordal graphs on `1..=max_n` vertices.
pub fn connected_chordal_graphs_up_to(max_n: usize) -> Vec<Graph> {
    grow(max_n, |g, nbhd| !nbhd.is_empty() && is_clique(g, &nbhd))
        .into_iter()
        .flatten()
        .collect()
}

fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    set.iter()
        .all(|v| (*set - VertexSet::singleton(v)).is_subset(&g.neighbors(v)))
}
