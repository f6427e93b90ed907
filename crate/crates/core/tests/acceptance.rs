//! Acceptance criteria, one line each. Runs with its own harness so the
//! summary lines are always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use vnumber_core::corpus::{connected_chordal_graphs_up_to, connected_graphs, connected_graphs_up_to, graphs_up_to, trees_up_to};
use vnumber_core::domination::{
    domination_number, is_efficient_dominating, is_irredundant, is_minimal_dominating,
    matching_number, minimal_dominating_sets, vertex_cover_number,
};
use vnumber_core::hamming::{
    hamming_code, hamming_graph_invariants, is_perfect, sphere_packing_equality, v_number_bounds_hamming, GammaValue,
};
use vnumber_core::homology::{reduced_homology_dims, Field};
use vnumber_core::ideal::{v_number_bruteforce, ORACLE_CAP};
use vnumber_core::regularity::{regularity, stanley_reisner};
use vnumber_core::scan::{scan, ScanConfig, ScanSource};
use vnumber_core::family::FamilySpec;
use vnumber_core::format::from_graph6;
use vnumber_core::vnumber::v_number;
use vnumber_core::{Graph, VertexSet};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn v(g: &Graph) -> usize {
    v_number(g).value()
}

fn reg(g: &Graph) -> usize {
    regularity(g, Field::Gf2).expect("within the regularity cap")
}

fn criterion_1() -> Outcome {
    ensure(v(&Graph::path(6).unwrap()) == 2, || "v(P6) != 2".into())?;
    for n in 2..=7 {
        let got = v(&Graph::complete(n).unwrap());
        ensure(got == n - 1, || format!("v(K_{n}) = {got}"))?;
    }
    let mut profiles = 0;
    for r in [2usize, 3] {
        let mut parts = vec![2usize; r];
        loop {
            let total: usize = parts.iter().sum();
            let sorted_desc = parts.windows(2).all(|w| w[0] >= w[1]);
            if total <= 10 && sorted_desc {
                let g = Graph::complete_multipartite(&parts).unwrap();
                let expected: usize = parts[1..].iter().sum();
                let got = v(&g);
                ensure(got == expected, || format!("v(K_{parts:?}) = {got}, expected {expected}"))?;
                profiles += 1;
            }
            // Next tuple in [2,4]^r.
            let Some(i) = (0..r).rev().find(|&i| parts[i] < 4) else { break };
            parts[i] += 1;
            for p in &mut parts[i + 1..] {
                *p = 2;
            }
        }
    }
    let cube = v(&Graph::hamming(3, 2).unwrap());
    ensure(cube == 4, || format!("v(Γ(3,2)) = {cube}"))?;
    let p3 = Graph::path(3).unwrap();
    let oracle = v_number_bruteforce(&p3, ORACLE_CAP).unwrap();
    ensure(v(&p3) == 1 && oracle.value == 1, || "v(P3) != 1".into())?;
    ensure(
        oracle.multiplier == [0usize].into_iter().collect() && oracle.prime == [1usize].into_iter().collect(),
        || format!("P3 oracle witness A = {}, D = {}", oracle.multiplier, oracle.prime),
    )?;
    Ok(format!("P6, K_2..K_7, {profiles} multipartite profiles, Γ(3,2), P3"))
}

fn corpus7() -> Result<Vec<Graph>, String> {
    let n7 = connected_graphs(7).len();
    ensure(n7 == 853, || format!("{n7} connected graphs on 7 vertices"))?;
    Ok(connected_graphs_up_to(7))
}

fn criterion_2() -> Outcome {
    let graphs = corpus7()?;
    for g in &graphs {
        let formula = v(g);
        let oracle = v_number_bruteforce(g, ORACLE_CAP).map_err(|e| e.to_string())?.value;
        ensure(formula == oracle, || format!("{g:?}: formula {formula}, oracle {oracle}"))?;
    }
    Ok(format!("{} connected graphs on <= 7 vertices (853 on 7)", graphs.len()))
}

fn criterion_3() -> Outcome {
    let graphs = corpus7()?;
    let mut mds_checked = 0;
    let mut mis_checked = 0;
    for g in &graphs {
        let value = v(g);
        let gamma = domination_number(g).value;
        let tau = vertex_cover_number(g).value;
        let a = matching_number(g).map_err(|e| e.to_string())?.size;
        // K_1 has no edge to dominate through: γ = 1 while v = 0.
        if g.vertex_count() >= 2 {
            ensure(gamma <= value, || format!("{g:?}: γ = {gamma} > v = {value}"))?;
        }
        ensure(value <= tau, || format!("{g:?}: v = {value} > τ = {tau}"))?;
        ensure(value <= 2 * a, || format!("{g:?}: v = {value} > 2a = {}", 2 * a))?;
        for d in minimal_dominating_sets(g) {
            ensure(is_irredundant(g, &d), || format!("{g:?}: {d} not irredundant"))?;
            mds_checked += 1;
        }
        for s in g.maximal_independent_sets() {
            ensure(is_minimal_dominating(g, &s), || format!("{g:?}: MIS {s} not minimal dominating"))?;
            mis_checked += 1;
        }
    }
    Ok(format!(
        "{} graphs (γ <= v from n = 2), {mds_checked} minimal dominating sets, {mis_checked} maximal independent sets",
        graphs.len()
    ))
}

fn criterion_4() -> Outcome {
    let mut bipartite_pairs = 0;
    for n2 in 2..=4 {
        for n1 in n2..=8 - n2 {
            let g = Graph::complete_multipartite(&[n1, n2]).unwrap();
            let r = reg(&g);
            ensure(r == n1 + n2 - 2, || format!("reg(K_{{{n1},{n2}}}) = {r}"))?;
            bipartite_pairs += 1;
        }
    }
    let chordal = connected_chordal_graphs_up_to(8);
    for g in &chordal {
        let (r, tau) = (reg(g), vertex_cover_number(g).value);
        ensure(r == tau, || format!("chordal {g:?}: reg {r} != τ {tau}"))?;
    }
    let trees = trees_up_to(9);
    for g in &trees {
        let (r, tau, a, value) = (reg(g), vertex_cover_number(g).value, matching_number(g).unwrap().size, v(g));
        ensure(r == a && a == tau, || format!("tree {g:?}: reg {r}, a {a}, τ {tau}"))?;
        ensure(value <= r, || format!("tree {g:?}: v {value} > reg {r}"))?;
    }
    let graphs = connected_graphs_up_to(7);
    let (mut bip, mut vwc) = (0, 0);
    for g in &graphs {
        let r = reg(g);
        let a = matching_number(g).unwrap().size;
        ensure(r >= a, || format!("{g:?}: reg {r} < a {a}"))?;
        let (is_bip, is_vwc) = (g.is_bipartite(), g.is_very_well_covered());
        if is_bip || is_vwc {
            let tau = vertex_cover_number(g).value;
            ensure(r >= tau, || format!("{g:?}: reg {r} < τ {tau}"))?;
            bip += is_bip as usize;
            vwc += is_vwc as usize;
        }
    }
    Ok(format!(
        "{bipartite_pairs} K_{{n1,n2}}, {} chordal, {} trees, {} graphs for reg >= a ({bip} bipartite, {vwc} very well-covered)",
        chordal.len(),
        trees.len(),
        graphs.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut config = ScanConfig::new(ScanSource::Family(FamilySpec::Connected(7)));
    config.timeout = None;
    let outcome = scan(&config).map_err(|e| e.to_string())?;
    let s = &outcome.summary;
    ensure(s.graphs == 996 && s.ok == 996, || format!("scan completed {} of {} graphs", s.ok, s.graphs))?;
    ensure(s.conjecture_checked == 996, || format!("conjecture checked on {}", s.conjecture_checked))?;
    ensure(s.confirmed_violations.is_empty(), || format!("confirmed violations: {:?}", s.confirmed_violations))?;
    let at_max = outcome.records.iter().filter(|r| r.gap() == s.max_gap).count();
    // Tight cases get an extra rational confirmation.
    let tight: Vec<&str> = outcome.records.iter().filter(|r| r.gap() == Some(0)).map(|r| r.graph6.as_str()).collect();
    for key in &tight {
        let g = from_graph6(key).map_err(|e| e.to_string())?;
        let rational = regularity(&g, Field::Rational).map_err(|e| e.to_string())?;
        ensure(v(&g) <= rational, || format!("{key}: v > reg over Q"))?;
    }
    let at_zero = tight.len();
    Ok(format!(
        "{} graphs, 0 confirmed violations, {} rational rechecks, gap reg - v in [{}, {}] ({at_zero} at 0, confirmed over Q; {at_max} at max)",
        s.graphs,
        s.rational_rechecks,
        s.min_gap.unwrap(),
        s.max_gap.unwrap()
    ))
}

fn criterion_6() -> Outcome {
    let h22 = hamming_code(2, 2).unwrap();
    let words = h22.codeword_strings().unwrap();
    ensure(words == ["000", "111"], || format!("H_2(2) = {words:?}"))?;

    let expected: Vec<&str> = vec![
        "0000000", "0001011", "0010111", "0011100", "0100110", "0101101", "0110001", "0111010", "1000101", "1001110",
        "1010010", "1011001", "1100011", "1101000", "1110100", "1111111",
    ];
    let h23 = hamming_code(2, 3).unwrap();
    let mut got = h23.codeword_strings().unwrap();
    got.sort();
    let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    want.sort();
    ensure(got == want, || format!("H_2(3) = {got:?}"))?;

    ensure(sphere_packing_equality(2, 3, 2, 1) == Some(true), || "2·4 != 8".into())?;
    ensure(sphere_packing_equality(16, 7, 2, 1) == Some(true), || "16·8 != 128".into())?;
    for (code, m) in [(&h22, 3), (&h23, 7)] {
        let words = code.codewords.as_ref().unwrap();
        ensure(is_perfect(words, m, 2, 1), || format!("code of length {m} not perfect"))?;
        let g = Graph::hamming(m, 2).unwrap();
        let set = code.as_vertex_set().unwrap();
        ensure(is_efficient_dominating(&g, &set), || format!("code not efficient dominating in Γ({m},2)"))?;
    }

    for (m, gamma, indep, tau) in [(3, 2, 4, 4), (7, 16, 64, 64)] {
        let inv = hamming_graph_invariants(m, 2).unwrap();
        ensure(
            inv.gamma == GammaValue::Exact { value: gamma } && inv.indep == indep && inv.tau == tau,
            || format!("Γ({m},2): {inv:?}"),
        )?;
    }
    for (r, lower, upper) in [(2, 2, 4), (3, 16, 64)] {
        let b = v_number_bounds_hamming(2, r).unwrap();
        ensure((b.lower, b.upper) == (lower, upper), || format!("bounds for r = {r}: {b:?}"))?;
    }

    let bound = hamming_graph_invariants(4, 2).unwrap().gamma;
    ensure(
        bound == GammaValue::StrictLowerBound { value: 4, numerator: 16, denominator: 5 },
        || format!("Γ(4,2) bound {bound:?}"),
    )?;
    let searched = domination_number(&Graph::hamming(4, 2).unwrap());
    ensure(searched.value == 4, || format!("γ(Γ(4,2)) = {}", searched.value))?;
    Ok("H_2(2), H_2(3), perfect + efficient domination on Γ(3,2) and Γ(7,2), (γ,i,τ), v bounds, γ(Γ(4,2)) = 4 > 16/5".into())
}

fn criterion_7() -> Outcome {
    let set = |v: &[usize]| -> VertexSet { v.iter().copied().collect() };
    let closure = |facets: &[VertexSet]| -> Vec<VertexSet> {
        let mut faces: Vec<VertexSet> = Vec::new();
        for f in facets {
            let m = f.to_vec();
            for bits in 0u32..1 << m.len() {
                faces.push((0..m.len()).filter(|i| bits & (1 << i) != 0).map(|i| m[i]).collect());
            }
        }
        faces.sort();
        faces.dedup();
        faces
    };
    for field in [Field::Gf2, Field::Rational] {
        // Boundaries of simplices are spheres: one class in the top degree.
        for k in 2..=5 {
            let all: Vec<usize> = (0..k).collect();
            let facets: Vec<VertexSet> = (0..k).map(|i| set(&all) - set(&[i])).collect();
            let dims = reduced_homology_dims(&closure(&facets), field);
            let mut want = vec![0; k];
            want[k - 1] = 1;
            ensure(dims == want, || format!("{field} boundary of {k}-simplex: {dims:?}"))?;
        }
        // Cones and full simplices are acyclic.
        let cone = closure(&[set(&[0, 1, 4]), set(&[1, 2, 4]), set(&[2, 3, 4])]);
        let dims = reduced_homology_dims(&cone, field);
        ensure(dims.iter().all(|&d| d == 0), || format!("{field} cone: {dims:?}"))?;
        let dims = reduced_homology_dims(&closure(&[set(&[0, 1, 2, 3])]), field);
        ensure(dims.iter().all(|&d| d == 0), || format!("{field} simplex: {dims:?}"))?;
        // Disjoint points.
        for k in 2..=4 {
            let pts: Vec<VertexSet> = (0..k).map(|i| set(&[i])).collect();
            let dims = reduced_homology_dims(&closure(&pts), field);
            ensure(dims == vec![0, k - 1], || format!("{field} {k} points: {dims:?}"))?;
        }
        ensure(reduced_homology_dims(&[VertexSet::EMPTY], field) == vec![1], || "{∅} convention".into())?;
        ensure(reduced_homology_dims(&[], field).is_empty(), || "void convention".into())?;
    }
    let graphs = graphs_up_to(7);
    for g in &graphs {
        let view = stanley_reisner(g);
        let expected: Vec<VertexSet> = minimal_dominating_sets(g).into_iter().map(|d| g.vertices() - d).collect();
        let mut expected = expected;
        expected.sort();
        ensure(view.facets() == expected.as_slice(), || format!("{g:?}: facets differ"))?;
        for f in view.facets() {
            ensure(view.is_face(f), || format!("{g:?}: facet {f} fails the face test"))?;
        }
    }
    Ok(format!("homology conventions over GF(2) and Q, facets on {} graphs on <= 7 vertices", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 reference values", criterion_1),
        ("2 oracle equivalence", criterion_2),
        ("3 inequalities", criterion_3),
        ("4 regularity", criterion_4),
        ("5 conjecture scan", criterion_5),
        ("6 hamming", criterion_6),
        ("7 regularity engine", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({secs:.1}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({secs:.1}s) {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
