//! q-ary Hamming codes, perfect-code checks, and closed-form invariants of
//! Hamming graphs.
//!
//! A word `x ∈ GF(q)^m` is vertex `Σ x_i q^{m-1-i}` of [`Graph::hamming`],
//! so the first coordinate is the most significant digit.
//!
//! The default parity-check matrix is systematic, `H = [A | I_r]`. The
//! columns of `A` are the normalized projective points (first nonzero
//! coordinate 1) other than the unit vectors, ordered by the number of
//! leading zeros and then lexicographically. Over GF(2) with `r = 3` this
//! yields the classical [7,4,3] code with generator `[I_4 | A^T]`.

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::is_efficient_dominating;
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Codeword sets are listed explicitly only up to this many words.
pub const EXPLICIT_CODEWORD_LIMIT: u128 = 1 << 20;

/// Codes at most this large are checked for disjoint balls pair by pair;
/// larger linear codes use their minimum nonzero weight instead.
const PAIRWISE_LIMIT: usize = 1 << 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityLayout {
    /// `[A | I_r]` as described in the module docs.
    #[default]
    Systematic,
    /// All normalized projective points in lexicographic order.
    Lexicographic,
}

/// Parameters `[m, k, δ]` with correction radius `t = ⌊(δ-1)/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub m: usize,
    pub k: usize,
    pub delta: usize,
    pub t: usize,
}

impl CodeParams {
    pub fn new(m: usize, k: usize, delta: usize) -> Self {
        CodeParams {
            m,
            k,
            delta,
            t: delta.saturating_sub(1) / 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammingCode {
    pub q: u32,
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub min_dist: usize,
    pub layout: ParityLayout,
    /// `r × n` parity-check matrix.
    pub parity_check: Vec<Vec<u8>>,
    /// Codewords in lexicographic order, present when there are at most
    /// [`EXPLICIT_CODEWORD_LIMIT`] of them.
    pub codewords: Option<Vec<Vec<u8>>>,
}

impl HammingCode {
    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.n, self.k, self.min_dist)
    }

    /// `q^k`.
    pub fn codeword_count(&self) -> Result<u128> {
        checked_pow(self.q as u128, self.k, "codeword count")
    }

    /// Codewords as digit strings (`"0001011"`).
    pub fn codeword_strings(&self) -> Option<Vec<String>> {
        self.codewords.as_ref().map(|words| words.iter().map(|w| word_string(w)).collect())
    }

    /// Codewords as vertices of `Γ(n, q)`.
    pub fn as_vertex_set(&self) -> Option<VertexSet> {
        let words = self.codewords.as_ref()?;
        let q = self.q as u128;
        let count = q.checked_pow(self.n as u32)?;
        if count > crate::vertex_set::MAX_VERTICES as u128 {
            return None;
        }
        Some(words.iter().map(|w| word_index(w, self.q) as usize).collect())
    }

    /// Sphere-packing equality plus disjoint radius-1 balls.
    pub fn is_perfect(&self) -> Option<bool> {
        let words = self.codewords.as_ref()?;
        let t = self.params().t;
        if words.len() <= PAIRWISE_LIMIT {
            return Some(is_perfect(words, self.n, self.q, t));
        }
        // Linear code: pairwise distances are weights of nonzero codewords.
        let packing = sphere_packing_equality(words.len() as u128, self.n, self.q, t)?;
        let min_weight = words
            .par_iter()
            .map(|w| w.iter().filter(|&&x| x != 0).count())
            .filter(|&wt| wt > 0)
            .min()
            .unwrap_or(usize::MAX);
        Some(packing && min_weight > 2 * t)
    }
}

pub fn word_string(word: &[u8]) -> String {
    word.iter().map(|&d| char::from(b'0' + d)).collect()
}

/// `Σ x_i q^{m-1-i}`.
pub fn word_index(word: &[u8], q: u32) -> u128 {
    word.iter().fold(0u128, |acc, &d| acc * q as u128 + d as u128)
}

fn checked_pow(base: u128, exp: usize, what: &str) -> Result<u128> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::Overflow(what.to_string()))
}

/// `(q^r - 1)/(q - 1)`.
pub fn hamming_length(q: u32, r: usize) -> Result<usize> {
    let qr = checked_pow(q as u128, r, "Hamming code length")?;
    usize::try_from((qr - 1) / (q as u128 - 1)).map_err(|_| Error::Overflow("Hamming code length".into()))
}

fn validate_q(q: u32) -> Result<()> {
    GaloisField::new(q).map(|_| ())
}

fn validate_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("redundancy r = {r} must be at least 2")));
    }
    Ok(())
}

/// Normalized representatives of the projective points of `GF(q)^r`.
fn projective_points(q: u8, r: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for lead in 0..r {
        let free = r - lead - 1;
        let count = (q as usize).pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0u8; r];
            v[lead] = 1;
            let mut x = idx;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = (x % q as usize) as u8;
                x /= q as usize;
            }
            out.push(v);
        }
    }
    out
}

fn parity_check_matrix(q: u8, r: usize, layout: ParityLayout) -> Vec<Vec<u8>> {
    let mut points = projective_points(q, r);
    let columns: Vec<Vec<u8>> = match layout {
        ParityLayout::Lexicographic => {
            points.sort();
            points
        }
        ParityLayout::Systematic => {
            let is_unit = |v: &Vec<u8>| v.iter().filter(|&&x| x != 0).count() == 1;
            // `projective_points` is already grouped by leading zeros and
            // lexicographic within a group.
            let mut cols: Vec<Vec<u8>> = points.iter().filter(|v| !is_unit(v)).cloned().collect();
            cols.extend((0..r).map(|j| (0..r).map(|i| (i == j) as u8).collect()));
            cols
        }
    };
    (0..r).map(|i| columns.iter().map(|c| c[i]).collect()).collect()
}

/// Basis of the right kernel of `h` over the field.
fn kernel_basis(f: &GaloisField, h: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = h.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u8>> = h.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let scale = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, scale);
        }
        for i in 0..m.len() {
            if i != row && m[i][col] != 0 {
                let factor = m[i][col];
                for j in 0..n {
                    let v = f.mul(factor, m[row][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[i][fc]);
            }
            v
        })
        .collect()
}

/// The Hamming code `H_q(r)` with the systematic parity-check layout.
pub fn hamming_code(q: u32, r: usize) -> Result<HammingCode> {
    hamming_code_with_layout(q, r, ParityLayout::Systematic)
}

pub fn hamming_code_with_layout(q: u32, r: usize, layout: ParityLayout) -> Result<HammingCode> {
    validate_q(q)?;
    validate_r(r)?;
    let f = GaloisField::new(q)?;
    let n = hamming_length(q, r)?;
    let k = n - r;
    let parity_check = parity_check_matrix(q as u8, r, layout);
    let count = checked_pow(q as u128, k, "codeword count").ok();
    let codewords = match count {
        Some(c) if c <= EXPLICIT_CODEWORD_LIMIT => {
            let basis = kernel_basis(&f, &parity_check);
            debug_assert_eq!(basis.len(), k);
            let mut words: Vec<Vec<u8>> = (0..c as usize)
                .into_par_iter()
                .map(|mut idx| {
                    let mut w = vec![0u8; n];
                    for b in &basis {
                        let coeff = (idx % q as usize) as u8;
                        idx /= q as usize;
                        for (x, &y) in w.iter_mut().zip(b) {
                            *x = f.add(*x, f.mul(coeff, y));
                        }
                    }
                    w
                })
                .collect();
            words.sort();
            Some(words)
        }
        _ => None,
    };
    Ok(HammingCode {
        q,
        r,
        n,
        k,
        min_dist: 3,
        layout,
        parity_check,
        codewords,
    })
}

pub fn hamming_distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// `|C| · Σ_{i ≤ t} C(m,i)(q-1)^i == q^m`, or `None` on overflow.
pub fn sphere_packing_equality(size: u128, m: usize, q: u32, t: usize) -> Option<bool> {
    let mut ball = 0u128;
    let mut binom = 1u128;
    let mut power = 1u128;
    for i in 0..=t.min(m) {
        if i > 0 {
            binom = binom.checked_mul((m - i + 1) as u128)? / i as u128;
            power = power.checked_mul(q as u128 - 1)?;
        }
        ball = ball.checked_add(binom.checked_mul(power)?)?;
    }
    let space = (q as u128).checked_pow(m as u32)?;
    Some(size.checked_mul(ball)? == space)
}

/// Perfect `t`-error-correcting: the radius-`t` balls around the words are
/// pairwise disjoint and their sizes add up to `q^m`.
pub fn is_perfect(codewords: &[Vec<u8>], m: usize, q: u32, t: usize) -> bool {
    if codewords.iter().any(|w| w.len() != m || w.iter().any(|&x| x as u32 >= q)) {
        return false;
    }
    let Some(true) = sphere_packing_equality(codewords.len() as u128, m, q, t) else {
        return false;
    };
    (0..codewords.len()).into_par_iter().all(|i| {
        codewords[i + 1..]
            .iter()
            .all(|w| hamming_distance(&codewords[i], w) > 2 * t)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GammaValue {
    Exact { value: u128 },
    /// `γ > q^m / (1 + m(q-1))`; `value` is the least integer allowed.
    StrictLowerBound { value: u128, numerator: u128, denominator: u128 },
}

impl GammaValue {
    pub fn value(&self) -> u128 {
        match *self {
            GammaValue::Exact { value } | GammaValue::StrictLowerBound { value, .. } => value,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HammingGraphInvariants {
    pub m: usize,
    pub q: u32,
    pub gamma: GammaValue,
    pub indep: u128,
    pub tau: u128,
}

/// Closed forms for `Γ(m, q)`. γ is exact when `m = (q^r-1)/(q-1)`, where a
/// perfect code exists; `m = 1` (the complete graph `K_q`) is the case
/// `r = 1`, with γ = 1.
pub fn hamming_graph_invariants(m: usize, q: u32) -> Result<HammingGraphInvariants> {
    validate_q(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument("Hamming graph length must be positive".into()));
    }
    let qm = checked_pow(q as u128, m, "q^m")?;
    let per_layer = qm / q as u128;
    let denominator = 1 + m as u128 * (q as u128 - 1);
    let r = (1..=m).find(|&r| hamming_length(q, r).is_ok_and(|len| len == m));
    let gamma = match r {
        Some(r) => GammaValue::Exact { value: qm / checked_pow(q as u128, r, "q^r")? },
        None => GammaValue::StrictLowerBound {
            value: qm / denominator + 1,
            numerator: qm,
            denominator,
        },
    };
    Ok(HammingGraphInvariants {
        m,
        q,
        gamma,
        indep: per_layer,
        tau: qm - per_layer,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VNumberBounds {
    pub n: usize,
    pub lower: u128,
    pub upper: u128,
}

/// `q^{n-r} ≤ v(N_{Γ(n,q)}) ≤ q^{n-1}(q-1)` with `n = (q^r-1)/(q-1)`.
pub fn v_number_bounds_hamming(q: u32, r: usize) -> Result<VNumberBounds> {
    validate_q(q)?;
    validate_r(r)?;
    let n = hamming_length(q, r)?;
    let lower = checked_pow(q as u128, n - r, "v-number lower bound")?;
    let upper = checked_pow(q as u128, n - 1, "v-number upper bound")?
        .checked_mul(q as u128 - 1)
        .ok_or_else(|| Error::Overflow("v-number upper bound".into()))?;
    Ok(VNumberBounds { n, lower, upper })
}

/// Words whose coordinates add up to 0 in GF(q), as vertices of `Γ(m, q)`.
/// Two words at distance 1 have different sums, so the set is independent.
pub fn zero_sum_independent_set(m: usize, q: u32) -> Result<VertexSet> {
    let f = GaloisField::new(q)?;
    let count = checked_pow(q as u128, m, "q^m")?;
    if count > crate::vertex_set::MAX_VERTICES as u128 {
        return Err(Error::Capacity {
            what: format!("Hamming graph Γ({m},{q})"),
            requested: count,
            limit: crate::vertex_set::MAX_VERTICES,
        });
    }
    Ok((0..count as usize)
        .filter(|&idx| {
            let mut x = idx;
            let digits = (0..m).map(|_| {
                let d = (x % q as usize) as u8;
                x /= q as usize;
                d
            });
            f.sum(digits) == 0
        })
        .collect())
}

/// Whether the explicit code is an efficient dominating set of `Γ(n, q)`.
/// `None` when the code or the graph is too large to materialize.
pub fn code_is_efficient_dominating(code: &HammingCode) -> Option<bool> {
    let set = code.as_vertex_set()?;
    let graph = Graph::hamming(code.n, code.q as usize).ok()?;
    Some(is_efficient_dominating(&graph, &set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{domination_number, independence_number, vertex_cover_number};

    const H23: [&str; 16] = [
        "0000000", "0001011", "0010111", "0011100", "0100110", "0101101", "0110001", "0111010",
        "1000101", "1001110", "1010010", "1011001", "1100011", "1101000", "1110100", "1111111",
    ];

    #[test]
    fn binary_codes() {
        let h22 = hamming_code(2, 2).unwrap();
        assert_eq!(h22.codeword_strings().unwrap(), vec!["000", "111"]);
        assert_eq!(h22.is_perfect(), Some(true));

        let h23 = hamming_code(2, 3).unwrap();
        assert_eq!((h23.n, h23.k), (7, 4));
        let mut words = h23.codeword_strings().unwrap();
        words.sort();
        assert_eq!(words, H23);
        assert_eq!(h23.is_perfect(), Some(true));
        assert_eq!(code_is_efficient_dominating(&h23), Some(true));
    }

    #[test]
    fn lexicographic_layout_is_an_equivalent_code() {
        let lex = hamming_code_with_layout(2, 3, ParityLayout::Lexicographic).unwrap();
        assert_eq!(lex.parity_check[0], vec![0, 0, 0, 1, 1, 1, 1]);
        let words = lex.codeword_strings().unwrap();
        assert_eq!(words.len(), 16);
        assert_ne!(words, H23);
        assert_eq!(lex.is_perfect(), Some(true));
        assert_eq!(code_is_efficient_dominating(&lex), Some(true));
    }

    #[test]
    fn ternary_code() {
        let h = hamming_code(3, 2).unwrap();
        assert_eq!((h.n, h.k), (4, 2));
        let words = h.codewords.as_ref().unwrap();
        assert_eq!(words.len(), 9);
        let f = GaloisField::new(3).unwrap();
        for w in words {
            for row in &h.parity_check {
                assert_eq!(f.sum(row.iter().zip(w).map(|(&a, &b)| f.mul(a, b))), 0);
            }
        }
        assert_eq!(h.is_perfect(), Some(true));
        assert_eq!(code_is_efficient_dominating(&h), Some(true));
    }

    #[test]
    fn parity_columns_are_projective_points() {
        for (q, r) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (7, 2), (8, 2), (9, 2)] {
            let f = GaloisField::new(q).unwrap();
            let h = hamming_code(q, r).unwrap();
            let cols: Vec<Vec<u8>> = (0..h.n).map(|j| h.parity_check.iter().map(|row| row[j]).collect()).collect();
            // No column is a scalar multiple of another, none is zero.
            for (i, a) in cols.iter().enumerate() {
                assert!(a.iter().any(|&x| x != 0));
                for b in &cols[i + 1..] {
                    for s in 1..q as u8 {
                        assert_ne!(a.iter().map(|&x| f.mul(s, x)).collect::<Vec<_>>(), *b);
                    }
                }
            }
            if h.codewords.is_some() {
                assert_eq!(h.is_perfect(), Some(true), "H_{q}({r})");
                assert_eq!(h.codewords.as_ref().unwrap().len() as u128, h.codeword_count().unwrap());
            }
        }
    }

    #[test]
    fn large_codes_are_parameters_only() {
        let h = hamming_code(2, 5).unwrap();
        assert_eq!((h.n, h.k), (31, 26));
        assert!(h.codewords.is_none());
        assert_eq!(h.codeword_count().unwrap(), 1 << 26);
        assert!(hamming_code(2, 1).is_err());
        assert!(matches!(hamming_code(6, 2), Err(Error::UnsupportedFieldOrder(6))));
    }

    #[test]
    fn perfect_checks() {
        assert!(!is_perfect(&[vec![0, 0, 0]], 3, 2, 1));
        assert!(is_perfect(&[vec![0, 0, 0], vec![1, 1, 1]], 3, 2, 1));
        // Right count, overlapping balls.
        assert!(!is_perfect(&[vec![0, 0, 0], vec![0, 1, 1]], 3, 2, 1));
        assert_eq!(sphere_packing_equality(16, 7, 2, 1), Some(true));
        assert_eq!(CodeParams::new(7, 4, 3).t, 1);
        assert_eq!(CodeParams::new(23, 12, 7).t, 3);
    }

    #[test]
    fn graph_invariants_closed_forms() {
        let i32 = hamming_graph_invariants(3, 2).unwrap();
        assert_eq!((i32.gamma, i32.indep, i32.tau), (GammaValue::Exact { value: 2 }, 4, 4));
        let i72 = hamming_graph_invariants(7, 2).unwrap();
        assert_eq!((i72.gamma.value(), i72.indep, i72.tau), (16, 64, 64));
        let i42 = hamming_graph_invariants(4, 2).unwrap();
        assert_eq!(
            i42.gamma,
            GammaValue::StrictLowerBound { value: 4, numerator: 16, denominator: 5 }
        );
        assert_eq!(hamming_graph_invariants(1, 5).unwrap().gamma, GammaValue::Exact { value: 1 });
    }

    #[test]
    fn closed_forms_match_search() {
        for (m, q) in [(1, 3), (2, 2), (2, 3), (3, 2), (4, 2), (2, 4), (3, 3)] {
            let g = Graph::hamming(m, q as usize).unwrap();
            let inv = hamming_graph_invariants(m, q).unwrap();
            let gamma = domination_number(&g).value as u128;
            match inv.gamma {
                GammaValue::Exact { value } => assert_eq!(gamma, value, "Γ({m},{q})"),
                GammaValue::StrictLowerBound { value, .. } => assert!(gamma >= value, "Γ({m},{q})"),
            }
            assert_eq!(independence_number(&g).value as u128, inv.indep);
            assert_eq!(vertex_cover_number(&g).value as u128, inv.tau);
            assert_eq!(inv.indep + inv.tau, (q as u128).pow(m as u32));
        }
        assert_eq!(domination_number(&Graph::hamming(4, 2).unwrap()).value, 4);
    }

    #[test]
    fn zero_sum_sets() {
        for (m, q) in [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4), (3, 3)] {
            let g = Graph::hamming(m, q as usize).unwrap();
            let l = zero_sum_independent_set(m, q).unwrap();
            assert_eq!(l.len() as u128, (q as u128).pow(m as u32 - 1));
            assert!(g.is_independent(&l));
            assert!(crate::domination::is_dominating(&g, &l), "maximal");
        }
    }

    #[test]
    fn v_bounds() {
        let b = |q, r| {
            let v = v_number_bounds_hamming(q, r).unwrap();
            (v.lower, v.upper)
        };
        assert_eq!(b(2, 2), (2, 4));
        assert_eq!(b(2, 3), (16, 64));
        assert_eq!(b(3, 2), (9, 54));
        assert!(v_number_bounds_hamming(2, 8).is_err(), "2^254 overflows");
    }

    #[test]
    fn cube_v_number_is_upper_bound() {
        let g = Graph::hamming(3, 2).unwrap();
        assert_eq!(crate::vnumber::v_number(&g).value() as u128, v_number_bounds_hamming(2, 2).unwrap().upper);
    }

    #[test]
    fn vertex_index_convention() {
        assert_eq!(word_index(&[1, 0, 1], 2), 5);
        let h = hamming_code(2, 2).unwrap();
        assert_eq!(h.as_vertex_set().unwrap(), [0usize, 7].into_iter().collect());
        let g = Graph::hamming(3, 2).unwrap();
        assert!(g.has_edge(0, 4));
    }
}
