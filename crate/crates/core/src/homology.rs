//! Reduced simplicial homology over GF(2) or the rationals.
//!
//! Degenerate complexes: the complex whose only face is `∅` has
//! `H̃_{-1}` of dimension 1, and the void complex (no faces) has no
//! homology at all.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    Gf2,
    Rational,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Rational => "rational",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "gf(2)" | "f2" => Ok(Field::Gf2),
            "rational" | "q" => Ok(Field::Rational),
            other => Err(format!("unknown field `{other}` (expected gf2 or rational)")),
        }
    }
}

/// Reduced homology dimensions of the complex with the given faces.
/// Entry `k` is `dim H̃_{k-1}`, so the list starts at degree −1 and ends at
/// the top dimension. Faces must be closed under taking subsets.
pub fn reduced_homology_dims(faces: &[VertexSet], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.len()).max().expect("nonempty");
    // by_size[s] lists faces with s vertices, i.e. dimension s - 1.
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(*f);
    }
    for level in &mut by_size {
        level.sort();
    }
    debug_assert_eq!(by_size[0].len(), 1, "a nonvoid complex contains the empty face");
    // rank[s] is the rank of the boundary from size-s chains to size-(s-1).
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        rank[s] = boundary_rank(&by_size[s], &by_size[s - 1], field);
    }
    (0..=top)
        .map(|s| by_size[s].len() - rank[s] - rank[s + 1])
        .collect()
}

fn boundary_rank(faces: &[VertexSet], facets_below: &[VertexSet], field: Field) -> usize {
    if faces.is_empty() || facets_below.is_empty() {
        return 0;
    }
    let index: HashMap<VertexSet, usize> = facets_below.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let rows = faces.iter().map(|f| {
        f.iter().enumerate().map(|(pos, v)| {
            let mut g = *f;
            g.remove(v);
            (index[&g], if pos % 2 == 0 { 1i64 } else { -1 })
        })
    });
    match field {
        Field::Gf2 => {
            let width = facets_below.len();
            rank_gf2(rows.map(|r| r.map(|(c, _)| c).collect::<Vec<_>>()), width)
        }
        Field::Rational => {
            let width = facets_below.len();
            let dense: Vec<Vec<BigInt>> = rows
                .map(|r| {
                    let mut row = vec![BigInt::zero(); width];
                    for (c, s) in r {
                        row[c] = BigInt::from(s);
                    }
                    row
                })
                .collect();
            rank_bareiss(dense)
        }
    }
}

/// Rank over GF(2) of a 0/1 matrix given by the column indices of its ones.
pub fn rank_gf2(rows: impl IntoIterator<Item = Vec<usize>>, width: usize) -> usize {
    let words = width.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; width];
    let mut rank = 0;
    for cols in rows {
        let mut row = vec![0u64; words];
        for c in cols {
            row[c / 64] ^= 1 << (c % 64);
        }
        loop {
            let Some(lead) = row.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize) else {
                break;
            };
            match &pivots[lead] {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let value = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = value / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::set;
    use proptest::prelude::*;

    fn closure(facets: &[&[usize]]) -> Vec<VertexSet> {
        let mut faces: Vec<VertexSet> = Vec::new();
        for f in facets {
            let f = set(f);
            let members = f.to_vec();
            for bits in 0u32..(1 << members.len()) {
                let s: VertexSet = (0..members.len()).filter(|i| bits & (1 << i) != 0).map(|i| members[i]).collect();
                faces.push(s);
            }
        }
        faces.sort();
        faces.dedup();
        faces
    }

    fn both(faces: &[VertexSet]) -> (Vec<usize>, Vec<usize>) {
        (reduced_homology_dims(faces, Field::Gf2), reduced_homology_dims(faces, Field::Rational))
    }

    #[test]
    fn triangle_boundary() {
        let faces = closure(&[&[0, 1], &[1, 2], &[0, 2]]);
        let (gf2, q) = both(&faces);
        assert_eq!(gf2, vec![0, 0, 1]);
        assert_eq!(q, gf2);
    }

    #[test]
    fn simplex_is_acyclic() {
        for k in 1..=5 {
            let all: Vec<usize> = (0..k).collect();
            let (gf2, q) = both(&closure(&[&all]));
            assert!(gf2.iter().all(|&d| d == 0));
            assert!(q.iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn two_points() {
        let (gf2, q) = both(&closure(&[&[0], &[1]]));
        assert_eq!(gf2, vec![0, 1]);
        assert_eq!(q, gf2);
    }

    #[test]
    fn degenerate_complexes() {
        assert_eq!(reduced_homology_dims(&[VertexSet::EMPTY], Field::Gf2), vec![1]);
        assert_eq!(reduced_homology_dims(&[VertexSet::EMPTY], Field::Rational), vec![1]);
        assert!(reduced_homology_dims(&[], Field::Gf2).is_empty());
        assert!(reduced_homology_dims(&[], Field::Rational).is_empty());
    }

    #[test]
    fn projective_plane_depends_on_field() {
        // Six-vertex triangulation of the real projective plane.
        let faces = closure(&[
            &[0, 1, 3], &[0, 1, 5], &[0, 2, 3], &[0, 2, 4], &[0, 4, 5],
            &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[2, 3, 5], &[3, 4, 5],
        ]);
        let (gf2, q) = both(&faces);
        assert_eq!(gf2, vec![0, 0, 1, 1]);
        assert_eq!(q, vec![0, 0, 0, 0]);
    }

    #[test]
    fn bareiss_known_ranks() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(rank_bareiss(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bareiss(m(&[&[0, 0, 3], &[0, 2, 1], &[5, 0, 0]])), 3);
        assert_eq!(rank_bareiss(m(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 0]])), 1);
        assert_eq!(rank_bareiss(m(&[&[1, 1], &[1, -1]])), 2);
        assert_eq!(rank_gf2([vec![0, 1], vec![0, 1]], 2), 1);
        assert_eq!(rank_gf2([vec![0, 1], vec![1]], 2), 2);
    }

    /// Rank over the rationals by plain fraction elimination with i128.
    fn rank_fractions(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<(i128, i128)>> = m.iter().map(|r| r.iter().map(|&x| (x as i128, 1)).collect()).collect();
        fn norm((p, q): (i128, i128)) -> (i128, i128) {
            fn gcd(a: i128, b: i128) -> i128 { if b == 0 { a.abs() } else { gcd(b, a % b) } }
            let g = gcd(p, q).max(1);
            let s = if q < 0 { -1 } else { 1 };
            (s * p / g, s * q / g)
        }
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| a[r][c].0 != 0) else { continue };
            a.swap(rank, p);
            for r in rank + 1..rows {
                let (fp, fq) = norm((a[r][c].0 * a[rank][c].1, a[r][c].1 * a[rank][c].0));
                for j in c..cols {
                    let (x, y) = a[rank][j];
                    let (u, v) = a[r][j];
                    a[r][j] = norm((u * y * fq - x * fp * v, v * y * fq));
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_elimination(m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..5)) {
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(rank_bareiss(big), rank_fractions(&m));
        }

        #[test]
        fn gf2_rank_matches_bareiss_on_parity(m in proptest::collection::vec(proptest::collection::vec(0i64..=1, 5), 1..6)) {
            // Reducing a 0/1 matrix mod 2 can only lower its rank.
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let cols = m.iter().map(|r| (0..5).filter(|&j| r[j] == 1).collect::<Vec<_>>());
            prop_assert!(rank_gf2(cols, 5) <= rank_bareiss(big));
        }

        #[test]
        fn euler_characteristic(facets in proptest::collection::vec(0u8..64, 1..6)) {
            let owned: Vec<Vec<usize>> = facets.iter().map(|b| (0..6).filter(|i| b & (1 << i) != 0).collect()).collect();
            let refs: Vec<&[usize]> = owned.iter().map(Vec::as_slice).collect();
            let faces = closure(&refs);
            for field in [Field::Gf2, Field::Rational] {
                let dims = reduced_homology_dims(&faces, field);
                let homology: i64 = dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { -(d as i64) } else { d as i64 }).sum();
                let chain: i64 = faces.iter().map(|f| if f.len() % 2 == 0 { -1 } else { 1 }).sum();
                prop_assert_eq!(homology, chain);
            }
        }
    }
}
