//! Arithmetic in GF(q) for q ∈ {2, 3, 4, 5, 7, 8, 9}.
//!
//! Elements are `0..q`. For q = p^e with e > 1 an element `x` stands for the
//! polynomial whose base-p digits (least significant first) are its
//! coefficients, reduced modulo a fixed irreducible:
//!
//! | q | modulus       |
//! |---|---------------|
//! | 4 | x² + x + 1    |
//! | 8 | x³ + x + 1    |
//! | 9 | x² + 1 over F₃|

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    q: u8,
    p: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        // (characteristic, degree, modulus coefficients low to high)
        let (p, e, modulus): (u8, usize, &[u8]) = match q {
            2 | 3 | 5 | 7 => (q as u8, 1, &[]),
            4 => (2, 2, &[1, 1, 1]),
            8 => (2, 3, &[1, 1, 0, 1]),
            9 => (3, 2, &[1, 0, 1]),
            other => return Err(Error::UnsupportedFieldOrder(other)),
        };
        let q = q as u8;
        let digits = |x: u8| -> Vec<u8> {
            let mut d = vec![0; e];
            let mut x = x;
            for slot in &mut d {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let value = |d: &[u8]| -> u8 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let size = q as usize;
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * size + b as usize] = value(&sum);
                let product = if e == 1 {
                    ((a as u32 * b as u32) % p as u32) as u8
                } else {
                    let mut prod = vec![0u8; 2 * e - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    // Reduce: x^e = -(modulus without its leading term).
                    for deg in (e..prod.len()).rev() {
                        let c = prod[deg];
                        if c == 0 {
                            continue;
                        }
                        prod[deg] = 0;
                        for (k, &m) in modulus[..e].iter().enumerate() {
                            let sub = (c * m) % p;
                            let slot = &mut prod[deg - e + k];
                            *slot = (*slot + p - sub) % p;
                        }
                    }
                    value(&prod[..e])
                };
                mul[a as usize * size + b as usize] = product;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a as usize * size + b as usize] == 0).expect("additive inverse"))
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a as usize * size + b as usize] == 1).expect("field has inverses")
                }
            })
            .collect();
        Ok(GaloisField { q, p, add, mul, neg, inv })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn sum(&self, values: impl IntoIterator<Item = u8>) -> u8 {
        values.into_iter().fold(0, |acc, x| self.add(acc, x))
    }
}
