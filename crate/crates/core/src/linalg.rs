//! Exact ranks of sparse integer matrices over Q or GF(p).

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 for Q, otherwise a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u32) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::input(format!("characteristic {p} is neither 0 nor a prime")))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Characteristic {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u32 {
    fn from(c: Characteristic) -> u32 {
        c.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A sparse row: sorted `(column, value)` pairs with nonzero values.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank of the matrix whose rows are given, over the field of characteristic `ch`.
pub fn rank(rows: &[SparseRow], ch: Characteristic) -> usize {
    if ch.0 == 0 {
        let rows: Vec<Vec<(usize, BigRational)>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(c, v)| (c, BigRational::from_integer(v.into())))
                    .collect()
            })
            .collect();
        eliminate(rows, &Rationals)
    } else {
        let f = PrimeField(ch.0 as i64);
        let rows: Vec<Vec<(usize, i64)>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(c, v)| (c, v.rem_euclid(f.0)))
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect();
        eliminate(rows, &f)
    }
}

trait Field {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub_mul(&self, a: &Self::Elem, f: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        a - f * b
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
}

struct PrimeField(i64);

impl PrimeField {
    fn inv(&self, a: i64) -> i64 {
        // Fermat
        let (mut base, mut exp, mut acc) = (a.rem_euclid(self.0), self.0 - 2, 1i64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn sub_mul(&self, a: &i64, f: &i64, b: &i64) -> i64 {
        (a - f * b % self.0).rem_euclid(self.0)
    }
    fn div(&self, a: &i64, b: &i64) -> i64 {
        a * self.inv(*b) % self.0
    }
}

/// Row reduction keyed on leading columns. Each pivot row is stored by its
/// leading column; incoming rows are reduced against existing pivots.
fn eliminate<F: Field>(rows: Vec<Vec<(usize, F::Elem)>>, field: &F) -> usize {
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, F::Elem)>> = Default::default();
    for mut row in rows {
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                break;
            };
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(p) => {
                    // row -= (lead_val / p_lead) * p
                    let f = field.div(&lead_val, &p[0].1);
                    row = axpy(&row, &f, p, field);
                }
            }
        }
    }
    pivots.len()
}

fn axpy<F: Field>(row: &[(usize, F::Elem)], f: &F::Elem, p: &[(usize, F::Elem)], field: &F) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = p.get(j).map_or(usize::MAX, |x| x.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            let v = field.sub_mul(&field.zero(), f, &p[j].1);
            if !field.is_zero(&v) {
                out.push((cj, v));
            }
            j += 1;
        } else {
            let v = field.sub_mul(&row[i].1, f, &p[j].1);
            if !field.is_zero(&v) {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a dense rational matrix; used for the dimension of a semigroup.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, v))
                .collect()
        })
        .collect();
    rank(&sparse, Characteristic::ZERO)
}
