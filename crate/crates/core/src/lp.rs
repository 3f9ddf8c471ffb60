//! Exact two-phase simplex over the rationals, Bland's pivoting rule.
//!
//! Only used at desk scale: gradings, cone membership and positivity
//! certificates involve a handful of rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(Vec<BigRational>),
    Infeasible,
    Unbounded,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    /// Number of columns excluding the right-hand side.
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost . x` over the current basis; columns `>= allowed` may not enter.
    fn optimize(&mut self, cost: &[BigRational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_negative()
            });
            let Some(j) = entering else {
                return true;
            };
            let mut best: Option<(BigRational, usize, usize)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if a.is_positive() {
                    let ratio = self.rhs(i) / a;
                    let better = match &best {
                        None => true,
                        Some((r, _, bidx)) => ratio < *r || (ratio == *r && self.basis[i] < *bidx),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                Some((_, i, _)) => self.pivot(i, j),
                None => return false,
            }
        }
    }
}

/// Minimizes `cost . x` subject to `a x = b`, `x >= 0`. With `cost = None`
/// any feasible basic solution is returned.
pub(crate) fn solve(a: &[Vec<BigRational>], b: &[BigRational], cost: Option<&[BigRational]>) -> LpOutcome {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut t: Vec<BigRational> = Vec::with_capacity(width + 1);
        for v in row {
            t.push(if flip { -v.clone() } else { v.clone() });
        }
        for k in 0..m {
            t.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        t.push(if flip { -bi.clone() } else { bi.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };

    let mut phase1 = vec![BigRational::zero(); width];
    for c in phase1.iter_mut().skip(n) {
        *c = BigRational::one();
    }
    tab.optimize(&phase1, width);
    let infeasibility: BigRational = tab
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &bcol)| bcol >= n)
        .map(|(i, _)| tab.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // drive zero-level artificials out of the basis where possible
    for i in 0..m {
        if tab.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.rows[i][j].is_zero() && !tab.basis.contains(&j)) {
                tab.pivot(i, j);
            }
        }
    }

    if let Some(c) = cost {
        let mut full = c.to_vec();
        full.resize(width, BigRational::zero());
        if !tab.optimize(&full, n) {
            return LpOutcome::Unbounded;
        }
    }

    let mut x = vec![BigRational::zero(); n];
    for (i, &bcol) in tab.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = tab.rhs(i).clone();
        }
    }
    LpOutcome::Optimal(x)
}

/// Multiplies a rational vector by the lcm of its denominators.
pub(crate) fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn finds_feasible_point() {
        // x + y = 2, x - y = 0
        let a = vec![rv(&[1, 1]), rv(&[1, -1])];
        let out = solve(&a, &rv(&[2, 0]), None);
        assert_eq!(out, LpOutcome::Optimal(rv(&[1, 1])));
    }

    #[test]
    fn detects_infeasibility() {
        // x + y = -1 with x, y >= 0
        let a = vec![rv(&[1, 1])];
        assert_eq!(solve(&a, &rv(&[-1]), None), LpOutcome::Infeasible);
    }

    #[test]
    fn minimizes() {
        // min x + 2y s.t. x + y - s = 3
        let a = vec![rv(&[1, 1, -1])];
        let out = solve(&a, &rv(&[3]), Some(&rv(&[1, 2, 0])));
        assert_eq!(out, LpOutcome::Optimal(rv(&[3, 0, 0])));
    }

    #[test]
    fn unbounded() {
        let a = vec![rv(&[1, -1])];
        assert_eq!(solve(&a, &rv(&[1]), Some(&rv(&[0, -1]))), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = vec![rv(&[1, 1]), rv(&[2, 2])];
        match solve(&a, &rv(&[1, 2]), Some(&rv(&[1, 0]))) {
            LpOutcome::Optimal(x) => assert_eq!(x, rv(&[0, 1])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn clears() {
        let v = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(2.into(), 3.into()),
        ];
        assert_eq!(clear_denominators(&v), vec![BigInt::from(3), BigInt::from(4)]);
    }
}
