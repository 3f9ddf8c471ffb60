//! Exact sparse Laurent polynomials and truncated power series with
//! exponents in the ambient group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{AmbientGroup, Grading, GroupElement};
use crate::semigroup::ValidatedSemigroup;

/// A finite sum `Σ a_m t^m` with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<GroupElement, BigInt>,
}

fn accumulate(terms: &mut BTreeMap<GroupElement, BigInt>, exp: GroupElement, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(exp) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(group: &AmbientGroup) -> Self {
        Self::monomial(group.zero(), BigInt::one())
    }

    pub fn monomial(exp: GroupElement, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `1 - t^e`.
    pub fn one_minus(group: &AmbientGroup, e: &GroupElement) -> Self {
        let mut p = Self::one(group);
        p.add_term(e.clone(), -BigInt::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupElement, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: GroupElement, coeff: BigInt) {
        accumulate(&mut self.terms, exp, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &GroupElement) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly, group: &AmbientGroup) -> Poly {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                accumulate(&mut out, group.add(a, b), ca * cb);
            }
        }
        Poly { terms: out }
    }

    /// `p(1/t)`: every exponent replaced by its negation.
    pub fn bar(&self, group: &AmbientGroup) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (group.neg(e), c.clone())).collect(),
        }
    }

    /// `t^g · p`.
    pub fn shift(&self, g: &GroupElement, group: &AmbientGroup) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (group.add(e, g), c.clone())).collect(),
        }
    }

    pub fn truncate(&self, grading: &Grading, bound: i64) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| grading.degree(e) <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self, grading: &Grading) -> Option<i64> {
        self.terms.keys().map(|e| grading.degree(e)).min()
    }

    pub fn max_degree(&self, grading: &Grading) -> Option<i64> {
        self.terms.keys().map(|e| grading.degree(e)).max()
    }

    /// Terms in canonical order (degree, then lexicographic).
    pub fn sorted_terms(&self, grading: &Grading) -> Vec<(&GroupElement, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| grading.key(e));
        v
    }

    /// First exponent of degree `<= bound`, in canonical order, where the two differ.
    pub fn first_difference(&self, other: &Poly, grading: &Grading, bound: i64) -> Option<GroupElement> {
        let diff = self.sub(other).truncate(grading, bound);
        diff.sorted_terms(grading).first().map(|(e, _)| (*e).clone())
    }

    pub fn to_json(&self, grading: &Grading) -> Vec<Term> {
        self.sorted_terms(grading)
            .into_iter()
            .map(|(e, c)| Term {
                exp: e.flat().to_vec(),
                coeff: Coeff(c.clone()),
            })
            .collect()
    }

    pub fn from_json(terms: &[Term], group: &AmbientGroup) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in terms {
            p.add_term(group.element(&t.exp)?, t.coeff.0.clone());
        }
        Ok(p)
    }

    /// Human-readable form such as `1 - t^6`, in canonical order.
    pub fn display(&self, grading: &Grading) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms(grading).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = if e.is_zero() { String::new() } else { format!("t^{e}") };
            if abs.is_one() && !mono.is_empty() {
                out.push_str(&mono);
            } else if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs}{mono}"));
            }
        }
        out
    }
}

/// An arbitrary-precision coefficient; JSON integer when it fits in `i64`,
/// otherwise a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Coeff(v.into())),
            Raw::Str(s) => s.parse().map(Coeff).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Vec<i64>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub bound: i64,
    pub terms: Vec<Term>,
}

/// A power series known exactly on all exponents of degree `<= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<GroupElement, BigInt>,
    bound: i64,
}

impl TruncatedSeries {
    pub fn zero(bound: i64) -> Self {
        Self {
            terms: BTreeMap::new(),
            bound,
        }
    }

    /// Truncation of an exact polynomial.
    pub fn from_poly(p: &Poly, grading: &Grading, bound: i64) -> Self {
        Self {
            terms: p.truncate(grading, bound).terms,
            bound,
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn coeff(&self, exp: &GroupElement) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The known part as a polynomial.
    pub fn as_poly(&self) -> Poly {
        Poly {
            terms: self.terms.clone(),
        }
    }

    pub fn with_bound(&self, grading: &Grading, bound: i64) -> Self {
        let bound = bound.min(self.bound);
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| grading.degree(e) <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
            bound,
        }
    }

    pub fn add(&self, other: &TruncatedSeries, grading: &Grading) -> TruncatedSeries {
        let bound = self.bound.min(other.bound);
        let mut out = self.with_bound(grading, bound);
        for (e, c) in &other.terms {
            if grading.degree(e) <= bound {
                accumulate(&mut out.terms, e.clone(), c.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            bound: self.bound,
        }
    }

    pub fn sub(&self, other: &TruncatedSeries, grading: &Grading) -> TruncatedSeries {
        self.add(&other.neg(), grading)
    }

    /// Product with an exact polynomial of minimum degree `δ`; the bound
    /// becomes `N + δ`.
    pub fn mul_poly(&self, p: &Poly, grading: &Grading) -> TruncatedSeries {
        let bound = match p.min_degree(grading) {
            Some(delta) => self.bound + delta,
            None => self.bound,
        };
        let group = grading.group();
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &p.terms {
                let e = group.add(a, b);
                if grading.degree(&e) <= bound {
                    accumulate(&mut terms, e, ca * cb);
                }
            }
        }
        TruncatedSeries { terms, bound }
    }

    /// Product of two truncated series: bound `min(N1 + δ2, N2 + δ1)`.
    pub fn mul(&self, other: &TruncatedSeries, grading: &Grading) -> TruncatedSeries {
        let d1 = self.terms.keys().map(|e| grading.degree(e)).min();
        let d2 = other.terms.keys().map(|e| grading.degree(e)).min();
        let bound = match (d1, d2) {
            (Some(d1), Some(d2)) => (self.bound + d2).min(other.bound + d1),
            _ => self.bound.min(other.bound),
        };
        let group = grading.group();
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = group.add(a, b);
                if grading.degree(&e) <= bound {
                    accumulate(&mut terms, e, ca * cb);
                }
            }
        }
        TruncatedSeries { terms, bound }
    }

    /// First exponent (canonical order) of degree `<= min(bounds)` where the two differ.
    pub fn first_difference(&self, other: &TruncatedSeries, grading: &Grading) -> Option<GroupElement> {
        let bound = self.bound.min(other.bound);
        self.as_poly().first_difference(&other.as_poly(), grading, bound)
    }

    pub fn to_json(&self, grading: &Grading) -> SeriesJson {
        SeriesJson {
            bound: self.bound,
            terms: self.as_poly().to_json(grading),
        }
    }
}

/// `numerator / Π (1 - t^e)`, kept in raw factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalExpr {
    pub numerator: Poly,
    pub denominator: Vec<GroupElement>,
}

impl RationalExpr {
    /// Checks every denominator exponent is a nonzero member of `S`.
    pub fn new(numerator: Poly, denominator: Vec<GroupElement>, s: &ValidatedSemigroup) -> Result<Self> {
        if let Some(e) = denominator.iter().find(|e| e.is_zero() || !s.is_member(e)) {
            return Err(Error::Expansion(format!(
                "denominator exponent {e} is not a nonzero member"
            )));
        }
        Ok(Self { numerator, denominator })
    }

    /// `q = Π (1 - t^e)` as a polynomial.
    pub fn denominator_poly(&self, group: &AmbientGroup) -> Poly {
        self.denominator
            .iter()
            .fold(Poly::one(group), |acc, e| acc.mul(&Poly::one_minus(group, e), group))
    }

    /// The power series expansion up to degree `bound`.
    pub fn expand(&self, grading: &Grading, bound: i64) -> Result<TruncatedSeries> {
        if let Some(e) = self.denominator.iter().find(|e| grading.degree(e) <= 0) {
            return Err(Error::Expansion(format!(
                "denominator exponent {e} has nonpositive degree"
            )));
        }
        let group = grading.group();
        let mut current: BTreeMap<GroupElement, BigInt> = self.numerator.truncate(grading, bound).terms;
        for e in &self.denominator {
            let mut next = BTreeMap::new();
            for (m, c) in &current {
                let mut x = m.clone();
                while grading.degree(&x) <= bound {
                    accumulate(&mut next, x.clone(), c.clone());
                    x = group.add(&x, e);
                }
            }
            current = next;
        }
        Ok(TruncatedSeries { terms: current, bound })
    }
}

/// `N_B = Σ_{m ∈ B} t^m`, truncated at `bound`.
pub fn indicator<'a>(
    items: impl IntoIterator<Item = &'a GroupElement>,
    grading: &Grading,
    bound: i64,
) -> TruncatedSeries {
    let mut terms = BTreeMap::new();
    for m in items {
        if grading.degree(m) <= bound {
            terms.insert(m.clone(), BigInt::one());
        }
    }
    TruncatedSeries { terms, bound }
}

/// A polynomial in `v` and `t`, used for the syzygy series.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, GroupElement), BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateTerm {
    pub v: u32,
    pub exp: Vec<i64>,
    pub coeff: Coeff,
}

impl BivariatePoly {
    pub fn add_term(&mut self, j: u32, exp: GroupElement, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (j, exp);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, GroupElement), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: u32, exp: &GroupElement) -> BigInt {
        self.terms.get(&(j, exp.clone())).cloned().unwrap_or_default()
    }

    /// Substitutes `v = -1`.
    pub fn eval_minus_one(&self) -> Poly {
        let mut p = Poly::zero();
        for ((j, e), c) in &self.terms {
            p.add_term(e.clone(), if j % 2 == 0 { c.clone() } else { -c });
        }
        p
    }

    pub fn to_json(&self, grading: &Grading) -> Vec<BivariateTerm> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((j, e), _)| (*j, grading.degree(e), e.clone()));
        v.into_iter()
            .map(|((j, e), c)| BivariateTerm {
                v: *j,
                exp: e.flat().to_vec(),
                coeff: Coeff(c.clone()),
            })
            .collect()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
