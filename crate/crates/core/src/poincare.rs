//! Numerators of the Poincaré series `P = p / Π_{e∈E}(1 - t^e)` by four
//! independent routes, checked against a brute-force enumeration of `S`.
//!
//! * `euler`: `-Σ χ̃(T_m) t^m`
//! * `sets`: `N_Q - Σ_{#J≥2} (-1)^{#J} N_{D^J}`
//! * `dual`: `Σ (-1)^{#supp(m)} χ̃(T_m^∨) t^m`, with `χ̃(T_m^∨) := 1` on `Q`
//! * `relative_dual`: `Σ (-1)^{#E} χ̃(T̄_m^∨) t^m`
//!
//! The two dual sums equal `q·P`, the numerator, not `P` itself.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::{Grading, GroupElement};
use crate::keysets::{apery_single, compute_key_sets, KeySets, SaturationReport};
use crate::semigroup::{ChoiceSet, ValidatedSemigroup};
use crate::series::{indicator, Poly, RationalExpr, TruncatedSeries};
use crate::simplicial::{build_tm, Complex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Euler,
    Sets,
    Dual,
    RelativeDual,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Euler, Method::Sets, Method::Dual, Method::RelativeDual];

    pub fn name(self) -> &'static str {
        match self {
            Method::Euler => "euler",
            Method::Sets => "sets",
            Method::Dual => "dual",
            Method::RelativeDual => "relative_dual",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `T_m` for every member of degree at most `bound`, in canonical order.
pub fn member_complexes(s: &ValidatedSemigroup, e: &ChoiceSet, bound: i64) -> Result<Vec<(GroupElement, Complex)>> {
    let members = s.enumerate_up_to(bound)?;
    members
        .into_par_iter()
        .map(|m| build_tm(s, e, &m).map(|t| (m, t)))
        .collect()
}

/// Brute-force `P` truncated at `bound`: the indicator of the enumeration.
pub fn oracle_series(s: &ValidatedSemigroup, bound: i64) -> Result<TruncatedSeries> {
    let members = s.enumerate_up_to(bound)?;
    Ok(indicator(&members, s.grading(), bound))
}

/// `q = Π_{e∈E}(1 - t^e)` in factored form with numerator 1.
pub fn denominator(s: &ValidatedSemigroup, e: &ChoiceSet) -> Result<RationalExpr> {
    RationalExpr::new(Poly::one(s.group()), e.elements().to_vec(), s)
}

fn coefficient(method: Method, e: &ChoiceSet, t: &Complex) -> Result<i64> {
    Ok(match method {
        Method::Euler => -t.euler_char(),
        Method::Dual => {
            let supp = t.support();
            let chi = if supp == 0 { 1 } else { t.alexander_dual()?.euler_char() };
            if supp.count_ones().is_multiple_of(2) {
                chi
            } else {
                -chi
            }
        }
        Method::RelativeDual => {
            let chi = t.relative_alexander_dual().euler_char();
            if e.len().is_multiple_of(2) {
                chi
            } else {
                -chi
            }
        }
        Method::Sets => unreachable!("the sets numerator is assembled from key sets"),
    })
}

fn complex_numerator(method: Method, e: &ChoiceSet, complexes: &[(GroupElement, Complex)]) -> Result<Poly> {
    let coeffs: Vec<i64> = complexes
        .par_iter()
        .map(|(_, t)| coefficient(method, e, t))
        .collect::<Result<_>>()?;
    Ok(Poly::from_terms(
        complexes
            .iter()
            .zip(coeffs)
            .map(|((m, _), c)| (m.clone(), BigInt::from(c))),
    ))
}

/// `N_Q - Σ_{#J≥2} (-1)^{#J} N_{D^J}`.
pub fn sets_numerator(k: &KeySets) -> Poly {
    let mut p = Poly::from_terms(k.q.iter().map(|m| (m.clone(), BigInt::one())));
    for (j, members) in &k.dj {
        let sign = if j.count_ones() % 2 == 0 { -1 } else { 1 };
        for m in members {
            p.add_term(m.clone(), BigInt::from(sign));
        }
    }
    p
}

/// The numerator for `#E ≤ 3` written out case by case:
/// `N_Q`, `N_Q - N_D`, `N_Q + N_{D^E} - Σ_{pairs} N_{D^J}`.
pub fn small_choice_numerator(s: &ValidatedSemigroup, k: &KeySets) -> Option<Poly> {
    let nq = Poly::from_terms(k.q.iter().map(|m| (m.clone(), BigInt::one())));
    let ind = |v: &[GroupElement]| Poly::from_terms(v.iter().map(|m| (m.clone(), BigInt::one())));
    match k.choice.len() {
        1 => Some(nq),
        2 => Some(nq.sub(&ind(&k.d(s)))),
        3 => {
            let pairs = [0b011u32, 0b101, 0b110]
                .iter()
                .fold(Poly::zero(), |acc, &j| acc.add(&ind(k.dj(j))));
            Some(nq.add(&ind(k.dj(0b111))).sub(&pairs))
        }
        _ => None,
    }
}

/// The numerator truncated at `bound` by the requested method.
pub fn numerator(s: &ValidatedSemigroup, e: &ChoiceSet, bound: i64, method: Method) -> Result<Poly> {
    match method {
        Method::Sets => Ok(sets_numerator(&compute_key_sets(s, e, bound)?)),
        _ => complex_numerator(method, e, &member_complexes(s, e, bound)?),
    }
}

/// All four numerators, sharing one pass of `T_m` construction.
pub fn all_numerators(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    bound: i64,
    keys: &KeySets,
) -> Result<BTreeMap<Method, Poly>> {
    let complexes = member_complexes(s, e, bound)?;
    let mut out = BTreeMap::new();
    for method in Method::ALL {
        let p = match method {
            Method::Sets => sets_numerator(keys),
            _ => complex_numerator(method, e, &complexes)?,
        };
        out.insert(method, p);
    }
    Ok(out)
}

/// A second choice containing `E`: `E ∪ {e_E}`, or `E ∪ {2 e_E}` when
/// `e_E ∈ E`.
pub fn extended_choice(s: &ValidatedSemigroup, e: &ChoiceSet) -> Result<ChoiceSet> {
    let extra = if e.elements().contains(e.sum()) {
        s.group().scale(2, e.sum())
    } else {
        e.sum().clone()
    };
    let mut elems = e.elements().to_vec();
    elems.push(extra);
    ChoiceSet::new(s, elems)
}

#[derive(Clone, Debug)]
pub struct CrossIdentity {
    pub other_choice: Vec<GroupElement>,
    pub other_numerator: Poly,
    pub bound: i64,
}

#[derive(Clone, Debug)]
pub struct PoincareReport {
    pub choice: Vec<GroupElement>,
    pub bound: i64,
    pub numerators: BTreeMap<Method, Poly>,
    pub denominator: RationalExpr,
    pub oracle: TruncatedSeries,
    pub methods_agree: bool,
    pub cone_generated: bool,
    pub saturation: SaturationReport,
    /// No numerator term in the last saturation window.
    pub numerator_stable: bool,
    pub cross_identity: Option<CrossIdentity>,
}

impl PoincareReport {
    pub fn numerator(&self) -> &Poly {
        &self.numerators[&Method::Euler]
    }

    /// Cone generated and no numerator term in the last window, so the
    /// truncated numerator is reported as the polynomial `p`. The key sets
    /// themselves may be infinite.
    pub fn saturated(&self) -> bool {
        self.cone_generated && self.numerator_stable
    }

    pub fn to_json(&self, grading: &Grading) -> serde_json::Value {
        let methods: BTreeMap<&str, _> = self
            .numerators
            .iter()
            .map(|(m, p)| (m.name(), p.to_json(grading)))
            .collect();
        json!({
            "numerator": self.numerator().to_json(grading),
            "denominator_exponents": self.denominator.denominator.iter().map(|e| e.flat().to_vec()).collect::<Vec<_>>(),
            "methods_agree": self.methods_agree,
            "saturated": self.saturated(),
            "bound": self.bound,
            "choice": self.choice.iter().map(|e| e.flat().to_vec()).collect::<Vec<_>>(),
            "cone_generated": self.cone_generated,
            "numerators": methods,
            "saturation": self.saturation,
            "cross_identity": self.cross_identity.as_ref().map(|c| json!({
                "other_choice": c.other_choice.iter().map(|e| e.flat().to_vec()).collect::<Vec<_>>(),
                "other_numerator": c.other_numerator.to_json(grading),
                "bound": c.bound,
                "holds": true,
            })),
        })
    }
}

fn mismatch(check: &str, s: &ValidatedSemigroup, at: Option<GroupElement>, stable: bool) -> Result<()> {
    match at {
        None => Ok(()),
        Some(m) => Err(Error::consistency(
            check,
            format!(
                "exponent {m} (degree {}){}",
                s.degree(&m),
                if stable { "" } else { "; key sets not saturated" }
            ),
        )),
    }
}

/// Computes all four numerators and the oracle, and checks
/// `q·P ≡ p`, `expand(p/q) ≡ P` and, for a second choice `E'`,
/// `p·q' = p'·q`, all up to the bound.
pub fn verify_rational_form(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    other: Option<&ChoiceSet>,
    bound: i64,
) -> Result<PoincareReport> {
    let grading = s.grading();
    let group = s.group();
    let keys = compute_key_sets(s, e, bound)?;
    let stable = keys.saturation.stable;
    let numerators = all_numerators(s, e, bound, &keys)?;
    let p = numerators[&Method::Euler].clone();

    for (method, other_p) in &numerators {
        mismatch(
            &format!("numerator euler = {method}"),
            s,
            p.first_difference(other_p, grading, bound),
            stable,
        )?;
    }

    let den = denominator(s, e)?;
    let q = den.denominator_poly(group);
    let oracle = oracle_series(s, bound)?;
    let q_times_p = oracle.mul_poly(&q, grading);
    mismatch(
        "q * P = numerator",
        s,
        q_times_p.first_difference(&TruncatedSeries::from_poly(&p, grading, bound), grading),
        stable,
    )?;
    let expanded = RationalExpr::new(p.clone(), den.denominator.clone(), s)?.expand(grading, bound)?;
    mismatch(
        "expand(p / q) = P",
        s,
        expanded.first_difference(&oracle, grading),
        stable,
    )?;

    let cross_identity = match other {
        None => None,
        Some(e2) => {
            let p2 = numerator(s, e2, bound, Method::Euler)?;
            let q2 = denominator(s, e2)?.denominator_poly(group);
            let lhs = TruncatedSeries::from_poly(&p, grading, bound).mul_poly(&q2, grading);
            let rhs = TruncatedSeries::from_poly(&p2, grading, bound).mul_poly(&q, grading);
            mismatch("p * q' = p' * q", s, lhs.first_difference(&rhs, grading), stable)?;
            Some(CrossIdentity {
                other_choice: e2.elements().to_vec(),
                other_numerator: p2,
                bound: lhs.bound().min(rhs.bound()),
            })
        }
    };

    let window = keys.saturation.window;
    let numerator_stable = p.terms().all(|(m, _)| s.degree(m) <= bound - window);
    Ok(PoincareReport {
        choice: e.elements().to_vec(),
        bound,
        numerators,
        denominator: den,
        oracle,
        methods_agree: true,
        cone_generated: e.generates_cone(),
        saturation: keys.saturation,
        numerator_stable,
        cross_identity,
    })
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub bound: i64,
    pub q_e_size: usize,
    pub ej_sizes: BTreeMap<u32, usize>,
    pub holds: bool,
}

/// Checks `P ≡ N_{Q_E} - expand(Σ_{#J'≥1} (-1)^{#J'} N_{E^{J'}} / q)` up to `bound`.
pub fn corollary_identity(s: &ValidatedSemigroup, e: &ChoiceSet, bound: i64) -> Result<CorollaryReport> {
    let grading = s.grading();
    let a = apery_single(s, e, bound)?;
    let mut signed = Poly::zero();
    for (j, members) in &a.ej {
        let sign = if j.count_ones() % 2 == 0 { 1 } else { -1 };
        for m in members {
            signed.add_term(m.clone(), BigInt::from(sign));
        }
    }
    let correction = RationalExpr::new(signed, e.elements().to_vec(), s)?.expand(grading, bound)?;
    let rhs = indicator(&a.q_e, grading, bound).sub(&correction, grading);
    let oracle = oracle_series(s, bound)?;
    mismatch(
        "P = N_{Q_E} - (sum E^{J'}) / q",
        s,
        oracle.first_difference(&rhs, grading),
        a.saturation.stable,
    )?;
    Ok(CorollaryReport {
        bound,
        q_e_size: a.q_e.len(),
        ej_sizes: a.ej.iter().map(|(j, v)| (*j, v.len())).collect(),
        holds: true,
    })
}
