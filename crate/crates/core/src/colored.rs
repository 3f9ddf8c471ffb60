//! Colored graphs `G_B` over a color set `A`. Only the relations at each
//! `m` are built: subsets `I ⊆ A` with `m - a_I ∈ B` for `G_B`, and pairs
//! `(I, J)` with `#J ≥ 2`, `m - a_I ∈ D^J` for `G_D̄`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::keysets::{compute_key_sets, set_name, submasks, KeySets};
use crate::linalg::Characteristic;
use crate::poincare::oracle_series;
use crate::semigroup::{ChoiceSet, ValidatedSemigroup, MAX_CHOICE};
use crate::series::{Poly, RationalExpr, TruncatedSeries};
use crate::simplicial::{build_tm, chain_homology};

/// Colors: distinct nonzero members of `S`, disjoint from `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSet {
    elements: Vec<GroupElement>,
}

impl ColorSet {
    pub fn new(s: &ValidatedSemigroup, e: &ChoiceSet, elements: Vec<GroupElement>) -> Result<Self> {
        if e.len() + elements.len() > MAX_CHOICE {
            return Err(Error::input(format!("#E + #A exceeds {MAX_CHOICE}")));
        }
        let mut seen = HashSet::new();
        for a in &elements {
            if a.is_zero() {
                return Err(Error::input("colors may not be 0"));
            }
            if !seen.insert(a.clone()) {
                return Err(Error::input(format!("color {a} repeated")));
            }
            if e.elements().contains(a) {
                return Err(Error::input(format!("color {a} lies in E")));
            }
            if !s.group().contains(a) || !s.is_member(a) {
                return Err(Error::Membership(a.to_string()));
            }
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn subset_sum(&self, s: &ValidatedSemigroup, mask: u32) -> GroupElement {
        s.group().sum(
            self.elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| a),
        )
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.elements.len()) - 1
    }

    /// The choice `E' = E ∪ A`, colors after the elements of `E`.
    pub fn union(&self, s: &ValidatedSemigroup, e: &ChoiceSet) -> Result<ChoiceSet> {
        let mut all = e.elements().to_vec();
        all.extend(self.elements.iter().cloned());
        ChoiceSet::new(s, all)
    }
}

/// A subset `B ⊆ S` known exactly up to degree `bound`, checked to satisfy
/// `b, b + n + n' ∈ B ⇒ b + n ∈ B`.
#[derive(Clone, Debug)]
pub struct BaseSet {
    name: String,
    members: Vec<GroupElement>,
    lookup: HashSet<GroupElement>,
    bound: i64,
}

impl BaseSet {
    pub fn new(
        s: &ValidatedSemigroup,
        name: impl Into<String>,
        members: Vec<GroupElement>,
        bound: i64,
    ) -> Result<Self> {
        let name = name.into();
        for m in &members {
            if s.degree(m) > bound || !s.is_member(m) {
                return Err(Error::input(format!(
                    "{name}: {m} is not a member of degree at most {bound}"
                )));
            }
        }
        let mut members = members;
        s.grading().sort(&mut members);
        members.dedup();
        let lookup: HashSet<GroupElement> = members.iter().cloned().collect();
        let b = Self {
            name,
            members,
            lookup,
            bound,
        };
        b.check_hereditary(s)?;
        Ok(b)
    }

    /// `Q` and every nonempty `D^J`.
    pub fn from_key_sets(s: &ValidatedSemigroup, k: &KeySets) -> Result<Vec<BaseSet>> {
        let mut out = vec![BaseSet::new(s, "Q", k.q.clone(), k.bound)?];
        for (j, members) in &k.dj {
            out.push(BaseSet::new(
                s,
                format!("D^{}", set_name(*j)),
                members.clone(),
                k.bound,
            )?);
        }
        Ok(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn contains(&self, m: &GroupElement) -> bool {
        self.lookup.contains(m)
    }

    // B is convex in the divisibility order iff it equals the intersection
    // of its up- and down-closures.
    fn check_hereditary(&self, s: &ValidatedSemigroup) -> Result<()> {
        let group = s.group();
        let close = |up: bool| {
            let mut seen: HashSet<GroupElement> = self.lookup.clone();
            let mut stack: Vec<GroupElement> = self.members.clone();
            while let Some(x) = stack.pop() {
                for g in s.generators() {
                    let y = if up { group.add(&x, g) } else { group.sub(&x, g) };
                    let keep = if up {
                        s.degree(&y) <= self.bound
                    } else {
                        s.is_member(&y)
                    };
                    if keep && seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
            seen
        };
        let up = close(true);
        let down = close(false);
        let mut bad: Vec<GroupElement> = up
            .iter()
            .filter(|x| down.contains(*x) && !self.contains(x))
            .cloned()
            .collect();
        if bad.is_empty() {
            return Ok(());
        }
        s.grading().sort(&mut bad);
        Err(Error::Hypothesis(format!(
            "{} violates the hereditary property at {}",
            self.name, bad[0]
        )))
    }

    fn check_degree(&self, s: &ValidatedSemigroup, m: &GroupElement) -> Result<()> {
        if s.degree(m) > self.bound {
            return Err(Error::input(format!(
                "{m} has degree {} beyond the bound {} of {}",
                s.degree(m),
                self.bound,
                self.name
            )));
        }
        Ok(())
    }
}

fn relations(s: &ValidatedSemigroup, b: &BaseSet, m: &GroupElement, a: &ColorSet) -> Vec<u32> {
    submasks(a.full_mask(), 0)
        .filter(|&i| b.contains(&s.group().sub(m, &a.subset_sum(s, i))))
        .collect()
}

/// `χ(B, m) = Σ_I (-1)^{#I - 1}` over relations `I` of `m`.
pub fn chi_colored(s: &ValidatedSemigroup, b: &BaseSet, m: &GroupElement, a: &ColorSet) -> Result<i64> {
    b.check_degree(s, m)?;
    Ok(relations(s, b, m, a)
        .iter()
        .map(|i| if i.count_ones() % 2 == 1 { 1 } else { -1 })
        .sum())
}

/// Ranks `h_ℓ(B, m)` for `ℓ = -1, 0, ..., #A - 1` (index `ℓ + 1`).
pub fn colored_homology(
    s: &ValidatedSemigroup,
    b: &BaseSet,
    m: &GroupElement,
    a: &ColorSet,
    ch: Characteristic,
) -> Result<Vec<usize>> {
    b.check_degree(s, m)?;
    Ok(chain_homology(&relations(s, b, m, a), a.len(), ch))
}

/// Relations of `G_D̄` at `m` as masks over `E ∪ A` (bits of `E` first).
fn dbar_relations(s: &ValidatedSemigroup, k: &KeySets, m: &GroupElement, a: &ColorSet) -> Vec<u32> {
    let shift = k.choice.len();
    let mut out = Vec::new();
    for i in submasks(a.full_mask(), 0) {
        let n = s.group().sub(m, &a.subset_sum(s, i));
        for (j, members) in &k.dj {
            if members
                .binary_search_by(|x| s.grading().key(x).cmp(&s.grading().key(&n)))
                .is_ok()
            {
                out.push(j | i << shift);
            }
        }
    }
    out
}

/// `χ(D̄, m) = Σ (-1)^{#I + #J}` over relations `(I, J)` of `m`.
pub fn chi_dbar(s: &ValidatedSemigroup, k: &KeySets, m: &GroupElement, a: &ColorSet) -> Result<i64> {
    if s.degree(m) > k.bound {
        return Err(Error::input(format!("{m} lies beyond the key-set bound {}", k.bound)));
    }
    Ok(dbar_relations(s, k, m, a)
        .iter()
        .map(|c| if c.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// Ranks `h_ℓ(D̄, m)` for `ℓ = -1, 0, ...` (index `ℓ + 1`); a relation
/// `I ∪ J` has dimension `#I + #J - 2`.
pub fn dbar_homology(
    s: &ValidatedSemigroup,
    k: &KeySets,
    m: &GroupElement,
    a: &ColorSet,
    ch: Characteristic,
) -> Result<Vec<usize>> {
    if s.degree(m) > k.bound {
        return Err(Error::input(format!("{m} lies beyond the key-set bound {}", k.bound)));
    }
    let dims = chain_homology(&dbar_relations(s, k, m, a), k.choice.len() + a.len(), ch);
    Ok(dims[1..].to_vec())
}

fn colored_denominators(e: &ChoiceSet, a: &ColorSet) -> Vec<GroupElement> {
    e.elements().iter().chain(a.elements()).cloned().collect()
}

fn expand_signed(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    a: &ColorSet,
    bound: i64,
    chi: impl Fn(&GroupElement) -> Result<i64> + Sync,
) -> Result<TruncatedSeries> {
    let members = s.enumerate_up_to(bound)?;
    let coeffs: Vec<i64> = members.par_iter().map(&chi).collect::<Result<_>>()?;
    let num = Poly::from_terms(members.into_iter().zip(coeffs).map(|(m, c)| (m, BigInt::from(-c))));
    RationalExpr::new(num, colored_denominators(e, a), s)?.expand(s.grading(), bound)
}

/// `P_{G_B} = -Σ χ(B, m) t^m / (Π_E (1 - t^e) Π_A (1 - t^a))` up to `bound`.
pub fn graph_series(
    s: &ValidatedSemigroup,
    b: &BaseSet,
    a: &ColorSet,
    e: &ChoiceSet,
    bound: i64,
) -> Result<TruncatedSeries> {
    let bound = bound.min(b.bound);
    expand_signed(s, e, a, bound, |m| chi_colored(s, b, m, a))
}

/// `P_{G_D̄}` up to `bound`.
pub fn dbar_series(s: &ValidatedSemigroup, k: &KeySets, a: &ColorSet, bound: i64) -> Result<TruncatedSeries> {
    let bound = bound.min(k.bound);
    expand_signed(s, &k.choice, a, bound, |m| chi_dbar(s, k, m, a))
}

/// `expand(N_B / Π_E (1 - t^e))` up to the bound of `B`.
pub fn base_series(s: &ValidatedSemigroup, b: &BaseSet, e: &ChoiceSet) -> Result<TruncatedSeries> {
    let num = Poly::from_terms(b.members.iter().map(|m| (m.clone(), BigInt::from(1))));
    RationalExpr::new(num, e.elements().to_vec(), s)?.expand(s.grading(), b.bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbarRow {
    pub m: Vec<i64>,
    pub degree: i64,
    pub chi_t_prime: i64,
    pub chi_q: i64,
    pub chi_dbar: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DbarReport {
    pub choice: Vec<Vec<i64>>,
    pub colors: Vec<Vec<i64>>,
    pub bound: i64,
    pub rows: Vec<DbarRow>,
    /// `P_{G_B} = N_B / Π_E (1 - t^e)` verified for `B = Q` and every `D^J`.
    pub graph_series_checked: Vec<String>,
    pub euler_identity_holds: bool,
    pub series_identity_holds: bool,
    pub dbar_sum_identity_holds: bool,
    pub saturation_stable: bool,
}

fn first_mismatch(check: &str, s: &ValidatedSemigroup, at: Option<GroupElement>) -> Result<()> {
    match at {
        None => Ok(()),
        Some(m) => Err(Error::consistency(
            check,
            format!("exponent {m} (degree {})", s.degree(&m)),
        )),
    }
}

/// Verifies `χ̃(T'_m) = χ(Q, m) + χ(D̄, m)` for every `m` up to `bound`
/// (`T'` over `E ∪ A`), `P = P_{G_Q} + P_{G_D̄}`,
/// `P_{G_D̄} = Σ_{#J≥2} (-1)^{#J-1} P_{G_{D^J}}`, and the graph series of
/// each base set against `N_B / Π_E (1 - t^e)`.
pub fn dbar_decomposition(s: &ValidatedSemigroup, e: &ChoiceSet, a: &ColorSet, bound: i64) -> Result<DbarReport> {
    let grading = s.grading();
    let union = a.union(s, e)?;
    let k = compute_key_sets(s, e, bound)?;
    let bases = BaseSet::from_key_sets(s, &k)?;
    let q = &bases[0];

    let members = s.enumerate_up_to(bound)?;
    let rows: Vec<DbarRow> = members
        .par_iter()
        .map(|m| {
            Ok(DbarRow {
                m: m.flat().to_vec(),
                degree: s.degree(m),
                chi_t_prime: build_tm(s, &union, m)?.euler_char(),
                chi_q: chi_colored(s, q, m, a)?,
                chi_dbar: chi_dbar(s, &k, m, a)?,
            })
        })
        .collect::<Result<_>>()?;
    if let Some((m, _)) = members
        .iter()
        .zip(&rows)
        .find(|(_, r)| r.chi_t_prime != r.chi_q + r.chi_dbar)
    {
        return Err(Error::consistency(
            "chi(T'_m) = chi(Q, m) + chi(Dbar, m)",
            format!("{m} (degree {})", s.degree(m)),
        ));
    }

    let mut checked = Vec::new();
    let mut graph = BTreeMap::new();
    for b in &bases {
        let lhs = graph_series(s, b, a, e, bound)?;
        first_mismatch(
            &format!("P_G({}) = N_B / q", b.name()),
            s,
            lhs.first_difference(&base_series(s, b, e)?, grading),
        )?;
        checked.push(b.name().to_string());
        graph.insert(b.name().to_string(), lhs);
    }

    let p_dbar = dbar_series(s, &k, a, bound)?;
    let oracle = oracle_series(s, bound)?;
    first_mismatch(
        "P = P_G(Q) + P_G(Dbar)",
        s,
        oracle.first_difference(&graph["Q"].add(&p_dbar, grading), grading),
    )?;

    let mut sum = TruncatedSeries::zero(bound);
    for (b, j) in bases[1..].iter().zip(k.dj.keys()) {
        let term = &graph[b.name()];
        sum = if j.count_ones() % 2 == 0 {
            sum.sub(term, grading)
        } else {
            sum.add(term, grading)
        };
    }
    first_mismatch(
        "P_G(Dbar) = sum (-1)^(#J-1) P_G(D^J)",
        s,
        p_dbar.first_difference(&sum, grading),
    )?;

    Ok(DbarReport {
        choice: e.elements().iter().map(|x| x.flat().to_vec()).collect(),
        colors: a.elements().iter().map(|x| x.flat().to_vec()).collect(),
        bound,
        rows,
        graph_series_checked: checked,
        euler_identity_holds: true,
        series_identity_holds: true,
        dbar_sum_identity_holds: true,
        saturation_stable: k.saturation.stable,
    })
}
