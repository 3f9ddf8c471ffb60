//! Graded Betti numbers of `K[S]` over the polynomial ring on `E`, read
//! off the homology of the complexes `T_m`, and the invariants derived from
//! them: depth, the bound `r'`, Gorenstein and complete-intersection tests,
//! and the syzygy series.
//!
//! Indexing: `β_{j,m} = h̃_{j-1}(T_m)`, so `β_0` sits on `Q` and the
//! projective dimension is the largest `j` with `β_j ≠ 0`. Reports also
//! carry the shifted index `j - 1` of the alternative convention.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::keysets::{compute_key_sets, KeySets};
use crate::linalg::Characteristic;
use crate::poincare::member_complexes;
use crate::semigroup::{ChoiceSet, ValidatedSemigroup};
use crate::series::{BivariatePoly, Poly};
use crate::simplicial::Complex;

/// Above this size of `E` the relative duals (with `2^{#E}` faces each) are
/// not built and the dual characterization of depth is skipped.
pub const DUAL_CHECK_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub j: usize,
    /// `j - 1`, the index under which `b_{-1}` counts `Q`.
    pub shifted_j: i64,
    pub exponent: Vec<i64>,
    pub degree: i64,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: Characteristic,
    pub bound: i64,
    pub choice_size: usize,
    /// Nonzero `β_{j,m}` keyed by `j`, each list in canonical order.
    entries: BTreeMap<usize, Vec<(GroupElement, usize)>>,
    /// Width of the window `(N - w, N]` checked for late entries.
    pub window: i64,
    /// No entry falls in the window.
    pub stable: bool,
}

impl BettiTable {
    pub fn get(&self, j: usize, m: &GroupElement) -> usize {
        self.entries
            .get(&j)
            .and_then(|v| v.iter().find(|(x, _)| x == m))
            .map_or(0, |(_, b)| *b)
    }

    pub fn level(&self, j: usize) -> &[(GroupElement, usize)] {
        self.entries.get(&j).map_or(&[], |v| v.as_slice())
    }

    /// `β_j = Σ_m β_{j,m}` for `j = 0 ..= pd`.
    pub fn totals(&self) -> Vec<usize> {
        match self.pd() {
            None => Vec::new(),
            Some(pd) => (0..=pd).map(|j| self.level(j).iter().map(|(_, b)| b).sum()).collect(),
        }
    }

    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn rows(&self, s: &ValidatedSemigroup) -> Vec<BettiRow> {
        self.entries
            .iter()
            .flat_map(|(&j, v)| {
                v.iter().map(move |(m, b)| BettiRow {
                    j,
                    shifted_j: j as i64 - 1,
                    exponent: m.flat().to_vec(),
                    degree: s.degree(m),
                    value: *b,
                })
            })
            .collect()
    }

    /// `Σ_j (-1)^j Σ_m β_{j,m} t^m`, which equals the numerator.
    pub fn alternating_sum(&self) -> Poly {
        let mut p = Poly::zero();
        for (&j, v) in &self.entries {
            for (m, b) in v {
                let c = BigInt::from(*b);
                p.add_term(m.clone(), if j % 2 == 0 { c } else { -c });
            }
        }
        p
    }

    pub fn to_json(&self, s: &ValidatedSemigroup) -> serde_json::Value {
        serde_json::json!({
            "characteristic": self.characteristic,
            "bound": self.bound,
            "indexing": "beta_{j,m} = h~_{j-1}(T_m); shifted_j = j - 1",
            "totals": self.totals(),
            "pd": self.pd(),
            "stable": self.stable,
            "window": self.window,
            "rows": self.rows(s),
        })
    }

    pub fn to_csv(&self, s: &ValidatedSemigroup) -> String {
        let mut out = String::from("j,shifted_j,exponent,degree,value\n");
        for r in self.rows(s) {
            let exp: Vec<String> = r.exponent.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(
                "{},{},\"{}\",{},{}\n",
                r.j,
                r.shifted_j,
                exp.join(" "),
                r.degree,
                r.value
            ));
        }
        out
    }
}

fn require_generating(e: &ChoiceSet) -> Result<()> {
    if !e.generates_semigroup() {
        return Err(Error::Hypothesis("E does not generate the semigroup".into()));
    }
    Ok(())
}

/// Betti table from precomputed `T_m`.
pub fn betti_from_complexes(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    complexes: &[(GroupElement, Complex)],
    ch: Characteristic,
    bound: i64,
) -> BettiTable {
    let dims: Vec<Vec<usize>> = complexes.par_iter().map(|(_, t)| t.reduced_homology(ch).dims).collect();
    let mut entries: BTreeMap<usize, Vec<(GroupElement, usize)>> = BTreeMap::new();
    let mut last = i64::MIN;
    for ((m, _), d) in complexes.iter().zip(dims) {
        for (j, &b) in d.iter().enumerate() {
            if b > 0 {
                entries.entry(j).or_default().push((m.clone(), b));
                last = last.max(s.degree(m));
            }
        }
    }
    let window = e.elements().iter().map(|x| s.degree(x)).max().unwrap_or(0);
    BettiTable {
        characteristic: ch,
        bound,
        choice_size: e.len(),
        entries,
        window,
        stable: last <= bound - window,
    }
}

/// `β_{j,m} = h̃_{j-1}(T_m)` for every `m` with `λ(m) ≤ bound`.
pub fn betti_table(s: &ValidatedSemigroup, e: &ChoiceSet, ch: Characteristic, bound: i64) -> Result<BettiTable> {
    require_generating(e)?;
    let complexes = member_complexes(s, e, bound)?;
    Ok(betti_from_complexes(s, e, &complexes, ch, bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereWitness {
    pub m: Vec<i64>,
    pub j: Vec<Vec<i64>>,
    pub dimension: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthReport {
    pub characteristic: Characteristic,
    pub bound: i64,
    pub choice_size: usize,
    pub pd: usize,
    pub r: i64,
    /// An `m` with `h̃_{#E-r-1}(T_m) ≠ 0`.
    pub homology_witness: Vec<i64>,
    /// The relative duals were built (`#E ≤ DUAL_CHECK_LIMIT`).
    pub dual_checked: bool,
    /// An `m` with `h̃_{r-2}(T̄_m^∨) ≠ 0`.
    pub dual_witness: Option<Vec<i64>>,
    pub r_prime: i64,
    pub sphere_witness: Option<SphereWitness>,
    pub d: usize,
    pub cohen_macaulay: bool,
    pub d_finite: bool,
    /// Betti table and key sets both stable, so the bounds on `r` are
    /// asserted rather than only reported.
    pub conclusive: bool,
}

/// `r' = #E - k + 1` with `k` the largest `#J` such that `D^J ≠ ∅`;
/// `r' = #E` when `D = ∅`.
pub fn r_prime(k: &KeySets) -> i64 {
    let n = k.choice.len() as i64;
    match k.max_nonempty_size() {
        None => n,
        Some(top) => n - top as i64 + 1,
    }
}

fn depth_from(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    complexes: &[(GroupElement, Complex)],
    table: &BettiTable,
    keys: &KeySets,
) -> Result<DepthReport> {
    let ch = table.characteristic;
    let n = e.len() as i64;
    let pd = table
        .pd()
        .ok_or_else(|| Error::consistency("Betti table nonempty", "m = 0"))?;
    let r = n - pd as i64;
    let homology_witness = table.level(pd)[0].0.flat().to_vec();

    let dual_checked = e.len() <= DUAL_CHECK_LIMIT;
    let mut dual_witness = None;
    if dual_checked {
        let duals: Vec<(usize, usize)> = complexes
            .par_iter()
            .map(|(_, t)| {
                let h = t.relative_alexander_dual().reduced_homology(ch);
                (h.h(r - 3), h.h(r - 2))
            })
            .collect();
        if let Some(((m, _), _)) = complexes.iter().zip(&duals).find(|(_, (low, _))| *low != 0) {
            return Err(Error::consistency(
                format!("h~_{}(relative dual) = 0 for depth {r}", r - 3),
                m.to_string(),
            ));
        }
        match complexes.iter().zip(&duals).find(|(_, (_, top))| *top != 0) {
            Some(((m, _), _)) => dual_witness = Some(m.flat().to_vec()),
            None => {
                return Err(Error::consistency(
                    format!("h~_{}(relative dual) != 0 for depth {r}", r - 2),
                    "no witness".to_string(),
                ))
            }
        }
    }

    let rp = r_prime(keys);
    let k = n - rp - 1;
    let sphere_witness = complexes.iter().find_map(|(m, t)| {
        t.find_spheres(k).into_iter().next().map(|j| SphereWitness {
            m: m.flat().to_vec(),
            j: j.iter().map(|&i| e.elements()[i].flat().to_vec()).collect(),
            dimension: k,
        })
    });
    let d = s.dimension();
    let d_finite = keys.saturation.stable;
    // once D^E itself is nonempty no larger J exists, so r' is final
    let r_prime_final = d_finite || keys.max_nonempty_size() == Some(e.len() as u32);
    let conclusive = table.stable && r_prime_final;
    if conclusive {
        let fail = |check: &str| Err(Error::consistency(check, format!("r = {r}, r' = {rp}, d = {d}")));
        if r < 1 || r > d as i64 {
            return fail("1 <= r <= d");
        }
        if r < rp {
            return fail("r >= r'");
        }
        if sphere_witness.is_some() && r != rp {
            return fail("sphere witness implies r = r'");
        }
        if d_finite && r != rp {
            return fail("finite D implies r = r'");
        }
    }
    Ok(DepthReport {
        characteristic: ch,
        bound: table.bound,
        choice_size: e.len(),
        pd,
        r,
        homology_witness,
        dual_checked,
        dual_witness,
        r_prime: rp,
        sphere_witness,
        d,
        cohen_macaulay: r == d as i64,
        d_finite,
        conclusive,
    })
}

pub fn depth_report(s: &ValidatedSemigroup, e: &ChoiceSet, ch: Characteristic, bound: i64) -> Result<DepthReport> {
    require_generating(e)?;
    let complexes = member_complexes(s, e, bound)?;
    let table = betti_from_complexes(s, e, &complexes, ch, bound);
    let keys = compute_key_sets(s, e, bound)?;
    depth_from(s, e, &complexes, &table, &keys)
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub characteristic: Characteristic,
    pub bound: i64,
    pub numerator: Vec<crate::series::Term>,
    /// `p = Σ_j (-1)^j Σ_m β_{j,m} t^m`.
    pub numerator_betti_identity: bool,
    pub gorenstein: bool,
    pub g: Option<Vec<i64>>,
    /// `β_{j,m} = β_{pd-j, g-m}` for every entry; only checked when Gorenstein.
    pub symmetry_holds: Option<bool>,
    /// `p + (-1)^{#E+d-1} t^g p̄ = 0` with `g` the top exponent of `p`.
    pub functional_equation_holds: bool,
    pub ci: bool,
    pub ci_degrees: Vec<Vec<i64>>,
    /// `p = Π_{c∈C} (1 - t^c)`; only checked for a complete intersection.
    pub ci_product_holds: Option<bool>,
    pub frobenius: Option<Vec<i64>>,
    pub conductor: Option<i64>,
    pub conductor_brute_force: Option<i64>,
    pub cyclotomic_numerator_but_not_ci: bool,
}

/// Exponents `c` with `p = Π (1 - t^c)`, found by repeatedly dividing out
/// the lowest nonconstant term.
pub fn cyclotomic_factors(s: &ValidatedSemigroup, p: &Poly) -> Option<Vec<GroupElement>> {
    let grading = s.grading();
    let group = s.group();
    let mut rest = p.clone();
    let mut out = Vec::new();
    loop {
        let terms = rest.sorted_terms(grading);
        let (&(z, c0), tail) = terms.split_first()?;
        if !z.is_zero() || !c0.is_one() {
            return None;
        }
        let Some(&(c, coeff)) = tail.first() else {
            return Some(out);
        };
        if *coeff >= BigInt::zero() || s.degree(c) <= 0 {
            return None;
        }
        let c = c.clone();
        let top = rest.max_degree(grading)?;
        // rest / (1 - t^c) as a series up to the top degree, then check exactness
        let mut quotient = Poly::zero();
        for m in s.enumerate_up_to(top - s.degree(&c)).ok()? {
            let v = rest.coeff(&m) + quotient.coeff(&group.sub(&m, &c));
            if !v.is_zero() {
                quotient.add_term(m, v);
            }
        }
        if quotient.mul(&Poly::one_minus(group, &c), group) != rest {
            return None;
        }
        out.push(c);
        rest = quotient;
    }
}

/// Least `c` with `c + N ⊆ S`, for numerical semigroups with coprime
/// generators.
pub fn brute_force_conductor(s: &ValidatedSemigroup) -> Option<i64> {
    let group = s.group();
    if group.free_rank() != 1 || !group.torsion_orders().is_empty() {
        return None;
    }
    let gens: Vec<i64> = s.generators().iter().map(|g| g.free()[0]).collect();
    if gens.iter().any(|&g| g <= 0) || gens.iter().fold(0, |a, &b| a.gcd(&b)) != 1 {
        return None;
    }
    let smallest = *gens.iter().min()?;
    let (mut run, mut n) = (0, 0);
    while run < smallest {
        if s.is_member(&group.element(&[n]).ok()?) {
            run += 1;
        } else {
            run = 0;
        }
        n += 1;
    }
    Some(n - smallest)
}

fn structure_from(s: &ValidatedSemigroup, e: &ChoiceSet, table: &BettiTable, r: i64, p: &Poly) -> StructureReport {
    let group = s.group();
    let grading = s.grading();
    let d = s.dimension();
    let n = e.len();
    let identity = table.alternating_sum() == *p;

    let pd = table.pd().unwrap_or(0);
    let top = table.level(pd);
    let gorenstein = top.len() == 1 && top[0].1 == 1 && r == d as i64;
    let g = gorenstein.then(|| top[0].0.clone());
    let symmetry_holds = g.as_ref().map(|g| {
        (0..=pd).all(|j| {
            table
                .level(j)
                .iter()
                .all(|(m, b)| table.get(pd - j, &group.sub(g, m)) == *b)
        })
    });

    let functional_equation_holds = match p.sorted_terms(grading).last() {
        Some((top_exp, _)) if p.max_degree(grading).is_some() => {
            let top_exp = (*top_exp).clone();
            let unique = p.terms().filter(|(m, _)| s.degree(m) == s.degree(&top_exp)).count() == 1;
            let shifted = p.bar(group).shift(&top_exp, group);
            let lhs = if (n + d - 1).is_multiple_of(2) {
                p.add(&shifted)
            } else {
                p.sub(&shifted)
            };
            unique && lhs.is_zero()
        }
        _ => false,
    };

    let beta1 = table.level(1);
    let b1: usize = beta1.iter().map(|(_, b)| b).sum();
    let ci = n >= d && b1 == n - d;
    let degrees: Vec<GroupElement> = if ci {
        beta1
            .iter()
            .flat_map(|(m, b)| std::iter::repeat_n(m.clone(), *b))
            .collect()
    } else {
        Vec::new()
    };
    let ci_product_holds = ci.then(|| {
        let prod = degrees
            .iter()
            .fold(Poly::one(group), |acc, c| acc.mul(&Poly::one_minus(group, c), group));
        prod == *p
    });
    let (frobenius, conductor) = if ci && d == 1 {
        let f = group.sub(&group.sum(&degrees), e.sum());
        let c = (group.free_rank() == 1 && group.torsion_orders().is_empty()).then(|| f.free()[0] + 1);
        (Some(f.flat().to_vec()), c)
    } else {
        (None, None)
    };
    let conductor_brute_force = if d == 1 { brute_force_conductor(s) } else { None };
    let cyclotomic_numerator_but_not_ci = !ci && b1 > n.saturating_sub(d) && cyclotomic_factors(s, p).is_some();

    StructureReport {
        characteristic: table.characteristic,
        bound: table.bound,
        numerator: p.to_json(grading),
        numerator_betti_identity: identity,
        gorenstein,
        g: g.map(|g| g.flat().to_vec()),
        symmetry_holds,
        functional_equation_holds,
        ci,
        ci_degrees: degrees.iter().map(|c| c.flat().to_vec()).collect(),
        ci_product_holds,
        frobenius,
        conductor,
        conductor_brute_force,
        cyclotomic_numerator_but_not_ci,
    }
}

pub fn structure_report(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    ch: Characteristic,
    bound: i64,
) -> Result<StructureReport> {
    require_generating(e)?;
    let complexes = member_complexes(s, e, bound)?;
    let table = betti_from_complexes(s, e, &complexes, ch, bound);
    let keys = compute_key_sets(s, e, bound)?;
    let depth = depth_from(s, e, &complexes, &table, &keys)?;
    let p = numerator_from(&complexes);
    Ok(structure_from(s, e, &table, depth.r, &p))
}

fn numerator_from(complexes: &[(GroupElement, Complex)]) -> Poly {
    Poly::from_terms(
        complexes
            .iter()
            .map(|(m, t)| (m.clone(), BigInt::from(-t.euler_char()))),
    )
}

/// `P^h = 1 - Σ_{j≥0} Σ_m b_{j,m} v^j t^m` with `b_{j,m} = β_{j+1,m}`.
pub fn syzygy_series(table: &BettiTable, s: &ValidatedSemigroup) -> BivariatePoly {
    let mut ph = BivariatePoly::default();
    ph.add_term(0, s.group().zero(), BigInt::one());
    for (&j, v) in &table.entries {
        if j == 0 {
            continue;
        }
        for (m, b) in v {
            ph.add_term(j as u32 - 1, m.clone(), -BigInt::from(*b));
        }
    }
    ph
}

/// Everything the `betti`, `depth` and `structure` commands report, from a
/// single pass of `T_m` construction.
#[derive(Clone, Debug)]
pub struct ResolutionBundle {
    pub table: BettiTable,
    pub depth: DepthReport,
    pub structure: StructureReport,
    pub syzygy: BivariatePoly,
}

pub fn analyze(
    s: &ValidatedSemigroup,
    e: &ChoiceSet,
    chars: &[Characteristic],
    bound: i64,
) -> Result<Vec<ResolutionBundle>> {
    require_generating(e)?;
    let complexes = member_complexes(s, e, bound)?;
    let keys = compute_key_sets(s, e, bound)?;
    let p = numerator_from(&complexes);
    chars
        .iter()
        .map(|&ch| {
            let table = betti_from_complexes(s, e, &complexes, ch, bound);
            let depth = depth_from(s, e, &complexes, &table, &keys)?;
            let structure = structure_from(s, e, &table, depth.r, &p);
            let syzygy = syzygy_series(&table, s);
            Ok(ResolutionBundle {
                table,
                depth,
                structure,
                syzygy,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{validate, SemigroupPresentation};

    fn numerical(g: &[i64]) -> (ValidatedSemigroup, ChoiceSet) {
        let s = validate(&SemigroupPresentation::numerical(g).unwrap()).unwrap();
        let e = ChoiceSet::generators(&s).unwrap();
        (s, e)
    }

    fn degrees(t: &BettiTable, j: usize) -> Vec<i64> {
        t.level(j).iter().map(|(m, _)| m.flat()[0]).collect()
    }

    #[test]
    fn betti_examples() {
        let (s, e) = numerical(&[2, 3]);
        let t = betti_table(&s, &e, Characteristic::ZERO, 30).unwrap();
        assert_eq!(t.totals(), vec![1, 1]);
        assert_eq!(degrees(&t, 1), vec![6]);
        assert_eq!(t.pd(), Some(1));

        let (s, e) = numerical(&[3, 4, 5]);
        let t = betti_table(&s, &e, Characteristic::ZERO, 40).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(degrees(&t, 1), vec![8, 9, 10]);
        assert_eq!(degrees(&t, 2), vec![13, 14]);
        assert!(t.stable);

        let (s, e) = numerical(&[1]);
        let t = betti_table(&s, &e, Characteristic::ZERO, 10).unwrap();
        assert_eq!(t.totals(), vec![1]);
    }

    #[test]
    fn betti_needs_generating_choice() {
        let (s, _) = numerical(&[3, 4, 5]);
        let e = ChoiceSet::from_indices(&s, &[0, 1]).unwrap();
        assert!(matches!(
            betti_table(&s, &e, Characteristic::ZERO, 20),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn depth_examples() {
        let (s, e) = numerical(&[3, 4, 5]);
        let r = depth_report(&s, &e, Characteristic::ZERO, 40).unwrap();
        assert_eq!((r.r, r.d, r.r_prime), (1, 1, 1));
        assert!(r.cohen_macaulay && r.conclusive && r.dual_checked);
        let w = r.sphere_witness.unwrap();
        assert_eq!(w.m, vec![13]);
        assert_eq!(w.j, vec![vec![3], vec![4], vec![5]]);

        let (s, e) = numerical(&[2, 3]);
        let r = depth_report(&s, &e, Characteristic::new(2).unwrap(), 30).unwrap();
        assert_eq!((r.r, r.r_prime), (1, 1));
        assert_eq!(r.sphere_witness.unwrap().m, vec![6]);
    }

    #[test]
    fn structure_examples() {
        let (s, e) = numerical(&[2, 3]);
        let r = structure_report(&s, &e, Characteristic::ZERO, 30).unwrap();
        assert!(r.gorenstein && r.ci && r.functional_equation_holds && r.numerator_betti_identity);
        assert_eq!(r.g, Some(vec![6]));
        assert_eq!(r.ci_degrees, vec![vec![6]]);
        assert_eq!(
            (r.frobenius, r.conductor, r.conductor_brute_force),
            (Some(vec![1]), Some(2), Some(2))
        );
        assert_eq!(r.symmetry_holds, Some(true));

        let (s, e) = numerical(&[3, 4, 5]);
        let r = structure_report(&s, &e, Characteristic::ZERO, 40).unwrap();
        assert!(!r.gorenstein && !r.ci && !r.functional_equation_holds);
        assert_eq!(r.conductor_brute_force, Some(3));

        let (s, e) = numerical(&[3, 5]);
        let r = structure_report(&s, &e, Characteristic::ZERO, 40).unwrap();
        assert!(r.ci && r.ci_product_holds == Some(true));
        assert_eq!(r.ci_degrees, vec![vec![15]]);
        assert_eq!((r.conductor, r.conductor_brute_force), (Some(8), Some(8)));
    }

    #[test]
    fn syzygy_series_evaluates_to_numerator() {
        let (s, e) = numerical(&[3, 4, 5]);
        let t = betti_table(&s, &e, Characteristic::ZERO, 40).unwrap();
        let ph = syzygy_series(&t, &s);
        let z = |x| s.group().element(&[x]).unwrap();
        assert_eq!(ph.coeff(0, &z(8)), BigInt::from(-1));
        assert_eq!(ph.coeff(1, &z(13)), BigInt::from(-1));
        assert_eq!(ph.eval_minus_one(), t.alternating_sum());

        let (s, e) = numerical(&[1]);
        let t = betti_table(&s, &e, Characteristic::ZERO, 10).unwrap();
        assert_eq!(syzygy_series(&t, &s).eval_minus_one(), Poly::one(s.group()));
    }

    #[test]
    fn cyclotomic_detection() {
        let (s, _) = numerical(&[2, 3]);
        let z = |x| s.group().element(&[x]).unwrap();
        let p = Poly::one_minus(s.group(), &z(4)).mul(&Poly::one_minus(s.group(), &z(6)), s.group());
        assert_eq!(cyclotomic_factors(&s, &p), Some(vec![z(4), z(6)]));
        let q = Poly::one(s.group())
            .sub(&Poly::monomial(z(4), BigInt::from(1)))
            .add(&Poly::monomial(z(5), BigInt::from(1)));
        assert_eq!(cyclotomic_factors(&s, &q), None);
    }
}
