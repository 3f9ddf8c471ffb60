#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use poincare_semigroup::error::Error;
use poincare_semigroup::keysets::compute_key_sets;
use poincare_semigroup::poincare::{
    corollary_identity, extended_choice, small_choice_numerator, verify_rational_form, Method,
};
use poincare_semigroup::semigroup::PresentationFile;
use poincare_semigroup::{validate, Characteristic, ChoiceSet, Complex, SemigroupPresentation, ValidatedSemigroup};

pub const SAMPLE_BOUND: i64 = 25;

pub fn chars() -> [Characteristic; 3] {
    [
        Characteristic::ZERO,
        Characteristic::new(2).unwrap(),
        Characteristic::new(3).unwrap(),
    ]
}

/// Random downward-closed complexes on at most 8 vertices, including the
/// void complex (no facets) and `{∅}` (facet 0).
pub fn complex_strategy() -> impl Strategy<Value = Complex> {
    (1usize..=8)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u32..(1 << n), 0..7)))
        .prop_map(|(n, facets)| {
            let labels = (0..n).map(|i| format!("v{i}")).collect();
            Complex::from_facets(labels, &facets).unwrap()
        })
}

pub fn check_duality(t: &Complex) -> Result<(), TestCaseError> {
    let n = t.ground_size() as i64;
    let rel = t.relative_alexander_dual();
    prop_assert_eq!(&rel.relative_alexander_dual(), t);

    let supp = t.support();
    let chi = t.euler_char();
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    prop_assert_eq!(-chi, sign(n) * rel.euler_char());
    if !t.is_void() {
        let dual_chi = if supp == 0 {
            1
        } else {
            t.alexander_dual().unwrap().euler_char()
        };
        prop_assert_eq!(-chi, sign(supp.count_ones() as i64) * dual_chi);
    }
    if supp != 0 {
        let dual = t.alexander_dual().unwrap();
        let k = supp.count_ones() as i64;
        prop_assert!(t.dimension().unwrap() < k);
        if let Some(dim) = dual.dimension() {
            prop_assert!(dim <= k - 3);
        }
        // T^∨ is the link of E \ E' in the relative dual
        let outside = t.full_mask() & !supp;
        let positions: Vec<usize> = (0..t.ground_size()).filter(|i| supp >> i & 1 == 1).collect();
        for &f in dual.faces() {
            let lifted = (0..positions.len())
                .filter(|j| f >> j & 1 == 1)
                .fold(0u32, |acc, j| acc | 1 << positions[j]);
            prop_assert!(rel.contains(lifted | outside));
        }
        let linked = rel.faces().iter().filter(|&&f| f & outside == outside).count();
        prop_assert_eq!(linked, dual.faces().len());
    }
    for ch in chars() {
        let h = t.reduced_homology(ch);
        let hd = rel.reduced_homology(ch);
        for l in -1..n {
            prop_assert_eq!(hd.h(l), h.h(n - l - 3), "char {} l {}", ch.value(), l);
        }
        prop_assert_eq!(h.euler_char(), chi);
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub rank: usize,
    pub gens: Vec<Vec<i64>>,
    pub choice: Vec<usize>,
}

/// Three to five generators in Z or Z^2 with positive first coordinate,
/// entries bounded by 4 in rank two, and a choice of one to four of them.
pub fn sample_strategy() -> impl Strategy<Value = Sample> {
    let one = prop::collection::vec(prop::collection::vec(1i64..=9, 1), 3..=5).prop_map(|g| (1usize, g));
    let two =
        prop::collection::vec((1i64..=4, -4i64..=4).prop_map(|(a, b)| vec![a, b]), 3..=5).prop_map(|g| (2usize, g));
    prop_oneof![one, two]
        .prop_map(|(rank, mut gens)| {
            gens.sort();
            gens.dedup();
            (rank, gens)
        })
        .prop_flat_map(|(rank, gens)| {
            let n = gens.len();
            (
                Just(rank),
                Just(gens),
                prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(4)),
            )
        })
        .prop_map(|(rank, gens, choice)| Sample { rank, gens, choice })
}

fn build(sample: &Sample) -> Option<(ValidatedSemigroup, ChoiceSet)> {
    let p = SemigroupPresentation::from_flat(sample.rank, vec![], &sample.gens).ok()?;
    let mut s = validate(&p).ok()?;
    s.set_budget(100_000);
    let e = ChoiceSet::from_indices(&s, &sample.choice).ok()?;
    Some((s, e))
}

/// Runs every numerator identity on one sample. `Ok(false)` means the
/// sample was skipped (budget exceeded or no second choice available).
pub fn check_presentation(sample: &Sample) -> Result<bool, TestCaseError> {
    let fail = |err: Error| TestCaseError::fail(format!("{sample:?}: {err}"));
    let Some((s, e)) = build(sample) else { return Ok(false) };
    let e2 = match extended_choice(&s, &e) {
        Ok(x) => x,
        Err(Error::Input(_)) => return Ok(false),
        Err(err) => return Err(fail(err)),
    };
    let report = match verify_rational_form(&s, &e, Some(&e2), SAMPLE_BOUND) {
        Err(Error::Budget { .. }) => return Ok(false),
        other => other.map_err(fail)?,
    };
    let p = report.numerator();
    for m in Method::ALL {
        prop_assert_eq!(&report.numerators[&m], p);
    }
    prop_assert!(report.cross_identity.is_some());
    if SAMPLE_BOUND >= s.degree(e.sum()) {
        let c = corollary_identity(&s, &e, SAMPLE_BOUND).map_err(fail)?;
        prop_assert!(c.holds);
    }
    let k = compute_key_sets(&s, &e, SAMPLE_BOUND).map_err(fail)?;
    if let Some(small) = small_choice_numerator(&s, &k) {
        prop_assert_eq!(&small, p);
    }
    let round: PresentationFile =
        serde_json::from_str(&serde_json::to_string(&s.presentation().to_file()).unwrap()).unwrap();
    prop_assert_eq!(&SemigroupPresentation::from_file(&round).unwrap(), s.presentation());
    Ok(true)
}
