//! Finitely generated positive semigroups inside `Z^d x T`.
//!
//! A [`ValidatedSemigroup`] carries a strictly positive grading found by an
//! exact linear program, a memoized membership oracle and a cached graded
//! enumeration. Membership below the cached enumeration bound is a set
//! lookup; above it the memoized recursion takes over.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AmbientGroup, Grading, GroupElement};
use crate::lp::{self, rat, LpOutcome};
use crate::simplicial::Complex;

pub const DEFAULT_MEMO_CAP: usize = 1_000_000;
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Largest admissible choice set; subsets of `E` are stored as `u32` masks.
pub const MAX_CHOICE: usize = 24;

/// On-disk form of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion_orders: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupPresentation {
    ambient: AmbientGroup,
    generators: Vec<GroupElement>,
}

impl SemigroupPresentation {
    pub fn new(ambient: AmbientGroup, generators: Vec<GroupElement>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::input("a presentation needs at least one generator"));
        }
        for g in &generators {
            if !ambient.contains(g) {
                return Err(Error::input(format!("generator {g} is not in the ambient group")));
            }
            if g.is_zero() {
                return Err(Error::input("the zero element cannot be a generator"));
            }
        }
        Ok(Self { ambient, generators })
    }

    /// Convenience constructor for numerical semigroups `<a_1, ..., a_k>` in `Z`.
    pub fn numerical(gens: &[i64]) -> Result<Self> {
        let ambient = AmbientGroup::free(1);
        let generators = gens.iter().map(|&a| ambient.element(&[a])).collect::<Result<_>>()?;
        Self::new(ambient, generators)
    }

    pub fn from_flat(free_rank: usize, torsion_orders: Vec<i64>, gens: &[Vec<i64>]) -> Result<Self> {
        let ambient = AmbientGroup::new(free_rank, torsion_orders)?;
        let generators = gens.iter().map(|g| ambient.element(g)).collect::<Result<_>>()?;
        Self::new(ambient, generators)
    }

    pub fn from_file(file: &PresentationFile) -> Result<Self> {
        Self::from_flat(file.free_rank, file.torsion_orders.clone(), &file.generators)
    }

    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            free_rank: self.ambient.free_rank(),
            torsion_orders: self.ambient.torsion_orders().to_vec(),
            generators: self.generators.iter().map(|g| g.flat().to_vec()).collect(),
        }
    }

    pub fn ambient(&self) -> &AmbientGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    fn deduplicated(&self) -> Self {
        let mut seen = HashSet::new();
        let generators = self
            .generators
            .iter()
            .filter(|g| seen.insert((*g).clone()))
            .cloned()
            .collect();
        Self {
            ambient: self.ambient.clone(),
            generators,
        }
    }
}

/// Members of `S` of degree at most `bound`, in canonical order.
#[derive(Debug)]
pub struct Enumeration {
    bound: i64,
    members: Vec<GroupElement>,
    set: HashSet<GroupElement>,
}

impl Enumeration {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.set.contains(g)
    }
}

#[derive(Debug)]
pub struct ValidatedSemigroup {
    presentation: SemigroupPresentation,
    grading: Grading,
    generator_degrees: Vec<i64>,
    min_degree: i64,
    memo: RwLock<HashMap<GroupElement, bool>>,
    memo_cap: usize,
    budget: usize,
    enumerated: RwLock<Option<Arc<Enumeration>>>,
}

/// Finds a strictly positive grading, or explains why none exists.
pub fn validate(p: &SemigroupPresentation) -> Result<ValidatedSemigroup> {
    let p = p.deduplicated();
    let n = p.generators.len();
    let d = p.ambient.free_rank();

    if let Some((i, g)) = p
        .generators
        .iter()
        .enumerate()
        .find(|(_, g)| g.free().iter().all(|&c| c == 0))
    {
        let order = g
            .torsion()
            .iter()
            .zip(p.ambient.torsion_orders())
            .filter(|(&c, _)| c != 0)
            .map(|(&c, &t)| t / c.gcd(&t))
            .fold(1i64, |acc, k| acc.lcm(&k));
        let mut cert = vec![0; n];
        cert[i] = order;
        return Err(Error::Positivity {
            reason: format!("generator {g} has zero free part, so {order}*{g} = 0"),
            certificate: Some(cert),
        });
    }

    // lambda = plus - minus; rows: lambda . g_i - s_i = 1; minimize lambda . sum(g)
    let mut rows = Vec::with_capacity(n);
    for (i, g) in p.generators.iter().enumerate() {
        let mut row = Vec::with_capacity(2 * d + n);
        row.extend(g.free().iter().map(|&c| rat(c)));
        row.extend(g.free().iter().map(|&c| rat(-c)));
        row.extend((0..n).map(|k| rat(if k == i { -1 } else { 0 })));
        rows.push(row);
    }
    let total: Vec<i64> = (0..d).map(|j| p.generators.iter().map(|g| g.free()[j]).sum()).collect();
    let mut cost: Vec<BigRational> = total.iter().map(|&c| rat(c)).collect();
    cost.extend(total.iter().map(|&c| rat(-c)));
    cost.extend((0..n).map(|_| BigRational::zero()));
    let ones = vec![rat(1); n];

    match lp::solve(&rows, &ones, Some(&cost)) {
        LpOutcome::Optimal(x) => {
            let lambda: Vec<BigRational> = (0..d).map(|j| &x[j] - &x[d + j]).collect();
            let ints = lp::clear_denominators(&lambda);
            let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            let weights = ints
                .iter()
                .map(|v| {
                    (v / &g)
                        .to_i64()
                        .ok_or_else(|| Error::input("grading does not fit in i64"))
                })
                .collect::<Result<Vec<_>>>()?;
            ValidatedSemigroup::with_grading(p, weights)
        }
        _ => Err(positivity_certificate(&p)),
    }
}

fn positivity_certificate(p: &SemigroupPresentation) -> Error {
    let n = p.generators.len();
    let d = p.ambient.free_rank();
    // y >= 0, sum y_i g_i = 0 on the free part, sum y_i = 1
    let mut rows: Vec<Vec<BigRational>> = (0..d)
        .map(|j| p.generators.iter().map(|g| rat(g.free()[j])).collect())
        .collect();
    rows.push(vec![rat(1); n]);
    let mut b = vec![BigRational::zero(); d];
    b.push(rat(1));
    let certificate = match lp::solve(&rows, &b, None) {
        LpOutcome::Optimal(y) => lp::clear_denominators(&y).iter().map(|v| v.to_i64()).collect(),
        _ => None,
    };
    Error::Positivity {
        reason: "no strictly positive grading exists; a nonnegative combination of generators has zero free part"
            .into(),
        certificate,
    }
}

impl ValidatedSemigroup {
    /// Accepts a caller-supplied grading after checking `lambda(g) >= 1` on every generator.
    pub fn with_grading(p: SemigroupPresentation, weights: Vec<i64>) -> Result<Self> {
        let p = p.deduplicated();
        let grading = Grading::new(p.ambient.clone(), weights)?;
        let generator_degrees: Vec<i64> = p.generators.iter().map(|g| grading.degree(g)).collect();
        if let Some((g, _)) = p.generators.iter().zip(&generator_degrees).find(|(_, &l)| l < 1) {
            return Err(Error::Positivity {
                reason: format!("grading {:?} is not positive on generator {g}", grading.weights()),
                certificate: None,
            });
        }
        let min_degree = *generator_degrees.iter().min().expect("nonempty");
        let mut memo = HashMap::new();
        memo.insert(p.ambient.zero(), true);
        Ok(Self {
            presentation: p,
            grading,
            generator_degrees,
            min_degree,
            memo: RwLock::new(memo),
            memo_cap: DEFAULT_MEMO_CAP,
            budget: DEFAULT_BUDGET,
            enumerated: RwLock::new(None),
        })
    }

    pub fn set_budget(&mut self, budget: usize) {
        self.budget = budget;
    }

    pub fn set_memo_cap(&mut self, cap: usize) {
        self.memo_cap = cap;
    }

    pub fn presentation(&self) -> &SemigroupPresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.presentation.generators
    }

    pub fn group(&self) -> &AmbientGroup {
        &self.presentation.ambient
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn degree(&self, g: &GroupElement) -> i64 {
        self.grading.degree(g)
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.generator_degrees
    }

    pub fn max_generator_degree(&self) -> i64 {
        *self.generator_degrees.iter().max().expect("nonempty")
    }

    /// Rank of the group generated by `S`, i.e. the dimension `d`.
    pub fn dimension(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.generators().iter().map(|g| g.free().to_vec()).collect();
        crate::linalg::rational_rank(&rows)
    }

    pub fn is_member(&self, g: &GroupElement) -> bool {
        if g.is_zero() {
            return true;
        }
        let deg = self.degree(g);
        if deg < self.min_degree {
            return false;
        }
        if let Some(e) = self.enumerated.read().expect("poisoned").as_ref() {
            if deg <= e.bound {
                return e.contains(g);
            }
        }
        if let Some(&known) = self.memo.read().expect("poisoned").get(g) {
            return known;
        }
        let group = self.group();
        let found = self.generators().iter().any(|gen| self.is_member(&group.sub(g, gen)));
        let mut memo = self.memo.write().expect("poisoned");
        if memo.len() < self.memo_cap {
            memo.insert(g.clone(), found);
        }
        found
    }

    /// Membership through the memoized recursion only, ignoring the
    /// enumeration cache.
    pub fn is_member_uncached(&self, g: &GroupElement) -> bool {
        fn go(s: &ValidatedSemigroup, g: &GroupElement, memo: &mut HashMap<GroupElement, bool>) -> bool {
            if g.is_zero() {
                return true;
            }
            if s.degree(g) < s.min_degree {
                return false;
            }
            if let Some(&b) = memo.get(g) {
                return b;
            }
            let found = s.generators().iter().any(|gen| go(s, &s.group().sub(g, gen), memo));
            memo.insert(g.clone(), found);
            found
        }
        go(self, g, &mut HashMap::new())
    }

    /// The members of degree at most `bound`, computed once and cached.
    pub fn member_table(&self, bound: i64) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.enumerated.read().expect("poisoned").as_ref() {
            if e.bound >= bound {
                return Ok(e.clone());
            }
        }
        let group = self.group();
        let zero = group.zero();
        let mut set: HashSet<GroupElement> = HashSet::new();
        let mut frontier = Vec::new();
        if bound >= 0 {
            set.insert(zero.clone());
            frontier.push(zero);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for (gen, &l) in self.generators().iter().zip(&self.generator_degrees) {
                    if self.degree(x) + l > bound {
                        continue;
                    }
                    let y = group.add(x, gen);
                    if set.insert(y.clone()) {
                        if set.len() > self.budget {
                            return Err(Error::Budget { limit: self.budget });
                        }
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut members: Vec<GroupElement> = set.iter().cloned().collect();
        self.grading.sort(&mut members);
        let e = Arc::new(Enumeration { bound, members, set });
        *self.enumerated.write().expect("poisoned") = Some(e.clone());
        Ok(e)
    }

    /// Members `m` with `lambda(m) <= bound`, sorted by degree then lexicographically.
    pub fn enumerate_up_to(&self, bound: i64) -> Result<Vec<GroupElement>> {
        let table = self.member_table(bound)?;
        Ok(table
            .members()
            .iter()
            .take_while(|m| self.degree(m) <= bound)
            .cloned()
            .collect())
    }
}

/// A nonempty finite subset `E` of `S \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceSet {
    elements: Vec<GroupElement>,
    sum: GroupElement,
    generates_cone: bool,
    generates_semigroup: bool,
}

impl ChoiceSet {
    pub fn new(s: &ValidatedSemigroup, elements: Vec<GroupElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::input("the choice set E must be nonempty"));
        }
        if elements.len() > MAX_CHOICE {
            return Err(Error::input(format!(
                "the choice set E has more than {MAX_CHOICE} elements"
            )));
        }
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(Error::input(format!("element {e} repeated in E")));
            }
            if e.is_zero() {
                return Err(Error::input("E may not contain 0"));
            }
            if !s.group().contains(e) || !s.is_member(e) {
                return Err(Error::Membership(e.to_string()));
            }
        }
        let sum = s.group().sum(&elements);
        let generates_cone = cone_generates(s, &elements);
        let generates_semigroup = semigroup_generates(s, &elements)?;
        Ok(Self {
            elements,
            sum,
            generates_cone,
            generates_semigroup,
        })
    }

    /// `E` equal to the full generator list.
    pub fn generators(s: &ValidatedSemigroup) -> Result<Self> {
        Self::new(s, s.generators().to_vec())
    }

    /// Picks generators by index.
    pub fn from_indices(s: &ValidatedSemigroup, indices: &[usize]) -> Result<Self> {
        let gens = s.generators();
        let elements = indices
            .iter()
            .map(|&i| {
                gens.get(i)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("generator index {i} out of range")))
            })
            .collect::<Result<_>>()?;
        Self::new(s, elements)
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

    /// `e_E`, the sum of all elements.
    pub fn sum(&self) -> &GroupElement {
        &self.sum
    }

    /// `e_J` for the subset encoded by `mask`.
    pub fn subset_sum(&self, group: &AmbientGroup, mask: u32) -> GroupElement {
        group.sum(
            self.elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e),
        )
    }

    pub fn full_mask(&self) -> u32 {
        if self.elements.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.elements.len()) - 1
        }
    }

    pub fn generates_cone(&self) -> bool {
        self.generates_cone
    }

    pub fn generates_semigroup(&self) -> bool {
        self.generates_semigroup
    }
}

/// True iff every generator's free part is a nonnegative rational
/// combination of the free parts of `E`.
pub fn cone_generates(s: &ValidatedSemigroup, e: &[GroupElement]) -> bool {
    let d = s.group().free_rank();
    let rows: Vec<Vec<BigRational>> = (0..d).map(|j| e.iter().map(|x| rat(x.free()[j])).collect()).collect();
    s.generators().iter().all(|g| {
        let b: Vec<BigRational> = g.free().iter().map(|&c| rat(c)).collect();
        matches!(lp::solve(&rows, &b, None), LpOutcome::Optimal(_))
    })
}

/// True iff every generator of `S` lies in the subsemigroup generated by `E`.
pub fn semigroup_generates(s: &ValidatedSemigroup, e: &[GroupElement]) -> Result<bool> {
    let sub = SemigroupPresentation::new(s.group().clone(), e.to_vec())?;
    let sub = ValidatedSemigroup::with_grading(sub, s.grading().weights().to_vec())?;
    Ok(s.generators().iter().all(|g| sub.is_member_uncached(g)))
}

/// Realizes a simplicial complex `T` with full support as `T_m` of a
/// semigroup in `Z^{n+1}`: unit vectors for the vertices and one generator
/// `(1_F, 1)` per facet `F`, with `m = (1, ..., 1)` and `E` all generators.
pub fn realize_complex(t: &Complex) -> Result<(ValidatedSemigroup, GroupElement, ChoiceSet)> {
    let n = t.ground_size();
    if n == 0 {
        return Err(Error::InvalidComplex("the ground set is empty".into()));
    }
    if let Some(v) = (0..n).find(|&v| !t.contains(1 << v)) {
        return Err(Error::InvalidComplex(format!("vertex {} is not a face", t.labels()[v])));
    }
    if t.contains(t.full_mask()) {
        return Err(Error::InvalidComplex("the complex is the full simplex".into()));
    }
    let ambient = AmbientGroup::free(n + 1);
    let mut gens: Vec<GroupElement> = (0..n).map(|i| ambient.unit(i)).collect();
    for facet in t.facets() {
        let mut flat = vec![0i64; n + 1];
        for (i, c) in flat.iter_mut().enumerate().take(n) {
            *c = i64::from(facet >> i & 1);
        }
        flat[n] = 1;
        gens.push(ambient.element(&flat)?);
    }
    let m = ambient.element(&vec![1; n + 1])?;
    let s = validate(&SemigroupPresentation::new(ambient, gens)?)?;
    let e = ChoiceSet::generators(&s)?;
    Ok((s, m, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerical(g: &[i64]) -> ValidatedSemigroup {
        validate(&SemigroupPresentation::numerical(g).unwrap()).unwrap()
    }

    fn torsion_example() -> ValidatedSemigroup {
        let p = SemigroupPresentation::from_flat(1, vec![2], &[vec![1, 0], vec![1, 1]]).unwrap();
        validate(&p).unwrap()
    }

    fn el(s: &ValidatedSemigroup, flat: &[i64]) -> GroupElement {
        s.group().element(flat).unwrap()
    }

    #[test]
    fn identity_grading_on_numerical() {
        let s = numerical(&[2, 3]);
        assert_eq!(s.grading().weights(), &[1]);
        assert_eq!(s.generator_degrees(), &[2, 3]);
    }

    #[test]
    fn torsion_grading() {
        let s = torsion_example();
        assert_eq!(s.grading().weights(), &[1]);
    }

    #[test]
    fn grading_in_rank_two() {
        let p = SemigroupPresentation::from_flat(2, vec![], &[vec![1, 0], vec![0, 1], vec![-1, 2]]).unwrap();
        let s = validate(&p).unwrap();
        assert!(s.generator_degrees().iter().all(|&l| l >= 1));
        // brute force: (1,1) is the smallest functional positive on all three
        assert_eq!(s.grading().weights(), &[1, 1]);
    }

    #[test]
    fn duplicates_are_removed() {
        let s = numerical(&[2, 3, 2]);
        assert_eq!(s.generators().len(), 2);
    }

    #[test]
    fn pure_torsion_rejected() {
        let p = SemigroupPresentation::from_flat(1, vec![3], &[vec![1, 0], vec![0, 1]]).unwrap();
        match validate(&p) {
            Err(Error::Positivity { certificate, .. }) => assert_eq!(certificate, Some(vec![0, 3])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_positive_has_certificate() {
        let p = SemigroupPresentation::from_flat(2, vec![], &[vec![1, 1], vec![-1, -1], vec![0, 1]]).unwrap();
        match validate(&p) {
            Err(Error::Positivity {
                certificate: Some(c), ..
            }) => {
                assert!(c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0));
                let gens = [[1, 1], [-1, -1], [0, 1]];
                for j in 0..2 {
                    assert_eq!(c.iter().zip(&gens).map(|(x, g)| x * g[j]).sum::<i64>(), 0);
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn membership_examples() {
        let s = numerical(&[2, 3]);
        assert!(!s.is_member(&el(&s, &[1])));
        let s = numerical(&[3, 4, 5]);
        assert!(s.is_member(&el(&s, &[7])));
        assert!(!s.is_member(&el(&s, &[2])));
        let t = torsion_example();
        assert!(t.is_member(&el(&t, &[2, 1])));
        assert!(!t.is_member(&el(&t, &[0, 1])));
        assert!(!t.is_member(&el(&t, &[-1, 0])));
    }

    #[test]
    fn enumeration_examples() {
        let s = numerical(&[2, 3]);
        let v: Vec<i64> = s.enumerate_up_to(5).unwrap().iter().map(|g| g.flat()[0]).collect();
        assert_eq!(v, vec![0, 2, 3, 4, 5]);
        let s = numerical(&[3, 4, 5]);
        assert_eq!(s.enumerate_up_to(2).unwrap().len(), 1);
        let t = torsion_example();
        let v: Vec<Vec<i64>> = t
            .enumerate_up_to(2)
            .unwrap()
            .iter()
            .map(|g| g.flat().to_vec())
            .collect();
        assert_eq!(v, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]);
    }

    #[test]
    fn enumeration_budget() {
        let mut s = numerical(&[1]);
        s.set_budget(5);
        assert!(matches!(s.enumerate_up_to(10), Err(Error::Budget { limit: 5 })));
    }

    #[test]
    fn smaller_bound_after_larger_is_a_prefix() {
        let s = numerical(&[3, 5]);
        let big = s.enumerate_up_to(20).unwrap();
        let small = s.enumerate_up_to(9).unwrap();
        assert_eq!(&big[..small.len()], &small[..]);
        assert!(small.iter().all(|m| s.degree(m) <= 9));
    }

    #[test]
    fn cone_examples() {
        let s = numerical(&[3, 4, 5]);
        assert!(cone_generates(&s, &[el(&s, &[3])]));
        let p = SemigroupPresentation::from_flat(2, vec![], &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let s = validate(&p).unwrap();
        assert!(!cone_generates(&s, &[el(&s, &[1, 1])]));
        assert!(cone_generates(&s, &[el(&s, &[1, 0]), el(&s, &[0, 1])]));
    }

    #[test]
    fn semigroup_generation_examples() {
        let s = numerical(&[2, 3]);
        assert!(semigroup_generates(&s, &[el(&s, &[2]), el(&s, &[3])]).unwrap());
        assert!(!semigroup_generates(&s, &[el(&s, &[2])]).unwrap());
        let s = numerical(&[3, 4, 5]);
        assert!(!semigroup_generates(&s, &[el(&s, &[3]), el(&s, &[4])]).unwrap());
    }

    #[test]
    fn choice_set_rejects_non_members() {
        let s = numerical(&[3, 4, 5]);
        assert!(matches!(
            ChoiceSet::new(&s, vec![el(&s, &[2])]),
            Err(Error::Membership(_))
        ));
        assert!(ChoiceSet::new(&s, vec![]).is_err());
        assert!(ChoiceSet::new(&s, vec![el(&s, &[3]), el(&s, &[3])]).is_err());
    }

    #[test]
    fn realization_of_two_points() {
        let t = Complex::from_facets(vec!["a".into(), "b".into()], &[0b01, 0b10]).unwrap();
        let (s, m, e) = realize_complex(&t).unwrap();
        let flats: Vec<Vec<i64>> = s.generators().iter().map(|g| g.flat().to_vec()).collect();
        assert_eq!(flats, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.flat(), &[1, 1, 1]);
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn realization_rejects_full_simplex_and_missing_vertices() {
        let full = Complex::from_facets(vec!["a".into(), "b".into()], &[0b11]).unwrap();
        assert!(matches!(realize_complex(&full), Err(Error::InvalidComplex(_))));
        let missing = Complex::from_facets(vec!["a".into(), "b".into()], &[0b01]).unwrap();
        assert!(matches!(realize_complex(&missing), Err(Error::InvalidComplex(_))));
    }
}
