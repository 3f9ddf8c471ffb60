//! The key sets of a choice `E`: supports, the Apéry set `Q`, the sets
//! `D^J`, and the single-element Apéry set `Q_E` with the sets `E^{J'}`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::semigroup::{ChoiceSet, ValidatedSemigroup};
use crate::simplicial::bits;

/// Stability of the computed sets near the truncation bound. `stable` is a
/// heuristic: no element of any set was found with degree in the last
/// window `(N - w, N]`, `w = max λ(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub window: i64,
    pub stable: bool,
    /// Largest degree at which each set gained an element.
    pub last_found: BTreeMap<String, i64>,
    pub heuristic: bool,
}

impl SaturationReport {
    fn build(bound: i64, window: i64, last_found: BTreeMap<String, i64>) -> Self {
        let stable = last_found.values().all(|&d| d <= bound - window);
        Self {
            window,
            stable,
            last_found,
            heuristic: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KeySets {
    pub choice: ChoiceSet,
    pub bound: i64,
    pub q: Vec<GroupElement>,
    /// `D^J` keyed by the mask of `J` (always `#J >= 2`); empty sets are omitted.
    pub dj: BTreeMap<u32, Vec<GroupElement>>,
    pub saturation: SaturationReport,
}

impl KeySets {
    /// `D`, the union of all `D^J`, in canonical order.
    pub fn d(&self, s: &ValidatedSemigroup) -> Vec<GroupElement> {
        let mut all: Vec<GroupElement> = self.dj.values().flatten().cloned().collect();
        s.grading().sort(&mut all);
        all.dedup();
        all
    }

    pub fn dj(&self, mask: u32) -> &[GroupElement] {
        self.dj.get(&mask).map_or(&[], |v| v.as_slice())
    }

    /// Largest `#J` with `D^J ≠ ∅`, if any.
    pub fn max_nonempty_size(&self) -> Option<u32> {
        self.dj.keys().map(|j| j.count_ones()).max()
    }
}

/// `supp(m) = {e ∈ E : m - e ∈ S}` as a mask over `E`.
pub fn supports(s: &ValidatedSemigroup, e: &ChoiceSet, m: &GroupElement) -> Result<u32> {
    if !s.is_member(m) {
        return Err(Error::Membership(m.to_string()));
    }
    Ok(support_mask(s, e, m))
}

pub(crate) fn support_mask(s: &ValidatedSemigroup, e: &ChoiceSet, m: &GroupElement) -> u32 {
    e.elements()
        .iter()
        .enumerate()
        .filter(|(_, x)| s.is_member(&s.group().sub(m, x)))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Submasks of `mask` with at least `min` elements, in increasing order.
pub(crate) fn submasks(mask: u32, min: u32) -> impl Iterator<Item = u32> {
    let mut out = Vec::new();
    let mut sub = mask;
    loop {
        if sub.count_ones() >= min {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out.reverse();
    out.into_iter()
}

pub(crate) fn set_name(mask: u32) -> String {
    let idx: Vec<String> = bits(mask).map(|i| i.to_string()).collect();
    format!("{{{}}}", idx.join(","))
}

pub fn compute_key_sets(s: &ValidatedSemigroup, e: &ChoiceSet, bound: i64) -> Result<KeySets> {
    let table = s.member_table(bound)?;
    let members: Vec<&GroupElement> = table.members().iter().take_while(|m| s.degree(m) <= bound).collect();
    let group = s.group();
    let per_member: Vec<(u32, Vec<u32>)> = members
        .par_iter()
        .map(|m| {
            let supp = support_mask(s, e, m);
            let js = submasks(supp, 2)
                .filter(|&j| !s.is_member(&group.sub(m, &e.subset_sum(group, j))))
                .collect();
            (supp, js)
        })
        .collect();

    let mut q = Vec::new();
    let mut dj: BTreeMap<u32, Vec<GroupElement>> = BTreeMap::new();
    let mut last_found: BTreeMap<String, i64> = BTreeMap::new();
    for (m, (supp, js)) in members.iter().zip(per_member) {
        let deg = s.degree(m);
        if supp == 0 {
            q.push((*m).clone());
            last_found.insert("Q".into(), deg);
        }
        for j in js {
            dj.entry(j).or_default().push((*m).clone());
            last_found.insert(format!("D^{}", set_name(j)), deg);
        }
    }
    let window = e.elements().iter().map(|x| s.degree(x)).max().unwrap_or(0);
    Ok(KeySets {
        choice: e.clone(),
        bound,
        q,
        dj,
        saturation: SaturationReport::build(bound, window, last_found),
    })
}

/// `Q_E` and the sets `E^{J'}` for the single element `e_E`.
#[derive(Clone, Debug)]
pub struct AperySingle {
    pub bound: i64,
    pub q_e: Vec<GroupElement>,
    /// `E^{J'}` keyed by the nonzero mask of `J'`; empty sets omitted.
    pub ej: BTreeMap<u32, Vec<GroupElement>>,
    pub saturation: SaturationReport,
}

pub fn apery_single(s: &ValidatedSemigroup, e: &ChoiceSet, bound: i64) -> Result<AperySingle> {
    let group = s.group();
    let e_sum = e.sum();
    if bound < s.degree(e_sum) {
        return Err(Error::input(format!(
            "bound {bound} is below the degree {} of e_E",
            s.degree(e_sum)
        )));
    }
    let table = s.member_table(bound)?;
    let members: Vec<&GroupElement> = table.members().iter().take_while(|m| s.degree(m) <= bound).collect();
    let in_q_e = |m: &GroupElement| s.is_member(m) && !s.is_member(&group.sub(m, e_sum));
    let full = e.full_mask();
    let rows: Vec<(bool, Vec<u32>)> = members
        .par_iter()
        .map(|m| {
            if in_q_e(m) {
                return (true, Vec::new());
            }
            let js = submasks(full, 1)
                .filter(|&j| in_q_e(&group.sub(m, &e.subset_sum(group, j))))
                .collect();
            (false, js)
        })
        .collect();
    let mut q_e = Vec::new();
    let mut ej: BTreeMap<u32, Vec<GroupElement>> = BTreeMap::new();
    let mut last_found = BTreeMap::new();
    for (m, (in_q, js)) in members.iter().zip(rows) {
        let deg = s.degree(m);
        if in_q {
            q_e.push((*m).clone());
            last_found.insert("Q_E".to_string(), deg);
        }
        for j in js {
            ej.entry(j).or_default().push((*m).clone());
            last_found.insert(format!("E^{}", set_name(j)), deg);
        }
    }
    let window = s.degree(e_sum);
    Ok(AperySingle {
        bound,
        q_e,
        ej,
        saturation: SaturationReport::build(bound, window, last_found),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{validate, SemigroupPresentation};

    fn setup(g: &[i64], e: &[i64]) -> (ValidatedSemigroup, ChoiceSet) {
        let s = validate(&SemigroupPresentation::numerical(g).unwrap()).unwrap();
        let es = e.iter().map(|&x| s.group().element(&[x]).unwrap()).collect();
        let e = ChoiceSet::new(&s, es).unwrap();
        (s, e)
    }

    fn ints(v: &[GroupElement]) -> Vec<i64> {
        v.iter().map(|g| g.flat()[0]).collect()
    }

    #[test]
    fn support_examples() {
        let (s, e) = setup(&[2, 3], &[2, 3]);
        let z = |v| s.group().element(&[v]).unwrap();
        assert_eq!(supports(&s, &e, &z(0)).unwrap(), 0);
        assert_eq!(supports(&s, &e, &z(6)).unwrap(), 0b11);
        assert!(supports(&s, &e, &z(1)).is_err());
        let (s, e) = setup(&[3, 4, 5], &[3, 4, 5]);
        assert_eq!(supports(&s, &e, &s.group().element(&[8]).unwrap()).unwrap(), 0b111);
    }

    #[test]
    fn key_sets_of_two_three() {
        let (s, e) = setup(&[2, 3], &[2, 3]);
        let k = compute_key_sets(&s, &e, 20).unwrap();
        assert_eq!(ints(&k.q), vec![0]);
        assert_eq!(k.dj.len(), 1);
        assert_eq!(ints(k.dj(0b11)), vec![6]);
        assert!(k.saturation.stable);
    }

    #[test]
    fn key_sets_of_three_four_five() {
        let (s, e) = setup(&[3, 4, 5], &[3, 4, 5]);
        let k = compute_key_sets(&s, &e, 30).unwrap();
        assert_eq!(ints(&k.q), vec![0]);
        // frozen from an independent brute-force filter over <3,4,5> up to 30
        assert_eq!(ints(k.dj(0b011)), vec![8, 9]);
        assert_eq!(ints(k.dj(0b101)), vec![9, 10]);
        assert_eq!(ints(k.dj(0b110)), vec![8, 10, 11]);
        assert_eq!(ints(k.dj(0b111)), vec![8, 9, 10, 11, 13, 14]);
        assert!(k.saturation.stable);
    }

    #[test]
    fn key_sets_with_torsion() {
        let p = SemigroupPresentation::from_flat(1, vec![2], &[vec![1, 0], vec![1, 1]]).unwrap();
        let s = validate(&p).unwrap();
        let e = ChoiceSet::generators(&s).unwrap();
        let k = compute_key_sets(&s, &e, 10).unwrap();
        assert_eq!(k.q, vec![s.group().zero()]);
        assert_eq!(k.dj(0b11), &[s.group().element(&[2, 0]).unwrap()]);
        assert_eq!(k.dj.len(), 1);
    }

    #[test]
    fn apery_single_examples() {
        let (s, e) = setup(&[2, 3], &[2]);
        let a = apery_single(&s, &e, 20).unwrap();
        assert_eq!(ints(&a.q_e), vec![0, 3]);
        let (s, e) = setup(&[2, 3], &[2, 3]);
        let a = apery_single(&s, &e, 20).unwrap();
        assert_eq!(ints(&a.q_e), vec![0, 2, 3, 4, 6]);
        assert_eq!(ints(&a.ej[&0b10]), vec![5, 7, 9]);
        assert_eq!(ints(&a.ej[&0b01]), vec![5, 8]);
        assert_eq!(ints(&a.ej[&0b11]), vec![5, 7, 8, 9, 11]);
        assert!(apery_single(&s, &e, 3).is_err());
    }

    #[test]
    fn submask_order() {
        assert_eq!(submasks(0b101, 1).collect::<Vec<_>>(), vec![0b001, 0b100, 0b101]);
        assert_eq!(submasks(0b111, 2).count(), 4);
    }
}
