//! Finite abstract simplicial complexes over a small ground set, with faces
//! stored as bit masks.
//!
//! Besides ordinary complexes this module builds the squarefree divisor
//! complexes `T_m = {J ⊆ E : m - e_J ∈ S}`, computes reduced homology over
//! Q or GF(p), and forms Alexander duals.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{self, Characteristic, SparseRow};
use crate::semigroup::{ChoiceSet, ValidatedSemigroup, MAX_CHOICE};

/// A downward-closed family of subsets of `labels`. May be void (no faces).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    labels: Vec<String>,
    faces: BTreeSet<u32>,
}

/// Reduced Betti numbers `h̃_i` for `i = -1 ..= n - 1`, stored at index `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub characteristic: Characteristic,
    pub dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn h(&self, i: i64) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^i h̃_i`.
    pub fn euler_char(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if (k as i64 - 1) % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// On-disk form: `{"ground_set": [labels], "facets": [[labels]]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub ground_set: Vec<serde_json::Value>,
    pub facets: Vec<Vec<serde_json::Value>>,
}

fn label_of(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

impl Complex {
    fn check_size(labels: &[String]) -> Result<()> {
        if labels.len() > MAX_CHOICE {
            return Err(Error::InvalidComplex(format!(
                "ground set of {} elements exceeds the limit of {MAX_CHOICE}",
                labels.len()
            )));
        }
        Ok(())
    }

    /// The complex with no faces at all.
    pub fn void(labels: Vec<String>) -> Self {
        Self {
            labels,
            faces: BTreeSet::new(),
        }
    }

    /// `{∅}`.
    pub fn empty_face(labels: Vec<String>) -> Self {
        Self {
            labels,
            faces: BTreeSet::from([0]),
        }
    }

    /// The full simplex `P(E)`.
    pub fn simplex(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self {
            labels,
            faces: (0..(1u32 << n)).collect(),
        }
    }

    /// Checks downward closure.
    pub fn from_faces(labels: Vec<String>, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::check_size(&labels)?;
        let faces: BTreeSet<u32> = faces.into_iter().collect();
        let full = if labels.is_empty() {
            0
        } else {
            (1u32 << labels.len()) - 1
        };
        for &f in &faces {
            if f & !full != 0 {
                return Err(Error::InvalidComplex(format!("face {f:#b} outside the ground set")));
            }
            if let Some(i) = bits(f).find(|&i| !faces.contains(&(f & !(1 << i)))) {
                return Err(Error::InvalidComplex(format!(
                    "face {f:#b} present but its subface without {} is missing",
                    labels[i]
                )));
            }
        }
        Ok(Self { labels, faces })
    }

    /// Downward closure of the given facets. No facets gives the void complex.
    pub fn from_facets(labels: Vec<String>, facets: &[u32]) -> Result<Self> {
        Self::check_size(&labels)?;
        let mut faces = BTreeSet::new();
        for &f in facets {
            // enumerate submasks of f
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Self::from_faces(labels, faces)
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        let labels: Vec<String> = file.ground_set.iter().map(label_of).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        if index.len() != labels.len() {
            return Err(Error::InvalidComplex("repeated ground set label".into()));
        }
        let facets = file
            .facets
            .iter()
            .map(|f| {
                f.iter().try_fold(0u32, |acc, v| {
                    let l = label_of(v);
                    index
                        .get(l.as_str())
                        .map(|&i| acc | 1 << i)
                        .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {l}")))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::from_facets(labels, &facets)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            ground_set: self
                .labels
                .iter()
                .map(|l| serde_json::Value::String(l.clone()))
                .collect(),
            facets: self
                .facets()
                .into_iter()
                .map(|f| {
                    bits(f)
                        .map(|i| serde_json::Value::String(self.labels[i].clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn full_mask(&self) -> u32 {
        if self.labels.is_empty() {
            0
        } else {
            (1u32 << self.labels.len()) - 1
        }
    }

    pub fn faces(&self) -> &BTreeSet<u32> {
        &self.faces
    }

    pub fn contains(&self, face: u32) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// `supp(T) = {e : {e} ∈ T}` as a mask.
    pub fn support(&self) -> u32 {
        (0..self.labels.len())
            .filter(|&i| self.contains(1 << i))
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// `max #J - 1`; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    /// Maximal faces in increasing mask order.
    pub fn facets(&self) -> Vec<u32> {
        let n = self.labels.len();
        self.faces
            .iter()
            .copied()
            .filter(|&f| (0..n).all(|i| f >> i & 1 == 1 || !self.contains(f | 1 << i)))
            .collect()
    }

    /// True iff `T = P(supp T)`.
    pub fn is_full_simplex_on_support(&self) -> bool {
        self.contains(self.support())
    }

    /// `χ̃(T) = Σ_{J ∈ T} (-1)^{#J - 1}`; the void complex gives 0.
    pub fn euler_char(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    pub fn reduced_homology(&self, ch: Characteristic) -> HomologyProfile {
        let cells: Vec<u32> = self.faces.iter().copied().collect();
        HomologyProfile {
            characteristic: ch,
            dims: chain_homology(&cells, self.labels.len(), ch),
        }
    }

    /// `T^∨ = {J ⊆ E' : E' \ J ∉ T}` over `E' = supp(T)`, relabelled to `E'`.
    pub fn alexander_dual(&self) -> Result<Complex> {
        let supp = self.support();
        if supp == 0 {
            return Err(Error::EmptySupport);
        }
        let positions: Vec<usize> = bits(supp).collect();
        let labels: Vec<String> = positions.iter().map(|&i| self.labels[i].clone()).collect();
        let k = positions.len();
        let expand = |local: u32| -> u32 { bits(local).fold(0, |acc, j| acc | 1 << positions[j]) };
        let faces = (0..(1u32 << k)).filter(|&j| !self.contains(supp & !expand(j)));
        Ok(Complex {
            labels,
            faces: faces.collect(),
        })
    }

    /// `T̄^∨ = {L ⊆ E : E \ L ∉ T}` over the whole ground set.
    pub fn relative_alexander_dual(&self) -> Complex {
        let full = self.full_mask();
        Complex {
            labels: self.labels.clone(),
            faces: (0..=full).filter(|&l| !self.contains(full & !l)).collect(),
        }
    }

    /// Minimal non-faces of cardinality `k + 2`, each as sorted vertex indices.
    pub fn find_spheres(&self, k: i64) -> Vec<Vec<usize>> {
        let size = k + 2;
        if size < 1 || size as usize > self.labels.len() {
            return Vec::new();
        }
        let size = size as u32;
        let n = self.labels.len();
        let mut found: Vec<u32> = self
            .faces
            .iter()
            .filter(|f| f.count_ones() == size - 1)
            .flat_map(|&f| {
                let top = if f == 0 { 0 } else { 32 - f.leading_zeros() as usize };
                (top..n).map(move |i| f | 1 << i)
            })
            .filter(|&j| !self.contains(j) && bits(j).all(|e| self.contains(j & !(1 << e))))
            .collect();
        found.sort_unstable();
        found.dedup();
        let mut out: Vec<Vec<usize>> = found.into_iter().map(|j| bits(j).collect()).collect();
        out.sort();
        out
    }
}

/// Homology of the chain complex spanned by `cells` (masks over `n`
/// points) with the simplicial boundary projected onto `cells`. Index `s`
/// of the result is the dimension in degree `s - 1`. For a downward-closed
/// family this is reduced simplicial homology.
pub(crate) fn chain_homology(cells: &[u32], n: usize, ch: Characteristic) -> Vec<usize> {
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for &c in cells {
        by_size[c.count_ones() as usize].push(c);
    }
    let index: Vec<HashMap<u32, usize>> = by_size
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, &c)| (c, i)).collect())
        .collect();
    // rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; n + 2];
    for s in 1..=n {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&c| {
                let mut row: SparseRow = bits(c)
                    .enumerate()
                    .filter_map(|(pos, e)| {
                        index[s - 1]
                            .get(&(c & !(1 << e)))
                            .map(|&col| (col, if pos % 2 == 0 { 1 } else { -1 }))
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        ranks[s] = linalg::rank(&rows, ch);
    }
    (0..=n).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// `T_m = {J ⊆ E : m - e_J ∈ S}`, built level by level from downward closure.
pub fn build_tm(s: &ValidatedSemigroup, e: &ChoiceSet, m: &GroupElement) -> Result<Complex> {
    if !s.is_member(m) {
        return Err(Error::Membership(m.to_string()));
    }
    let group = s.group();
    let n = e.len();
    let labels = e.elements().iter().map(|x| x.to_string()).collect();
    let mut faces = BTreeSet::from([0u32]);
    let mut level: Vec<(u32, GroupElement)> = vec![(0, m.clone())];
    while !level.is_empty() {
        let present: HashSet<u32> = level.iter().map(|(f, _)| *f).collect();
        let mut next = Vec::new();
        for (f, rest) in &level {
            let top = if *f == 0 { 0 } else { 32 - f.leading_zeros() as usize };
            for i in top..n {
                let j = f | 1 << i;
                if !bits(*f).all(|k| present.contains(&(j & !(1 << k)))) {
                    continue;
                }
                let r = group.sub(rest, &e.elements()[i]);
                if s.is_member(&r) {
                    next.push((j, r));
                }
            }
        }
        faces.extend(next.iter().map(|(f, _)| *f));
        level = next;
    }
    let t = Complex { labels, faces };
    debug_assert!(Complex::from_faces(t.labels.clone(), t.faces.iter().copied()).is_ok());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{validate, SemigroupPresentation};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    pub(crate) fn triangle_boundary() -> Complex {
        Complex::from_facets(labels(3), &[0b011, 0b101, 0b110]).unwrap()
    }

    fn numerical(g: &[i64]) -> (ValidatedSemigroup, ChoiceSet) {
        let s = validate(&SemigroupPresentation::numerical(g).unwrap()).unwrap();
        let e = ChoiceSet::generators(&s).unwrap();
        (s, e)
    }

    fn z(s: &ValidatedSemigroup, v: i64) -> GroupElement {
        s.group().element(&[v]).unwrap()
    }

    #[test]
    fn tm_examples() {
        let (s, e) = numerical(&[2, 3]);
        let t6 = build_tm(&s, &e, &z(&s, 6)).unwrap();
        assert_eq!(t6.faces().iter().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        let t0 = build_tm(&s, &e, &z(&s, 0)).unwrap();
        assert_eq!(t0, Complex::empty_face(t0.labels().to_vec()));
        assert!(matches!(build_tm(&s, &e, &z(&s, 1)), Err(Error::Membership(_))));

        let (s, e) = numerical(&[3, 4, 5]);
        let t13 = build_tm(&s, &e, &z(&s, 13)).unwrap();
        assert_eq!(t13.faces(), triangle_boundary().faces());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(Complex::simplex(labels(1)).euler_char(), 0);
        assert_eq!(Complex::simplex(labels(4)).euler_char(), 0);
        assert_eq!(Complex::empty_face(labels(3)).euler_char(), -1);
        assert_eq!(Complex::from_facets(labels(3), &[1, 2, 4]).unwrap().euler_char(), 2);
        assert_eq!(Complex::void(labels(2)).euler_char(), 0);
    }

    #[test]
    fn homology_examples() {
        for p in [0, 2, 3] {
            let ch = Characteristic::new(p).unwrap();
            let h = triangle_boundary().reduced_homology(ch);
            assert_eq!((h.h(0), h.h(1)), (0, 1));
        }
        let two = Complex::from_facets(labels(2), &[1, 2]).unwrap();
        assert_eq!(two.reduced_homology(Characteristic::ZERO).h(0), 1);
        let e = Complex::empty_face(labels(2)).reduced_homology(Characteristic::ZERO);
        assert_eq!(e.dims, vec![1, 0, 0]);
        assert!(Complex::void(labels(2))
            .reduced_homology(Characteristic::ZERO)
            .is_zero());
        assert!(Complex::simplex(labels(3))
            .reduced_homology(Characteristic::ZERO)
            .is_zero());
    }

    #[test]
    fn duals_of_small_complexes() {
        let two = Complex::from_facets(labels(2), &[1, 2]).unwrap();
        let d = two.alexander_dual().unwrap();
        assert_eq!(d.faces().iter().copied().collect::<Vec<_>>(), vec![0]);
        let seg = Complex::from_facets(labels(2), &[3]).unwrap();
        assert!(seg.alexander_dual().unwrap().is_void());
        let rel = Complex::empty_face(labels(3)).relative_alexander_dual();
        assert_eq!(rel.faces(), triangle_boundary().faces());
        assert!(matches!(
            Complex::empty_face(labels(3)).alexander_dual(),
            Err(Error::EmptySupport)
        ));
    }

    #[test]
    fn dual_support_can_be_proper() {
        // T = three isolated points plus edge {0,1}; E' = {0,1,2}
        let t = Complex::from_facets(labels(3), &[0b011, 0b100]).unwrap();
        let d = t.alexander_dual().unwrap();
        // J ∈ T^∨ iff E' \ J ∉ T: complements of non-faces {0,2},{1,2},{0,1,2}
        assert_eq!(d.faces().iter().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn sphere_examples() {
        assert_eq!(triangle_boundary().find_spheres(1), vec![vec![0, 1, 2]]);
        assert_eq!(
            Complex::empty_face(labels(3)).find_spheres(-1),
            vec![vec![0], vec![1], vec![2]]
        );
        for k in -1..3 {
            assert!(Complex::simplex(labels(3)).find_spheres(k).is_empty());
        }
    }

    #[test]
    fn facets_and_downward_closure() {
        assert!(Complex::from_faces(labels(2), [0, 3]).is_err());
        let t = triangle_boundary();
        assert_eq!(t.facets(), vec![0b011, 0b101, 0b110]);
        assert_eq!(t.dimension(), Some(1));
        assert_eq!(Complex::void(labels(1)).dimension(), None);
    }

    #[test]
    fn file_round_trip() {
        let f: ComplexFile =
            serde_json::from_str(r#"{"ground_set": ["a", "b", 3], "facets": [["a", "b"], [3]]}"#).unwrap();
        let t = Complex::from_file(&f).unwrap();
        assert_eq!(t.faces().len(), 5);
        let back = Complex::from_file(&t.to_file()).unwrap();
        assert_eq!(back, t);
    }
}
