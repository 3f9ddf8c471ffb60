//! The ambient group `Z^d x Z/t_1 x ... x Z/t_k` and its elements.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Coordinates of a group element: free part first, then torsion residues.
pub type Coords = SmallVec<[i64; 8]>;

/// A finitely generated abelian group `Z^d x T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmbientGroup {
    free_rank: usize,
    torsion_orders: Vec<i64>,
}

/// An element of an [`AmbientGroup`].
///
/// Torsion coordinates are always stored in `[0, order)`. The derived order
/// is lexicographic on the free part, then on the torsion part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Coords,
    free_rank: u32,
}

impl AmbientGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<i64>) -> Result<Self> {
        if let Some(bad) = torsion_orders.iter().find(|&&t| t < 2) {
            return Err(Error::input(format!("torsion order {bad} is smaller than 2")));
        }
        Ok(Self {
            free_rank,
            torsion_orders,
        })
    }

    /// The free group `Z^d`.
    pub fn free(free_rank: usize) -> Self {
        Self {
            free_rank,
            torsion_orders: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[i64] {
        &self.torsion_orders
    }

    /// Length of the flat coordinate array of an element.
    pub fn width(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: SmallVec::from_elem(0, self.width()),
            free_rank: self.free_rank as u32,
        }
    }

    /// Builds an element from a flat `[free..., torsion...]` array, reducing
    /// the torsion entries.
    pub fn element(&self, flat: &[i64]) -> Result<GroupElement> {
        if flat.len() != self.width() {
            return Err(Error::input(format!(
                "element {flat:?} has {} coordinates, expected {}",
                flat.len(),
                self.width()
            )));
        }
        let mut coords: Coords = flat.iter().copied().collect();
        self.reduce(&mut coords);
        Ok(GroupElement {
            coords,
            free_rank: self.free_rank as u32,
        })
    }

    /// Unit vector in free coordinate `i`.
    pub fn unit(&self, i: usize) -> GroupElement {
        let mut z = self.zero();
        z.coords[i] = 1;
        z
    }

    fn reduce(&self, coords: &mut [i64]) {
        for (c, &t) in coords[self.free_rank..].iter_mut().zip(&self.torsion_orders) {
            *c = c.rem_euclid(t);
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.free_rank as usize == self.free_rank
            && g.coords.len() == self.width()
            && g.coords[self.free_rank..]
                .iter()
                .zip(&self.torsion_orders)
                .all(|(&c, &t)| (0..t).contains(&c))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut coords: Coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.reduce(&mut coords);
        GroupElement {
            coords,
            free_rank: a.free_rank,
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut coords: Coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        self.reduce(&mut coords);
        GroupElement {
            coords,
            free_rank: a.free_rank,
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let mut coords: Coords = a.coords.iter().map(|x| -x).collect();
        self.reduce(&mut coords);
        GroupElement {
            coords,
            free_rank: a.free_rank,
        }
    }

    /// `k * a` for `k >= 0`.
    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        let mut coords: Coords = a.coords.iter().map(|x| k * x).collect();
        self.reduce(&mut coords);
        GroupElement {
            coords,
            free_rank: a.free_rank,
        }
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        items.into_iter().fold(self.zero(), |acc, g| self.add(&acc, g))
    }
}

impl GroupElement {
    pub fn free(&self) -> &[i64] {
        &self.coords[..self.free_rank as usize]
    }

    pub fn torsion(&self) -> &[i64] {
        &self.coords[self.free_rank as usize..]
    }

    /// Flat `[free..., torsion...]` coordinates.
    pub fn flat(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .free()
            .iter()
            .map(|c| c.to_string())
            .chain(self.torsion().iter().map(|c| format!("{c}~")))
            .collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

/// A grading `lambda: G -> Z`, linear on the free part and zero on torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    group: AmbientGroup,
    weights: Vec<i64>,
}

impl Grading {
    pub fn new(group: AmbientGroup, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != group.free_rank() {
            return Err(Error::input(format!(
                "grading has {} weights for free rank {}",
                weights.len(),
                group.free_rank()
            )));
        }
        Ok(Self { group, weights })
    }

    pub fn group(&self) -> &AmbientGroup {
        &self.group
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self, g: &GroupElement) -> i64 {
        self.weights.iter().zip(g.free()).map(|(w, c)| w * c).sum()
    }

    /// Canonical ordering key: degree first, then lexicographic.
    pub fn key<'a>(&self, g: &'a GroupElement) -> (i64, &'a GroupElement) {
        (self.degree(g), g)
    }

    pub fn sort(&self, items: &mut [GroupElement]) {
        items.sort_by_cached_key(|g| (self.degree(g), g.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_is_reduced() {
        let g = AmbientGroup::new(1, vec![2]).unwrap();
        let a = g.element(&[1, 3]).unwrap();
        assert_eq!(a.flat(), &[1, 1]);
        let b = g.add(&a, &a);
        assert_eq!(b.flat(), &[2, 0]);
        assert_eq!(g.neg(&a).flat(), &[-1, 1]);
        let h = AmbientGroup::new(0, vec![5]).unwrap();
        let x = h.element(&[2]).unwrap();
        assert_eq!(h.neg(&x).flat(), &[3]);
    }

    #[test]
    fn rejects_small_torsion_orders() {
        assert!(AmbientGroup::new(1, vec![1]).is_err());
        assert!(AmbientGroup::new(1, vec![0]).is_err());
    }

    #[test]
    fn groups_compare_by_rank_and_orders() {
        assert_eq!(
            AmbientGroup::new(2, vec![3]).unwrap(),
            AmbientGroup::new(2, vec![3]).unwrap()
        );
        assert_ne!(
            AmbientGroup::new(2, vec![3]).unwrap(),
            AmbientGroup::new(2, vec![]).unwrap()
        );
        assert_ne!(
            AmbientGroup::new(0, vec![2, 3]).unwrap(),
            AmbientGroup::new(0, vec![3, 2]).unwrap()
        );
    }

    #[test]
    fn wrong_width_is_rejected() {
        let g = AmbientGroup::free(2);
        assert!(g.element(&[1]).is_err());
    }

    #[test]
    fn display() {
        let g = AmbientGroup::new(1, vec![2]).unwrap();
        assert_eq!(g.element(&[1, 1]).unwrap().to_string(), "(1,1~)");
        assert_eq!(AmbientGroup::free(1).element(&[7]).unwrap().to_string(), "7");
    }
}
