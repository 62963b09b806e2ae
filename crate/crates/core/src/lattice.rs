//! Finite lattices and the lattices of monotone and regular partitions.
//!
//! Positions reported by the statistics are 1-based, following the order of
//! the partition list the lattice was built from.

use std::fmt;

use crate::dot::HasseDot;
use crate::error::{Error, Result};
use crate::partition::{MonotonePartition, SetPartition};
use crate::poset::{Label, Poset};

/// A finite poset with a bottom, a top and all pairwise meets (hence joins).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    order: Poset,
    bottom: usize,
    top: usize,
}

impl Lattice {
    pub fn new(order: Poset) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::EmptyLattice);
        }
        let n = order.len();
        let bottom = (0..n)
            .find(|&i| order.up_set(i).count_ones(..) == n)
            .ok_or_else(|| no_bound(&order, "lower bound"))?;
        let top = (0..n)
            .find(|&i| order.down_set(i).count_ones(..) == n)
            .ok_or_else(|| no_bound(&order, "upper bound"))?;
        let lattice = Lattice { order, bottom, top };
        // With a top element, pairwise meets imply pairwise joins.
        for a in 0..n {
            for b in a + 1..n {
                if lattice.meet(a, b).is_none() {
                    return Err(Error::NotALattice(
                        lattice.order.label(a).to_string(),
                        lattice.order.label(b).to_string(),
                        "meet",
                    ));
                }
            }
        }
        Ok(lattice)
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower = self
            .order
            .down_set(a)
            .intersection(self.order.down_set(b))
            .collect::<Vec<_>>();
        lower
            .iter()
            .copied()
            .find(|&m| self.order.down_set(m).count_ones(..) == lower.len())
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper = self
            .order
            .up_set(a)
            .intersection(self.order.up_set(b))
            .collect::<Vec<_>>();
        upper
            .iter()
            .copied()
            .find(|&j| self.order.up_set(j).count_ones(..) == upper.len())
    }

    /// `mu(bottom, x)` for every element, in position order.
    pub fn moebius(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for x in self.order.linear_order() {
            mu[x] = if x == self.bottom {
                1
            } else {
                -self
                    .order
                    .down_set(x)
                    .ones()
                    .filter(|&z| z != x)
                    .map(|z| mu[z])
                    .sum::<i64>()
            };
        }
        mu
    }

    /// Length (in elements) of the longest chain from the bottom to each
    /// element; the bottom has level 1.
    pub fn whitney_levels(&self) -> Vec<usize> {
        self.order.heights()
    }

    /// Entry `k - 1` counts the elements at level `k`.
    pub fn whitney_numbers(&self) -> Vec<usize> {
        let levels = self.whitney_levels();
        let max = levels.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for l in levels {
            counts[l - 1] += 1;
        }
        counts
    }

    /// 1-based positions of the elements covering the bottom.
    pub fn atoms_positions(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.order.is_cover(self.bottom, i))
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based positions of the elements covered by the top.
    pub fn coatoms_positions(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.order.is_cover(i, self.top))
            .map(|i| i + 1)
            .collect()
    }

    /// Levels increase by exactly one along every cover.
    pub fn is_ranked(&self) -> bool {
        let levels = self.whitney_levels();
        self.order
            .cover_indices()
            .into_iter()
            .all(|(a, b)| levels[b] == levels[a] + 1)
    }
}

fn no_bound(order: &Poset, what: &'static str) -> Error {
    let minimal = order.minimal();
    let maximal = order.maximal();
    let (a, b) = if what == "lower bound" {
        (minimal[0], minimal[1])
    } else {
        (maximal[0], maximal[1])
    };
    Error::NotALattice(order.label(a).to_string(), order.label(b).to_string(), what)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    Monotone,
    Regular,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionKind::Monotone => "monotone",
            PartitionKind::Regular => "regular",
        })
    }
}

/// The lattice formed by a complete list of monotone or regular partitions.
///
/// Monotone partitions are ordered by inclusion of their preorders, regular
/// partitions by refinement. Element `i` of the order is labeled `i + 1`.
#[derive(Clone, Debug)]
pub struct PartitionLattice {
    kind: PartitionKind,
    lattice: Lattice,
    captions: Vec<String>,
}

impl PartitionLattice {
    pub fn monotone(items: &[MonotonePartition]) -> Result<Self> {
        let order = positions_order(items.len(), |i, j| items[i].is_below(&items[j]))?;
        let captions = items.iter().map(|m| m.to_poset().describe()).collect();
        Self::build(PartitionKind::Monotone, order, captions)
    }

    /// `items` must be regular partitions of `p`.
    pub fn regular(items: &[SetPartition], p: &Poset) -> Result<Self> {
        let order = positions_order(items.len(), |i, j| items[i].refines(&items[j]))?;
        let captions = items.iter().map(|s| s.describe(p)).collect();
        Self::build(PartitionKind::Regular, order, captions)
    }

    fn build(kind: PartitionKind, order: Poset, captions: Vec<String>) -> Result<Self> {
        Ok(PartitionLattice {
            kind,
            lattice: Lattice::new(order)?,
            captions,
        })
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn order(&self) -> &Poset {
        self.lattice.order()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Text shown for each element: the quotient's covers for monotone
    /// partitions, `|`-separated blocks for regular ones.
    pub fn captions(&self) -> &[String] {
        &self.captions
    }

    pub fn moebius(&self) -> Vec<i64> {
        self.lattice.moebius()
    }

    pub fn whitney_levels(&self) -> Vec<usize> {
        self.lattice.whitney_levels()
    }

    pub fn whitney_numbers(&self) -> Vec<usize> {
        self.lattice.whitney_numbers()
    }

    pub fn atoms_positions(&self) -> Vec<usize> {
        self.lattice.atoms_positions()
    }

    pub fn coatoms_positions(&self) -> Vec<usize> {
        self.lattice.coatoms_positions()
    }

    pub fn is_ranked(&self) -> bool {
        self.lattice.is_ranked()
    }

    /// Hasse diagram of the lattice, elements captioned by their partitions.
    pub fn to_dot(&self) -> String {
        let mut dot = HasseDot::new();
        dot.add_captioned(self.order(), self.captions.clone());
        dot.render(1)
    }
}

fn positions_order(n: usize, below: impl Fn(usize, usize) -> bool) -> Result<Poset> {
    let labels = (1..=n)
        .map(|i| Label::new(i.to_string()))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_order_fn(labels, below).map_err(|e| match e {
        Error::Cycle(a, b) => {
            Error::InvalidPartition(format!("positions {a} and {b} hold the same partition"))
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::partition::{monotone_partitions, regular_partitions};

    fn b2() -> Poset {
        Poset::from_pairs([("x", "y"), ("x", "z")]).unwrap()
    }

    #[test]
    fn b2_monotone_statistics() {
        let (parts, _) = monotone_partitions(&b2());
        let l = PartitionLattice::monotone(&parts).unwrap();
        assert_eq!(l.len(), 7);
        assert_eq!(l.moebius(), vec![1, -1, -1, 0, 1, 0, 0]);
        assert_eq!(l.whitney_numbers(), vec![1, 2, 3, 1]);
        assert_eq!(l.whitney_levels(), vec![1, 2, 2, 3, 3, 3, 4]);
        assert_eq!(l.atoms_positions(), vec![2, 3]);
        assert_eq!(l.coatoms_positions(), vec![4, 5, 6]);
        assert_eq!(l.kind(), PartitionKind::Monotone);
    }

    #[test]
    fn b2_regular_lattice_is_ranked() {
        let p = b2();
        let (parts, _) = regular_partitions(&p);
        let l = PartitionLattice::regular(&parts, &p).unwrap();
        assert_eq!(l.len(), 5);
        assert!(l.is_ranked());
        assert_eq!(l.whitney_levels()[0], 1);
        assert_eq!(l.captions()[0], "x|y|z");
        assert_eq!(l.captions()[4], "xyz");
    }

    #[test]
    fn chain_three_regular_is_square() {
        let p = Poset::chain(3);
        let (parts, _) = regular_partitions(&p);
        let l = PartitionLattice::regular(&parts, &p).unwrap();
        assert!(are_isomorphic(l.order(), &Poset::boolean_algebra(2)));
    }

    #[test]
    fn one_point_lattice() {
        let (parts, _) = monotone_partitions(&Poset::empty());
        let l = PartitionLattice::monotone(&parts).unwrap();
        assert_eq!(l.moebius(), vec![1]);
        assert_eq!(l.whitney_levels(), vec![1]);
        assert_eq!(l.whitney_numbers(), vec![1]);
        assert!(l.is_ranked());
        assert!(l.atoms_positions().is_empty());
    }

    #[test]
    fn two_element_lattice() {
        let (parts, _) = monotone_partitions(&Poset::chain(2));
        let l = PartitionLattice::monotone(&parts).unwrap();
        assert_eq!(l.atoms_positions(), vec![2]);
        // the bottom is the only element covered by the top
        assert_eq!(l.coatoms_positions(), vec![1]);
        assert_eq!(l.whitney_numbers(), vec![1, 1]);
    }

    #[test]
    fn boolean_square() {
        let l = Lattice::new(Poset::boolean_algebra(2)).unwrap();
        assert_eq!(l.moebius(), vec![1, -1, -1, 1]);
        assert_eq!(l.whitney_levels(), vec![1, 2, 2, 3]);
        assert_eq!(l.meet(1, 2), Some(0));
        assert_eq!(l.join(1, 2), Some(3));
    }

    #[test]
    fn non_lattices_are_rejected() {
        assert_eq!(Lattice::new(Poset::empty()), Err(Error::EmptyLattice));
        assert!(matches!(
            Lattice::new(Poset::antichain(2)),
            Err(Error::NotALattice(_, _, "lower bound"))
        ));
        assert!(matches!(
            Lattice::new(b2()),
            Err(Error::NotALattice(_, _, "upper bound"))
        ));
        // bottom < a,b < c,d < top with a,b both below c and d: no meet of c, d
        let bowtie = Poset::from_pairs([
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ])
        .unwrap();
        assert!(matches!(
            Lattice::new(bowtie),
            Err(Error::NotALattice(_, _, "meet"))
        ));
    }

    #[test]
    fn pentagon_is_not_ranked() {
        let pentagon =
            Poset::from_pairs([("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
                .unwrap();
        let l = Lattice::new(pentagon).unwrap();
        assert!(!l.is_ranked());
        assert_eq!(l.whitney_levels(), vec![1, 2, 3, 4, 2]);
        assert_eq!(l.moebius().iter().sum::<i64>(), 0);
    }

    #[test]
    fn duplicate_items_are_rejected() {
        let (parts, _) = monotone_partitions(&Poset::chain(2));
        let doubled = vec![parts[0].clone(), parts[0].clone()];
        assert!(matches!(
            PartitionLattice::monotone(&doubled),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn dot_uses_captions() {
        let (parts, _) = monotone_partitions(&b2());
        let dot = PartitionLattice::monotone(&parts).unwrap().to_dot();
        assert!(dot.contains("label=\"xy<z\""));
        assert_eq!(dot.matches(" -> ").count(), 9);
    }
}
