//! Finite topological spaces stored as minimal open neighborhoods.
//!
//! Every finite space is an Alexandrov space: arbitrary intersections of
//! opens are open, so each point `x` has a smallest open set containing it.
//! Storing that minimal open per point is a lossless representation of the
//! topology (a set is open iff it contains the minimal open of each of its
//! members) and avoids materializing the open family, which can be
//! exponential in the number of points.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A set of points of some ambient [`FiniteSpace`], held as sorted ids.
///
/// Membership in the ambient space is checked at operation boundaries, not
/// at construction, so a `PointSet` is just an ordered string set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct PointSet(BTreeSet<String>);

impl PointSet {
    pub fn new() -> Self {
        PointSet(BTreeSet::new())
    }

    pub fn contains(&self, point: &str) -> bool {
        self.0.contains(point)
    }

    pub fn insert(&mut self, point: impl Into<String>) {
        self.0.insert(point.into());
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|s| s.as_str())
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Members as a sorted list, the serialization order used everywhere.
    pub fn to_sorted_vec(&self) -> Vec<String> {
        self.0.iter().cloned().collect()
    }
}

impl<S: Into<String>> FromIterator<S> for PointSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        PointSet(iter.into_iter().map(Into::into).collect())
    }
}

impl IntoIterator for PointSet {
    type Item = String;
    type IntoIter = std::collections::btree_set::IntoIter<String>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// A finite topological space: ordered points plus the minimal open set of
/// each point.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSpace {
    points: Vec<String>,
    index: HashMap<String, usize>,
    min_open: Vec<Bits>,
}

impl FiniteSpace {
    /// Builds the space generated by a subbasis.
    ///
    /// The minimal open of `x` is the intersection of all subbasis sets
    /// containing `x`; a point contained in no subbasis set gets the whole
    /// space, which is always open. The resulting opens are exactly the
    /// topology generated by the subbasis under finite intersection and
    /// union.
    pub fn from_subbasis<I, S>(points: I, subbasis: &[PointSet]) -> Result<FiniteSpace>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        let n = points.len();
        let mut sub_bits = Vec::with_capacity(subbasis.len());
        for s in subbasis {
            let mut b = Bits::empty(n);
            for p in s.iter() {
                let &i = index.get(p).ok_or_else(|| Error::UnknownPoint(p.into()))?;
                b.insert(i);
            }
            sub_bits.push(b);
        }
        let min_open = (0..n)
            .map(|i| {
                let mut acc = Bits::full(n);
                let mut covered = false;
                for b in &sub_bits {
                    if b.contains(i) {
                        acc = acc.intersection(b);
                        covered = true;
                    }
                }
                if covered {
                    acc
                } else {
                    Bits::full(n)
                }
            })
            .collect();
        Ok(FiniteSpace {
            points,
            index,
            min_open,
        })
    }

    /// Builds a space from an explicit minimal-open assignment, validating
    /// that each point belongs to its own minimal open and that the family
    /// satisfies the Alexandrov condition.
    pub fn from_min_opens<I, S>(
        points: I,
        min_open: &HashMap<String, PointSet>,
    ) -> Result<FiniteSpace>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        let n = points.len();
        let mut table = vec![Bits::empty(n); n];
        for (p, set) in min_open {
            let &i = index.get(p).ok_or_else(|| Error::UnknownPoint(p.clone()))?;
            let mut b = Bits::empty(n);
            for q in set.iter() {
                let &j = index.get(q).ok_or_else(|| Error::UnknownPoint(q.into()))?;
                b.insert(j);
            }
            table[i] = b;
        }
        for (i, p) in points.iter().enumerate() {
            if min_open.get(p).is_none() {
                return Err(Error::UnknownPoint(p.clone()));
            }
            if !table[i].contains(i) {
                return Err(Error::PointNotInOwnMinOpen { point: p.clone() });
            }
        }
        let space = FiniteSpace {
            points,
            index,
            min_open: table,
        };
        space.check_alexandrov()?;
        Ok(space)
    }

    fn check_alexandrov(&self) -> Result<()> {
        for i in 0..self.points.len() {
            for j in self.min_open[i].iter_ones() {
                if !self.min_open[j].is_subset(&self.min_open[i]) {
                    return Err(Error::NotAlexandrov {
                        point: self.points[i].clone(),
                        inner: self.points[j].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_point(&self, point: &str) -> bool {
        self.index.contains_key(point)
    }

    /// The minimal open neighborhood of a point.
    pub fn min_open(&self, point: &str) -> Result<PointSet> {
        let &i = self
            .index
            .get(point)
            .ok_or_else(|| Error::UnknownPoint(point.into()))?;
        Ok(self.set_from_bits(&self.min_open[i]))
    }

    /// All points as a `PointSet`.
    pub fn full_set(&self) -> PointSet {
        self.points.iter().cloned().collect()
    }

    pub(crate) fn point_index(&self, point: &str) -> Result<usize> {
        self.index
            .get(point)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(point.into()))
    }

    pub(crate) fn min_open_bits(&self, i: usize) -> &Bits {
        &self.min_open[i]
    }

    pub(crate) fn bits_from_set(&self, s: &PointSet) -> Result<Bits> {
        let mut b = Bits::empty(self.points.len());
        for p in s.iter() {
            b.insert(self.point_index(p)?);
        }
        Ok(b)
    }

    pub(crate) fn set_from_bits(&self, b: &Bits) -> PointSet {
        b.iter_ones().map(|i| self.points[i].clone()).collect()
    }

    pub(crate) fn is_open_bits(&self, b: &Bits) -> bool {
        b.iter_ones().all(|i| self.min_open[i].is_subset(b))
    }

    pub(crate) fn interior_bits(&self, b: &Bits) -> Bits {
        let mut out = Bits::empty(self.points.len());
        for i in b.iter_ones() {
            if self.min_open[i].is_subset(b) {
                out.insert(i);
            }
        }
        out
    }

    pub(crate) fn closure_bits(&self, b: &Bits) -> Bits {
        let mut out = Bits::empty(self.points.len());
        for i in 0..self.points.len() {
            if self.min_open[i].intersects(b) {
                out.insert(i);
            }
        }
        out
    }

    /// True iff `s` is open: every member's minimal open is contained in `s`.
    pub fn is_open(&self, s: &PointSet) -> Result<bool> {
        Ok(self.is_open_bits(&self.bits_from_set(s)?))
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.set_from_bits(&self.interior_bits(&self.bits_from_set(s)?)))
    }

    /// Smallest closed superset of `s`: all points whose every neighborhood
    /// meets `s`, i.e. whose minimal open intersects `s`.
    pub fn closure(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.set_from_bits(&self.closure_bits(&self.bits_from_set(s)?)))
    }

    fn component_labels(&self) -> Vec<usize> {
        // Reachability under x ~ y when y ∈ min_open(x) or x ∈ min_open(y);
        // for finite spaces this coincides with topological connectedness.
        let n = self.points.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = next;
            while let Some(i) = queue.pop_front() {
                #[allow(clippy::needless_range_loop)]
                for j in 0..n {
                    if label[j] != usize::MAX {
                        continue;
                    }
                    if self.min_open[i].contains(j) || self.min_open[j].contains(i) {
                        label[j] = next;
                        queue.push_back(j);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Whether the space admits no partition into two disjoint non-empty
    /// opens. The empty space counts as connected.
    pub fn is_connected(&self) -> bool {
        let labels = self.component_labels();
        labels.iter().all(|&l| l == 0)
    }

    /// Partition of the points into maximal connected subspaces, ordered by
    /// first occurrence.
    pub fn connected_components(&self) -> Vec<PointSet> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut comps = vec![PointSet::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            comps[l].insert(self.points[i].clone());
        }
        comps
    }

    /// All unordered pairs of distinct points with no disjoint open
    /// neighborhoods; for finite spaces, pairs whose minimal opens meet.
    /// Empty exactly when the space is discrete.
    pub fn non_hausdorff_pairs(&self) -> Vec<(String, String)> {
        let n = self.points.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.min_open[i].intersects(&self.min_open[j]) {
                    out.push((self.points[i].clone(), self.points[j].clone()));
                }
            }
        }
        out
    }

    pub(crate) fn enumerate_opens_bits(&self, limit: usize) -> Result<Vec<Bits>> {
        // Opens are exactly the unions of minimal opens; close {∅} under
        // union with each generator.
        let n = self.points.len();
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut queue = VecDeque::new();
        let empty = Bits::empty(n);
        seen.insert(empty.clone());
        queue.push_back(empty);
        while let Some(open) = queue.pop_front() {
            for gen in &self.min_open {
                let next = open.union(gen);
                if !seen.contains(&next) {
                    if seen.len() + 1 > limit {
                        return Err(Error::OpenFamilyLimit { limit });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut all: Vec<Bits> = seen.into_iter().collect();
        all.sort_by_key(|b| (b.count(), b.iter_ones().collect::<Vec<_>>()));
        Ok(all)
    }

    /// The complete open family, deduplicated, including the empty set and
    /// the whole space. Errors out if the family would exceed `limit`.
    pub fn enumerate_opens(&self, limit: usize) -> Result<Vec<PointSet>> {
        Ok(self
            .enumerate_opens_bits(limit)?
            .iter()
            .map(|b| self.set_from_bits(b))
            .collect())
    }

    /// The distinct minimal opens, sorted; a canonical basis of the topology.
    pub fn minimal_basis(&self) -> Vec<PointSet> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for b in &self.min_open {
            if seen.insert(b.clone()) {
                out.push(self.set_from_bits(b));
            }
        }
        out.sort();
        out
    }
}
