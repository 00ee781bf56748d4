//! Welding entanglement links into a finite space.
//!
//! Each link contributes one fresh point `E` between two sites `L`, `R` of
//! the base space, with minimal open `min(L) ∪ {E} ∪ min(R)` (minimal opens
//! taken in the base). Base points keep their neighborhoods exactly, so the
//! link is the least structure joining the two sites: a disconnected pair
//! of components becomes connected through `E`, and removing the link
//! restores the base space on the nose.
//!
//! Measurement changes the welded topology. Collapsing a link re-augments
//! by the remaining links; swapping two links that share a middle site
//! replaces them by one link between the outer sites, combining the state
//! matrices through [`crate::quantum::entanglement_swap`] when both carry
//! states.

use crate::error::{Error, Result};
use crate::quantum::{entanglement_swap, TwoQubitMatrix};
use crate::scalar::Real;
use crate::space::{FiniteSpace, PointSet};

/// A pending entanglement link: a fresh point label, two base sites, and
/// optional two-qubit state metadata. The metadata is inert for topology;
/// only swapping consumes it. The state's left qubit sits at `left`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementLink<F: Real> {
    pub label: String,
    pub left: String,
    pub right: String,
    pub state: Option<TwoQubitMatrix<F>>,
}

impl<F: Real> EntanglementLink<F> {
    pub fn new(
        label: impl Into<String>,
        left: impl Into<String>,
        right: impl Into<String>,
    ) -> Self {
        EntanglementLink {
            label: label.into(),
            left: left.into(),
            right: right.into(),
            state: None,
        }
    }

    pub fn with_state(mut self, state: TwoQubitMatrix<F>) -> Self {
        self.state = Some(state);
        self
    }
}

/// A base space welded with entanglement links. `space` holds the result:
/// base points keep their base minimal opens and every link point `E` gets
/// `min(L) ∪ {E} ∪ min(R)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentedSpace<F: Real> {
    base: FiniteSpace,
    links: Vec<EntanglementLink<F>>,
    space: FiniteSpace,
}

impl<F: Real> AugmentedSpace<F> {
    /// Welds the links into the base. Labels must be pairwise distinct and
    /// absent from the base; endpoints must be base points. A degenerate
    /// link with `left == right` is allowed and doubles that site's
    /// neighborhood around the new point.
    pub fn augment(base: FiniteSpace, links: Vec<EntanglementLink<F>>) -> Result<Self> {
        let mut labels: Vec<&str> = Vec::new();
        for link in &links {
            if base.contains_point(&link.label) || labels.contains(&link.label.as_str()) {
                return Err(Error::LabelCollision(link.label.clone()));
            }
            labels.push(&link.label);
            for site in [&link.left, &link.right] {
                if !base.contains_point(site) {
                    return Err(Error::UnknownPoint(site.clone()));
                }
            }
        }
        let points: Vec<String> = base
            .points()
            .iter()
            .cloned()
            .chain(links.iter().map(|l| l.label.clone()))
            .collect();
        // base minimal opens regenerate the base topology; each link adds
        // its own neighborhood N(E) = min(L) ∪ {E} ∪ min(R)
        let mut subbasis = base.minimal_basis();
        for link in &links {
            let mut n: PointSet = [link.label.clone()].into_iter().collect();
            n = n.union(&base.min_open(&link.left)?);
            n = n.union(&base.min_open(&link.right)?);
            subbasis.push(n);
        }
        let space = FiniteSpace::from_subbasis(points, &subbasis)?;
        Ok(AugmentedSpace { base, links, space })
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn links(&self) -> &[EntanglementLink<F>] {
        &self.links
    }

    /// The welded space.
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    fn link(&self, label: &str) -> Result<&EntanglementLink<F>> {
        self.links
            .iter()
            .find(|l| l.label == label)
            .ok_or_else(|| Error::UnknownLink(label.into()))
    }

    /// Removes one link, modelling a measurement that destroys its
    /// entanglement; the result is the augmentation by the remaining links.
    /// Collapsing every link returns the base space exactly.
    pub fn collapse_link(&self, label: &str) -> Result<Self> {
        self.link(label)?;
        let remaining: Vec<EntanglementLink<F>> = self
            .links
            .iter()
            .filter(|l| l.label != label)
            .cloned()
            .collect();
        AugmentedSpace::augment(self.base.clone(), remaining)
    }

    /// Entanglement swap: links `ab` (sites A–B) and `bc` (sites B–C)
    /// sharing middle site B are replaced by one fresh link A–C. When both
    /// carry state matrices the new link's state is `E·M·E'` with `m` the
    /// measurement at B (identity when `None`); matrices are transposed as
    /// needed so each is oriented toward the middle site.
    pub fn swap_links(
        &self,
        ab: &str,
        bc: &str,
        new_label: &str,
        measurement: Option<&TwoQubitMatrix<F>>,
    ) -> Result<Self> {
        let first = self.link(ab)?.clone();
        let second = self.link(bc)?.clone();
        if ab == bc {
            return Err(Error::NoCommonSite(ab.into(), bc.into()));
        }
        // orient as A -(first)- B -(second)- C
        let (site_a, middle) = if second.left == first.right || second.right == first.right {
            (first.left.clone(), first.right.clone())
        } else if second.left == first.left || second.right == first.left {
            (first.right.clone(), first.left.clone())
        } else {
            return Err(Error::NoCommonSite(ab.into(), bc.into()));
        };
        let site_c = if second.left == middle {
            second.right.clone()
        } else {
            second.left.clone()
        };
        let state = match (&first.state, &second.state) {
            (Some(e), Some(e2)) => {
                // each matrix rows-first from its `left` site; point both
                // toward the middle
                let e_ab = if first.right == middle {
                    e.clone()
                } else {
                    e.transpose()
                };
                let e_bc = if second.left == middle {
                    e2.clone()
                } else {
                    e2.transpose()
                };
                let identity = TwoQubitMatrix::identity();
                let m = measurement.unwrap_or(&identity);
                Some(entanglement_swap(&e_ab, m, &e_bc))
            }
            _ => None,
        };
        let mut remaining: Vec<EntanglementLink<F>> = self
            .links
            .iter()
            .filter(|l| l.label != ab && l.label != bc)
            .cloned()
            .collect();
        if self.base.contains_point(new_label) || remaining.iter().any(|l| l.label == new_label) {
            return Err(Error::LabelCollision(new_label.into()));
        }
        remaining.push(EntanglementLink {
            label: new_label.into(),
            left: site_a,
            right: site_c,
            state,
        });
        AugmentedSpace::augment(self.base.clone(), remaining)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_topology, Graph, GraphEdge};

    type Link = EntanglementLink<f64>;

    fn ps(members: &[&str]) -> PointSet {
        members.iter().copied().collect()
    }

    fn edge(id: &str, a: &str, b: &str) -> GraphEdge {
        GraphEdge {
            id: id.into(),
            ends: (a.into(), b.into()),
        }
    }

    fn two_disjoint_edges() -> FiniteSpace {
        let g = Graph::new(
            ["a", "b", "c", "d"],
            vec![edge("e1", "a", "b"), edge("e2", "c", "d")],
        )
        .unwrap();
        graph_topology(&g)
    }

    #[test]
    fn bridging_link_connects_two_components() {
        let base = two_disjoint_edges();
        assert!(!base.is_connected());
        let aug = AugmentedSpace::augment(base, vec![Link::new("E", "a", "c")]).unwrap();
        assert!(aug.space().is_connected());
        assert_eq!(
            aug.space().min_open("E").unwrap(),
            ps(&["a", "b", "e1", "c", "d", "e2", "E"])
        );
        // base neighborhoods unchanged
        assert_eq!(
            aug.space().min_open("a").unwrap(),
            aug.base().min_open("a").unwrap()
        );
    }

    #[test]
    fn connected_base_stays_connected() {
        let g = Graph::new(
            ["a", "b", "c"],
            vec![edge("e1", "a", "b"), edge("e2", "b", "c")],
        )
        .unwrap();
        let base = graph_topology(&g);
        assert!(base.is_connected());
        let aug = AugmentedSpace::augment(base, vec![Link::new("E", "a", "c")]).unwrap();
        assert!(aug.space().is_connected());
    }

    #[test]
    fn degenerate_self_link_is_valid() {
        let base = FiniteSpace::from_subbasis(["a"], &[]).unwrap();
        let aug = AugmentedSpace::augment(base, vec![Link::new("E", "a", "a")]).unwrap();
        assert_eq!(aug.space().min_open("E").unwrap(), ps(&["a", "E"]));
    }

    #[test]
    fn augment_validates_labels_and_sites() {
        let base = two_disjoint_edges();
        assert_eq!(
            AugmentedSpace::<f64>::augment(base.clone(), vec![Link::new("a", "a", "c")])
                .unwrap_err(),
            Error::LabelCollision("a".into())
        );
        assert_eq!(
            AugmentedSpace::<f64>::augment(
                base.clone(),
                vec![Link::new("E", "a", "c"), Link::new("E", "b", "d")],
            )
            .unwrap_err(),
            Error::LabelCollision("E".into())
        );
        assert_eq!(
            AugmentedSpace::<f64>::augment(base, vec![Link::new("E", "zz", "c")]).unwrap_err(),
            Error::UnknownPoint("zz".into())
        );
    }

    #[test]
    fn collapse_restores_base() {
        let base = two_disjoint_edges();
        let aug = AugmentedSpace::augment(base.clone(), vec![Link::new("E", "a", "c")]).unwrap();
        let collapsed = aug.collapse_link("E").unwrap();
        assert_eq!(collapsed.space(), &base);
        assert!(!collapsed.space().is_connected());
        assert_eq!(collapsed.space().connected_components().len(), 2);
        assert_eq!(
            aug.collapse_link("zz").unwrap_err(),
            Error::UnknownLink("zz".into())
        );
    }

    #[test]
    fn link_points_are_non_hausdorff_with_their_sites() {
        let base = two_disjoint_edges();
        let aug = AugmentedSpace::augment(base, vec![Link::new("E", "a", "c")]).unwrap();
        let pairs = aug.space().non_hausdorff_pairs();
        let has = |x: &str, y: &str| {
            pairs
                .iter()
                .any(|(p, q)| (p == x && q == y) || (p == y && q == x))
        };
        assert!(has("E", "a"));
        assert!(has("E", "c"));
    }

    #[test]
    fn swap_reconnects_outer_sites_and_releases_middle() {
        let base =
            FiniteSpace::from_subbasis(["A", "B", "C"], &[ps(&["A"]), ps(&["B"]), ps(&["C"])])
                .unwrap();
        let id = TwoQubitMatrix::<f64>::identity();
        let aug = AugmentedSpace::augment(
            base,
            vec![
                Link::new("ab", "A", "B").with_state(id.clone()),
                Link::new("bc", "B", "C").with_state(id.clone()),
            ],
        )
        .unwrap();
        assert!(aug.space().is_connected());

        let swapped = aug.swap_links("ab", "bc", "ac", None).unwrap();
        let comps = swapped.space().connected_components();
        assert_eq!(comps.len(), 2);
        let ac_comp = comps.iter().find(|c| c.contains("A")).unwrap();
        assert!(ac_comp.contains("C"));
        assert!(!ac_comp.contains("B"));
        // identity states under identity measurement combine to identity
        let new_state = swapped.links()[0].state.as_ref().unwrap();
        assert!(new_state.max_entry_distance(&id) < 1e-12);
    }

    #[test]
    fn swap_errors() {
        let base = FiniteSpace::from_subbasis(
            ["A", "B", "C", "D"],
            &[ps(&["A"]), ps(&["B"]), ps(&["C"]), ps(&["D"])],
        )
        .unwrap();
        let aug = AugmentedSpace::<f64>::augment(
            base,
            vec![Link::new("ab", "A", "B"), Link::new("cd", "C", "D")],
        )
        .unwrap();
        assert_eq!(
            aug.swap_links("ab", "cd", "x", None).unwrap_err(),
            Error::NoCommonSite("ab".into(), "cd".into())
        );
        assert_eq!(
            aug.swap_links("ab", "zz", "x", None).unwrap_err(),
            Error::UnknownLink("zz".into())
        );
        assert_eq!(
            aug.swap_links("ab", "ab", "x", None).unwrap_err(),
            Error::NoCommonSite("ab".into(), "ab".into())
        );
    }

    #[test]
    fn swap_respects_link_orientation() {
        // first link stored C-facing-left: (B, A) with state X; oriented
        // toward the middle it must transpose
        let base =
            FiniteSpace::from_subbasis(["A", "B", "C"], &[ps(&["A"]), ps(&["B"]), ps(&["C"])])
                .unwrap();
        let asym = TwoQubitMatrix::from_reals([[1.0, 2.0], [3.0, 4.0]]);
        let id = TwoQubitMatrix::<f64>::identity();
        let aug = AugmentedSpace::augment(
            base,
            vec![
                Link::new("ab", "B", "A").with_state(asym.clone()),
                Link::new("bc", "B", "C").with_state(id.clone()),
            ],
        )
        .unwrap();
        let swapped = aug.swap_links("ab", "bc", "ac", None).unwrap();
        let link = &swapped.links()[0];
        assert_eq!(link.left, "A");
        assert_eq!(link.right, "C");
        let got = link.state.as_ref().unwrap();
        assert!(got.max_entry_distance(&asym.transpose()) < 1e-12);
    }
}
