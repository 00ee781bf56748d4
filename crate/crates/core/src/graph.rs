//! Graph-derived finite spaces and continuity checking.
//!
//! A multigraph yields two spaces on the point set `V(G) ∪ E(G)`:
//!
//! * [`graph_topology`]: basic opens are the edge neighborhoods
//!   `N(e) = {e, v, v'}`, so edges are fat points whose every neighborhood
//!   drags in both endpoints. Not Hausdorff as soon as the graph has an edge.
//! * [`face_model`]: the face-poset model of the geometric realization;
//!   edge points are open, a vertex's minimal open is the vertex plus its
//!   incident edges.
//!
//! The identity map between them is the finite stand-in for sending each
//! edge to the midpoint of its interval, and it fails to be continuous at
//! edge points whenever the graph has an edge.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::space::{FiniteSpace, PointSet};

/// An edge of a multigraph. Self-loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub id: String,
    pub ends: (String, String),
}

/// A combinatorial multigraph with string vertex and edge identifiers.
/// Edge ids live in the same namespace as vertex ids and must not collide,
/// since both become points of the derived spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<GraphEdge>,
}

impl Graph {
    pub fn new<I, S>(vertices: I, edges: Vec<GraphEdge>) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut ids: HashSet<&str> = HashSet::new();
        for v in &vertices {
            if !ids.insert(v) {
                return Err(Error::DuplicateGraphId(v.clone()));
            }
        }
        let vertex_set: HashSet<&str> = vertices.iter().map(|s| s.as_str()).collect();
        for e in &edges {
            if !ids.insert(&e.id) {
                return Err(Error::DuplicateGraphId(e.id.clone()));
            }
            for end in [&e.ends.0, &e.ends.1] {
                if !vertex_set.contains(end.as_str()) {
                    return Err(Error::UnknownVertex(end.clone()));
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    fn incident_edges(&self, v: &str) -> Vec<&GraphEdge> {
        self.edges
            .iter()
            .filter(|e| e.ends.0 == v || e.ends.1 == v)
            .collect()
    }

    /// Graph connectivity by breadth-first search over vertices; the empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut reached: HashSet<&str> = HashSet::new();
        let mut stack = vec![self.vertices[0].as_str()];
        reached.insert(self.vertices[0].as_str());
        while let Some(v) = stack.pop() {
            for e in self.incident_edges(v) {
                for end in [e.ends.0.as_str(), e.ends.1.as_str()] {
                    if reached.insert(end) {
                        stack.push(end);
                    }
                }
            }
        }
        reached.len() == self.vertices.len()
    }

    /// Points of the derived spaces: vertices first, then edges, in
    /// declaration order.
    pub fn space_points(&self) -> Vec<String> {
        self.vertices
            .iter()
            .cloned()
            .chain(self.edges.iter().map(|e| e.id.clone()))
            .collect()
    }
}

/// The edge-neighborhood topology on `V(G) ∪ E(G)`.
///
/// Basic opens are `N(e) = {e} ∪ endpoints(e)`, so `min_open(e) = N(e)` and
/// a vertex's minimal open is the intersection of its incident edge
/// neighborhoods. An isolated vertex becomes an open point forming its own
/// connected component, so space connectivity tracks graph connectivity.
pub fn graph_topology(g: &Graph) -> FiniteSpace {
    let mut subbasis = Vec::new();
    for e in g.edges() {
        let mut n: PointSet = [e.id.clone()].into_iter().collect();
        n.insert(e.ends.0.clone());
        n.insert(e.ends.1.clone());
        subbasis.push(n);
    }
    for v in g.vertices() {
        if g.incident_edges(v).is_empty() {
            subbasis.push([v.clone()].into_iter().collect());
        }
    }
    FiniteSpace::from_subbasis(g.space_points(), &subbasis)
        .expect("validated graph yields a valid subbasis")
}

/// The face-poset model of the geometric realization: edge points are open,
/// `min_open(v) = {v} ∪ incident edges`.
pub fn face_model(g: &Graph) -> FiniteSpace {
    let mut subbasis = Vec::new();
    for e in g.edges() {
        subbasis.push([e.id.clone()].into_iter().collect());
    }
    for v in g.vertices() {
        let mut star: PointSet = [v.clone()].into_iter().collect();
        for e in g.incident_edges(v) {
            star.insert(e.id.clone());
        }
        subbasis.push(star);
    }
    FiniteSpace::from_subbasis(g.space_points(), &subbasis)
        .expect("validated graph yields a valid subbasis")
}

/// A point-to-point map between two finite spaces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointMap {
    assignment: BTreeMap<String, String>,
}

impl PointMap {
    pub fn new(assignment: BTreeMap<String, String>) -> Self {
        PointMap { assignment }
    }

    /// The identity-on-ids map over the given points.
    pub fn identity<I, S>(points: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        PointMap {
            assignment: points
                .into_iter()
                .map(|p| {
                    let p = p.into();
                    (p.clone(), p)
                })
                .collect(),
        }
    }

    /// The constant map sending every given point to `target`.
    pub fn constant<I, S>(points: I, target: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let target = target.into();
        PointMap {
            assignment: points
                .into_iter()
                .map(|p| (p.into(), target.clone()))
                .collect(),
        }
    }

    pub fn get(&self, point: &str) -> Option<&str> {
        self.assignment.get(point).map(|s| s.as_str())
    }

    pub fn assignment(&self) -> &BTreeMap<String, String> {
        &self.assignment
    }
}

/// Outcome of a continuity check; `witness` is a codomain open whose
/// preimage fails to be open when the map is discontinuous.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityCheck {
    pub continuous: bool,
    pub witness: Option<PointSet>,
}

/// Checks continuity of `f : dom → cod` by testing preimages of the
/// codomain's minimal opens, which generate all opens under union.
///
/// Candidate opens are scanned smallest first (ties by member order), so the
/// reported witness is a smallest failing basic open.
pub fn is_continuous(
    f: &PointMap,
    dom: &FiniteSpace,
    cod: &FiniteSpace,
) -> Result<ContinuityCheck> {
    for key in f.assignment().keys() {
        if !dom.contains_point(key) {
            return Err(Error::UnknownPoint(key.clone()));
        }
    }
    for p in dom.points() {
        match f.get(p) {
            None => return Err(Error::MissingAssignment(p.clone())),
            Some(t) if !cod.contains_point(t) => return Err(Error::UnknownTarget(t.into())),
            _ => {}
        }
    }
    let mut candidates = cod.minimal_basis();
    candidates.sort_by_key(|s| (s.len(), s.to_sorted_vec()));
    for open in candidates {
        let preimage: PointSet = dom
            .points()
            .iter()
            .filter(|p| open.contains(f.get(p).expect("totality checked")))
            .cloned()
            .collect();
        if !dom.is_open(&preimage)? {
            return Ok(ContinuityCheck {
                continuous: false,
                witness: Some(open),
            });
        }
    }
    Ok(ContinuityCheck {
        continuous: true,
        witness: None,
    })
}
