//! Serde schemas for the on-disk formats and conversions to core types.
//!
//! Complex numbers are `[re, im]` pairs throughout. Point sets serialize as
//! sorted lists and maps as sorted objects, so emitting the same value twice
//! is byte-stable. All file formats are `f64`-concrete.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::augment::{AugmentedSpace, EntanglementLink};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphEdge, PointMap};
use crate::network::{InternalEdge, TensorNetwork};
use crate::quantum::{PureState, TwoQubitMatrix};
use crate::space::{FiniteSpace, PointSet};
use crate::tensor::Tensor;

/// A 2×2 complex matrix as nested `[re, im]` pairs.
pub type MatrixJson = [[[f64; 2]; 2]; 2];

pub fn matrix_from_json(m: &MatrixJson) -> TwoQubitMatrix<f64> {
    TwoQubitMatrix::new([
        [
            Complex64::new(m[0][0][0], m[0][0][1]),
            Complex64::new(m[0][1][0], m[0][1][1]),
        ],
        [
            Complex64::new(m[1][0][0], m[1][0][1]),
            Complex64::new(m[1][1][0], m[1][1][1]),
        ],
    ])
}

pub fn matrix_to_json(m: &TwoQubitMatrix<f64>) -> MatrixJson {
    [
        [
            [m.get(0, 0).re, m.get(0, 0).im],
            [m.get(0, 1).re, m.get(0, 1).im],
        ],
        [
            [m.get(1, 0).re, m.get(1, 0).im],
            [m.get(1, 1).re, m.get(1, 1).im],
        ],
    ]
}

/// `{"points": [...], "subbasis": [[...]], "min_open": {...}}`.
///
/// On input either `subbasis` or `min_open` suffices; when both are present
/// the derived minimal opens must agree with the declared ones. Emitted
/// spaces carry the canonical minimal basis as `subbasis` plus the full
/// `min_open` table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_open: Option<BTreeMap<String, Vec<String>>>,
}

impl SpaceJson {
    pub fn to_space(&self) -> Result<FiniteSpace> {
        let space = match (&self.subbasis, &self.min_open) {
            (Some(subbasis), _) => {
                let sets: Vec<PointSet> = subbasis
                    .iter()
                    .map(|s| s.iter().cloned().collect())
                    .collect();
                FiniteSpace::from_subbasis(self.points.clone(), &sets)?
            }
            (None, Some(min_open)) => {
                let table: HashMap<String, PointSet> = min_open
                    .iter()
                    .map(|(p, set)| (p.clone(), set.iter().cloned().collect()))
                    .collect();
                FiniteSpace::from_min_opens(self.points.clone(), &table)?
            }
            (None, None) => FiniteSpace::from_subbasis(self.points.clone(), &[])?,
        };
        if let (Some(_), Some(declared)) = (&self.subbasis, &self.min_open) {
            for (point, set) in declared {
                let got = space.min_open(point)?;
                if got.to_sorted_vec() != *set {
                    return Err(Error::Schema(format!(
                        "declared min_open of `{point}` does not match the subbasis-generated one"
                    )));
                }
            }
        }
        Ok(space)
    }

    pub fn from_space(space: &FiniteSpace) -> SpaceJson {
        let min_open = space
            .points()
            .iter()
            .map(|p| {
                (
                    p.clone(),
                    space.min_open(p).expect("own point").to_sorted_vec(),
                )
            })
            .collect();
        SpaceJson {
            points: space.points().to_vec(),
            subbasis: Some(
                space
                    .minimal_basis()
                    .iter()
                    .map(|s| s.to_sorted_vec())
                    .collect(),
            ),
            min_open: Some(min_open),
        }
    }
}

/// `{"vertices": [...], "edges": [{"id": "e", "ends": ["a", "b"]}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<GraphEdgeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphEdgeJson {
    pub id: String,
    pub ends: (String, String),
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(
            self.vertices.clone(),
            self.edges
                .iter()
                .map(|e| GraphEdge {
                    id: e.id.clone(),
                    ends: e.ends.clone(),
                })
                .collect(),
        )
    }

    pub fn from_graph(graph: &Graph) -> GraphJson {
        GraphJson {
            vertices: graph.vertices().to_vec(),
            edges: graph
                .edges()
                .iter()
                .map(|e| GraphEdgeJson {
                    id: e.id.clone(),
                    ends: e.ends.clone(),
                })
                .collect(),
        }
    }
}

/// `{"label": "E1", "left": "a", "right": "c", "state": [[[1,0],...]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinkJson {
    pub label: String,
    pub left: String,
    pub right: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<MatrixJson>,
}

impl LinkJson {
    pub fn to_link(&self) -> EntanglementLink<f64> {
        EntanglementLink {
            label: self.label.clone(),
            left: self.left.clone(),
            right: self.right.clone(),
            state: self.state.as_ref().map(matrix_from_json),
        }
    }

    pub fn from_link(link: &EntanglementLink<f64>) -> LinkJson {
        LinkJson {
            label: link.label.clone(),
            left: link.left.clone(),
            right: link.right.clone(),
            state: link.state.as_ref().map(matrix_to_json),
        }
    }
}

/// A links file: either a bare array of links or `{"links": [...]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LinksJson {
    Bare(Vec<LinkJson>),
    Wrapped { links: Vec<LinkJson> },
}

impl LinksJson {
    pub fn into_links(self) -> Vec<EntanglementLink<f64>> {
        let list = match self {
            LinksJson::Bare(list) => list,
            LinksJson::Wrapped { links } => links,
        };
        list.iter().map(LinkJson::to_link).collect()
    }
}

/// `{"base": space, "links": [...], "space": space}`. The welded result is
/// re-derived from `base` and `links` on input and must match `space` when
/// declared.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AugmentedJson {
    pub base: SpaceJson,
    pub links: Vec<LinkJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceJson>,
}

impl AugmentedJson {
    pub fn to_augmented(&self) -> Result<AugmentedSpace<f64>> {
        let base = self.base.to_space()?;
        let links = self.links.iter().map(LinkJson::to_link).collect();
        let augmented = AugmentedSpace::augment(base, links)?;
        if let Some(declared) = &self.space {
            if declared.to_space()? != *augmented.space() {
                return Err(Error::Schema(
                    "declared augmented space does not match the one derived from base and links"
                        .into(),
                ));
            }
        }
        Ok(augmented)
    }

    pub fn from_augmented(aug: &AugmentedSpace<f64>) -> AugmentedJson {
        AugmentedJson {
            base: SpaceJson::from_space(aug.base()),
            links: aug.links().iter().map(LinkJson::from_link).collect(),
            space: Some(SpaceJson::from_space(aug.space())),
        }
    }
}

/// A point map file: a plain object `{"domain point": "codomain point"}`.
pub type MapJson = BTreeMap<String, String>;

pub fn map_from_json(map: &MapJson) -> PointMap {
    PointMap::new(map.clone())
}

/// `{"n": 2, "amps": [[re, im], ...]}` with `2^n` amplitude pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateJson {
    pub n: usize,
    pub amps: Vec<[f64; 2]>,
}

impl StateJson {
    pub fn to_state(&self) -> Result<PureState<f64>> {
        PureState::new(
            self.n,
            self.amps
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        )
    }

    pub fn from_state(state: &PureState<f64>) -> StateJson {
        StateJson {
            n: state.num_qubits(),
            amps: state.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

/// One network node: `{"shape": [2, 2], "data": [[re, im], ...]}` row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeJson {
    pub shape: Vec<usize>,
    pub data: Vec<[f64; 2]>,
}

impl NodeJson {
    pub fn to_tensor(&self) -> Result<Tensor<f64>> {
        Tensor::new(
            self.shape.clone(),
            self.data
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        )
    }

    pub fn from_tensor(tensor: &Tensor<f64>) -> NodeJson {
        NodeJson {
            shape: tensor.shape().to_vec(),
            data: tensor.data().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InternalEdgeJson {
    pub a: (String, usize),
    pub b: (String, usize),
}

/// `{"nodes": {...}, "internal": [...], "external": [["A", 0], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkJson {
    pub nodes: BTreeMap<String, NodeJson>,
    #[serde(default)]
    pub internal: Vec<InternalEdgeJson>,
    #[serde(default)]
    pub external: Vec<(String, usize)>,
}

impl NetworkJson {
    pub fn to_network(&self) -> Result<TensorNetwork<f64>> {
        let nodes = self
            .nodes
            .iter()
            .map(|(name, node)| Ok((name.clone(), node.to_tensor()?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        TensorNetwork::new(
            nodes,
            self.internal
                .iter()
                .map(|e| InternalEdge {
                    a: e.a.clone(),
                    b: e.b.clone(),
                })
                .collect(),
            self.external.clone(),
        )
    }

    pub fn from_network(net: &TensorNetwork<f64>) -> NetworkJson {
        NetworkJson {
            nodes: net
                .nodes()
                .iter()
                .map(|(name, tensor)| (name.clone(), NodeJson::from_tensor(tensor)))
                .collect(),
            internal: net
                .internal_edges()
                .iter()
                .map(|e| InternalEdgeJson {
                    a: e.a.clone(),
                    b: e.b.clone(),
                })
                .collect(),
            external: net.external_ports().to_vec(),
        }
    }
}

/// A bare tensor, as emitted by contraction: `{"shape": [...], "data": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorJson {
    pub shape: Vec<usize>,
    pub data: Vec<[f64; 2]>,
}

impl TensorJson {
    pub fn from_tensor(tensor: &Tensor<f64>) -> TensorJson {
        TensorJson {
            shape: tensor.shape().to_vec(),
            data: tensor.data().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}
