//! Shared oracles and generators for the integration suites.
//!
//! Everything here recomputes expected values by a route independent of the
//! code under test: open families by closure of a subset family under
//! union/intersection over bitmasks, entanglement swaps by explicit 4-qubit
//! contraction, connectivity by breadth-first search on the graph.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::Rng;

use topoq_core::graph::{Graph, GraphEdge};
use topoq_core::network::{InternalEdge, TensorNetwork};
use topoq_core::quantum::{PureState, TwoQubitMatrix};
use topoq_core::space::{FiniteSpace, PointSet};
use topoq_core::tensor::Tensor;

pub fn ps(members: &[&str]) -> PointSet {
    members.iter().copied().collect()
}

pub fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// Closure of `subbasis ∪ {∅, X}` under pairwise union and intersection
/// over `n`-bit masks: the topology generated by the subbasis, computed
/// without any minimal-open machinery.
pub fn generated_topology(n: usize, subbasis: &[u32]) -> BTreeSet<u32> {
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut family: BTreeSet<u32> = [0u32, full].into_iter().collect();
    family.extend(subbasis.iter().map(|s| s & full));
    loop {
        let items: Vec<u32> = family.iter().copied().collect();
        let before = family.len();
        for &a in &items {
            for &b in &items {
                family.insert(a | b);
                family.insert(a & b);
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

/// Every topology on `n` labeled points (n ≤ 4), by filtering all subset
/// families for the axioms directly.
pub fn all_topologies(n: usize) -> Vec<BTreeSet<u32>> {
    let subsets = 1u32 << n;
    let full = subsets - 1;
    let mut out = Vec::new();
    for family_code in 0u64..(1u64 << subsets) {
        if family_code & 1 == 0 || family_code >> full & 1 == 0 {
            continue; // must contain ∅ and X
        }
        let members: Vec<u32> = (0..subsets).filter(|s| family_code >> s & 1 == 1).collect();
        let closed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| family_code >> (a | b) & 1 == 1 && family_code >> (a & b) & 1 == 1)
        });
        if closed {
            out.push(members.into_iter().collect());
        }
    }
    out
}

/// Builds the finite space whose opens are exactly `family` (which must be
/// a topology on `n` points).
pub fn space_from_family(n: usize, family: &BTreeSet<u32>) -> FiniteSpace {
    let names = point_names(n);
    let subbasis: Vec<PointSet> = family
        .iter()
        .map(|&mask| mask_to_set(&names, mask))
        .collect();
    FiniteSpace::from_subbasis(names, &subbasis).expect("family is a valid subbasis")
}

pub fn mask_to_set(names: &[String], mask: u32) -> PointSet {
    names
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, name)| name.clone())
        .collect()
}

pub fn set_to_mask(names: &[String], set: &PointSet) -> u32 {
    let mut mask = 0;
    for (i, name) in names.iter().enumerate() {
        if set.contains(name) {
            mask |= 1 << i;
        }
    }
    mask
}

/// The open family of a space as masks over its own point order.
pub fn open_family(space: &FiniteSpace) -> BTreeSet<u32> {
    let names = space.points().to_vec();
    space
        .enumerate_opens(1 << 16)
        .expect("test spaces stay small")
        .iter()
        .map(|open| set_to_mask(&names, open))
        .collect()
}

/// Random subbasis-generated space with 1..=max_points points.
pub fn random_space(rng: &mut StdRng, max_points: usize) -> FiniteSpace {
    let n = rng.gen_range(1..=max_points);
    let names = point_names(n);
    let set_count = rng.gen_range(0..=n + 2);
    let subbasis: Vec<PointSet> = (0..set_count)
        .map(|_| {
            let mask = rng.gen_range(0..(1u32 << n));
            mask_to_set(&names, mask)
        })
        .collect();
    FiniteSpace::from_subbasis(names, &subbasis).expect("generated subbasis is valid")
}

/// Random multigraph; self-loops and parallel edges possible. `connected`
/// forces a spanning tree first.
pub fn random_graph(rng: &mut StdRng, max_vertices: usize, connected: bool) -> Graph {
    let n = rng.gen_range(if connected { 2 } else { 1 }..=max_vertices.max(2));
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut next_edge = 0;
    if connected {
        for i in 1..n {
            let parent = rng.gen_range(0..i);
            edges.push(GraphEdge {
                id: format!("e{next_edge}"),
                ends: (vertices[parent].clone(), vertices[i].clone()),
            });
            next_edge += 1;
        }
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        edges.push(GraphEdge {
            id: format!("e{next_edge}"),
            ends: (vertices[a].clone(), vertices[b].clone()),
        });
        next_edge += 1;
    }
    Graph::new(vertices, edges).expect("generated graph is well-formed")
}

/// Disjoint union of two connected random graphs, with disambiguated ids.
pub fn two_component_graph(rng: &mut StdRng, max_vertices_each: usize) -> Graph {
    let left = random_graph(rng, max_vertices_each, true);
    let right = random_graph(rng, max_vertices_each, true);
    let vertices: Vec<String> = left
        .vertices()
        .iter()
        .map(|v| format!("L{v}"))
        .chain(right.vertices().iter().map(|v| format!("R{v}")))
        .collect();
    let edges: Vec<GraphEdge> = left
        .edges()
        .iter()
        .map(|e| GraphEdge {
            id: format!("L{}", e.id),
            ends: (format!("L{}", e.ends.0), format!("L{}", e.ends.1)),
        })
        .chain(right.edges().iter().map(|e| GraphEdge {
            id: format!("R{}", e.id),
            ends: (format!("R{}", e.ends.0), format!("R{}", e.ends.1)),
        }))
        .collect();
    Graph::new(vertices, edges).expect("disjoint union is well-formed")
}

pub fn random_complex(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_state(rng: &mut StdRng, n: usize) -> PureState<f64> {
    loop {
        let amps: Vec<Complex64> = (0..1 << n).map(|_| random_complex(rng)).collect();
        if let Ok(state) = PureState::new(n, amps) {
            return state;
        }
    }
}

pub fn random_matrix2(rng: &mut StdRng) -> TwoQubitMatrix<f64> {
    TwoQubitMatrix::new([
        [random_complex(rng), random_complex(rng)],
        [random_complex(rng), random_complex(rng)],
    ])
}

/// Random 2×2 unitary by Gram–Schmidt on random columns.
pub fn random_unitary2(rng: &mut StdRng) -> TwoQubitMatrix<f64> {
    loop {
        let a = [random_complex(rng), random_complex(rng)];
        let norm_a = (a[0].norm_sqr() + a[1].norm_sqr()).sqrt();
        if norm_a < 1e-3 {
            continue;
        }
        let u = [a[0] / norm_a, a[1] / norm_a];
        let b = [random_complex(rng), random_complex(rng)];
        let overlap = u[0].conj() * b[0] + u[1].conj() * b[1];
        let v_raw = [b[0] - overlap * u[0], b[1] - overlap * u[1]];
        let norm_v = (v_raw[0].norm_sqr() + v_raw[1].norm_sqr()).sqrt();
        if norm_v < 1e-3 {
            continue;
        }
        let v = [v_raw[0] / norm_v, v_raw[1] / norm_v];
        return TwoQubitMatrix::new([[u[0], v[0]], [u[1], v[1]]]);
    }
}

/// Entanglement-swap oracle: assemble the 4-qubit product amplitudes of the
/// two link states, contract the measurement matrix against the middle two
/// qubits, and read the result as an outer-pair matrix. No matrix products.
#[allow(clippy::needless_range_loop)]
pub fn swap_oracle(
    e: &TwoQubitMatrix<f64>,
    m: &TwoQubitMatrix<f64>,
    e2: &TwoQubitMatrix<f64>,
) -> TwoQubitMatrix<f64> {
    let mut four = [[[[Complex64::default(); 2]; 2]; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    four[a][b][c][d] = e.get(a, b) * e2.get(c, d);
                }
            }
        }
    }
    let mut out = [[Complex64::default(); 2]; 2];
    for a in 0..2 {
        for d in 0..2 {
            let mut acc = Complex64::default();
            for b in 0..2 {
                for c in 0..2 {
                    acc += m.get(b, c) * four[a][b][c][d];
                }
            }
            out[a][d] = acc;
        }
    }
    TwoQubitMatrix::new(out)
}

/// Random well-formed tensor network: at most `max_nodes` nodes, axis sizes
/// ≤ 3, a handful of internal edges (self-loops possible) and external
/// ports. Total internal assignment count stays ≤ 3^8.
pub fn random_network(rng: &mut StdRng, max_nodes: usize) -> TensorNetwork<f64> {
    let node_count = rng.gen_range(1..=max_nodes);
    let names: Vec<String> = (0..node_count).map(|i| format!("n{i}")).collect();
    let mut port_sizes: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let mut internal = Vec::new();
    let mut external = Vec::new();
    let edge_count = rng.gen_range(0..=8.min(node_count * 2));
    for _ in 0..edge_count {
        let size = rng.gen_range(1..=3);
        let a = rng.gen_range(0..node_count);
        let b = rng.gen_range(0..node_count);
        port_sizes[a].push(size);
        let port_a = port_sizes[a].len() - 1;
        port_sizes[b].push(size);
        let port_b = port_sizes[b].len() - 1;
        internal.push(InternalEdge {
            a: (names[a].clone(), port_a),
            b: (names[b].clone(), port_b),
        });
    }
    let external_count = rng.gen_range(0..=3);
    for _ in 0..external_count {
        let node = rng.gen_range(0..node_count);
        port_sizes[node].push(rng.gen_range(1..=3));
        external.push((names[node].clone(), port_sizes[node].len() - 1));
    }
    let mut nodes = BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        let shape = port_sizes[i].clone();
        let len = shape.iter().product();
        let data: Vec<Complex64> = (0..len).map(|_| random_complex(rng)).collect();
        nodes.insert(name.clone(), Tensor::new(shape, data).expect("consistent"));
    }
    TensorNetwork::new(nodes, internal, external).expect("generated wiring is valid")
}

pub fn max_matrix_distance(a: &TwoQubitMatrix<f64>, b: &TwoQubitMatrix<f64>) -> f64 {
    a.max_entry_distance(b)
}
