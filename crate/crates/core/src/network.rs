//! Tensor networks and their contraction.
//!
//! A network is a set of named nodes carrying dense tensors, a list of
//! internal edges identifying pairs of ports to sum over, and an ordered
//! list of external ports. Contraction sums, over all assignments of an
//! index to every internal edge, the product of the node entries picked out
//! by those indices. The brute-force route is the semantic reference, and
//! the pairwise ordered route must reproduce it entry for entry.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tensor::{IndexIter, Tensor};
use crate::tolerance;

/// A (node, port) pair.
pub type PortRef = (String, usize);

/// An internal edge joining two ports, possibly of the same node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalEdge {
    pub a: PortRef,
    pub b: PortRef,
}

/// One pairwise merge in a contraction plan. Every internal edge between
/// `first` and `second` is summed and the merged node keeps the id `first`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    pub first: String,
    pub second: String,
}

/// Where a node port is wired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wire {
    External(usize),
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TensorNetwork<F: Real> {
    nodes: BTreeMap<String, Tensor<F>>,
    internal: Vec<InternalEdge>,
    external: Vec<PortRef>,
}

impl<F: Real> TensorNetwork<F> {
    /// Validates that every port of every node is used exactly once
    /// (by one internal edge end or one external listing) and that
    /// internally joined ports have equal axis sizes.
    pub fn new(
        nodes: BTreeMap<String, Tensor<F>>,
        internal: Vec<InternalEdge>,
        external: Vec<PortRef>,
    ) -> Result<TensorNetwork<F>> {
        let net = TensorNetwork {
            nodes,
            internal,
            external,
        };
        let mut usage: BTreeMap<(String, usize), usize> = BTreeMap::new();
        {
            let mut touch = |node: &str, port: usize| -> Result<()> {
                let tensor = net
                    .nodes
                    .get(node)
                    .ok_or_else(|| Error::UnknownNode(node.into()))?;
                if port >= tensor.rank() {
                    return Err(Error::UnknownPort {
                        node: node.into(),
                        port,
                    });
                }
                *usage.entry((node.to_string(), port)).or_insert(0) += 1;
                Ok(())
            };
            for e in &net.internal {
                touch(&e.a.0, e.a.1)?;
                touch(&e.b.0, e.b.1)?;
            }
            for (node, port) in &net.external {
                touch(node, *port)?;
            }
        }
        for ((node, port), count) in &usage {
            if *count > 1 {
                return Err(Error::PortConflict {
                    node: node.clone(),
                    port: *port,
                });
            }
        }
        for (name, tensor) in &net.nodes {
            for port in 0..tensor.rank() {
                if !usage.contains_key(&(name.clone(), port)) {
                    return Err(Error::DanglingPort {
                        node: name.clone(),
                        port,
                    });
                }
            }
        }
        for e in &net.internal {
            let sa = net.axis_size(&e.a)?;
            let sb = net.axis_size(&e.b)?;
            if sa != sb {
                return Err(Error::EdgeSizeMismatch(sa, sb));
            }
        }
        Ok(net)
    }

    pub fn nodes(&self) -> &BTreeMap<String, Tensor<F>> {
        &self.nodes
    }

    pub fn internal_edges(&self) -> &[InternalEdge] {
        &self.internal
    }

    pub fn external_ports(&self) -> &[PortRef] {
        &self.external
    }

    fn axis_size(&self, port: &PortRef) -> Result<usize> {
        let tensor = self
            .nodes
            .get(&port.0)
            .ok_or_else(|| Error::UnknownNode(port.0.clone()))?;
        tensor
            .shape()
            .get(port.1)
            .copied()
            .ok_or_else(|| Error::UnknownPort {
                node: port.0.clone(),
                port: port.1,
            })
    }

    /// Per-node port bindings: each port resolves to an internal edge slot
    /// or an external slot.
    fn bindings(&self) -> BTreeMap<&str, Vec<Wire>> {
        let mut map: BTreeMap<&str, Vec<Wire>> = self
            .nodes
            .iter()
            .map(|(name, t)| (name.as_str(), vec![Wire::External(usize::MAX); t.rank()]))
            .collect();
        for (slot, e) in self.internal.iter().enumerate() {
            map.get_mut(e.a.0.as_str()).expect("validated")[e.a.1] = Wire::Edge(slot);
            map.get_mut(e.b.0.as_str()).expect("validated")[e.b.1] = Wire::Edge(slot);
        }
        for (slot, (node, port)) in self.external.iter().enumerate() {
            map.get_mut(node.as_str()).expect("validated")[*port] = Wire::External(slot);
        }
        map
    }

    fn sum_internal(&self, bindings: &BTreeMap<&str, Vec<Wire>>, ext_vals: &[usize]) -> Complex<F> {
        let edge_sizes: Vec<usize> = self
            .internal
            .iter()
            .map(|e| self.axis_size(&e.a).expect("validated"))
            .collect();
        let zero = Complex::new(F::zero(), F::zero());
        let one = Complex::new(F::one(), F::zero());
        let mut total = zero;
        for edge_vals in IndexIter::new(edge_sizes) {
            let mut product = one;
            for (name, tensor) in &self.nodes {
                let wires = &bindings[name.as_str()];
                let idx: Vec<usize> = wires
                    .iter()
                    .map(|w| match w {
                        Wire::Edge(slot) => edge_vals[*slot],
                        Wire::External(slot) => ext_vals[*slot],
                    })
                    .collect();
                product *= tensor.get(&idx).expect("validated indices");
                if product == zero {
                    break;
                }
            }
            total += product;
        }
        total
    }

    /// Contracts the network at one fixed assignment of indices to the
    /// external ports, by exhaustive summation over internal assignments.
    /// Cost grows exponentially with the number of internal edges.
    pub fn contract_brute(&self, assignment: &BTreeMap<PortRef, usize>) -> Result<Complex<F>> {
        for key in assignment.keys() {
            if !self.external.contains(key) {
                return Err(Error::Schema(format!(
                    "assignment references non-external port ({}, {})",
                    key.0, key.1
                )));
            }
        }
        let mut ext_vals = Vec::with_capacity(self.external.len());
        for port in &self.external {
            let &v = assignment.get(port).ok_or_else(|| Error::MissingIndex {
                node: port.0.clone(),
                port: port.1,
            })?;
            let size = self.axis_size(port)?;
            if v >= size {
                return Err(Error::IndexOutOfRange { index: v, size });
            }
            ext_vals.push(v);
        }
        Ok(self.sum_internal(&self.bindings(), &ext_vals))
    }

    /// Contracts over every external assignment, producing a tensor over
    /// the external ports in declared order. An empty network contracts to
    /// the rank-0 tensor holding 1, the empty product.
    pub fn contract_full(&self) -> Result<Tensor<F>> {
        let shape: Vec<usize> = self
            .external
            .iter()
            .map(|p| self.axis_size(p))
            .collect::<Result<_>>()?;
        let bindings = self.bindings();
        let mut data = Vec::with_capacity(shape.iter().product());
        for ext_vals in IndexIter::new(shape.clone()) {
            data.push(self.sum_internal(&bindings, &ext_vals));
        }
        Tensor::new(shape, data)
    }

    /// Greedy pairwise contraction plan: at every step merge the adjacent
    /// node pair whose merged tensor is smallest (product of remaining axis
    /// sizes), breaking ties by the lexicographically least id pair.
    /// Components reduce to one node each; [`contract_ordered`] multiplies
    /// the leftovers together.
    pub fn greedy_order(&self) -> Vec<ContractionStep> {
        // profile: live node -> surviving ports as (edge slot or external, size)
        let bindings = self.bindings();
        let mut profile: BTreeMap<String, Vec<(Wire, usize)>> = BTreeMap::new();
        for (name, tensor) in &self.nodes {
            let wires = &bindings[name.as_str()];
            let mut ports: Vec<(Wire, usize)> = wires
                .iter()
                .zip(tensor.shape())
                .map(|(w, &s)| (*w, s))
                .collect();
            // self-edges are traced away before any merge
            let own_edges: BTreeSet<usize> = self
                .internal
                .iter()
                .enumerate()
                .filter(|(_, e)| e.a.0 == *name && e.b.0 == *name)
                .map(|(slot, _)| slot)
                .collect();
            ports.retain(|(w, _)| !matches!(w, Wire::Edge(slot) if own_edges.contains(slot)));
            profile.insert(name.clone(), ports);
        }
        let mut edge_ends: BTreeMap<usize, (String, String)> = self
            .internal
            .iter()
            .enumerate()
            .filter(|(_, e)| e.a.0 != e.b.0)
            .map(|(slot, e)| (slot, (e.a.0.clone(), e.b.0.clone())))
            .collect();

        let mut steps = Vec::new();
        loop {
            let mut best: Option<(usize, (String, String))> = None;
            let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
            for (a, b) in edge_ends.values() {
                let (x, y) = if a < b { (a, b) } else { (b, a) };
                pairs.insert((x.clone(), y.clone()));
            }
            for (a, b) in pairs {
                let shared: BTreeSet<usize> = edge_ends
                    .iter()
                    .filter(|(_, (x, y))| (x == &a && y == &b) || (x == &b && y == &a))
                    .map(|(slot, _)| *slot)
                    .collect();
                let size: usize = profile[&a]
                    .iter()
                    .chain(profile[&b].iter())
                    .filter(|(w, _)| !matches!(w, Wire::Edge(slot) if shared.contains(slot)))
                    .map(|(_, s)| *s)
                    .product();
                let candidate = (size, (a, b));
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
            let Some((_, (a, b))) = best else { break };
            // merge b into a
            let shared: BTreeSet<usize> = edge_ends
                .iter()
                .filter(|(_, (x, y))| (x == &a && y == &b) || (x == &b && y == &a))
                .map(|(slot, _)| *slot)
                .collect();
            let mut merged: Vec<(Wire, usize)> = Vec::new();
            for &(w, s) in profile[&a].iter().chain(profile[&b].iter()) {
                if !matches!(w, Wire::Edge(slot) if shared.contains(&slot)) {
                    merged.push((w, s));
                }
            }
            profile.remove(&b);
            profile.insert(a.clone(), merged);
            edge_ends.retain(|slot, _| !shared.contains(slot));
            for ends in edge_ends.values_mut() {
                if ends.0 == b {
                    ends.0 = a.clone();
                }
                if ends.1 == b {
                    ends.1 = a.clone();
                }
            }
            steps.push(ContractionStep {
                first: a,
                second: b,
            });
        }
        steps
    }

    /// Executes a pairwise contraction plan. The result equals
    /// [`TensorNetwork::contract_full`] exactly up to floating-point
    /// reassociation (within 1e-12 per entry at desk scale).
    pub fn contract_ordered(&self, order: &[ContractionStep]) -> Result<Tensor<F>> {
        let bindings = self.bindings();
        let mut work: BTreeMap<String, (Tensor<F>, Vec<Wire>)> = BTreeMap::new();
        for (name, tensor) in &self.nodes {
            work.insert(
                name.clone(),
                (tensor.clone(), bindings[name.as_str()].clone()),
            );
        }
        // trace self-edges first; merges never create new ones
        for (tensor, wires) in work.values_mut() {
            loop {
                let mut found = None;
                'outer: for i in 0..wires.len() {
                    for j in i + 1..wires.len() {
                        if let (Wire::Edge(x), Wire::Edge(y)) = (wires[i], wires[j]) {
                            if x == y {
                                found = Some((i, j));
                                break 'outer;
                            }
                        }
                    }
                }
                let Some((i, j)) = found else { break };
                *tensor = tensor.trace_pair(i, j)?;
                wires.remove(j);
                wires.remove(i);
            }
        }
        for step in order {
            if step.first == step.second {
                return Err(Error::InvalidPlan(format!(
                    "step contracts node `{}` with itself",
                    step.first
                )));
            }
            let (tb, wb) = work
                .remove(&step.second)
                .ok_or_else(|| Error::InvalidPlan(format!("no node `{}`", step.second)))?;
            let (ta, wa) = work
                .remove(&step.first)
                .ok_or_else(|| Error::InvalidPlan(format!("no node `{}`", step.first)))?;
            let mut pairs = Vec::new();
            for (i, w) in wa.iter().enumerate() {
                if let Wire::Edge(x) = w {
                    for (j, v) in wb.iter().enumerate() {
                        if matches!(v, Wire::Edge(y) if y == x) {
                            pairs.push((i, j));
                        }
                    }
                }
            }
            let merged = ta.contract_with(&tb, &pairs)?;
            let summed_a: BTreeSet<usize> = pairs.iter().map(|&(i, _)| i).collect();
            let summed_b: BTreeSet<usize> = pairs.iter().map(|&(_, j)| j).collect();
            let mut wires: Vec<Wire> = wa
                .iter()
                .enumerate()
                .filter(|(i, _)| !summed_a.contains(i))
                .map(|(_, w)| *w)
                .collect();
            wires.extend(
                wb.iter()
                    .enumerate()
                    .filter(|(j, _)| !summed_b.contains(j))
                    .map(|(_, w)| *w),
            );
            work.insert(step.first.clone(), (merged, wires));
        }
        for (name, (_, wires)) in &work {
            if wires.iter().any(|w| matches!(w, Wire::Edge(_))) {
                return Err(Error::InvalidPlan(format!(
                    "internal edges remain on `{name}` after executing the plan"
                )));
            }
        }
        // multiply leftover components together, then put the external axes
        // into declared order
        let one = Tensor::scalar(Complex::new(F::one(), F::zero()));
        let mut result = one;
        let mut slots: Vec<usize> = Vec::new();
        for (_, (tensor, wires)) in work {
            result = result.outer(&tensor);
            slots.extend(wires.iter().map(|w| match w {
                Wire::External(s) => *s,
                Wire::Edge(_) => unreachable!("checked above"),
            }));
        }
        let perm: Vec<usize> = (0..slots.len())
            .map(|target| {
                slots
                    .iter()
                    .position(|&s| s == target)
                    .expect("every external slot appears once")
            })
            .collect();
        result.permute(&perm)
    }

    /// Splits a projector node `P` (square, `PP = P` within `tol`) into two
    /// copies of `P` joined by a fresh internal edge. External wiring is
    /// preserved and the contraction value is unchanged.
    pub fn projector_refine_with_tol(&self, node: &str, tol: F) -> Result<TensorNetwork<F>> {
        let tensor = self
            .nodes
            .get(node)
            .ok_or_else(|| Error::UnknownNode(node.into()))?;
        if tensor.rank() != 2 || tensor.shape()[0] != tensor.shape()[1] {
            return Err(Error::NotSquare(node.into()));
        }
        let pp = tensor.contract_with(tensor, &[(1, 0)])?;
        let deviation = pp.max_entry_distance(tensor).expect("same shape");
        if deviation > tol {
            return Err(Error::NotProjector {
                node: node.into(),
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut fresh = format!("{node}'");
        while self.nodes.contains_key(&fresh) {
            fresh.push('\'');
        }
        let mut nodes = self.nodes.clone();
        nodes.insert(fresh.clone(), tensor.clone());
        let reroute = |p: &PortRef| -> PortRef {
            if p.0 == node && p.1 == 1 {
                (fresh.clone(), 1)
            } else {
                p.clone()
            }
        };
        let mut internal: Vec<InternalEdge> = self
            .internal
            .iter()
            .map(|e| InternalEdge {
                a: reroute(&e.a),
                b: reroute(&e.b),
            })
            .collect();
        internal.push(InternalEdge {
            a: (node.into(), 1),
            b: (fresh.clone(), 0),
        });
        let external = self.external.iter().map(&reroute).collect();
        TensorNetwork::new(nodes, internal, external)
    }

    /// [`TensorNetwork::projector_refine_with_tol`] at the standard
    /// projector tolerance.
    pub fn projector_refine(&self, node: &str) -> Result<TensorNetwork<F>> {
        self.projector_refine_with_tol(node, F::from_f64_lossy(tolerance::RANK))
    }
}

/// The single-qubit teleportation network: state vector wired through a
/// measurement matrix into an entangled-pair matrix, one external port on
/// the far side. Its full contraction is the teleported (unnormalized)
/// state.
pub fn teleport_network<F: Real>(
    psi: &Tensor<F>,
    m: &Tensor<F>,
    e: &Tensor<F>,
) -> Result<TensorNetwork<F>> {
    for (tensor, shape) in [(psi, vec![2usize]), (m, vec![2, 2]), (e, vec![2, 2])] {
        if tensor.shape() != shape {
            return Err(Error::ShapeMismatch {
                expected: format!("{shape:?}"),
                got: format!("{:?}", tensor.shape()),
            });
        }
    }
    let mut nodes = BTreeMap::new();
    nodes.insert("psi".to_string(), psi.clone());
    nodes.insert("m".to_string(), m.clone());
    nodes.insert("e".to_string(), e.clone());
    TensorNetwork::new(
        nodes,
        vec![
            InternalEdge {
                a: ("psi".into(), 0),
                b: ("m".into(), 0),
            },
            InternalEdge {
                a: ("m".into(), 1),
                b: ("e".into(), 0),
            },
        ],
        vec![("e".into(), 1)],
    )
}
