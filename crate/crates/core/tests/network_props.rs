//! Contraction-engine properties: the ordered route against the brute-force
//! route, invariance under projector refinement, and multiplicativity over
//! disjoint unions.

mod common;

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use topoq_core::network::{teleport_network, TensorNetwork};
use topoq_core::quantum::teleport;
use topoq_core::tensor::Tensor;

#[test]
fn ordered_contraction_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(21);
    for round in 0..150 {
        let net = random_network(&mut rng, 6);
        let full = net.contract_full().unwrap();
        let order = net.greedy_order();
        let ordered = net.contract_ordered(&order).unwrap();
        let distance = ordered
            .max_entry_distance(&full)
            .expect("same external shape");
        assert!(
            distance < 1e-12,
            "round {round}: ordered route drifted by {distance:e}"
        );
    }
}

#[test]
fn contraction_of_disjoint_union_multiplies() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..100 {
        // two closed networks (no externals) glued side by side
        let a = loop {
            let n = random_network(&mut rng, 3);
            if n.external_ports().is_empty() && !n.nodes().is_empty() {
                break n;
            }
        };
        let b = loop {
            let n = random_network(&mut rng, 3);
            if n.external_ports().is_empty() && !n.nodes().is_empty() {
                break n;
            }
        };
        let va = a.contract_full().unwrap().get(&[]).unwrap();
        let vb = b.contract_full().unwrap().get(&[]).unwrap();

        let mut nodes: BTreeMap<String, Tensor<f64>> = BTreeMap::new();
        for (name, t) in a.nodes() {
            nodes.insert(format!("A.{name}"), t.clone());
        }
        for (name, t) in b.nodes() {
            nodes.insert(format!("B.{name}"), t.clone());
        }
        let mut internal = Vec::new();
        for e in a.internal_edges() {
            let mut e = e.clone();
            e.a.0 = format!("A.{}", e.a.0);
            e.b.0 = format!("A.{}", e.b.0);
            internal.push(e);
        }
        for e in b.internal_edges() {
            let mut e = e.clone();
            e.a.0 = format!("B.{}", e.a.0);
            e.b.0 = format!("B.{}", e.b.0);
            internal.push(e);
        }
        let union = TensorNetwork::new(nodes, internal, Vec::new()).unwrap();
        let vu = union.contract_full().unwrap().get(&[]).unwrap();
        assert!(
            (vu - va * vb).norm() < 1e-10,
            "union {vu} vs product {}",
            va * vb
        );
        // the ordered route agrees on the union too
        let ordered = union.contract_ordered(&union.greedy_order()).unwrap();
        assert!((ordered.get(&[]).unwrap() - vu).norm() < 1e-12);
    }
}

/// The Bell-pair tensor δᵢⱼ over two ports: cup and cap alike.
fn cup() -> Tensor<f64> {
    Tensor::from_reals(vec![2, 2], &[1.0, 0.0, 0.0, 1.0]).unwrap()
}

/// Strand exchange: entry (a, b, c, d) is 1 exactly when d = a and c = b.
fn crossing() -> Tensor<f64> {
    let mut data = vec![0.0; 16];
    for a in 0..2 {
        for b in 0..2 {
            data[a * 8 + b * 4 + b * 2 + a] = 1.0;
        }
    }
    Tensor::from_reals(vec![2, 2, 2, 2], &data).unwrap()
}

/// The snake identity: a cup fed into a cap contracts to the identity
/// matrix, and sliding a cup through a crossing returns a cup.
#[test]
fn cup_cap_and_crossing_fixtures() {
    let mut nodes = BTreeMap::new();
    nodes.insert("cup".to_string(), cup());
    nodes.insert("cap".to_string(), cup());
    let snake = TensorNetwork::new(
        nodes,
        vec![topoq_core::network::InternalEdge {
            a: ("cup".into(), 1),
            b: ("cap".into(), 0),
        }],
        vec![("cup".into(), 0), ("cap".into(), 1)],
    )
    .unwrap();
    let id = snake.contract_full().unwrap();
    assert_eq!(
        id.data().iter().map(|c| c.re).collect::<Vec<_>>(),
        vec![1.0, 0.0, 0.0, 1.0]
    );
    let ordered = snake.contract_ordered(&snake.greedy_order()).unwrap();
    assert!(ordered.max_entry_distance(&id).unwrap() < 1e-12);

    let mut nodes = BTreeMap::new();
    nodes.insert("cup".to_string(), cup());
    nodes.insert("x".to_string(), crossing());
    let slide = TensorNetwork::new(
        nodes,
        vec![
            topoq_core::network::InternalEdge {
                a: ("cup".into(), 0),
                b: ("x".into(), 0),
            },
            topoq_core::network::InternalEdge {
                a: ("cup".into(), 1),
                b: ("x".into(), 1),
            },
        ],
        vec![("x".into(), 2), ("x".into(), 3)],
    )
    .unwrap();
    let slid = slide.contract_full().unwrap();
    assert_eq!(
        slid.data().iter().map(|c| c.re).collect::<Vec<_>>(),
        vec![1.0, 0.0, 0.0, 1.0]
    );
}

/// Teleporting the zero vector is the zero vector: contraction is linear.
#[test]
fn teleport_network_is_linear_at_zero() {
    let zero = Tensor::from_reals(vec![2], &[0.0, 0.0]).unwrap();
    let id = Tensor::from_reals(vec![2, 2], &[1.0, 0.0, 0.0, 1.0]).unwrap();
    let out = teleport_network(&zero, &id, &id)
        .unwrap()
        .contract_full()
        .unwrap();
    assert!(out.data().iter().all(|c| c.norm() == 0.0));
}

fn random_projector(rng: &mut StdRng) -> Tensor<f64> {
    // rank-1 projector v·vᴴ/⟨v,v⟩, or a 0/1 diagonal
    if rng.gen_bool(0.5) {
        let v = [random_complex(rng), random_complex(rng)];
        let norm = v[0].norm_sqr() + v[1].norm_sqr();
        if norm < 1e-3 {
            return random_projector(rng);
        }
        let mut data = Vec::with_capacity(4);
        for i in 0..2 {
            for j in 0..2 {
                data.push(v[i] * v[j].conj() / Complex64::new(norm, 0.0));
            }
        }
        Tensor::new(vec![2, 2], data).unwrap()
    } else {
        let d0 = f64::from(rng.gen_bool(0.5));
        let d1 = f64::from(rng.gen_bool(0.5));
        Tensor::from_reals(vec![2, 2], &[d0, 0.0, 0.0, d1]).unwrap()
    }
}

#[test]
fn projector_refinement_chain_preserves_contraction() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..60 {
        let p = random_projector(&mut rng);
        let mut nodes = BTreeMap::new();
        nodes.insert("p".to_string(), p);
        let mut net =
            TensorNetwork::new(nodes, vec![], vec![("p".into(), 0), ("p".into(), 1)]).unwrap();
        let reference = net.contract_full().unwrap();
        for k in 1..=5 {
            net = net.projector_refine("p").unwrap();
            let value = net.contract_full().unwrap();
            let distance = value.max_entry_distance(&reference).unwrap();
            assert!(
                distance < 1e-12 * k as f64,
                "refinement step {k} drifted by {distance:e}"
            );
            assert_eq!(net.nodes().len(), 1 + k);
        }
    }
}

#[test]
fn teleport_network_agrees_with_state_algebra() {
    let mut rng = StdRng::seed_from_u64(24);
    for _ in 0..100 {
        let psi = random_state(&mut rng, 1);
        let m = random_matrix2(&mut rng);
        let e = random_matrix2(&mut rng);
        let net = teleport_network(&psi.as_tensor(), &m.as_tensor(), &e.as_tensor()).unwrap();
        let contracted = net.contract_full().unwrap();
        match teleport(&psi, &m, &e) {
            Ok((out, scale)) => {
                for k in 0..2 {
                    let lhs = contracted.get(&[k]).unwrap();
                    let rhs = out.amplitudes()[k] * Complex64::new(scale, 0.0);
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
            Err(_) => {
                let norm: f64 = contracted.data().iter().map(|c| c.norm_sqr()).sum();
                assert!(norm < 1e-12, "teleport refused a branch the network kept");
            }
        }
    }
}
