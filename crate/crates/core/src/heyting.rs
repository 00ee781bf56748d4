//! The Heyting algebra of open sets of a finite space.
//!
//! Opens form a lattice under union and intersection with pseudo-complement
//! `∼U = Int(U^c)` and implication `U ⇒ V = Int(U^c ∪ V)`; the algebra is
//! Boolean exactly when every open set is also closed. Excluded middle can
//! fail: `U ∪ ∼U` need not be the whole space, which is precisely what
//! makes the algebra sensitive to connectivity.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::space::{FiniteSpace, PointSet};

/// Cap on exhaustive (U, V, W) adjunction triples; above it the sweep
/// switches to seeded sampling and says so in the report.
const TRIPLE_BUDGET: usize = 2_000_000;
const TRIPLE_SAMPLES: usize = 20_000;
const DEFAULT_SEED: u64 = 0x48_45_59_54; // "HEYT"

/// Heyting-algebra operations over the opens of one space.
#[derive(Debug, Clone, Copy)]
pub struct HeytingContext<'a> {
    space: &'a FiniteSpace,
}

/// Which law a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// ∼∼∼U = ∼U
    TripleNegation,
    /// W ∩ U ⊆ V ⟺ W ⊆ (U ⇒ V)
    Adjunction,
    /// U ∩ ∼U = ∅
    NonContradiction,
    /// in a Boolean algebra, ∼U = U^c
    BooleanComplement,
}

#[derive(Debug, Clone)]
pub struct LawViolation {
    pub law: Law,
    pub sets: Vec<PointSet>,
}

/// Result of a law-verification sweep. A passing report has no violations.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub opens_checked: usize,
    /// Whether the whole open family was enumerated (vs. sampled unions of
    /// minimal opens after the enumeration limit was hit).
    pub opens_exhaustive: bool,
    pub triples_checked: usize,
    /// Whether every (U, V, W) adjunction triple was checked.
    pub triples_exhaustive: bool,
    pub boolean: bool,
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<'a> HeytingContext<'a> {
    pub fn new(space: &'a FiniteSpace) -> Self {
        HeytingContext { space }
    }

    pub fn space(&self) -> &FiniteSpace {
        self.space
    }

    fn open_bits(&self, u: &PointSet) -> Result<Bits> {
        let b = self.space.bits_from_set(u)?;
        if !self.space.is_open_bits(&b) {
            return Err(Error::NotOpen(u.to_sorted_vec()));
        }
        Ok(b)
    }

    fn negation_bits(&self, u: &Bits) -> Bits {
        self.space.interior_bits(&u.complement())
    }

    fn implication_bits(&self, u: &Bits, v: &Bits) -> Bits {
        self.space.interior_bits(&u.complement().union(v))
    }

    /// Pseudo-complement `∼U = Int(U^c)`; always open and disjoint from `U`.
    pub fn negation(&self, u: &PointSet) -> Result<PointSet> {
        let b = self.open_bits(u)?;
        Ok(self.space.set_from_bits(&self.negation_bits(&b)))
    }

    /// Heyting implication `U ⇒ V = Int(U^c ∪ V)`, the largest open `W`
    /// with `W ∩ U ⊆ V`. Negation is the special case `V = ∅`.
    pub fn implication(&self, u: &PointSet, v: &PointSet) -> Result<PointSet> {
        let ub = self.open_bits(u)?;
        let vb = self.open_bits(v)?;
        Ok(self.space.set_from_bits(&self.implication_bits(&ub, &vb)))
    }

    /// True iff every open set is also closed. It suffices to test the
    /// minimal opens: every open is a finite union of them, and finite
    /// unions of closed sets are closed.
    pub fn is_boolean(&self) -> bool {
        (0..self.space.len()).all(|i| {
            self.space
                .is_open_bits(&self.space.min_open_bits(i).complement())
        })
    }

    /// Negations of the distinct minimal opens, the generators of the
    /// algebra.
    pub fn negation_table(&self) -> Vec<(PointSet, PointSet)> {
        self.space
            .minimal_basis()
            .into_iter()
            .map(|u| {
                let n = self.negation(&u).expect("minimal opens are open");
                (u, n)
            })
            .collect()
    }

    /// Sweeps the Heyting laws over the open family with a default seed for
    /// any sampling. See [`HeytingContext::verify_laws_seeded`].
    pub fn verify_laws(&self, limit: usize) -> LawReport {
        self.verify_laws_seeded(limit, DEFAULT_SEED)
    }

    /// Sweeps the Heyting laws: triple negation, the adjunction
    /// characterizing implication, non-contradiction, and (for Boolean
    /// algebras) agreement of `∼U` with the set complement.
    ///
    /// Opens are enumerated exhaustively when the family fits within
    /// `limit`, otherwise sampled as seeded random unions of minimal opens.
    /// Adjunction triples are exhaustive within an internal budget and
    /// sampled beyond it; the report records which regime ran.
    pub fn verify_laws_seeded(&self, limit: usize, seed: u64) -> LawReport {
        let mut rng = StdRng::seed_from_u64(seed);
        let (opens, opens_exhaustive) = match self.space.enumerate_opens_bits(limit) {
            Ok(all) => (all, true),
            Err(_) => (self.sample_opens(limit.max(2), &mut rng), false),
        };
        let boolean = self.is_boolean();
        let mut violations = Vec::new();

        let negations: Vec<Bits> = opens.iter().map(|u| self.negation_bits(u)).collect();
        for (u, nu) in opens.iter().zip(&negations) {
            let nnu = self.negation_bits(nu);
            let nnnu = self.negation_bits(&nnu);
            if nnnu != *nu {
                violations.push(LawViolation {
                    law: Law::TripleNegation,
                    sets: vec![self.space.set_from_bits(u)],
                });
            }
            if !u.intersection(nu).is_empty() {
                violations.push(LawViolation {
                    law: Law::NonContradiction,
                    sets: vec![self.space.set_from_bits(u)],
                });
            }
            if boolean && *nu != u.complement() {
                violations.push(LawViolation {
                    law: Law::BooleanComplement,
                    sets: vec![self.space.set_from_bits(u)],
                });
            }
        }

        let n = opens.len();
        let exhaustive_triples = n.saturating_mul(n).saturating_mul(n) <= TRIPLE_BUDGET;
        let mut triples_checked = 0;
        let check_triple = |u: &Bits, v: &Bits, w: &Bits, violations: &mut Vec<LawViolation>| {
            let imp = self.implication_bits(u, v);
            let lhs = w.intersection(u).is_subset(v);
            let rhs = w.is_subset(&imp);
            if lhs != rhs {
                violations.push(LawViolation {
                    law: Law::Adjunction,
                    sets: vec![
                        self.space.set_from_bits(u),
                        self.space.set_from_bits(v),
                        self.space.set_from_bits(w),
                    ],
                });
            }
        };
        if exhaustive_triples {
            for u in &opens {
                for v in &opens {
                    for w in &opens {
                        check_triple(u, v, w, &mut violations);
                        triples_checked += 1;
                    }
                }
            }
        } else {
            for _ in 0..TRIPLE_SAMPLES {
                let u = &opens[rng.gen_range(0..n)];
                let v = &opens[rng.gen_range(0..n)];
                let w = &opens[rng.gen_range(0..n)];
                check_triple(u, v, w, &mut violations);
                triples_checked += 1;
            }
        }

        LawReport {
            opens_checked: opens.len(),
            opens_exhaustive,
            triples_checked,
            triples_exhaustive: exhaustive_triples,
            boolean,
            violations,
        }
    }

    fn sample_opens(&self, count: usize, rng: &mut StdRng) -> Vec<Bits> {
        let n = self.space.len();
        let mut opens = vec![Bits::empty(n), Bits::full(n)];
        while opens.len() < count {
            let mut u = Bits::empty(n);
            for i in 0..n {
                if rng.gen_bool(0.5) {
                    u.union_in_place(self.space.min_open_bits(i));
                }
            }
            opens.push(u);
        }
        opens.sort_by_key(|b| (b.count(), b.iter_ones().collect::<Vec<_>>()));
        opens.dedup();
        opens
    }
}
