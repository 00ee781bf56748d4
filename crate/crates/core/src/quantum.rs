//! Few-qubit pure-state algebra: the two-qubit state/matrix correspondence,
//! entanglement detection, standard-basis measurement, single-qubit
//! teleportation and entanglement swapping, and the GHZ/W constructors.
//!
//! Qubit 0 is the leftmost tensor factor: the amplitude index of
//! `|b0 b1 … b(n-1)⟩` is the number with binary digits `b0 b1 … b(n-1)`,
//! so for two qubits the amplitude of `|ij⟩` sits at `2i + j` and the state
//! matrix is `m[i][j] = amp(|ij⟩)`.
//!
//! States are normalized at construction; operations that drop a scale
//! (teleportation, the matrix→state direction) report it next to the
//! result, keeping probability bookkeeping exact while matching the usual
//! habit of writing unnormalized kets.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::singular_values;
use crate::scalar::Real;
use crate::tensor::Tensor;
use crate::tolerance;

/// A normalized pure state on `n ≥ 1` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<F: Real> {
    num_qubits: usize,
    amps: Vec<Complex<F>>,
}

/// A two-qubit state written as a 2×2 complex matrix. Also the home of
/// measurement matrices: no constraint beyond the shape.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitMatrix<F: Real> {
    m: [[Complex<F>; 2]; 2],
}

impl<F: Real> PureState<F> {
    /// Normalizing constructor. The amplitude vector must have length
    /// `2^num_qubits` and nonzero norm.
    pub fn new(num_qubits: usize, amps: Vec<Complex<F>>) -> Result<PureState<F>> {
        if num_qubits == 0 {
            return Err(Error::TooFewQubits { min: 1, got: 0 });
        }
        if amps.len() != 1 << num_qubits {
            return Err(Error::BadAmplitudeLength {
                got: amps.len(),
                qubits: num_qubits,
            });
        }
        let norm_sqr: F = amps.iter().fold(F::zero(), |acc, a| acc + a.norm_sqr());
        if norm_sqr < F::from_f64_lossy(tolerance::BRANCH) {
            return Err(Error::ZeroVector);
        }
        let norm = norm_sqr.sqrt();
        let amps = amps
            .into_iter()
            .map(|a| a / Complex::new(norm, F::zero()))
            .collect();
        Ok(PureState { num_qubits, amps })
    }

    /// The basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<PureState<F>> {
        let mut amps = vec![Complex::new(F::zero(), F::zero()); 1 << num_qubits];
        if index >= amps.len() {
            return Err(Error::IndexOutOfRange {
                index,
                size: amps.len(),
            });
        }
        amps[index] = Complex::new(F::one(), F::zero());
        PureState::new(num_qubits, amps)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<F>] {
        &self.amps
    }

    /// `⟨self|other⟩`.
    pub fn inner_product(&self, other: &PureState<F>) -> Result<Complex<F>> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::WrongQubitCount {
                expected: self.num_qubits,
                got: other.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(F::zero(), F::zero()), |acc, (a, b)| {
                acc + a.conj() * *b
            }))
    }

    /// `|⟨self|other⟩|²`; 1 exactly when the states agree up to global
    /// phase.
    pub fn fidelity(&self, other: &PureState<F>) -> Result<F> {
        Ok(self.inner_product(other)?.norm_sqr())
    }

    /// Rank-1 tensor over the amplitude index.
    pub fn as_tensor(&self) -> Tensor<F> {
        Tensor::new(vec![1 << self.num_qubits], self.amps.clone()).expect("length invariant")
    }
}

impl<F: Real> TwoQubitMatrix<F> {
    pub fn new(m: [[Complex<F>; 2]; 2]) -> TwoQubitMatrix<F> {
        TwoQubitMatrix { m }
    }

    pub fn from_reals(rows: [[F; 2]; 2]) -> TwoQubitMatrix<F> {
        TwoQubitMatrix {
            m: rows.map(|row| row.map(|re| Complex::new(re, F::zero()))),
        }
    }

    pub fn identity() -> TwoQubitMatrix<F> {
        TwoQubitMatrix::from_reals([[F::one(), F::zero()], [F::zero(), F::one()]])
    }

    /// The exchange (bit-flip) matrix.
    pub fn exchange() -> TwoQubitMatrix<F> {
        TwoQubitMatrix::from_reals([[F::zero(), F::one()], [F::one(), F::zero()]])
    }

    pub fn entries(&self) -> &[[Complex<F>; 2]; 2] {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<F> {
        self.m[i][j]
    }

    pub fn determinant(&self) -> Complex<F> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn transpose(&self) -> TwoQubitMatrix<F> {
        TwoQubitMatrix {
            m: [[self.m[0][0], self.m[1][0]], [self.m[0][1], self.m[1][1]]],
        }
    }

    pub fn conjugate_transpose(&self) -> TwoQubitMatrix<F> {
        TwoQubitMatrix {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    /// Matrix product `self · other`.
    pub fn product(&self, other: &TwoQubitMatrix<F>) -> TwoQubitMatrix<F> {
        let mut out = [[Complex::new(F::zero(), F::zero()); 2]; 2];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (k, o) in out_row.iter_mut().enumerate() {
                *o = self.m[i][0] * other.m[0][k] + self.m[i][1] * other.m[1][k];
            }
        }
        TwoQubitMatrix { m: out }
    }

    pub fn frobenius_norm(&self) -> F {
        self.m
            .iter()
            .flatten()
            .fold(F::zero(), |acc, e| acc + e.norm_sqr())
            .sqrt()
    }

    pub fn max_entry_distance(&self, other: &TwoQubitMatrix<F>) -> F {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(F::zero(), F::max)
    }

    /// Rank-2 tensor with axis 0 the row (left qubit) index.
    pub fn as_tensor(&self) -> Tensor<F> {
        Tensor::new(
            vec![2, 2],
            vec![self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]],
        )
        .expect("2x2")
    }
}

/// Two-qubit state as a matrix: `m[i][j]` is the amplitude of `|ij⟩`.
pub fn state_to_matrix<F: Real>(s: &PureState<F>) -> Result<TwoQubitMatrix<F>> {
    if s.num_qubits() != 2 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            got: s.num_qubits(),
        });
    }
    let a = s.amplitudes();
    Ok(TwoQubitMatrix::new([[a[0], a[1]], [a[2], a[3]]]))
}

/// Matrix back to a normalized state, returning the dropped scale (the
/// Frobenius norm): `scale · state == matrix` entrywise. This is also how a
/// linear map from scalars into the two-qubit space picks out a state: the
/// image of 1 read as amplitudes.
pub fn matrix_to_state<F: Real>(m: &TwoQubitMatrix<F>) -> Result<(PureState<F>, F)> {
    let scale = m.frobenius_norm();
    let amps = vec![m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)];
    let state = PureState::new(2, amps)?;
    Ok((state, scale))
}

/// Entanglement test for two qubits: the state matrix of a product state is
/// rank 1, so a nonzero determinant (beyond the rank tolerance) means
/// entangled.
pub fn is_entangled<F: Real>(s: &PureState<F>) -> Result<bool> {
    let det = state_to_matrix(s)?.determinant();
    Ok(det.norm() > F::from_f64_lossy(tolerance::RANK))
}

/// Schmidt rank across a bipartition: the rank of the amplitude matrix with
/// rows indexed by the `cut` qubits and columns by the rest (singular
/// values above the rank tolerance). Rank 1 means a product state across
/// the cut.
pub fn schmidt_rank<F: Real>(s: &PureState<F>, cut: &[usize]) -> Result<usize> {
    let n = s.num_qubits();
    if cut.is_empty() || cut.len() >= n {
        return Err(Error::InvalidCut(format!(
            "cut must name a non-empty proper subset of the {n} qubits"
        )));
    }
    let mut seen = vec![false; n];
    for &q in cut {
        if q >= n {
            return Err(Error::QubitOutOfRange {
                index: q,
                qubits: n,
            });
        }
        if std::mem::replace(&mut seen[q], true) {
            return Err(Error::InvalidCut(format!("qubit {q} listed twice")));
        }
    }
    let rest: Vec<usize> = (0..n).filter(|q| !seen[*q]).collect();
    let rows = 1usize << cut.len();
    let cols = 1usize << rest.len();
    let mut matrix = vec![vec![Complex::new(F::zero(), F::zero()); cols]; rows];
    for (idx, &amp) in s.amplitudes().iter().enumerate() {
        let bit = |q: usize| (idx >> (n - 1 - q)) & 1;
        let mut r = 0;
        for &q in cut {
            r = (r << 1) | bit(q);
        }
        let mut c = 0;
        for &q in &rest {
            c = (c << 1) | bit(q);
        }
        matrix[r][c] = amp;
    }
    let threshold = F::from_f64_lossy(tolerance::RANK);
    Ok(singular_values(&matrix)
        .into_iter()
        .filter(|sv| *sv > threshold)
        .count())
}

/// Probabilities of measuring 0 and 1 on one qubit in the standard basis.
/// They sum to 1 up to rounding.
pub fn measure_probabilities<F: Real>(s: &PureState<F>, qubit: usize) -> Result<(F, F)> {
    let n = s.num_qubits();
    if qubit >= n {
        return Err(Error::QubitOutOfRange {
            index: qubit,
            qubits: n,
        });
    }
    let pos = n - 1 - qubit;
    let mut p = [F::zero(), F::zero()];
    for (idx, amp) in s.amplitudes().iter().enumerate() {
        p[(idx >> pos) & 1] += amp.norm_sqr();
    }
    Ok((p[0], p[1]))
}

/// Projective standard-basis measurement of one qubit. Returns the branch
/// probability and the normalized residual state on the remaining qubits.
/// Requesting a branch of probability below the impossible-branch
/// threshold is an error.
pub fn measure_qubit<F: Real>(
    s: &PureState<F>,
    qubit: usize,
    outcome: u8,
) -> Result<(F, PureState<F>)> {
    let n = s.num_qubits();
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    if qubit >= n {
        return Err(Error::QubitOutOfRange {
            index: qubit,
            qubits: n,
        });
    }
    let pos = n - 1 - qubit;
    let low_mask = (1usize << pos) - 1;
    let mut slice = vec![Complex::new(F::zero(), F::zero()); 1 << (n - 1)];
    let mut prob = F::zero();
    for (idx, &amp) in s.amplitudes().iter().enumerate() {
        if ((idx >> pos) & 1) as u8 == outcome {
            let residual_idx = ((idx >> (pos + 1)) << pos) | (idx & low_mask);
            slice[residual_idx] = amp;
            prob += amp.norm_sqr();
        }
    }
    if prob < F::from_f64_lossy(tolerance::BRANCH) {
        return Err(Error::ImpossibleBranch {
            probability: num_traits::ToPrimitive::to_f64(&prob).unwrap_or(0.0),
        });
    }
    Ok((prob, PureState::new(n - 1, slice)?))
}

/// Samples a measurement outcome with the Born probabilities using the
/// caller's generator, then collapses. Deterministic given the seed.
pub fn measure_qubit_sampled<F: Real, R: Rng>(
    s: &PureState<F>,
    qubit: usize,
    rng: &mut R,
) -> Result<(u8, F, PureState<F>)> {
    let (p0, _) = measure_probabilities(s, qubit)?;
    let draw = F::from_f64_lossy(rng.gen::<f64>());
    let outcome = u8::from(draw >= p0);
    let (prob, residual) = measure_qubit(s, qubit, outcome)?;
    Ok((outcome, prob, residual))
}

/// Single-qubit teleportation through measurement matrix `m` and entangled
/// link matrix `e`: the output amplitudes are `ψ'ₖ = Σᵢⱼ ψᵢ·mᵢⱼ·eⱼₖ`,
/// normalized, with the dropped scale returned. A zero output means the
/// measurement branch annihilates the state.
pub fn teleport<F: Real>(
    psi: &PureState<F>,
    m: &TwoQubitMatrix<F>,
    e: &TwoQubitMatrix<F>,
) -> Result<(PureState<F>, F)> {
    if psi.num_qubits() != 1 {
        return Err(Error::WrongQubitCount {
            expected: 1,
            got: psi.num_qubits(),
        });
    }
    let a = psi.amplitudes();
    let mut out = [Complex::new(F::zero(), F::zero()); 2];
    #[allow(clippy::needless_range_loop)]
    for (k, o) in out.iter_mut().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                *o += a[i] * m.get(i, j) * e.get(j, k);
            }
        }
    }
    let norm_sqr = out[0].norm_sqr() + out[1].norm_sqr();
    if norm_sqr < F::from_f64_lossy(tolerance::BRANCH) {
        return Err(Error::ZeroVector);
    }
    let scale = norm_sqr.sqrt();
    Ok((PureState::new(1, out.to_vec())?, scale))
}

/// Entanglement swapping: measuring the shared middle pair of two links
/// `e` (A–B) and `e2` (B–C) with matrix `m` leaves A and C sharing the
/// state with matrix `e·m·e2`. A zero result is allowed: it flags an
/// impossible measurement branch, and a non-invertible `m` produces an
/// unentangled link.
pub fn entanglement_swap<F: Real>(
    e: &TwoQubitMatrix<F>,
    m: &TwoQubitMatrix<F>,
    e2: &TwoQubitMatrix<F>,
) -> TwoQubitMatrix<F> {
    e.product(m).product(e2)
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n ≥ 2` qubits.
pub fn ghz<F: Real>(n: usize) -> Result<PureState<F>> {
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let mut amps = vec![Complex::new(F::zero(), F::zero()); 1 << n];
    amps[0] = Complex::new(F::one(), F::zero());
    amps[(1 << n) - 1] = Complex::new(F::one(), F::zero());
    PureState::new(n, amps)
}

/// The uniform one-hot superposition `(|10…0⟩ + … + |0…01⟩)/√n` on
/// `n ≥ 3` qubits.
///
/// For n = 3, measuring any one qubit gives outcome 0 with probability 2/3
/// leaving an entangled residual, and outcome 1 with probability 1/3
/// leaving a product residual. The two branches are not equally likely.
pub fn w<F: Real>(n: usize) -> Result<PureState<F>> {
    if n < 3 {
        return Err(Error::TooFewQubits { min: 3, got: n });
    }
    let mut amps = vec![Complex::new(F::zero(), F::zero()); 1 << n];
    for q in 0..n {
        amps[1 << (n - 1 - q)] = Complex::new(F::one(), F::zero());
    }
    PureState::new(n, amps)
}
