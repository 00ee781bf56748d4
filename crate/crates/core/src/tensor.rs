//! Dense complex tensors in row-major order.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A dense tensor of complex amplitudes. Axis sizes are all ≥ 1; a rank-0
/// tensor holds exactly one entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<F: Real> {
    shape: Vec<usize>,
    data: Vec<Complex<F>>,
}

impl<F: Real> Tensor<F> {
    pub fn new(shape: Vec<usize>, data: Vec<Complex<F>>) -> Result<Tensor<F>> {
        if shape.contains(&0) {
            return Err(Error::ZeroAxis);
        }
        let expected: usize = shape.iter().product();
        if data.len() != expected {
            return Err(Error::DataLengthMismatch {
                got: data.len(),
                expected,
            });
        }
        Ok(Tensor { shape, data })
    }

    /// Rank-0 tensor holding one value.
    pub fn scalar(value: Complex<F>) -> Tensor<F> {
        Tensor {
            shape: Vec::new(),
            data: vec![value],
        }
    }

    pub fn zeros(shape: Vec<usize>) -> Result<Tensor<F>> {
        if shape.contains(&0) {
            return Err(Error::ZeroAxis);
        }
        let len = shape.iter().product();
        Ok(Tensor {
            shape,
            data: vec![Complex::new(F::zero(), F::zero()); len],
        })
    }

    /// Convenience constructor from real entries.
    pub fn from_reals(shape: Vec<usize>, entries: &[F]) -> Result<Tensor<F>> {
        Tensor::new(
            shape,
            entries
                .iter()
                .map(|&re| Complex::new(re, F::zero()))
                .collect(),
        )
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[Complex<F>] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex<F>] {
        &mut self.data
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.shape.len()];
        for i in (0..self.shape.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.shape[i + 1];
        }
        strides
    }

    pub fn flat_index(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.shape.len() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} indices", self.shape.len()),
                got: format!("{} indices", idx.len()),
            });
        }
        let mut flat = 0;
        for ((&i, &size), stride) in idx.iter().zip(&self.shape).zip(self.strides()) {
            if i >= size {
                return Err(Error::IndexOutOfRange { index: i, size });
            }
            flat += i * stride;
        }
        Ok(flat)
    }

    pub fn get(&self, idx: &[usize]) -> Result<Complex<F>> {
        Ok(self.data[self.flat_index(idx)?])
    }

    /// Iterates all multi-indices of this shape in row-major order.
    pub fn indices(&self) -> IndexIter {
        IndexIter::new(self.shape.clone())
    }

    /// Reorders axes: `perm[k]` is the axis of `self` that becomes axis `k`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor<F>> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r
            || perm
                .iter()
                .any(|&p| p >= r || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::ShapeMismatch {
                expected: format!("permutation of {r} axes"),
                got: format!("{perm:?}"),
            });
        }
        let new_shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut out = Tensor::zeros(new_shape)?;
        let strides = self.strides();
        let mut src_idx = vec![0usize; r];
        for new_idx in out.indices() {
            for (k, &p) in perm.iter().enumerate() {
                src_idx[p] = new_idx[k];
            }
            let flat: usize = src_idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
            let dst = out.flat_index(&new_idx)?;
            out.data[dst] = self.data[flat];
        }
        Ok(out)
    }

    /// Outer product; result axes are `self`'s followed by `other`'s.
    pub fn outer(&self, other: &Tensor<F>) -> Tensor<F> {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for &a in &self.data {
            for &b in &other.data {
                data.push(a * b);
            }
        }
        Tensor { shape, data }
    }

    /// Sums the diagonal over two equal-sized axes, removing both.
    pub fn trace_pair(&self, ax1: usize, ax2: usize) -> Result<Tensor<F>> {
        let r = self.rank();
        if ax1 >= r || ax2 >= r || ax1 == ax2 {
            return Err(Error::ShapeMismatch {
                expected: "two distinct axes".into(),
                got: format!("({ax1}, {ax2}) of rank {r}"),
            });
        }
        if self.shape[ax1] != self.shape[ax2] {
            return Err(Error::EdgeSizeMismatch(self.shape[ax1], self.shape[ax2]));
        }
        let keep: Vec<usize> = (0..r).filter(|&i| i != ax1 && i != ax2).collect();
        let out_shape: Vec<usize> = keep.iter().map(|&i| self.shape[i]).collect();
        let mut out = Tensor::zeros(out_shape)?;
        let strides = self.strides();
        let mut full = vec![0usize; r];
        let out_indices: Vec<Vec<usize>> = IndexIter::new(out.shape.clone()).collect();
        for (flat_out, out_idx) in out_indices.iter().enumerate() {
            for (slot, &axis) in keep.iter().enumerate() {
                full[axis] = out_idx[slot];
            }
            let mut acc = Complex::new(F::zero(), F::zero());
            for d in 0..self.shape[ax1] {
                full[ax1] = d;
                full[ax2] = d;
                let flat: usize = full.iter().zip(&strides).map(|(i, s)| i * s).sum();
                acc += self.data[flat];
            }
            out.data[flat_out] = acc;
        }
        Ok(out)
    }

    /// Contracts paired axes of two tensors; result axes are `self`'s free
    /// axes followed by `other`'s free axes, each in original order.
    pub fn contract_with(&self, other: &Tensor<F>, pairs: &[(usize, usize)]) -> Result<Tensor<F>> {
        let mut used_a = vec![false; self.rank()];
        let mut used_b = vec![false; other.rank()];
        for &(ia, ib) in pairs {
            if ia >= self.rank() || std::mem::replace(&mut used_a[ia], true) {
                return Err(Error::ShapeMismatch {
                    expected: "distinct in-range left axes".into(),
                    got: format!("axis {ia}"),
                });
            }
            if ib >= other.rank() || std::mem::replace(&mut used_b[ib], true) {
                return Err(Error::ShapeMismatch {
                    expected: "distinct in-range right axes".into(),
                    got: format!("axis {ib}"),
                });
            }
            if self.shape[ia] != other.shape[ib] {
                return Err(Error::EdgeSizeMismatch(self.shape[ia], other.shape[ib]));
            }
        }
        let free_a: Vec<usize> = (0..self.rank()).filter(|&i| !used_a[i]).collect();
        let free_b: Vec<usize> = (0..other.rank()).filter(|&i| !used_b[i]).collect();
        let mut out_shape: Vec<usize> = free_a.iter().map(|&i| self.shape[i]).collect();
        out_shape.extend(free_b.iter().map(|&i| other.shape[i]));
        let sum_shape: Vec<usize> = pairs.iter().map(|&(ia, _)| self.shape[ia]).collect();

        let mut out = Tensor::zeros(out_shape)?;
        let strides_a = self.strides();
        let strides_b = other.strides();
        let mut idx_a = vec![0usize; self.rank()];
        let mut idx_b = vec![0usize; other.rank()];
        let out_indices: Vec<Vec<usize>> = IndexIter::new(out.shape.clone()).collect();
        for (flat_out, out_idx) in out_indices.iter().enumerate() {
            for (slot, &axis) in free_a.iter().enumerate() {
                idx_a[axis] = out_idx[slot];
            }
            for (slot, &axis) in free_b.iter().enumerate() {
                idx_b[axis] = out_idx[free_a.len() + slot];
            }
            let mut acc = Complex::new(F::zero(), F::zero());
            for sum_idx in IndexIter::new(sum_shape.clone()) {
                for (&(ia, ib), &v) in pairs.iter().zip(&sum_idx) {
                    idx_a[ia] = v;
                    idx_b[ib] = v;
                }
                let fa: usize = idx_a.iter().zip(&strides_a).map(|(i, s)| i * s).sum();
                let fb: usize = idx_b.iter().zip(&strides_b).map(|(i, s)| i * s).sum();
                acc += self.data[fa] * other.data[fb];
            }
            out.data[flat_out] = acc;
        }
        Ok(out)
    }

    /// Largest entrywise distance to another tensor of the same shape.
    pub fn max_entry_distance(&self, other: &Tensor<F>) -> Option<F> {
        if self.shape != other.shape {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).norm())
                .fold(F::zero(), F::max),
        )
    }
}

/// Odometer over all multi-indices of a shape, row-major. An empty shape
/// yields exactly one empty index.
pub struct IndexIter {
    shape: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl IndexIter {
    pub fn new(shape: Vec<usize>) -> IndexIter {
        let next = if shape.contains(&0) {
            None
        } else {
            Some(vec![0; shape.len()])
        };
        IndexIter { shape, next }
    }
}

impl Iterator for IndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.clone()?;
        let mut bumped = current.clone();
        let mut done = true;
        for i in (0..self.shape.len()).rev() {
            bumped[i] += 1;
            if bumped[i] < self.shape[i] {
                done = false;
                break;
            }
            bumped[i] = 0;
        }
        self.next = if done { None } else { Some(bumped) };
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t64(shape: Vec<usize>, entries: &[f64]) -> Tensor<f64> {
        Tensor::from_reals(shape, entries).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(
            Tensor::<f64>::new(vec![2, 0], vec![]).unwrap_err(),
            Error::ZeroAxis
        );
        assert_eq!(
            Tensor::<f64>::from_reals(vec![2, 2], &[1.0]).unwrap_err(),
            Error::DataLengthMismatch {
                got: 1,
                expected: 4
            }
        );
    }

    #[test]
    fn indexing_row_major() {
        let t = t64(vec![2, 3], &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(t.get(&[1, 2]).unwrap().re, 5.0);
        assert_eq!(t.get(&[0, 1]).unwrap().re, 1.0);
        assert!(matches!(
            t.get(&[0, 3]).unwrap_err(),
            Error::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn scalar_tensor_has_one_entry() {
        let s = Tensor::<f64>::scalar(Complex::new(2.0, 0.0));
        assert_eq!(s.rank(), 0);
        assert_eq!(s.get(&[]).unwrap().re, 2.0);
        assert_eq!(s.indices().count(), 1);
    }

    #[test]
    fn matrix_contraction_is_matrix_product() {
        let a = t64(vec![2, 2], &[1.0, 2.0, 3.0, 4.0]);
        let b = t64(vec![2, 2], &[5.0, 6.0, 7.0, 8.0]);
        let ab = a.contract_with(&b, &[(1, 0)]).unwrap();
        assert_eq!(ab.get(&[0, 0]).unwrap().re, 19.0);
        assert_eq!(ab.get(&[0, 1]).unwrap().re, 22.0);
        assert_eq!(ab.get(&[1, 0]).unwrap().re, 43.0);
        assert_eq!(ab.get(&[1, 1]).unwrap().re, 50.0);
    }

    #[test]
    fn trace_pair_is_trace() {
        let a = t64(vec![2, 2], &[1.0, 2.0, 3.0, 4.0]);
        let tr = a.trace_pair(0, 1).unwrap();
        assert_eq!(tr.get(&[]).unwrap().re, 5.0);
        assert!(matches!(
            a.trace_pair(0, 0).unwrap_err(),
            Error::ShapeMismatch { .. }
        ));
    }

    #[test]
    fn permute_transposes() {
        let a = t64(vec![2, 3], &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        let at = a.permute(&[1, 0]).unwrap();
        assert_eq!(at.shape(), &[3, 2]);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(a.get(&[i, j]).unwrap(), at.get(&[j, i]).unwrap());
            }
        }
    }

    #[test]
    fn outer_product_shapes_and_values() {
        let a = t64(vec![2], &[1.0, 2.0]);
        let b = t64(vec![3], &[3.0, 4.0, 5.0]);
        let o = a.outer(&b);
        assert_eq!(o.shape(), &[2, 3]);
        assert_eq!(o.get(&[1, 2]).unwrap().re, 10.0);
    }

    #[test]
    fn index_iter_covers_shape() {
        let idxs: Vec<_> = IndexIter::new(vec![2, 2]).collect();
        assert_eq!(idxs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
