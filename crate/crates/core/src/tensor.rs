//! Dense row-major arrays of [`Scalar`]s and the pairwise contraction kernel.
//!
//! Contraction walks only the nonzero entries of both operands, which is what
//! keeps the structure tensors of group-like algebras cheap.

use std::collections::HashMap;
use std::fmt;

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("shape {shape:?} needs {expected} entries, got {got}")]
    Size { shape: Vec<usize>, expected: usize, got: usize },
    #[error("contraction would create {entries} entries, above the cap of {cap}")]
    CapExceeded { entries: u128, cap: usize },
    #[error("axis mismatch: {0}")]
    Axes(String),
    #[error("matrix is singular")]
    Singular,
}

impl From<ScalarError> for TensorError {
    fn from(_: ScalarError) -> Self {
        TensorError::Singular
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DenseTensor {
    shape: Vec<usize>,
    data: Vec<Scalar>,
}

impl DenseTensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        DenseTensor { shape: shape.to_vec(), data: vec![Scalar::zero(); n] }
    }

    pub fn from_vec(shape: &[usize], data: Vec<Scalar>) -> Result<Self, TensorError> {
        let expected: usize = shape.iter().product();
        if data.len() != expected {
            return Err(TensorError::Size { shape: shape.to_vec(), expected, got: data.len() });
        }
        Ok(DenseTensor { shape: shape.to_vec(), data })
    }

    /// A rank-0 tensor.
    pub fn scalar(s: Scalar) -> Self {
        DenseTensor { shape: Vec::new(), data: vec![s] }
    }

    pub fn vector(data: Vec<Scalar>) -> Self {
        DenseTensor { shape: vec![data.len()], data }
    }

    pub fn identity(n: usize) -> Self {
        let mut t = Self::zeros(&[n, n]);
        for i in 0..n {
            t.data[i * n + i] = Scalar::one();
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn strides(&self) -> Vec<usize> {
        strides(&self.shape)
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Scalar {
        let o = self.offset(idx);
        &mut self.data[o]
    }

    /// The scalar held by a rank-0 tensor.
    pub fn into_scalar(self) -> Option<Scalar> {
        if self.shape.is_empty() {
            self.data.into_iter().next()
        } else {
            None
        }
    }

    /// Multi-indices in row-major order.
    pub fn indices(&self) -> MultiIndexIter {
        MultiIndexIter::new(&self.shape)
    }

    pub fn scale(&self, s: &Scalar) -> DenseTensor {
        DenseTensor { shape: self.shape.clone(), data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &DenseTensor) -> Result<DenseTensor, TensorError> {
        if self.shape != other.shape {
            return Err(TensorError::Axes(format!("{:?} + {:?}", self.shape, other.shape)));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(DenseTensor { shape: self.shape.clone(), data })
    }

    /// Reorders axes: result axis `k` is input axis `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> DenseTensor {
        assert_eq!(perm.len(), self.rank());
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let in_strides = self.strides();
        let mut out = DenseTensor::zeros(&shape);
        for (o, idx) in MultiIndexIter::new(&shape).enumerate() {
            let src: usize = idx.iter().zip(perm).map(|(&i, &p)| i * in_strides[p]).sum();
            out.data[o] = self.data[src].clone();
        }
        out
    }

    /// Sums over the diagonal of axes `a` and `b` (which must have equal size).
    pub fn trace(&self, a: usize, b: usize) -> Result<DenseTensor, TensorError> {
        if a == b || self.shape[a] != self.shape[b] {
            return Err(TensorError::Axes(format!("cannot trace axes {a},{b} of {:?}", self.shape)));
        }
        let keep: Vec<usize> = (0..self.rank()).filter(|&k| k != a && k != b).collect();
        let shape: Vec<usize> = keep.iter().map(|&k| self.shape[k]).collect();
        let mut out = DenseTensor::zeros(&shape);
        for (flat, idx) in self.indices().enumerate() {
            if idx[a] != idx[b] || self.data[flat].is_zero() {
                continue;
            }
            let o = keep.iter().fold(0, |acc, &k| acc * self.shape[k] + idx[k]);
            out.data[o] += &self.data[flat];
        }
        Ok(out)
    }

    /// Contracts `self` axis `axes_a[t]` against `other` axis `axes_b[t]`.
    ///
    /// Result axes are the free axes of `self` in order, then those of `other`.
    /// Fails before allocating if the result would exceed `cap` entries.
    pub fn contract(
        &self,
        axes_a: &[usize],
        other: &DenseTensor,
        axes_b: &[usize],
        cap: usize,
    ) -> Result<DenseTensor, TensorError> {
        if axes_a.len() != axes_b.len() {
            return Err(TensorError::Axes("unequal numbers of contracted axes".into()));
        }
        for (&x, &y) in axes_a.iter().zip(axes_b) {
            if x >= self.rank() || y >= other.rank() || self.shape[x] != other.shape[y] {
                return Err(TensorError::Axes(format!(
                    "axis {x} of {:?} against axis {y} of {:?}",
                    self.shape, other.shape
                )));
            }
        }
        let free_a: Vec<usize> = (0..self.rank()).filter(|k| !axes_a.contains(k)).collect();
        let free_b: Vec<usize> = (0..other.rank()).filter(|k| !axes_b.contains(k)).collect();
        let out_shape: Vec<usize> = free_a
            .iter()
            .map(|&k| self.shape[k])
            .chain(free_b.iter().map(|&k| other.shape[k]))
            .collect();
        let entries: u128 = out_shape.iter().map(|&d| d as u128).product();
        if entries > cap as u128 {
            return Err(TensorError::CapExceeded { entries, cap });
        }
        let size_b_free: usize = free_b.iter().map(|&k| other.shape[k]).product();
        let mut out = DenseTensor::zeros(&out_shape);

        // Group the nonzeros of `other` by their contracted-index key.
        let mut groups: HashMap<usize, Vec<(usize, &Scalar)>> = HashMap::new();
        for (flat, idx) in other.indices().enumerate() {
            let v = &other.data[flat];
            if v.is_zero() {
                continue;
            }
            let key = axes_b.iter().fold(0, |acc, &k| acc * other.shape[k] + idx[k]);
            let free = free_b.iter().fold(0, |acc, &k| acc * other.shape[k] + idx[k]);
            groups.entry(key).or_default().push((free, v));
        }
        if groups.is_empty() {
            return Ok(out);
        }
        for (flat, idx) in self.indices().enumerate() {
            let v = &self.data[flat];
            if v.is_zero() {
                continue;
            }
            let key = axes_a.iter().zip(axes_b).fold(0, |acc, (&ka, &kb)| acc * other.shape[kb] + idx[ka]);
            let Some(group) = groups.get(&key) else { continue };
            let base = free_a.iter().fold(0, |acc, &k| acc * self.shape[k] + idx[k]) * size_b_free;
            for &(free, w) in group {
                out.data[base + free].add_mul(v, w);
            }
        }
        Ok(out)
    }

    /// Outer product `self ⊗ other`.
    pub fn outer(&self, other: &DenseTensor, cap: usize) -> Result<DenseTensor, TensorError> {
        self.contract(&[], other, &[], cap)
    }
}

impl fmt::Debug for DenseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseTensor{:?}[", self.shape)?;
        let nz: Vec<String> = self
            .indices()
            .zip(&self.data)
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| format!("{i:?}={v}"))
            .collect();
        write!(f, "{}]", nz.join(", "))
    }
}

pub fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for k in (0..shape.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * shape[k + 1];
    }
    s
}

/// Row-major iteration over all multi-indices of a shape.
pub struct MultiIndexIter {
    shape: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl MultiIndexIter {
    pub fn new(shape: &[usize]) -> Self {
        let next = if shape.iter().any(|&d| d == 0) { None } else { Some(vec![0; shape.len()]) };
        MultiIndexIter { shape: shape.to_vec(), next }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            succ[k] += 1;
            if succ[k] < self.shape[k] {
                self.next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(cur)
    }
}

/// `A·B` for rank-2 tensors.
pub fn mat_mul(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor, TensorError> {
    a.contract(&[1], b, &[0], usize::MAX)
}

/// `A·v` for a rank-2 `A` and rank-1 `v`.
pub fn mat_vec(a: &DenseTensor, v: &DenseTensor) -> Result<DenseTensor, TensorError> {
    a.contract(&[1], v, &[0], usize::MAX)
}

/// Gauss-Jordan inverse over `Q(i)`.
pub fn inverse(m: &DenseTensor) -> Result<DenseTensor, TensorError> {
    let n = match m.shape() {
        [r, c] if r == c => *r,
        other => return Err(TensorError::Axes(format!("cannot invert shape {other:?}"))),
    };
    let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| m.data[i * n..(i + 1) * n].to_vec()).collect();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(TensorError::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                let di = &f * &inv[col][j];
                a[r][j] -= &da;
                inv[r][j] -= &di;
            }
        }
    }
    DenseTensor::from_vec(&[n, n], inv.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(shape: &[usize], vals: &[i64]) -> DenseTensor {
        DenseTensor::from_vec(shape, vals.iter().map(|&v| Scalar::from_int(v)).collect()).unwrap()
    }

    /// Direct summation, used as the reference for the sparse kernel.
    fn naive_contract(a: &DenseTensor, ax: &[usize], b: &DenseTensor, bx: &[usize]) -> DenseTensor {
        let free_a: Vec<usize> = (0..a.rank()).filter(|k| !ax.contains(k)).collect();
        let free_b: Vec<usize> = (0..b.rank()).filter(|k| !bx.contains(k)).collect();
        let shape: Vec<usize> =
            free_a.iter().map(|&k| a.shape()[k]).chain(free_b.iter().map(|&k| b.shape()[k])).collect();
        let mut out = DenseTensor::zeros(&shape);
        for ia in a.indices() {
            for ib in b.indices() {
                if ax.iter().zip(bx).any(|(&x, &y)| ia[x] != ib[y]) {
                    continue;
                }
                let oi: Vec<usize> = free_a.iter().map(|&k| ia[k]).chain(free_b.iter().map(|&k| ib[k])).collect();
                let v = a.get(&ia) * b.get(&ib);
                *out.get_mut(&oi) += &v;
            }
        }
        out
    }

    #[test]
    fn matrix_product() {
        let a = t(&[2, 2], &[1, 2, 3, 4]);
        let b = t(&[2, 2], &[0, 1, 1, 0]);
        assert_eq!(mat_mul(&a, &b).unwrap(), t(&[2, 2], &[2, 1, 4, 3]));
    }

    #[test]
    fn inverse_roundtrip_and_singular() {
        let a = DenseTensor::from_vec(
            &[2, 2],
            vec![Scalar::one(), Scalar::i(), Scalar::from_int(2), Scalar::zero()],
        )
        .unwrap();
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv).unwrap(), DenseTensor::identity(2));
        assert_eq!(inverse(&t(&[2, 2], &[1, 2, 2, 4])), Err(TensorError::Singular));
    }

    #[test]
    fn cap_is_enforced_before_allocation() {
        let a = DenseTensor::zeros(&[10, 10]);
        let err = a.outer(&a, 1000).unwrap_err();
        assert_eq!(err, TensorError::CapExceeded { entries: 10_000, cap: 1000 });
    }

    #[test]
    fn zero_dimension_axes() {
        let a = DenseTensor::zeros(&[0, 3]);
        let b = t(&[3], &[1, 2, 3]);
        let c = a.contract(&[1], &b, &[0], 100).unwrap();
        assert_eq!(c.shape(), &[0]);
        let s = DenseTensor::zeros(&[0]).contract(&[0], &DenseTensor::zeros(&[0]), &[0], 10).unwrap();
        assert_eq!(s.into_scalar(), Some(Scalar::zero()));
    }

    #[test]
    fn trace_and_permute() {
        let a = t(&[2, 2], &[1, 2, 3, 4]);
        assert_eq!(a.trace(0, 1).unwrap().into_scalar(), Some(Scalar::from_int(5)));
        assert_eq!(a.permute(&[1, 0]), t(&[2, 2], &[1, 3, 2, 4]));
    }

    fn arb_tensor(shape: Vec<usize>) -> impl Strategy<Value = DenseTensor> {
        let n: usize = shape.iter().product();
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], n)
            .prop_map(move |v| t(&shape, &v))
    }

    proptest! {
        #[test]
        fn sparse_kernel_matches_naive(
            a in arb_tensor(vec![2, 3, 2]),
            b in arb_tensor(vec![3, 2, 2]),
        ) {
            let fast = a.contract(&[1, 2], &b, &[0, 1], usize::MAX).unwrap();
            prop_assert_eq!(fast, naive_contract(&a, &[1, 2], &b, &[0, 1]));
            let fast = a.contract(&[0], &b, &[2], usize::MAX).unwrap();
            prop_assert_eq!(fast, naive_contract(&a, &[0], &b, &[2]));
        }
    }
}
