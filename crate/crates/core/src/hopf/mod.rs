//! Hopf π-coalgebras of finite type, stored as structure constants.
//!
//! Conventions for a component `H_α` with basis `e_0..e_{d-1}`:
//!
//! * `mul(α)[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
//! * `unit(α)[k]`: coefficient of `e_k` in `1_α`.
//! * `delta(α, β)[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ_{α,β}(e_i)`, with
//!   `e_i ∈ H_{αβ}`, `e_j ∈ H_α`, `e_k ∈ H_β`.
//! * `counit()[i]`: `ε(e_i)` on `H_1`.
//! * `antipode(α)[r][c]`: coefficient of `e_r ∈ H_{α⁻¹}` in `S_α(e_c)`.
//! * `crossing(β, α)[r][c]`: coefficient of `e_r ∈ H_{βαβ⁻¹}` in `φ_β(e_c)`.
//!
//! Zero-dimensional components are allowed and carry empty tensors.

mod axioms;
mod constructors;
mod crossing;
mod dual;
mod integral;

pub use axioms::validate_hopf;
pub use constructors::{build_function_hopf, build_kac_paljutkin, conjugation_crossing, identity_crossing};
pub use crossing::{validate_crossing, CrossingStatus};
pub use dual::{coopposite, dual_variant, opposite, DualKind};
pub use integral::{check_structural_lemmas, derive_integral_data, IntegralData, LemmaConfig};

use crate::group::{Elem, GroupTable};
use crate::scalar::Scalar;
use crate::tensor::{DenseTensor, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("{what} has shape {got:?}, expected {expected:?}")]
    Shape { what: String, got: Vec<usize>, expected: Vec<usize> },
    #[error("{what} has {got} entries, expected one per group element ({expected})")]
    Count { what: String, got: usize, expected: usize },
    #[error("dim H_1 is zero")]
    ZeroUnitDimension,
    #[error("antipode S_{0} is singular")]
    SingularAntipode(String),
    #[error("invalid homomorphism: {0}")]
    Hom(String),
    #[error("grading mismatch: {0}")]
    Grading(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Raw structure constants, indexed by group element (and pairs of elements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfParts {
    pub name: String,
    pub pi: GroupTable,
    pub dim: Vec<usize>,
    pub mul: Vec<DenseTensor>,
    pub unit: Vec<DenseTensor>,
    pub delta: Vec<Vec<DenseTensor>>,
    pub counit: DenseTensor,
    pub antipode: Vec<DenseTensor>,
    pub crossing: Option<Vec<Vec<DenseTensor>>>,
}

/// A shape-checked Hopf π-coalgebra. Semantic axioms are checked separately by
/// [`validate_hopf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfPiCoalgebra {
    parts: HopfParts,
}

fn expect_shape(what: impl FnOnce() -> String, t: &DenseTensor, expected: &[usize]) -> Result<(), StructureError> {
    if t.shape() != expected {
        return Err(StructureError::Shape { what: what(), got: t.shape().to_vec(), expected: expected.to_vec() });
    }
    Ok(())
}

fn expect_count<T>(what: &str, v: &[T], n: usize) -> Result<(), StructureError> {
    if v.len() != n {
        return Err(StructureError::Count { what: what.to_string(), got: v.len(), expected: n });
    }
    Ok(())
}

impl HopfPiCoalgebra {
    /// Checks every tensor shape against `dim`; no axioms are checked here.
    pub fn from_parts(parts: HopfParts) -> Result<Self, StructureError> {
        let g = &parts.pi;
        let n = g.order();
        let d = &parts.dim;
        expect_count("dim", d, n)?;
        expect_count("mul", &parts.mul, n)?;
        expect_count("unit", &parts.unit, n)?;
        expect_count("delta", &parts.delta, n)?;
        expect_count("antipode", &parts.antipode, n)?;
        for a in g.elements() {
            let na = g.name(a);
            expect_shape(|| format!("mul[{na}]"), &parts.mul[a], &[d[a], d[a], d[a]])?;
            expect_shape(|| format!("unit[{na}]"), &parts.unit[a], &[d[a]])?;
            expect_shape(|| format!("antipode[{na}]"), &parts.antipode[a], &[d[g.inv(a)], d[a]])?;
            expect_count(&format!("delta[{na}]"), &parts.delta[a], n)?;
            for b in g.elements() {
                let ab = g.mul(a, b);
                expect_shape(
                    || format!("delta[{na}][{}]", g.name(b)),
                    &parts.delta[a][b],
                    &[d[ab], d[a], d[b]],
                )?;
            }
        }
        expect_shape(|| "counit".into(), &parts.counit, &[d[g.identity()]])?;
        if let Some(cr) = &parts.crossing {
            expect_count("crossing", cr, n)?;
            for b in g.elements() {
                expect_count(&format!("crossing[{}]", g.name(b)), &cr[b], n)?;
                for a in g.elements() {
                    let c = g.conjugate(a, b);
                    expect_shape(
                        || format!("crossing[{}][{}]", g.name(b), g.name(a)),
                        &cr[b][a],
                        &[d[c], d[a]],
                    )?;
                }
            }
        }
        if d[g.identity()] == 0 {
            return Err(StructureError::ZeroUnitDimension);
        }
        Ok(HopfPiCoalgebra { parts })
    }

    pub fn parts(&self) -> &HopfParts {
        &self.parts
    }

    pub fn into_parts(self) -> HopfParts {
        self.parts
    }

    pub fn name(&self) -> &str {
        &self.parts.name
    }

    pub fn pi(&self) -> &GroupTable {
        &self.parts.pi
    }

    pub fn dim(&self, a: Elem) -> usize {
        self.parts.dim[a]
    }

    pub fn dim_one(&self) -> usize {
        self.parts.dim[self.pi().identity()]
    }

    pub fn mul(&self, a: Elem) -> &DenseTensor {
        &self.parts.mul[a]
    }

    pub fn unit(&self, a: Elem) -> &DenseTensor {
        &self.parts.unit[a]
    }

    pub fn delta(&self, a: Elem, b: Elem) -> &DenseTensor {
        &self.parts.delta[a][b]
    }

    pub fn counit(&self) -> &DenseTensor {
        &self.parts.counit
    }

    pub fn antipode(&self, a: Elem) -> &DenseTensor {
        &self.parts.antipode[a]
    }

    pub fn crossing(&self, b: Elem, a: Elem) -> Option<&DenseTensor> {
        self.parts.crossing.as_ref().map(|c| &c[b][a])
    }

    pub fn has_crossing(&self) -> bool {
        self.parts.crossing.is_some()
    }

    /// Replaces the crossing block, re-checking shapes.
    pub fn with_crossing(self, crossing: Option<Vec<Vec<DenseTensor>>>) -> Result<Self, StructureError> {
        let mut parts = self.parts;
        parts.crossing = crossing;
        Self::from_parts(parts)
    }

    /// Elements `α` with `H_α ≠ 0`, ascending.
    pub fn support(&self) -> Vec<Elem> {
        self.pi().elements().filter(|&a| self.dim(a) > 0).collect()
    }

    /// `x y` in `H_α`.
    pub fn multiply(&self, a: Elem, x: &DenseTensor, y: &DenseTensor) -> DenseTensor {
        let xm = x.contract(&[0], self.mul(a), &[0], usize::MAX).expect("shape-checked");
        xm.contract(&[0], y, &[0], usize::MAX).expect("shape-checked")
    }

    /// `Δ_{α,β}(x)` as a `(dim α, dim β)` tensor.
    pub fn apply_delta(&self, a: Elem, b: Elem, x: &DenseTensor) -> DenseTensor {
        x.contract(&[0], self.delta(a, b), &[0], usize::MAX).expect("shape-checked")
    }

    /// `S_α(x) ∈ H_{α⁻¹}`.
    pub fn apply_antipode(&self, a: Elem, x: &DenseTensor) -> DenseTensor {
        self.antipode(a).contract(&[1], x, &[0], usize::MAX).expect("shape-checked")
    }

    pub fn apply_counit(&self, x: &DenseTensor) -> Scalar {
        x.contract(&[0], self.counit(), &[0], usize::MAX)
            .expect("shape-checked")
            .into_scalar()
            .expect("rank 0")
    }

    /// Basis vector `e_i` of `H_α`.
    pub fn basis(&self, a: Elem, i: usize) -> DenseTensor {
        let mut v = DenseTensor::zeros(&[self.dim(a)]);
        v.set(&[i], Scalar::one());
        v
    }
}

/// Which side the iterated coproduct peels first; equal results by coassociativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nesting {
    Left,
    Right,
}

/// `Δ_{α₁,…,α_n}(x)` for `x ∈ H_{α₁⋯α_n}`, one `Δ` at a time.
///
/// For `n = 0` (empty grading) `x ∈ H_1` and the result is the rank-0 tensor `ε(x)`.
pub fn iterated_delta(
    h: &HopfPiCoalgebra,
    grading: &[Elem],
    x: &DenseTensor,
    nesting: Nesting,
    cap: usize,
) -> Result<DenseTensor, StructureError> {
    let g = h.pi();
    let total = grading.iter().fold(g.identity(), |acc, &a| g.mul(acc, a));
    if x.shape() != [h.dim(total)] {
        return Err(StructureError::Grading(format!(
            "vector of shape {:?} is not in H_{} (dim {})",
            x.shape(),
            g.name(total),
            h.dim(total)
        )));
    }
    let n = grading.len();
    if n == 0 {
        return Ok(DenseTensor::scalar(h.apply_counit(x)));
    }
    let mut t = x.clone();
    match nesting {
        Nesting::Left => {
            // prefix[k] = α₁⋯α_k
            let mut prefix = vec![g.identity()];
            for &a in grading {
                prefix.push(g.mul(*prefix.last().unwrap(), a));
            }
            for k in (2..=n).rev() {
                let d = h.delta(prefix[k - 1], grading[k - 1]);
                let c = t.contract(&[0], d, &[0], cap)?;
                // c axes: [α_{k+1}..α_n, P_{k-1}, α_k]
                let r = c.rank();
                let mut perm = vec![r - 2, r - 1];
                perm.extend(0..r - 2);
                t = c.permute(&perm);
            }
        }
        Nesting::Right => {
            let mut suffix = vec![g.identity(); n + 1];
            for k in (0..n).rev() {
                suffix[k] = g.mul(grading[k], suffix[k + 1]);
            }
            for k in 0..n - 1 {
                let d = h.delta(grading[k], suffix[k + 1]);
                let last = t.rank() - 1;
                t = t.contract(&[last], d, &[0], cap)?;
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupHom;

    #[test]
    fn shape_mismatch_is_structural() {
        let mut parts = build_kac_paljutkin().into_parts();
        parts.mul[1] = DenseTensor::zeros(&[4, 4]);
        let err = HopfPiCoalgebra::from_parts(parts).unwrap_err();
        assert!(matches!(err, StructureError::Shape { .. }), "{err}");
    }

    #[test]
    fn iterated_delta_small_cases() {
        let h = build_function_hopf(&GroupHom::sign(3).unwrap()).unwrap();
        let x = h.basis(1, 2);
        assert_eq!(iterated_delta(&h, &[1], &x, Nesting::Left, usize::MAX).unwrap(), x);

        // grading (1,1) on e_g, g ∈ A3: Σ_{hk=g} e_h ⊗ e_k over odd h, k.
        let g = GroupHom::sign(3).unwrap();
        let s3 = &g.source;
        let odd = g.fiber(1);
        let even = g.fiber(0);
        for (gi, &gel) in even.iter().enumerate() {
            let x = h.basis(0, gi);
            let t = iterated_delta(&h, &[1, 1], &x, Nesting::Left, usize::MAX).unwrap();
            for (hi, &hel) in odd.iter().enumerate() {
                for (ki, &kel) in odd.iter().enumerate() {
                    let expected = if s3.mul(hel, kel) == gel { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(t.get(&[hi, ki]), &expected);
                }
            }
        }
    }

    #[test]
    fn iterated_delta_nesting_agrees() {
        let h = build_kac_paljutkin();
        let x = DenseTensor::vector(
            (0..4).map(|k| Scalar::from_int(k as i64 + 1) + Scalar::i() * Scalar::from_int(k as i64)).collect(),
        );
        for grading in [[1usize, 1, 0, 0], [1, 0, 1, 0], [0, 1, 1, 0], [1, 1, 1, 1]] {
            let l = iterated_delta(&h, &grading, &x, Nesting::Left, usize::MAX).unwrap();
            let r = iterated_delta(&h, &grading, &x, Nesting::Right, usize::MAX).unwrap();
            assert_eq!(l, r, "grading {grading:?}");
        }
        let e = iterated_delta(&h, &[], &h.basis(0, 0), Nesting::Left, usize::MAX).unwrap();
        assert_eq!(e.into_scalar(), Some(Scalar::one()));
    }

    #[test]
    fn iterated_delta_grading_mismatch() {
        let h = build_kac_paljutkin();
        let x = DenseTensor::vector(vec![Scalar::one(); 3]);
        assert!(matches!(
            iterated_delta(&h, &[1], &x, Nesting::Left, usize::MAX),
            Err(StructureError::Grading(_))
        ));
    }
}
