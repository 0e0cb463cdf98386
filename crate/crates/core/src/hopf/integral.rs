//! The trace forms `T_α` and the cotrace `C`, and the identities they satisfy
//! on an involutory Hopf π-coalgebra.

use crate::group::Elem;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::DenseTensor;

use super::axioms::compare;
use super::{iterated_delta, HopfPiCoalgebra, Nesting};

/// `T_α(x) = Tr(y ↦ yx)` per component and `C = Σ_{i,k} δ_{1,1}[i][i][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralData {
    pub t: Vec<DenseTensor>,
    pub c: DenseTensor,
}

impl IntegralData {
    pub fn t(&self, a: Elem) -> &DenseTensor {
        &self.t[a]
    }

    pub fn c(&self) -> &DenseTensor {
        &self.c
    }

    /// `T_α(x)`.
    pub fn trace(&self, a: Elem, x: &DenseTensor) -> Scalar {
        dot(&self.t[a], x)
    }
}

fn dot(a: &DenseTensor, b: &DenseTensor) -> Scalar {
    a.contract(&[0], b, &[0], usize::MAX).expect("equal length").into_scalar().expect("rank 0")
}

fn c(a: &DenseTensor, ax: &[usize], b: &DenseTensor, bx: &[usize]) -> DenseTensor {
    a.contract(ax, b, bx, usize::MAX).expect("shape-checked contraction")
}

pub fn derive_integral_data(h: &HopfPiCoalgebra) -> IntegralData {
    let one = h.pi().identity();
    let t = h
        .pi()
        .elements()
        .map(|a| h.mul(a).trace(0, 2).expect("square structure tensor"))
        .collect();
    let c = h.delta(one, one).trace(0, 1).expect("square coproduct tensor");
    IntegralData { t, c }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConfig {
    /// Largest `n` for the cyclic-symmetry checks of `T∘m^{(n)}` and `Δ^{(n)}(C)`.
    pub max_arity: usize,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig { max_arity: 4 }
    }
}

/// Rotation `[x1..xn] ↦ [xn, x1..x_{n-1}]` as a permutation for [`DenseTensor::permute`].
fn rotation(n: usize) -> Vec<usize> {
    (0..n).map(|k| (k + 1) % n).collect()
}

/// Enumerates all `n`-tuples over `0..m` in lexicographic order.
fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn check_structural_lemmas(h: &HopfPiCoalgebra, i: &IntegralData, cfg: LemmaConfig) -> Report {
    let mut r = Report::new(format!("structural lemmas [{}]", h.name()));
    let g = h.pi();
    let one = g.identity();
    let support = h.support();
    let name = |a: Elem| g.name(a).to_string();

    // π-integral property of T, both sides.
    for &a in &support {
        for &b in &support {
            let ab = g.mul(a, b);
            let d = h.delta(a, b);
            let ctx = format!("Δ_{{{},{}}}", name(a), name(b));
            let right = c(d, &[2], i.t(b), &[0]);
            compare(&mut r, "right π-integral", &ctx, &right, &c(i.t(ab), &[], h.unit(a), &[]));
            let left = c(d, &[1], i.t(a), &[0]);
            compare(&mut r, "left π-integral", &ctx, &left, &c(i.t(ab), &[], h.unit(b), &[]));
        }
    }

    // C is a two-sided integral of H_1.
    let cc = i.c();
    let eps = h.counit();
    let eps_c = c(eps, &[], cc, &[]);
    compare(&mut r, "C left integral", "x C = ε(x) C", &c(h.mul(one), &[1], cc, &[0]), &eps_c);
    compare(&mut r, "C right integral", "C x = ε(x) C", &c(cc, &[0], h.mul(one), &[0]), &eps_c);

    let dim1 = Scalar::from_int(h.dim_one() as i64);
    let t11 = i.trace(one, h.unit(one));
    let ec = h.apply_counit(cc);
    let t1c = i.trace(one, cc);
    for (label, v) in [("T_1(1_1)", &t11), ("ε(C)", &ec), ("T_1(C)", &t1c)] {
        r.check(*v == dim1, "trace identities", || format!("{label} = {v}, dim H_1 = {dim1}"));
    }
    compare(&mut r, "S_1(C) = C", "H_1", &h.apply_antipode(one, cc), cc);
    for &a in &support {
        let lhs = c(i.t(g.inv(a)), &[0], h.antipode(a), &[0]);
        compare(&mut r, "T∘S = T", &format!("S_{}", name(a)), &lhs, i.t(a));
    }

    // Cyclic symmetry of T_α∘m^{(n)}.
    for &a in &support {
        let d = h.dim(a);
        // prod[x1..xn, k]: coefficient of e_k in x1⋯xn
        let mut prod = DenseTensor::identity(d);
        for n in 2..=cfg.max_arity.max(1) {
            let last = prod.rank() - 1;
            prod = c(&prod, &[last], h.mul(a), &[0]);
            let last = prod.rank() - 1;
            let f = c(&prod, &[last], i.t(a), &[0]);
            compare(
                &mut r,
                "cyclic T∘m",
                &format!("H_{} arity {n}", name(a)),
                &f.permute(&rotation(n)),
                &f,
            );
        }
    }

    // Cyclic symmetry of Δ^{(n)}(C) over gradings with product 1.
    for n in 2..=cfg.max_arity.max(1) {
        for head in tuples(support.len(), n - 1) {
            let mut grading: Vec<Elem> = head.iter().map(|&k| support[k]).collect();
            let prefix = grading.iter().fold(one, |acc, &x| g.mul(acc, x));
            grading.push(g.inv(prefix));
            if h.dim(*grading.last().unwrap()) == 0 {
                continue;
            }
            let mut rotated = grading[1..].to_vec();
            rotated.push(grading[0]);
            let dt = iterated_delta(h, &grading, cc, Nesting::Left, usize::MAX).expect("graded");
            let dr = iterated_delta(h, &rotated, cc, Nesting::Left, usize::MAX).expect("graded");
            let labels: Vec<String> = grading.iter().map(|&x| name(x)).collect();
            compare(
                &mut r,
                "cyclic Δ(C)",
                &format!("({})", labels.join(",")),
                &dt.permute(&rotation(n)),
                &dr,
            );
        }
    }

    // Dimension equality and the scalar semisimplicity criterion.
    for &a in &support {
        r.check(h.dim(a) == h.dim_one(), "dim H_α = dim H_1", || {
            format!("dim H_{} = {}, dim H_1 = {}", name(a), h.dim(a), h.dim_one())
        });
        let ta = i.trace(a, h.unit(a));
        r.check(ta == t11, "T_α(1_α) = T_1(1_1)", || format!("T_{}(1) = {ta}, T_1(1) = {t11}", name(a)));
        r.check(!ta.is_zero(), "semisimple", || format!("T_{}(1_{}) = 0", name(a), name(a)));
    }
    r.check(!ec.is_zero(), "cosemisimple", || "ε(C) = 0".into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupHom, GroupTable};
    use crate::hopf::{build_function_hopf, build_kac_paljutkin, coopposite, opposite};
    use proptest::prelude::*;

    #[test]
    fn function_algebra_integrals() {
        let phi = GroupHom::sign(3).unwrap();
        let h = build_function_hopf(&phi).unwrap();
        let i = derive_integral_data(&h);
        // r(e_g) is the projection onto e_g: trace 1.
        for a in 0..2 {
            assert!(i.t(a).data().iter().all(Scalar::is_one));
        }
        // e_g ⊗ e_k occurs in Δ(e_g) only for k = 1, so C = |A3| e_1.
        let mut expected = DenseTensor::zeros(&[3]);
        let e = phi.fiber(0).iter().position(|&g| g == phi.source.identity()).unwrap();
        expected.set(&[e], Scalar::from_int(phi.fiber(0).len() as i64));
        assert_eq!(i.c(), &expected);
        assert_eq!(h.apply_counit(i.c()), Scalar::from_int(3));
    }

    #[test]
    fn kac_paljutkin_cotrace() {
        let h = build_kac_paljutkin();
        let i = derive_integral_data(&h);
        // Oracle: sum the diagonal of the Δ_{0,0} table by hand.
        let mut oracle = DenseTensor::zeros(&[4]);
        for x in 0..4 {
            for k in 0..4 {
                let v = h.delta(0, 0).get(&[x, x, k]).clone();
                *oracle.get_mut(&[k]) += &v;
            }
        }
        assert_eq!(i.c(), &oracle);
        let mut four_e1 = DenseTensor::zeros(&[4]);
        four_e1.set(&[0], Scalar::from_int(4));
        assert_eq!(i.c(), &four_e1);
        assert_eq!(i.trace(0, i.c()), Scalar::from_int(4));
    }

    #[test]
    fn lemmas_hold_on_constructors() {
        let mut algebras = vec![build_kac_paljutkin()];
        for phi in [
            GroupHom::sign(3).unwrap(),
            GroupHom::reduction(4, 2).unwrap(),
            GroupHom::identity(GroupTable::symmetric(3).unwrap()),
            GroupHom::to_trivial(GroupTable::cyclic(3).unwrap()),
        ] {
            algebras.push(build_function_hopf(&phi).unwrap());
        }
        let extra: Vec<_> = algebras.iter().flat_map(|h| [opposite(h).unwrap(), coopposite(h).unwrap()]).collect();
        algebras.extend(extra);
        for h in &algebras {
            let i = derive_integral_data(h);
            let r = check_structural_lemmas(h, &i, LemmaConfig::default());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn dimension_equality_sign() {
        let h = build_function_hopf(&GroupHom::sign(3).unwrap()).unwrap();
        assert_eq!(h.dim(0), h.dim(1));
        assert_eq!(h.dim(0), 3);
    }

    fn arb_vec(d: usize) -> impl Strategy<Value = DenseTensor> {
        prop::collection::vec((-3i64..4, -3i64..4), d).prop_map(|v| {
            DenseTensor::vector(v.into_iter().map(|(a, b)| Scalar::from_int(a) + Scalar::i() * Scalar::from_int(b)).collect())
        })
    }

    proptest! {
        #[test]
        fn trace_is_symmetric(alpha in 0usize..2, x in arb_vec(4), y in arb_vec(4)) {
            let h = build_kac_paljutkin();
            let i = derive_integral_data(&h);
            prop_assert_eq!(i.trace(alpha, &h.multiply(alpha, &x, &y)), i.trace(alpha, &h.multiply(alpha, &y, &x)));
        }

        #[test]
        fn trace_commutes_with_antipode(alpha in 0usize..2, x in arb_vec(4)) {
            let h = build_kac_paljutkin();
            let i = derive_integral_data(&h);
            // In Z/2 every α is its own inverse.
            prop_assert_eq!(i.trace(alpha, &h.apply_antipode(alpha, &x)), i.trace(alpha, &x));
        }

        #[test]
        fn coproduct_and_counit_are_unital(alpha in 0usize..2, beta in 0usize..2) {
            let h = build_kac_paljutkin();
            let ab = (alpha + beta) % 2;
            let img = h.apply_delta(alpha, beta, h.unit(ab));
            prop_assert_eq!(img, h.unit(alpha).outer(h.unit(beta), usize::MAX).unwrap());
            prop_assert!(h.apply_counit(h.unit(0)).is_one());
        }
    }
}
