//! Exact verification of the Hopf π-coalgebra axioms on structure constants.

use crate::group::Elem;
use crate::report::Report;
use crate::tensor::DenseTensor;

use super::HopfPiCoalgebra;

const UNCAPPED: usize = usize::MAX;

/// Records one check comparing two tensors of equal shape; on failure the
/// detail names the first differing multi-index and the number of bad entries.
pub(crate) fn compare(r: &mut Report, check: &str, context: &str, lhs: &DenseTensor, rhs: &DenseTensor) {
    if lhs.shape() != rhs.shape() {
        r.fail(check, format!("{context}: shapes {:?} vs {:?}", lhs.shape(), rhs.shape()));
        return;
    }
    let bad: Vec<usize> = (0..lhs.len()).filter(|&k| lhs.data()[k] != rhs.data()[k]).collect();
    r.check(bad.is_empty(), check, || {
        let first = bad[0];
        let idx = lhs.indices().nth(first).unwrap_or_default();
        format!(
            "{context}: {} entries differ, first at {idx:?}: {} vs {}",
            bad.len(),
            lhs.data()[first],
            rhs.data()[first]
        )
    });
}

fn c(a: &DenseTensor, ax: &[usize], b: &DenseTensor, bx: &[usize]) -> DenseTensor {
    a.contract(ax, b, bx, UNCAPPED).expect("shape-checked contraction")
}

/// Checks every axiom of a finite-type involutory Hopf π-coalgebra.
///
/// Quantified identities skip gradings where some involved component is zero,
/// since both sides are then empty.
pub fn validate_hopf(h: &HopfPiCoalgebra) -> Report {
    let mut r = Report::new(format!("hopf axioms [{}]", h.name()));
    let g = h.pi();
    let one = g.identity();
    let elems: Vec<Elem> = g.elements().collect();
    let nz = |a: Elem| h.dim(a) > 0;
    let name = |a: Elem| g.name(a).to_string();

    // Support is a subgroup containing 1.
    r.check(nz(one), "dim H_1 nonzero", || "H_1 = 0".into());
    for &a in &elems {
        for &b in &elems {
            if nz(a) && nz(b) {
                let ab = g.mul(a, b);
                r.check(nz(ab), "support closed under product", || {
                    format!("H_{} and H_{} nonzero but H_{} = 0", name(a), name(b), name(ab))
                });
            }
        }
        if nz(a) {
            r.check(nz(g.inv(a)), "support closed under inverse", || {
                format!("H_{} nonzero but H_{} = 0", name(a), name(g.inv(a)))
            });
        }
    }

    for &a in &elems {
        if !nz(a) {
            continue;
        }
        let d = h.dim(a);
        let m = h.mul(a);
        let u = h.unit(a);
        let ctx = format!("H_{}", name(a));
        // (e_i e_j) e_k: [i j n] x [n k l] -> [i j k l]
        let lhs = c(m, &[2], m, &[0]);
        compare(&mut r, "associativity", &ctx, &lhs, &reorder_assoc(m));
        let id = DenseTensor::identity(d);
        compare(&mut r, "left unit", &ctx, &c(u, &[0], m, &[0]), &id);
        compare(&mut r, "right unit", &ctx, &c(u, &[0], m, &[1]), &id);
    }

    // Coassociativity.
    for &a in &elems {
        for &b in &elems {
            for &cc in &elems {
                if !(nz(a) && nz(b) && nz(cc)) {
                    continue;
                }
                let ab = g.mul(a, b);
                let bc = g.mul(b, cc);
                // (Δ_{a,b} ⊗ id) Δ_{ab,c}: [i m c] x [m a b] -> [i c a b] -> [i a b c]
                let lhs = c(h.delta(ab, cc), &[1], h.delta(a, b), &[0]).permute(&[0, 2, 3, 1]);
                // (id ⊗ Δ_{b,c}) Δ_{a,bc}: [i a n] x [n b c] -> [i a b c]
                let rhs = c(h.delta(a, bc), &[2], h.delta(b, cc), &[0]);
                compare(
                    &mut r,
                    "coassociativity",
                    &format!("({},{},{})", name(a), name(b), name(cc)),
                    &lhs,
                    &rhs,
                );
            }
        }
    }

    // Counit.
    let eps = h.counit();
    for &a in &elems {
        if !nz(a) {
            continue;
        }
        let id = DenseTensor::identity(h.dim(a));
        compare(&mut r, "right counit", &format!("H_{}", name(a)), &c(h.delta(a, one), &[2], eps, &[0]), &id);
        let left = c(h.delta(one, a), &[1], eps, &[0]);
        compare(&mut r, "left counit", &format!("H_{}", name(a)), &left, &id);
    }

    // Antipode.
    let eps_unit = |a: Elem| c(eps, &[], h.unit(a), &[]);
    for &a in &elems {
        if !nz(a) {
            continue;
        }
        let ai = g.inv(a);
        let s = h.antipode(ai); // [x in H_a][y in H_{a^-1}]
        let m = h.mul(a);
        let expected = eps_unit(a); // [i k]
        // m_a (S_{a^-1} ⊗ id) Δ_{a^-1,a}: [i y b] x [x y] -> [i b x]; x [x b k] -> [i k]
        let t = c(h.delta(ai, a), &[1], s, &[1]); // [i b x]
        let lhs = c(&t, &[2, 1], m, &[0, 1]);
        compare(&mut r, "antipode left", &format!("H_{}", name(a)), &lhs, &expected);
        // m_a (id ⊗ S_{a^-1}) Δ_{a,a^-1}: [i a y] x [x y] -> [i a x]; x [a x k]
        let t = c(h.delta(a, ai), &[2], s, &[1]);
        let rhs = c(&t, &[1, 2], m, &[0, 1]);
        compare(&mut r, "antipode right", &format!("H_{}", name(a)), &rhs, &expected);
    }

    // Δ_{a,b} and ε are unital algebra maps.
    for &a in &elems {
        for &b in &elems {
            let ab = g.mul(a, b);
            if !(nz(a) && nz(b)) {
                continue;
            }
            let ctx = format!("Δ_{{{},{}}}", name(a), name(b));
            let dl = h.delta(a, b);
            // Δ(e_i e_j): [i j m] x [m x y] -> [i j x y]
            let lhs = c(h.mul(ab), &[2], dl, &[0]);
            // Δ(e_i)Δ(e_j): [i x1 y1] x [j x2 y2] -> [i x1 y1 j x2 y2]
            let pair = c(dl, &[], dl, &[]);
            let t = c(&pair, &[1, 4], h.mul(a), &[0, 1]); // [i y1 j y2 x]
            let rhs = c(&t, &[1, 3], h.mul(b), &[0, 1]); // [i j x y]
            compare(&mut r, "Δ multiplicative", &ctx, &lhs, &rhs);
            let unit_image = c(h.unit(ab), &[0], dl, &[0]);
            compare(&mut r, "Δ unital", &ctx, &unit_image, &c(h.unit(a), &[], h.unit(b), &[]));
        }
    }
    {
        let lhs = c(h.mul(one), &[2], eps, &[0]);
        let rhs = c(eps, &[], eps, &[]);
        compare(&mut r, "ε multiplicative", "H_1", &lhs, &rhs);
        let e1 = h.apply_counit(h.unit(one));
        r.check(e1.is_one(), "ε unital", || format!("ε(1_1) = {e1}"));
    }

    // Involutory, anti-multiplicative, anti-comultiplicative.
    for &a in &elems {
        if !nz(a) {
            continue;
        }
        let ai = g.inv(a);
        let sa = h.antipode(a);
        let ctx = format!("S_{}", name(a));
        let ss = c(h.antipode(ai), &[1], sa, &[0]);
        compare(&mut r, "involutory", &ctx, &ss, &DenseTensor::identity(h.dim(a)));
        // S(e_i e_j) = S(e_j) S(e_i): [i j m] x [r m] -> [i j r]
        let lhs = c(h.mul(a), &[2], sa, &[1]);
        // [r1 j] x [r2 i] -> [r1 j r2 i]; x m_{a^-1}[r1 r2 r] -> [j i r]
        let pair = c(sa, &[], sa, &[]);
        let rhs = c(&pair, &[0, 2], h.mul(ai), &[0, 1]).permute(&[1, 0, 2]);
        compare(&mut r, "antipode anti-multiplicative", &ctx, &lhs, &rhs);
        let su = h.apply_antipode(a, h.unit(a));
        compare(&mut r, "antipode unital", &ctx, &su, h.unit(ai));
    }
    {
        let es = c(eps, &[0], h.antipode(one), &[0]);
        compare(&mut r, "ε∘S_1 = ε", "H_1", &es, eps);
    }
    for &a in &elems {
        for &b in &elems {
            if !(nz(a) && nz(b)) {
                continue;
            }
            let ab = g.mul(a, b);
            let (ai, bi) = (g.inv(a), g.inv(b));
            // Δ_{b^-1,a^-1} S_{ab}: [m i] x [m y x] -> [i y x]
            let lhs = c(h.antipode(ab), &[0], h.delta(bi, ai), &[0]);
            // σ(S_a ⊗ S_b)Δ_{a,b}: [i p q] x [x p] -> [i q x]; x [y q] -> [i x y] -> [i y x]
            let t = c(h.delta(a, b), &[1], h.antipode(a), &[1]);
            let rhs = c(&t, &[1], h.antipode(b), &[1]).permute(&[0, 2, 1]);
            compare(
                &mut r,
                "antipode anti-comultiplicative",
                &format!("({},{})", name(a), name(b)),
                &lhs,
                &rhs,
            );
        }
    }
    r
}

/// `e_i (e_j e_k)` laid out as `[i j k l]`.
fn reorder_assoc(m: &DenseTensor) -> DenseTensor {
    // m[j k n] x m[i n l] -> [j k i l] -> [i j k l]
    c(m, &[2], m, &[1]).permute(&[2, 0, 1, 3])
}
