//! Checks for crossing data `φ_β: H_α → H_{βαβ⁻¹}`.

use crate::report::Report;
use crate::tensor::{inverse, mat_mul, DenseTensor};

use super::axioms::compare;
use super::HopfPiCoalgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingStatus {
    NotProvided,
    Checked(Report),
}

impl CrossingStatus {
    pub fn passed(&self) -> bool {
        matches!(self, CrossingStatus::Checked(r) if r.passed())
    }
}

fn c(a: &DenseTensor, ax: &[usize], b: &DenseTensor, bx: &[usize]) -> DenseTensor {
    a.contract(ax, b, bx, usize::MAX).expect("shape-checked contraction")
}

/// Each `φ_β` must be an algebra isomorphism commuting with `Δ`, `ε` and `S`,
/// and `β ↦ φ_β` must be multiplicative.
pub fn validate_crossing(h: &HopfPiCoalgebra) -> CrossingStatus {
    if !h.has_crossing() {
        return CrossingStatus::NotProvided;
    }
    let mut r = Report::new(format!("crossing [{}]", h.name()));
    let g = h.pi();
    let phi = |b, a| h.crossing(b, a).expect("crossing present");
    let one = g.identity();
    for b in g.elements() {
        for a in g.elements() {
            let ca = g.conjugate(a, b);
            let ctx = format!("φ_{} on H_{}", g.name(b), g.name(a));
            let f = phi(b, a);
            if h.dim(a) != h.dim(ca) {
                r.fail("bijective", format!("{ctx}: dimensions {} -> {}", h.dim(a), h.dim(ca)));
                continue;
            }
            if h.dim(a) == 0 {
                continue;
            }
            r.check(inverse(f).is_ok(), "bijective", || format!("{ctx}: singular"));
            let lhs = c(h.mul(a), &[2], f, &[1]);
            let pair = c(f, &[], f, &[]);
            let rhs = c(&pair, &[0, 2], h.mul(ca), &[0, 1]);
            compare(&mut r, "multiplicative", &ctx, &lhs, &rhs);
            compare(&mut r, "unital", &ctx, &c(f, &[1], h.unit(a), &[0]), h.unit(ca));

            // φ_β S_α = S_{βαβ⁻¹} φ_β
            let ai = g.inv(a);
            let lhs = mat_mul(phi(b, ai), h.antipode(a)).expect("shapes");
            let rhs = mat_mul(h.antipode(ca), f).expect("shapes");
            compare(&mut r, "commutes with antipode", &ctx, &lhs, &rhs);

            for gm in g.elements() {
                let ag = g.mul(a, gm);
                if h.dim(gm) == 0 {
                    continue;
                }
                let cg = g.conjugate(gm, b);
                // (φ ⊗ φ)Δ_{a,g}: [i p q] x [x p] -> [i q x]; x [y q] -> [i x y]
                let t = c(h.delta(a, gm), &[1], f, &[1]);
                let lhs = c(&t, &[1], phi(b, gm), &[1]);
                // Δ_{ca,cg} φ_β: [m i] x [m x y] -> [i x y]
                let rhs = c(phi(b, ag), &[0], h.delta(ca, cg), &[0]);
                compare(
                    &mut r,
                    "commutes with Δ",
                    &format!("φ_{} on Δ_{{{},{}}}", g.name(b), g.name(a), g.name(gm)),
                    &lhs,
                    &rhs,
                );
            }
        }
        let e = c(h.counit(), &[0], phi(b, one), &[0]);
        compare(&mut r, "preserves ε", &format!("φ_{}", g.name(b)), &e, h.counit());
    }
    for b in g.elements() {
        for b2 in g.elements() {
            let bb = g.mul(b, b2);
            for a in g.elements() {
                if h.dim(a) == 0 {
                    continue;
                }
                let mid = g.conjugate(a, b2);
                let composed = mat_mul(phi(b, mid), phi(b2, a)).expect("shapes");
                compare(
                    &mut r,
                    "multiplicative in β",
                    &format!("φ_{}φ_{} on H_{}", g.name(b), g.name(b2), g.name(a)),
                    phi(bb, a),
                    &composed,
                );
            }
        }
    }
    CrossingStatus::Checked(r)
}
