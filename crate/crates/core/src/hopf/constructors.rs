//! The example algebras: Kac–Paljutkin over `Z/2` and `F(G)^φ` for `φ: G → π`.

use crate::group::{validate_hom, Elem, GroupHom, GroupTable};
use crate::scalar::Scalar;
use crate::tensor::DenseTensor;

use super::{HopfParts, HopfPiCoalgebra, StructureError};

fn s(text: &str) -> Scalar {
    text.parse().expect("literal scalar")
}

/// Index of the matrix unit `e_{k,l}` (1-based) in the basis `e11, e12, e21, e22`.
fn mat(k: usize, l: usize) -> usize {
    2 * (k - 1) + (l - 1)
}

/// Fills `Δ(e_input) += coeff · e_left ⊗ e_right`.
fn put(t: &mut DenseTensor, input: usize, coeff: &str, left: usize, right: usize) {
    let v = t.get(&[input, left, right]) + &s(coeff);
    t.set(&[input, left, right], v);
}

/// The Kac–Paljutkin algebra `C^4 ⊕ Mat_2` seen as a Hopf `Z/2`-coalgebra.
///
/// `H_0` has the idempotent basis `e1..e4` (indices 0..3), `H_1 = Mat_2` has
/// the matrix units `e11, e12, e21, e22` in that order.
pub fn build_kac_paljutkin() -> HopfPiCoalgebra {
    let pi = GroupTable::cyclic(2).expect("Z/2");
    let d = 4;

    let mut m0 = DenseTensor::zeros(&[d, d, d]);
    for k in 0..d {
        m0.set(&[k, k, k], Scalar::one());
    }
    let mut m1 = DenseTensor::zeros(&[d, d, d]);
    for i in 1..=2 {
        for j in 1..=2 {
            for l in 1..=2 {
                m1.set(&[mat(i, j), mat(j, l), mat(i, l)], Scalar::one());
            }
        }
    }
    let unit0 = DenseTensor::vector(vec![Scalar::one(); d]);
    let mut unit1 = DenseTensor::zeros(&[d]);
    unit1.set(&[mat(1, 1)], Scalar::one());
    unit1.set(&[mat(2, 2)], Scalar::one());

    let (e1, e2, e3, e4) = (0, 1, 2, 3);
    let (e11, e12, e21, e22) = (mat(1, 1), mat(1, 2), mat(2, 1), mat(2, 2));

    let mut d00 = DenseTensor::zeros(&[d, d, d]);
    for (x, pairs) in [
        (e1, [(e1, e1), (e2, e2), (e3, e3), (e4, e4)]),
        (e2, [(e1, e2), (e2, e1), (e3, e4), (e4, e3)]),
        (e3, [(e1, e3), (e3, e1), (e2, e4), (e4, e2)]),
        (e4, [(e1, e4), (e4, e1), (e2, e3), (e3, e2)]),
    ] {
        for (l, r) in pairs {
            put(&mut d00, x, "1", l, r);
        }
    }

    let mut d01 = DenseTensor::zeros(&[d, d, d]);
    for (x, terms) in [
        (e11, [("1", e1, e11), ("1", e2, e22), ("1", e3, e11), ("1", e4, e22)]),
        (e12, [("1", e1, e12), ("-i", e2, e21), ("-1", e3, e12), ("i", e4, e21)]),
        (e21, [("1", e1, e21), ("i", e2, e12), ("-1", e3, e21), ("-i", e4, e12)]),
        (e22, [("1", e1, e22), ("1", e2, e11), ("1", e3, e22), ("1", e4, e11)]),
    ] {
        for (cf, l, r) in terms {
            put(&mut d01, x, cf, l, r);
        }
    }

    let mut d10 = DenseTensor::zeros(&[d, d, d]);
    for (x, terms) in [
        (e11, [("1", e11, e1), ("1", e22, e2), ("1", e11, e3), ("1", e22, e4)]),
        (e12, [("1", e12, e1), ("i", e21, e2), ("-1", e12, e3), ("-i", e21, e4)]),
        (e21, [("1", e21, e1), ("-i", e12, e2), ("-1", e21, e3), ("i", e12, e4)]),
        (e22, [("1", e22, e1), ("1", e11, e2), ("1", e22, e3), ("1", e11, e4)]),
    ] {
        for (cf, l, r) in terms {
            put(&mut d10, x, cf, l, r);
        }
    }

    let mut d11 = DenseTensor::zeros(&[d, d, d]);
    for (x, terms) in [
        (e1, [("1/2", e11, e11), ("1/2", e22, e22), ("1/2", e12, e12), ("1/2", e21, e21)]),
        (e2, [("1/2", e11, e22), ("1/2", e22, e11), ("1/2i", e12, e21), ("-1/2i", e21, e12)]),
        (e3, [("1/2", e11, e11), ("1/2", e22, e22), ("-1/2", e12, e12), ("-1/2", e21, e21)]),
        (e4, [("1/2", e11, e22), ("1/2", e22, e11), ("-1/2i", e12, e21), ("1/2i", e21, e12)]),
    ] {
        for (cf, l, r) in terms {
            put(&mut d11, x, cf, l, r);
        }
    }

    let mut counit = DenseTensor::zeros(&[d]);
    counit.set(&[e1], Scalar::one());

    let s0 = DenseTensor::identity(d);
    let mut s1 = DenseTensor::zeros(&[d, d]);
    for k in 1..=2 {
        for l in 1..=2 {
            s1.set(&[mat(l, k), mat(k, l)], Scalar::one());
        }
    }

    HopfPiCoalgebra::from_parts(HopfParts {
        name: "kac-paljutkin".into(),
        pi,
        dim: vec![d, d],
        mul: vec![m0, m1],
        unit: vec![unit0, unit1],
        delta: vec![vec![d00, d01], vec![d10, d11]],
        counit,
        antipode: vec![s0, s1],
        crossing: None,
    })
    .expect("Kac-Paljutkin tables are well-shaped")
}

/// `H^φ` with `H_α = span{e_g : φ(g) = α}`, basis in ascending index order.
pub fn build_function_hopf(phi: &GroupHom) -> Result<HopfPiCoalgebra, StructureError> {
    let report = validate_hom(phi);
    if !report.passed() {
        return Err(StructureError::Hom(report.violations[0].detail.clone()));
    }
    let (src, pi) = (&phi.source, &phi.target);
    let fibers: Vec<Vec<Elem>> = pi.elements().map(|a| phi.fiber(a)).collect();
    // position of each source element inside its own fiber
    let mut pos = vec![0; src.order()];
    for fib in &fibers {
        for (i, &g) in fib.iter().enumerate() {
            pos[g] = i;
        }
    }
    let dim: Vec<usize> = fibers.iter().map(Vec::len).collect();

    let mut mul = Vec::new();
    let mut unit = Vec::new();
    let mut antipode = Vec::new();
    for a in pi.elements() {
        let d = dim[a];
        let mut m = DenseTensor::zeros(&[d, d, d]);
        for i in 0..d {
            m.set(&[i, i, i], Scalar::one());
        }
        mul.push(m);
        unit.push(DenseTensor::vector(vec![Scalar::one(); d]));
        let ai = pi.inv(a);
        let mut sa = DenseTensor::zeros(&[dim[ai], d]);
        for (c, &g) in fibers[a].iter().enumerate() {
            sa.set(&[pos[src.inv(g)], c], Scalar::one());
        }
        antipode.push(sa);
    }
    let mut delta = Vec::new();
    for a in pi.elements() {
        let mut row = Vec::new();
        for b in pi.elements() {
            let ab = pi.mul(a, b);
            let mut t = DenseTensor::zeros(&[dim[ab], dim[a], dim[b]]);
            for &h in &fibers[a] {
                for &k in &fibers[b] {
                    t.set(&[pos[src.mul(h, k)], pos[h], pos[k]], Scalar::one());
                }
            }
            row.push(t);
        }
        delta.push(row);
    }
    let mut counit = DenseTensor::zeros(&[dim[pi.identity()]]);
    counit.set(&[pos[src.identity()]], Scalar::one());

    HopfPiCoalgebra::from_parts(HopfParts {
        name: "function algebra".into(),
        pi: pi.clone(),
        dim,
        mul,
        unit,
        delta,
        counit,
        antipode,
        crossing: None,
    })
}

/// Attaches `φ_β|_{H_α} = id`, which is a crossing whenever π is abelian.
pub fn identity_crossing(h: HopfPiCoalgebra) -> Result<HopfPiCoalgebra, StructureError> {
    let g = h.pi().clone();
    if !g.is_abelian() {
        return Err(StructureError::Grading("identity crossing needs an abelian group".into()));
    }
    let block: Vec<Vec<DenseTensor>> = g
        .elements()
        .map(|_| g.elements().map(|a| DenseTensor::identity(h.dim(a))).collect())
        .collect();
    h.with_crossing(Some(block))
}

/// Conjugation crossing on `H^φ`: `φ_β(e_g) = e_{s(β) g s(β)⁻¹}` for a
/// homomorphic section `s: π → G` of `φ`.
pub fn conjugation_crossing(
    h: HopfPiCoalgebra,
    phi: &GroupHom,
    section: &[Elem],
) -> Result<HopfPiCoalgebra, StructureError> {
    let (src, pi) = (&phi.source, &phi.target);
    if section.len() != pi.order() {
        return Err(StructureError::Hom("section must have one entry per element of π".into()));
    }
    let s_hom = GroupHom::new(pi.clone(), src.clone(), section.to_vec())
        .map_err(|e| StructureError::Hom(e.to_string()))?;
    let report = validate_hom(&s_hom);
    if !report.passed() {
        return Err(StructureError::Hom(format!("section is not a homomorphism: {}", report.violations[0].detail)));
    }
    if let Some(b) = pi.elements().find(|&b| phi.apply(section[b]) != b) {
        return Err(StructureError::Hom(format!("φ(s({})) ≠ {}", pi.name(b), pi.name(b))));
    }
    let fibers: Vec<Vec<Elem>> = pi.elements().map(|a| phi.fiber(a)).collect();
    let mut pos = vec![0; src.order()];
    for fib in &fibers {
        for (i, &g) in fib.iter().enumerate() {
            pos[g] = i;
        }
    }
    let mut block = Vec::new();
    for b in pi.elements() {
        let sb = section[b];
        let mut row = Vec::new();
        for a in pi.elements() {
            let c = pi.conjugate(a, b);
            let mut t = DenseTensor::zeros(&[fibers[c].len(), fibers[a].len()]);
            for (col, &g) in fibers[a].iter().enumerate() {
                t.set(&[pos[src.conjugate(g, sb)], col], Scalar::one());
            }
            row.push(t);
        }
        block.push(row);
    }
    h.with_crossing(Some(block))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kac_paljutkin_literal_entries() {
        let h = build_kac_paljutkin();
        // Δ_{1,1}(e_1) has 1/2 on e11 ⊗ e11.
        assert_eq!(h.delta(1, 1).get(&[0, mat(1, 1), mat(1, 1)]), &Scalar::ratio(1, 2));
        assert_eq!(h.delta(1, 1).get(&[1, mat(1, 2), mat(2, 1)]), &s("1/2i"));
        // S_1(e12) = e21.
        let img = h.apply_antipode(1, &h.basis(1, mat(1, 2)));
        assert_eq!(img, h.basis(1, mat(2, 1)));
        assert_eq!(h.dim(0), 4);
        assert_eq!(h.dim(1), 4);
    }

    #[test]
    fn function_hopf_dimensions() {
        let h = build_function_hopf(&GroupHom::to_trivial(GroupTable::cyclic(2).unwrap())).unwrap();
        assert_eq!(h.pi().order(), 1);
        assert_eq!(h.dim(0), 2);

        let sign = GroupHom::sign(3).unwrap();
        let h = build_function_hopf(&sign).unwrap();
        // Fiber sizes computed directly from the parity map.
        for a in 0..2 {
            let count = sign.image.iter().filter(|&&x| x == a).count();
            assert_eq!(h.dim(a), count);
        }
        assert_eq!((h.dim(0), h.dim(1)), (3, 3));

        let h = build_function_hopf(&GroupHom::identity(GroupTable::cyclic(2).unwrap())).unwrap();
        assert_eq!((h.dim(0), h.dim(1)), (1, 1));
    }

    #[test]
    fn non_surjective_hom_gives_empty_components() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let z4 = GroupTable::cyclic(4).unwrap();
        let phi = GroupHom::new(z2, z4, vec![0, 2]).unwrap();
        let h = build_function_hopf(&phi).unwrap();
        assert_eq!(h.support(), vec![0, 2]);
        assert_eq!(h.dim(1), 0);
        assert!(crate::hopf::validate_hopf(&h).passed());
    }

    #[test]
    fn invalid_hom_rejected() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        let phi = GroupHom::new(s3, z2, vec![0, 1, 0, 0, 1, 1]).unwrap();
        assert!(matches!(build_function_hopf(&phi), Err(StructureError::Hom(_))));
    }

    #[test]
    fn identity_crossing_needs_abelian() {
        let h = build_function_hopf(&GroupHom::identity(GroupTable::symmetric(3).unwrap())).unwrap();
        assert!(identity_crossing(h).is_err());
    }
}
