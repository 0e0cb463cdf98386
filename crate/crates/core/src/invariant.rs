//! `Z(D)` and `K_H(D) = (dim H_1)^{-g} Z(D)` for a colored diagram.
//!
//! The main route never materializes a circle tensor. Each crossing `c`, the
//! `j`-th on its lower circle and on an upper circle of color `α`, becomes
//!
//! ```text
//! X_c[u_in, u_out, l_in, l_out] = Σ_{x,y} μ_α[u_in][x][u_out] P[x][y] δ_{g_{j-1},β_j}[l_in][l_out][y]
//! ```
//!
//! with `g_j = β_1⋯β_j`, `P = id` for `ν = +1` and `P = S_{α⁻¹}` for `ν = -1`.
//! Chaining the `μ` factors around an upper circle gives `T_α∘m^{(n)}`;
//! chaining the `δ` factors around a lower circle and closing the `H_1` bond
//! gives `Δ_{β_1,…,β_m}(C)`, because `C` is the trace of `Δ_{1,1}`.
//! [`contract_by_circles`] is the direct construction, kept as an independent
//! check.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::group::{Elem, Sign};
use crate::heegaard::{CircleRef, ColoredDiagram, CrossingId, HeegaardDiagram};
use crate::hopf::{derive_integral_data, iterated_delta, HopfPiCoalgebra, IntegralData, Nesting, StructureError};
use crate::scalar::Scalar;
use crate::tensor::{DenseTensor, TensorError};

pub const DEFAULT_ENTRY_CAP: usize = 10_000_000;
pub const ENTRY_CAP_ENV: &str = "HOPFK_ENTRY_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionConfig {
    /// Largest number of entries any intermediate tensor may have.
    pub entry_cap: usize,
}

impl Default for ContractionConfig {
    fn default() -> Self {
        ContractionConfig { entry_cap: DEFAULT_ENTRY_CAP }
    }
}

impl ContractionConfig {
    /// Default config, with the cap overridden by `HOPFK_ENTRY_CAP` when set.
    pub fn from_env() -> Result<Self, InvariantError> {
        match std::env::var(ENTRY_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|entry_cap| ContractionConfig { entry_cap })
                .map_err(|_| InvariantError::Config(format!("{ENTRY_CAP_ENV}={v} is not a non-negative integer"))),
            Err(_) => Ok(ContractionConfig::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("diagram is malformed: {0}")]
    Diagram(String),
    #[error("grading mismatch: {0}")]
    Grading(String),
    #[error("contraction at {step} needs {entries} entries, cap is {cap}")]
    CapExceeded { step: String, entries: u128, cap: usize },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantValue {
    #[serde(rename = "Z")]
    pub z: Scalar,
    #[serde(rename = "K")]
    pub k: Scalar,
    /// Largest intermediate tensor, in entries.
    #[serde(skip)]
    pub peak_entries: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedLeg {
    pub crossing: CrossingId,
    pub grading: Elem,
}

/// A tensor whose axes are labelled by the crossing they will be contracted at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTensor {
    pub legs: Vec<GradedLeg>,
    pub data: DenseTensor,
}

/// Per-crossing data derived from the colors.
#[derive(Debug, Clone, Copy)]
struct CrossingInfo {
    alpha: Elem,
    sign: Sign,
    /// `g_{j-1}` on the lower circle.
    lower_out: Elem,
    prev_upper: CrossingId,
    prev_lower: CrossingId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Bond {
    /// From `u_out` of the crossing to `u_in` of its successor on the upper circle.
    Upper(CrossingId),
    /// From `l_in` of the crossing to `l_out` of its successor on the lower circle.
    Lower(CrossingId),
}

fn check_colored(h: &HopfPiCoalgebra, d: &ColoredDiagram) -> Result<(), InvariantError> {
    let r = d.diagram.check_structure();
    if !r.passed() {
        return Err(InvariantError::Diagram(r.to_string()));
    }
    if d.colors.len() != d.genus() {
        return Err(InvariantError::Diagram(format!("{} colors for genus {}", d.colors.len(), d.genus())));
    }
    if let Some(a) = d.colors.iter().find(|&&a| a >= h.pi().order()) {
        return Err(InvariantError::Diagram(format!("color {a} outside π")));
    }
    Ok(())
}

/// `β_j = α_k^ν` along lower circle `i`, erroring unless their product is 1.
fn lower_gradings(h: &HopfPiCoalgebra, d: &ColoredDiagram, i: usize) -> Result<Vec<Elem>, InvariantError> {
    let g = h.pi();
    let map = d.diagram.crossing_map();
    let betas: Vec<Elem> = d.diagram.lower_orders[i]
        .iter()
        .map(|id| {
            let c = map[id];
            let a = d.colors[c.upper];
            if c.sign == Sign::Plus { a } else { g.inv(a) }
        })
        .collect();
    let total = betas.iter().fold(g.identity(), |acc, &b| g.mul(acc, b));
    if total != g.identity() {
        return Err(InvariantError::Grading(format!("w{} evaluates to {} ≠ 1", i + 1, g.name(total))));
    }
    Ok(betas)
}

fn crossing_infos(h: &HopfPiCoalgebra, d: &ColoredDiagram) -> Result<HashMap<CrossingId, CrossingInfo>, InvariantError> {
    let g = h.pi();
    let map = d.diagram.crossing_map();
    let mut prev_upper = HashMap::new();
    for o in &d.diagram.upper_orders {
        for (s, &c) in o.iter().enumerate() {
            prev_upper.insert(c, o[(s + o.len() - 1) % o.len()]);
        }
    }
    let mut out = HashMap::new();
    for (i, o) in d.diagram.lower_orders.iter().enumerate() {
        let betas = lower_gradings(h, d, i)?;
        let mut prefix = g.identity();
        for (j, &c) in o.iter().enumerate() {
            let next = g.mul(prefix, betas[j]);
            out.insert(
                c,
                CrossingInfo {
                    alpha: d.colors[map[&c].upper],
                    sign: map[&c].sign,
                    lower_out: prefix,
                    prev_upper: prev_upper[&c],
                    prev_lower: o[(j + o.len() - 1) % o.len()],
                },
            );
            prefix = next;
        }
    }
    Ok(out)
}

fn bonds_of(c: CrossingId, info: &CrossingInfo) -> [Bond; 4] {
    [Bond::Upper(info.prev_upper), Bond::Upper(c), Bond::Lower(c), Bond::Lower(info.prev_lower)]
}

fn crossing_tensor(h: &HopfPiCoalgebra, info: &CrossingInfo) -> DenseTensor {
    let g = h.pi();
    let beta = if info.sign == Sign::Plus { info.alpha } else { g.inv(info.alpha) };
    let d = h.delta(info.lower_out, beta);
    let d = match info.sign {
        Sign::Plus => d.clone(),
        Sign::Minus => d.contract(&[2], h.antipode(beta), &[1], usize::MAX).expect("antipode shape"),
    };
    h.mul(info.alpha).contract(&[1], &d, &[2], usize::MAX).expect("graded shapes")
}

/// A partially contracted network: open legs and their tensor.
struct Piece<L> {
    legs: Vec<L>,
    t: DenseTensor,
}

struct Network<L> {
    pieces: Vec<Piece<L>>,
    closed: Scalar,
    cap: usize,
    peak: usize,
}

impl<L: Copy + Eq> Network<L> {
    fn new(cap: usize) -> Self {
        Network { pieces: Vec::new(), closed: Scalar::one(), cap, peak: 0 }
    }

    /// Adds a tensor and contracts it with every piece it shares a leg with.
    fn absorb(&mut self, mut cur: Piece<L>, step: &dyn Fn() -> String) -> Result<(), InvariantError> {
        while let Some((a, b)) = duplicate(&cur.legs) {
            cur.t = cur.t.trace(a, b).expect("matching bond dimensions");
            cur.legs.remove(b);
            cur.legs.remove(a);
        }
        while let Some(p) = self.pieces.iter().position(|p| p.legs.iter().any(|l| cur.legs.contains(l))) {
            let other = self.pieces.remove(p);
            let mut ax_a = Vec::new();
            let mut ax_b = Vec::new();
            for (k, l) in cur.legs.iter().enumerate() {
                if let Some(m) = other.legs.iter().position(|x| x == l) {
                    ax_a.push(k);
                    ax_b.push(m);
                }
            }
            let free_a = (0..cur.legs.len()).filter(|k| !ax_a.contains(k));
            let free_b = (0..other.legs.len()).filter(|k| !ax_b.contains(k));
            let entries: u128 = free_a.clone().map(|k| cur.t.shape()[k] as u128).product::<u128>()
                * free_b.clone().map(|k| other.t.shape()[k] as u128).product::<u128>();
            if entries > self.cap as u128 {
                return Err(InvariantError::CapExceeded { step: step(), entries, cap: self.cap });
            }
            let legs: Vec<L> = free_a.map(|k| cur.legs[k]).chain(free_b.map(|k| other.legs[k])).collect();
            let t = cur.t.contract(&ax_a, &other.t, &ax_b, self.cap).expect("cap checked above");
            cur = Piece { legs, t };
        }
        self.peak = self.peak.max(cur.t.len());
        if cur.legs.is_empty() {
            self.closed = &self.closed * cur.t.into_scalar().expect("rank 0");
        } else {
            self.pieces.push(cur);
        }
        Ok(())
    }
}

fn duplicate<L: Eq>(legs: &[L]) -> Option<(usize, usize)> {
    (0..legs.len()).find_map(|a| (a + 1..legs.len()).find(|&b| legs[a] == legs[b]).map(|b| (a, b)))
}

/// Crossing order for [`contract_in_order`]. Greedy: prefer crossings that
/// touch the open network, then the fewest open legs afterwards, then the
/// smallest id; a connected component is finished before another is begun.
///
/// On the support of an involutory `H` every `H_α` has dimension `dim H_1`,
/// so the open-leg count orders intermediate sizes exactly.
pub fn plan_contraction_order(d: &HeegaardDiagram) -> Vec<CrossingId> {
    let comps = d.components();
    let comp_of: HashMap<CrossingId, usize> =
        comps.iter().enumerate().flat_map(|(k, ids)| ids.iter().map(move |&c| (c, k))).collect();
    let mut prev_upper = HashMap::new();
    let mut prev_lower = HashMap::new();
    for (orders, prev) in [(&d.upper_orders, &mut prev_upper), (&d.lower_orders, &mut prev_lower)] {
        for o in orders {
            for (s, &c) in o.iter().enumerate() {
                prev.insert(c, o[(s + o.len() - 1) % o.len()]);
            }
        }
    }
    let legs = |c: CrossingId| -> BTreeSet<Bond> {
        let all = [Bond::Upper(prev_upper[&c]), Bond::Upper(c), Bond::Lower(c), Bond::Lower(prev_lower[&c])];
        // Symmetric difference drops bonds traced within the crossing itself.
        let mut s = BTreeSet::new();
        for b in all {
            if !s.remove(&b) {
                s.insert(b);
            }
        }
        s
    };
    let mut remaining: BTreeSet<CrossingId> = d.crossing_ids().into_iter().collect();
    let mut open: BTreeSet<Bond> = BTreeSet::new();
    let mut current: Option<usize> = None;
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let best = remaining
            .iter()
            .filter(|c| current.is_none_or(|k| comp_of[c] == k))
            .map(|&c| {
                let l = legs(c);
                let touching = l.iter().any(|b| open.contains(b));
                let after = open.symmetric_difference(&l).count();
                ((!touching, after, c), l)
            })
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("the current component still has crossings");
        let ((_, _, c), l) = best;
        open = open.symmetric_difference(&l).copied().collect();
        remaining.remove(&c);
        order.push(c);
        current = if remaining.iter().any(|r| comp_of[r] == comp_of[&c]) { Some(comp_of[&c]) } else { None };
    }
    order
}

/// Factor from circles without crossings: `T_α(1_α)` per upper, `ε(C)` per lower.
fn empty_circle_factor(h: &HopfPiCoalgebra, i: &IntegralData, d: &ColoredDiagram) -> Scalar {
    let mut f = Scalar::one();
    for (k, o) in d.diagram.upper_orders.iter().enumerate() {
        if o.is_empty() {
            let a = d.colors[k];
            f = f * i.trace(a, h.unit(a));
        }
    }
    for o in &d.diagram.lower_orders {
        if o.is_empty() {
            f = f * h.apply_counit(i.c());
        }
    }
    f
}

fn normalize(h: &HopfPiCoalgebra, z: Scalar, genus: usize, peak: usize) -> InvariantValue {
    let dim = Scalar::from_int(h.dim_one() as i64).pow(genus as u32);
    let k = z.checked_div(&dim).expect("dim H_1 is nonzero");
    InvariantValue { z, k, peak_entries: peak }
}

/// `Z` and `K` with the planner's crossing order.
pub fn contract_invariant(h: &HopfPiCoalgebra, d: &ColoredDiagram, cfg: ContractionConfig) -> Result<InvariantValue, InvariantError> {
    check_colored(h, d)?;
    let order = plan_contraction_order(&d.diagram);
    contract_in_order(h, d, &order, cfg)
}

/// `Z` and `K` contracting crossings in the given order, which must list every
/// crossing once.
pub fn contract_in_order(
    h: &HopfPiCoalgebra,
    d: &ColoredDiagram,
    order: &[CrossingId],
    cfg: ContractionConfig,
) -> Result<InvariantValue, InvariantError> {
    check_colored(h, d)?;
    let mut listed = order.to_vec();
    listed.sort_unstable();
    if listed != d.diagram.crossing_ids() {
        return Err(InvariantError::Diagram("contraction order must list every crossing once".into()));
    }
    let infos = crossing_infos(h, d)?;
    let integrals = derive_integral_data(h);
    let mut cache: HashMap<(Elem, Sign, Elem), DenseTensor> = HashMap::new();
    let mut net = Network::new(cfg.entry_cap);
    let n = order.len();
    for (step, &c) in order.iter().enumerate() {
        let info = &infos[&c];
        let t = cache
            .entry((info.alpha, info.sign, info.lower_out))
            .or_insert_with(|| crossing_tensor(h, info))
            .clone();
        let piece = Piece { legs: bonds_of(c, info).to_vec(), t };
        net.absorb(piece, &|| format!("crossing {c} (step {} of {n})", step + 1))?;
    }
    debug_assert!(net.pieces.is_empty(), "every bond is closed once all crossings are in");
    let z = net.closed * empty_circle_factor(h, &integrals, d);
    Ok(normalize(h, z, d.genus(), net.peak))
}

/// The tensor of one circle with one leg per crossing in circle order:
/// `T_α∘m^{(n)}` for an upper circle, `Δ_{β_1,…,β_m}(C)` for a lower one.
/// A circle without crossings gives a rank-0 tensor.
pub fn circle_tensor(
    h: &HopfPiCoalgebra,
    integrals: &IntegralData,
    d: &ColoredDiagram,
    circle: CircleRef,
    cfg: ContractionConfig,
) -> Result<GradedTensor, InvariantError> {
    check_colored(h, d)?;
    match circle {
        CircleRef::Upper(k) => {
            let a = d.colors[k];
            let o = &d.diagram.upper_orders[k];
            let legs = o.iter().map(|&crossing| GradedLeg { crossing, grading: a }).collect();
            if o.is_empty() {
                return Ok(GradedTensor { legs, data: DenseTensor::scalar(integrals.trace(a, h.unit(a))) });
            }
            // chain[v0, x1, .., xj, vj]: coefficient of e_vj in e_v0 e_x1 ⋯ e_xj
            let mut chain = h.mul(a).clone();
            for _ in 1..o.len() {
                let entries = chain.len() as u128 * h.dim(a) as u128;
                if entries > cfg.entry_cap as u128 {
                    return Err(InvariantError::CapExceeded { step: format!("upper circle {k}"), entries, cap: cfg.entry_cap });
                }
                let last = chain.rank() - 1;
                chain = chain.contract(&[last], h.mul(a), &[0], cfg.entry_cap).expect("cap checked above");
            }
            let last = chain.rank() - 1;
            Ok(GradedTensor { legs, data: chain.trace(0, last).expect("square") })
        }
        CircleRef::Lower(i) => {
            let betas = lower_gradings(h, d, i)?;
            let legs = d.diagram.lower_orders[i]
                .iter()
                .zip(&betas)
                .map(|(&crossing, &grading)| GradedLeg { crossing, grading })
                .collect();
            let data = iterated_delta(h, &betas, integrals.c(), Nesting::Left, cfg.entry_cap).map_err(|e| match e {
                StructureError::Tensor(TensorError::CapExceeded { entries, cap }) => {
                    InvariantError::CapExceeded { step: format!("Δ on lower circle {i}"), entries, cap }
                }
                other => other.into(),
            })?;
            Ok(GradedTensor { legs, data })
        }
    }
}

/// `Z` by materializing every circle tensor and contracting them along
/// crossing ids, with `S_{α⁻¹}` applied to the lower leg of each negative
/// crossing. Exponential in circle length; meant for cross-checking.
pub fn contract_by_circles(h: &HopfPiCoalgebra, d: &ColoredDiagram, cfg: ContractionConfig) -> Result<InvariantValue, InvariantError> {
    check_colored(h, d)?;
    let integrals = derive_integral_data(h);
    let map = d.diagram.crossing_map();
    let mut net: Network<CrossingId> = Network::new(cfg.entry_cap);
    for k in 0..d.genus() {
        let t = circle_tensor(h, &integrals, d, CircleRef::Upper(k), cfg)?;
        let legs = t.legs.iter().map(|l| l.crossing).collect();
        net.absorb(Piece { legs, t: t.data }, &|| format!("upper circle {k}"))?;
    }
    for i in 0..d.genus() {
        let t = circle_tensor(h, &integrals, d, CircleRef::Lower(i), cfg)?;
        let mut legs: Vec<CrossingId> = t.legs.iter().map(|l| l.crossing).collect();
        let mut data = t.data;
        for leg in &t.legs {
            if map[&leg.crossing].sign == Sign::Minus {
                let pos = legs.iter().position(|&c| c == leg.crossing).expect("leg present");
                data = data.contract(&[pos], h.antipode(leg.grading), &[1], usize::MAX).expect("antipode shape");
                legs.remove(pos);
                legs.push(leg.crossing);
            }
        }
        net.absorb(Piece { legs, t: data }, &|| format!("lower circle {i}"))?;
    }
    Ok(normalize(h, net.closed, d.genus(), net.peak))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupHom, GroupTable};
    use crate::heegaard::{connected_sum, connected_sum_colored, lens_diagram, lens_pq_diagram, s1_x_s2_diagram, Crossing};
    use crate::hopf::{build_function_hopf, build_kac_paljutkin};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> ContractionConfig {
        ContractionConfig::default()
    }

    fn lens(p: usize, color: Elem) -> ColoredDiagram {
        ColoredDiagram::new(lens_diagram(p).unwrap(), vec![color])
    }

    #[test]
    fn kac_paljutkin_s3() {
        let h = build_kac_paljutkin();
        let v = contract_invariant(&h, &lens(1, 0), cfg()).unwrap();
        assert_eq!(v.z, Scalar::from_int(4));
        assert!(v.k.is_one());
    }

    #[test]
    fn circle_tensors_of_s3() {
        let h = build_kac_paljutkin();
        let i = derive_integral_data(&h);
        let d = lens(1, 0);
        let lower = circle_tensor(&h, &i, &d, CircleRef::Lower(0), cfg()).unwrap();
        assert_eq!(&lower.data, i.c());
        let upper = circle_tensor(&h, &i, &d, CircleRef::Upper(0), cfg()).unwrap();
        assert_eq!(&upper.data, i.t(0));
        assert_eq!(upper.legs, vec![GradedLeg { crossing: 0, grading: 0 }]);
    }

    #[test]
    fn empty_circles_contribute_dimensions() {
        let h = build_kac_paljutkin();
        let i = derive_integral_data(&h);
        let d = ColoredDiagram::new(s1_x_s2_diagram(), vec![0]);
        for c in [CircleRef::Upper(0), CircleRef::Lower(0)] {
            let t = circle_tensor(&h, &i, &d, c, cfg()).unwrap();
            assert_eq!(t.data.into_scalar().unwrap(), Scalar::from_int(4));
        }
        // S¹×S²: Z = dim² and K = dim H_1.
        let v = contract_invariant(&h, &d, cfg()).unwrap();
        assert_eq!(v.k, Scalar::from_int(4));
    }

    #[test]
    fn known_lens_values() {
        let h = build_kac_paljutkin();
        for n in 1..=3 {
            let v = contract_invariant(&h, &lens(2 * n, 0), cfg()).unwrap();
            assert_eq!(v.k, Scalar::from_int(4), "L({},1) colored 0", 2 * n);
        }
        let h = build_function_hopf(&GroupHom::sign(3).unwrap()).unwrap();
        let v = contract_invariant(&h, &lens(2, 1), cfg()).unwrap();
        assert_eq!(v.k, Scalar::from_int(3));
    }

    #[test]
    fn two_routes_agree() {
        let kp = build_kac_paljutkin();
        let f = build_function_hopf(&GroupHom::sign(3).unwrap()).unwrap();
        for h in [&kp, &f] {
            for p in 1..=5 {
                for a in [0, 1] {
                    let d = lens(p, a);
                    if p % 2 == 1 && a == 1 {
                        continue;
                    }
                    let one = contract_invariant(h, &d, cfg()).unwrap();
                    let two = contract_by_circles(h, &d, cfg()).unwrap();
                    assert_eq!(one.z, two.z, "{} L({p},1) color {a}", h.name());
                }
            }
        }
        let mixed = ColoredDiagram::new(
            HeegaardDiagram {
                genus: 1,
                crossings: vec![
                    Crossing { id: 0, upper: 0, lower: 0, sign: Sign::Plus },
                    Crossing { id: 1, upper: 0, lower: 0, sign: Sign::Plus },
                    Crossing { id: 2, upper: 0, lower: 0, sign: Sign::Minus },
                    Crossing { id: 3, upper: 0, lower: 0, sign: Sign::Plus },
                ],
                upper_orders: vec![vec![0, 2, 1, 3]],
                lower_orders: vec![vec![0, 1, 2, 3]],
            },
            vec![1],
        );
        for h in [&kp, &f] {
            let one = contract_invariant(h, &mixed, cfg()).unwrap();
            let two = contract_by_circles(h, &mixed, cfg()).unwrap();
            assert_eq!(one.z, two.z);
        }
    }

    #[test]
    fn order_and_rotation_independence() {
        let h = build_kac_paljutkin();
        let d = ColoredDiagram::new(connected_sum(&lens_pq_diagram(5, 2).unwrap(), &lens_diagram(4).unwrap()), vec![0, 1]);
        let base = contract_invariant(&h, &d, cfg()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let mut order = d.diagram.crossing_ids();
            order.shuffle(&mut rng);
            assert_eq!(contract_in_order(&h, &d, &order, cfg()).unwrap().z, base.z);
        }
        for r in 1..4 {
            let mut rot = d.clone();
            rot.diagram.upper_orders[0].rotate_left(r);
            rot.diagram.lower_orders[1].rotate_left(r);
            assert_eq!(contract_invariant(&h, &rot, cfg()).unwrap().z, base.z);
        }
    }

    #[test]
    fn connected_sum_multiplies() {
        let h = build_kac_paljutkin();
        let a = lens(2, 1);
        let b = lens(4, 1);
        let ka = contract_invariant(&h, &a, cfg()).unwrap().k;
        let kb = contract_invariant(&h, &b, cfg()).unwrap().k;
        let kab = contract_invariant(&h, &connected_sum_colored(&a, &b), cfg()).unwrap().k;
        assert_eq!(kab, ka * kb);
    }

    #[test]
    fn unsupported_color_vanishes() {
        // Z/2 → Z/4 misses the odd colors, so H_1 and H_3 are zero.
        let inc = GroupHom::new(GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(4).unwrap(), vec![0, 2]).unwrap();
        let h = build_function_hopf(&inc).unwrap();
        assert!(contract_invariant(&h, &lens(4, 1), cfg()).unwrap().k.is_zero());
        assert!(!contract_invariant(&h, &lens(4, 2), cfg()).unwrap().k.is_zero());
    }

    #[test]
    fn grading_mismatch_is_an_error() {
        let h = build_kac_paljutkin();
        assert!(matches!(contract_invariant(&h, &lens(3, 1), cfg()), Err(InvariantError::Grading(_))));
    }

    #[test]
    fn cap_names_the_step() {
        let h = build_kac_paljutkin();
        let err = contract_invariant(&h, &lens(4, 0), ContractionConfig { entry_cap: 10 }).unwrap_err();
        match err {
            InvariantError::CapExceeded { step, .. } => assert_eq!(step, "crossing 1 (step 2 of 4)"),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn planner_examples() {
        for p in 1..8 {
            assert_eq!(plan_contraction_order(&lens_diagram(p).unwrap()), (0..p).collect::<Vec<_>>());
        }
        let d = connected_sum(&lens_pq_diagram(5, 2).unwrap(), &lens_pq_diagram(3, 1).unwrap());
        let order = plan_contraction_order(&d);
        let first: BTreeSet<_> = order[..5].iter().copied().collect();
        assert_eq!(first, (0..5).collect());
    }
}
