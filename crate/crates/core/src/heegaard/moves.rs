//! Moves I–V on colored diagrams.
//!
//! Positions refer to arcs: arc `s` of a circle with order `o` runs from `o[s]`
//! to `o[s+1]` (cyclically), and [`Side`] names the face on the left or right
//! of that arc with respect to the circle's orientation. Band and finger moves
//! need their two arcs to border a common face, or to lie in different
//! connected components (the connecting tube of a connected sum may sit in any
//! face of each).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{GroupTable, Sign};

use super::surface::{arc_dart, face_index, faces, Dart};
use super::{surface_certificate, CertificateStatus, ColoredDiagram, Crossing, CrossingId, HeegaardDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CircleRef {
    Upper(usize),
    Lower(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Upper,
    Lower,
}

impl Family {
    fn circle(self, k: usize) -> CircleRef {
        match self {
            Family::Upper => CircleRef::Upper(k),
            Family::Lower => CircleRef::Lower(k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    /// Type I. Old upper circle `k` becomes `upper_perm[k]` with its order
    /// rotated left by `upper_shift[k]`; likewise for lower circles. Crossing
    /// ids are renamed by `id_map`, which must list every id once.
    Relabel {
        upper_perm: Vec<usize>,
        lower_perm: Vec<usize>,
        upper_shift: Vec<usize>,
        lower_shift: Vec<usize>,
        id_map: Vec<(CrossingId, CrossingId)>,
    },
    /// Type II.
    ReverseCircle { circle: CircleRef },
    /// Type III: push arc `upper_arc` of `u_upper` across the face on its
    /// `upper_side` until it crosses arc `lower_arc` of `l_lower` twice.
    TwoPointInsert { upper: usize, upper_arc: usize, upper_side: Side, lower: usize, lower_arc: usize, lower_side: Side },
    /// Type III inverse: remove the bigon cut out by `o[position]` and `o[position+1]` on `l_lower`.
    TwoPointRemove { lower: usize, position: usize },
    /// Type IV: a new handle whose circles meet once with the given sign.
    Stabilize { sign: Sign },
    /// Type IV inverse: `u_upper` and `l_lower` must meet exactly once and nothing else.
    Destabilize { upper: usize, lower: usize },
    /// Type V: slide circle `target` over circle `source` of the same family
    /// along a band from arc `target_arc` to arc `source_arc`.
    Slide { family: Family, target: usize, target_arc: usize, target_side: Side, source: usize, source_arc: usize, source_side: Side },
}

impl Move {
    pub fn type_name(&self) -> &'static str {
        match self {
            Move::Relabel { .. } => "I",
            Move::ReverseCircle { .. } => "II",
            Move::TwoPointInsert { .. } | Move::TwoPointRemove { .. } => "III",
            Move::Stabilize { .. } | Move::Destabilize { .. } => "IV",
            Move::Slide { .. } => "V",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("invalid relabeling: {0}")]
    Relabel(String),
    #[error("{0:?} has no crossings")]
    EmptyCircle(CircleRef),
    #[error("a circle cannot slide over itself")]
    SameCircle,
    #[error("the two arcs do not border a common face")]
    NoCommonFace,
    #[error("no cancelling pair at lower circle {lower}, position {position}: {reason}")]
    NoCancellingPair { lower: usize, position: usize, reason: String },
    #[error("handle not in standard position: {0}")]
    NotStandardHandle(String),
    #[error("the move would leave a diagram whose surface certificate is {0}")]
    Certificate(String),
}

/// Applies one move; the input is never modified.
///
/// A move on a certified diagram must produce a certified diagram; otherwise
/// [`MoveError::Certificate`] is returned.
pub fn apply_move(d: &ColoredDiagram, m: &Move, pi: &GroupTable) -> Result<ColoredDiagram, MoveError> {
    let before = surface_certificate(&d.diagram).status;
    let out = match m {
        Move::Relabel { upper_perm, lower_perm, upper_shift, lower_shift, id_map } => {
            relabel(d, upper_perm, lower_perm, upper_shift, lower_shift, id_map)?
        }
        Move::ReverseCircle { circle } => {
            check_circle(&d.diagram, *circle)?;
            let mut out = d.clone();
            reverse_circle(&mut out, *circle, pi);
            out
        }
        &Move::TwoPointInsert { upper, upper_arc, upper_side, lower, lower_arc, lower_side } => {
            two_point_insert(d, upper, upper_arc, upper_side, lower, lower_arc, lower_side)?
        }
        &Move::TwoPointRemove { lower, position } => two_point_remove(d, lower, position)?,
        &Move::Stabilize { sign } => stabilize(d, sign, pi),
        &Move::Destabilize { upper, lower } => destabilize(d, upper, lower)?,
        &Move::Slide { family, target, target_arc, target_side, source, source_arc, source_side } => {
            slide(d, family, (target, target_arc, target_side), (source, source_arc, source_side), pi)?
        }
    };
    if before == CertificateStatus::Certified {
        let cert = surface_certificate(&out.diagram);
        if cert.status != CertificateStatus::Certified {
            return Err(MoveError::Certificate(cert.to_string()));
        }
    }
    Ok(out)
}

fn check_circle(d: &HeegaardDiagram, c: CircleRef) -> Result<(), MoveError> {
    let k = match c {
        CircleRef::Upper(k) | CircleRef::Lower(k) => k,
    };
    if k >= d.genus {
        return Err(MoveError::OutOfRange(format!("{c:?} in genus {}", d.genus)));
    }
    Ok(())
}

fn check_arc(d: &HeegaardDiagram, c: CircleRef, arc: usize) -> Result<(), MoveError> {
    check_circle(d, c)?;
    let n = d.order(c).len();
    if n == 0 {
        return Err(MoveError::EmptyCircle(c));
    }
    if arc >= n {
        return Err(MoveError::OutOfRange(format!("arc {arc} of {c:?} with {n} crossings")));
    }
    Ok(())
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    p.len() == n && p.iter().copied().collect::<BTreeSet<_>>() == (0..n).collect()
}

fn relabel(
    d: &ColoredDiagram,
    upper_perm: &[usize],
    lower_perm: &[usize],
    upper_shift: &[usize],
    lower_shift: &[usize],
    id_map: &[(CrossingId, CrossingId)],
) -> Result<ColoredDiagram, MoveError> {
    let g = d.genus();
    for (name, p) in [("upper_perm", upper_perm), ("lower_perm", lower_perm)] {
        if !is_permutation(p, g) {
            return Err(MoveError::Relabel(format!("{name} {p:?} is not a permutation of 0..{g}")));
        }
    }
    if upper_shift.len() != g || lower_shift.len() != g {
        return Err(MoveError::Relabel(format!("shift vectors must have length {g}")));
    }
    let map: HashMap<CrossingId, CrossingId> = id_map.iter().copied().collect();
    let old: BTreeSet<CrossingId> = d.diagram.crossing_ids().into_iter().collect();
    let sources: BTreeSet<CrossingId> = id_map.iter().map(|p| p.0).collect();
    let targets: BTreeSet<CrossingId> = id_map.iter().map(|p| p.1).collect();
    if sources != old || targets.len() != old.len() || map.len() != old.len() {
        return Err(MoveError::Relabel("id_map must be a bijection on the crossing ids".into()));
    }
    let mut crossings: Vec<Crossing> = d
        .diagram
        .crossings
        .iter()
        .map(|c| Crossing { id: map[&c.id], upper: upper_perm[c.upper], lower: lower_perm[c.lower], sign: c.sign })
        .collect();
    crossings.sort_by_key(|c| c.id);
    let remap = |orders: &[Vec<CrossingId>], perm: &[usize], shift: &[usize]| {
        let mut out = vec![Vec::new(); g];
        for (k, o) in orders.iter().enumerate() {
            let mut o: Vec<CrossingId> = o.iter().map(|id| map[id]).collect();
            if !o.is_empty() {
                let r = shift[k] % o.len();
                o.rotate_left(r);
            }
            out[perm[k]] = o;
        }
        out
    };
    let mut colors = vec![0; g];
    for (k, &a) in d.colors.iter().enumerate() {
        colors[upper_perm[k]] = a;
    }
    Ok(ColoredDiagram::new(
        HeegaardDiagram {
            genus: g,
            crossings,
            upper_orders: remap(&d.diagram.upper_orders, upper_perm, upper_shift),
            lower_orders: remap(&d.diagram.lower_orders, lower_perm, lower_shift),
        },
        colors,
    ))
}

/// Type II in place: reverse the order, flip the signs on the circle, and
/// invert the color of an upper circle.
fn reverse_circle(d: &mut ColoredDiagram, c: CircleRef, pi: &GroupTable) {
    let order = match c {
        CircleRef::Upper(k) => &mut d.diagram.upper_orders[k],
        CircleRef::Lower(i) => &mut d.diagram.lower_orders[i],
    };
    order.reverse();
    let on: BTreeSet<CrossingId> = order.iter().copied().collect();
    for x in &mut d.diagram.crossings {
        if on.contains(&x.id) {
            x.sign = x.sign.flip();
        }
    }
    if let CircleRef::Upper(k) = c {
        d.colors[k] = pi.inv(d.colors[k]);
    }
}

/// Reverses `c` if needed so the requested face lies on its left; returns the
/// arc index in the possibly reversed order.
fn normalize_left(d: &mut ColoredDiagram, c: CircleRef, arc: usize, side: Side, pi: &GroupTable) -> usize {
    match side {
        Side::Left => arc,
        Side::Right => {
            let n = d.diagram.order(c).len();
            reverse_circle(d, c, pi);
            (2 * n - 2 - arc) % n
        }
    }
}

/// Whether a band or finger may join the faces of two darts.
fn same_region(d: &HeegaardDiagram, a: Dart, b: Dart) -> bool {
    let fs = faces(d);
    let idx = face_index(&fs);
    if idx[&a] == idx[&b] {
        return true;
    }
    let comps = d.components();
    let comp = |x: CrossingId| comps.iter().position(|c| c.binary_search(&x).is_ok());
    comp(a.crossing) != comp(b.crossing)
}

fn two_point_insert(
    d: &ColoredDiagram,
    upper: usize,
    upper_arc: usize,
    upper_side: Side,
    lower: usize,
    lower_arc: usize,
    lower_side: Side,
) -> Result<ColoredDiagram, MoveError> {
    let (uc, lc) = (CircleRef::Upper(upper), CircleRef::Lower(lower));
    check_arc(&d.diagram, uc, upper_arc)?;
    check_arc(&d.diagram, lc, lower_arc)?;
    let du = arc_dart(&d.diagram, uc, upper_arc, upper_side);
    let dl = arc_dart(&d.diagram, lc, lower_arc, lower_side);
    if !same_region(&d.diagram, du, dl) {
        return Err(MoveError::NoCommonFace);
    }
    let mut out = d.clone();
    let dg = &mut out.diagram;
    let a = dg.next_id();
    let b = a + 1;
    let sa = if upper_side == Side::Left { Sign::Plus } else { Sign::Minus };
    dg.crossings.push(Crossing { id: a, upper, lower, sign: sa });
    dg.crossings.push(Crossing { id: b, upper, lower, sign: sa.flip() });
    dg.lower_orders[lower].splice(lower_arc + 1..lower_arc + 1, [a, b]);
    let pair = if lower_side == upper_side { [b, a] } else { [a, b] };
    dg.upper_orders[upper].splice(upper_arc + 1..upper_arc + 1, pair);
    Ok(out)
}

fn two_point_remove(d: &ColoredDiagram, lower: usize, position: usize) -> Result<ColoredDiagram, MoveError> {
    let lc = CircleRef::Lower(lower);
    check_arc(&d.diagram, lc, position)?;
    let fail = |reason: &str| MoveError::NoCancellingPair { lower, position, reason: reason.into() };
    let lo = &d.diagram.lower_orders[lower];
    let n = lo.len();
    if n < 2 {
        return Err(fail("fewer than two crossings"));
    }
    let (x, y) = (lo[position], lo[(position + 1) % n]);
    let map = d.diagram.crossing_map();
    let (cx, cy) = (map[&x], map[&y]);
    if cx.upper != cy.upper {
        return Err(fail("the crossings lie on different upper circles"));
    }
    if cx.sign == cy.sign {
        return Err(fail("the crossings have equal signs"));
    }
    let uo = &d.diagram.upper_orders[cx.upper];
    let m = uo.len();
    let px = uo.iter().position(|&c| c == x).expect("listed");
    if uo[(px + 1) % m] != y && uo[(px + m - 1) % m] != y {
        return Err(fail("the crossings are not adjacent on their upper circle"));
    }
    let fs = faces(&d.diagram);
    let bigon = |h: Dart| {
        let f = fs.iter().find(|f| f.contains(&h)).expect("every dart lies on a face");
        f.len() == 2 && f.iter().any(|h| h.crossing == x) && f.iter().any(|h| h.crossing == y)
    };
    if !bigon(arc_dart(&d.diagram, lc, position, Side::Left)) && !bigon(arc_dart(&d.diagram, lc, position, Side::Right)) {
        return Err(fail("the arcs between them do not bound a bigon"));
    }
    if n == 2 || m == 2 {
        return Err(fail("removal would leave an empty circle"));
    }
    let mut out = d.clone();
    let dg = &mut out.diagram;
    dg.crossings.retain(|c| c.id != x && c.id != y);
    dg.lower_orders[lower].retain(|&c| c != x && c != y);
    dg.upper_orders[cx.upper].retain(|&c| c != x && c != y);
    Ok(out)
}

fn stabilize(d: &ColoredDiagram, sign: Sign, pi: &GroupTable) -> ColoredDiagram {
    let mut out = d.clone();
    let dg = &mut out.diagram;
    let id = dg.next_id();
    let g = dg.genus;
    dg.genus += 1;
    dg.crossings.push(Crossing { id, upper: g, lower: g, sign });
    dg.upper_orders.push(vec![id]);
    dg.lower_orders.push(vec![id]);
    out.colors.push(pi.identity());
    out
}

fn destabilize(d: &ColoredDiagram, upper: usize, lower: usize) -> Result<ColoredDiagram, MoveError> {
    let dg = &d.diagram;
    check_circle(dg, CircleRef::Upper(upper))?;
    check_circle(dg, CircleRef::Lower(lower))?;
    if dg.genus < 2 {
        return Err(MoveError::NotStandardHandle("genus must be at least 2".into()));
    }
    let (uo, lo) = (&dg.upper_orders[upper], &dg.lower_orders[lower]);
    if uo.len() != 1 || uo != lo {
        return Err(MoveError::NotStandardHandle(format!("u{upper} meets {uo:?}, l{lower} meets {lo:?}")));
    }
    let c = uo[0];
    let shift = |k: usize, gone: usize| if k > gone { k - 1 } else { k };
    let mut upper_orders = dg.upper_orders.clone();
    upper_orders.remove(upper);
    let mut lower_orders = dg.lower_orders.clone();
    lower_orders.remove(lower);
    let crossings = dg
        .crossings
        .iter()
        .filter(|x| x.id != c)
        .map(|x| Crossing { upper: shift(x.upper, upper), lower: shift(x.lower, lower), ..*x })
        .collect();
    let mut colors = d.colors.clone();
    colors.remove(upper);
    Ok(ColoredDiagram::new(HeegaardDiagram { genus: dg.genus - 1, crossings, upper_orders, lower_orders }, colors))
}

fn slide(
    d: &ColoredDiagram,
    family: Family,
    (target, target_arc, target_side): (usize, usize, Side),
    (source, source_arc, source_side): (usize, usize, Side),
    pi: &GroupTable,
) -> Result<ColoredDiagram, MoveError> {
    let (tc, sc) = (family.circle(target), family.circle(source));
    check_arc(&d.diagram, tc, target_arc)?;
    check_arc(&d.diagram, sc, source_arc)?;
    if target == source {
        return Err(MoveError::SameCircle);
    }
    let mut out = d.clone();
    let s = normalize_left(&mut out, tc, target_arc, target_side, pi);
    let t = normalize_left(&mut out, sc, source_arc, source_side, pi);
    let dt = arc_dart(&out.diagram, tc, s, Side::Left);
    let ds = arc_dart(&out.diagram, sc, t, Side::Left);
    if !same_region(&out.diagram, dt, ds) {
        return Err(MoveError::NoCommonFace);
    }

    let dg = &mut out.diagram;
    let src = dg.order(sc).to_vec();
    let n = src.len();
    let map: BTreeMap<CrossingId, Crossing> = dg.crossing_map();
    let mut next = dg.next_id();
    let mut twins = Vec::with_capacity(n);
    // The parallel copy of the source runs on its left, starting just past the band.
    for k in 1..=n {
        let c = map[&src[(t + k) % n]];
        let id = next;
        next += 1;
        twins.push(id);
        match family {
            Family::Upper => {
                dg.crossings.push(Crossing { id, upper: target, lower: c.lower, sign: c.sign });
                let lo = &mut dg.lower_orders[c.lower];
                let p = lo.iter().position(|&x| x == c.id).expect("listed");
                lo.insert(if c.sign == Sign::Plus { p } else { p + 1 }, id);
            }
            Family::Lower => {
                dg.crossings.push(Crossing { id, upper: c.upper, lower: target, sign: c.sign });
                let uo = &mut dg.upper_orders[c.upper];
                let p = uo.iter().position(|&x| x == c.id).expect("listed");
                uo.insert(if c.sign == Sign::Plus { p + 1 } else { p }, id);
            }
        }
    }
    let dest = match family {
        Family::Upper => &mut dg.upper_orders[target],
        Family::Lower => &mut dg.lower_orders[target],
    };
    dest.splice(s + 1..s + 1, twins);
    if family == Family::Upper {
        out.colors[source] = pi.mul(pi.inv(out.colors[target]), out.colors[source]);
    }
    Ok(out)
}
