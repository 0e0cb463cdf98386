//! The rotation system induced by crossing signs, its faces, and the Euler
//! characteristic certificate for embeddability on a genus-`g` surface.
//!
//! Every crossing is a 4-valent vertex with half-edges `UOut, UIn, LOut, LIn`
//! (leaving / arriving along the upper / lower circle). Arc `s` of a circle
//! with order `o` runs from `o[s]` to `o[s+1]`. The counter-clockwise rotation
//! at a crossing is `[LOut, UOut, LIn, UIn]` for sign `+1` and
//! `[LOut, UIn, LIn, UOut]` for sign `-1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::group::Sign;

use super::{CircleRef, CrossingId, HeegaardDiagram, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HalfEdge {
    UOut,
    UIn,
    LOut,
    LIn,
}

const ALL_HALF_EDGES: [HalfEdge; 4] = [HalfEdge::UOut, HalfEdge::UIn, HalfEdge::LOut, HalfEdge::LIn];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dart {
    pub crossing: CrossingId,
    pub half: HalfEdge,
}

fn rotation(sign: Sign) -> [HalfEdge; 4] {
    use HalfEdge::*;
    match sign {
        Sign::Plus => [LOut, UOut, LIn, UIn],
        Sign::Minus => [LOut, UIn, LIn, UOut],
    }
}

struct Neighbours {
    sign: HashMap<CrossingId, Sign>,
    /// (next, prev) along the upper and lower circle of each crossing.
    upper: HashMap<CrossingId, (CrossingId, CrossingId)>,
    lower: HashMap<CrossingId, (CrossingId, CrossingId)>,
}

fn cyclic_neighbours(orders: &[Vec<CrossingId>]) -> HashMap<CrossingId, (CrossingId, CrossingId)> {
    let mut out = HashMap::new();
    for o in orders {
        let n = o.len();
        for s in 0..n {
            out.insert(o[s], (o[(s + 1) % n], o[(s + n - 1) % n]));
        }
    }
    out
}

impl Neighbours {
    fn new(d: &HeegaardDiagram) -> Self {
        Neighbours {
            sign: d.crossings.iter().map(|c| (c.id, c.sign)).collect(),
            upper: cyclic_neighbours(&d.upper_orders),
            lower: cyclic_neighbours(&d.lower_orders),
        }
    }

    /// The other end of the arc carrying `h`.
    fn opposite(&self, h: Dart) -> Dart {
        use HalfEdge::*;
        let c = h.crossing;
        match h.half {
            UOut => Dart { crossing: self.upper[&c].0, half: UIn },
            UIn => Dart { crossing: self.upper[&c].1, half: UOut },
            LOut => Dart { crossing: self.lower[&c].0, half: LIn },
            LIn => Dart { crossing: self.lower[&c].1, half: LOut },
        }
    }

    /// Face successor: the half-edge clockwise-next to the far end, which keeps
    /// the face on the left of the traversal.
    fn next(&self, h: Dart) -> Dart {
        let o = self.opposite(h);
        let rot = rotation(self.sign[&o.crossing]);
        let k = rot.iter().position(|&x| x == o.half).expect("half-edge in rotation");
        Dart { crossing: o.crossing, half: rot[(k + 3) % 4] }
    }
}

/// Face boundaries of the rotation system, each a cyclic list of darts.
///
/// Deterministic: faces are discovered from darts in (crossing id, half-edge) order.
pub fn faces(d: &HeegaardDiagram) -> Vec<Vec<Dart>> {
    let nb = Neighbours::new(d);
    let mut seen: HashMap<Dart, ()> = HashMap::new();
    let mut out = Vec::new();
    for id in d.crossing_ids() {
        for half in ALL_HALF_EDGES {
            let start = Dart { crossing: id, half };
            if seen.contains_key(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            loop {
                seen.insert(h, ());
                face.push(h);
                h = nb.next(h);
                if h == start {
                    break;
                }
            }
            out.push(face);
        }
    }
    out
}

/// Face index of every dart.
pub(crate) fn face_index(faces: &[Vec<Dart>]) -> HashMap<Dart, usize> {
    let mut m = HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for &h in face {
            m.insert(h, f);
        }
    }
    m
}

/// The dart whose face lies on the given side of arc `s` of a circle.
pub(crate) fn arc_dart(d: &HeegaardDiagram, circle: CircleRef, s: usize, side: Side) -> Dart {
    let o = d.order(circle);
    let n = o.len();
    let (out, inn) = match circle {
        CircleRef::Upper(_) => (HalfEdge::UOut, HalfEdge::UIn),
        CircleRef::Lower(_) => (HalfEdge::LOut, HalfEdge::LIn),
    };
    match side {
        Side::Left => Dart { crossing: o[s], half: out },
        Side::Right => Dart { crossing: o[(s + 1) % n], half: inn },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateStatus {
    /// The component genera sum to `g` and no circle is empty.
    Certified,
    /// Genus sum below `g`, or an empty circle: accepted with a warning.
    Weak,
    /// Genus sum above `g`: the diagram cannot live on the stated surface.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceCertificate {
    pub status: CertificateStatus,
    pub faces: usize,
    pub component_genera: Vec<usize>,
    pub empty_circles: usize,
    pub genus: usize,
}

impl fmt::Display for SurfaceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum: usize = self.component_genera.iter().sum();
        write!(
            f,
            "{:?}: {} faces, component genera {:?} (sum {sum}) for genus {}, {} empty circles",
            self.status, self.faces, self.component_genera, self.genus, self.empty_circles
        )
    }
}

/// Per connected component, `V - E + F = 2 - 2g_c` with `E = 2V`.
pub fn surface_certificate(d: &HeegaardDiagram) -> SurfaceCertificate {
    let all_faces = faces(d);
    let comps = d.components();
    let comp_of: HashMap<CrossingId, usize> =
        comps.iter().enumerate().flat_map(|(k, ids)| ids.iter().map(move |&id| (id, k))).collect();
    let mut face_count: BTreeMap<usize, i64> = BTreeMap::new();
    for face in &all_faces {
        *face_count.entry(comp_of[&face[0].crossing]).or_default() += 1;
    }
    let mut genera = Vec::new();
    let mut odd = false;
    for (k, ids) in comps.iter().enumerate() {
        let v = ids.len() as i64;
        let f = face_count.get(&k).copied().unwrap_or(0);
        let twice = 2 + v - f;
        odd |= twice % 2 != 0 || twice < 0;
        genera.push((twice.max(0) / 2) as usize);
    }
    let empty = d.upper_orders.iter().chain(&d.lower_orders).filter(|o| o.is_empty()).count();
    let sum: usize = genera.iter().sum();
    let status = if sum > d.genus || odd {
        CertificateStatus::Violation
    } else if sum < d.genus || empty > 0 {
        CertificateStatus::Weak
    } else {
        CertificateStatus::Certified
    };
    SurfaceCertificate { status, faces: all_faces.len(), component_genera: genera, empty_circles: empty, genus: d.genus }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heegaard::{connected_sum, lens_diagram, lens_pq_diagram, Crossing};

    #[test]
    fn single_crossing_torus_has_one_face() {
        let d = lens_diagram(1).unwrap();
        let f = faces(&d);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].len(), 4);
        let cert = surface_certificate(&d);
        assert_eq!(cert.status, CertificateStatus::Certified);
        assert_eq!(cert.component_genera, vec![1]);
    }

    #[test]
    fn lens_family_is_certified() {
        for p in 1..=9 {
            for q in 1..p.max(2) {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let d = lens_pq_diagram(p, q).unwrap();
                let cert = surface_certificate(&d);
                assert_eq!(cert.status, CertificateStatus::Certified, "L({p},{q}): {cert}");
                // p crossings on a torus: V = p, E = 2p, so p faces.
                assert_eq!(cert.faces, p);
            }
        }
    }

    #[test]
    fn connected_sum_adds_genera() {
        let d = connected_sum(&lens_diagram(2).unwrap(), &lens_pq_diagram(5, 2).unwrap());
        let cert = surface_certificate(&d);
        assert_eq!(cert.component_genera, vec![1, 1]);
        assert_eq!(cert.status, CertificateStatus::Certified);
    }

    #[test]
    fn inconsistent_rotation_is_flagged() {
        // Two crossings of opposite sign met in the same order on both circles
        // cannot be drawn on a torus.
        let d = HeegaardDiagram {
            genus: 1,
            crossings: vec![
                Crossing { id: 0, upper: 0, lower: 0, sign: Sign::Plus },
                Crossing { id: 1, upper: 0, lower: 0, sign: Sign::Minus },
            ],
            upper_orders: vec![vec![0, 1]],
            lower_orders: vec![vec![0, 1]],
        };
        let cert = surface_certificate(&d);
        assert_ne!(cert.status, CertificateStatus::Certified, "{cert}");
    }

    #[test]
    fn empty_circle_is_weak() {
        let mut d = connected_sum(&lens_diagram(1).unwrap(), &lens_diagram(1).unwrap());
        d.crossings.retain(|c| c.id != 1);
        d.upper_orders[1].clear();
        d.lower_orders[1].clear();
        let cert = surface_certificate(&d);
        assert_eq!(cert.status, CertificateStatus::Weak);
    }
}
