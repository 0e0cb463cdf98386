//! π-colored Heegaard diagrams stored combinatorially: signed crossings,
//! the cyclic order of crossings along every circle, and one color per upper
//! circle.
//!
//! A crossing `c` between upper circle `u_k` and lower circle `l_i` has sign
//! `+1` when the pair (tangent of `l_i`, tangent of `u_k`) is positively
//! oriented. Reading `l_i` along its order gives the word `w_i` with one
//! letter `x_k^ν` per crossing.

mod generators;
mod moves;
mod surface;

pub use generators::{
    connected_sum, connected_sum_colored, lens_diagram, lens_pq_diagram, mirror_diagram, s1_x_s2_diagram, GeneratorError,
};
pub use moves::{apply_move, CircleRef, Family, Move, MoveError, Side};
pub use surface::{faces, surface_certificate, CertificateStatus, Dart, HalfEdge, SurfaceCertificate};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::group::{evaluate_word, Elem, GroupTable, Letter, Sign, Word};
use crate::report::Report;

pub type CrossingId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub id: CrossingId,
    pub upper: usize,
    pub lower: usize,
    pub sign: Sign,
}

/// An uncolored diagram of genus `g`: `g` upper and `g` lower circles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeegaardDiagram {
    pub genus: usize,
    pub crossings: Vec<Crossing>,
    pub upper_orders: Vec<Vec<CrossingId>>,
    pub lower_orders: Vec<Vec<CrossingId>>,
}

/// A diagram with colors `α_k ∈ π` on its upper circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDiagram {
    pub diagram: HeegaardDiagram,
    pub colors: Vec<Elem>,
}

impl ColoredDiagram {
    pub fn new(diagram: HeegaardDiagram, colors: Vec<Elem>) -> Self {
        ColoredDiagram { diagram, colors }
    }

    pub fn genus(&self) -> usize {
        self.diagram.genus
    }
}

impl HeegaardDiagram {
    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.id == id)
    }

    pub fn crossing_map(&self) -> BTreeMap<CrossingId, Crossing> {
        self.crossings.iter().map(|c| (c.id, *c)).collect()
    }

    pub fn crossing_ids(&self) -> Vec<CrossingId> {
        let mut ids: Vec<CrossingId> = self.crossings.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids
    }

    pub fn next_id(&self) -> CrossingId {
        self.crossings.iter().map(|c| c.id + 1).max().unwrap_or(0)
    }

    pub fn order(&self, circle: CircleRef) -> &[CrossingId] {
        match circle {
            CircleRef::Upper(k) => &self.upper_orders[k],
            CircleRef::Lower(i) => &self.lower_orders[i],
        }
    }

    /// Bookkeeping only: circle counts, index ranges, and that every crossing
    /// appears exactly once in the order of its own upper and lower circle.
    pub fn check_structure(&self) -> Report {
        let mut r = Report::new("diagram structure");
        let g = self.genus;
        r.check(g >= 1, "genus", || "genus must be positive".into());
        r.check(self.upper_orders.len() == g, "circle count", || {
            format!("{} upper circles for genus {g}", self.upper_orders.len())
        });
        r.check(self.lower_orders.len() == g, "circle count", || {
            format!("{} lower circles for genus {g}", self.lower_orders.len())
        });
        let mut ids = BTreeSet::new();
        for c in &self.crossings {
            r.check(ids.insert(c.id), "unique ids", || format!("crossing id {} repeated", c.id));
            r.check(c.upper < g && c.lower < g, "circle index", || {
                format!("crossing {} on u{} / l{} with genus {g}", c.id, c.upper, c.lower)
            });
        }
        if !r.passed() {
            return r;
        }
        let map = self.crossing_map();
        for (family, orders) in [("upper", &self.upper_orders), ("lower", &self.lower_orders)] {
            let mut seen: BTreeMap<CrossingId, usize> = BTreeMap::new();
            for (k, order) in orders.iter().enumerate() {
                for &id in order {
                    *seen.entry(id).or_default() += 1;
                    match map.get(&id) {
                        None => r.fail("known ids", format!("{family} order {k} lists unknown crossing {id}")),
                        Some(c) => {
                            let home = if family == "upper" { c.upper } else { c.lower };
                            r.check(home == k, "order placement", || {
                                format!("crossing {id} listed on {family} circle {k}, belongs to {home}")
                            });
                        }
                    }
                }
            }
            for id in map.keys() {
                let n = seen.get(id).copied().unwrap_or(0);
                r.check(n == 1, "listed once", || format!("crossing {id} appears {n} times in {family} orders"));
            }
        }
        r
    }

    /// `w_i` per lower circle, starting at the stored head of its order.
    pub fn extract_words(&self) -> Vec<Word> {
        let map = self.crossing_map();
        self.lower_orders
            .iter()
            .map(|order| Word::new(order.iter().map(|id| Letter::new(map[id].upper, map[id].sign)).collect()))
            .collect()
    }

    /// Crossing ids grouped by connected component of the union of all
    /// circles; each group ascending, groups ordered by their smallest id.
    pub fn components(&self) -> Vec<Vec<CrossingId>> {
        let ids = self.crossing_ids();
        let pos: BTreeMap<CrossingId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for order in self.upper_orders.iter().chain(&self.lower_orders) {
            for w in order.windows(2) {
                let (a, b) = (find(&mut parent, pos[&w[0]]), find(&mut parent, pos[&w[1]]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<CrossingId>> = BTreeMap::new();
        for (i, &id) in ids.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(id);
        }
        groups.into_values().collect()
    }
}

/// Full validation: structure, color range, the color condition
/// `w_i(α) = 1`, and the surface certificate.
///
/// A weak certificate becomes a warning; a certificate that exceeds the genus
/// is a violation.
pub fn validate_diagram(d: &ColoredDiagram, pi: &GroupTable) -> Report {
    let mut r = Report::new("colored diagram");
    let structure = d.diagram.check_structure();
    let structural_ok = structure.passed();
    r.absorb(structure);
    if !structural_ok {
        return r;
    }
    let g = d.genus();
    r.check(d.colors.len() == g, "color count", || format!("{} colors for genus {g}", d.colors.len()));
    if let Some(&bad) = d.colors.iter().find(|&&a| a >= pi.order()) {
        r.fail("color range", format!("color index {bad} outside a group of order {}", pi.order()));
    }
    if !r.passed() {
        return r;
    }
    for (i, w) in d.diagram.extract_words().iter().enumerate() {
        let v = evaluate_word(w, &d.colors, pi).expect("colors cover all generators");
        r.check(v == pi.identity(), "color condition", || {
            format!("w{} = {w} evaluates to {} ≠ {}", i + 1, pi.name(v), pi.name(pi.identity()))
        });
    }
    let cert = surface_certificate(&d.diagram);
    match cert.status {
        CertificateStatus::Certified => {}
        CertificateStatus::Weak => r.warn(format!("surface certificate is weak: {cert}")),
        CertificateStatus::Violation => r.fail("surface certificate", cert.to_string()),
    }
    r
}

/// All `α ∈ π^g` with `w_i(α) = 1` for every lower circle, in lexicographic order.
pub fn enumerate_colorings(d: &HeegaardDiagram, pi: &GroupTable) -> Vec<Vec<Elem>> {
    let words = d.extract_words();
    let g = d.genus;
    let n = pi.order();
    let mut out = Vec::new();
    let mut alpha = vec![0; g];
    loop {
        if words.iter().all(|w| evaluate_word(w, &alpha, pi).expect("in range") == pi.identity()) {
            out.push(alpha.clone());
        }
        let mut k = g;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            alpha[k] += 1;
            if alpha[k] < n {
                break;
            }
            alpha[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> GroupTable {
        GroupTable::cyclic(2).unwrap()
    }

    #[test]
    fn lens_validation() {
        let ok = ColoredDiagram::new(lens_diagram(2).unwrap(), vec![1]);
        let r = validate_diagram(&ok, &z2());
        assert!(r.passed() && r.warnings.is_empty(), "{r}");
        let bad = ColoredDiagram::new(lens_diagram(3).unwrap(), vec![1]);
        let r = validate_diagram(&bad, &z2());
        assert!(r.violations.iter().any(|v| v.check == "color condition"), "{r}");
    }

    #[test]
    fn crossing_listed_twice_fails() {
        let mut d = connected_sum(&lens_diagram(1).unwrap(), &lens_diagram(1).unwrap());
        let first = d.upper_orders[0][0];
        d.upper_orders[1].push(first);
        let r = d.check_structure();
        assert!(!r.passed());
    }

    #[test]
    fn words() {
        for p in 1..6 {
            assert_eq!(lens_diagram(p).unwrap().extract_words(), vec![Word::power(0, p as i64)]);
        }
        let s3_diagram = lens_diagram(1).unwrap();
        assert_eq!(s3_diagram.extract_words()[0].to_string(), "x1");
    }

    #[test]
    fn colorings() {
        let pi = z2();
        assert_eq!(enumerate_colorings(&lens_diagram(2).unwrap(), &pi), vec![vec![0], vec![1]]);
        assert_eq!(enumerate_colorings(&lens_diagram(3).unwrap(), &pi), vec![vec![0]]);
        let s3 = GroupTable::symmetric(3).unwrap();
        assert_eq!(enumerate_colorings(&lens_diagram(1).unwrap(), &s3), vec![vec![0]]);
        // RP3 over S3: identity plus the three involutions.
        assert_eq!(enumerate_colorings(&lens_diagram(2).unwrap(), &s3).len(), 4);
    }

    #[test]
    fn components_of_connected_sum() {
        let d = connected_sum(&lens_diagram(2).unwrap(), &lens_diagram(3).unwrap());
        assert_eq!(d.components(), vec![vec![0, 1], vec![2, 3, 4]]);
    }
}
