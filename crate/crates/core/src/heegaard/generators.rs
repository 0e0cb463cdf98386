//! Standard diagrams and constructions on diagrams.

use thiserror::Error;

use crate::group::{GroupTable, Sign};

use super::{ColoredDiagram, Crossing, HeegaardDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("lens parameter p must be positive")]
    ZeroP,
    #[error("L({p},{q}) needs gcd(p, q) = 1")]
    NotCoprime { p: usize, q: usize },
}

/// Genus-1 diagram of `L(p,1)`: `p` positive crossings met in the same order
/// by both circles. `p = 1` is the standard diagram of `S³`.
pub fn lens_diagram(p: usize) -> Result<HeegaardDiagram, GeneratorError> {
    lens_pq_diagram(p, 1)
}

/// Genus-1 diagram of `L(p,q)`: the lower circle meets crossings `0..p` in
/// order, the upper circle meets crossing `k` at position `qk mod p`.
pub fn lens_pq_diagram(p: usize, q: usize) -> Result<HeegaardDiagram, GeneratorError> {
    if p == 0 {
        return Err(GeneratorError::ZeroP);
    }
    if num_integer::gcd(p, q) != 1 {
        return Err(GeneratorError::NotCoprime { p, q });
    }
    let crossings = (0..p).map(|id| Crossing { id, upper: 0, lower: 0, sign: Sign::Plus }).collect();
    let mut upper: Vec<usize> = (0..p).collect();
    upper.sort_by_key(|&k| (q * k) % p);
    Ok(HeegaardDiagram { genus: 1, crossings, upper_orders: vec![upper], lower_orders: vec![(0..p).collect()] })
}

/// Genus-1 diagram with disjoint circles: `S¹ × S²`.
pub fn s1_x_s2_diagram() -> HeegaardDiagram {
    HeegaardDiagram { genus: 1, crossings: Vec::new(), upper_orders: vec![Vec::new()], lower_orders: vec![Vec::new()] }
}

/// Disjoint union; ids of `d2` shift by `d1.next_id()`, circles by `d1.genus`.
pub fn connected_sum(d1: &HeegaardDiagram, d2: &HeegaardDiagram) -> HeegaardDiagram {
    let shift = d1.next_id();
    let g1 = d1.genus;
    let mut out = d1.clone();
    out.genus += d2.genus;
    out.crossings.extend(d2.crossings.iter().map(|c| Crossing {
        id: c.id + shift,
        upper: c.upper + g1,
        lower: c.lower + g1,
        sign: c.sign,
    }));
    let moved = |orders: &[Vec<usize>]| orders.iter().map(|o| o.iter().map(|id| id + shift).collect()).collect::<Vec<_>>();
    out.upper_orders.extend(moved(&d2.upper_orders));
    out.lower_orders.extend(moved(&d2.lower_orders));
    out
}

/// [`connected_sum`] with colors concatenated.
pub fn connected_sum_colored(d1: &ColoredDiagram, d2: &ColoredDiagram) -> ColoredDiagram {
    let mut colors = d1.colors.clone();
    colors.extend(&d2.colors);
    ColoredDiagram::new(connected_sum(&d1.diagram, &d2.diagram), colors)
}

/// Orientation reversal of the surface: every sign flips and every color
/// inverts, so each word still evaluates to `1`.
pub fn mirror_diagram(d: &ColoredDiagram, pi: &GroupTable) -> ColoredDiagram {
    let mut out = d.clone();
    for c in &mut out.diagram.crossings {
        c.sign = c.sign.flip();
    }
    for a in &mut out.colors {
        *a = pi.inv(*a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Word;
    use crate::heegaard::validate_diagram;

    #[test]
    fn lens_examples() {
        assert_eq!(lens_diagram(0), Err(GeneratorError::ZeroP));
        let s3 = lens_diagram(1).unwrap();
        assert_eq!(s3.crossings.len(), 1);
        let d = lens_diagram(4).unwrap();
        assert_eq!(d.extract_words(), vec![Word::power(0, 4)]);
        assert_eq!(d.upper_orders, d.lower_orders);
        assert_eq!(lens_pq_diagram(5, 2).unwrap().upper_orders[0], vec![0, 3, 1, 4, 2]);
        assert!(lens_pq_diagram(4, 2).is_err());
    }

    #[test]
    fn connected_sum_words_and_colors() {
        let s3 = lens_diagram(1).unwrap();
        let d = connected_sum(&s3, &s3);
        assert_eq!(d.genus, 2);
        let words: Vec<String> = d.extract_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["x1", "x2"]);
        let d = connected_sum(&lens_diagram(2).unwrap(), &lens_diagram(3).unwrap());
        assert_eq!(d.extract_words(), vec![Word::power(0, 2), Word::power(1, 3)]);

        let z6 = GroupTable::cyclic(6).unwrap();
        let a = ColoredDiagram::new(lens_diagram(2).unwrap(), vec![3]);
        let b = ColoredDiagram::new(lens_diagram(3).unwrap(), vec![2]);
        let sum = connected_sum_colored(&a, &b);
        assert_eq!(sum.colors, vec![3, 2]);
        assert!(validate_diagram(&sum, &z6).passed());
    }

    #[test]
    fn mirror_properties() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let d = ColoredDiagram::new(lens_diagram(3).unwrap(), vec![3]);
        let m = mirror_diagram(&d, &s3);
        assert!(m.diagram.crossings.iter().all(|c| c.sign == Sign::Minus));
        assert_eq!(m.genus(), d.genus());
        assert_eq!(m.diagram.crossings.len(), d.diagram.crossings.len());
        assert_eq!(m.colors, vec![4]);
        let r = validate_diagram(&m, &s3);
        assert!(r.passed() && r.warnings.is_empty(), "{r}");
        assert_eq!(mirror_diagram(&m, &s3), d);
    }

    #[test]
    fn s1_x_s2_is_weak_but_valid() {
        let d = ColoredDiagram::new(s1_x_s2_diagram(), vec![1]);
        let r = validate_diagram(&d, &GroupTable::cyclic(2).unwrap());
        assert!(r.passed());
        assert_eq!(r.warnings.len(), 1);
    }
}
