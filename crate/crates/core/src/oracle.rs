//! Brute-force count of lifts `g: π₁(M) → G` with `φ∘g = f`.
//!
//! `K_{F(G)^φ}` of a diagram colored by `α` equals
//! `#{(g_1,…,g_g) ∈ G^g : w_i(g) = 1 for all i, φ(g_k) = α_k}`. This module
//! counts that set directly from the words, touching no tensor code.

use thiserror::Error;

use crate::group::{evaluate_word, Elem, GroupHom, Word};

pub const DEFAULT_TUPLE_BOUND: u128 = 100_000_000;

#[derive(Debug, Clone)]
pub struct LiftCountQuery {
    pub words: Vec<Word>,
    pub colors: Vec<Elem>,
    pub phi: GroupHom,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space of {tuples} tuples exceeds the bound {bound}")]
    SearchSpace { tuples: u128, bound: u128 },
    #[error("word mentions generator x{gen} but only {colors} colors are given")]
    Generator { gen: usize, colors: usize },
    #[error("color {0} is not an element of the target group")]
    Color(Elem),
}

/// [`count_lifts_bounded`] with the default bound of 10⁸ tuples.
pub fn count_lifts(q: &LiftCountQuery) -> Result<u64, OracleError> {
    count_lifts_bounded(q, DEFAULT_TUPLE_BOUND)
}

/// Enumerates `Π_k φ⁻¹(α_k)` and tests every word on each tuple.
pub fn count_lifts_bounded(q: &LiftCountQuery, bound: u128) -> Result<u64, OracleError> {
    let g = q.colors.len();
    if let Some(gen) = q.words.iter().filter_map(Word::max_generator).max().filter(|&m| m >= g) {
        return Err(OracleError::Generator { gen: gen + 1, colors: g });
    }
    if let Some(&a) = q.colors.iter().find(|&&a| a >= q.phi.target.order()) {
        return Err(OracleError::Color(a));
    }
    let fibers: Vec<Vec<Elem>> = q.colors.iter().map(|&a| q.phi.fiber(a)).collect();
    let tuples: u128 = fibers.iter().map(|f| f.len() as u128).product();
    if tuples > bound {
        return Err(OracleError::SearchSpace { tuples, bound });
    }
    if tuples == 0 {
        return Ok(0);
    }
    let source = &q.phi.source;
    let mut pos = vec![0usize; g];
    let mut tuple: Vec<Elem> = fibers.iter().map(|f| f[0]).collect();
    let mut count = 0u64;
    loop {
        if q.words.iter().all(|w| evaluate_word(w, &tuple, source).expect("generators checked") == source.identity()) {
            count += 1;
        }
        let mut k = g;
        loop {
            if k == 0 {
                return Ok(count);
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < fibers[k].len() {
                tuple[k] = fibers[k][pos[k]];
                break;
            }
            pos[k] = 0;
            tuple[k] = fibers[k][0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    fn query(words: Vec<Word>, colors: Vec<Elem>, phi: GroupHom) -> LiftCountQuery {
        LiftCountQuery { words, colors, phi }
    }

    #[test]
    fn rp3_over_sign() {
        let phi = GroupHom::sign(3).unwrap();
        assert_eq!(count_lifts(&query(vec![Word::power(0, 2)], vec![1], phi.clone())).unwrap(), 3);
        assert_eq!(count_lifts(&query(vec![Word::power(0, 2)], vec![0], phi)).unwrap(), 1);
    }

    #[test]
    fn s3_has_one_lift() {
        for phi in [GroupHom::sign(3).unwrap(), GroupHom::reduction(4, 2).unwrap(), GroupHom::to_trivial(GroupTable::cyclic(5).unwrap())] {
            let one = phi.target.identity();
            assert_eq!(count_lifts(&query(vec![Word::power(0, 1)], vec![one], phi)).unwrap(), 1);
        }
    }

    #[test]
    fn trivial_target_counts_homs() {
        // #Hom(Z/p, Z/n) = gcd(p, n).
        for n in 1..=5usize {
            for p in 1..=6usize {
                let phi = GroupHom::to_trivial(GroupTable::cyclic(n).unwrap());
                let got = count_lifts(&query(vec![Word::power(0, p as i64)], vec![0], phi)).unwrap();
                assert_eq!(got as usize, num_integer::gcd(n, p));
            }
        }
    }

    #[test]
    fn free_group_counts_fiber_product() {
        let phi = GroupHom::sign(3).unwrap();
        assert_eq!(count_lifts(&query(vec![], vec![1, 0], phi)).unwrap(), 9);
    }

    #[test]
    fn bound_and_generator_errors() {
        let phi = GroupHom::to_trivial(GroupTable::symmetric(4).unwrap());
        let q = query(vec![], vec![0; 7], phi.clone());
        assert!(matches!(count_lifts_bounded(&q, 1000), Err(OracleError::SearchSpace { .. })));
        let q = query(vec![Word::power(2, 1)], vec![0], phi);
        assert_eq!(count_lifts(&q), Err(OracleError::Generator { gen: 3, colors: 1 }));
    }
}
