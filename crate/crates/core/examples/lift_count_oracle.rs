//! For a function algebra F(G)^φ, K counts lifts of the coloring through φ.
//! Both sides are computed independently here.

use hopfk::fuzz::{random_colored_combinatorial, FuzzLimits};
use hopfk::hopf::build_function_hopf;
use hopfk::invariant::{contract_invariant, ContractionConfig};
use hopfk::oracle::{count_lifts, LiftCountQuery};
use hopfk::{GroupHom, GroupTable, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = FuzzLimits { max_genus: 2, max_crossings: 6 };
    for phi in [GroupHom::sign(3)?, GroupHom::reduction(4, 2)?, GroupHom::to_trivial(GroupTable::cyclic(4)?)] {
        let h = build_function_hopf(&phi)?;
        for _ in 0..4 {
            let d = random_colored_combinatorial(&phi.target, limits, &mut rng);
            let k = contract_invariant(&h, &d, ContractionConfig::default())?.k;
            let q = LiftCountQuery { words: d.diagram.extract_words(), colors: d.colors.clone(), phi: phi.clone() };
            let lifts = count_lifts(&q)?;
            let words: Vec<String> = q.words.iter().map(ToString::to_string).collect();
            println!("{}: words {words:?}  K = {k}  lifts = {lifts}", h.name());
            assert_eq!(k, Scalar::from_int(lifts as i64));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
