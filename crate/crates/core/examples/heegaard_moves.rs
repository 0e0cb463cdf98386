//! Random Heegaard moves, with K recomputed after each one.

use hopfk::fuzz::{random_walk, FuzzLimits, MoveKind};
use hopfk::heegaard::{lens_pq_diagram, surface_certificate, ColoredDiagram};
use hopfk::hopf::build_kac_paljutkin;
use hopfk::invariant::{contract_invariant, ContractionConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = build_kac_paljutkin();
    let pi = h.pi();
    let cfg = ContractionConfig::default();
    let d = ColoredDiagram::new(lens_pq_diagram(8, 3)?, vec![pi.index_of("1")?]);
    let base = contract_invariant(&h, &d, cfg)?.k;
    println!("L(8,3) colored 1: K = {base}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, next) in random_walk(&d, pi, 10, FuzzLimits::default(), &mut rng) {
        let k = contract_invariant(&h, &next, cfg)?.k;
        let cert = surface_certificate(&next.diagram);
        println!("{:<11} genus {} crossings {:>2} {:?}  K = {k}", format!("{:?}", MoveKind::of(&m)), next.genus(), next.diagram.crossings.len(), cert.status);
        assert_eq!(k, base);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
