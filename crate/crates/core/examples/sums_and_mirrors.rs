//! K is multiplicative under connected sum, and the opposite and
//! coopposite algebras compute K of the mirror.

use hopfk::heegaard::{connected_sum_colored, lens_pq_diagram, mirror_diagram, ColoredDiagram};
use hopfk::hopf::{build_kac_paljutkin, coopposite, opposite};
use hopfk::invariant::{contract_invariant, ContractionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = build_kac_paljutkin();
    let pi = h.pi();
    let cfg = ContractionConfig::default();
    let a = ColoredDiagram::new(lens_pq_diagram(2, 1)?, vec![0]);
    let b = ColoredDiagram::new(lens_pq_diagram(8, 3)?, vec![pi.index_of("1")?]);
    let (ka, kb) = (contract_invariant(&h, &a, cfg)?.k, contract_invariant(&h, &b, cfg)?.k);
    let ks = contract_invariant(&h, &connected_sum_colored(&a, &b), cfg)?.k;
    println!("K(A) = {ka}, K(B) = {kb}, K(A#B) = {ks}");
    assert_eq!(ks, ka * kb);

    let m = contract_invariant(&h, &mirror_diagram(&b, pi), cfg)?.k;
    let op = contract_invariant(&opposite(&h)?, &b, cfg)?.k;
    let cop = contract_invariant(&coopposite(&h)?, &b, cfg)?.k;
    println!("K(mirror B) = {m}, K_op(B) = {op}, K_cop(B) = {cop}");
    assert!(m == op && m == cop);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
