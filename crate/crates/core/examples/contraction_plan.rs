//! The greedy contraction order, an alternate circle-by-circle evaluation,
//! and the entry cap.

use hopfk::heegaard::{connected_sum_colored, lens_diagram, ColoredDiagram};
use hopfk::hopf::build_kac_paljutkin;
use hopfk::invariant::{contract_by_circles, contract_in_order, contract_invariant, plan_contraction_order, ContractionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = build_kac_paljutkin();
    let one = h.pi().index_of("1")?;
    let a = ColoredDiagram::new(lens_diagram(3)?, vec![0]);
    let b = ColoredDiagram::new(lens_diagram(6)?, vec![one]);
    let d = connected_sum_colored(&a, &b);

    let order = plan_contraction_order(&d.diagram);
    println!("plan: {order:?}");
    let cfg = ContractionConfig::default();
    let planned = contract_in_order(&h, &d, &order, cfg)?;
    let naive = contract_in_order(&h, &d, &d.diagram.crossing_ids(), cfg)?;
    let circles = contract_by_circles(&h, &d, cfg)?;
    println!("K = {} (peak {} entries planned, {} in id order)", planned.k, planned.peak_entries, naive.peak_entries);
    assert_eq!(planned.k, naive.k);
    assert_eq!(planned.k, circles.k);

    let tight = ContractionConfig { entry_cap: 8 };
    match contract_invariant(&h, &d, tight) {
        Err(e) => println!("with a cap of 8 entries: {e}"),
        Ok(v) => println!("fits in 8 entries: K = {}", v.k),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
