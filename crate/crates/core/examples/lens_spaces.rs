//! K of lens spaces under every valid coloring.

use hopfk::heegaard::{enumerate_colorings, lens_pq_diagram, ColoredDiagram};
use hopfk::hopf::{build_function_hopf, build_kac_paljutkin};
use hopfk::invariant::{contract_invariant, ContractionConfig};
use hopfk::GroupHom;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ContractionConfig::default();
    for h in [build_kac_paljutkin(), build_function_hopf(&GroupHom::sign(3)?)?] {
        println!("{}", h.name());
        for (p, q) in [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (6, 1)] {
            let d = lens_pq_diagram(p, q)?;
            for colors in enumerate_colorings(&d, h.pi()) {
                let name = h.pi().name(colors[0]).to_string();
                let v = contract_invariant(&h, &ColoredDiagram::new(d.clone(), colors), cfg)?;
                println!("  L({p},{q}) colored {name}: Z = {}, K = {}", v.z, v.k);
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
