//! Reading and writing algebras and diagrams as JSON.

use hopfk::heegaard::lens_pq_diagram;
use hopfk::hopf::build_kac_paljutkin;
use hopfk::invariant::{contract_invariant, ContractionConfig};
use hopfk::io::{algebra_from_json, algebra_to_json, diagram_from_json, diagram_to_json, invariant_record, resolve_colors};
use hopfk::heegaard::ColoredDiagram;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = build_kac_paljutkin();
    let text = serde_json::to_string(&algebra_to_json(&h))?;
    let back = algebra_from_json(&text)?;
    println!("algebra JSON: {} bytes, dims {:?}", text.len(), back.pi().elements().map(|a| back.dim(a)).collect::<Vec<_>>());

    let names = vec!["1".to_string()];
    let dtext = serde_json::to_string_pretty(&diagram_to_json(&lens_pq_diagram(6, 1)?, Some(&names)))?;
    let (d, colors) = diagram_from_json(&dtext)?;
    let colors = resolve_colors(&d, colors.as_deref(), back.pi())?;
    let cd = ColoredDiagram::new(d, colors);
    let v = contract_invariant(&back, &cd, ContractionConfig::default())?;
    println!("{}", invariant_record(&v, &cd, back.pi()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
