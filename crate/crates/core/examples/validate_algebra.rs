//! Checks the Hopf group-coalgebra axioms, the crossing, and the trace and
//! cotrace identities of the built-in algebras.

use hopfk::hopf::{build_function_hopf, build_kac_paljutkin, check_structural_lemmas, derive_integral_data, validate_crossing, validate_hopf, CrossingStatus, LemmaConfig};
use hopfk::GroupHom;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for h in [build_kac_paljutkin(), build_function_hopf(&GroupHom::sign(3)?)?] {
        let axioms = validate_hopf(&h);
        let data = derive_integral_data(&h);
        let lemmas = check_structural_lemmas(&h, &data, LemmaConfig::default());
        print!("{axioms}{lemmas}");
        match validate_crossing(&h) {
            CrossingStatus::NotProvided => println!("no crossing"),
            CrossingStatus::Checked(r) => print!("{r}"),
        }
        println!("dim H_1 = {}, ε(C) = {}", h.dim_one(), h.apply_counit(data.c()));
        assert!(axioms.passed() && lemmas.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
