#[path = "../examples/exact_scalars.rs"]
mod exact_scalars;
#[path = "../examples/groups_and_words.rs"]
mod groups_and_words;
#[path = "../examples/validate_algebra.rs"]
mod validate_algebra;
#[path = "../examples/lens_spaces.rs"]
mod lens_spaces;
#[path = "../examples/heegaard_moves.rs"]
mod heegaard_moves;
#[path = "../examples/lift_count_oracle.rs"]
mod lift_count_oracle;
#[path = "../examples/contraction_plan.rs"]
mod contraction_plan;
#[path = "../examples/json_files.rs"]
mod json_files;
#[path = "../examples/sums_and_mirrors.rs"]
mod sums_and_mirrors;

#[test]
fn exact_scalars_runs() {
    exact_scalars::run_example().unwrap();
}

#[test]
fn groups_and_words_runs() {
    groups_and_words::run_example().unwrap();
}

#[test]
fn validate_algebra_runs() {
    validate_algebra::run_example().unwrap();
}

#[test]
fn lens_spaces_runs() {
    lens_spaces::run_example().unwrap();
}

#[test]
fn heegaard_moves_runs() {
    heegaard_moves::run_example().unwrap();
}

#[test]
fn lift_count_oracle_runs() {
    lift_count_oracle::run_example().unwrap();
}

#[test]
fn contraction_plan_runs() {
    contraction_plan::run_example().unwrap();
}

#[test]
fn json_files_runs() {
    json_files::run_example().unwrap();
}

#[test]
fn sums_and_mirrors_runs() {
    sums_and_mirrors::run_example().unwrap();
}
