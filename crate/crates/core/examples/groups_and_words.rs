//! Finite groups, words in generators, and homomorphisms.

use hopfk::{evaluate_word, GroupHom, GroupTable, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = GroupTable::symmetric(3)?;
    let (a, b) = (s3.index_of("(1 2)")?, s3.index_of("(1 2 3)")?);
    println!("S3 has {} elements, abelian: {}", s3.order(), s3.is_abelian());
    println!("(1 2)(1 2 3) = {}", s3.name(s3.mul(a, b)));
    println!("(1 2 3) conjugated by (1 2) = {}", s3.name(s3.conjugate(b, a)));

    // x0 x1 x0⁻¹ x1 evaluated at ((1 2), (1 2 3)).
    let w = Word::power(0, 1).concat(&Word::power(1, 1)).concat(&Word::power(0, -1)).concat(&Word::power(1, 1));
    let v = evaluate_word(&w, &[a, b], &s3)?;
    println!("x0 x1 x0^-1 x1 -> {}", s3.name(v));
    assert_eq!(v, s3.identity());

    let sign = GroupHom::sign(3)?;
    println!("kernel of sign: {:?}", sign.fiber(0).iter().map(|&g| s3.name(g)).collect::<Vec<_>>());
    assert_eq!(sign.fiber(1).len(), 3);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
