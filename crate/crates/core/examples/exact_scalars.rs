//! Exact arithmetic in ℚ(i) and dense tensors over it.

use hopfk::tensor::{mat_mul, DenseTensor};
use hopfk::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x: Scalar = "1/2+3/4i".parse()?;
    let y = Scalar::i().pow(3);
    println!("x = {x}, i^3 = {y}, x*i^3 = {}", x.clone() * y.clone());
    println!("1/x = {}", x.inv()?);
    assert_eq!(x.clone() * x.inv()?, Scalar::one());

    // The 1/√2-free Hadamard-like matrix squares to 2·I.
    let h = DenseTensor::from_vec(&[2, 2], ["1", "1", "1", "-1"].iter().map(|s| s.parse().unwrap()).collect())?;
    let h2 = mat_mul(&h, &h)?;
    println!("H·H = {:?}", h2.data().iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(h2, DenseTensor::identity(2).scale(&Scalar::from_int(2)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
