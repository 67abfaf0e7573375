//! Sparse Laurent series with inverse-degree truncation.

use superschur::series::expand_inverse_product;
use superschur::{LaurentSeries, Side, Universe};

fn main() -> superschur::Result<()> {
    let u = Universe::new([("a", Side::Direct), ("b", Side::Inverse)])?;
    let a = LaurentSeries::var(&u, "a", 1)?;
    let b_inv = LaurentSeries::var(&u, "b", -1)?;
    let one = LaurentSeries::one(&u);

    let p = &(&one + &a) * &(&one - &b_inv);
    println!("(1 + a)(1 - b^-1) = {p}");

    // 1 / (1 - a b^-1) expanded below inverse degree 4.
    let mut mono = u.unit();
    mono[0] = 1;
    mono[1] = -1;
    let g = expand_inverse_product(&u, &[(1, mono)], 4)?;
    println!("1/(1 - a b^-1) mod b-degree 4 = {g}");
    println!("truncation order: {:?}", g.trunc());

    let check = (&g * &(&one - &(&a * &b_inv))).truncate(4);
    println!("times (1 - a b^-1): {check}");
    println!("as JSON: {}", g.to_json());
    Ok(())
}
