//! The two-alphabet functions computed three ways.

use superschur::sab::{jacobi_trudi, sab_via_definition, sab_via_lr, SabRequest};
use superschur::{GradedAlphabet, Side};

fn main() -> superschur::Result<()> {
    let req = SabRequest::new(
        "1,-1".parse()?,
        GradedAlphabet::parse("a1:0,a2:1", Side::Direct)?,
        GradedAlphabet::parse("b1:0", Side::Inverse)?,
        Some(3),
    )?;
    let lr = sab_via_lr(&req)?;
    let def = sab_via_definition(&req)?;
    let jt = jacobi_trudi(&req)?;
    println!("S_(1,-1) below b-degree 3:\n{lr}");
    println!("definition agrees: {}", lr == def);
    println!("Jacobi-Trudi agrees: {}", lr == jt);

    // All-odd alphabets give Laurent polynomials, so no truncation is needed.
    let exact = SabRequest::new(
        "1,-1".parse()?,
        GradedAlphabet::parse("a1:1", Side::Direct)?,
        GradedAlphabet::parse("b1:1", Side::Inverse)?,
        None,
    )?;
    println!("\nall odd, exact: {}", sab_via_lr(&exact)?);
    Ok(())
}
