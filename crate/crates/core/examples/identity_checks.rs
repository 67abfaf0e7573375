//! Checking the Weyl-type, Cauchy, factorization and restricted Cauchy identities.

use superschur::sab::{
    check_cauchy, check_factorization, check_restricted_cauchy, check_weyl_type, CosetCutoff, SabRequest, ZeroWeights,
};
use superschur::{GradedAlphabet, Side};

fn main() -> superschur::Result<()> {
    let alpha = GradedAlphabet::parse("a1:0,a2:1", Side::Direct)?;
    let beta = GradedAlphabet::parse("b1:0,b2:1", Side::Inverse)?;
    let req = SabRequest::new("1,0,-1".parse()?, alpha.clone(), beta.clone(), Some(4))?;
    println!("{}", check_weyl_type(&req, CosetCutoff::Auto)?.to_text());

    let odd_a = GradedAlphabet::parse("a1:1,a2:1", Side::Direct)?;
    let odd_b = GradedAlphabet::parse("b1:1", Side::Inverse)?;
    let exact = SabRequest::new("1,-1".parse()?, odd_a, odd_b, None)?;
    println!("{}", check_weyl_type(&exact, CosetCutoff::Auto)?.to_text());

    println!("{}", check_cauchy(&alpha, &beta, 1, 2, 3)?.to_text());
    let b1 = GradedAlphabet::parse("b1:0,b2:1", Side::Inverse)?;
    println!("{}", check_factorization(&"1,0".parse()?, 2, &b1, 4)?.to_text());
    println!(
        "{}",
        check_restricted_cauchy(1, 2, 2, 4, ZeroWeights::ShiftedAction)?.to_text()
    );
    println!(
        "{}",
        check_restricted_cauchy(1, 2, 2, 4, ZeroWeights::ClosedFormLiteral)?.to_text()
    );
    Ok(())
}
