//! Classical, super, hook and rational Schur polynomials.

use superschur::schur::{
    hook_schur, rational_schur, schur, skew_schur, skew_schur_jacobi_trudi, super_schur, variables, Letters,
};
use superschur::{GeneralizedPartition, GradedAlphabet, Partition, Side, SkewShape, Universe};

fn main() -> superschur::Result<()> {
    let u = variables("x", 1..=3, Side::Direct);
    let x = Letters::all(&u);
    let lam: Partition = "2,1".parse()?;
    println!("s_{lam}(x1,x2,x3) = {}", schur(&lam, &x));

    let skew: SkewShape = "3,2/1".parse()?;
    let by_tableaux = skew_schur(&skew, &x);
    println!(
        "s_{skew} via tableaux equals Jacobi-Trudi: {}",
        by_tableaux == skew_schur_jacobi_trudi(&skew, &x)
    );

    let graded = GradedAlphabet::parse("a:0,b:0,c:1", Side::Direct)?;
    let gu = Universe::from_alphabets(&[&graded])?;
    println!(
        "super s_{lam}(a,b | c) = {}",
        super_schur(&SkewShape::straight(lam.clone()), &graded, &gu)?
    );

    println!("hook s_{lam}(x | y), m=n=1: {}", hook_schur(&lam, 1, 1));
    println!(
        "hook s_(2,2)(x | y), m=n=1: {} (not a (1|1) hook)",
        hook_schur(&"2,2".parse()?, 1, 1)
    );

    let v = variables("x", 1..=2, Side::Direct);
    let rat: GeneralizedPartition = "1,-1".parse()?;
    println!("rational s_{rat}(x1,x2) = {}", rational_schur(&rat, &Letters::all(&v))?);
    Ok(())
}
