//! Minimal coset representatives and the shifted action on generalized partitions.

use superschur::coxeter::{cosets_in_window, enumerate_cosets, lambda_pm, lambda_pm_in_window};
use superschur::GeneralizedPartition;

fn main() -> superschur::Result<()> {
    println!("cosets with length ≤ 3:");
    for w in enumerate_cosets(3) {
        println!("  {w}  length {} sign {:+}", w.length(), w.sign());
    }

    println!("\nin the window p=2, q=2 ({} elements):", cosets_in_window(2, 2).len());
    for w in cosets_in_window(2, 2) {
        println!("  {w}  ->  {}", w.realize(2, 2)?);
    }

    let lam: GeneralizedPartition = "2,-1".parse()?;
    println!("\n(λ^{{w,+}}, λ^{{w,-}}) for λ = {lam}:");
    for w in enumerate_cosets(3) {
        let (plus, minus) = lambda_pm(&w, &lam);
        let wide = lambda_pm_in_window(&w, &lam, 6, 6)?;
        assert_eq!((plus.clone(), minus.clone()), wide);
        println!("  {w}: ({plus}) ({minus})");
    }
    Ok(())
}
