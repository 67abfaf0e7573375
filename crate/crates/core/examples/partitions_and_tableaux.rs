//! Partitions, Frobenius coordinates, tableaux and LR coefficients.

use superschur::tableaux::{count_ssyt, enumerate_ssyt, lr_coefficient, split_tableau};
use superschur::{GeneralizedPartition, Partition, SkewShape};

fn main() -> superschur::Result<()> {
    let lam: Partition = "4,2,1".parse()?;
    println!("λ = {lam}, |λ| = {}, λ' = {}", lam.weight(), lam.conjugate());
    println!("Frobenius coordinates: {:?}", lam.frobenius());
    println!("is a (1|2) hook: {}", lam.is_hook(1, 2));

    let shape: SkewShape = "3,1/1".parse()?;
    println!("\nSSYT of shape {shape} in 2 letters: {}", count_ssyt(&shape, 2));
    for t in enumerate_ssyt(&shape, 2) {
        println!("{t}\n");
    }

    let (mu, nu): (Partition, Partition) = ("2,1".parse()?, "2,1".parse()?);
    for l in Partition::all_of(6) {
        let c = lr_coefficient(&l, &mu, &nu);
        if c > 0 {
            println!("c^({l})_(({mu}),({nu})) = {c}");
        }
    }

    // A generalized partition and the splitting of a tableau on its shifted shape.
    let g: GeneralizedPartition = "1,0,-1".parse()?;
    let p = g.min_shift() as usize;
    let outer = g.shifted_partition(p as i64)?;
    println!(
        "\nλ = {g}: λ⁺ = {}, λ⁻ = {}, λ + ({p}^3) = {outer}",
        g.plus(),
        g.minus()
    );
    let t = enumerate_ssyt(&SkewShape::straight(outer), 2).remove(0);
    let (t1, t2) = split_tableau(&t, &g, p, 2)?;
    println!("split\n{t}\ninto\n{t1}\nand\n{t2}");
    Ok(())
}
