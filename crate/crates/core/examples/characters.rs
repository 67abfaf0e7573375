//! Characters of gl(m|n) and of unitarizable gl(m+n) modules.

use superschur::repchar::{
    check_denominator_super, check_weyl_hook, check_weyl_unitary, irreducible_even, irreducible_super, is_typical,
    kac_character, SuperWeight,
};
use superschur::sab::CosetCutoff;
use superschur::Partition;

fn main() -> superschur::Result<()> {
    for lam in [Partition::empty(), "1".parse()?, "2,1".parse()?, "1,1".parse()?] {
        let w = SuperWeight::from_hook_partition(&lam, 1, 1)?;
        println!("λ = {lam}: weight {w}, typical: {}", is_typical(&w));
        println!("  ch L = {}", irreducible_super(&w)?);
        println!("  ch K = {}", kac_character(&w)?);
        println!("  {}", check_weyl_hook(&w, 5, CosetCutoff::Auto)?.to_text());
    }
    println!("{}", check_denominator_super(1, 1, 4)?.to_text());

    let zero = "0".parse()?;
    println!(
        "\nunitarizable character for λ = 0, m = n = 1:\n  {}",
        irreducible_even(&zero, 1, 1, 3)?
    );
    println!("  {}", check_weyl_unitary(&zero, 1, 1, 5, CosetCutoff::Auto)?.to_text());
    Ok(())
}
